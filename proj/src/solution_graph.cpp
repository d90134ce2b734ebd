#include "ilsconn/solution_graph.hpp"

#include "ilsconn/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

namespace ilsconn {

namespace {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (y < x) std::swap(x, y);
    parent_[y] = x;
  }

private:
  std::vector<std::size_t> parent_;
};

struct MaskedPointHash {
  std::size_t operator()(const Point &p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p) h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ull;
    return h;
  }
};

void require_shapes(const CoeffMatrix &a, const RhsVector &b) {
  if (b.size() != a.rows())
    throw InputError("right-hand side has " + std::to_string(b.size()) +
                     " entries, matrix has " + std::to_string(a.rows()) +
                     " rows");
}

} // namespace

const char *to_string(Verdict v) {
  switch (v) {
  case Verdict::Connected: return "connected";
  case Verdict::Disconnected: return "disconnected";
  case Verdict::Empty: return "empty";
  }
  return "?";
}

std::size_t hamming_distance(std::span<const int> x, std::span<const int> y) {
  if (x.size() != y.size()) throw InputError("points differ in length");
  std::size_t dist = 0;
  for (std::size_t j = 0; j < x.size(); ++j) dist += x[j] != y[j];
  return dist;
}

std::uint64_t domain_size(std::size_t n, DomainBound d) {
  std::uint64_t total = 1;
  auto base = static_cast<std::uint64_t>(d.value()) + 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (total > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    total *= base;
  }
  return total;
}

bool is_feasible(const CoeffMatrix &a, const RhsVector &b, DomainBound d,
                 std::span<const int> x) {
  require_shapes(a, b);
  if (x.size() != a.cols())
    throw InputError("point has " + std::to_string(x.size()) +
                     " coordinates, matrix has " + std::to_string(a.cols()) +
                     " columns");
  for (int v : x)
    if (v < 0 || v > d.value())
      throw InputError("point coordinate outside {0.." +
                       std::to_string(d.value()) + "}");
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (row_dot(a, i, x) < b[i]) return false;
  return true;
}

RhsVector slack(const CoeffMatrix &a, const RhsVector &b,
                std::span<const int> x) {
  require_shapes(a, b);
  RhsVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = row_dot(a, i, x) - b[i];
  return out;
}

std::vector<Point> enumerate_feasible(const CoeffMatrix &a, const RhsVector &b,
                                      DomainBound d, std::uint64_t guard) {
  require_shapes(a, b);
  std::uint64_t total = domain_size(a.cols(), d);
  if (total > guard)
    throw CapabilityError("domain has " + std::to_string(total) +
                          " points, enumeration guard is " +
                          std::to_string(guard));
  std::vector<Point> feasible;
  Point x(a.cols(), 0);
  for (std::uint64_t step = 0; step < total; ++step) {
    bool ok = true;
    for (std::size_t i = 0; i < a.rows() && ok; ++i) ok = row_dot(a, i, x) >= b[i];
    if (ok) feasible.push_back(x);
    // Odometer with the last coordinate fastest yields lexicographic order.
    for (std::size_t j = x.size(); j-- > 0;) {
      if (++x[j] <= d.value()) break;
      x[j] = 0;
    }
  }
  return feasible;
}

ConnectivityReport components(std::vector<Point> points) {
  ConnectivityReport report;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  report.points = std::move(points);
  const auto &pts = report.points;
  const std::size_t count = pts.size();
  if (count == 0) return report;

  // Points at Hamming distance one agree everywhere except one coordinate,
  // so bucketing by the point with coordinate j masked finds every edge.
  DisjointSets sets(count);
  const std::size_t n = pts.front().size();
  for (std::size_t j = 0; j < n; ++j) {
    std::unordered_map<Point, std::size_t, MaskedPointHash> bucket;
    bucket.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      Point key = pts[k];
      key[j] = -1;
      auto [it, inserted] = bucket.emplace(std::move(key), k);
      if (!inserted) sets.unite(it->second, k);
    }
  }

  report.labels.resize(count);
  std::vector<std::size_t> label_of_root(count, count);
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t root = sets.find(k);
    if (label_of_root[root] == count) label_of_root[root] = report.component_count++;
    report.labels[k] = label_of_root[root];
  }
  if (report.component_count <= 1) {
    report.verdict = Verdict::Connected;
    return report;
  }
  report.verdict = Verdict::Disconnected;
  for (std::size_t k = 1; k < count; ++k)
    if (report.labels[k] != report.labels[0]) {
      report.certificate = std::pair{pts[0], pts[k]};
      break;
    }
  return report;
}

ConnectivityReport is_connected(const CoeffMatrix &a, const RhsVector &b,
                                DomainBound d, std::uint64_t guard) {
  return components(enumerate_feasible(a, b, d, guard));
}

} // namespace ilsconn
