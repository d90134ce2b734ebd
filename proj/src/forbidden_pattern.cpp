#include "ilsconn/forbidden_pattern.hpp"

#include "ilsconn/errors.hpp"

#include <algorithm>
#include <string>

namespace ilsconn {

namespace {

void require_well_formed(const SignPattern &p, const ForbiddenPattern &fp) {
  if (fp.rows.size() != fp.cols.size())
    throw InputError("forbidden pattern row and column lists differ in length");
  if (fp.rows.size() < 2)
    throw InputError("forbidden pattern needs at least two rows");
  std::vector<bool> row_seen(p.rows(), false), col_seen(p.cols(), false);
  for (std::size_t i : fp.rows) {
    if (i >= p.rows()) throw InputError("pattern row index out of range");
    if (row_seen[i]) throw InputError("duplicate pattern row");
    row_seen[i] = true;
  }
  for (std::size_t j : fp.cols) {
    if (j >= p.cols()) throw InputError("pattern column index out of range");
    if (col_seen[j]) throw InputError("duplicate pattern column");
    col_seen[j] = true;
  }
}

// Column c links rows a and b within `chosen` if it has opposite signs at a
// and b and is zero on every other chosen row.
bool links(const SignPattern &p, std::size_t c, std::size_t a, std::size_t b,
           std::span<const std::size_t> chosen) {
  if (p.sign(a, c) * p.sign(b, c) >= 0) return false;
  for (std::size_t i : chosen)
    if (i != a && i != b && p.sign(i, c) != 0) return false;
  return true;
}

class MinimalPatternSearch {
public:
  explicit MinimalPatternSearch(const SignPattern &p) : p_(p) {}

  std::optional<ForbiddenPattern> run() {
    std::size_t limit = std::min(p_.rows(), p_.cols());
    if (limit >= 2 && (best_ = search_pairs())) return best_;
    for (std::size_t len = 3; len <= limit; ++len) {
      length_ = len;
      for (std::size_t first = 0; first + len <= p_.rows(); ++first) {
        path_.assign(1, first);
        extend();
      }
      if (best_) return best_;
    }
    return std::nullopt;
  }

private:
  // Size two: rows {a, b} with two distinct columns of opposite signs.
  std::optional<ForbiddenPattern> search_pairs() const {
    for (std::size_t a = 0; a < p_.rows(); ++a)
      for (std::size_t b = a + 1; b < p_.rows(); ++b) {
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < p_.cols() && cols.size() < 2; ++c)
          if (p_.sign(a, c) * p_.sign(b, c) < 0) cols.push_back(c);
        if (cols.size() == 2) return ForbiddenPattern{{a, b}, cols};
      }
    return std::nullopt;
  }

  // Smallest column linking path_[k] and path_[k+1] (cyclically) given the
  // rows chosen so far.
  std::optional<std::size_t> edge_column(std::size_t k) const {
    std::size_t a = path_[k];
    std::size_t b = path_[(k + 1) % path_.size()];
    for (std::size_t c = 0; c < p_.cols(); ++c)
      if (links(p_, c, a, b, path_)) return c;
    return std::nullopt;
  }

  void extend() {
    // Adding rows only makes linking harder, so every open edge must still
    // have a candidate.
    for (std::size_t k = 0; k + 1 < path_.size(); ++k)
      if (!edge_column(k)) return;
    if (path_.size() == length_) {
      record();
      return;
    }
    for (std::size_t r = path_.front() + 1; r < p_.rows(); ++r) {
      if (std::find(path_.begin(), path_.end(), r) != path_.end()) continue;
      path_.push_back(r);
      extend();
      path_.pop_back();
    }
  }

  void record() {
    ForbiddenPattern fp;
    fp.rows = path_;
    for (std::size_t k = 0; k < path_.size(); ++k) {
      auto c = edge_column(k);
      if (!c) return;
      fp.cols.push_back(*c);
    }
    // For size >= 3 the closing edge keeps columns distinct automatically,
    // since a linking column is nonzero on exactly its two rows.
    ForbiddenPattern reversed;
    reversed.rows.push_back(fp.rows.front());
    reversed.rows.insert(reversed.rows.end(), fp.rows.rbegin(), fp.rows.rend() - 1);
    reversed.cols.assign(fp.cols.rbegin(), fp.cols.rend());
    const auto &normal =
        std::tie(reversed.cols, reversed.rows) < std::tie(fp.cols, fp.rows)
            ? reversed
            : fp;
    if (!best_ || normal < *best_) best_ = normal;
  }

  const SignPattern &p_;
  std::size_t length_ = 0;
  std::vector<std::size_t> path_;
  std::optional<ForbiddenPattern> best_;
};

} // namespace

bool verify_pattern(const SignPattern &p, const ForbiddenPattern &fp) {
  require_well_formed(p, fp);
  std::size_t len = fp.size();
  for (std::size_t l = 0; l < len; ++l) {
    std::size_t a = fp.rows[l];
    std::size_t b = fp.rows[(l + 1) % len];
    if (!links(p, fp.cols[l], a, b, fp.rows)) return false;
  }
  return true;
}

std::optional<ForbiddenPattern> find_minimal_pattern(const SignPattern &p) {
  if (p.rows() > kPatternSearchMaxDim || p.cols() > kPatternSearchMaxDim)
    throw CapabilityError("forbidden pattern search limited to " +
                          std::to_string(kPatternSearchMaxDim) +
                          " rows and columns");
  return MinimalPatternSearch(p).run();
}

bool complement_is_clean(const SignPattern &p, const ForbiddenPattern &fp) {
  if (!verify_pattern(p, fp))
    throw InputError("not a forbidden pattern of this matrix");
  for (std::size_t c = 0; c < p.cols(); ++c) {
    if (std::find(fp.cols.begin(), fp.cols.end(), c) != fp.cols.end()) continue;
    bool positive = false, negative = false;
    for (std::size_t i : fp.rows) {
      positive |= p.sign(i, c) > 0;
      negative |= p.sign(i, c) < 0;
    }
    if (positive && negative) return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>>
opposite_row_pair(const SignPattern &p) {
  if (p.cols() != 2)
    throw InputError("opposite_row_pair requires exactly two columns, got " +
                     std::to_string(p.cols()));
  for (std::size_t a = 0; a < p.rows(); ++a)
    for (std::size_t b = a + 1; b < p.rows(); ++b)
      if (p.sign(a, 0) * p.sign(b, 0) < 0 && p.sign(a, 1) * p.sign(b, 1) < 0)
        return std::pair{a, b};
  return std::nullopt;
}

} // namespace ilsconn
