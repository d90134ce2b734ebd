#pragma once

#include "ilsconn/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ilsconn {

inline constexpr std::uint64_t kDefaultEnumerationGuard = 10'000'000;

enum class Verdict { Connected, Disconnected, Empty };

/// Components of the Hamming-1 graph on a feasible set.
///
/// Labels number components by their first point in lexicographic order.
/// An empty set has no components and counts as connected.
struct ConnectivityReport {
  std::vector<Point> points; // lexicographic
  std::vector<std::size_t> labels;
  std::size_t component_count = 0;
  Verdict verdict = Verdict::Empty;
  /// When disconnected: the lexicographically smallest pair of points lying
  /// in different components.
  std::optional<std::pair<Point, Point>> certificate;

  std::size_t feasible_count() const noexcept { return points.size(); }
  bool connected() const noexcept { return verdict != Verdict::Disconnected; }
};

const char *to_string(Verdict v);

std::size_t hamming_distance(std::span<const int> x, std::span<const int> y);

/// (d + 1)^n, saturating at UINT64_MAX.
std::uint64_t domain_size(std::size_t n, DomainBound d);

bool is_feasible(const CoeffMatrix &a, const RhsVector &b, DomainBound d,
                 std::span<const int> x);

/// A x - b, one entry per row.
RhsVector slack(const CoeffMatrix &a, const RhsVector &b,
                std::span<const int> x);

/// Every point of {0..d}^n satisfying A x >= b, in lexicographic order.
/// Throws CapabilityError when (d + 1)^n exceeds the guard.
std::vector<Point> enumerate_feasible(const CoeffMatrix &a, const RhsVector &b,
                                      DomainBound d,
                                      std::uint64_t guard = kDefaultEnumerationGuard);

/// Partition of `points` into connected components. The points are sorted
/// and deduplicated first.
ConnectivityReport components(std::vector<Point> points);

ConnectivityReport is_connected(const CoeffMatrix &a, const RhsVector &b,
                                DomainBound d,
                                std::uint64_t guard = kDefaultEnumerationGuard);

} // namespace ilsconn
