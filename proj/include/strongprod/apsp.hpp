#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "strongprod/digraph.hpp"
#include "strongprod/error.hpp"
#include "strongprod/rational.hpp"

namespace strongprod {

/// Shortest-path length in arcs. An empty optional means Unreachable.
using Distance = std::optional<std::uint32_t>;
inline constexpr Distance kUnreachable = std::nullopt;

/// n x n table of shortest-path lengths, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<Distance> entries) : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n_ * n_)
      throw Error(ErrorKind::OutOfRange, "distance storage does not match n x n");
  }

  std::size_t order() const noexcept { return n_; }

  const Distance& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  std::span<const Distance> row(std::size_t i) const {
    return std::span<const Distance>(entries_).subspan(i * n_, n_);
  }

  std::span<const Distance> entries() const noexcept { return entries_; }

  /// True iff no off-diagonal entry is Unreachable.
  bool all_finite() const noexcept {
    for (const auto& e : entries_)
      if (!e) return false;
    return true;
  }

  bool operator==(const DistanceMatrix&) const = default;

 private:
  friend DistanceMatrix floyd_warshall(const Digraph&);
  std::size_t n_ = 0;
  std::vector<Distance> entries_;
};

/// Floyd-Warshall over unit arcs. Starts from the adjacency matrix with
/// off-diagonal zeros replaced by Unreachable, then relaxes through each
/// intermediate vertex k (outermost), row m, column n.
inline DistanceMatrix floyd_warshall(const Digraph& g) {
  const std::size_t n = g.order();
  const auto a = adjacency_matrix(g);
  std::vector<Distance> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        d[i * n + j] = 0;
      else
        d[i * n + j] = a(i, j) ? Distance{1} : kUnreachable;
    }

  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m) {
      const Distance& mk = d[m * n + k];
      if (!mk) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const Distance& kc = d[k * n + c];
        if (!kc) continue;
        Distance& mc = d[m * n + c];
        const std::uint32_t via = *mk + *kc;
        if (!mc || *mc > via) mc = via;
      }
    }

  DistanceMatrix out;
  out.n_ = n;
  out.entries_ = std::move(d);
  return out;
}

/// Breadth-first distances from `source`.
inline std::vector<Distance> bfs_distances(const Digraph& g, std::size_t source) {
  const std::size_t n = g.order();
  if (source >= n) throw Error(ErrorKind::OutOfRange, "source vertex out of range");
  std::vector<Distance> dist(n, kUnreachable);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v)
      if (!dist[v] && g.has_arc(u, v)) {
        dist[v] = *dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

/// Largest distance over ordered pairs; 0 for a single vertex.
inline std::uint32_t diameter(const DistanceMatrix& d) {
  std::uint32_t best = 0;
  for (const auto& e : d.entries()) {
    if (!e) throw Error(ErrorKind::NotStronglyConnected, "digraph is not strongly connected");
    best = std::max(best, *e);
  }
  return best;
}

/// Sum of all entries (diagonal zeros included), with overflow checks.
inline std::uint64_t distance_sum(const DistanceMatrix& d) {
  std::uint64_t sum = 0;
  for (const auto& e : d.entries()) {
    if (!e) throw Error(ErrorKind::NotStronglyConnected, "digraph is not strongly connected");
    sum = detail::checked_add(sum, *e);
  }
  return sum;
}

/// Mean distance over ordered pairs of distinct vertices, exact.
inline ExactRational average_distance(const DistanceMatrix& d) {
  const std::uint64_t n = d.order();
  if (n < 2) throw Error(ErrorKind::OrderTooSmall, "average distance needs at least 2 vertices");
  const auto sum = distance_sum(d);
  return ExactRational(sum, detail::checked_mul(n, n - 1));
}

}  // namespace strongprod
