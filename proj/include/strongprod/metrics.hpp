#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "strongprod/apsp.hpp"
#include "strongprod/digraph.hpp"
#include "strongprod/error.hpp"
#include "strongprod/product.hpp"
#include "strongprod/rational.hpp"

namespace strongprod {

enum class Method { Naive, Counting, Oracle };

constexpr std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Naive: return "naive";
    case Method::Counting: return "counting";
    case Method::Oracle: return "oracle";
  }
  return "unknown";
}

inline std::optional<Method> parse_method(std::string_view s) {
  if (s == "naive") return Method::Naive;
  if (s == "counting") return Method::Counting;
  if (s == "oracle") return Method::Oracle;
  return std::nullopt;
}

/// Distance sum, average distance and diameter of a strong product.
struct MetricsReport {
  std::vector<std::size_t> factor_orders;
  std::uint64_t product_order = 0;
  std::uint64_t sigma = 0;
  ExactRational mu;
  std::string mu_decimal;
  std::uint32_t diameter = 0;
  Method method = Method::Counting;

  bool operator==(const MetricsReport&) const = default;
};

namespace detail {

inline std::uint32_t finite_entry(const DistanceMatrix& d, std::size_t i, std::size_t j,
                                  std::optional<std::size_t> factor = std::nullopt) {
  if (i >= d.order() || j >= d.order())
    throw Error(ErrorKind::OutOfRange, "vertex index out of range for factor", std::nullopt, factor);
  const auto& e = d(i, j);
  if (!e)
    throw Error(ErrorKind::NotStronglyConnected,
                factor ? "factor " + std::to_string(*factor) + " is not strongly connected"
                       : std::string("factor is not strongly connected"),
                std::nullopt, factor);
  return *e;
}

// All v^2 entries as plain integers; throws if any is Unreachable.
inline std::vector<std::uint32_t> flatten_finite(const DistanceMatrix& d, std::size_t factor) {
  std::vector<std::uint32_t> out;
  out.reserve(d.entries().size());
  for (const auto& e : d.entries()) {
    if (!e)
      throw Error(ErrorKind::NotStronglyConnected,
                  "factor " + std::to_string(factor) + " is not strongly connected", std::nullopt,
                  factor);
    out.push_back(*e);
  }
  return out;
}

// counts[t] = number of ordered vertex pairs at distance t (diagonal included).
inline std::vector<std::uint64_t> distance_histogram(const DistanceMatrix& d, std::size_t factor) {
  std::vector<std::uint64_t> counts;
  for (auto e : flatten_finite(d, factor)) {
    if (e >= counts.size()) counts.resize(e + 1, 0);
    ++counts[e];
  }
  return counts;
}

// Histogram of max(a, b) over a from `a`, b from `b`:
// count(t) = a(t) * B(<= t) + A(< t) * b(t).
inline std::vector<std::uint64_t> merge_max_histograms(const std::vector<std::uint64_t>& a,
                                                       const std::vector<std::uint64_t>& b) {
  const std::size_t len = std::max(a.size(), b.size());
  std::vector<std::uint64_t> out(len, 0);
  std::uint64_t a_below = 0, b_upto = 0;
  for (std::size_t t = 0; t < len; ++t) {
    const std::uint64_t at = t < a.size() ? a[t] : 0;
    const std::uint64_t bt = t < b.size() ? b[t] : 0;
    b_upto = checked_add(b_upto, bt);
    out[t] = checked_add(checked_mul(at, b_upto), checked_mul(a_below, bt));
    a_below = checked_add(a_below, at);
  }
  return out;
}

inline std::uint64_t product_order_of(std::span<const std::size_t> orders) {
  std::uint64_t total = 1;
  for (auto v : orders) total = checked_mul(total, v);
  return total;
}

}  // namespace detail

/// Distance between x1x2 and y1y2 in the strong product, from the factor
/// distance matrices: the larger of the two factor distances.
inline std::uint32_t product_distance(const DistanceMatrix& d1, const DistanceMatrix& d2,
                                      std::size_t x1, std::size_t y1, std::size_t x2,
                                      std::size_t y2) {
  return std::max(detail::finite_entry(d1, x1, y1, 0), detail::finite_entry(d2, x2, y2, 1));
}

/// k-factor generalisation: the largest factor distance.
inline std::uint32_t product_distance_n(std::span<const DistanceMatrix> ds,
                                        std::span<const std::size_t> xs,
                                        std::span<const std::size_t> ys) {
  if (xs.size() != ds.size() || ys.size() != ds.size())
    throw Error(ErrorKind::ArityMismatch, "coordinate tuples must have one entry per factor");
  std::uint32_t best = 0;
  for (std::size_t i = 0; i < ds.size(); ++i)
    best = std::max(best, detail::finite_entry(ds[i], xs[i], ys[i], i));
  return best;
}

/// The literal quadruple loop: for every (x, y) of factor 1 and (m, n) of
/// factor 2, add max(D1[x,y], D2[m,n]). Diagonal pairs contribute zero.
inline std::uint64_t sigma_naive(const DistanceMatrix& d1, const DistanceMatrix& d2) {
  const auto f1 = detail::flatten_finite(d1, 0);
  const auto f2 = detail::flatten_finite(d2, 1);
  const std::size_t v1 = d1.order(), v2 = d2.order();
  std::uint64_t sigma = 0;
  for (std::size_t x = 0; x < v1; ++x)
    for (std::size_t y = 0; y < v1; ++y) {
      const std::uint32_t a = f1[x * v1 + y];
      std::uint64_t block = 0;
      for (std::size_t m = 0; m < v2; ++m)
        for (std::size_t n = 0; n < v2; ++n) {
          const std::uint32_t b = f2[m * v2 + n];
          // Entries are below kMaxOrder, so a block of v2^2 terms stays under 2^48.
          block += (a > b) ? a : b;
        }
      sigma = detail::checked_add(sigma, block);
    }
  return sigma;
}

/// Same sum from the sorted entry multisets: each distinct value a of
/// factor 1 (count c_a) contributes c_a * (a * #{b <= a} + sum{b > a}).
inline std::uint64_t sigma_counting(const DistanceMatrix& d1, const DistanceMatrix& d2) {
  auto s1 = detail::flatten_finite(d1, 0);
  auto s2 = detail::flatten_finite(d2, 1);
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());

  // suffix[i] = sum of s2[i..]
  std::vector<std::uint64_t> suffix(s2.size() + 1, 0);
  for (std::size_t i = s2.size(); i-- > 0;) suffix[i] = detail::checked_add(suffix[i + 1], s2[i]);

  std::uint64_t sigma = 0;
  for (std::size_t i = 0; i < s1.size();) {
    const std::uint32_t a = s1[i];
    std::size_t j = i;
    while (j < s1.size() && s1[j] == a) ++j;
    const std::uint64_t count_a = j - i;
    const std::size_t le = static_cast<std::size_t>(std::upper_bound(s2.begin(), s2.end(), a) - s2.begin());
    const std::uint64_t per_a = detail::checked_add(detail::checked_mul(a, le), suffix[le]);
    sigma = detail::checked_add(sigma, detail::checked_mul(count_a, per_a));
    i = j;
  }
  return sigma;
}

/// k-factor naive sum: every combination of one ordered pair per factor,
/// contributing the largest of the factor distances.
inline std::uint64_t sigma_naive_n(std::span<const DistanceMatrix> ds) {
  if (ds.empty()) throw Error(ErrorKind::EmptyList, "distance sum of an empty factor list");
  std::vector<std::vector<std::uint32_t>> flat;
  for (std::size_t i = 0; i < ds.size(); ++i) flat.push_back(detail::flatten_finite(ds[i], i));

  std::vector<std::size_t> idx(ds.size(), 0);
  std::uint64_t sigma = 0;
  for (;;) {
    std::uint32_t best = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) best = std::max(best, flat[i][idx[i]]);
    sigma = detail::checked_add(sigma, best);
    std::size_t i = ds.size();
    while (i > 0) {
      --i;
      if (++idx[i] < flat[i].size()) break;
      idx[i] = 0;
      if (i == 0) return sigma;
    }
  }
}

/// k-factor counting sum: fold the factor distance histograms into the
/// histogram of the product distance, then weight by distance.
inline std::uint64_t sigma_counting_n(std::span<const DistanceMatrix> ds) {
  if (ds.empty()) throw Error(ErrorKind::EmptyList, "distance sum of an empty factor list");
  auto hist = detail::distance_histogram(ds[0], 0);
  for (std::size_t i = 1; i < ds.size(); ++i)
    hist = detail::merge_max_histograms(hist, detail::distance_histogram(ds[i], i));
  std::uint64_t sigma = 0;
  for (std::size_t t = 0; t < hist.size(); ++t)
    sigma = detail::checked_add(sigma, detail::checked_mul(t, hist[t]));
  return sigma;
}

namespace detail {

inline void require_strong(std::span<const Digraph> gs) {
  for (std::size_t i = 0; i < gs.size(); ++i)
    if (!is_strongly_connected(gs[i]))
      throw Error(ErrorKind::NotStronglyConnected,
                  "factor " + std::to_string(i) + " is not strongly connected", std::nullopt, i);
}

inline MetricsReport finish_report(std::vector<std::size_t> orders, std::uint64_t product_order,
                                   std::uint64_t sigma, std::uint32_t diam, Method method) {
  MetricsReport r;
  r.factor_orders = std::move(orders);
  r.product_order = product_order;
  r.sigma = sigma;
  r.mu = ExactRational(sigma, checked_mul(product_order, product_order - 1));
  r.mu_decimal = to_decimal(r.mu, 12);
  r.diameter = diam;
  r.method = method;
  return r;
}

inline std::vector<std::size_t> orders_of(std::span<const Digraph> gs) {
  std::vector<std::size_t> out;
  for (const auto& g : gs) out.push_back(g.order());
  return out;
}

}  // namespace detail

/// Reference path: build the explicit product, run Floyd-Warshall on it and
/// sum the entries. Limited to `vertex_limit` product vertices.
inline MetricsReport average_distance_oracle_n(std::span<const Digraph> gs,
                                               std::size_t vertex_limit = kDefaultProductVertexLimit) {
  if (gs.empty()) throw Error(ErrorKind::EmptyList, "average distance of an empty factor list");
  detail::require_strong(gs);
  auto orders = detail::orders_of(gs);
  const auto product_order = detail::product_order_of(orders);
  if (product_order < 2) throw Error(ErrorKind::OrderTooSmall, "product must have at least 2 vertices");
  const auto product = strong_product_n(gs, vertex_limit);
  const auto d = floyd_warshall(product);
  return detail::finish_report(std::move(orders), product_order, distance_sum(d), diameter(d),
                               Method::Oracle);
}

inline MetricsReport average_distance_oracle(const Digraph& g1, const Digraph& g2,
                                             std::size_t vertex_limit = kDefaultProductVertexLimit) {
  const Digraph gs[] = {g1, g2};
  return average_distance_oracle_n(gs, vertex_limit);
}

/// Average distance of the strong product of `gs` from the factor distance
/// matrices alone (except Method::Oracle, which builds the product).
inline MetricsReport average_distance_product_n(std::span<const Digraph> gs, Method method,
                                                std::size_t vertex_limit = kDefaultProductVertexLimit) {
  if (method == Method::Oracle) return average_distance_oracle_n(gs, vertex_limit);
  if (gs.empty()) throw Error(ErrorKind::EmptyList, "average distance of an empty factor list");
  detail::require_strong(gs);
  auto orders = detail::orders_of(gs);
  const auto product_order = detail::product_order_of(orders);
  if (product_order < 2) throw Error(ErrorKind::OrderTooSmall, "product must have at least 2 vertices");

  std::vector<DistanceMatrix> ds;
  ds.reserve(gs.size());
  for (const auto& g : gs) ds.push_back(floyd_warshall(g));

  std::uint64_t sigma = 0;
  if (ds.size() == 2)
    sigma = method == Method::Naive ? sigma_naive(ds[0], ds[1]) : sigma_counting(ds[0], ds[1]);
  else
    sigma = method == Method::Naive ? sigma_naive_n(ds) : sigma_counting_n(ds);

  std::uint32_t diam = 0;
  for (const auto& d : ds) diam = std::max(diam, diameter(d));
  return detail::finish_report(std::move(orders), product_order, sigma, diam, method);
}

inline MetricsReport average_distance_product(const Digraph& g1, const Digraph& g2, Method method,
                                              std::size_t vertex_limit = kDefaultProductVertexLimit) {
  const Digraph gs[] = {g1, g2};
  return average_distance_product_n(gs, method, vertex_limit);
}

}  // namespace strongprod
