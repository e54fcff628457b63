#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "strongprod/digraph.hpp"
#include "strongprod/error.hpp"

namespace strongprod {

/// Default cap on the vertex count of an explicitly built product.
inline constexpr std::size_t kDefaultProductVertexLimit = 20000;

/// A product vertex seen both as factor coordinates and as its flat index.
struct ProductLabel {
  std::vector<std::size_t> coords;
  std::size_t flat = 0;

  bool operator==(const ProductLabel&) const = default;
};

/// Row-major mixed-radix index; the leftmost factor is most significant.
inline std::size_t encode_label(std::span<const std::size_t> coords, std::span<const std::size_t> dims) {
  if (coords.size() != dims.size())
    throw Error(ErrorKind::ArityMismatch, "coordinate tuple and dimension tuple differ in length");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (coords[i] >= dims[i])
      throw Error(ErrorKind::OutOfRange, "coordinate " + std::to_string(coords[i]) +
                                             " out of range for dimension " + std::to_string(dims[i]));
    flat = flat * dims[i] + coords[i];
  }
  return flat;
}

inline std::vector<std::size_t> decode_label(std::size_t flat, std::span<const std::size_t> dims) {
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  if (dims.empty() || flat >= total)
    throw Error(ErrorKind::OutOfRange, "flat index " + std::to_string(flat) + " out of range");
  std::vector<std::size_t> coords(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    coords[i] = flat % dims[i];
    flat /= dims[i];
  }
  return coords;
}

inline ProductLabel make_label(std::size_t flat, std::span<const std::size_t> dims) {
  return {decode_label(flat, dims), flat};
}

namespace detail {

inline std::size_t checked_product_order(std::span<const std::size_t> orders, std::size_t limit) {
  std::size_t total = 1;
  for (auto v : orders) {
    if (__builtin_mul_overflow(total, v, &total) || total > limit)
      throw Error(ErrorKind::SizeOverflow,
                  "explicit product exceeds the vertex limit of " + std::to_string(limit));
  }
  return total;
}

}  // namespace detail

/// Strong product: x1x2 -> y1y2 iff one coordinate holds while the other
/// steps along an arc, or both step along arcs. Vertex x1x2 is numbered
/// x1 * v2 + x2.
inline Digraph strong_product(const Digraph& g1, const Digraph& g2,
                              std::size_t vertex_limit = kDefaultProductVertexLimit) {
  const std::size_t v1 = g1.order(), v2 = g2.order();
  const std::size_t orders[] = {v1, v2};
  const std::size_t n = detail::checked_product_order(orders, vertex_limit);

  // Closed neighbourhoods: a factor coordinate either stays or follows an arc.
  auto closed = [](const Digraph& g, std::size_t u) {
    auto out = g.out_neighbors(u);
    out.push_back(static_cast<Vertex>(u));
    return out;
  };

  std::vector<std::uint8_t> adj(n * n, 0);
  for (std::size_t x1 = 0; x1 < v1; ++x1) {
    const auto step1 = closed(g1, x1);
    for (std::size_t x2 = 0; x2 < v2; ++x2) {
      const auto step2 = closed(g2, x2);
      const std::size_t from = x1 * v2 + x2;
      for (auto y1 : step1)
        for (auto y2 : step2) {
          const std::size_t to = std::size_t{y1} * v2 + y2;
          if (to != from) adj[from * n + to] = 1;
        }
    }
  }
  return Digraph::from_matrix(n, std::move(adj));
}

/// Left fold of strong_product; numbering matches encode_label over the
/// factor orders.
inline Digraph strong_product_n(std::span<const Digraph> gs,
                                std::size_t vertex_limit = kDefaultProductVertexLimit) {
  if (gs.empty()) throw Error(ErrorKind::EmptyList, "strong product of an empty factor list");
  std::vector<std::size_t> orders;
  for (const auto& g : gs) orders.push_back(g.order());
  detail::checked_product_order(orders, vertex_limit);
  Digraph acc = gs.front();
  for (std::size_t i = 1; i < gs.size(); ++i) acc = strong_product(acc, gs[i], vertex_limit);
  return acc;
}

/// Comment lines recording factor orders and the numbering convention,
/// for write_edge_list.
inline std::vector<std::string> product_header_comments(std::span<const std::size_t> dims) {
  std::string line = "strong product of " + std::to_string(dims.size()) + " factors, orders";
  for (auto d : dims) line += ' ' + std::to_string(d);
  return {line, "vertex (x1, ..., xk) -> ((x1*v2 + x2)*v3 + ...) + xk, leftmost factor most significant"};
}

}  // namespace strongprod
