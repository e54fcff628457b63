#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strongprod/error.hpp"

namespace strongprod {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

/// Largest vertex count a Digraph may hold. Storage is a dense n x n byte
/// matrix.
inline constexpr std::size_t kMaxOrder = std::size_t{1} << 16;

/// (0,1) matrix with zero diagonal, row-major.
struct AdjacencyMatrix {
  std::size_t n = 0;
  std::vector<std::uint8_t> entries;

  std::uint8_t operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  bool operator==(const AdjacencyMatrix&) const = default;
};

/// Finite simple digraph on vertices 0..n-1. Immutable once built.
class Digraph {
 public:
  /// Validates and builds. Throws EmptyGraph, SelfLoop, DuplicateArc,
  /// VertexOutOfRange or SizeOverflow.
  static Digraph from_arcs(std::size_t n, const std::vector<Arc>& arcs) {
    check_order(n);
    std::vector<std::uint8_t> adj(n * n, 0);
    for (const auto& [u, v] : arcs) {
      if (u >= n || v >= n)
        throw Error(ErrorKind::VertexOutOfRange,
                    "arc (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") has an endpoint outside [0, " + std::to_string(n) + ")");
      if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
      auto& cell = adj[std::size_t{u} * n + v];
      if (cell)
        throw Error(ErrorKind::DuplicateArc,
                    "duplicate arc (" + std::to_string(u) + ", " + std::to_string(v) + ")");
      cell = 1;
    }
    return Digraph(n, std::move(adj), arcs.size());
  }

  /// Takes ownership of a row-major 0/1 matrix. Nonzero entries are arcs;
  /// a nonzero diagonal entry is a SelfLoop.
  static Digraph from_matrix(std::size_t n, std::vector<std::uint8_t> adj) {
    check_order(n);
    if (adj.size() != n * n)
      throw Error(ErrorKind::OutOfRange, "adjacency storage does not match n x n");
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (adj[i * n + i]) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(i));
      for (std::size_t j = 0; j < n; ++j) {
        auto& cell = adj[i * n + j];
        cell = cell ? 1 : 0;
        m += cell;
      }
    }
    return Digraph(n, std::move(adj), m);
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return m_; }

  bool has_arc(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }

  std::vector<Vertex> out_neighbors(std::size_t u) const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < n_; ++v)
      if (has_arc(u, v)) out.push_back(static_cast<Vertex>(v));
    return out;
  }

  /// Arcs in lexicographic (u, v) order.
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(m_);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = 0; v < n_; ++v)
        if (has_arc(u, v)) out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return out;
  }

  std::size_t out_degree(std::size_t u) const {
    std::size_t d = 0;
    for (std::size_t v = 0; v < n_; ++v) d += adj_[u * n_ + v];
    return d;
  }

  std::size_t in_degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t u = 0; u < n_; ++u) d += adj_[u * n_ + v];
    return d;
  }

  /// Same vertex set with every arc reversed.
  Digraph reversed() const {
    std::vector<std::uint8_t> adj(n_ * n_, 0);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = 0; v < n_; ++v) adj[v * n_ + u] = adj_[u * n_ + v];
    return Digraph(n_, std::move(adj), m_);
  }

  const std::vector<std::uint8_t>& raw() const noexcept { return adj_; }

  bool operator==(const Digraph& other) const = default;

 private:
  Digraph(std::size_t n, std::vector<std::uint8_t> adj, std::size_t m)
      : n_(n), m_(m), adj_(std::move(adj)) {}

  static void check_order(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::EmptyGraph, "digraph must have at least one vertex");
    if (n > kMaxOrder)
      throw Error(ErrorKind::SizeOverflow,
                  "vertex count " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }

  std::size_t n_;
  std::size_t m_;
  std::vector<std::uint8_t> adj_;
};

inline AdjacencyMatrix adjacency_matrix(const Digraph& g) { return {g.order(), g.raw()}; }

/// Header and arc list exactly as read; not yet validated as a digraph.
struct EdgeListDocument {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> arcs;
  /// 1-based source line of each arc, parallel to `arcs`.
  std::vector<std::size_t> arc_lines;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\v\f";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

enum class TokenStatus { Ok, Negative, Invalid };

// Splits a data line into unsigned decimal tokens.
inline TokenStatus parse_tokens(std::string_view line, std::vector<std::uint64_t>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    std::string_view tok = line.substr(i, j - i);
    if (tok.front() == '-' && tok.size() > 1 &&
        tok.find_first_not_of("0123456789", 1) == std::string_view::npos)
      return TokenStatus::Negative;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return TokenStatus::Invalid;
    out.push_back(value);
    i = j;
  }
  return TokenStatus::Ok;
}

}  // namespace detail

/// Reads the edge-list format: `#` comment lines and blank lines are
/// skipped, the first data line is `n m`, then exactly m lines `u v`.
inline EdgeListDocument parse_edge_list(std::istream& in) {
  EdgeListDocument doc;
  bool have_header = false;
  std::string raw;
  std::size_t lineno = 0;
  std::vector<std::uint64_t> tokens;
  while (std::getline(in, raw)) {
    ++lineno;
    auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto status = detail::parse_tokens(line, tokens);
    auto at = " at line " + std::to_string(lineno);
    if (status == detail::TokenStatus::Negative)
      throw Error(ErrorKind::NegativeValue, "negative value" + at, lineno);
    if (!have_header) {
      if (status != detail::TokenStatus::Ok || tokens.size() != 2)
        throw Error(ErrorKind::MalformedHeader, "expected header `n m`" + at, lineno);
      doc.n = tokens[0];
      doc.m = tokens[1];
      have_header = true;
      continue;
    }
    if (status != detail::TokenStatus::Ok || tokens.size() != 2)
      throw Error(ErrorKind::ArityError, "expected arc `u v`" + at, lineno);
    if (doc.arcs.size() == doc.m)
      throw Error(ErrorKind::CountMismatch,
                  "more than the declared " + std::to_string(doc.m) + " arcs" + at, lineno);
    doc.arcs.emplace_back(tokens[0], tokens[1]);
    doc.arc_lines.push_back(lineno);
  }
  if (!have_header) throw Error(ErrorKind::MalformedHeader, "missing header `n m`", lineno);
  if (doc.arcs.size() != doc.m)
    throw Error(ErrorKind::CountMismatch,
                "declared " + std::to_string(doc.m) + " arcs but found " +
                    std::to_string(doc.arcs.size()),
                lineno);
  return doc;
}

inline EdgeListDocument parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

/// Validates a parsed document into a Digraph. Errors carry the source
/// line of the offending arc.
inline Digraph build_digraph(const EdgeListDocument& doc) {
  if (doc.n == 0) throw Error(ErrorKind::EmptyGraph, "digraph must have at least one vertex");
  if (doc.n > kMaxOrder)
    throw Error(ErrorKind::SizeOverflow,
                "vertex count " + std::to_string(doc.n) + " exceeds " + std::to_string(kMaxOrder));
  std::vector<Arc> arcs;
  arcs.reserve(doc.arcs.size());
  for (std::size_t i = 0; i < doc.arcs.size(); ++i) {
    auto [u, v] = doc.arcs[i];
    if (u >= doc.n || v >= doc.n) {
      auto line = i < doc.arc_lines.size() ? std::optional{doc.arc_lines[i]} : std::nullopt;
      throw Error(ErrorKind::VertexOutOfRange,
                  "arc (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") has an endpoint outside [0, " + std::to_string(doc.n) + ")" +
                      (line ? " at line " + std::to_string(*line) : std::string{}),
                  line);
    }
    arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return Digraph::from_arcs(static_cast<std::size_t>(doc.n), arcs);
  } catch (const Error& e) {
    // Recover the offending line for SelfLoop / DuplicateArc.
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(doc.n * doc.n), 0);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      auto [u, v] = arcs[i];
      auto& cell = seen[std::size_t{u} * doc.n + v];
      if (u == v || cell) {
        auto line = i < doc.arc_lines.size() ? std::optional{doc.arc_lines[i]} : std::nullopt;
        throw Error(e.kind(),
                    std::string(e.what()) +
                        (line ? " at line " + std::to_string(*line) : std::string{}),
                    line);
      }
      cell = 1;
    }
    throw;
  }
}

/// Writes the edge-list format: comment lines, `n m`, then arcs in
/// lexicographic order, newline-terminated.
inline std::string write_edge_list(const Digraph& g, const std::vector<std::string>& comments = {}) {
  std::string out;
  for (const auto& c : comments) {
    out += "# ";
    out += c;
    out += '\n';
  }
  out += std::to_string(g.order()) + ' ' + std::to_string(g.arc_count()) + '\n';
  for (const auto& [u, v] : g.arcs()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::vector<std::uint8_t> reachable_from_zero(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v)
      if (!seen[v] && g.has_arc(u, v)) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  return seen;
}

}  // namespace detail

/// True iff every vertex reaches vertex 0 and vertex 0 reaches every vertex.
inline bool is_strongly_connected(const Digraph& g) {
  auto all = [](const std::vector<std::uint8_t>& s) {
    for (auto b : s)
      if (!b) return false;
    return true;
  };
  return all(detail::reachable_from_zero(g)) && all(detail::reachable_from_zero(g.reversed()));
}

/// Convenience constructors for fixtures and tests.
namespace graphs {

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0. For n = 1 a single vertex.
inline Digraph cycle(std::size_t n) {
  std::vector<Arc> arcs;
  if (n >= 2)
    for (std::size_t i = 0; i < n; ++i)
      arcs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Digraph::from_arcs(n, arcs);
}

/// Directed path 0 -> 1 -> ... -> n-1.
inline Digraph path(std::size_t n) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i + 1 < n; ++i)
    arcs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Digraph::from_arcs(n, arcs);
}

inline Digraph complete(std::size_t n) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) arcs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Digraph::from_arcs(n, arcs);
}

}  // namespace graphs
}  // namespace strongprod
