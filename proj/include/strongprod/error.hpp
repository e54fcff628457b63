#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace strongprod {

enum class ErrorKind {
  // edge-list parsing
  MalformedHeader,
  ArityError,
  CountMismatch,
  NegativeValue,
  // digraph validation
  SelfLoop,
  DuplicateArc,
  VertexOutOfRange,
  EmptyGraph,
  // distances and products
  NotStronglyConnected,
  OrderTooSmall,
  SizeOverflow,
  Overflow,
  ArityMismatch,
  EmptyList,
  OutOfRange,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::NegativeValue: return "NegativeValue";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateArc: return "DuplicateArc";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorKind::OrderTooSmall: return "OrderTooSmall";
    case ErrorKind::SizeOverflow: return "SizeOverflow";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::OutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

/// Every failure raised by the library. `line()` is set for parse errors
/// (1-based line of the input), `factor()` for per-factor failures in
/// product metrics (0-based factor index).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> line = std::nullopt,
        std::optional<std::size_t> factor = std::nullopt)
      : std::runtime_error(what), kind_(kind), line_(line), factor_(factor) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> line() const noexcept { return line_; }
  std::optional<std::size_t> factor() const noexcept { return factor_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> factor_;
};

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(ErrorKind::Overflow, "64-bit overflow in distance sum");
  return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorKind::Overflow, "64-bit overflow in distance sum");
  return out;
}

}  // namespace detail
}  // namespace strongprod
