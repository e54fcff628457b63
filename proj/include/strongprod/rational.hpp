#pragma once

#include <cstdint>
#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace strongprod {

/// Non-negative fraction kept in lowest terms with a positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    if (den == 0) throw std::invalid_argument("ExactRational: zero denominator");
    auto g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  bool operator==(const ExactRational&) const = default;

  friend bool operator<(const ExactRational& a, const ExactRational& b) {
    return static_cast<unsigned __int128>(a.num_) * b.den_ <
           static_cast<unsigned __int128>(b.num_) * a.den_;
  }
  friend bool operator>(const ExactRational& a, const ExactRational& b) { return b < a; }
  friend bool operator<=(const ExactRational& a, const ExactRational& b) { return !(b < a); }
  friend bool operator>=(const ExactRational& a, const ExactRational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) {
    return os << r.num_ << '/' << r.den_;
  }

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

/// Fixed-point decimal rendering with `digits` significant digits, rounded
/// half-to-even. No exponent: 13/8 -> "1.62500000000" at 12 digits. Integer
/// parts longer than `digits` keep their magnitude with trailing zeros.
inline std::string to_decimal(const ExactRational& r, int digits = 12) {
  using u128 = unsigned __int128;
  if (digits < 1) throw std::invalid_argument("to_decimal: digits must be positive");

  std::uint64_t q = r.num() / r.den();
  u128 rem = r.num() % r.den();
  const u128 den = r.den();

  std::string int_digits = std::to_string(q);
  const bool zero_int = (q == 0);

  // Collect the kept digits as int part followed by fractional part,
  // then one guard digit and a sticky bit for exact rounding.
  std::vector<int> kept;
  std::size_t int_len = zero_int ? 1 : int_digits.size();
  int significant = 0;
  int guard = 0;
  bool sticky = false;
  bool guard_taken = false;

  auto next_frac = [&]() {
    rem *= 10;
    int d = static_cast<int>(rem / den);
    rem %= den;
    return d;
  };

  if (!zero_int) {
    for (char c : int_digits) {
      int d = c - '0';
      if (significant < digits) {
        kept.push_back(d);
        ++significant;
      } else if (!guard_taken) {
        guard = d;
        guard_taken = true;
      } else if (d != 0) {
        sticky = true;
      }
    }
  } else {
    kept.push_back(0);
  }
  if (significant < digits || !guard_taken) {
    while (significant < digits) {
      int d = next_frac();
      kept.push_back(d);
      if (significant > 0 || d != 0) ++significant;
      // An exact zero value never gains significant digits; stop after
      // `digits` fractional places.
      if (rem == 0 && significant == 0 && kept.size() - int_len >= static_cast<std::size_t>(digits))
        break;
    }
    if (!guard_taken) {
      guard = next_frac();
      guard_taken = true;
    }
  }
  if (rem != 0) sticky = true;

  bool round_up = guard > 5 || (guard == 5 && (sticky || (kept.back() % 2 == 1)));
  if (round_up) {
    std::size_t i = kept.size();
    while (i > 0) {
      --i;
      if (kept[i] < 9) {
        ++kept[i];
        break;
      }
      kept[i] = 0;
      if (i == 0) {
        kept.insert(kept.begin(), 1);
        ++int_len;
        break;
      }
    }
    // A carry can add a leading significant digit; the trailing ones it
    // displaces are zeros.
    std::size_t first = 0;
    while (first + 1 < kept.size() && kept[first] == 0) ++first;
    std::size_t end = std::max(first + static_cast<std::size_t>(digits), std::min(int_len, kept.size()));
    if (kept.size() > end) kept.resize(end);
  }

  std::string out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (i == int_len) out += '.';
    out += static_cast<char>('0' + kept[i]);
  }
  // Integer digits beyond the significant ones were not stored.
  if (!zero_int && int_len > kept.size()) out.append(int_len - kept.size(), '0');
  return out;
}

}  // namespace strongprod
