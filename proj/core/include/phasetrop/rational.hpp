#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace phasetrop {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exact integer computation leaves the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

namespace arith {

std::int64_t narrow(__int128 v);
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
/// Floor division, b != 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

}  // namespace arith

/// Exact rational number in canonical form: gcd(num, den) = 1, den > 0.
///
/// Backed by 64-bit integers with 128-bit intermediates. Every operation
/// checks the result range and throws OverflowError instead of wrapping.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(std::int64_t n, std::int64_t d);

  /// Parses "p", "-p", "p/q" and finite decimals such as "0.25".
  static Rat parse(std::string_view text);

  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }

  [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }
  [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }
  [[nodiscard]] constexpr int sign() const { return (num_ > 0) - (num_ < 0); }

  [[nodiscard]] std::int64_t floor() const;
  /// Fractional part in [0, 1).
  [[nodiscard]] Rat frac() const;
  [[nodiscard]] Rat abs() const { return num_ < 0 ? -*this : *this; }
  [[nodiscard]] double to_double() const;
  [[nodiscard]] std::string to_string() const;

  Rat operator-() const;
  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

 private:
  static Rat from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rat>;

Rat dot(const IntVec& m, const RatVec& w);
RatVec to_rat(const IntVec& v);
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

}  // namespace phasetrop

template <>
struct std::hash<phasetrop::Rat> {
  std::size_t operator()(const phasetrop::Rat& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
  }
};
