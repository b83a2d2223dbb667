#include "phasetrop/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <sstream>

namespace phasetrop {

namespace arith {

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("integer overflow in exact arithmetic");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in exact arithmetic");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in exact arithmetic");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in exact arithmetic");
  return r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  __int128 x = a < 0 ? -static_cast<__int128>(a) : a;
  __int128 y = b < 0 ? -static_cast<__int128>(b) : b;
  while (y != 0) {
    __int128 t = x % y;
    x = y;
    y = t;
  }
  return narrow(x);
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::int64_t g = gcd(a, b);
  const std::int64_t r = mul(a / g, b);
  return r < 0 ? -r : r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace arith

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rat::Rat(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error("rational with zero denominator");
  *this = from_wide(n, d);
}

Rat Rat::from_wide(__int128 n, __int128 d) {
  if (d == 0) throw Error("division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Rat r;
  if (n == 0) return r;
  const __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  r.num_ = arith::narrow(n);
  r.den_ = arith::narrow(d);
  return r;
}

Rat Rat::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw Error("malformed rational '" + std::string(text) + "'");
    }
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (negative) int_part.remove_prefix(1);
    if (frac_part.size() > 17) throw Error("too many decimals in '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part);
    const std::int64_t fraction = frac_part.empty() ? 0 : parse_int(frac_part);
    Rat r = Rat(whole) + Rat(fraction, scale);
    return negative ? -r : r;
  }
  return Rat(parse_int(text));
}

std::int64_t Rat::floor() const { return arith::floor_div(num_, den_); }

Rat Rat::frac() const { return *this - Rat(floor()); }

double Rat::to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

std::string Rat::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = arith::sub(0, num_);
  r.den_ = den_;
  return r;
}

Rat operator+(const Rat& a, const Rat& b) {
  if (a.den_ == b.den_) return Rat::from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
  return Rat::from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
  if (a.den_ == b.den_) return Rat::from_wide(static_cast<__int128>(a.num_) - b.num_, a.den_);
  return Rat::from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) {
  if (a.num_ == 0 || b.num_ == 0) return Rat();
  return Rat::from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.num_ == 0) throw Error("division by zero");
  return Rat::from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

Rat dot(const IntVec& m, const RatVec& w) {
  if (m.size() != w.size()) throw Error("dimension mismatch in pairing");
  Rat acc;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) acc += Rat(m[i]) * w[i];
  }
  return acc;
}

RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace phasetrop
