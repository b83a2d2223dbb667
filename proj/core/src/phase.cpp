#include "phasetrop/phase.hpp"

#include <cmath>
#include <sstream>

namespace phasetrop {

namespace {

constexpr double kCancelTolerance = 1e-12;
constexpr double kModulusTolerance = 1e-10;

double reduce_radians(double r) {
  double x = std::fmod(r, kTwoPi);
  if (x < 0) x += kTwoPi;
  if (x >= kTwoPi) x = 0.0;
  return x;
}

std::optional<Rat> exact_pow(const Rat& base, std::int64_t k) {
  try {
    Rat acc(1);
    Rat b = k < 0 ? Rat(1) / base : base;
    std::int64_t e = k < 0 ? -k : k;
    while (e > 0) {
      if (e & 1) acc *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return acc;
  } catch (const OverflowError&) {
    return std::nullopt;
  }
}

}  // namespace

Phase Phase::turns(const Rat& t) {
  Phase p;
  p.exact_ = true;
  p.turns_ = t.frac();
  return p;
}

Phase Phase::radians(double r) {
  Phase p;
  p.exact_ = false;
  p.radians_ = reduce_radians(r);
  return p;
}

const Rat& Phase::exact_turns() const {
  if (!exact_) throw Error("phase is not exact");
  return turns_;
}

double Phase::to_radians() const { return exact_ ? turns_.to_double() * kTwoPi : radians_; }

double Phase::to_turns() const { return exact_ ? turns_.to_double() : radians_ / kTwoPi; }

Rat Phase::exact_lift() const {
  const Rat& t = exact_turns();
  return t > Rat(1, 2) ? t - Rat(1) : t;
}

double Phase::lift_radians() const {
  if (exact_) return exact_lift().to_double() * kTwoPi;
  return radians_ > kPi ? radians_ - kTwoPi : radians_;
}

Phase Phase::operator-() const {
  if (exact_) return turns(-turns_);
  return radians(-radians_);
}

Phase operator+(const Phase& a, const Phase& b) {
  if (a.exact_ && b.exact_) return Phase::turns(a.turns_ + b.turns_);
  return Phase::radians(a.to_radians() + b.to_radians());
}

Phase operator-(const Phase& a, const Phase& b) {
  if (a.exact_ && b.exact_) return Phase::turns(a.turns_ - b.turns_);
  return Phase::radians(a.to_radians() - b.to_radians());
}

Phase Phase::scaled(std::int64_t k) const {
  if (exact_) return turns(turns_ * Rat(k));
  return radians(radians_ * static_cast<double>(k));
}

Phase Phase::divided(std::int64_t d, std::int64_t branch) const {
  if (d <= 0) throw Error("root degree must be positive");
  if (exact_) return turns((turns_ + Rat(branch)) / Rat(d));
  return radians((radians_ + kTwoPi * static_cast<double>(branch)) / static_cast<double>(d));
}

double Phase::distance(const Phase& other) const {
  if (exact_ && other.exact_) {
    Rat d = (turns_ - other.turns_).frac();
    if (d > Rat(1, 2)) d = Rat(1) - d;
    return d.to_double() * kTwoPi;
  }
  double d = reduce_radians(to_radians() - other.to_radians());
  return d > kPi ? kTwoPi - d : d;
}

bool operator==(const Phase& a, const Phase& b) {
  if (a.exact_ && b.exact_) return a.turns_ == b.turns_;
  return a.distance(b) <= kPhaseEpsilon;
}

std::string Phase::to_string() const {
  if (exact_) return turns_.to_string() + "t";
  std::ostringstream os;
  os.precision(12);
  os << radians_ << "rad";
  return os.str();
}

PhaseVec operator+(const PhaseVec& a, const PhaseVec& b) {
  if (a.size() != b.size()) throw Error("phase vector length mismatch");
  PhaseVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

PhaseVec operator-(const PhaseVec& a, const PhaseVec& b) {
  if (a.size() != b.size()) throw Error("phase vector length mismatch");
  PhaseVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

PhaseVec operator-(const PhaseVec& a) {
  PhaseVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool all_exact(const PhaseVec& v) {
  for (const auto& p : v) {
    if (!p.is_exact()) return false;
  }
  return true;
}

std::string to_string(const PhaseVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

PolarC PolarC::polar(const Rat& modulus, const Phase& phase) {
  if (modulus.sign() < 0) throw Error("negative modulus");
  PolarC c;
  if (modulus.is_zero()) return c;
  c.zero_ = false;
  c.modulus_ = modulus.to_double();
  c.exact_modulus_ = modulus;
  c.phase_ = phase;
  return c;
}

PolarC PolarC::polar(double modulus, const Phase& phase) {
  if (!(modulus >= 0.0) || !std::isfinite(modulus)) throw Error("invalid modulus");
  PolarC c;
  if (modulus == 0.0) return c;
  c.zero_ = false;
  c.modulus_ = modulus;
  c.phase_ = phase;
  return c;
}

PolarC PolarC::real(const Rat& value) {
  if (value.sign() < 0) return polar(-value, Phase::turns(Rat(1, 2)));
  return polar(value, Phase::zero());
}

PolarC PolarC::from_complex(std::complex<double> z) {
  const double m = std::abs(z);
  if (m == 0.0) return zero();
  return polar(m, Phase::radians(std::arg(z)));
}

std::complex<double> PolarC::to_complex() const {
  if (zero_) return {0.0, 0.0};
  return std::polar(modulus_, phase_.to_radians());
}

PolarC PolarC::operator-() const {
  if (zero_) return *this;
  PolarC c = *this;
  c.phase_ = phase_ + Phase::turns(Rat(1, 2));
  return c;
}

PolarC operator*(const PolarC& a, const PolarC& b) {
  if (a.zero_ || b.zero_) return PolarC::zero();
  PolarC c;
  c.zero_ = false;
  c.phase_ = a.phase_ + b.phase_;
  if (a.exact_modulus_ && b.exact_modulus_) {
    try {
      c.exact_modulus_ = *a.exact_modulus_ * *b.exact_modulus_;
      c.modulus_ = c.exact_modulus_->to_double();
      return c;
    } catch (const OverflowError&) {
      c.exact_modulus_.reset();
    }
  }
  c.modulus_ = a.modulus_ * b.modulus_;
  return c;
}

PolarC PolarC::inverse() const {
  if (zero_) throw Error("division by zero");
  PolarC c;
  c.zero_ = false;
  c.phase_ = -phase_;
  if (exact_modulus_) {
    c.exact_modulus_ = Rat(1) / *exact_modulus_;
    c.modulus_ = c.exact_modulus_->to_double();
  } else {
    c.modulus_ = 1.0 / modulus_;
  }
  return c;
}

PolarC operator/(const PolarC& a, const PolarC& b) { return a * b.inverse(); }

PolarC operator+(const PolarC& a, const PolarC& b) {
  if (a.zero_) return b;
  if (b.zero_) return a;
  if (a.phase_.is_exact() && b.phase_.is_exact()) {
    const Rat d = (a.phase_.exact_turns() - b.phase_.exact_turns()).frac();
    if (d.is_zero() || d == Rat(1, 2)) {
      const bool same = d.is_zero();
      if (a.exact_modulus_ && b.exact_modulus_) {
        try {
          if (same) return PolarC::polar(*a.exact_modulus_ + *b.exact_modulus_, a.phase_);
          const Rat diff = *a.exact_modulus_ - *b.exact_modulus_;
          if (diff.is_zero()) return PolarC::zero();
          return diff.sign() > 0 ? PolarC::polar(diff, a.phase_) : PolarC::polar(-diff, b.phase_);
        } catch (const OverflowError&) {
          // fall through to the float modulus path
        }
      }
      if (same) return PolarC::polar(a.modulus_ + b.modulus_, a.phase_);
      const double diff = a.modulus_ - b.modulus_;
      if (std::abs(diff) <= kCancelTolerance * std::max(a.modulus_, b.modulus_)) return PolarC::zero();
      return diff > 0 ? PolarC::polar(diff, a.phase_) : PolarC::polar(-diff, b.phase_);
    }
  }
  const std::complex<double> z = a.to_complex() + b.to_complex();
  if (std::abs(z) <= kCancelTolerance * (a.modulus_ + b.modulus_)) return PolarC::zero();
  return PolarC::from_complex(z);
}

PolarC PolarC::pow(std::int64_t k) const {
  if (zero_) {
    if (k <= 0) throw Error("non-positive power of zero");
    return *this;
  }
  PolarC c;
  c.zero_ = false;
  c.phase_ = phase_.scaled(k);
  if (exact_modulus_) {
    c.exact_modulus_ = exact_pow(*exact_modulus_, k);
    if (c.exact_modulus_) {
      c.modulus_ = c.exact_modulus_->to_double();
      return c;
    }
  }
  c.modulus_ = std::pow(modulus_, static_cast<double>(k));
  return c;
}

PolarC PolarC::nth_root(std::int64_t d, std::int64_t branch) const {
  if (zero_) return *this;
  PolarC c;
  c.zero_ = false;
  c.phase_ = phase_.divided(d, branch);
  if (exact_modulus_ && *exact_modulus_ == Rat(1)) {
    c.exact_modulus_ = Rat(1);
    c.modulus_ = 1.0;
  } else {
    c.modulus_ = std::pow(modulus_, 1.0 / static_cast<double>(d));
  }
  return c;
}

bool operator==(const PolarC& a, const PolarC& b) {
  if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
  if (!(a.phase_ == b.phase_)) return false;
  if (a.exact_modulus_ && b.exact_modulus_) return *a.exact_modulus_ == *b.exact_modulus_;
  return std::abs(a.modulus_ - b.modulus_) <= kModulusTolerance * std::max(a.modulus_, b.modulus_);
}

std::string PolarC::to_string() const {
  if (zero_) return "0";
  std::ostringstream os;
  if (exact_modulus_) {
    os << *exact_modulus_;
  } else {
    os.precision(12);
    os << modulus_;
  }
  os << "@" << phase_.to_string();
  return os.str();
}

}  // namespace phasetrop
