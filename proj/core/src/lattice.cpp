#include "phasetrop/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace phasetrop {

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVec IntMatrix::row(std::size_t r) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVec IntMatrix::col(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVec> IntMatrix::row_list() const {
  std::vector<IntVec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) = arith::add(p(i, j), arith::mul(aik, b(k, j)));
    }
  }
  return p;
}

IntVec operator*(const IntMatrix& a, const IntVec& v) {
  if (a.cols_ != v.size()) throw Error("matrix dimension mismatch");
  IntVec out(a.rows_, 0);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] = arith::add(out[i], arith::mul(a(i, k), v[k]));
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) os << (r ? "," : "") << phasetrop::to_string(row(r));
  os << ']';
  return os.str();
}

RatVec apply(const IntMatrix& a, const RatVec& v) {
  if (a.cols() != v.size()) throw Error("matrix dimension mismatch");
  RatVec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) != 0) out[i] += Rat(a(i, k)) * v[k];
    }
  }
  return out;
}

PhaseVec apply(const IntMatrix& a, const PhaseVec& theta) {
  if (a.cols() != theta.size()) throw Error("matrix dimension mismatch");
  PhaseVec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) != 0) out[i] += theta[k].scaled(a(i, k));
    }
  }
  return out;
}

namespace {

class SmithWorker {
 public:
  explicit SmithWorker(const IntMatrix& m)
      : d_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())),
        vi_(IntMatrix::identity(m.cols())) {}

  SmithForm run() {
    const std::size_t rows = d_.rows();
    const std::size_t cols = d_.cols();
    const std::size_t diag = std::min(rows, cols);
    std::size_t t = 0;
    for (; t < diag; ++t) {
      if (!reduce_at(t)) break;
    }
    SmithForm out;
    out.rank = t;
    out.divisors.assign(diag, 0);
    for (std::size_t i = 0; i < t; ++i) out.divisors[i] = d_(i, i);
    out.U = std::move(u_);
    out.V = std::move(v_);
    out.V_inv = std::move(vi_);
    return out;
  }

 private:
  // Returns false when the trailing block is zero.
  bool reduce_at(std::size_t t) {
    const std::size_t rows = d_.rows();
    const std::size_t cols = d_.cols();
    for (;;) {
      std::size_t pi = rows;
      std::size_t pj = cols;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          const std::int64_t a = d_(i, j) < 0 ? -d_(i, j) : d_(i, j);
          if (a != 0 && (best == 0 || a < best)) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      }
      if (best == 0) return false;
      if (pi != t) row_swap(pi, t);
      if (pj != t) col_swap(pj, t);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const std::int64_t q = d_(i, t) / d_(t, t);
        if (q != 0) row_add(i, t, -q);
        dirty = dirty || d_(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const std::int64_t q = d_(t, j) / d_(t, t);
        if (q != 0) col_add(j, t, -q);
        dirty = dirty || d_(t, j) != 0;
      }
      if (dirty) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d_(i, j) % d_(t, t) != 0) {
            row_add(t, i, 1);
            divisible = false;
            break;
          }
        }
      }
      if (!divisible) continue;
      if (d_(t, t) < 0) row_negate(t);
      return true;
    }
  }

  void row_swap(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < d_.cols(); ++c) std::swap(d_(a, c), d_(b, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(a, c), u_(b, c));
  }
  // row_a += k * row_b
  void row_add(std::size_t a, std::size_t b, std::int64_t k) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(a, c) = arith::add(d_(a, c), arith::mul(k, d_(b, c)));
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(a, c) = arith::add(u_(a, c), arith::mul(k, u_(b, c)));
  }
  void row_negate(std::size_t a) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(a, c) = -d_(a, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(a, c) = -u_(a, c);
  }
  void col_swap(std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < d_.rows(); ++r) std::swap(d_(r, a), d_(r, b));
    for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, a), v_(r, b));
    for (std::size_t c = 0; c < vi_.cols(); ++c) std::swap(vi_(a, c), vi_(b, c));
  }
  // col_a += k * col_b
  void col_add(std::size_t a, std::size_t b, std::int64_t k) {
    for (std::size_t r = 0; r < d_.rows(); ++r) d_(r, a) = arith::add(d_(r, a), arith::mul(k, d_(r, b)));
    for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, a) = arith::add(v_(r, a), arith::mul(k, v_(r, b)));
    for (std::size_t c = 0; c < vi_.cols(); ++c) vi_(b, c) = arith::sub(vi_(b, c), arith::mul(k, vi_(a, c)));
  }

  IntMatrix d_;
  IntMatrix u_;
  IntMatrix v_;
  IntMatrix vi_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) { return SmithWorker(m).run(); }

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  const std::size_t rows = h.rows();
  const std::size_t cols = h.cols();
  auto row_add = [&](std::size_t a, std::size_t b, std::int64_t k) {
    for (std::size_t c = 0; c < cols; ++c) h(a, c) = arith::add(h(a, c), arith::mul(k, h(b, c)));
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols; ++c) std::swap(h(a, c), h(b, c));
  };
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    for (;;) {
      std::size_t best_row = rows;
      std::int64_t best = 0;
      for (std::size_t i = pr; i < rows; ++i) {
        const std::int64_t a = std::llabs(h(i, c));
        if (a != 0 && (best == 0 || a < best)) {
          best = a;
          best_row = i;
        }
      }
      if (best == 0) break;
      if (best_row != pr) row_swap(best_row, pr);
      bool clean = true;
      for (std::size_t i = pr + 1; i < rows; ++i) {
        const std::int64_t q = h(i, c) / h(pr, c);
        if (q != 0) row_add(i, pr, -q);
        clean = clean && h(i, c) == 0;
      }
      if (clean) break;
    }
    if (h(pr, c) == 0) continue;
    if (h(pr, c) < 0) {
      for (std::size_t k = 0; k < cols; ++k) h(pr, k) = -h(pr, k);
    }
    for (std::size_t i = 0; i < pr; ++i) {
      const std::int64_t q = arith::floor_div(h(i, c), h(pr, c));
      if (q != 0) row_add(i, pr, -q);
    }
    ++pr;
  }
  IntMatrix out(pr, cols);
  for (std::size_t i = 0; i < pr; ++i) {
    for (std::size_t c = 0; c < cols; ++c) out(i, c) = h(i, c);
  }
  return out;
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

std::int64_t determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<RatVec> a(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));
  }
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      const Rat f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det.num();
}

std::int64_t lattice_index(const std::vector<IntVec>& vectors) {
  if (vectors.empty()) return 1;
  const SmithForm s = smith_normal_form(IntMatrix::from_rows(vectors));
  if (s.rank < vectors.size()) throw Error("not linearly independent");
  std::int64_t index = 1;
  for (std::size_t i = 0; i < s.rank; ++i) index = arith::mul(index, s.divisors[i]);
  return index;
}

std::vector<IntVec> span_lattice(const std::vector<IntVec>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  const SmithForm s = smith_normal_form(IntMatrix::from_rows(vectors, dim));
  IntMatrix basis(s.rank, dim);
  for (std::size_t i = 0; i < s.rank; ++i) {
    for (std::size_t c = 0; c < dim; ++c) basis(i, c) = s.V_inv(i, c);
  }
  return hermite_normal_form(basis).row_list();
}

std::vector<IntVec> span_lattice(const std::vector<RatVec>& vectors, std::size_t dim) {
  std::vector<IntVec> scaled;
  scaled.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != dim) throw Error("dimension mismatch in span");
    scaled.push_back(primitive(v));
  }
  return span_lattice(scaled, dim);
}

std::vector<IntVec> integer_kernel(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  const std::size_t n = m.cols();
  IntMatrix basis(n - s.rank, n);
  for (std::size_t j = s.rank; j < n; ++j) {
    for (std::size_t r = 0; r < n; ++r) basis(j - s.rank, r) = s.V(r, j);
  }
  return hermite_normal_form(basis).row_list();
}

std::optional<IntVec> integer_solve(const IntMatrix& m, const RatVec& b) {
  if (b.size() != m.rows()) throw Error("right-hand side length mismatch");
  const SmithForm s = smith_normal_form(m);
  const RatVec ub = apply(s.U, b);
  IntVec y(m.cols(), 0);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank) {
      const Rat q = ub[i] / Rat(s.divisors[i]);
      if (!q.is_integer()) return std::nullopt;
      y[i] = q.num();
    } else if (!ub[i].is_zero()) {
      return std::nullopt;
    }
  }
  return s.V * y;
}

bool subtorus_contains(const std::vector<IntVec>& basis, const PhaseVec& theta) {
  const std::size_t n = theta.size();
  SmithForm s;
  if (basis.empty()) {
    s.V = IntMatrix::identity(n);
    s.rank = 0;
  } else {
    s = smith_normal_form(IntMatrix::from_rows(basis, n));
    if (s.V.rows() != n) throw Error("dimension mismatch in subtorus test");
  }
  const bool exact = all_exact(theta);
  const double eps_turns = kPhaseEpsilon / kTwoPi;
  for (std::size_t j = s.rank; j < n; ++j) {
    if (exact) {
      Rat eta;
      for (std::size_t i = 0; i < n; ++i) {
        if (s.V(i, j) != 0) eta += Rat(s.V(i, j)) * theta[i].exact_turns();
      }
      if (!eta.is_integer()) return false;
    } else {
      double eta = 0.0;
      double weight = 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double v = static_cast<double>(s.V(i, j));
        eta += v * theta[i].to_turns();
        weight += std::abs(v);
      }
      if (std::abs(eta - std::round(eta)) > eps_turns * weight) return false;
    }
  }
  return true;
}

IntVec primitive(const RatVec& v) {
  std::int64_t l = 1;
  for (const auto& x : v) l = arith::lcm(l, x.den());
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] * Rat(l)).num();
  return primitive(out);
}

IntVec primitive(const IntVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = arith::gcd(g, x);
  if (g <= 1) return v;
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

}  // namespace phasetrop
