#pragma once

// Exact dense linear algebra over Z and Q on Eigen containers.
//
// The algorithms are templated on the scalar type. The library instantiates
// them with `Integer` (overflow-escalating); the test suite also runs them on
// `std::int64_t` to cross-check small cases.

#include "enriques/errors.hpp"
#include "enriques/integer.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace enriques {

using Index = Eigen::Index;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Mat<Integer>;
using IntVector = Vec<Integer>;
using RatMatrix = Mat<Rational>;
using RatVector = Vec<Rational>;

namespace scalar {

inline std::int64_t abs(std::int64_t v) { return v < 0 ? -v : v; }
inline Integer abs(const Integer& v) { return enriques::abs(v); }
inline bool is_zero(std::int64_t v) { return v == 0; }
inline bool is_zero(const Integer& v) { return v.is_zero(); }
inline bool is_zero(const Rational& v) { return v.is_zero(); }
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline Integer floor_div(const Integer& a, const Integer& b) { return enriques::floor_div(a, b); }

}  // namespace scalar

/// Extended gcd: returns (g, x, y) with g = x*a + y*b and g >= 0.
template <typename Scalar>
std::tuple<Scalar, Scalar, Scalar> extended_gcd(Scalar a, Scalar b) {
  Scalar old_r = a, r = b;
  Scalar old_s = 1, s = 0;
  Scalar old_t = 0, t = 1;
  while (!scalar::is_zero(r)) {
    const Scalar q = old_r / r;
    Scalar tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < Scalar(0)) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

template <typename Scalar>
Mat<Scalar> identity(Index n) {
  Mat<Scalar> m = Mat<Scalar>::Constant(n, n, Scalar(0));
  for (Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

template <typename Scalar>
Mat<Scalar> zeros(Index rows, Index cols) {
  return Mat<Scalar>::Constant(rows, cols, Scalar(0));
}

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
template <typename Scalar>
Scalar determinant(const Mat<Scalar>& m) {
  const Index n = m.rows();
  if (n == 0) return Scalar(1);
  Mat<Scalar> a = m;
  Scalar sign = 1;
  Scalar prev = 1;
  for (Index k = 0; k < n - 1; ++k) {
    if (scalar::is_zero(a(k, k))) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (!scalar::is_zero(a(i, k))) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// u * m * v = d, with u and v unimodular, d diagonal and d(0,0) | d(1,1) | ...
/// `u_inv` and `v_inv` are maintained alongside so callers never invert.
template <typename Scalar>
struct SnfResultT {
  Mat<Scalar> d;
  Mat<Scalar> u;
  Mat<Scalar> v;
  Mat<Scalar> u_inv;
  Mat<Scalar> v_inv;
  std::vector<Scalar> invariant_factors;  // non-zero diagonal entries, in order

  Index rank() const { return static_cast<Index>(invariant_factors.size()); }
};

/// Smith normal form with a deterministic pivot rule: smallest absolute
/// value in the remaining block, ties broken by (row, column).
template <typename Scalar>
SnfResultT<Scalar> smith_normal_form(const Mat<Scalar>& m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  Mat<Scalar> a = m;
  Mat<Scalar> u = identity<Scalar>(rows), u_inv = identity<Scalar>(rows);
  Mat<Scalar> v = identity<Scalar>(cols), v_inv = identity<Scalar>(cols);

  // Row operation row_i -= q * row_t, mirrored on u and u_inv.
  auto row_sub = [&](Index i, Index t, const Scalar& q) {
    a.row(i) -= q * a.row(t);
    u.row(i) -= q * u.row(t);
    u_inv.col(t) += q * u_inv.col(i);
  };
  auto col_sub = [&](Index j, Index t, const Scalar& q) {
    a.col(j) -= q * a.col(t);
    v.col(j) -= q * v.col(t);
    v_inv.row(t) += q * v_inv.row(j);
  };

  const Index steps = std::min(rows, cols);
  Index t = 0;
  for (; t < steps; ++t) {
    bool exhausted = false;
    for (;;) {
      Index pi = -1, pj = -1;
      Scalar best = 0;
      for (Index i = t; i < rows; ++i) {
        for (Index j = t; j < cols; ++j) {
          if (scalar::is_zero(a(i, j))) continue;
          const Scalar mag = scalar::abs(a(i, j));
          if (pi < 0 || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) {
        exhausted = true;
        break;
      }
      if (pi != t) {
        a.row(pi).swap(a.row(t));
        u.row(pi).swap(u.row(t));
        u_inv.col(pi).swap(u_inv.col(t));
      }
      if (pj != t) {
        a.col(pj).swap(a.col(t));
        v.col(pj).swap(v.col(t));
        v_inv.row(pj).swap(v_inv.row(t));
      }
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (scalar::is_zero(a(i, t))) continue;
        const Scalar q = a(i, t) / a(t, t);
        if (!scalar::is_zero(q)) row_sub(i, t, q);
        if (!scalar::is_zero(a(i, t))) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (scalar::is_zero(a(t, j))) continue;
        const Scalar q = a(t, j) / a(t, t);
        if (!scalar::is_zero(q)) col_sub(j, t, q);
        if (!scalar::is_zero(a(t, j))) clean = false;
      }
      if (!clean) continue;
      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (!scalar::is_zero(a(i, j) % a(t, t))) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      // row_t += row_bad
      a.row(t) += a.row(bad);
      u.row(t) += u.row(bad);
      u_inv.col(bad) -= u_inv.col(t);
    }
    if (exhausted) break;
    if (a(t, t) < Scalar(0)) {
      a.row(t) = -a.row(t);
      u.row(t) = -u.row(t);
      u_inv.col(t) = -u_inv.col(t);
    }
  }

  SnfResultT<Scalar> out;
  for (Index i = 0; i < t; ++i) out.invariant_factors.push_back(a(i, i));
  out.d = std::move(a);
  out.u = std::move(u);
  out.v = std::move(v);
  out.u_inv = std::move(u_inv);
  out.v_inv = std::move(v_inv);
  return out;
}

template <typename Scalar>
Index rank(const Mat<Scalar>& m) {
  return smith_normal_form(m).rank();
}

/// Basis (as columns) of the Z-span of the columns of `m`, in upper column
/// echelon form: column k has its last non-zero entry (the pivot, positive)
/// in row p_k with p_0 < p_1 < ...; entries to the right of a pivot in its
/// row are reduced into [0, pivot).
template <typename Scalar>
Mat<Scalar> column_hermite_basis(const Mat<Scalar>& m) {
  const Index n = m.rows();
  const Index cols = m.cols();
  Mat<Scalar> a = m;
  Index active = cols;  // columns [0, active) are still free
  for (Index i = n - 1; i >= 0 && active > 0; --i) {
    const Index target = active - 1;
    for (Index j = 0; j < target; ++j) {
      if (scalar::is_zero(a(i, j))) continue;
      if (scalar::is_zero(a(i, target))) {
        a.col(j).swap(a.col(target));
        continue;
      }
      const Scalar p = a(i, target);
      const Scalar q = a(i, j);
      auto [g, x, y] = extended_gcd(p, q);
      const Vec<Scalar> c1 = a.col(target);
      const Vec<Scalar> c2 = a.col(j);
      a.col(target) = x * c1 + y * c2;
      a.col(j) = (p / g) * c2 - (q / g) * c1;
    }
    if (scalar::is_zero(a(i, target))) continue;
    if (a(i, target) < Scalar(0)) a.col(target) = -a.col(target);
    const Scalar pivot = a(i, target);
    for (Index k = active; k < cols; ++k) {
      const Scalar c = scalar::floor_div(a(i, k), pivot);
      if (!scalar::is_zero(c)) a.col(k) -= c * a.col(target);
    }
    --active;
  }
  return a.rightCols(cols - active);
}

/// Saturated basis (columns, echelon form) of {z in Z^n : m z = 0}.
template <typename Scalar>
Mat<Scalar> integer_kernel(const Mat<Scalar>& m) {
  const Index n = m.cols();
  if (m.rows() == 0) return identity<Scalar>(n);
  const SnfResultT<Scalar> snf = smith_normal_form(m);
  const Index r = snf.rank();
  if (r == n) return zeros<Scalar>(n, 0);
  Mat<Scalar> basis = snf.v.rightCols(n - r);
  return column_hermite_basis(basis);
}

/// An integer solution of a x = b, or nullopt when none exists.
template <typename Scalar>
std::optional<Vec<Scalar>> solve_integer(const Mat<Scalar>& a, const Vec<Scalar>& b) {
  const SnfResultT<Scalar> s = smith_normal_form(a);
  const Vec<Scalar> ub = s.u * b;
  Vec<Scalar> y = Vec<Scalar>::Constant(a.cols(), Scalar(0));
  const Index r = s.rank();
  for (Index i = 0; i < ub.size(); ++i) {
    if (i < r) {
      if (!scalar::is_zero(ub(i) % s.d(i, i))) return std::nullopt;
      y(i) = ub(i) / s.d(i, i);
    } else if (!scalar::is_zero(ub(i))) {
      return std::nullopt;
    }
  }
  return Vec<Scalar>(s.v * y);
}

/// Exact inverse over Q by Gauss-Jordan elimination; nullopt when singular.
inline std::optional<RatMatrix> rational_inverse(const RatMatrix& m) {
  const Index n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = identity<Rational>(n);
  for (Index c = 0; c < n; ++c) {
    Index piv = -1;
    for (Index r = c; r < n; ++r) {
      if (!a(r, c).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    if (piv != c) {
      a.row(piv).swap(a.row(c));
      inv.row(piv).swap(inv.row(c));
    }
    const Rational p = a(c, c);
    a.row(c) /= p;
    inv.row(c) /= p;
    for (Index r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      const Rational f = a(r, c);
      a.row(r) -= f * a.row(c);
      inv.row(r) -= f * inv.row(c);
    }
  }
  return inv;
}

inline std::optional<RatMatrix> rational_inverse(const IntMatrix& m) {
  return rational_inverse(to_rational(m));
}

/// Converts a rational matrix known to be integral; throws otherwise.
inline IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_integer()) fail(Errc::BadShape, "expected an integral matrix");
      r(i, j) = m(i, j).num();
    }
  }
  return r;
}

}  // namespace enriques
