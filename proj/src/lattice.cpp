#include "enriques/lattice.hpp"

#include <string>
#include <utility>

namespace enriques {

Inertia inertia(const IntMatrix& symmetric) {
  if (!is_symmetric(symmetric)) fail(Errc::NotSymmetric, "matrix is not symmetric");
  RatMatrix a = to_rational(symmetric);
  Inertia out;
  // Each step removes one (diagonal pivot) or two (hyperbolic pivot) indices
  // via a Schur complement.
  while (a.rows() > 0) {
    const Index n = a.rows();
    Index piv = -1;
    for (Index i = 0; i < n; ++i) {
      if (!a(i, i).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv >= 0) {
      (a(piv, piv).sign() > 0 ? out.plus : out.minus) += 1;
      RatMatrix next(n - 1, n - 1);
      for (Index i = 0, r = 0; i < n; ++i) {
        if (i == piv) continue;
        for (Index j = 0, c = 0; j < n; ++j) {
          if (j == piv) continue;
          next(r, c) = a(i, j) - a(i, piv) * a(piv, j) / a(piv, piv);
          ++c;
        }
        ++r;
      }
      a = std::move(next);
      continue;
    }
    Index pi = -1, pj = -1;
    for (Index i = 0; i < n && pi < 0; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (!a(i, j).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) {
      out.zero += static_cast<int>(n);
      break;
    }
    out.plus += 1;
    out.minus += 1;
    // Pivot block [[0,c],[c,0]] has inverse [[0,1/c],[1/c,0]].
    const Rational c = a(pi, pj);
    RatMatrix next(n - 2, n - 2);
    for (Index i = 0, r = 0; i < n; ++i) {
      if (i == pi || i == pj) continue;
      for (Index j = 0, cc = 0; j < n; ++j) {
        if (j == pi || j == pj) continue;
        next(r, cc) = a(i, j) - (a(i, pi) * a(pj, j) + a(i, pj) * a(pi, j)) / c;
        ++cc;
      }
      ++r;
    }
    a = std::move(next);
  }
  return out;
}

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) fail(Errc::BadShape, "Gram matrix must be square");
  if (!is_symmetric(gram_)) fail(Errc::NotSymmetric, "Gram matrix is not symmetric");
  det_ = enriques::determinant(gram_);
  if (det_.is_zero()) fail(Errc::Degenerate, "Gram matrix has determinant 0");
  const Inertia in = inertia(gram_);
  signature_ = Signature{in.plus, in.minus};
  for (Index i = 0; i < gram_.rows(); ++i) {
    if (gram_(i, i).is_odd()) {
      even_ = false;
      break;
    }
  }
}

Lattice DegenerateQuadraticModule::to_lattice() const {
  if (radical_rank != 0) {
    fail(Errc::DegenerateComplement,
         "complement has radical of rank " + std::to_string(radical_rank));
  }
  return Lattice(gram);
}

Lattice lattice_from_gram(const IntMatrix& gram) { return Lattice(gram); }

SnfResult snf(const IntMatrix& m) { return smith_normal_form(m); }

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const Index n = a.rank(), m = b.rank();
  IntMatrix g = zeros<Integer>(n + m, n + m);
  g.topLeftCorner(n, n) = a.gram();
  g.bottomRightCorner(m, m) = b.gram();
  return Lattice(std::move(g));
}

Lattice rescale(const Lattice& l, const Integer& n) {
  if (n.is_zero()) fail(Errc::ZeroScale, "scale factor must be non-zero");
  return Lattice(IntMatrix(l.gram() * n));
}

Closure primitive_closure(const Lattice& l, const IntMatrix& vectors) {
  if (vectors.rows() != l.rank()) fail(Errc::BadShape, "vector length differs from lattice rank");
  const Index k = vectors.cols();
  if (k == 0) return Closure{zeros<Integer>(l.rank(), 0), Integer(1)};
  const SnfResult s = smith_normal_form(vectors);
  if (s.rank() != k) fail(Errc::DependentVectors, "vectors are linearly dependent");
  Integer index(1);
  for (const Integer& d : s.invariant_factors) index *= d;
  IntMatrix basis = column_hermite_basis(IntMatrix(s.u_inv.leftCols(k)));
  return Closure{std::move(basis), index};
}

Complement orthogonal_complement(const Lattice& l, const IntMatrix& vectors) {
  if (vectors.rows() != l.rank()) fail(Errc::BadShape, "vector length differs from lattice rank");
  const IntMatrix pairing = vectors.transpose() * l.gram();
  IntMatrix basis = integer_kernel(pairing);
  IntMatrix gram = basis.transpose() * l.gram() * basis;
  const Index radical = gram.rows() - rank(gram);
  return Complement{DegenerateQuadraticModule{std::move(gram), radical}, std::move(basis)};
}

Sublattice sublattice_from_gram_change(const Lattice& l, const IntMatrix& basis) {
  if (basis.rows() != l.rank() || basis.cols() != l.rank()) {
    fail(Errc::BadShape, "basis must be a square matrix of the lattice rank");
  }
  const Integer det = determinant(basis);
  if (det.is_zero()) fail(Errc::DependentVectors, "basis columns are linearly dependent");
  return Sublattice{Lattice(IntMatrix(basis.transpose() * l.gram() * basis)), basis, abs(det)};
}

Overlattice overlattice_from_vectors(const Lattice& l, const RatMatrix& vectors) {
  const Index n = l.rank();
  if (vectors.rows() != n) fail(Errc::BadShape, "vector length differs from lattice rank");
  Integer m(1);
  for (Index i = 0; i < vectors.rows(); ++i)
    for (Index j = 0; j < vectors.cols(); ++j) m = lcm(m, vectors(i, j).den());
  IntMatrix gens(n, n + vectors.cols());
  gens.leftCols(n) = identity<Integer>(n) * m;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < vectors.cols(); ++j)
      gens(i, n + j) = vectors(i, j).num() * (m / vectors(i, j).den());
  const IntMatrix hnf = column_hermite_basis(gens);
  RatMatrix basis(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) basis(i, j) = Rational(hnf(i, j), m);
  const RatMatrix g = basis.transpose() * to_rational(l.gram()) * basis;
  IntMatrix gi(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (!g(i, j).is_integer()) fail(Errc::NotIsotropic, "adjoined vectors pair non-integrally");
      gi(i, j) = g(i, j).num();
    }
    if (l.is_even() && gi(i, i).is_odd()) fail(Errc::NotIsotropic, "adjoined vectors have odd norm");
  }
  const Integer index = pow(m, static_cast<unsigned>(n)) / abs(determinant(hnf));
  return Overlattice{Lattice(std::move(gi)), std::move(basis), index};
}

bool is_twice_even(const Lattice& l) {
  const IntMatrix& g = l.gram();
  for (Index i = 0; i < g.rows(); ++i) {
    if (!(mod_floor(g(i, i), 4)).is_zero()) return false;
    for (Index j = 0; j < g.cols(); ++j)
      if (g(i, j).is_odd()) return false;
  }
  return true;
}

}  // namespace enriques
