#pragma once

#include "enriques/integer.hpp"
#include "enriques/matrix.hpp"

#include <optional>

namespace enriques {

struct Signature {
  int plus = 0;
  int minus = 0;

  int rank() const { return plus + minus; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Counts of positive, negative and zero directions of a symmetric integer
/// matrix, by exact congruence diagonalization over Q.
struct Inertia {
  int plus = 0;
  int minus = 0;
  int zero = 0;
};

Inertia inertia(const IntMatrix& symmetric);

/// A non-degenerate integral symmetric bilinear form on Z^n.
class Lattice {
 public:
  /// Throws NotSymmetric or Degenerate.
  explicit Lattice(IntMatrix gram);

  static Lattice zero() { return Lattice(); }

  const IntMatrix& gram() const noexcept { return gram_; }
  Index rank() const noexcept { return gram_.rows(); }
  Signature signature() const noexcept { return signature_; }
  bool is_even() const noexcept { return even_; }
  /// det(gram), with its sign.
  const Integer& determinant() const noexcept { return det_; }
  /// |det(gram)| = |A_L|.
  Integer discriminant_order() const { return abs(det_); }
  bool is_definite() const noexcept { return signature_.plus == 0 || signature_.minus == 0; }

  Integer product(const IntVector& x, const IntVector& y) const { return x.dot(gram_ * y); }
  Integer norm(const IntVector& x) const { return product(x, x); }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

 private:
  Lattice() : gram_(0, 0), det_(1) {}

  IntMatrix gram_;
  Signature signature_;
  bool even_ = true;
  Integer det_;
};

/// A possibly singular symmetric form; the return type of complements.
struct DegenerateQuadraticModule {
  IntMatrix gram;
  Index radical_rank = 0;

  bool is_nondegenerate() const { return radical_rank == 0; }
  /// Throws DegenerateComplement when the radical is non-trivial.
  Lattice to_lattice() const;
};

using SnfResult = SnfResultT<Integer>;

Lattice lattice_from_gram(const IntMatrix& gram);
SnfResult snf(const IntMatrix& m);

Lattice direct_sum(const Lattice& a, const Lattice& b);
/// Throws ZeroScale for n = 0.
Lattice rescale(const Lattice& l, const Integer& n);

struct Closure {
  IntMatrix basis;  // columns, in coordinates of the ambient lattice
  Integer index;    // [saturation : span]
};

/// Saturation of the span of the columns of `vectors`. Throws DependentVectors.
Closure primitive_closure(const Lattice& l, const IntMatrix& vectors);

struct Complement {
  DegenerateQuadraticModule module;
  IntMatrix basis;  // columns, in coordinates of the ambient lattice
};

Complement orthogonal_complement(const Lattice& l, const IntMatrix& vectors);

/// A finite-index sublattice together with its inclusion.
struct Sublattice {
  Lattice lattice;
  IntMatrix basis;  // columns, in coordinates of the ambient lattice
  Integer index;
};

/// Gram of the sublattice spanned by the columns of `basis` (square, full rank).
Sublattice sublattice_from_gram_change(const Lattice& l, const IntMatrix& basis);

/// An overlattice M of L described inside L (x) Q.
struct Overlattice {
  Lattice lattice;
  RatMatrix basis;  // columns, in coordinates of L (x) Q
  Integer index;    // [M : L]
};

/// Adjoins rational vectors (columns, coordinates of L (x) Q) to L. Throws
/// NotIsotropic when the enlarged module is not an even integral lattice.
Overlattice overlattice_from_vectors(const Lattice& l, const RatMatrix& vectors);

bool is_twice_even(const Lattice& l);

}  // namespace enriques
