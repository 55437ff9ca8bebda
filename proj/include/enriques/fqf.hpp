#pragma once

// Finite quadratic forms q: A -> Q/2Z on finite abelian groups
// A = Z/d_1 + ... + Z/d_k. Elements are integer coordinate vectors reduced
// modulo the cyclic factors.

#include "enriques/lattice.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <vector>

namespace enriques {

using Element = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using ElementMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr std::uint64_t kDefaultSearchBound = std::uint64_t{1} << 20;

class FiniteQuadraticForm {
 public:
  /// The form on the trivial group.
  FiniteQuadraticForm() = default;

  /// `q` holds q(g_i) mod 2 on the diagonal and b(g_i, g_j) mod 1 off it.
  /// Throws BadParams when the values are not compatible with the factors.
  FiniteQuadraticForm(std::vector<std::int64_t> factors, const RatMatrix& q);

  const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
  Index rank() const noexcept { return static_cast<Index>(factors_.size()); }
  /// Exponent of the group; values are numerators over this level.
  std::int64_t level() const noexcept { return level_; }
  Integer order() const;
  /// |A| as a machine integer, throwing TooLarge above `bound`.
  std::uint64_t size(std::uint64_t bound = kDefaultSearchBound) const;
  bool is_trivial() const noexcept { return factors_.empty(); }

  /// Generator values as rationals, reduced into [0,2) and [0,1).
  RatMatrix q_matrix() const;

  Element reduce(const Element& x) const;
  Element add(const Element& x, const Element& y) const;
  Element scale(const Element& x, std::int64_t n) const;
  Element zero() const { return Element::Zero(rank()); }
  Element generator(Index i) const;
  bool is_zero(const Element& x) const;
  std::int64_t element_order(const Element& x) const;

  /// Numerator of q(x) over level(), in [0, 2*level()).
  std::int64_t q_numerator(const Element& x) const;
  /// Numerator of b(x, y) over level(), in [0, level()).
  std::int64_t b_numerator(const Element& x, const Element& y) const;
  Rational q(const Element& x) const;
  Rational b(const Element& x, const Element& y) const;

  /// Mixed-radix enumeration of the group, first coordinate fastest.
  Element element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Element& x) const;

  FiniteQuadraticForm negated() const;

  friend bool operator==(const FiniteQuadraticForm&, const FiniteQuadraticForm&) = default;

 private:
  std::vector<std::int64_t> factors_;
  std::int64_t level_ = 1;
  ElementMatrix numerators_;  // diagonal mod 2*level, off-diagonal mod level
};

FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);

/// Z-lattice of coordinate vectors spanned by `generators` and the relations;
/// square, upper echelon.
IntMatrix subgroup_lattice(const FiniteQuadraticForm& f, const ElementMatrix& generators);
Integer subgroup_order(const FiniteQuadraticForm& f, const ElementMatrix& generators);

/// S/T for subgroups T <= S, with a canonical (Smith) generating set.
class Subquotient {
 public:
  Subquotient(const FiniteQuadraticForm& parent, const ElementMatrix& outer, const ElementMatrix& inner);

  const FiniteQuadraticForm& form() const noexcept { return form_; }
  /// Column i is a parent element lifting generator i.
  const ElementMatrix& lifts() const noexcept { return lifts_; }
  /// Coordinates of a parent element lying in S. Throws NotSubgroup otherwise.
  Element coordinates(const Element& x) const;
  Element lift(const Element& c) const;

 private:
  FiniteQuadraticForm form_;
  ElementMatrix lifts_;
  RatMatrix coordinate_map_;
  std::vector<Index> keep_;
  std::vector<std::int64_t> parent_factors_;
};

/// A homomorphism given by the images of the source generators.
struct FormMap {
  ElementMatrix images;  // column i = image of generator i of the source

  Element apply(const FiniteQuadraticForm& target, const Element& x) const;
};

/// Checks that `map` is a well-defined isomorphism preserving q.
bool is_isometry(const FiniteQuadraticForm& source, const FiniteQuadraticForm& target, const FormMap& map);

/// Solves map(x) = y; nullopt when y is not in the image.
std::optional<Element> preimage(const FiniteQuadraticForm& source, const FiniteQuadraticForm& target,
                                const FormMap& map, const Element& y);

std::optional<FormMap> fqf_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b,
                                      std::uint64_t bound = kDefaultSearchBound);

/// The p-primary part with its inclusion.
Subquotient p_part(const FiniteQuadraticForm& f, std::int64_t p);
FiniteQuadraticForm p_part_form(const FiniteQuadraticForm& f, std::int64_t p);
std::vector<std::int64_t> primes_of(const FiniteQuadraticForm& f);

int min_generators(const FiniteQuadraticForm& f);
int min_generators(const FiniteQuadraticForm& f, std::int64_t p);

/// {x : b(x, h) = 0 for all h in H}.
ElementMatrix perp_subgroup(const FiniteQuadraticForm& f, const ElementMatrix& h);
bool is_isotropic(const FiniteQuadraticForm& f, const ElementMatrix& generators);
/// I^perp / I. Throws NotIsotropic.
Subquotient quotient(const FiniteQuadraticForm& f, const ElementMatrix& isotropic);
FiniteQuadraticForm quotient_form(const FiniteQuadraticForm& f, const ElementMatrix& isotropic);
/// The form restricted to a subgroup, with its inclusion.
Subquotient restriction(const FiniteQuadraticForm& f, const ElementMatrix& generators);

/// sign(q) in Z/8 from the Gauss sum. The 2-part is summed exactly in
/// Z[zeta_m] and must have at most `bound` elements (TooLarge); odd parts
/// are evaluated block-wise through their Jordan splitting.
int milgram_signature(const FiniteQuadraticForm& f, std::uint64_t bound = kDefaultSearchBound);
/// Exact direct Gauss sum over the whole group; NonWitt when it vanishes.
int gauss_sum_signature(const FiniteQuadraticForm& f, std::uint64_t bound = kDefaultSearchBound);

/// Some element of order 2 has q = +-1/2 mod 2. Throws NotTwoGroup.
bool splits_unit_block(const FiniteQuadraticForm& f);

struct JordanBlock {
  std::int64_t order;  // p^k
  std::int64_t unit;   // square-class representative of the Z_p-lattice entry
};

struct OddJordan {
  std::int64_t prime = 3;
  std::vector<JordanBlock> blocks;
  int exponent = 0;       // sum of k
  std::int64_t unit = 1;  // 1 or the smallest non-residue mod p
  /// discr K(q_p) = p^exponent * unit, as an integer.
  Integer discriminant() const;
};

/// Orthogonal splitting of the p-part into cyclic blocks, p odd.
OddJordan odd_jordan(const FiniteQuadraticForm& f, std::int64_t p);

struct TwoAdicLattice {
  int exponent = 0;       // 2-adic valuation of the discriminant
  std::int64_t unit = 1;  // odd unit part modulo 8
};

/// A Z_2-lattice of rank l(A_2) with discriminant form q_2, by greedy
/// splitting into rank-1 and rank-2 blocks. Throws Unsupported on a stall.
TwoAdicLattice two_adic_lattice(const FiniteQuadraticForm& f);

/// The discriminant form of an even lattice with the dual generators.
struct DiscriminantGroup {
  FiniteQuadraticForm form;
  RatMatrix generators;     // columns: dual vectors in lattice coordinates
  IntMatrix coordinate_map; // element = coordinate_map * (gram * v) mod factors

  /// Element of A_L represented by a dual vector v. Throws NotSubgroup if v
  /// is not in the dual lattice.
  Element element_of(const RatVector& v, const IntMatrix& gram) const;
};

DiscriminantGroup discriminant_group(const Lattice& l);
/// Throws NotEven.
FiniteQuadraticForm discriminant_form(const Lattice& l);

/// Even overlattice of L for an isotropic subgroup of A_L. Throws
/// NotIsotropic or NotSubgroup.
Overlattice overlattice_from_isotropic(const Lattice& l, const ElementMatrix& generators);

}  // namespace enriques
