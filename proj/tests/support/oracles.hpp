#pragma once

// Slow, independent reference computations used to pin down expected values.
// None of these share code paths with the library routines they check.

#include "enriques/fqf.hpp"
#include "enriques/lattice.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace enriques::oracle {

/// Coordinate bound |x_i| <= sqrt(|n| * (G^-1)_ii) for a definite Gram,
/// evaluated in floating point and rounded up.
std::vector<std::int64_t> coordinate_box(const IntMatrix& gram, std::int64_t n);

/// Every x in the box with x^T G x = n, by exhaustive search.
std::vector<IntVector> vectors_of_norm_naive(const IntMatrix& gram, std::int64_t n);

/// Gauss sum of exp(pi i q(x)) in double precision; arg / (pi/4) rounded.
int float_milgram_signature(const FiniteQuadraticForm& f);

using Form = std::array<std::int64_t, 3>;

/// Reduced forms of discriminant D scanning a outermost.
std::vector<Form> reduced_forms_a_outer(std::int64_t disc);
/// Same set, scanning b outermost over |b| <= sqrt(|D|/3).
std::vector<Form> reduced_forms_b_outer(std::int64_t disc);

bool is_fundamental(std::int64_t disc);

/// |Cl_2(E)| = h * |(O/2)^x| / |image of O^x|, with (O/2)^x found by
/// multiplying out all four residues a + b w in O = Z[w].
std::int64_t ray_class2_order_bruteforce(std::int64_t disc);

/// Even binary Grams [[2a,b],[b,2c]] with 0 < |det| <= max_det: every
/// Lagrange-reduced triple (|b| <= |a| <= |c|, a != 0) plus the isotropic
/// shapes a = 0, 0 <= c < b. Every class appears at least once.
std::vector<IntMatrix> even_binary_grams(std::int64_t max_det);

/// Random symmetric matrix with even diagonal and non-zero determinant,
/// entries in [-range, range].
IntMatrix random_even_gram(std::mt19937_64& rng, Index rank, int range);
/// Random negative definite even Gram, entries in [-range, range].
IntMatrix random_negative_definite_gram(std::mt19937_64& rng, Index rank, int range);
/// Random even Gram of signature (2, rank - 2).
IntMatrix random_signature_2_gram(std::mt19937_64& rng, Index rank, int range);

}  // namespace enriques::oracle
