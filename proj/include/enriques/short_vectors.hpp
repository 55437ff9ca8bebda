#pragma once

// Fincke-Pohst enumeration on definite lattices with exact LDL^T.

#include "enriques/lattice.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace enriques {

inline constexpr std::size_t kDefaultVectorCap = 1'000'000;

/// Calls `visit` on every nonzero x with x^T g x <= bound for a positive
/// definite g; stops early when `visit` returns false. Throws NotDefinite.
void enumerate_short_vectors(const IntMatrix& g, const Integer& bound,
                             const std::function<bool(const IntVector&)>& visit);

/// Canonical order: smaller L1 norm first, then lexicographically larger first.
bool graded_lex_less(const IntVector& a, const IntVector& b);

/// All v with (v^2) = n in canonical order, both signs listed. Throws
/// NotDefinite, or CapExceeded when there are more than `cap`.
std::vector<IntVector> vectors_of_norm(const Lattice& l, const Integer& n, std::size_t cap = kDefaultVectorCap);

/// Early-exit search for a (-2)-vector in a negative definite lattice.
bool has_minus_two_vector(const Lattice& l);

/// Vectors of E8(2) (columns, E8 coordinates) with Gram exactly `target` and
/// primitive span; the first hit in canonical order. Throws BadShape,
/// BadParams or NotFound.
IntMatrix find_tuple_in_e82(const IntMatrix& target);

}  // namespace enriques
