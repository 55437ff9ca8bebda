#pragma once

// The fixed lattices U, U(2), E8, E8(2), M = U(2)+E8(2), N = U+U(2)+E8(2) and
// the K3 lattice, with the character eps on N.
//
// Basis of N: e, f (U), h, k (U(2)), eps_1..eps_8 (E8(2)).
// Basis of the K3 lattice: E8_a, E8_b, U_1, U_2, U_3.

#include "enriques/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace enriques {

enum class StandardTag { U, U2, E8, E82, M, N, Lambda };

std::optional<StandardTag> parse_tag(std::string_view name);
std::string_view tag_name(StandardTag tag);

/// Negated Cartan matrix of E8 in Bourbaki numbering.
IntMatrix e8_gram();
Lattice standard_lattice(StandardTag tag);
/// Throws UnknownTag.
Lattice standard_lattice(std::string_view name);

const Lattice& enriques_lattice();

namespace n_index {
inline constexpr Index e = 0, f = 1, h = 2, k = 3, eps0 = 4;
}

/// Coordinates of a basis vector of N.
IntVector n_basis(Index i);

/// (x.(e+f)) mod 2 for x in N. Throws BadLength.
int epsilon(const IntVector& x);
/// eps on the twelve basis vectors.
IntVector epsilon_values();

/// The involution of the K3 lattice swapping E8_a+U_1 with E8_b+U_2 and
/// negating U_3.
IntMatrix iota();

struct Eigenlattices {
  Lattice plus, minus;
  IntMatrix plus_basis, minus_basis;  // columns in K3-lattice coordinates
};
Eigenlattices iota_eigenlattices();

/// s_v(x) = x + (x.v) v for a (-2)-vector v. Throws BadParams otherwise.
IntMatrix reflection(const Lattice& l, const IntVector& v);
/// E(u,a)(x) = x + (x.u)a - (x.a)u - (a^2/2)(x.u)u for isotropic u, a in u^perp.
IntMatrix eichler_transvection(const Lattice& l, const IntVector& u, const IntVector& a);

/// Product of `length` reflections and transvections of N chosen from `seed`.
IntMatrix isometry_of_n(std::uint64_t seed, int length);

}  // namespace enriques
