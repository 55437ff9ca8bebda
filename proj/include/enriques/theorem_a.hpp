#pragma once

// Explicit primitive embeddings of Kummer-type transcendental lattices into
// N realizing every non-zero eps-label.
//
// Parameters per Picard rank:
//   20: (a,b,c)        T = [[4a,2b],[2b,4c]], a > 0, 4ac > b^2
//   19: (a,b,c,d,l,m)  T = [[4a,2d,2l],[2d,4b,2m],[2l,2m,4c]], a,b,c < 0, signature (2,1)
//   18: (a,b,c)        T = [[4a,2b],[2b,4c]] + U(2), a,c < 0 < b
//   17: (m)            T = U(2) + U(2) + <-4m>, m >= 1

#include "enriques/embedding.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace enriques {

using Params = std::vector<std::int64_t>;

/// The lattice T for the given parameters. Throws BadParams naming the
/// violated condition.
Lattice theorem_a_lattice(int rho, const Params& params);

/// All non-zero labels of length 22 - rho, in increasing binary order.
std::vector<Character> theorem_a_labels(int rho);

/// The embedding with pullback_epsilon = label. Throws BadParams or NotFound.
PrimitiveEmbedding theorem_a_embedding(int rho, const Params& params, const Character& label);

/// The distinct characters pulled back over all non-zero labels.
std::vector<Character> brauer_image_kummer(int rho, const Params& params);

/// The first `count` valid parameter sets with entries in [-bound, bound],
/// ordered by max |entry| and then lexicographically.
std::vector<Params> theorem_a_parameter_search(int rho, std::int64_t bound, std::size_t count);

struct Normalization {
  Params params;
  IntMatrix change;  // columns: the new basis in the coordinates of the input
};

/// Searches a base change with entries in [-bound, bound] bringing `t` into
/// the parameter shape for `rho`; nullopt when none is found.
std::optional<Normalization> normalize_theorem_a(int rho, const Lattice& t, std::int64_t bound = 10);

}  // namespace enriques
