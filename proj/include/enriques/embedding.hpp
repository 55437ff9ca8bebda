#pragma once

// Primitive embeddings T -> N, the pulled-back character eps, complements and
// the mod-4 bound on the characters coming from Enriques quotients.

#include "enriques/lattice.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace enriques {

/// An F_2-valued functional given by its values on a basis.
struct Character {
  std::vector<std::uint8_t> values;

  bool is_zero() const;
  std::string to_string() const;  // "1,0,1"
  friend auto operator<=>(const Character&, const Character&) = default;
};

/// Parses "1,0,1". Throws Parse.
Character parse_character(const std::string& text);

struct PrimitiveEmbedding {
  Lattice source;
  IntMatrix images;  // 12 x rank, columns in N-coordinates
};

/// Validates Gram preservation and primitivity. Throws BadShape,
/// GramMismatch or NotPrimitive (with the index).
PrimitiveEmbedding embedding_from_images(const Lattice& source, const IntMatrix& images);

Character pullback_epsilon(const PrimitiveEmbedding& emb);

struct NComplement {
  Lattice lattice;
  IntMatrix basis;  // 12 x (12 - rank), columns in N-coordinates
};

/// Saturated orthogonal complement of the image. Throws DegenerateComplement.
NComplement complement_in_n(const PrimitiveEmbedding& emb);

/// {alpha : alpha(v) = 0 whenever (v^2) = 2 mod 4}, a subspace of
/// Hom(T, Z/2) given by a basis in echelon form.
struct CharacterSubspace {
  int ambient_rank = 0;
  std::vector<Character> basis;

  std::uint64_t size() const { return std::uint64_t{1} << basis.size(); }
  bool is_full() const { return static_cast<int>(basis.size()) == ambient_rank; }
  bool contains(const Character& c) const;
  std::vector<Character> elements() const;
};

/// Throws NotEven, RankTooLarge (> 20).
CharacterSubspace im_phi_upper_bound(const Lattice& t);

}  // namespace enriques
