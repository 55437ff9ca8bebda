#include "enriques/embedding.hpp"

#include "enriques/enriques_lattice.hpp"
#include "enriques/errors.hpp"

#include <sstream>

namespace enriques {

bool Character::is_zero() const {
  for (auto v : values)
    if (v) return false;
  return true;
}

std::string Character::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += values[i] ? '1' : '0';
  }
  return s;
}

Character parse_character(const std::string& text) {
  Character c;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "0") c.values.push_back(0);
    else if (item == "1") c.values.push_back(1);
    else fail(Errc::Parse, "label entries must be 0 or 1, got '" + item + "'");
  }
  if (c.values.empty()) fail(Errc::Parse, "empty label");
  return c;
}

PrimitiveEmbedding embedding_from_images(const Lattice& source, const IntMatrix& images) {
  if (images.rows() != 12 || images.cols() != source.rank()) {
    fail(Errc::BadShape, "images must be a 12 x " + std::to_string(source.rank()) + " matrix");
  }
  const IntMatrix gram = images.transpose() * enriques_lattice().gram() * images;
  if (gram != source.gram()) fail(Errc::GramMismatch, "images do not reproduce the source Gram matrix");
  const Closure c = primitive_closure(enriques_lattice(), images);
  if (c.index != Integer(1)) fail(Errc::NotPrimitive, "image has index " + c.index.to_string() + " in its saturation");
  return PrimitiveEmbedding{source, images};
}

Character pullback_epsilon(const PrimitiveEmbedding& emb) {
  Character c;
  for (Index j = 0; j < emb.images.cols(); ++j) c.values.push_back(static_cast<std::uint8_t>(epsilon(emb.images.col(j))));
  return c;
}

NComplement complement_in_n(const PrimitiveEmbedding& emb) {
  Complement c = orthogonal_complement(enriques_lattice(), emb.images);
  return NComplement{c.module.to_lattice(), std::move(c.basis)};
}

bool CharacterSubspace::contains(const Character& c) const {
  if (static_cast<int>(c.values.size()) != ambient_rank) return false;
  std::vector<std::uint8_t> v = c.values;
  // Basis rows are in reduced echelon form with distinct leading positions.
  for (const Character& b : basis) {
    std::size_t lead = 0;
    while (!b.values[lead]) ++lead;
    if (v[lead])
      for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= b.values[i];
  }
  for (auto x : v)
    if (x) return false;
  return true;
}

std::vector<Character> CharacterSubspace::elements() const {
  std::vector<Character> out;
  for (std::uint64_t mask = 0; mask < size(); ++mask) {
    Character c{std::vector<std::uint8_t>(static_cast<std::size_t>(ambient_rank), 0)};
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (mask >> j & 1)
        for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] ^= basis[j].values[i];
    out.push_back(std::move(c));
  }
  return out;
}

CharacterSubspace im_phi_upper_bound(const Lattice& t) {
  if (!t.is_even()) fail(Errc::NotEven, "transcendental lattices are even");
  const int r = static_cast<int>(t.rank());
  if (r > 20) fail(Errc::RankTooLarge, "rank " + std::to_string(r) + " exceeds 20");
  std::vector<std::vector<int>> g(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g[i][j] = static_cast<int>(mod_floor(t.gram()(i, j), Integer(4)).to_int64());

  // Constraint vectors v (as bit masks) spanning {v : v^2 = 2 mod 4}; kept
  // in echelon form by leading bit.
  std::vector<std::uint32_t> pivots(static_cast<std::size_t>(r), 0);
  auto insert = [&](std::uint32_t v) {
    for (int bit = r - 1; bit >= 0; --bit) {
      if (!(v >> bit & 1)) continue;
      if (!pivots[bit]) {
        pivots[bit] = v;
        return;
      }
      v ^= pivots[bit];
    }
  };
  // Gray-code walk over (Z/2)^r keeping gv = G v mod 4 and q = v^2 mod 4.
  std::vector<int> gv(static_cast<std::size_t>(r), 0);
  std::uint32_t v = 0;
  int q = 0;
  for (std::uint32_t step = 1; step < (std::uint32_t{1} << r); ++step) {
    const int i = __builtin_ctz(step);
    const int sign = (v >> i & 1) ? -1 : 1;  // toggling bit i adds or removes e_i
    // (v + s e_i)^2 = v^2 + 2 s (v.e_i) + e_i^2
    q = ((q + 2 * sign * gv[i] + g[i][i]) % 4 + 4) % 4;
    for (int j = 0; j < r; ++j) gv[j] = ((gv[j] + sign * g[j][i]) % 4 + 4) % 4;
    v ^= std::uint32_t{1} << i;
    if (q == 2) insert(v);
  }
  // Annihilator of the constraint span.
  std::vector<std::uint32_t> rows;
  for (int bit = r - 1; bit >= 0; --bit)
    if (pivots[bit]) rows.push_back(pivots[bit]);
  // Reduced echelon form.
  std::vector<int> lead;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    const int l = 31 - __builtin_clz(rows[a]);
    lead.push_back(l);
    for (std::size_t b = 0; b < rows.size(); ++b)
      if (b != a && (rows[b] >> l & 1)) rows[b] ^= rows[a];
  }
  std::vector<bool> is_lead(static_cast<std::size_t>(r), false);
  for (int l : lead) is_lead[l] = true;
  CharacterSubspace out;
  out.ambient_rank = r;
  for (int free = 0; free < r; ++free) {
    if (is_lead[free]) continue;
    std::vector<std::uint8_t> alpha(static_cast<std::size_t>(r), 0);
    alpha[free] = 1;
    for (std::size_t a = 0; a < rows.size(); ++a)
      if (rows[a] >> free & 1) alpha[lead[a]] = 1;
    out.basis.push_back(Character{std::move(alpha)});
  }
  // Echelon by first nonzero coordinate for contains().
  std::vector<Character>& b = out.basis;
  for (std::size_t col = 0, row = 0; col < static_cast<std::size_t>(r) && row < b.size(); ++col) {
    std::size_t p = row;
    while (p < b.size() && !b[p].values[col]) ++p;
    if (p == b.size()) continue;
    std::swap(b[row], b[p]);
    for (std::size_t o = 0; o < b.size(); ++o)
      if (o != row && b[o].values[col])
        for (std::size_t i = 0; i < b[o].values.size(); ++i) b[o].values[i] ^= b[row].values[i];
    ++row;
  }
  return out;
}

}  // namespace enriques
