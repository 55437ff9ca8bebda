#include "enriques/enriques_lattice.hpp"

#include "enriques/errors.hpp"

#include <array>
#include <random>
#include <string>

namespace enriques {

namespace {

constexpr std::array<std::pair<StandardTag, std::string_view>, 7> kNames{{
    {StandardTag::U, "U"},
    {StandardTag::U2, "U2"},
    {StandardTag::E8, "E8"},
    {StandardTag::E82, "E82"},
    {StandardTag::M, "M"},
    {StandardTag::N, "N"},
    {StandardTag::Lambda, "Lambda"},
}};

IntMatrix hyperbolic(long scale) {
  IntMatrix g = zeros<Integer>(2, 2);
  g(0, 1) = g(1, 0) = Integer(scale);
  return g;
}

IntMatrix block_sum(std::initializer_list<IntMatrix> blocks) {
  Index n = 0;
  for (const IntMatrix& b : blocks) n += b.rows();
  IntMatrix out = zeros<Integer>(n, n);
  Index at = 0;
  for (const IntMatrix& b : blocks) {
    out.block(at, at, b.rows(), b.rows()) = b;
    at += b.rows();
  }
  return out;
}

IntMatrix scaled(const IntMatrix& m, long s) { return IntMatrix(m * Integer(s)); }

// Uniform in [lo, hi] from raw generator output; the distribution classes
// are implementation defined.
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

std::optional<StandardTag> parse_tag(std::string_view name) {
  for (const auto& [tag, n] : kNames)
    if (n == name) return tag;
  return std::nullopt;
}

std::string_view tag_name(StandardTag tag) {
  for (const auto& [t, n] : kNames)
    if (t == tag) return n;
  return "?";
}

IntMatrix e8_gram() {
  IntMatrix g = zeros<Integer>(8, 8);
  for (Index i = 0; i < 8; ++i) g(i, i) = Integer(-2);
  constexpr std::array<std::pair<int, int>, 7> edges{{{1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}}};
  for (const auto& [a, b] : edges) g(a - 1, b - 1) = g(b - 1, a - 1) = Integer(1);
  return g;
}

Lattice standard_lattice(StandardTag tag) {
  const IntMatrix e8 = e8_gram();
  switch (tag) {
    case StandardTag::U: return Lattice(hyperbolic(1));
    case StandardTag::U2: return Lattice(hyperbolic(2));
    case StandardTag::E8: return Lattice(e8);
    case StandardTag::E82: return Lattice(scaled(e8, 2));
    case StandardTag::M: return Lattice(block_sum({hyperbolic(2), scaled(e8, 2)}));
    case StandardTag::N: return Lattice(block_sum({hyperbolic(1), hyperbolic(2), scaled(e8, 2)}));
    case StandardTag::Lambda:
      return Lattice(block_sum({e8, e8, hyperbolic(1), hyperbolic(1), hyperbolic(1)}));
  }
  fail(Errc::UnknownTag, "unknown lattice tag");
}

Lattice standard_lattice(std::string_view name) {
  const auto tag = parse_tag(name);
  if (!tag) fail(Errc::UnknownTag, "unknown lattice name '" + std::string(name) + "'");
  return standard_lattice(*tag);
}

const Lattice& enriques_lattice() {
  static const Lattice n = standard_lattice(StandardTag::N);
  return n;
}

IntVector n_basis(Index i) {
  IntVector v = IntVector::Constant(12, Integer(0));
  v(i) = Integer(1);
  return v;
}

int epsilon(const IntVector& x) {
  if (x.size() != 12) fail(Errc::BadLength, "vectors of N have 12 coordinates, got " + std::to_string(x.size()));
  // (x.(e+f)) = x_f + x_e.
  return (x(n_index::e) + x(n_index::f)).is_odd() ? 1 : 0;
}

IntVector epsilon_values() {
  const IntVector ef = n_basis(n_index::e) + n_basis(n_index::f);
  IntVector v = enriques_lattice().gram() * ef;
  for (Index i = 0; i < v.size(); ++i) v(i) = mod_floor(v(i), Integer(2));
  return v;
}

IntMatrix iota() {
  IntMatrix m = zeros<Integer>(22, 22);
  // E8_a (0..7) + U_1 (16,17) <-> E8_b (8..15) + U_2 (18,19)
  for (Index i = 0; i < 8; ++i) {
    m(8 + i, i) = Integer(1);
    m(i, 8 + i) = Integer(1);
  }
  for (Index i = 0; i < 2; ++i) {
    m(18 + i, 16 + i) = Integer(1);
    m(16 + i, 18 + i) = Integer(1);
  }
  m(20, 20) = m(21, 21) = Integer(-1);
  return m;
}

Eigenlattices iota_eigenlattices() {
  const Lattice lambda = standard_lattice(StandardTag::Lambda);
  const IntMatrix i = iota();
  const IntMatrix id = identity<Integer>(22);
  const IntMatrix plus = integer_kernel(IntMatrix(i - id));
  const IntMatrix minus = integer_kernel(IntMatrix(i + id));
  return Eigenlattices{Lattice(IntMatrix(plus.transpose() * lambda.gram() * plus)),
                       Lattice(IntMatrix(minus.transpose() * lambda.gram() * minus)), plus, minus};
}

IntMatrix reflection(const Lattice& l, const IntVector& v) {
  if (l.norm(v) != Integer(-2)) fail(Errc::BadParams, "reflections need a (-2)-vector");
  const IntVector gv = l.gram() * v;
  return IntMatrix(identity<Integer>(l.rank()) + v * gv.transpose());
}

IntMatrix eichler_transvection(const Lattice& l, const IntVector& u, const IntVector& a) {
  if (!l.norm(u).is_zero()) fail(Errc::BadParams, "transvection vector u must be isotropic");
  if (!l.product(u, a).is_zero()) fail(Errc::BadParams, "transvection vector a must be orthogonal to u");
  const Integer a2 = l.norm(a);
  if (a2.is_odd()) fail(Errc::BadParams, "transvection vector a must have even norm");
  const IntVector gu = l.gram() * u;
  const IntVector ga = l.gram() * a;
  return IntMatrix(identity<Integer>(l.rank()) + a * gu.transpose() - u * ga.transpose() -
                   (a2 / Integer(2)) * u * gu.transpose());
}

IntMatrix isometry_of_n(std::uint64_t seed, int length) {
  if (length < 0) fail(Errc::BadParams, "length must be non-negative");
  const Lattice& n = enriques_lattice();
  std::mt19937_64 rng(seed);
  IntMatrix g = identity<Integer>(12);
  for (int step = 0; step < length; ++step) {
    // A random vector w of U(2)+E8(2) with small coordinates.
    IntVector w = IntVector::Constant(12, Integer(0));
    for (Index i = n_index::h; i < 12; ++i) w(i) = Integer(draw(rng, -1, 1));
    IntMatrix s;
    switch (rng() % 3) {
      case 0: {
        // v = e + b f + w with v^2 = 2b + w^2 = -2.
        IntVector v = w;
        v(n_index::e) = Integer(1);
        v(n_index::f) = (Integer(-2) - n.norm(w)) / Integer(2);
        if (rng() % 2) std::swap(v(n_index::e), v(n_index::f));
        s = reflection(n, v);
        break;
      }
      case 1:
        s = reflection(n, IntVector(n_basis(n_index::e) - n_basis(n_index::f)));
        break;
      default: {
        const Index ui = (rng() % 2) ? n_index::e : n_index::f;
        // a = c u + w lies in u^perp.
        IntVector a = w;
        a(ui) = Integer(draw(rng, -2, 2));
        s = eichler_transvection(n, n_basis(ui), a);
        break;
      }
    }
    g = s * g;
  }
  return g;
}

}  // namespace enriques
