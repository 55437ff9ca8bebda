#include "enriques/fqf.hpp"
#include "enriques/arith.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace enriques;
using namespace enriques::testing;

namespace {

// Signature from a floating point Gauss sum; independent of the exact code.
int float_gauss_signature(const FiniteQuadraticForm& f) {
  std::complex<double> sum = 0;
  const std::uint64_t n = f.size();
  for (std::uint64_t i = 0; i < n; ++i) {
    const double q = f.q(f.element_at(i)).to_double();
    sum += std::polar(1.0, std::numbers::pi * q);
  }
  const double r = std::abs(sum);
  REQUIRE(std::abs(r - std::sqrt(static_cast<double>(n))) < 1e-6 * r);
  const double turns = std::arg(sum) / (2 * std::numbers::pi) * 8;
  const long s = std::lround(turns);
  REQUIRE(std::abs(turns - static_cast<double>(s)) < 1e-6);
  return static_cast<int>(((s % 8) + 8) % 8);
}

Lattice random_even_lattice(std::mt19937_64& rng, Index max_rank, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  while (true) {
    const Index n = 1 + static_cast<Index>(rng() % static_cast<std::uint64_t>(max_rank));
    IntMatrix g(n, n);
    for (Index i = 0; i < n; ++i) {
      g(i, i) = Integer(2 * (entry(rng) / 2));
      for (Index j = i + 1; j < n; ++j) g(i, j) = g(j, i) = Integer(entry(rng));
    }
    const Integer d = determinant(g);
    if (d.is_zero() || abs(d) > Integer(4000)) continue;
    return Lattice(g);
  }
}

FiniteQuadraticForm cyclic(std::int64_t d, long num, long den) {
  RatMatrix q(1, 1);
  q(0, 0) = rat(num, den);
  return FiniteQuadraticForm({d}, q);
}

}  // namespace

TEST_CASE("discriminant forms of small lattices") {
  CHECK(discriminant_form(Lattice(mat({{0, 1}, {1, 0}}))).is_trivial());

  const FiniteQuadraticForm u2 = discriminant_form(Lattice(mat({{0, 2}, {2, 0}})));
  REQUIRE(u2.factors() == std::vector<std::int64_t>{2, 2});
  CHECK(u2.q(elem({1, 0})) == rat(0));
  CHECK(u2.q(elem({0, 1})) == rat(0));
  CHECK(u2.q(elem({1, 1})) == rat(1));

  const FiniteQuadraticForm m4 = discriminant_form(Lattice(mat({{-4}})));
  REQUIRE(m4.factors() == std::vector<std::int64_t>{4});
  CHECK(m4.q(elem({1})) == rat(7, 4));

  CHECK(error_of([] { discriminant_form(Lattice(mat({{1}}))); }) == Errc::NotEven);
}

TEST_CASE("constructor validation") {
  CHECK(error_of([] { cyclic(2, 1, 3); }) == Errc::BadParams);
  CHECK(error_of([] { cyclic(1, 0, 1); }) == Errc::BadParams);
  // q(2g) = 4 * 1/4 = 1, not 0 mod 2.
  CHECK(error_of([] { cyclic(2, 1, 4); }) == Errc::BadParams);
  CHECK(cyclic(4, -1, 4).q(elem({1})) == rat(7, 4));
}

TEST_CASE("group operations and enumeration") {
  const FiniteQuadraticForm f = discriminant_form(diag({2, 12}));
  CHECK(f.order() == Integer(24));
  for (std::uint64_t i = 0; i < f.size(); ++i) CHECK(f.index_of(f.element_at(i)) == i);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const Element x = f.element_at(rng() % 24), y = f.element_at(rng() % 24);
    const std::int64_t n = static_cast<std::int64_t>(rng() % 13) - 6;
    // q(x+y) - q(x) - q(y) = 2 b(x,y) mod 2
    CHECK(mod_rational(f.q(f.add(x, y)) - f.q(x) - f.q(y) - rat(2) * f.b(x, y), rat(2)) == rat(0));
    CHECK(mod_rational(f.q(f.scale(x, n)) - rat(n * n) * f.q(x), rat(2)) == rat(0));
    CHECK(f.is_zero(f.scale(x, f.element_order(x))));
  }
}

TEST_CASE("p-parts and generator counts") {
  const FiniteQuadraticForm z12 = cyclic(12, 1, 12);
  CHECK(p_part_form(z12, 3).factors() == std::vector<std::int64_t>{3});
  CHECK(p_part_form(z12, 2).factors() == std::vector<std::int64_t>{4});
  CHECK(p_part_form(FiniteQuadraticForm(), 5).is_trivial());
  CHECK(p_part_form(z12, 5).is_trivial());
  CHECK(min_generators(FiniteQuadraticForm()) == 0);
  CHECK(min_generators(discriminant_form(diag({2, 4}))) == 2);
  CHECK(min_generators(discriminant_form(diag({2, 6})), 3) == 1);
  CHECK(min_generators(discriminant_form(diag({2, 6})), 2) == 2);
  // p-parts reassemble the form.
  const FiniteQuadraticForm f = discriminant_form(diag({6, 20, -12}));
  FiniteQuadraticForm sum;
  for (std::int64_t p : primes_of(f)) sum = direct_sum(sum, p_part_form(f, p));
  CHECK(fqf_isomorphic(f, sum).has_value());
}

TEST_CASE("Milgram signature examples") {
  CHECK(milgram_signature(FiniteQuadraticForm()) == 0);
  CHECK(milgram_signature(cyclic(2, 1, 2)) == 1);
  CHECK(milgram_signature(cyclic(2, 3, 2)) == 7);
  CHECK(milgram_signature(discriminant_form(Lattice(mat({{-2, 1}, {1, -2}})))) == 6);
  CHECK(milgram_signature(discriminant_form(diag({6}))) == 1);
  CHECK(error_of([] { milgram_signature(cyclic(2, 0, 1)); }) == Errc::NonWitt);
  RatMatrix big = zeros<Rational>(3, 3);
  for (Index i = 0; i < 3; ++i) big(i, i) = rat(1, 128);
  const FiniteQuadraticForm huge({128, 128, 128}, big);
  CHECK(error_of([&] { milgram_signature(huge, 1000); }) == Errc::TooLarge);
}

TEST_CASE("Milgram signature matches lattice signature and float Gauss sums") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const Lattice l = random_even_lattice(rng, 5, 8);
    const FiniteQuadraticForm f = discriminant_form(l);
    const int expected = ((l.signature().plus - l.signature().minus) % 8 + 8) % 8;
    CHECK(milgram_signature(f) == expected);
    CHECK(gauss_sum_signature(f) == expected);
    CHECK(float_gauss_signature(f) == expected);
  }
}

TEST_CASE("Milgram signature is additive") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const FiniteQuadraticForm a = discriminant_form(random_even_lattice(rng, 3, 6));
    const FiniteQuadraticForm b = discriminant_form(random_even_lattice(rng, 3, 6));
    CHECK(milgram_signature(direct_sum(a, b)) == (milgram_signature(a) + milgram_signature(b)) % 8);
  }
}

TEST_CASE("perp subgroups") {
  const FiniteQuadraticForm u2 = discriminant_form(Lattice(mat({{0, 2}, {2, 0}})));
  CHECK(subgroup_order(u2, perp_subgroup(u2, ElementMatrix(2, 0))) == Integer(4));
  ElementMatrix g1(2, 1);
  g1 << 1, 0;
  const ElementMatrix p = perp_subgroup(u2, g1);
  CHECK(subgroup_order(u2, p) == Integer(2));
  CHECK(subgroup_lattice(u2, p) == subgroup_lattice(u2, g1));

  const FiniteQuadraticForm z4 = cyclic(4, 7, 4);
  ElementMatrix two(1, 1);
  two << 2;
  CHECK(subgroup_lattice(z4, perp_subgroup(z4, two)) == subgroup_lattice(z4, two));
}

TEST_CASE("quotients by isotropic subgroups") {
  const FiniteQuadraticForm u2 = discriminant_form(Lattice(mat({{0, 2}, {2, 0}})));
  CHECK(quotient_form(u2, ElementMatrix(2, 0)) == u2);

  const FiniteQuadraticForm both = direct_sum(u2, u2.negated());
  ElementMatrix graph(4, 2);
  graph << 1, 0, 0, 1, 1, 0, 0, 1;
  CHECK(quotient_form(both, graph).is_trivial());

  const Lattice l = diag({2, 18});
  const FiniteQuadraticForm f = discriminant_form(l);
  // Element 6 * (v2 / 18) in the Z/18 factor.
  ElementMatrix i3 = ElementMatrix::Zero(f.rank(), 1);
  const DiscriminantGroup dg = discriminant_group(l);
  RatVector v(2);
  v << rat(0), rat(6, 18);
  i3.col(0) = dg.element_of(v, l.gram());
  const FiniteQuadraticForm q = quotient_form(f, i3);
  CHECK(q.order() == Integer(4));
  CHECK(fqf_isomorphic(q, discriminant_form(diag({2, 2}))).has_value());

  const Overlattice o = overlattice_from_isotropic(l, i3);
  CHECK(o.index == Integer(3));
  CHECK(fqf_isomorphic(discriminant_form(o.lattice), q).has_value());
  CHECK(error_of([&] {
    ElementMatrix g = ElementMatrix::Zero(f.rank(), 1);
    g.col(0) = dg.element_of(RatVector(v / rat(2)), l.gram());
    quotient_form(f, g);
  }) == Errc::NotIsotropic);
}

TEST_CASE("overlattices from isotropic subgroups") {
  const Lattice l = diag({4, 4});
  const DiscriminantGroup dg = discriminant_group(l);
  RatVector v(2);
  v << rat(1, 2), rat(1, 2);
  ElementMatrix gens(dg.form.rank(), 1);
  gens.col(0) = dg.element_of(v, l.gram());
  const Overlattice o = overlattice_from_isotropic(l, gens);
  CHECK(o.index == Integer(2));
  CHECK(o.lattice.determinant() == Integer(4));
  const Overlattice same = overlattice_from_isotropic(l, ElementMatrix(dg.form.rank(), 0));
  CHECK(same.index == Integer(1));
  CHECK(same.lattice == l);
}

TEST_CASE("isomorphism search") {
  CHECK(fqf_isomorphic(FiniteQuadraticForm(), FiniteQuadraticForm()).has_value());
  const FiniteQuadraticForm u2 = discriminant_form(Lattice(mat({{0, 2}, {2, 0}})));
  CHECK_FALSE(fqf_isomorphic(u2, discriminant_form(diag({2, 2}))).has_value());
  // diag(2,2,2,2) is not U(2)+U(2) but their forms on (Z/2)^4 ...
  const FiniteQuadraticForm a = discriminant_form(diag({2, 6}));
  const FiniteQuadraticForm b = discriminant_form(Lattice(mat({{2, 1}, {1, 2}})));
  CHECK_FALSE(fqf_isomorphic(a, b).has_value());
  // Same lattice in another basis.
  const Lattice l(mat({{4, 2, 0}, {2, 6, 2}, {0, 2, -8}}));
  const IntMatrix u = mat({{1, 1, 0}, {0, 1, 2}, {0, 0, 1}});
  const Lattice l2(IntMatrix(u.transpose() * l.gram() * u));
  const FiniteQuadraticForm fa = discriminant_form(l), fb = discriminant_form(l2);
  const auto m = fqf_isomorphic(fa, fb);
  REQUIRE(m.has_value());
  CHECK(is_isometry(fa, fb, *m));
  for (std::uint64_t i = 0; i < fb.size(); ++i) {
    const Element y = fb.element_at(i);
    const auto x = preimage(fa, fb, *m, y);
    REQUIRE(x.has_value());
    CHECK(m->apply(fb, *x) == y);
  }
  CHECK(error_of([&] { fqf_isomorphic(fa, fb, 4); }) == Errc::TooLarge);
}

TEST_CASE("odd index sublattices keep the 2-part") {
  const Lattice l(mat({{2, 1}, {1, 4}}));
  const Lattice sub(IntMatrix(mat({{3, 0}, {0, 1}}).transpose() * l.gram() * mat({{3, 0}, {0, 1}})));
  CHECK(fqf_isomorphic(p_part_form(discriminant_form(l), 7), p_part_form(discriminant_form(sub), 7)).has_value());
  CHECK(p_part_form(discriminant_form(sub), 2).is_trivial());
}

TEST_CASE("unit-block splitting") {
  CHECK(splits_unit_block(cyclic(2, 1, 2)));
  CHECK_FALSE(splits_unit_block(discriminant_form(Lattice(mat({{0, 2}, {2, 0}})))));
  CHECK(splits_unit_block(discriminant_form(diag({2, 4}))));
  CHECK_FALSE(splits_unit_block(cyclic(4, 1, 4)));
  CHECK(error_of([] { splits_unit_block(cyclic(3, 2, 3)); }) == Errc::NotTwoGroup);
}

TEST_CASE("odd Jordan splitting") {
  const OddJordan none = odd_jordan(discriminant_form(diag({4})), 3);
  CHECK(none.blocks.empty());
  CHECK(none.discriminant() == Integer(1));

  // A2: A = Z/3, b(g,g) = -2/3 = 1/3 mod 1, a square; the Z_3-entry is 3.
  const OddJordan a2 = odd_jordan(discriminant_form(Lattice(mat({{-2, 1}, {1, -2}}))), 3);
  REQUIRE(a2.blocks.size() == 1);
  CHECK(a2.blocks[0].order == 3);
  CHECK(a2.blocks[0].unit == 1);
  CHECK(a2.discriminant() == Integer(3));

  const OddJordan d = odd_jordan(discriminant_form(diag({36, 4})), 3);
  REQUIRE(d.blocks.size() == 1);
  CHECK(d.blocks[0].order == 9);
  CHECK(abs(d.discriminant()) == Integer(9));

  // <6> at 3: b = 2/3, non-residue class 2; <-6>: b = 1/3, class 1.
  CHECK(odd_jordan(discriminant_form(diag({6})), 3).unit == 2);
  CHECK(odd_jordan(discriminant_form(diag({-6})), 3).unit == 1);
  CHECK(odd_jordan(discriminant_form(diag({6, 6})), 3).exponent == 2);
  CHECK(error_of([] { odd_jordan(FiniteQuadraticForm(), 2); }) == Errc::BadPrime);
}

TEST_CASE("odd Jordan discriminants agree with the lattice at p") {
  // For an even lattice with l(A_p) = rank, K(q_p) is L (x) Z_p itself, so
  // the square classes of det and of the Jordan discriminant agree.
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int t = 0; t < 200 && checked < 40; ++t) {
    const Lattice l = random_even_lattice(rng, 3, 10);
    const FiniteQuadraticForm f = discriminant_form(l);
    for (std::int64_t p : primes_of(f)) {
      if (p == 2 || min_generators(f, p) != l.rank()) continue;
      const OddJordan j = odd_jordan(f, p);
      Integer det = l.determinant();
      while ((det % Integer(p)).is_zero()) det = det / Integer(p);
      const int ls = legendre(mod_floor(det, Integer(p)).to_int64(), p);
      CHECK((ls == 1) == (j.unit == 1));
      ++checked;
    }
  }
  CHECK(checked > 5);
}

TEST_CASE("2-adic lattices of 2-parts") {
  // <2> (x) Z_2: exponent 1, unit 1.
  const TwoAdicLattice t1 = two_adic_lattice(discriminant_form(diag({2})));
  CHECK(t1.exponent == 1);
  CHECK(t1.unit == 1);
  const TwoAdicLattice t2 = two_adic_lattice(discriminant_form(Lattice(mat({{0, 2}, {2, 0}}))));
  CHECK(t2.exponent == 2);
  CHECK(t2.unit == 7);
  const TwoAdicLattice t3 = two_adic_lattice(discriminant_form(diag({-4, 12})));
  CHECK(t3.exponent == 4);
  CHECK(t3.unit == mod(-3, 8));
}
