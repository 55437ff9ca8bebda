// Hand-checked values for the reference computations themselves.

#include "enriques/enriques_lattice.hpp"

#include "oracles.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace enriques;
using namespace enriques::testing;

TEST_CASE("naive shells") {
  const IntMatrix d4 = mat({{-2, 1, 0, 0}, {1, -2, 1, 1}, {0, 1, -2, 0}, {0, 1, 0, -2}});
  CHECK(oracle::vectors_of_norm_naive(d4, -2).size() == 24);
  CHECK(oracle::vectors_of_norm_naive(mat({{-2, 1}, {1, -2}}), -2).size() == 6);
  CHECK(oracle::vectors_of_norm_naive(mat({{-4, 0}, {0, -4}}), -4).size() == 4);
  CHECK(oracle::vectors_of_norm_naive(mat({{-4, 0}, {0, -4}}), -6).empty());
  const std::vector<std::int64_t> box = oracle::coordinate_box(mat({{-2, 0}, {0, -8}}), -8);
  CHECK(box == std::vector<std::int64_t>{2, 1});
}

TEST_CASE("floating Gauss sums") {
  CHECK(oracle::float_milgram_signature(discriminant_form(Lattice(mat({{2, -1}, {-1, 2}})))) == 2);
  CHECK(oracle::float_milgram_signature(discriminant_form(diag({2}))) == 1);
  CHECK(oracle::float_milgram_signature(discriminant_form(diag({-2}))) == 7);
  CHECK(oracle::float_milgram_signature(discriminant_form(standard_lattice("U2"))) == 0);
  CHECK(oracle::float_milgram_signature(discriminant_form(standard_lattice("M"))) == 0);
}

TEST_CASE("reduced forms and discriminants") {
  CHECK(oracle::reduced_forms_a_outer(-23) == std::vector<oracle::Form>{{1, 1, 6}, {2, -1, 3}, {2, 1, 3}});
  CHECK(oracle::reduced_forms_b_outer(-23) == oracle::reduced_forms_a_outer(-23));
  CHECK(oracle::reduced_forms_a_outer(-20).size() == 2);
  CHECK(oracle::reduced_forms_a_outer(-3).size() == 1);
  CHECK(oracle::is_fundamental(-3));
  CHECK(oracle::is_fundamental(-4));
  CHECK(oracle::is_fundamental(-8));
  CHECK_FALSE(oracle::is_fundamental(-12));
  CHECK_FALSE(oracle::is_fundamental(-16));
  CHECK_FALSE(oracle::is_fundamental(-2));
}

TEST_CASE("ray class orders by multiplication") {
  // h = 1 and (O/2)^x = F_4^x for D = -19; the units +-1 are trivial mod 2.
  CHECK(oracle::ray_class2_order_bruteforce(-19) == 3);
  CHECK(oracle::ray_class2_order_bruteforce(-7) == 1);
  CHECK(oracle::ray_class2_order_bruteforce(-3) == 1);
  CHECK(oracle::ray_class2_order_bruteforce(-4) == 1);
  CHECK(oracle::ray_class2_order_bruteforce(-8) == 2);
}

TEST_CASE("binary Gram enumeration") {
  const std::vector<IntMatrix> grams = oracle::even_binary_grams(12);
  auto has = [&](const IntMatrix& g) { return std::find(grams.begin(), grams.end(), g) != grams.end(); };
  CHECK(has(mat({{2, 1}, {1, 2}})));
  CHECK(has(mat({{2, 0}, {0, -2}})));
  CHECK(has(mat({{-2, 1}, {1, -4}})));
  CHECK(has(mat({{0, 1}, {1, 0}})));
  CHECK(has(mat({{0, 3}, {3, 4}})));
  CHECK_FALSE(has(mat({{0, 3}, {3, 6}})));
  for (const IntMatrix& g : grams) {
    const Integer det = determinant(g);
    CHECK(!det.is_zero());
    CHECK(abs(det) <= Integer(12));
    CHECK_FALSE(g(0, 0).is_odd());
    CHECK_FALSE(g(1, 1).is_odd());
  }
}

TEST_CASE("random generators") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const IntMatrix g = oracle::random_even_gram(rng, 1 + i % 5, 6);
    CHECK(g == g.transpose());
    CHECK(!determinant(g).is_zero());
    for (Index j = 0; j < g.rows(); ++j) CHECK_FALSE(g(j, j).is_odd());

    const Lattice neg(oracle::random_negative_definite_gram(rng, 1 + i % 4, 4));
    CHECK(neg.signature().plus == 0);

    const Lattice two(oracle::random_signature_2_gram(rng, 3 + i % 3, 4));
    CHECK(two.signature().plus == 2);
  }
}
