#include "enriques/enriques_lattice.hpp"
#include "enriques/short_vectors.hpp"
#include "enriques/theorem_a.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <set>

using namespace enriques;
using namespace enriques::testing;

namespace {

IntVector nv(long e, long f, long h, long k) { return vec({e, f, h, k, 0, 0, 0, 0, 0, 0, 0, 0}); }

// Every label at the given parameters: exact Gram, primitive, requested
// eps-pullback, twice-even complement, inside the mod-4 bound.
void check_all_labels(int rho, const Params& p) {
  const Lattice t = theorem_a_lattice(rho, p);
  const CharacterSubspace bound = im_phi_upper_bound(t);
  for (const Character& label : theorem_a_labels(rho)) {
    CAPTURE(label.to_string());
    const PrimitiveEmbedding emb = theorem_a_embedding(rho, p, label);
    CHECK(IntMatrix(emb.images.transpose() * enriques_lattice().gram() * emb.images) == t.gram());
    CHECK(primitive_closure(enriques_lattice(), emb.images).index == Integer(1));
    CHECK(pullback_epsilon(emb) == label);
    CHECK(is_twice_even(complement_in_n(emb).lattice));
    CHECK(bound.contains(label));
  }
}

}  // namespace

TEST_CASE("parameter shapes") {
  CHECK(theorem_a_lattice(20, {1, 0, 1}).gram() == mat({{4, 0}, {0, 4}}));
  CHECK(theorem_a_lattice(17, {2}).gram() ==
        mat({{0, 2, 0, 0, 0}, {2, 0, 0, 0, 0}, {0, 0, 0, 2, 0}, {0, 0, 2, 0, 0}, {0, 0, 0, 0, -8}}));
  CHECK(theorem_a_lattice(18, {-1, 3, -1}).signature() == Signature{2, 2});
  CHECK(error_of([] { theorem_a_lattice(20, {1, 3, 1}); }) == Errc::BadParams);
  CHECK(error_of([] { theorem_a_lattice(20, {-1, 0, -1}); }) == Errc::BadParams);
  CHECK(error_of([] { theorem_a_lattice(18, {1, 3, -1}); }) == Errc::BadParams);
  CHECK(error_of([] { theorem_a_lattice(18, {-1, -3, -1}); }) == Errc::BadParams);
  CHECK(error_of([] { theorem_a_lattice(17, {0}); }) == Errc::BadParams);
  CHECK(error_of([] { theorem_a_lattice(19, {1, -1, -1, 0, 0, 0}); }) == Errc::BadParams);
  CHECK(error_of([] { theorem_a_lattice(16, {1}); }) == Errc::BadParams);
  CHECK(error_of([] { theorem_a_lattice(20, {1, 0}); }) == Errc::BadParams);
  try {
    theorem_a_lattice(20, {1, 3, 1});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("4ac > b^2") != std::string::npos);
  }
}

TEST_CASE("labels") {
  CHECK(theorem_a_labels(20).size() == 3);
  CHECK(theorem_a_labels(19).size() == 7);
  CHECK(theorem_a_labels(18).size() == 15);
  CHECK(theorem_a_labels(17).size() == 31);
  CHECK(theorem_a_labels(20)[0].to_string() == "0,1");
  CHECK(theorem_a_labels(20)[2].to_string() == "1,1");
}

TEST_CASE("explicit images") {
  const PrimitiveEmbedding a = theorem_a_embedding(20, {1, 0, 1}, parse_character("1,0"));
  CHECK(a.images.col(0) == nv(1, 2, 0, 0));
  CHECK(a.images.col(1) == nv(0, 0, 1, 1));

  const PrimitiveEmbedding b = theorem_a_embedding(18, {-1, 3, -1}, parse_character("1,0,0,0"));
  CHECK(b.images.col(0) == nv(1, -2, 0, 0));
  CHECK(b.images.col(1).head(4) == vec({0, 6, 0, 0}));
  CHECK(b.images.col(1).tail(8) == vec({1, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(b.images.col(2) == nv(0, 0, 1, 0));
  CHECK(b.images.col(3) == nv(0, 0, 0, 1));
}

TEST_CASE("the literal rank-5 formula for label (1,0,1,0,0) is not primitive") {
  // (e, 2f+k, e-h, -k, w): the sum of the second and fourth image is 2f.
  IntMatrix images(12, 5);
  IntVector w = nv(0, 0, 0, 0);
  w(n_index::eps0) = Integer(1);
  images << nv(1, 0, 0, 0), nv(0, 2, 0, 1), nv(1, 0, -1, 0), nv(0, 0, 0, -1), w;
  const Lattice t = theorem_a_lattice(17, {1});
  CHECK(IntMatrix(images.transpose() * enriques_lattice().gram() * images) == t.gram());
  CHECK(primitive_closure(enriques_lattice(), images).index == Integer(2));
  CHECK(error_of([&] { embedding_from_images(t, images); }) == Errc::NotPrimitive);

  const PrimitiveEmbedding fixed = theorem_a_embedding(17, {1}, parse_character("1,0,1,0,0"));
  const NComplement c = complement_in_n(fixed);
  CHECK(c.lattice.rank() == 7);
  CHECK(c.lattice.signature() == Signature{0, 7});
}

TEST_CASE("all labels, rank 20") {
  for (const Params& p : {Params{1, 0, 1}, Params{1, 1, 1}, Params{2, -3, 5}, Params{7, 10, 4}}) check_all_labels(20, p);
}

TEST_CASE("all labels, rank 19") {
  const std::vector<Params> found = theorem_a_parameter_search(19, 3, 3);
  REQUIRE(found.size() == 3);
  for (const Params& p : found) check_all_labels(19, p);
  // With b, c < 0 and m = 0 the span of y, t is negative definite, so the
  // signature can never be (2,1).
  for (const Params& p : theorem_a_parameter_search(19, 4, 200)) CHECK(p[5] != 0);
  CHECK(error_of([] { theorem_a_lattice(19, {-1, -1, -1, 3, 3, 0}); }) == Errc::BadParams);
}

TEST_CASE("all labels, rank 18") {
  for (const Params& p : {Params{-1, 3, -1}, Params{-1, 5, -2}, Params{-3, 4, -1}}) check_all_labels(18, p);
}

TEST_CASE("all labels, rank 17") {
  for (std::int64_t m : {1, 2, 3}) check_all_labels(17, {m});
}

TEST_CASE("Brauer image of Kummer-type lattices") {
  const std::vector<Character> c20 = brauer_image_kummer(20, {1, 0, 1});
  CHECK(c20.size() == 3);
  CHECK(std::set<Character>(c20.begin(), c20.end()) ==
        std::set<Character>{parse_character("1,0"), parse_character("0,1"), parse_character("1,1")});
  CHECK(brauer_image_kummer(18, {-1, 3, -1}).size() == 15);
  CHECK(brauer_image_kummer(17, {1}).size() == 31);
}

TEST_CASE("parameter search") {
  const std::vector<Params> p18 = theorem_a_parameter_search(18, 3, 5);
  CHECK(p18 == std::vector<Params>{{-2, 3, -1}, {-1, 3, -2}, {-1, 3, -1}});
  for (const Params& p : theorem_a_parameter_search(18, 5, 20)) CHECK_NOTHROW(theorem_a_lattice(18, p));
  CHECK(theorem_a_parameter_search(17, 5, 3) == std::vector<Params>{{1}, {2}, {3}});
  CHECK(theorem_a_parameter_search(20, 1, 10).front() == Params{1, -1, 1});
}

TEST_CASE("normalization by base change") {
  // diag(4,4) written in the basis (x, x+y).
  const Lattice t(mat({{4, 4}, {4, 8}}));
  const auto n = normalize_theorem_a(20, t);
  REQUIRE(n.has_value());
  const IntMatrix g = n->change.transpose() * t.gram() * n->change;
  CHECK(g == theorem_a_lattice(20, n->params).gram());
  CHECK(abs(determinant(n->change)) == Integer(1));

  const Lattice t17 = theorem_a_lattice(17, {2});
  const auto n17 = normalize_theorem_a(17, t17);
  REQUIRE(n17.has_value());
  CHECK(n17->params == Params{2});

  CHECK_FALSE(normalize_theorem_a(20, Lattice(mat({{2, 1}, {1, 2}}))).has_value());
}
