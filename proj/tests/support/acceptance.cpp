#include "acceptance.hpp"

#include "oracles.hpp"

#include "enriques/arith.hpp"
#include "enriques/class_group.hpp"
#include "enriques/enriques_lattice.hpp"
#include "enriques/errors.hpp"
#include "enriques/nikulin.hpp"
#include "enriques/short_vectors.hpp"
#include "enriques/theorem_a.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace enriques::acceptance {

namespace {

using std::int64_t;

struct Outcome {
  bool passed = true;
  std::string detail;

  // Records the first failure only.
  void require(bool ok, const std::string& what) {
    if (ok || !passed) {
      passed = passed && ok;
      return;
    }
    passed = false;
    detail = what;
  }
};

// Embeddings built by criteria 1 and 2, reused by criteria 5 and 12.
struct TheoremARun {
  std::vector<Lattice> rho20_lattices;
  std::vector<PrimitiveEmbedding> embeddings;
};

struct Context {
  std::uint64_t seed;
  const Fixtures& fixtures;
  TheoremARun theorem_a;
};

std::string str(const Params& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

// ------------------------------------------------------------ criteria

Outcome rho20_table(Context& ctx) {
  Outcome out;
  std::mt19937_64 rng(ctx.seed);
  std::uniform_int_distribution<int64_t> coef(-10, 10);
  const std::set<Character> expected = {parse_character("1,0"), parse_character("0,1"), parse_character("1,1")};
  int done = 0;
  while (done < 25) {
    const int64_t a = coef(rng), b = coef(rng), c = coef(rng);
    if (a <= 0 || 4 * a * c <= b * b) continue;
    ++done;
    const Params p = {a, b, c};
    ctx.theorem_a.rho20_lattices.push_back(theorem_a_lattice(20, p));
    std::set<Character> seen;
    for (const Character& label : theorem_a_labels(20)) {
      try {
        const PrimitiveEmbedding emb = theorem_a_embedding(20, p, label);
        const Character got = pullback_epsilon(emb);
        out.require(got == label, "(" + str(p) + ") label " + label.to_string() + " pulled back to " + got.to_string());
        seen.insert(got);
        ctx.theorem_a.embeddings.push_back(emb);
      } catch (const Error& e) {
        out.require(false, "(" + str(p) + ") label " + label.to_string() + ": " + e.what());
      }
    }
    out.require(seen == expected, "(" + str(p) + ") labels are not {(1,0),(0,1),(1,1)}");
  }
  if (out.passed) out.detail = "25 parameter sets, 75 embeddings";
  return out;
}

Outcome higher_rho(Context& ctx) {
  Outcome out;
  const std::map<int, int64_t> bounds = {{19, 3}, {18, 3}, {17, 5}};
  std::size_t total = 0;
  for (const auto& [rho, bound] : bounds) {
    const std::vector<Params> sets = theorem_a_parameter_search(rho, bound, 3);
    out.require(sets.size() >= 3, "rho = " + std::to_string(rho) + ": fewer than 3 parameter sets");
    for (const Params& p : sets) {
      std::set<Character> seen;
      const std::vector<Character> labels = theorem_a_labels(rho);
      for (const Character& label : labels) {
        try {
          const PrimitiveEmbedding emb = theorem_a_embedding(rho, p, label);
          const Character got = pullback_epsilon(emb);
          out.require(got == label, "rho = " + std::to_string(rho) + " (" + str(p) + ") label " + label.to_string() +
                                        " pulled back to " + got.to_string());
          seen.insert(got);
          ctx.theorem_a.embeddings.push_back(emb);
          ++total;
        } catch (const Error& e) {
          out.require(false, "rho = " + std::to_string(rho) + " (" + str(p) + ") label " + label.to_string() + ": " +
                                 e.what());
        }
      }
      const std::size_t want = rho == 17   ? ctx.fixtures.brauer_count_rho17
                               : rho == 18 ? ctx.fixtures.brauer_count_rho18
                                           : labels.size();
      out.require(seen.size() == want, "rho = " + std::to_string(rho) + " (" + str(p) + "): " +
                                           std::to_string(seen.size()) + " distinct labels, expected " +
                                           std::to_string(want));
    }
  }
  if (out.passed) out.detail = std::to_string(total) + " embeddings over rho = 19, 18, 17";
  return out;
}

Outcome eps_norm_2_mod_4(Context& ctx) {
  Outcome out;
  std::mt19937_64 rng(ctx.seed + 3);
  std::uniform_int_distribution<int> coord(-6, 6);
  const Lattice& n = enriques_lattice();
  int samples = 0;
  while (samples < 1000) {
    IntVector x(12);
    for (Index i = 0; i < 12; ++i) x(i) = Integer(coord(rng));
    const Integer norm = n.norm(x);
    if (mod_floor(norm, Integer(4)) != Integer(2)) continue;
    ++samples;
    out.require(epsilon(x) == 0, "eps(x) = 1 for a vector of norm " + norm.to_string());
  }
  if (out.passed) out.detail = "1000 vectors with (x^2) = 2 mod 4";
  return out;
}

Outcome eps_invariance(Context& ctx) {
  Outcome out;
  std::mt19937_64 rng(ctx.seed + 4);
  std::uniform_int_distribution<int> coord(-5, 5);
  const IntMatrix& g = enriques_lattice().gram();
  for (int i = 0; i < 200; ++i) {
    const IntMatrix iso = isometry_of_n(ctx.seed * 1000 + static_cast<std::uint64_t>(i), 1 + i % 12);
    out.require(IntMatrix(iso.transpose() * g * iso) == g, "isometry " + std::to_string(i) + " does not preserve N");
    for (int j = 0; j < 100; ++j) {
      IntVector x(12);
      for (Index k = 0; k < 12; ++k) x(k) = Integer(coord(rng));
      out.require(epsilon(IntVector(iso * x)) == epsilon(x), "isometry " + std::to_string(i) + " changes eps");
    }
  }
  if (out.passed) out.detail = "200 isometries, 100 vectors each";
  return out;
}

Outcome complement_twice_even(Context& ctx) {
  Outcome out;
  if (ctx.theorem_a.embeddings.empty()) {
    rho20_table(ctx);
    higher_rho(ctx);
  }
  for (const PrimitiveEmbedding& emb : ctx.theorem_a.embeddings) {
    const NComplement c = complement_in_n(emb);
    out.require(is_twice_even(c.lattice), "complement of " + pullback_epsilon(emb).to_string() + " for rank " +
                                              std::to_string(emb.source.rank()) + " is not twice-even");
  }
  if (out.passed) out.detail = std::to_string(ctx.theorem_a.embeddings.size()) + " complements";
  return out;
}

Outcome milgram_consistency(Context& ctx) {
  Outcome out;
  std::mt19937_64 rng(ctx.seed + 6);
  for (int i = 0; i < 50; ++i) {
    const Lattice l(oracle::random_even_gram(rng, 1 + i % 6, 12));
    const Signature s = l.signature();
    try {
      const int sign = milgram_signature(discriminant_form(l));
      out.require(mod(sign - (s.plus - s.minus), 8) == 0,
                  "sign(q) = " + std::to_string(sign) + " for signature (" + std::to_string(s.plus) + "," +
                      std::to_string(s.minus) + ")");
    } catch (const Error& e) {
      out.require(false, std::string("lattice of determinant ") + l.determinant().to_string() + ": " + e.what());
    }
  }
  if (out.passed) out.detail = "50 lattices";
  return out;
}

Outcome root_oracle(Context& ctx) {
  Outcome out;
  std::mt19937_64 rng(ctx.seed + 7);
  for (int i = 0; i < 20; ++i) {
    const IntMatrix g = oracle::random_negative_definite_gram(rng, 1 + i % 4, 4);
    for (int64_t n : {-2, -4, -6, -8}) {
      const std::size_t fast = vectors_of_norm(Lattice(g), Integer(n)).size();
      const std::size_t slow = oracle::vectors_of_norm_naive(g, n).size();
      out.require(fast == slow, "norm " + std::to_string(n) + ": " + std::to_string(fast) + " vs naive " +
                                    std::to_string(slow));
    }
  }
  const Lattice e8 = standard_lattice("E8"), e82 = standard_lattice("E82");
  out.require(vectors_of_norm(e8, Integer(-2)).size() == 240, "E8 does not have 240 roots");
  out.require(vectors_of_norm(e82, Integer(-4)).size() == 240, "E8(2) does not have 240 vectors of norm -4");
  out.require(vectors_of_norm(e82, Integer(-2)).empty(), "E8(2) has roots");
  if (out.passed) out.detail = "20 lattices, 4 norms each, E8 and E8(2)";
  return out;
}

Outcome nikulin_soundness(Context& ctx) {
  Outcome out;
  std::mt19937_64 rng(ctx.seed + 8);
  for (int i = 0; i < 200; ++i) {
    const Lattice l(oracle::random_even_gram(rng, 1 + i % 6, 4));
    const Signature s = l.signature();
    try {
      const FiniteQuadraticForm q = discriminant_form(l);
      out.require(exists_even_lattice(s, q), "false for a lattice of determinant " + l.determinant().to_string());
      // (1,0) + L changes t+ - t- by one.
      out.require(!exists_even_lattice(Signature{s.plus + 1, s.minus}, q),
                  "true for (1,0) + signature of a lattice of determinant " + l.determinant().to_string());
    } catch (const Error& e) {
      out.require(false, std::string("determinant ") + l.determinant().to_string() + ": " + e.what());
    }
  }
  out.require(!exists_even_lattice(Signature{0, 1}, FiniteQuadraticForm{}), "true for ((0,1), trivial)");
  if (out.passed) out.detail = "200 lattices, 200 shifted signatures";
  return out;
}

Outcome star_machinery(Context& ctx) {
  Outcome out;
  std::mt19937_64 rng(ctx.seed + 9);
  for (int i = 0; i < 20; ++i) {
    const Lattice l(oracle::random_signature_2_gram(rng, 3 + i % 3, 4));
    const Integer det = l.determinant();
    std::vector<int64_t> primes;
    for (int64_t p = 3; primes.size() < 3; p += 2)
      if (is_prime(p) && !mod_floor(det, Integer(p)).is_zero()) primes.push_back(p);
    for (int64_t p : primes) {
      const std::string tag = "p = " + std::to_string(p) + ", det " + det.to_string();
      const IndexPSublattice s = index_p_sublattice(l, p);
      out.require(s.sub.index == Integer(p), tag + ": index " + s.sub.index.to_string());
      out.require(s.sub.lattice.determinant() == det * Integer(p * p), tag + ": discriminant ratio is not p^2");
      const FiniteQuadraticForm ap = p_part_form(discriminant_form(s.sub.lattice), p);
      out.require(ap.factors() == std::vector<int64_t>{p * p}, tag + ": A_{L',p} is not Z/p^2");
      out.require(condition_star(l, s.sub.basis).verdict(), tag + ": condition (*) fails");

      const std::vector<IndexPSublattice> chain = index_p_chain(l, {p, p});
      const std::set<Integer> dets = {det, chain[0].sub.lattice.determinant(), chain[1].sub.lattice.determinant()};
      out.require(dets.size() == 3, tag + ": iterated discriminants repeat");
      out.require(condition_star(l, chain[1].sub.basis).verdict(), tag + ": second step violates (*)");
    }
  }
  if (out.passed) out.detail = "20 lattices, 3 primes each";
  return out;
}

Outcome transfer_round_trip(Context&) {
  Outcome out;
  const PrimitiveEmbedding emb = theorem_a_embedding(20, {1, 0, 1}, parse_character("1,0"));
  const Lattice& l = emb.source;
  const IntMatrix basis = (IntMatrix(2, 2) << Integer(3), Integer(0), Integer(0), Integer(1)).finished();
  const EmbeddingDatum d = datum_from_embedding(emb);
  out.require(verify_embedding_datum(l, d), "datum of diag(4,4) does not verify");
  const EmbeddingDatum down = transfer_datum_down(l, basis, d);
  const Lattice sub = sublattice_from_gram_change(l, basis).lattice;
  out.require(sub.gram() == (IntMatrix(2, 2) << Integer(36), Integer(0), Integer(0), Integer(4)).finished(),
              "sublattice is not diag(36,4)");
  out.require(verify_embedding_datum(sub, down), "datum of diag(36,4) does not verify");
  const EmbeddingDatum up = transfer_datum_up(l, basis, down);
  out.require(verify_embedding_datum(l, up), "datum transferred back does not verify");
  out.require(up.k.rank == d.k.rank && up.k.signature == d.k.signature, "K rank or signature changed");
  out.require(fqf_isomorphic(up.k.form, d.k.form).has_value(), "q_K is not recovered");
  if (out.passed)
    out.detail = "|A_K| = " + d.k.form.order().to_string() + ", |A_K'| = " + down.k.form.order().to_string();
  return out;
}

Outcome theorem_c(Context&) {
  Outcome out;
  const IntMatrix g19 = (IntMatrix(2, 2) << Integer(2), Integer(1), Integer(1), Integer(10)).finished();
  const TheoremCReport r = theorem_c_report(g19);
  out.require(r.conductor == 1 && r.fundamental == -19 && r.two_behavior == TwoBehavior::Inert && r.applies &&
                  r.index_k2_k1 == 3,
              "report for [[2,1],[1,10]] is wrong");
  const IntMatrix g3 = (IntMatrix(2, 2) << Integer(2), Integer(1), Integer(1), Integer(2)).finished();
  const TheoremCReport e = theorem_c_report(g3);
  out.require(e.fundamental == -3 && !e.applies, "[[2,1],[1,2]] is not excluded");
  int count = 0;
  for (int64_t d = -199; d < -4; ++d) {
    if (mod(d, 8) != 5 || !is_fundamental_discriminant(d)) continue;
    ++count;
    const int64_t h = class_group(d).class_number;
    const auto a = oracle::reduced_forms_a_outer(d), b = oracle::reduced_forms_b_outer(d);
    out.require(static_cast<int64_t>(a.size()) == h && a == b, "h(" + std::to_string(d) + ") disagrees with the scans");
    out.require(ray_class2_order(d) == 3 * h, "ray class order for D = " + std::to_string(d));
  }
  if (out.passed) out.detail = std::to_string(count) + " discriminants D = 5 mod 8";
  return out;
}

Outcome im_phi_consistency(Context& ctx) {
  Outcome out;
  for (int64_t c : ctx.fixtures.singleton_c) {
    const IntMatrix g = (IntMatrix(2, 2) << Integer(2), Integer(0), Integer(0), Integer(2 * c)).finished();
    const CharacterSubspace s = im_phi_upper_bound(Lattice(g));
    out.require(s.size() == 1, "diag(2," + std::to_string(2 * c) + ") bound has size " + std::to_string(s.size()));
  }
  if (ctx.theorem_a.rho20_lattices.empty()) rho20_table(ctx);
  for (const Lattice& t : ctx.theorem_a.rho20_lattices)
    out.require(im_phi_upper_bound(t).is_full(), "bound is not full for a Kummer-shape T");
  if (out.passed)
    out.detail = std::to_string(ctx.fixtures.singleton_c.size()) + " singleton cases, " +
                 std::to_string(ctx.theorem_a.rho20_lattices.size()) + " Kummer shapes";
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double budget;
  Outcome (*run)(Context&);
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "theorem-a-rho20", 10, rho20_table},
      {2, "theorem-a-rho19-18-17", 300, higher_rho},
      {3, "eps-vanishes-norm-2-mod-4", 1, eps_norm_2_mod_4},
      {4, "eps-isometry-invariance", 30, eps_invariance},
      {5, "complement-twice-even", 60, complement_twice_even},
      {6, "milgram-signature", 60, milgram_consistency},
      {7, "root-enumeration-oracle", 120, root_oracle},
      {8, "nikulin-soundness", 120, nikulin_soundness},
      {9, "condition-star", 60, star_machinery},
      {10, "transfer-round-trip", 60, transfer_round_trip},
      {11, "theorem-c-arithmetic", 30, theorem_c},
      {12, "im-phi-consistency", 1, im_phi_consistency},
  };
  return all;
}

const std::map<std::string, std::vector<int>, std::less<>>& suites() {
  static const std::map<std::string, std::vector<int>, std::less<>> s = {
      {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}},
      {"theorem-a", {1, 2, 5, 12}},
      {"lemmas", {3, 4}},
      {"nikulin", {8, 9, 10}},
      {"theorem-c", {11}},
      {"oracles", {6, 7}},
  };
  return s;
}

nlohmann::json read_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) fail(Errc::Parse, "cannot open " + file.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::Parse, file.string() + ": " + e.what());
  }
}

}  // namespace

Fixtures load_fixtures(const std::filesystem::path& dir) {
  Fixtures f;
  try {
    const nlohmann::json counts = read_json(dir / "corollary_b.json");
    f.brauer_count_rho18 = counts.at("brauer_image_counts").at("18").get<std::size_t>();
    f.brauer_count_rho17 = counts.at("brauer_image_counts").at("17").get<std::size_t>();
    const nlohmann::json singles = read_json(dir / "enr_singletons.json");
    f.singleton_c.clear();
    for (const auto& entry : singles.at("cases")) f.singleton_c.push_back(entry.at("c").get<int64_t>());
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::Parse, std::string("fixtures: ") + e.what());
  }
  return f;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all", "theorem-a", "lemmas", "nikulin", "theorem-c", "oracles"};
  return names;
}

std::vector<CriterionResult> run_suite(std::string_view suite, std::uint64_t seed, const Fixtures& fixtures) {
  const auto it = suites().find(suite);
  if (it == suites().end()) fail(Errc::BadParams, "unknown suite " + std::string(suite));
  Context ctx{seed, fixtures, {}};
  std::vector<CriterionResult> results;
  for (int id : it->second) {
    const Criterion& c = criteria()[static_cast<std::size_t>(id - 1)];
    CriterionResult r{c.id, c.name, false, "", 0, c.budget};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = c.run(ctx);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.passed && r.seconds > r.budget_seconds) {
      r.passed = false;
      r.detail += " (over time budget)";
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_line(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / %g s", r.seconds, r.budget_seconds);
  std::ostringstream s;
  s << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << timing << ")";
  if (!r.detail.empty()) s << ": " << r.detail;
  return s.str();
}

}  // namespace enriques::acceptance
