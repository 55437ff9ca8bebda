#include "enriques/theorem_a.hpp"

#include "enriques/enriques_lattice.hpp"
#include "enriques/errors.hpp"
#include "enriques/short_vectors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace enriques {

namespace {

using std::int64_t;

std::string join(const Params& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

void require(bool ok, int rho, const std::string& what) {
  if (!ok) fail(Errc::BadParams, "rho=" + std::to_string(rho) + " needs " + what);
}

std::size_t param_count(int rho) {
  switch (rho) {
    case 20: case 18: return 3;
    case 19: return 6;
    case 17: return 1;
    default: fail(Errc::BadParams, "rho must be one of 17, 18, 19, 20");
  }
}

IntMatrix gram_of(int rho, const Params& p) {
  auto I = [](int64_t v) { return Integer(v); };
  switch (rho) {
    case 20: {
      IntMatrix g(2, 2);
      g << I(4 * p[0]), I(2 * p[1]), I(2 * p[1]), I(4 * p[2]);
      return g;
    }
    case 19: {
      const int64_t a = p[0], b = p[1], c = p[2], d = p[3], l = p[4], m = p[5];
      IntMatrix g(3, 3);
      g << I(4 * a), I(2 * d), I(2 * l), I(2 * d), I(4 * b), I(2 * m), I(2 * l), I(2 * m), I(4 * c);
      return g;
    }
    case 18: {
      IntMatrix g = zeros<Integer>(4, 4);
      g(0, 0) = I(4 * p[0]);
      g(0, 1) = g(1, 0) = I(2 * p[1]);
      g(1, 1) = I(4 * p[2]);
      g(2, 3) = g(3, 2) = I(2);
      return g;
    }
    default: {
      IntMatrix g = zeros<Integer>(5, 5);
      g(0, 1) = g(1, 0) = g(2, 3) = g(3, 2) = I(2);
      g(4, 4) = I(-4 * p[0]);
      return g;
    }
  }
}

// ------------------------------------------------------------ N vectors

IntVector nvec(int64_t e, int64_t f, int64_t h, int64_t k) {
  IntVector v = IntVector::Constant(12, Integer(0));
  v(n_index::e) = Integer(e);
  v(n_index::f) = Integer(f);
  v(n_index::h) = Integer(h);
  v(n_index::k) = Integer(k);
  return v;
}

IntVector plus_e8(IntVector v, const IntVector& w) {
  v.segment(n_index::eps0, 8) += w;
  return v;
}

IntMatrix columns(std::initializer_list<IntVector> cols) {
  IntMatrix m(12, static_cast<Index>(cols.size()));
  Index j = 0;
  for (const IntVector& c : cols) m.col(j++) = c;
  return m;
}

IntMatrix tuple(std::initializer_list<std::initializer_list<int64_t>> rows) {
  IntMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (int64_t v : r) m(i, j++) = Integer(v);
    ++i;
  }
  return find_tuple_in_e82(m);
}

bool label_is(const Character& l, std::initializer_list<int> bits) {
  return std::equal(l.values.begin(), l.values.end(), bits.begin(), bits.end(),
                    [](std::uint8_t a, int b) { return a == b; });
}

// ------------------------------------------------------- base constructions

std::optional<IntMatrix> base20(const Params& p, const Character& l) {
  const int64_t a = p[0], b = p[1], c = p[2];
  if (label_is(l, {1, 0})) return columns({nvec(1, 2 * a, 0, 0), nvec(0, 2 * b, 1, c)});
  if (label_is(l, {0, 1})) return columns({nvec(0, 2 * b, 1, a), nvec(1, 2 * c, 0, 0)});
  if (label_is(l, {1, 1})) return columns({nvec(1, 2 * a, 0, 0), nvec(1, 2 * b - 2 * a, 1, c - b + a)});
  return std::nullopt;
}

std::optional<IntMatrix> base19(const Params& p, const Character& l) {
  const int64_t a = p[0], b = p[1], c = p[2], d = p[3], lp = p[4], m = p[5];
  if (label_is(l, {1, 0, 0})) {
    const IntVector w = tuple({{4 * c}}).col(0);
    return columns({nvec(1, 2 * a, 0, 0), nvec(0, 2 * d, 1, b), plus_e8(nvec(0, 2 * lp, 0, m), w)});
  }
  if (label_is(l, {1, 1, 0})) {
    const IntVector w = tuple({{4 * c}}).col(0);
    return columns({nvec(1, 2 * a, 0, 0), nvec(1, 2 * d - 2 * a, 1, b - d + a),
                    plus_e8(nvec(0, 2 * lp, 0, m - lp), w)});
  }
  if (label_is(l, {1, 1, 1})) {
    if (m < 0) {
      // Replace t by -t, which negates l and m.
      IntMatrix flipped = *base19({a, b, c, d, -lp, -m}, l);
      flipped.col(2) = -flipped.col(2);
      return flipped;
    }
    const IntMatrix ww = tuple({{4 * b - 4 * m, 0}, {0, 4 * c}});
    return columns({nvec(1, 0, a, 1), plus_e8(nvec(1, 2 * m, d - m, 0), ww.col(0)),
                    plus_e8(nvec(1, 0, lp, 0), ww.col(1))});
  }
  return std::nullopt;
}

std::optional<IntMatrix> base18(const Params& p, const Character& l) {
  const int64_t a = p[0], b = p[1], c = p[2];
  auto w = [&]() -> IntVector { return tuple({{4 * c}}).col(0); };
  auto u = [&]() -> IntVector { return tuple({{4 * (a - b + c)}}).col(0); };
  if (label_is(l, {1, 0, 0, 0}))
    return columns({nvec(1, 2 * a, 0, 0), plus_e8(nvec(0, 2 * b, 0, 0), w()), nvec(0, 0, 1, 0), nvec(0, 0, 0, 1)});
  if (label_is(l, {1, 1, 0, 0}))
    return columns({nvec(1, 2 * a, 0, 0), plus_e8(nvec(1, 2 * b - 2 * a, 0, 0), u()), nvec(0, 0, 1, 0),
                    nvec(0, 0, 0, 1)});
  if (label_is(l, {1, 0, 1, 0}))
    return columns({nvec(1, 2 * a, 0, -a), plus_e8(nvec(0, 2 * b, 0, -b), w()), nvec(1, 0, 1, 0), nvec(0, 0, 0, 1)});
  if (label_is(l, {0, 0, 1, 0}) || label_is(l, {0, 0, 1, 1})) {
    const bool both = l.values[3] == 1;
    const IntMatrix ws = tuple({{4 * a, 0, 0}, {0, 4 * c, 0}, {0, 0, both ? -4 : -8}});
    return columns({plus_e8(nvec(0, 0, 1, 0), ws.col(0)), plus_e8(nvec(0, 0, 0, b), ws.col(1)), nvec(1, 0, 0, 0),
                    plus_e8(both ? nvec(1, 2, 0, 0) : nvec(2, 2, 0, 0), ws.col(2))});
  }
  if (label_is(l, {1, 1, 1, 0}))
    return columns({nvec(1, 2 * a, 0, -a), plus_e8(nvec(1, 2 * b - 2 * a, 0, a - b), u()), nvec(1, 0, 1, 0),
                    nvec(0, 0, 0, 1)});
  if (label_is(l, {1, 0, 1, 1})) {
    const IntMatrix ww = tuple({{4 * c, 0}, {0, -4}});
    return columns({nvec(1, 2 * a, 0, -a), plus_e8(nvec(0, 2 * b, 0, -b), ww.col(0)), nvec(1, 0, 1, 0),
                    plus_e8(nvec(1, 0, 1, 1), ww.col(1))});
  }
  if (label_is(l, {1, 1, 1, 1})) {
    const IntMatrix uw = tuple({{4 * (a - b + c), 0}, {0, -4}});
    return columns({nvec(1, 2 * a, 0, -a), plus_e8(nvec(1, 2 * b - 2 * a, 0, a - b), uw.col(0)), nvec(1, 0, 1, 0),
                    plus_e8(nvec(1, 0, 1, 1), uw.col(1))});
  }
  return std::nullopt;
}

std::optional<IntMatrix> base17(const Params& p, const Character& l) {
  const int64_t m = p[0];
  const IntVector e = nvec(1, 0, 0, 0), h = nvec(0, 0, 1, 0), k = nvec(0, 0, 0, 1);
  // u_i, v_i pairs.
  auto uv = [&](int i) {
    const int64_t un = (i == 1 || i == 3) ? -8 : -4;
    const int64_t uv_product = (i >= 3) ? -2 : 0;
    return tuple({{un, uv_product}, {uv_product, -4 * m}});
  };
  if (label_is(l, {1, 0, 0, 0, 0})) {
    const IntMatrix t = uv(1);
    return columns({e, plus_e8(nvec(2, 2, 0, 0), t.col(0)), h, k, plus_e8(nvec(0, 0, 0, 0), t.col(1))});
  }
  if (label_is(l, {1, 1, 0, 0, 0})) {
    const IntMatrix t = uv(2);
    return columns({e, plus_e8(nvec(1, 2, 0, 0), t.col(0)), h, k, plus_e8(nvec(0, 0, 0, 0), t.col(1))});
  }
  if (label_is(l, {1, 0, 0, 0, 1})) {
    const IntMatrix t = uv(3);
    return columns({e, plus_e8(nvec(2, 2, 0, 0), t.col(0)), h, k, plus_e8(e, t.col(1))});
  }
  if (label_is(l, {1, 1, 0, 0, 1})) {
    const IntMatrix t = uv(4);
    return columns({e, plus_e8(nvec(1, 2, 0, 0), t.col(0)), h, k, plus_e8(e, t.col(1))});
  }
  if (label_is(l, {0, 0, 0, 0, 1})) {
    const IntMatrix w = tuple({{-8, -6, -2}, {-6, -8, -2}, {-2, -2, -4 * m}});
    return columns({plus_e8(nvec(2, 2, 0, 0), w.col(0)), plus_e8(nvec(2, 2, 0, 0), w.col(1)), h, k, plus_e8(e, w.col(2))});
  }
  if (label_is(l, {1, 1, 1, 1, 0}) || label_is(l, {1, 1, 1, 1, 1})) {
    const bool last = l.values[4] == 1;
    const IntMatrix w = last ? tuple({{-4, 0, -2}, {0, -4, 0}, {-2, 0, -4 * m}})
                             : tuple({{-4, 0, 0}, {0, -4, 0}, {0, 0, -4 * m}});
    return columns({e, plus_e8(nvec(1, 2, 0, 1), w.col(0)), nvec(1, 0, -1, 0), plus_e8(nvec(1, 0, -1, -1), w.col(1)),
                    plus_e8(last ? e : nvec(0, 0, 0, 0), w.col(2))});
  }
  if (label_is(l, {1, 0, 1, 0, 0})) {
    // (e, 2f+k, e-h, -k, w) has 2f = y + y' in its image, so it is not
    // primitive; the E8(2) parts below break the 2-divisibility.
    const IntMatrix w = tuple({{-8, 2, 0}, {2, -4, 0}, {0, 0, -4 * m}});
    return columns({e, plus_e8(nvec(2, 2, 0, 1), w.col(0)), nvec(1, 0, -1, 0), plus_e8(nvec(0, 0, -1, -1), w.col(1)),
                    plus_e8(nvec(0, 0, 0, 0), w.col(2))});
  }
  if (label_is(l, {1, 1, 1, 0, 0})) {
    const IntMatrix t = uv(2);
    return columns({e, plus_e8(nvec(1, 2, 0, 1), t.col(0)), nvec(1, 0, -1, 0), nvec(0, 0, 0, -1),
                    plus_e8(nvec(0, 0, 0, 0), t.col(1))});
  }
  if (label_is(l, {1, 1, 1, 0, 1})) {
    const IntMatrix t = uv(4);
    return columns({e, plus_e8(nvec(1, 2, 0, 1), t.col(0)), nvec(1, 0, -1, 0), nvec(0, 0, 0, -1), plus_e8(e, t.col(1))});
  }
  if (label_is(l, {1, 0, 1, 0, 1})) {
    const IntMatrix t = uv(3);
    return columns({e, plus_e8(nvec(2, 2, 0, 1), t.col(0)), nvec(1, 0, -1, 0), nvec(0, 0, 0, -1), plus_e8(e, t.col(1))});
  }
  return std::nullopt;
}

std::optional<IntMatrix> base_images(int rho, const Params& p, const Character& l) {
  switch (rho) {
    case 20: return base20(p, l);
    case 19: return base19(p, l);
    case 18: return base18(p, l);
    default: return base17(p, l);
  }
}

// ------------------------------------------------------------- symmetries

// perm[i] = index of the original basis vector placed at position i.
using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[static_cast<std::size_t>(a[i])];
  return c;
}

std::vector<Perm> symmetry_group(int rho) {
  std::vector<Perm> gens;
  Perm id;
  switch (rho) {
    case 20: return {{0, 1}};
    case 19: {
      std::vector<Perm> all;
      Perm p{0, 1, 2};
      do all.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
      return all;
    }
    case 18:
      id = {0, 1, 2, 3};
      gens = {{1, 0, 2, 3}, {0, 1, 3, 2}};
      break;
    default:
      id = {0, 1, 2, 3, 4};
      gens = {{2, 3, 0, 1, 4}, {1, 0, 2, 3, 4}, {0, 1, 3, 2, 4}};
      break;
  }
  std::vector<Perm> group{id};
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (const Perm& g : gens) {
      const Perm c = compose(group[i], g);
      if (std::find(group.begin(), group.end(), c) == group.end()) group.push_back(c);
    }
  }
  return group;
}

Params permuted_params(int rho, const Params& p, const Perm& perm) {
  if (rho == 18) return perm[0] == 1 ? Params{p[2], p[1], p[0]} : p;
  if (rho != 19) return p;
  const IntMatrix g = gram_of(19, p);
  auto at = [&](int i, int j) { return g(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]).to_int64(); };
  return {at(0, 0) / 4, at(1, 1) / 4, at(2, 2) / 4, at(0, 1) / 2, at(0, 2) / 2, at(1, 2) / 2};
}

void validate(int rho, const Params& p) {
  if (p.size() != param_count(rho)) {
    fail(Errc::BadParams, "rho=" + std::to_string(rho) + " takes " + std::to_string(param_count(rho)) +
                              " parameters, got " + std::to_string(p.size()));
  }
  switch (rho) {
    case 20:
      require(p[0] > 0, 20, "a > 0");
      require(4 * p[0] * p[2] > p[1] * p[1], 20, "4ac > b^2 (positive definite)");
      break;
    case 19:
      require(p[0] < 0 && p[1] < 0 && p[2] < 0, 19, "a, b, c < 0");
      break;
    case 18:
      require(p[0] < 0 && p[2] < 0, 18, "a, c < 0");
      require(p[1] > 0, 18, "b > 0");
      require(p[1] * p[1] > 4 * p[0] * p[2], 18, "b^2 > 4ac (signature (1,1))");
      break;
    case 17:
      require(p[0] >= 1, 17, "m >= 1");
      break;
    default: break;
  }
  for (int64_t v : p) require(v > -(int64_t{1} << 20) && v < (int64_t{1} << 20), rho, "parameters below 2^20 in size");
}

}  // namespace

Lattice theorem_a_lattice(int rho, const Params& params) {
  validate(rho, params);
  Lattice t(gram_of(rho, params));
  if (rho == 19) require(t.signature() == Signature{2, 1}, 19, "signature (2,1)");
  return t;
}

std::vector<Character> theorem_a_labels(int rho) {
  const std::size_t n = 22 - static_cast<std::size_t>(rho);
  param_count(rho);
  std::vector<Character> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Character c{std::vector<std::uint8_t>(n, 0)};
    for (std::size_t i = 0; i < n; ++i) c.values[i] = (mask >> (n - 1 - i)) & 1;
    out.push_back(std::move(c));
  }
  return out;
}

PrimitiveEmbedding theorem_a_embedding(int rho, const Params& params, const Character& label) {
  const Lattice t = theorem_a_lattice(rho, params);
  const std::size_t n = static_cast<std::size_t>(t.rank());
  if (label.values.size() != n) {
    fail(Errc::BadParams, "label for rho=" + std::to_string(rho) + " must have " + std::to_string(n) + " entries");
  }
  if (label.is_zero()) fail(Errc::BadParams, "label must be non-zero");
  for (const Perm& perm : symmetry_group(rho)) {
    Character moved{std::vector<std::uint8_t>(n)};
    for (std::size_t i = 0; i < n; ++i) moved.values[i] = label.values[static_cast<std::size_t>(perm[i])];
    const auto base = base_images(rho, permuted_params(rho, params, perm), moved);
    if (!base) continue;
    IntMatrix images(12, static_cast<Index>(n));
    for (std::size_t i = 0; i < n; ++i) images.col(perm[i]) = base->col(static_cast<Index>(i));
    PrimitiveEmbedding emb = embedding_from_images(t, images);
    if (pullback_epsilon(emb) != label) {
      fail(Errc::NotFound, "construction for label " + label.to_string() + " pulls back to " +
                               pullback_epsilon(emb).to_string());
    }
    return emb;
  }
  fail(Errc::NotFound, "no construction covers label " + label.to_string() + " for rho=" + std::to_string(rho) +
                           " with parameters " + join(params));
}

std::vector<Character> brauer_image_kummer(int rho, const Params& params) {
  std::set<Character> seen;
  for (const Character& l : theorem_a_labels(rho)) seen.insert(pullback_epsilon(theorem_a_embedding(rho, params, l)));
  return {seen.begin(), seen.end()};
}

std::vector<Params> theorem_a_parameter_search(int rho, int64_t bound, std::size_t count) {
  const std::size_t n = param_count(rho);
  std::vector<Params> out;
  for (int64_t s = 0; s <= bound && out.size() < count; ++s) {
    Params p(n, -s);
    while (true) {
      bool on_shell = false;
      for (int64_t v : p) on_shell = on_shell || v == s || v == -s;
      if (on_shell) {
        try {
          theorem_a_lattice(rho, p);
          out.push_back(p);
          if (out.size() == count) break;
        } catch (const Error&) {
        }
      }
      std::size_t i = n;
      while (i > 0 && p[i - 1] == s) p[--i] = -s;
      if (i == 0) break;
      ++p[i - 1];
    }
  }
  return out;
}

// ---------------------------------------------------------- normalization

namespace {

// Backtracking over bases whose vectors come from per-position candidate
// lists; `pair_ok(i, j, value)` constrains Gram entries.
class BasisSearch {
 public:
  BasisSearch(const Lattice& t, std::vector<std::vector<IntVector>> candidates,
              std::function<bool(Index, Index, const Integer&)> pair_ok, std::size_t budget)
      : t_(t), candidates_(std::move(candidates)), pair_ok_(std::move(pair_ok)), budget_(budget),
        chosen_(t.rank(), t.rank()) {}

  std::optional<IntMatrix> run() {
    if (extend(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool extend(Index depth) {
    if (depth == t_.rank()) return abs(determinant(chosen_)) == Integer(1);
    for (const IntVector& v : candidates_[static_cast<std::size_t>(depth)]) {
      if (budget_ == 0) return false;
      --budget_;
      bool ok = true;
      for (Index j = 0; j < depth && ok; ++j) ok = pair_ok_(j, depth, t_.product(chosen_.col(j), v));
      if (!ok) continue;
      chosen_.col(depth) = v;
      if (rank(IntMatrix(chosen_.leftCols(depth + 1))) != depth + 1) continue;
      if (extend(depth + 1)) return true;
    }
    return false;
  }

  const Lattice& t_;
  std::vector<std::vector<IntVector>> candidates_;
  std::function<bool(Index, Index, const Integer&)> pair_ok_;
  std::size_t budget_;
  IntMatrix chosen_;
};

std::vector<IntVector> box_vectors(const Lattice& t, int64_t bound, const std::function<bool(const Integer&)>& keep) {
  const Index n = t.rank();
  std::vector<IntVector> out;
  IntVector v = IntVector::Constant(n, Integer(-bound));
  while (true) {
    if (keep(t.norm(v))) out.push_back(v);
    Index i = n;
    while (i > 0 && v(i - 1) == Integer(bound)) v(--i) = Integer(-bound);
    if (i == 0) break;
    v(i - 1) += Integer(1);
  }
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

bool divisible(const Integer& v, int64_t d) { return mod_floor(v, Integer(d)).is_zero(); }

}  // namespace

std::optional<Normalization> normalize_theorem_a(int rho, const Lattice& t, int64_t bound) {
  param_count(rho);
  if (t.rank() != 22 - rho) return std::nullopt;
  const auto neg4 = [](const Integer& n) { return n < Integer(0) && divisible(n, 4); };
  const auto pos4 = [](const Integer& n) { return n > Integer(0) && divisible(n, 4); };
  const auto even_pairs = [](Index, Index, const Integer& v) { return !v.is_odd(); };
  std::optional<IntMatrix> basis;
  constexpr std::size_t kBudget = 2'000'000;
  switch (rho) {
    case 20: {
      const auto c = box_vectors(t, bound, pos4);
      basis = BasisSearch(t, {c, c}, even_pairs, kBudget).run();
      break;
    }
    case 19: {
      const auto c = box_vectors(t, std::min<int64_t>(bound, 3), neg4);
      basis = BasisSearch(t, {c, c, c}, even_pairs, kBudget).run();
      break;
    }
    case 18: {
      const int64_t b = std::min<int64_t>(bound, 2);
      const auto c = box_vectors(t, b, neg4);
      const auto iso = box_vectors(t, b, [](const Integer& n) { return n.is_zero(); });
      basis = BasisSearch(
                  t, {c, c, iso, iso},
                  [](Index i, Index j, const Integer& v) {
                    if (i < 2 && j >= 2) return v.is_zero();
                    if (i == 2 && j == 3) return v == Integer(2);
                    return !v.is_odd() && !v.is_zero();
                  },
                  kBudget)
                  .run();
      if (basis && t.product(basis->col(0), basis->col(1)) < Integer(0)) basis->col(1) = -basis->col(1);
      break;
    }
    default: {
      if (t.gram() == gram_of(17, {-(t.gram()(4, 4) / Integer(4)).to_int64()}) && t.gram()(4, 4) < Integer(0)) {
        basis = identity<Integer>(5);
      }
      break;
    }
  }
  if (!basis) return std::nullopt;
  const IntMatrix g = basis->transpose() * t.gram() * *basis;
  Params p;
  auto q = [&](Index i, Index j, int64_t d) { return (g(i, j) / Integer(d)).to_int64(); };
  switch (rho) {
    case 20: case 18: p = {q(0, 0, 4), q(0, 1, 2), q(1, 1, 4)}; break;
    case 19: p = {q(0, 0, 4), q(1, 1, 4), q(2, 2, 4), q(0, 1, 2), q(0, 2, 2), q(1, 2, 2)}; break;
    default: p = {-q(4, 4, 4)}; break;
  }
  try {
    theorem_a_lattice(rho, p);
  } catch (const Error&) {
    return std::nullopt;
  }
  return Normalization{p, *basis};
}

}  // namespace enriques
