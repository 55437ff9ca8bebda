#include "enriques/fqf.hpp"

#include "enriques/arith.hpp"
#include "enriques/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

namespace enriques {

namespace {

using i128 = __int128;

constexpr std::int64_t kMaxLevel = std::int64_t{1} << 40;

std::int64_t mod64(i128 a, std::int64_t m) {
  i128 r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

Integer product_of(const std::vector<std::int64_t>& v) {
  Integer out(1);
  for (std::int64_t d : v) out *= Integer(d);
  return out;
}

IntMatrix to_integers(const ElementMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Integer(m(i, j));
  return out;
}

}  // namespace

// ------------------------------------------------------------ construction

FiniteQuadraticForm::FiniteQuadraticForm(std::vector<std::int64_t> factors, const RatMatrix& q)
    : factors_(std::move(factors)) {
  const Index k = rank();
  if (q.rows() != k || q.cols() != k) fail(Errc::BadShape, "q matrix does not match the factors");
  if (!is_symmetric(q)) fail(Errc::NotSymmetric, "q matrix is not symmetric");
  level_ = 1;
  for (std::int64_t d : factors_) {
    if (d < 2) fail(Errc::BadParams, "cyclic factors must be at least 2");
    level_ = std::lcm(level_, d);
    if (level_ > kMaxLevel) fail(Errc::TooLarge, "group exponent exceeds 2^40");
  }
  numerators_.resize(k, k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      const Rational scaled = q(i, j) * Rational(level_);
      if (!scaled.is_integer()) {
        fail(Errc::BadParams, "value " + q(i, j).to_string() + " has a denominator beyond the group exponent");
      }
      const std::int64_t modulus = i == j ? 2 * level_ : level_;
      numerators_(i, j) = mod_floor(scaled.num(), Integer(modulus)).to_int64();
    }
  }
  for (Index i = 0; i < k; ++i) {
    const std::int64_t d = factors_[static_cast<std::size_t>(i)];
    for (Index j = 0; j < k; ++j) {
      if (mod64(static_cast<i128>(numerators_(i, j)) * d, level_) != 0) {
        fail(Errc::BadParams, "b(g_i, g_j) is not killed by the order of g_i");
      }
    }
    if (mod64(static_cast<i128>(numerators_(i, i)) * d % (2 * level_) * d, 2 * level_) != 0) {
      fail(Errc::BadParams, "q is not well defined on a cyclic factor");
    }
  }
}

Integer FiniteQuadraticForm::order() const { return product_of(factors_); }

std::uint64_t FiniteQuadraticForm::size(std::uint64_t bound) const {
  std::uint64_t n = 1;
  for (std::int64_t d : factors_) {
    if (__builtin_mul_overflow(n, static_cast<std::uint64_t>(d), &n) || n > bound) {
      fail(Errc::TooLarge, "group of order " + order().to_string() + " exceeds the search bound " +
                               std::to_string(bound));
    }
  }
  return n;
}

RatMatrix FiniteQuadraticForm::q_matrix() const {
  RatMatrix q(rank(), rank());
  for (Index i = 0; i < rank(); ++i)
    for (Index j = 0; j < rank(); ++j) q(i, j) = Rational(Integer(numerators_(i, j)), Integer(level_));
  return q;
}

Element FiniteQuadraticForm::reduce(const Element& x) const {
  if (x.size() != rank()) fail(Errc::NotSubgroup, "element has the wrong number of coordinates");
  Element r(rank());
  for (Index i = 0; i < rank(); ++i) r(i) = mod(x(i), factors_[static_cast<std::size_t>(i)]);
  return r;
}

Element FiniteQuadraticForm::add(const Element& x, const Element& y) const {
  Element r(rank());
  for (Index i = 0; i < rank(); ++i) r(i) = mod64(static_cast<i128>(x(i)) + y(i), factors_[static_cast<std::size_t>(i)]);
  return r;
}

Element FiniteQuadraticForm::scale(const Element& x, std::int64_t n) const {
  Element r(rank());
  for (Index i = 0; i < rank(); ++i) r(i) = mod64(static_cast<i128>(x(i)) * n, factors_[static_cast<std::size_t>(i)]);
  return r;
}

Element FiniteQuadraticForm::generator(Index i) const {
  Element e = zero();
  e(i) = 1;
  return e;
}

bool FiniteQuadraticForm::is_zero(const Element& x) const {
  for (Index i = 0; i < rank(); ++i)
    if (mod(x(i), factors_[static_cast<std::size_t>(i)]) != 0) return false;
  return true;
}

std::int64_t FiniteQuadraticForm::element_order(const Element& x) const {
  std::int64_t o = 1;
  for (Index i = 0; i < rank(); ++i) {
    const std::int64_t d = factors_[static_cast<std::size_t>(i)];
    o = std::lcm(o, d / std::gcd(mod(x(i), d), d));
  }
  return o;
}

std::int64_t FiniteQuadraticForm::q_numerator(const Element& x0) const {
  const Element x = reduce(x0);
  const std::int64_t m = 2 * level_;
  i128 acc = 0;
  for (Index i = 0; i < rank(); ++i) {
    if (x(i) == 0) continue;
    acc += static_cast<i128>(mod64(static_cast<i128>(numerators_(i, i)) * x(i), m)) * x(i) % m;
    for (Index j = i + 1; j < rank(); ++j) {
      if (x(j) == 0) continue;
      acc += 2 * (static_cast<i128>(mod64(static_cast<i128>(numerators_(i, j)) * x(i), m)) * x(j) % m);
    }
    acc %= m;
  }
  return mod64(acc, m);
}

std::int64_t FiniteQuadraticForm::b_numerator(const Element& x0, const Element& y0) const {
  const Element x = reduce(x0);
  const Element y = reduce(y0);
  i128 acc = 0;
  for (Index i = 0; i < rank(); ++i) {
    if (x(i) == 0) continue;
    for (Index j = 0; j < rank(); ++j) {
      if (y(j) == 0) continue;
      acc += static_cast<i128>(mod64(static_cast<i128>(numerators_(i, j)) * x(i), level_)) * y(j) % level_;
    }
    acc %= level_;
  }
  return mod64(acc, level_);
}

Rational FiniteQuadraticForm::q(const Element& x) const {
  return Rational(Integer(q_numerator(x)), Integer(level_));
}

Rational FiniteQuadraticForm::b(const Element& x, const Element& y) const {
  return Rational(Integer(b_numerator(x, y)), Integer(level_));
}

Element FiniteQuadraticForm::element_at(std::uint64_t index) const {
  Element x(rank());
  for (Index i = 0; i < rank(); ++i) {
    const auto d = static_cast<std::uint64_t>(factors_[static_cast<std::size_t>(i)]);
    x(i) = static_cast<std::int64_t>(index % d);
    index /= d;
  }
  return x;
}

std::uint64_t FiniteQuadraticForm::index_of(const Element& x0) const {
  const Element x = reduce(x0);
  std::uint64_t index = 0;
  for (Index i = rank(); i-- > 0;) {
    index = index * static_cast<std::uint64_t>(factors_[static_cast<std::size_t>(i)]) +
            static_cast<std::uint64_t>(x(i));
  }
  return index;
}

FiniteQuadraticForm FiniteQuadraticForm::negated() const {
  return FiniteQuadraticForm(factors_, RatMatrix(-q_matrix()));
}

FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
  std::vector<std::int64_t> factors = a.factors();
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  const Index n = a.rank(), m = b.rank();
  RatMatrix q = zeros<Rational>(n + m, n + m);
  q.topLeftCorner(n, n) = a.q_matrix();
  q.bottomRightCorner(m, m) = b.q_matrix();
  return FiniteQuadraticForm(std::move(factors), q);
}

// --------------------------------------------------------------- subgroups

IntMatrix subgroup_lattice(const FiniteQuadraticForm& f, const ElementMatrix& generators) {
  const Index k = f.rank();
  if (generators.rows() != k) fail(Errc::NotSubgroup, "generators have the wrong number of coordinates");
  IntMatrix all(k, generators.cols() + k);
  all.leftCols(generators.cols()) = to_integers(generators);
  all.rightCols(k) = zeros<Integer>(k, k);
  for (Index i = 0; i < k; ++i) all(i, generators.cols() + i) = Integer(f.factors()[static_cast<std::size_t>(i)]);
  return column_hermite_basis(all);
}

Integer subgroup_order(const FiniteQuadraticForm& f, const ElementMatrix& generators) {
  return f.order() / abs(determinant(subgroup_lattice(f, generators)));
}

Subquotient::Subquotient(const FiniteQuadraticForm& parent, const ElementMatrix& outer,
                         const ElementMatrix& inner)
    : parent_factors_(parent.factors()) {
  const Index k = parent.rank();
  const IntMatrix ps = subgroup_lattice(parent, outer);
  const IntMatrix pt = subgroup_lattice(parent, inner);
  const auto ps_inv = rational_inverse(ps);
  const RatMatrix c = *ps_inv * to_rational(pt);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j)
      if (!c(i, j).is_integer()) fail(Errc::NotSubgroup, "inner subgroup is not contained in the outer one");
  const SnfResult s = smith_normal_form(to_integer(c));
  const IntMatrix lifts = ps * s.u_inv;
  const RatMatrix coords = to_rational(s.u) * *ps_inv;
  std::vector<std::int64_t> factors;
  std::vector<Index> keep;
  for (Index i = 0; i < k; ++i) {
    if (s.d(i, i) > Integer(1)) {
      factors.push_back(s.d(i, i).to_int64());
      keep.push_back(i);
    }
  }
  const Index r = static_cast<Index>(keep.size());
  lifts_.resize(k, r);
  coordinate_map_.resize(k, k);
  coordinate_map_ = coords;
  for (Index j = 0; j < r; ++j) {
    Element col(k);
    for (Index i = 0; i < k; ++i) col(i) = mod_floor(lifts(i, keep[static_cast<std::size_t>(j)]), Integer(parent.factors()[static_cast<std::size_t>(i)])).to_int64();
    lifts_.col(j) = col;
  }
  // Rows of the coordinate map for the dropped (trivial) factors are kept
  // for the membership test only.
  RatMatrix q(r, r);
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < r; ++j) {
      q(i, j) = i == j ? parent.q(lifts_.col(i)) : parent.b(lifts_.col(i), lifts_.col(j));
    }
  }
  keep_ = std::move(keep);
  form_ = FiniteQuadraticForm(std::move(factors), q);
}

Element Subquotient::coordinates(const Element& x) const {
  const Index k = static_cast<Index>(parent_factors_.size());
  if (x.size() != k) fail(Errc::NotSubgroup, "element has the wrong number of coordinates");
  RatVector xr(k);
  for (Index i = 0; i < k; ++i) xr(i) = Rational(x(i));
  const RatVector c = coordinate_map_ * xr;
  for (Index i = 0; i < c.size(); ++i)
    if (!c(i).is_integer()) fail(Errc::NotSubgroup, "element does not lie in the subgroup");
  Element out(form_.rank());
  for (Index j = 0; j < form_.rank(); ++j) {
    out(j) = mod_floor(c(keep_[static_cast<std::size_t>(j)]).num(), Integer(form_.factors()[static_cast<std::size_t>(j)])).to_int64();
  }
  return out;
}

Element Subquotient::lift(const Element& c) const {
  const Index k = static_cast<Index>(parent_factors_.size());
  Element out = Element::Zero(k);
  for (Index i = 0; i < k; ++i) {
    const std::int64_t d = parent_factors_[static_cast<std::size_t>(i)];
    i128 acc = 0;
    for (Index j = 0; j < c.size(); ++j) acc = (acc + static_cast<i128>(lifts_(i, j)) * c(j)) % d;
    out(i) = mod64(acc, d);
  }
  return out;
}

Element FormMap::apply(const FiniteQuadraticForm& target, const Element& x) const {
  Element out(target.rank());
  for (Index i = 0; i < target.rank(); ++i) {
    const std::int64_t d = target.factors()[static_cast<std::size_t>(i)];
    i128 acc = 0;
    for (Index j = 0; j < x.size(); ++j) acc = (acc + static_cast<i128>(images(i, j)) * x(j)) % d;
    out(i) = mod64(acc, d);
  }
  return out;
}

bool is_isometry(const FiniteQuadraticForm& source, const FiniteQuadraticForm& target, const FormMap& map) {
  if (map.images.rows() != target.rank() || map.images.cols() != source.rank()) return false;
  if (source.order() != target.order()) return false;
  for (Index i = 0; i < source.rank(); ++i) {
    const Element gi = map.images.col(i);
    if (!target.is_zero(target.scale(gi, source.factors()[static_cast<std::size_t>(i)]))) return false;
    if (target.q(gi) != source.q(source.generator(i))) return false;
    for (Index j = i + 1; j < source.rank(); ++j) {
      if (target.b(gi, map.images.col(j)) != source.b(source.generator(i), source.generator(j))) return false;
    }
  }
  return subgroup_order(target, map.images) == target.order();
}

std::optional<Element> preimage(const FiniteQuadraticForm& source, const FiniteQuadraticForm& target,
                                const FormMap& map, const Element& y) {
  const Index k1 = source.rank(), k2 = target.rank();
  IntMatrix a = zeros<Integer>(k2, k1 + k2);
  a.leftCols(k1) = to_integers(map.images);
  for (Index i = 0; i < k2; ++i) a(i, k1 + i) = Integer(target.factors()[static_cast<std::size_t>(i)]);
  IntVector rhs(k2);
  for (Index i = 0; i < k2; ++i) rhs(i) = Integer(y(i));
  const auto sol = solve_integer(a, rhs);
  if (!sol) return std::nullopt;
  Element x(k1);
  for (Index i = 0; i < k1; ++i) {
    x(i) = mod_floor((*sol)(i), Integer(source.factors()[static_cast<std::size_t>(i)])).to_int64();
  }
  return x;
}

// ------------------------------------------------------------- p-parts

std::vector<std::int64_t> primes_of(const FiniteQuadraticForm& f) { return prime_factors(Integer(f.level())); }

Subquotient p_part(const FiniteQuadraticForm& f, std::int64_t p) {
  const Index k = f.rank();
  ElementMatrix gens = ElementMatrix::Zero(k, k);
  for (Index i = 0; i < k; ++i) {
    std::int64_t d = f.factors()[static_cast<std::size_t>(i)];
    while (d % p == 0) d /= p;
    gens(i, i) = d;
  }
  return Subquotient(f, gens, ElementMatrix(k, 0));
}

FiniteQuadraticForm p_part_form(const FiniteQuadraticForm& f, std::int64_t p) { return p_part(f, p).form(); }

int min_generators(const FiniteQuadraticForm& f, std::int64_t p) {
  int n = 0;
  for (std::int64_t d : f.factors())
    if (d % p == 0) ++n;
  return n;
}

int min_generators(const FiniteQuadraticForm& f) {
  int best = 0;
  for (std::int64_t p : primes_of(f)) best = std::max(best, min_generators(f, p));
  return best;
}

// ------------------------------------------------------- perp and quotient

ElementMatrix perp_subgroup(const FiniteQuadraticForm& f, const ElementMatrix& h) {
  const Index k = f.rank();
  const Index m = h.cols();
  if (h.rows() != k) fail(Errc::NotSubgroup, "generators have the wrong number of coordinates");
  if (m == 0 || k == 0) return ElementMatrix::Identity(k, k);
  // b(x, h_j) = sum_i x_i * r_ji / level; solve r x = level * z.
  IntMatrix system = zeros<Integer>(m, k + m);
  for (Index j = 0; j < m; ++j) {
    for (Index i = 0; i < k; ++i) system(j, i) = Integer(f.b_numerator(f.generator(i), h.col(j)));
    system(j, k + j) = Integer(-f.level());
  }
  const IntMatrix kernel = integer_kernel(system);
  ElementMatrix gens(k, kernel.cols());
  for (Index c = 0; c < kernel.cols(); ++c)
    for (Index i = 0; i < k; ++i) gens(i, c) = mod_floor(kernel(i, c), Integer(f.factors()[static_cast<std::size_t>(i)])).to_int64();
  return gens;
}

bool is_isotropic(const FiniteQuadraticForm& f, const ElementMatrix& generators) {
  for (Index i = 0; i < generators.cols(); ++i) {
    if (f.q_numerator(generators.col(i)) != 0) return false;
    for (Index j = i + 1; j < generators.cols(); ++j)
      if (f.b_numerator(generators.col(i), generators.col(j)) != 0) return false;
  }
  return true;
}

Subquotient quotient(const FiniteQuadraticForm& f, const ElementMatrix& isotropic) {
  if (isotropic.rows() != f.rank()) fail(Errc::NotSubgroup, "generators have the wrong number of coordinates");
  if (!is_isotropic(f, isotropic)) fail(Errc::NotIsotropic, "subgroup is not isotropic");
  return Subquotient(f, perp_subgroup(f, isotropic), isotropic);
}

FiniteQuadraticForm quotient_form(const FiniteQuadraticForm& f, const ElementMatrix& isotropic) {
  return quotient(f, isotropic).form();
}

Subquotient restriction(const FiniteQuadraticForm& f, const ElementMatrix& generators) {
  return Subquotient(f, generators, ElementMatrix(f.rank(), 0));
}

// ------------------------------------------------------- isomorphism search

namespace {

using Fingerprint = std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t>;

Fingerprint fingerprint(const FiniteQuadraticForm& f, std::uint64_t n) {
  Fingerprint fp;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Element x = f.element_at(i);
    ++fp[{f.element_order(x), f.q_numerator(x)}];
  }
  return fp;
}

// Backtracking over images of the generators of a p-group form, largest
// order first.
class PartSearch {
 public:
  PartSearch(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b, std::int64_t p, std::uint64_t n)
      : a_(a), b_(b), p_(p), n_(n) {
    for (std::uint64_t i = 0; i < n_; ++i) {
      const Element y = b_.element_at(i);
      buckets_[{b_.element_order(y), b_.q_numerator(y)}].push_back(i);
    }
    for (Index i = 0; i < a_.rank(); ++i) order_.push_back(i);
    std::stable_sort(order_.begin(), order_.end(), [&](Index x, Index y) {
      return a_.factors()[static_cast<std::size_t>(x)] > a_.factors()[static_cast<std::size_t>(y)];
    });
    images_ = ElementMatrix::Zero(b_.rank(), a_.rank());
  }

  std::optional<FormMap> run() {
    std::vector<std::uint64_t> members{0};
    std::vector<bool> in(n_, false);
    in[0] = true;
    if (!extend(0, members, in)) return std::nullopt;
    return FormMap{images_};
  }

 private:
  bool extend(std::size_t depth, const std::vector<std::uint64_t>& members, const std::vector<bool>& in) {
    if (depth == order_.size()) return true;
    const Index gi = order_[depth];
    const Element g = a_.generator(gi);
    const std::int64_t o = a_.factors()[static_cast<std::size_t>(gi)];
    const auto it = buckets_.find({o, a_.q_numerator(g)});
    if (it == buckets_.end()) return false;
    for (std::uint64_t idx : it->second) {
      const Element y = b_.element_at(idx);
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        const Index gj = order_[j];
        ok = b_.b_numerator(y, images_.col(gj)) == a_.b_numerator(g, a_.generator(gj));
      }
      if (!ok) continue;
      if (in[b_.index_of(b_.scale(y, o / p_))]) continue;
      std::vector<std::uint64_t> next;
      next.reserve(members.size() * static_cast<std::size_t>(o));
      std::vector<bool> next_in(n_, false);
      for (std::uint64_t m : members) {
        Element s = b_.element_at(m);
        for (std::int64_t t = 0; t < o; ++t) {
          const std::uint64_t si = b_.index_of(s);
          if (!next_in[si]) {
            next_in[si] = true;
            next.push_back(si);
          }
          s = b_.add(s, y);
        }
      }
      images_.col(gi) = y;
      if (extend(depth + 1, next, next_in)) return true;
    }
    return false;
  }

  const FiniteQuadraticForm& a_;
  const FiniteQuadraticForm& b_;
  std::int64_t p_;
  std::uint64_t n_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::uint64_t>> buckets_;
  std::vector<Index> order_;
  ElementMatrix images_;
};

}  // namespace

std::optional<FormMap> fqf_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b,
                                      std::uint64_t bound) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.is_trivial()) return FormMap{ElementMatrix::Zero(b.rank(), 0)};
  const std::vector<std::int64_t> primes = primes_of(a);
  if (primes != primes_of(b)) return std::nullopt;

  struct Part {
    std::int64_t p;
    Subquotient pa, pb;
    FormMap map;
  };
  std::vector<Part> parts;
  for (std::int64_t p : primes) {
    Subquotient pa = p_part(a, p);
    Subquotient pb = p_part(b, p);
    if (pa.form().factors() != pb.form().factors()) return std::nullopt;
    const std::uint64_t n = pa.form().size(bound);
    if (fingerprint(pa.form(), n) != fingerprint(pb.form(), n)) return std::nullopt;
    auto m = PartSearch(pa.form(), pb.form(), p, n).run();
    if (!m) return std::nullopt;
    parts.push_back(Part{p, std::move(pa), std::move(pb), std::move(*m)});
  }

  // Assemble through the idempotents of Z/level.
  const std::int64_t level = a.level();
  ElementMatrix images = ElementMatrix::Zero(b.rank(), a.rank());
  for (const Part& part : parts) {
    std::int64_t pk = 1;
    while (level % (pk * part.p) == 0) pk *= part.p;
    const std::int64_t rest = level / pk;
    const std::int64_t idem = static_cast<std::int64_t>(static_cast<i128>(rest) * mod_inverse(rest % pk, pk) % level);
    for (Index j = 0; j < a.rank(); ++j) {
      const Element xp = a.scale(a.generator(j), idem);
      const Element cp = part.pa.coordinates(xp);
      const Element yp = part.pb.lift(part.map.apply(part.pb.form(), cp));
      images.col(j) = b.add(images.col(j), yp);
    }
  }
  FormMap map{images};
  if (!is_isometry(a, b, map)) fail(Errc::NotFound, "assembled isomorphism failed verification");
  return map;
}

// ---------------------------------------------------------------- Jordan

Integer OddJordan::discriminant() const {
  return pow(Integer(prime), static_cast<unsigned>(exponent)) * Integer(unit);
}

OddJordan odd_jordan(const FiniteQuadraticForm& f, std::int64_t p) {
  if (p == 2 || !is_prime(p)) fail(Errc::BadPrime, "odd_jordan needs an odd prime");
  OddJordan out;
  out.prime = p;
  FiniteQuadraticForm cur = p_part_form(f, p);
  int sign = 1;
  const std::int64_t nonresidue = smallest_nonresidue(p);
  while (!cur.is_trivial()) {
    const std::int64_t top = *std::max_element(cur.factors().begin(), cur.factors().end());
    std::vector<Element> candidates;
    for (Index i = 0; i < cur.rank(); ++i)
      if (cur.factors()[static_cast<std::size_t>(i)] == top) candidates.push_back(cur.generator(i));
    for (Index i = 0; i < cur.rank(); ++i)
      for (Index j = i + 1; j < cur.rank(); ++j) candidates.push_back(cur.add(cur.generator(i), cur.generator(j)));
    std::optional<Element> pick;
    std::int64_t w = 0;
    for (const Element& x : candidates) {
      if (cur.element_order(x) != top) continue;
      // b(x,x) = num / level with level = top here.
      const std::int64_t num = cur.b_numerator(x, x);
      if (num % p != 0) {
        pick = x;
        w = num;
        break;
      }
    }
    if (!pick) fail(Errc::Unsupported, "odd Jordan splitting stalled (degenerate form?)");
    const int ls = legendre(w, p);
    out.blocks.push_back(JordanBlock{top, ls == 1 ? 1 : nonresidue});
    sign *= ls;
    int k = 0;
    for (std::int64_t t = top; t > 1; t /= p) ++k;
    out.exponent += k;
    ElementMatrix xm(cur.rank(), 1);
    xm.col(0) = *pick;
    cur = restriction(cur, perp_subgroup(cur, xm)).form();
  }
  out.unit = sign == 1 ? 1 : nonresidue;
  return out;
}

TwoAdicLattice two_adic_lattice(const FiniteQuadraticForm& f) {
  TwoAdicLattice out;
  FiniteQuadraticForm cur = p_part_form(f, 2);
  std::int64_t unit = 1;
  while (!cur.is_trivial()) {
    const std::int64_t top = cur.level();
    int k = 0;
    for (std::int64_t t = top; t > 1; t /= 2) ++k;
    std::vector<Index> maximal;
    for (Index i = 0; i < cur.rank(); ++i)
      if (cur.factors()[static_cast<std::size_t>(i)] == top) maximal.push_back(i);
    ElementMatrix block;
    for (Index i : maximal) {
      const Element x = cur.generator(i);
      if (cur.b_numerator(x, x) % 2 != 0) {
        // Z_2-entry 2^k c with c = a^-1; odd a satisfies a^-1 = a mod 8.
        unit = unit * mod(cur.q_numerator(x), 8) % 8;
        out.exponent += k;
        block = ElementMatrix(cur.rank(), 1);
        block.col(0) = x;
        break;
      }
    }
    if (block.cols() == 0 && !maximal.empty()) {
      const Element x = cur.generator(maximal.front());
      for (Index j = 0; j < cur.rank(); ++j) {
        const Element y = cur.generator(j);
        if (cur.b_numerator(x, y) % 2 == 0) continue;
        const std::int64_t a = cur.q_numerator(x), c = cur.q_numerator(y), b = cur.b_numerator(x, y);
        unit = unit * mod(a * c - b * b, 8) % 8;
        out.exponent += 2 * k;
        block = ElementMatrix(cur.rank(), 2);
        block.col(0) = x;
        block.col(1) = y;
        break;
      }
    }
    if (block.cols() == 0) fail(Errc::Unsupported, "2-adic splitting stalled");
    cur = restriction(cur, perp_subgroup(cur, block)).form();
  }
  out.unit = mod(unit, 8);
  return out;
}

bool splits_unit_block(const FiniteQuadraticForm& f) {
  for (std::int64_t d : f.factors())
    if ((d & (d - 1)) != 0) fail(Errc::NotTwoGroup, "form is not on a 2-group");
  const Index k = f.rank();
  if (k > 30) fail(Errc::TooLarge, "too many cyclic factors");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    Element x = f.zero();
    for (Index i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i)) x(i) = f.factors()[static_cast<std::size_t>(i)] / 2;
    const Rational v = f.q(x);
    if (v == Rational(Integer(1), Integer(2)) || v == Rational(Integer(3), Integer(2))) return true;
  }
  return false;
}

// ---------------------------------------------------------------- Milgram

namespace {

int gauss_sum_exact(const FiniteQuadraticForm& f, std::uint64_t bound) {
  const std::uint64_t n = f.size(bound);
  if (f.is_trivial()) return 0;
  const std::int64_t level = f.level();
  const std::int64_t m64 = std::lcm(2 * level, std::int64_t{8});
  if (m64 > (1 << 16)) fail(Errc::TooLarge, "cyclotomic conductor too large for direct summation");
  const int m = static_cast<int>(m64);
  const std::int64_t step = m64 / (2 * level);
  std::vector<Integer> counts(static_cast<std::size_t>(m), Integer(0));
  for (std::uint64_t i = 0; i < n; ++i) {
    counts[static_cast<std::size_t>(f.q_numerator(f.element_at(i)) * step % m64)] += Integer(1);
  }
  CyclotomicInteger g = CyclotomicInteger::from_exponent_counts(m, counts);
  // Multiply by reference sums of known signature until |A| is a square.
  int shift = 0;
  Integer size(n);
  for (const auto& [p, e] : factorize(static_cast<std::int64_t>(n))) {
    if (e % 2 == 0) continue;
    std::vector<Integer> ref(static_cast<std::size_t>(m), Integer(0));
    if (p == 2) {
      ref[0] += Integer(1);
      ref[static_cast<std::size_t>(m / 4)] += Integer(1);  // 1 + i
      shift += 1;
    } else {
      for (std::int64_t x = 0; x < p; ++x) ref[static_cast<std::size_t>((x * x % p) * (m64 / p))] += Integer(1);
      shift += (p % 4 == 1) ? 0 : 2;
    }
    g = g * CyclotomicInteger::from_exponent_counts(m, ref);
    size *= Integer(p);
  }
  const Integer root = isqrt(size);
  for (int t = 0; t < 8; ++t) {
    if (g == CyclotomicInteger::monomial(m, root, t * m / 8)) return ((t - shift) % 8 + 8) % 8;
  }
  fail(Errc::NonWitt, "Gauss sum is not of Milgram type (degenerate form?)");
}

}  // namespace

int gauss_sum_signature(const FiniteQuadraticForm& f, std::uint64_t bound) { return gauss_sum_exact(f, bound); }

int milgram_signature(const FiniteQuadraticForm& f, std::uint64_t bound) {
  int s = 0;
  for (std::int64_t p : primes_of(f)) {
    if (p == 2) {
      s += gauss_sum_exact(p_part_form(f, 2), bound);
      continue;
    }
    // Z/p^k with q(g) = 2u/p^k: the Gauss sum is p^(k/2) for k even and
    // p^((k-1)/2) (u/p) eps_p sqrt(p) for k odd, eps_p in {1, i}.
    const OddJordan j = odd_jordan(f, p);
    for (const JordanBlock& blk : j.blocks) {
      int k = 0;
      for (std::int64_t t = blk.order; t > 1; t /= p) ++k;
      if (k % 2 == 0) continue;
      const int lw = blk.unit == 1 ? 1 : -1;
      const int lu = lw * legendre(2, p);
      s += (p % 4 == 3 ? 2 : 0) + (lu == -1 ? 4 : 0);
    }
  }
  return ((s % 8) + 8) % 8;
}

// ------------------------------------------------------ lattice interface

Element DiscriminantGroup::element_of(const RatVector& v, const IntMatrix& gram) const {
  const RatVector y = to_rational(gram) * v;
  IntVector yi(y.size());
  for (Index i = 0; i < y.size(); ++i) {
    if (!y(i).is_integer()) fail(Errc::NotSubgroup, "vector is not in the dual lattice");
    yi(i) = y(i).num();
  }
  const IntVector c = coordinate_map * yi;
  Element out(form.rank());
  for (Index i = 0; i < form.rank(); ++i) out(i) = mod_floor(c(i), Integer(form.factors()[static_cast<std::size_t>(i)])).to_int64();
  return out;
}

DiscriminantGroup discriminant_group(const Lattice& l) {
  if (!l.is_even()) fail(Errc::NotEven, "discriminant forms need an even lattice");
  const Index n = l.rank();
  const SnfResult s = smith_normal_form(l.gram());
  std::vector<Index> keep;
  std::vector<std::int64_t> factors;
  for (Index i = 0; i < n; ++i) {
    if (s.d(i, i) > Integer(1)) {
      keep.push_back(i);
      factors.push_back(s.d(i, i).to_int64());
    }
  }
  const Index k = static_cast<Index>(keep.size());
  RatMatrix gens(n, k);
  IntMatrix cmap(k, n);
  for (Index j = 0; j < k; ++j) {
    const Index c = keep[static_cast<std::size_t>(j)];
    for (Index i = 0; i < n; ++i) gens(i, j) = Rational(s.v(i, c), s.d(c, c));
    cmap.row(j) = s.u.row(c);
  }
  const RatMatrix q = gens.transpose() * to_rational(l.gram()) * gens;
  return DiscriminantGroup{FiniteQuadraticForm(std::move(factors), q), std::move(gens), std::move(cmap)};
}

FiniteQuadraticForm discriminant_form(const Lattice& l) { return discriminant_group(l).form; }

Overlattice overlattice_from_isotropic(const Lattice& l, const ElementMatrix& generators) {
  const DiscriminantGroup dg = discriminant_group(l);
  if (generators.rows() != dg.form.rank()) fail(Errc::NotSubgroup, "generators have the wrong number of coordinates");
  if (!is_isotropic(dg.form, generators)) fail(Errc::NotIsotropic, "subgroup is not isotropic");
  RatMatrix gens(generators.rows(), generators.cols());
  for (Index i = 0; i < generators.rows(); ++i)
    for (Index j = 0; j < generators.cols(); ++j) gens(i, j) = Rational(generators(i, j));
  return overlattice_from_vectors(l, RatMatrix(dg.generators * gens));
}

}  // namespace enriques
