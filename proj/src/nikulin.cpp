#include "enriques/nikulin.hpp"

#include "enriques/arith.hpp"
#include "enriques/enriques_lattice.hpp"
#include "enriques/errors.hpp"

#include <algorithm>
#include <string>

namespace enriques {

namespace {

using std::int64_t;

std::string sig_text(Signature s) { return "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + ")"; }

// Unit part of n at p: n / p^v(n).
Integer unit_part(Integer n, int64_t p) {
  while (mod_floor(n, Integer(p)).is_zero()) n = n / Integer(p);
  return n;
}

RatVector dual_vector(const DiscriminantGroup& dg, const Element& x) {
  RatVector v = RatVector::Constant(dg.generators.rows(), Rational(0));
  for (Index i = 0; i < x.size(); ++i) v += dg.generators.col(i) * Rational(x(i));
  return v;
}

ElementMatrix stack(const ElementMatrix& top, const ElementMatrix& bottom) {
  ElementMatrix out(top.rows() + bottom.rows(), top.cols());
  out << top, bottom;
  return out;
}

Element stack(const Element& top, const Element& bottom) {
  Element out(top.size() + bottom.size());
  out << top, bottom;
  return out;
}

const DiscriminantGroup& n_discriminant() {
  static const DiscriminantGroup dg = discriminant_group(enriques_lattice());
  return dg;
}

FiniteQuadraticForm datum_ambient(const FiniteQuadraticForm& ql) {
  return direct_sum(ql, n_discriminant().form.negated());
}

Signature k_signature_for(Signature l) { return Signature{2 - l.plus, 10 - l.minus}; }

RatMatrix inverse_of(const IntMatrix& basis) {
  const auto inv = rational_inverse(basis);
  if (!inv) fail(Errc::NotSublattice, "sublattice basis is singular");
  return *inv;
}

Integer sub_index(const IntMatrix& basis) {
  if (basis.rows() != basis.cols()) fail(Errc::NotSublattice, "sublattice basis must be square");
  const Integer det = abs(determinant(basis));
  if (det.is_zero()) fail(Errc::NotSublattice, "sublattice basis is singular");
  return det;
}

// Pivot candidates: basis vectors, then e_i +- e_j.
std::vector<IntVector> pivot_candidates(Index n) {
  std::vector<IntVector> out;
  for (Index i = 0; i < n; ++i) {
    IntVector v = IntVector::Constant(n, Integer(0));
    v(i) = Integer(1);
    out.push_back(v);
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (int s : {1, -1}) {
        IntVector v = IntVector::Constant(n, Integer(0));
        v(i) = Integer(1);
        v(j) = Integer(s);
        out.push_back(v);
      }
  return out;
}

// {x : (x.v) = 0 mod p} for a pivot with (v^2) != 0 mod p, in coordinates of l.
IndexPSublattice hyperplane(const Lattice& l, int64_t p) {
  const Index n = l.rank();
  for (const IntVector& v : pivot_candidates(n)) {
    const Integer norm = (v.transpose() * l.gram() * v)(0, 0);
    if (mod_floor(norm, Integer(p)).is_zero()) continue;
    const IntVector w = l.gram() * v;
    IntMatrix system(1, n + 1);
    system.leftCols(n) = w.transpose();
    system(0, n) = Integer(p);
    const IntMatrix kernel = integer_kernel(system);
    const IntMatrix basis = column_hermite_basis(IntMatrix(kernel.topRows(n)));
    return IndexPSublattice{sublattice_from_gram_change(l, basis), v};
  }
  fail(Errc::NoUnitVector, "no basis combination with norm prime to " + std::to_string(p));
}

// The embedding A_L -> A_{L'} for L' of index n prime to |A_L|:
// x + L -> n u x + L' with n u = 1 mod 2|A_L|.
ElementMatrix embed_into_sublattice(const DiscriminantGroup& big, const DiscriminantGroup& small, const Lattice& sub,
                                    const IntMatrix& basis, const Integer& index) {
  const int64_t m = 2 * big.form.order().to_int64();
  const int64_t n = mod(index.to_int64(), m);
  const int64_t scale = (index * Integer(mod_inverse(n, m))).to_int64();
  const RatMatrix to_sub = inverse_of(basis);
  ElementMatrix out(small.form.rank(), big.form.rank());
  for (Index i = 0; i < big.form.rank(); ++i) {
    const RatVector v = to_sub * big.generators.col(i) * Rational(scale);
    out.col(i) = small.element_of(v, sub.gram());
  }
  return out;
}

// Generators of the primary parts of f at the given primes.
ElementMatrix primary_generators(const FiniteQuadraticForm& f, const std::vector<int64_t>& primes) {
  ElementMatrix gens(f.rank(), 0);
  for (int64_t p : primes) {
    const Subquotient part = p_part(f, p);
    ElementMatrix next(f.rank(), gens.cols() + part.lifts().cols());
    next << gens, part.lifts();
    gens = next;
  }
  return gens;
}

void require_datum(const Lattice& l, const EmbeddingDatum& d, const std::string& where) {
  const DatumCheck c = check_embedding_datum(l, d);
  if (c.ok()) return;
  std::string msg = where + ":";
  for (const std::string& f : c.failures) msg += " " + f + ";";
  fail(Errc::DatumInvalid, msg);
}

}  // namespace

// ------------------------------------------------------------- existence

ExistenceReport existence_report(Signature sig, const FiniteQuadraticForm& f) {
  ExistenceReport r;
  const int rank = sig.plus + sig.minus;

  const int sign = milgram_signature(f);
  if (mod(sig.plus - sig.minus - sign, 8) != 0) {
    r.signature_congruence = false;
    r.failures.push_back("t+ - t- = " + std::to_string(sig.plus - sig.minus) + " but sign(q) = " +
                         std::to_string(sign) + " mod 8");
  }
  if (sig.plus < 0 || sig.minus < 0 || rank < min_generators(f)) {
    r.rank_bound = false;
    r.failures.push_back("rank " + std::to_string(rank) + " below l(A) = " + std::to_string(min_generators(f)));
  }
  if (!r.rank_bound) return r;

  const Integer order = f.order();
  for (int64_t p : primes_of(f)) {
    if (p == 2 || rank != min_generators(f, p)) continue;
    const OddJordan oj = odd_jordan(f, p);
    const Integer lhs = unit_part(sig.minus % 2 ? -order : order, p);
    const int64_t lhs_mod = mod_floor(lhs, Integer(p)).to_int64();
    if (legendre(lhs_mod, p) != legendre(oj.unit, p)) {
      r.odd_discriminants = false;
      r.failures.push_back("(-1)^t- |A| and discr K(q_" + std::to_string(p) + ") differ in square class");
    }
  }

  if (min_generators(f, 2) > 0 && rank == min_generators(f, 2)) {
    const FiniteQuadraticForm q2 = p_part_form(f, 2);
    if (!splits_unit_block(q2)) {
      const TwoAdicLattice k2 = two_adic_lattice(q2);
      const int64_t u = mod_floor(unit_part(order, 2), Integer(8)).to_int64();
      if (u != k2.unit && u != mod(-k2.unit, 8)) {
        r.two_adic_discriminant = false;
        r.failures.push_back("|A| and +-discr K(q_2) differ in square class");
      }
    }
  }
  return r;
}

bool exists_even_lattice(Signature sig, const FiniteQuadraticForm& f) { return existence_report(sig, f).holds(); }

// ------------------------------------------------------------- data

Subquotient datum_quotient(const Lattice& l, const EmbeddingDatum& d) {
  const FiniteQuadraticForm ambient = datum_ambient(discriminant_form(l));
  return quotient(ambient, stack(d.h_l, d.gamma));
}

DatumCheck check_embedding_datum(const Lattice& l, const EmbeddingDatum& d) {
  DatumCheck c;
  const FiniteQuadraticForm ql = discriminant_form(l);
  const FiniteQuadraticForm& qn = n_discriminant().form;
  auto miss = [&](bool& flag, bool ok, const std::string& why) {
    flag = ok;
    if (!ok) c.failures.push_back(why);
  };

  miss(c.shapes,
       d.h_l.rows() == ql.rank() && d.gamma.rows() == qn.rank() && d.h_l.cols() == d.gamma.cols(),
       "H_L / gamma generators have the wrong shape");
  miss(c.k_rank, d.k.rank == 12 - static_cast<int>(l.rank()),
       "K has rank " + std::to_string(d.k.rank) + ", expected " + std::to_string(12 - l.rank()));
  miss(c.k_signature, d.k.signature == k_signature_for(l.signature()) && d.k.signature.rank() == d.k.rank,
       "K has signature " + sig_text(d.k.signature) + ", expected " + sig_text(k_signature_for(l.signature())));
  if (!c.shapes) return c;

  const FiniteQuadraticForm ambient = datum_ambient(ql);
  const ElementMatrix graph = stack(d.h_l, d.gamma);
  const Integer hl = subgroup_order(ql, d.h_l), hn = subgroup_order(qn, d.gamma);
  miss(c.gamma_bijective, subgroup_order(ambient, graph) == hl && hl == hn, "gamma is not a bijection H_L -> H_N");

  bool iso = true;
  for (Index i = 0; i < d.h_l.cols() && iso; ++i) {
    if (ql.q(d.h_l.col(i)) != qn.q(d.gamma.col(i))) iso = false;
    for (Index j = i + 1; j < d.h_l.cols() && iso; ++j)
      if (ql.b(d.h_l.col(i), d.h_l.col(j)) != qn.b(d.gamma.col(i), d.gamma.col(j))) iso = false;
  }
  miss(c.gamma_isometry, iso, "gamma does not preserve q");
  miss(c.graph_isotropic, is_isotropic(ambient, graph), "graph of gamma is not isotropic");

  if (c.graph_isotropic) {
    const Subquotient quot = quotient(ambient, graph);
    miss(c.delta_isometry, is_isometry(d.k.form.negated(), quot.form(), d.delta),
         "delta is not an isometry -q_K -> Gamma^perp / Gamma");
  } else {
    c.delta_isometry = false;
  }
  if (c.k_signature) {
    const ExistenceReport e = existence_report(d.k.signature, d.k.form);
    c.k_exists = e.holds();
    for (const std::string& f : e.failures) c.failures.push_back("K: " + f);
  }
  return c;
}

bool verify_embedding_datum(const Lattice& l, const EmbeddingDatum& d) { return check_embedding_datum(l, d).ok(); }

EmbeddingDatum datum_from_embedding(const PrimitiveEmbedding& emb) {
  const Lattice& l = emb.source;
  const IntMatrix& gn = enriques_lattice().gram();
  const DiscriminantGroup dl = discriminant_group(l);
  const DiscriminantGroup& dn = n_discriminant();

  // c with (G_N B) c integral, i.e. B c in N*.
  const IntMatrix gb = gn * emb.images;
  const SnfResult s = snf(gb);
  const Index r = l.rank();
  std::vector<RatVector> gens;
  for (Index i = 0; i < r; ++i) {
    const Integer di = s.d(i, i);
    if (di == Integer(1)) continue;
    RatVector c(r);
    for (Index j = 0; j < r; ++j) c(j) = Rational(s.v(j, i), di);
    gens.push_back(c);
  }
  EmbeddingDatum d;
  d.h_l.resize(dl.form.rank(), static_cast<Index>(gens.size()));
  d.gamma.resize(dn.form.rank(), static_cast<Index>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    d.h_l.col(static_cast<Index>(j)) = dl.element_of(gens[j], l.gram());
    d.gamma.col(static_cast<Index>(j)) = dn.element_of(RatVector(to_rational(emb.images) * gens[j]), gn);
  }

  const NComplement k = complement_in_n(emb);
  d.k = KInvariants{static_cast<int>(k.lattice.rank()), k.lattice.signature(), discriminant_form(k.lattice)};
  const Subquotient quot = datum_quotient(l, d);
  const auto delta = fqf_isomorphic(d.k.form.negated(), quot.form());
  if (!delta) fail(Errc::DatumInvalid, "-q_K is not isomorphic to Gamma^perp / Gamma");
  d.delta = *delta;
  return d;
}

// ------------------------------------------------------------- condition (*)

StarReport condition_star(const Lattice& l, const IntMatrix& sub_basis) {
  if (sub_basis.rows() != l.rank()) fail(Errc::NotSublattice, "sublattice basis has the wrong number of rows");
  StarReport r;
  r.index = sub_index(sub_basis);
  const Integer two_discr = Integer(2) * abs(l.determinant());
  r.gcd_ok = gcd(two_discr, r.index) == Integer(1);

  const Sublattice sub = sublattice_from_gram_change(l, sub_basis);
  const std::vector<Integer> factors = snf(sub.lattice.gram()).invariant_factors;
  r.ell_bounds_ok = true;
  for (int64_t p : prime_factors(r.index)) {
    if (mod_floor(two_discr, Integer(p)).is_zero()) continue;
    int ell = 0;
    for (const Integer& d : factors)
      if (mod_floor(d, Integer(p)).is_zero()) ++ell;
    r.witness_primes.push_back({p, ell});
    if (ell >= 12 - static_cast<int>(l.rank())) r.ell_bounds_ok = false;
  }
  return r;
}

IndexPSublattice index_p_sublattice(const Lattice& l, std::int64_t p) {
  if (p < 3 || !is_prime(p)) fail(Errc::BadPrime, std::to_string(p) + " is not an odd prime");
  if (mod_floor(l.determinant(), Integer(p)).is_zero())
    fail(Errc::BadPrime, std::to_string(p) + " divides discr(L) = " + l.determinant().to_string());
  return hyperplane(l, p);
}

std::vector<IndexPSublattice> index_p_chain(const Lattice& l, const std::vector<std::int64_t>& primes) {
  std::vector<IndexPSublattice> out;
  for (int64_t p : primes)
    if (p < 3 || !is_prime(p) || mod_floor(l.determinant(), Integer(p)).is_zero())
      fail(Errc::BadPrime, std::to_string(p) + " is not an odd prime prime to discr(L)");
  IntMatrix to_l = identity<Integer>(l.rank());
  Lattice current = l;
  for (int64_t p : primes) {
    const IndexPSublattice step = hyperplane(current, p);
    const IntVector pivot = to_l * step.pivot;
    to_l = to_l * step.sub.basis;
    current = step.sub.lattice;
    out.push_back(IndexPSublattice{Sublattice{current, to_l, abs(determinant(to_l))}, pivot});
  }
  return out;
}

bool restriction_mod2_bijective(const IntMatrix& sub_basis) {
  // alpha |-> alpha . B over F_2: bijective iff det B is odd.
  return determinant(sub_basis).is_odd();
}

// ------------------------------------------------------------- transfer

EmbeddingDatum transfer_datum_down(const Lattice& l, const IntMatrix& sub_basis, const EmbeddingDatum& d) {
  const StarReport star = condition_star(l, sub_basis);
  if (!star.verdict()) fail(Errc::StarViolated, "L' does not satisfy condition (*)");
  require_datum(l, d, "input datum");
  if (star.index == Integer(1)) return d;

  const Sublattice sub = sublattice_from_gram_change(l, sub_basis);
  const DiscriminantGroup dl = discriminant_group(l);
  const DiscriminantGroup ds = discriminant_group(sub.lattice);
  const ElementMatrix iota = embed_into_sublattice(dl, ds, sub.lattice, sub_basis, star.index);
  const FormMap to_sub{iota};

  // A_{L'} = iota(A_L) + A_new.
  const std::vector<int64_t> new_primes = prime_factors(star.index);
  const Subquotient a_new = restriction(ds.form, primary_generators(ds.form, new_primes));
  const FiniteQuadraticForm& q_new = a_new.form();

  const int sign_new = milgram_signature(q_new);
  if (sign_new % 8 != 0)
    fail(Errc::ExistenceFails, "sign(q_new) = " + std::to_string(sign_new) + ", expected 0 mod 8");

  EmbeddingDatum out;
  out.h_l.resize(ds.form.rank(), d.h_l.cols());
  for (Index j = 0; j < d.h_l.cols(); ++j) out.h_l.col(j) = to_sub.apply(ds.form, d.h_l.col(j));
  out.gamma = d.gamma;
  out.k = KInvariants{d.k.rank, d.k.signature, direct_sum(d.k.form, q_new.negated())};
  const ExistenceReport e = existence_report(out.k.signature, out.k.form);
  if (!e.holds()) {
    std::string msg = "no lattice K' with the transferred invariants:";
    for (const std::string& f : e.failures) msg += " " + f + ";";
    fail(Errc::ExistenceFails, msg);
  }

  // delta' = (delta, id) from -q_K + q_new to Gamma'^perp / Gamma'.
  const Subquotient old_q = datum_quotient(l, d);
  const Subquotient new_q = datum_quotient(sub.lattice, out);
  const Index kn = d.k.form.rank(), nn = q_new.rank();
  const Index rl = dl.form.rank();
  out.delta.images.resize(new_q.form().rank(), kn + nn);
  for (Index j = 0; j < kn; ++j) {
    const Element lifted = old_q.lift(d.delta.images.col(j));
    const Element a = to_sub.apply(ds.form, lifted.head(rl));
    out.delta.images.col(j) = new_q.coordinates(stack(a, Element(lifted.tail(lifted.size() - rl))));
  }
  for (Index j = 0; j < nn; ++j) {
    const Element a = a_new.lifts().col(j);
    out.delta.images.col(kn + j) =
        new_q.coordinates(stack(a, Element(Element::Zero(n_discriminant().form.rank()))));
  }
  require_datum(sub.lattice, out, "transferred datum");
  return out;
}

EmbeddingDatum transfer_datum_up(const Lattice& l, const IntMatrix& sub_basis, const EmbeddingDatum& d_prime) {
  const Integer index = sub_index(sub_basis);
  if (!index.is_odd()) fail(Errc::EvenIndex, "[L : L'] = " + index.to_string() + " is even");
  const Sublattice sub = sublattice_from_gram_change(l, sub_basis);
  require_datum(sub.lattice, d_prime, "input datum");
  if (index == Integer(1)) return d_prime;

  const DiscriminantGroup dl = discriminant_group(l);
  const DiscriminantGroup ds = discriminant_group(sub.lattice);
  const Index rs = ds.form.rank(), rn = n_discriminant().form.rank();
  const RatMatrix to_sub = inverse_of(sub_basis);

  // I = L / L' inside A_{L'}.
  ElementMatrix iso(rs, l.rank());
  for (Index j = 0; j < l.rank(); ++j) iso.col(j) = ds.element_of(RatVector(to_sub.col(j)), sub.lattice.gram());

  // I pushed into A_{K'} through delta'^-1.
  const Subquotient old_q = datum_quotient(sub.lattice, d_prime);
  const FiniteQuadraticForm minus_k = d_prime.k.form.negated();
  ElementMatrix iso_k(minus_k.rank(), iso.cols());
  for (Index j = 0; j < iso.cols(); ++j) {
    const Element y = old_q.coordinates(stack(Element(iso.col(j)), Element(Element::Zero(rn))));
    const auto x = preimage(minus_k, old_q.form(), d_prime.delta, y);
    if (!x) fail(Errc::DatumInvalid, "delta' does not reach the image of L / L'");
    iso_k.col(j) = *x;
  }
  const Subquotient k_quot = quotient(d_prime.k.form, iso_k);

  // A_{L'} restricted to I^perp -> A_L through the dual vectors.
  auto to_l = [&](const Element& x) {
    const RatVector v = to_rational(sub_basis) * dual_vector(ds, x);
    return dl.element_of(v, l.gram());
  };

  EmbeddingDatum out;
  out.h_l.resize(dl.form.rank(), d_prime.h_l.cols());
  for (Index j = 0; j < d_prime.h_l.cols(); ++j) out.h_l.col(j) = to_l(d_prime.h_l.col(j));
  out.gamma = d_prime.gamma;
  out.k = KInvariants{d_prime.k.rank, d_prime.k.signature, k_quot.form()};

  const Subquotient new_q = datum_quotient(l, out);
  out.delta.images.resize(new_q.form().rank(), k_quot.form().rank());
  for (Index j = 0; j < k_quot.form().rank(); ++j) {
    const Element y = old_q.lift(d_prime.delta.apply(old_q.form(), k_quot.lifts().col(j)));
    const Element a = to_l(y.head(rs));
    out.delta.images.col(j) = new_q.coordinates(stack(a, Element(y.tail(rn))));
  }
  require_datum(l, out, "transferred datum");
  return out;
}

}  // namespace enriques
