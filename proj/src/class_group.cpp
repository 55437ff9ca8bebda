#include "enriques/class_group.hpp"

#include "enriques/arith.hpp"
#include "enriques/errors.hpp"

#include <numeric>

namespace enriques {

namespace {

using std::int64_t;

bool squarefree(int64_t n) {
  for (const auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

void require_fundamental(int64_t disc) {
  if (disc >= 0) fail(Errc::NotImaginary, "discriminant " + std::to_string(disc) + " is not negative");
  if (!is_fundamental_discriminant(disc))
    fail(Errc::NotFundamental, std::to_string(disc) + " is not a fundamental discriminant");
}

}  // namespace

bool is_fundamental_discriminant(int64_t disc) {
  if (disc == 0 || disc == 1) return false;
  const int64_t r = mod(disc, 4);
  if (r == 1) return squarefree(disc < 0 ? -disc : disc);
  if (r != 0) return false;
  const int64_t m = disc / 4;
  const int64_t mr = mod(m, 4);
  return (mr == 2 || mr == 3) && squarefree(m < 0 ? -m : m);
}

ClassGroupData class_group(int64_t disc) {
  require_fundamental(disc);
  ClassGroupData g;
  g.discriminant = disc;
  // |b| <= a <= c forces 3a^2 <= |D|.
  for (int64_t a = 1; 3 * a * a <= -disc; ++a) {
    for (int64_t b = -a + 1; b <= a; ++b) {
      const int64_t num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      const int64_t c = num / (4 * a);
      if (c < a || (c == a && b < 0)) continue;
      g.reduced_forms.push_back({a, b, c});
    }
  }
  g.class_number = static_cast<int64_t>(g.reduced_forms.size());
  for (const BinaryForm& f : g.reduced_forms)
    if (f.is_ambiguous()) ++g.ambiguous_count;
  return g;
}

FundamentalSplit fundamental_split(int64_t disc) {
  if (disc >= 0) fail(Errc::NotImaginary, "discriminant " + std::to_string(disc) + " is not negative");
  if (mod(disc, 4) != 0 && mod(disc, 4) != 1)
    fail(Errc::BadCongruence, std::to_string(disc) + " is not 0 or 1 mod 4");
  // -disc = f0^2 s with s squarefree; D = -s or -4s.
  int64_t f = 1, sq = 1;
  for (const auto& [p, e] : factorize(-disc)) {
    f *= ipow(p, e / 2);
    if (e % 2) sq *= p;
  }
  if (mod(-sq, 4) != 1) f /= 2;
  return FundamentalSplit{f, disc / (f * f)};
}

std::string_view behavior_name(TwoBehavior b) {
  switch (b) {
    case TwoBehavior::Split: return "split";
    case TwoBehavior::Inert: return "inert";
    case TwoBehavior::Ramified: return "ramified";
  }
  return "?";
}

TwoBehavior prime2_splitting(int64_t disc) {
  require_fundamental(disc);
  if (mod(disc, 2) == 0) return TwoBehavior::Ramified;
  return mod(disc, 8) == 5 ? TwoBehavior::Inert : TwoBehavior::Split;
}

int64_t ray_class2_order(int64_t disc) {
  const int64_t h = class_group(disc).class_number;
  int64_t residue_units = 1;
  switch (prime2_splitting(disc)) {
    case TwoBehavior::Inert: residue_units = 3; break;
    case TwoBehavior::Ramified: residue_units = 2; break;
    case TwoBehavior::Split: residue_units = 1; break;
  }
  // -1 = 1 mod 2; the extra roots of unity of Q(i) and Q(sqrt -3) are
  // distinct units of O/2.
  const int64_t unit_image = disc == -3 ? 3 : disc == -4 ? 2 : 1;
  return h * residue_units / unit_image;
}

TheoremCReport theorem_c_report(const IntMatrix& gram) {
  if (gram.rows() != 2 || gram.cols() != 2 || gram(0, 1) != gram(1, 0))
    fail(Errc::NotEvenGram, "expected a symmetric 2x2 Gram matrix");
  if (gram(0, 0).is_odd() || gram(1, 1).is_odd()) fail(Errc::NotEvenGram, "diagonal entries must be even");
  TheoremCReport r;
  r.form = BinaryForm{(gram(0, 0) / Integer(2)).to_int64(), gram(0, 1).to_int64(), (gram(1, 1) / Integer(2)).to_int64()};
  const int64_t a = r.form.a, b = r.form.b, c = r.form.c;
  if (a <= 0 || 4 * a * c - b * b <= 0) fail(Errc::NotPositiveDefinite, "Gram matrix is not positive definite");

  r.d = 4 * a * c - b * b;
  const FundamentalSplit s = fundamental_split(-r.d);
  r.conductor = s.conductor;
  r.fundamental = s.fundamental;
  r.end_is_maximal = r.conductor == std::gcd(std::gcd(a, b), c);
  r.two_behavior = prime2_splitting(r.fundamental);
  r.applies = r.end_is_maximal && r.two_behavior == TwoBehavior::Inert && r.fundamental != -3;
  if (r.applies) r.index_k2_k1 = 3;

  if (!r.end_is_maximal) r.notes.push_back("f != gcd(a,b,c): End of the Hodge structure is not the maximal order");
  if (r.two_behavior != TwoBehavior::Inert) r.notes.push_back("2 is not inert in E");
  if (r.fundamental == -3) r.notes.push_back("E = Q(sqrt -3) excluded");
  if (r.two_behavior == TwoBehavior::Split) r.notes.push_back("Galois action on Br(X)[2] trivial");
  if (mod(-r.d, 8) == 5) r.notes.push_back("f odd and D = 5 mod 8: Enr(X) = empty");
  return r;
}

}  // namespace enriques
