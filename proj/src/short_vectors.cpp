#include "enriques/short_vectors.hpp"

#include "enriques/enriques_lattice.hpp"
#include "enriques/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

namespace enriques {

namespace {

struct Ldl {
  std::vector<Rational> diag;       // q_ii
  std::vector<std::vector<Rational>> mu;  // mu[i][j] = q_ij for j > i
};

// g = L D L^T written as Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2.
Ldl decompose(const IntMatrix& g) {
  const Index n = g.rows();
  RatMatrix a = to_rational(g);
  Ldl out;
  out.diag.resize(static_cast<std::size_t>(n));
  out.mu.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (Index i = 0; i < n; ++i) {
    const Rational d = a(i, i);
    if (d <= Rational(0)) fail(Errc::NotDefinite, "Gram matrix is not definite");
    out.diag[static_cast<std::size_t>(i)] = d;
    for (Index j = i + 1; j < n; ++j) out.mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j) / d;
    for (Index j = i + 1; j < n; ++j)
      for (Index k = i + 1; k < n; ++k) a(j, k) -= a(j, i) * a(i, k) / d;
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(const IntMatrix& g, const Integer& bound, const std::function<bool(const IntVector&)>& visit)
      : n_(g.rows()), ldl_(decompose(g)), bound_(bound), visit_(visit), x_(IntVector::Constant(g.rows(), Integer(0))) {}

  void run() {
    if (n_ == 0 || bound_ <= Integer(0)) return;
    descend(n_ - 1, Rational(bound_));
  }

 private:
  // Returns false to stop.
  bool descend(Index i, const Rational& remaining) {
    const auto si = static_cast<std::size_t>(i);
    Rational c(0);
    for (Index j = i + 1; j < n_; ++j) c -= ldl_.mu[si][static_cast<std::size_t>(j)] * Rational(x_(j));
    const Rational r = remaining / ldl_.diag[si];
    const Integer s = isqrt(r.floor());
    Integer lo = c.floor() - s - Integer(1);
    Integer hi = c.ceil() + s + Integer(1);
    auto fits = [&](const Integer& x) {
      const Rational t = Rational(x) - c;
      return t * t <= r;
    };
    while (lo <= hi && !fits(lo)) lo += Integer(1);
    while (hi >= lo && !fits(hi)) hi -= Integer(1);
    for (Integer x = lo; x <= hi; x += Integer(1)) {
      x_(i) = x;
      const Rational t = Rational(x) - c;
      const Rational rest = remaining - ldl_.diag[si] * t * t;
      if (i == 0) {
        if (!is_zero_vector() && !visit_(x_)) return false;
      } else if (!descend(i - 1, rest)) {
        return false;
      }
    }
    x_(i) = Integer(0);
    return true;
  }

  bool is_zero_vector() const {
    for (Index i = 0; i < n_; ++i)
      if (!x_(i).is_zero()) return false;
    return true;
  }

  Index n_;
  Ldl ldl_;
  Integer bound_;
  const std::function<bool(const IntVector&)>& visit_;
  IntVector x_;
};

// Sign that makes the Gram positive definite.
Integer definite_sign(const Lattice& l) {
  if (l.rank() == 0) return Integer(1);
  if (l.signature().minus == 0) return Integer(1);
  if (l.signature().plus == 0) return Integer(-1);
  fail(Errc::NotDefinite, "lattice of signature (" + std::to_string(l.signature().plus) + "," +
                              std::to_string(l.signature().minus) + ") is indefinite");
}

Integer l1(const IntVector& v) {
  Integer s(0);
  for (Index i = 0; i < v.size(); ++i) s += abs(v(i));
  return s;
}

}  // namespace

void enumerate_short_vectors(const IntMatrix& g, const Integer& bound,
                             const std::function<bool(const IntVector&)>& visit) {
  Enumerator(g, bound, visit).run();
}

bool graded_lex_less(const IntVector& a, const IntVector& b) {
  const Integer la = l1(a), lb = l1(b);
  if (la != lb) return la < lb;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) > b(i);
  return false;
}

std::vector<IntVector> vectors_of_norm(const Lattice& l, const Integer& n, std::size_t cap) {
  const Integer sign = definite_sign(l);
  const Integer target = n * sign;
  std::vector<IntVector> out;
  if (target <= Integer(0)) return out;
  const IntMatrix g = l.gram() * sign;
  enumerate_short_vectors(g, target, [&](const IntVector& x) {
    if (x.dot(g * x) == target) {
      out.push_back(x);
      if (out.size() > cap) fail(Errc::CapExceeded, "more than " + std::to_string(cap) + " vectors of norm " + n.to_string());
    }
    return true;
  });
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

bool has_minus_two_vector(const Lattice& l) {
  if (l.rank() > 0 && l.signature().plus != 0) fail(Errc::NotDefinite, "lattice is not negative definite");
  const IntMatrix g = -l.gram();
  bool found = false;
  enumerate_short_vectors(g, Integer(2), [&](const IntVector& x) {
    found = x.dot(g * x) == Integer(2);
    return !found;
  });
  return found;
}

namespace {

const std::vector<IntVector>& e82_vectors(const Integer& norm) {
  static std::mutex lock;
  static std::map<Integer, std::vector<IntVector>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(norm);
  if (it == cache.end()) it = cache.emplace(norm, vectors_of_norm(standard_lattice(StandardTag::E82), norm)).first;
  return it->second;
}

class TupleSearch {
 public:
  explicit TupleSearch(const IntMatrix& target) : target_(target), k_(target.rows()), e82_(standard_lattice(StandardTag::E82)) {
    for (Index i = 0; i < k_; ++i) candidates_.push_back(&e82_vectors(target(i, i)));
    chosen_ = IntMatrix(8, k_);
  }

  bool run() { return extend(0); }
  const IntMatrix& result() const { return chosen_; }
  std::size_t nodes() const { return nodes_; }

 private:
  bool extend(Index depth) {
    if (depth == k_) return true;
    for (const IntVector& v : *candidates_[static_cast<std::size_t>(depth)]) {
      ++nodes_;
      bool ok = true;
      const IntVector gv = e82_.gram() * v;
      for (Index j = 0; j < depth && ok; ++j) ok = chosen_.col(j).dot(gv) == target_(j, depth);
      if (!ok) continue;
      chosen_.col(depth) = v;
      const IntMatrix prefix = chosen_.leftCols(depth + 1);
      if (primitive_closure(e82_, prefix).index != Integer(1)) continue;
      if (extend(depth + 1)) return true;
    }
    return false;
  }

  const IntMatrix& target_;
  Index k_;
  Lattice e82_;
  std::vector<const std::vector<IntVector>*> candidates_;
  IntMatrix chosen_;
  std::size_t nodes_ = 0;
};

std::string format(const IntMatrix& m) {
  std::string s = "[";
  for (Index i = 0; i < m.rows(); ++i) {
    s += i ? ";" : "";
    for (Index j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m(i, j).to_string();
  }
  return s + "]";
}

}  // namespace

IntMatrix find_tuple_in_e82(const IntMatrix& target) {
  const Index k = target.rows();
  if (k < 1 || k > 4 || target.cols() != k) fail(Errc::BadShape, "target Gram must be square of size 1..4");
  if (!is_symmetric(target)) fail(Errc::BadShape, "target Gram must be symmetric");
  for (Index i = 0; i < k; ++i) {
    if (!mod_floor(target(i, i), Integer(4)).is_zero()) fail(Errc::BadParams, "diagonal entries must be divisible by 4: " + format(target));
    for (Index j = 0; j < k; ++j)
      if (target(i, j).is_odd()) fail(Errc::BadParams, "entries must be even: " + format(target));
  }
  const Inertia in = inertia(target);
  if (in.minus != k) fail(Errc::BadParams, "target Gram must be negative definite: " + format(target));
  TupleSearch search(target);
  if (!search.run()) {
    fail(Errc::NotFound, "no primitive tuple in E8(2) with Gram " + format(target) + " after " +
                             std::to_string(search.nodes()) + " candidates");
  }
  return search.result();
}

}  // namespace enriques
