#include "enriques/cyclotomic.hpp"

#include "enriques/errors.hpp"

#include <map>
#include <mutex>

namespace enriques {

namespace {

using Poly = std::vector<Integer>;

// Exact quotient of a by a monic divisor b.
Poly divide_exact(const Poly& a, const Poly& b) {
  Poly rem = a;
  const std::size_t db = b.size() - 1;
  Poly q(a.size() - db, Integer(0));
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = rem[i];
    if (c.is_zero()) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  return q;
}

// Remainder modulo a monic polynomial.
Poly reduce(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = a[i];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j)
      if (!b[j].is_zero()) a[i - db + j] -= c * b[j];
  }
  a.resize(db, Integer(0));
  return a;
}

Poly compute_cyclotomic(int m) {
  Poly p(static_cast<std::size_t>(m) + 1, Integer(0));
  p[0] = Integer(-1);
  p[static_cast<std::size_t>(m)] = Integer(1);
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  }
  return p;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int m) {
  if (m < 1) fail(Errc::BadParams, "cyclotomic conductor must be positive");
  static std::mutex lock;
  static std::map<int, Poly> cache;
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  Poly p = compute_cyclotomic(m);
  std::lock_guard<std::mutex> guard(lock);
  return cache.emplace(m, std::move(p)).first->second;
}

CyclotomicInteger::CyclotomicInteger(int m)
    : m_(m), coeffs_(cyclotomic_polynomial(m).size() - 1, Integer(0)) {}

CyclotomicInteger CyclotomicInteger::from_exponent_counts(int m, const std::vector<Integer>& counts) {
  CyclotomicInteger out(m);
  Poly full(static_cast<std::size_t>(m), Integer(0));
  for (std::size_t j = 0; j < counts.size(); ++j) full[j % static_cast<std::size_t>(m)] += counts[j];
  out.coeffs_ = reduce(std::move(full), cyclotomic_polynomial(m));
  return out;
}

CyclotomicInteger CyclotomicInteger::monomial(int m, const Integer& c, int j) {
  std::vector<Integer> counts(static_cast<std::size_t>(m), Integer(0));
  counts[static_cast<std::size_t>(((j % m) + m) % m)] = c;
  return from_exponent_counts(m, counts);
}

bool CyclotomicInteger::is_zero() const {
  for (const Integer& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  if (a.m_ != b.m_) fail(Errc::BadParams, "cyclotomic conductors differ");
  Poly prod(a.coeffs_.size() + b.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  CyclotomicInteger out(a.m_);
  out.coeffs_ = reduce(std::move(prod), cyclotomic_polynomial(a.m_));
  return out;
}

CyclotomicInteger operator-(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  if (a.m_ != b.m_) fail(Errc::BadParams, "cyclotomic conductors differ");
  CyclotomicInteger out = a;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
  return out;
}

}  // namespace enriques
