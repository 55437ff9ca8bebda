#include "enriques/arith.hpp"

#include "enriques/errors.hpp"
#include "enriques/matrix.hpp"

#include <string>

namespace enriques {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(const Integer& n) {
  std::vector<std::int64_t> out;
  for (const auto& [p, e] : factorize(abs(n).to_int64())) out.push_back(p);
  return out;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 0) n = -n;
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int valuation(const Integer& n, std::int64_t p) {
  if (n.is_zero()) fail(Errc::BadParams, "valuation of zero");
  Integer v = n;
  int k = 0;
  const Integer pp(p);
  while ((v % pp).is_zero()) {
    v /= pp;
    ++k;
  }
  return k;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b = mod(b, m);
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

int legendre(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  auto [g, x, y] = extended_gcd<std::int64_t>(mod(a, m), m);
  if (g != 1) fail(Errc::BadParams, std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return mod(x, m);
}

std::int64_t ipow(std::int64_t base, int exponent) {
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) fail(Errc::Overflow, "power exceeds int64");
  }
  return r;
}

std::int64_t smallest_nonresidue(std::int64_t p) {
  for (std::int64_t a = 2; a < p; ++a)
    if (legendre(a, p) == -1) return a;
  fail(Errc::BadPrime, "no quadratic non-residue modulo " + std::to_string(p));
}

}  // namespace enriques
