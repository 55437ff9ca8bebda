#pragma once

#include "enriques/integer.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace enriques {

bool is_prime(std::int64_t n);

/// Distinct prime divisors of |n| in increasing order, by trial division.
std::vector<std::int64_t> prime_factors(const Integer& n);

/// (prime, exponent) pairs of |n| in increasing order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Largest k with p^k | n; n must be non-zero.
int valuation(const Integer& n, std::int64_t p);

/// Legendre symbol (a/p) for an odd prime p: 1, -1 or 0.
int legendre(std::int64_t a, std::int64_t p);

/// x with a*x = 1 mod m; requires gcd(a, m) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

std::int64_t mod(std::int64_t a, std::int64_t m);

std::int64_t ipow(std::int64_t base, int exponent);

/// Smallest positive quadratic non-residue modulo an odd prime.
std::int64_t smallest_nonresidue(std::int64_t p);

}  // namespace enriques
