// Exact integer arithmetic: factorization, squarefree / perfect-power tests.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mono12 {

using Int = mpz_class;

// Prime factorization of a nonzero integer with the sign split off.
// Primes are strictly increasing, exponents >= 1, and
// sign * prod(prime^exponent) == value.
struct FactoredInteger {
    Int value;
    int sign = 1;
    std::vector<std::pair<Int, int>> factors;

    Int recombine() const;
};

// Deterministic for n < 3.3e24 (fixed Miller-Rabin base set); beyond that the
// base set is supplemented with GMP's BPSW-based test.
bool is_prime(const Int& n);

// Complete factorization of |n|; rejects n == 0.
FactoredInteger factorize(const Int& n);

// True iff no prime square divides n (convention: |n| squarefree; 1 and -1
// are squarefree). Rejects n == 0.
bool is_squarefree(const Int& n);

// n == k^2 for some k >= 0. Negative inputs are never squares; 0 is.
bool is_square(const Int& n);

// n == k^3 for some integer k (negative cubes allowed); 0 is a cube.
bool is_cube(const Int& n);

// Primes <= bound, ascending. The sieve grows on demand and is cached.
const std::vector<std::uint64_t>& primes_up_to(std::uint64_t bound);

// Exact power with small exponent.
Int int_pow(const Int& base, unsigned long exp);

// q-adic valuation of n (n != 0, q >= 2).
long valuation(const Int& n, const Int& q);

}  // namespace mono12
