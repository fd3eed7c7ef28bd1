#include "mono12/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace mono12 {

Int FactoredInteger::recombine() const {
    Int out = sign;
    for (const auto& [p, e] : factors) out *= int_pow(p, static_cast<unsigned long>(e));
    return out;
}

Int int_pow(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

long valuation(const Int& n, const Int& q) {
    if (n == 0 || q < 2) throw std::invalid_argument("valuation: need n != 0 and q >= 2");
    Int m = abs(n);
    long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), q.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), q.get_mpz_t());
        ++v;
    }
    return v;
}

const std::vector<std::uint64_t>& primes_up_to(std::uint64_t bound) {
    static std::vector<std::uint64_t> primes;
    static std::uint64_t sieved = 0;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (bound > sieved) {
        std::uint64_t limit = std::max<std::uint64_t>(bound, 1u << 20);
        std::vector<bool> composite(limit + 1, false);
        primes.clear();
        for (std::uint64_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            primes.push_back(i);
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
        }
        sieved = limit;
    }
    return primes;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod64(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, b, m);
        b = mulmod64(b, b, m);
        e >>= 1;
    }
    return r;
}

// Deterministic below 3.317e24 with this base set (so for all 64-bit inputs).
const long kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (long bl : kMrBases) {
        u64 b = static_cast<u64>(bl) % n;
        if (b == 0) continue;
        u64 x = powmod64(b, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 pollard_brent_u64(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1, q = 1, ys = 2;
        u64 r = 1;
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod64(y, y, n) + c) % n;
            u64 k = 0;
            while (k < r && d == 1) {
                ys = y;
                u64 steps = std::min<u64>(64, r - k);
                for (u64 i = 0; i < steps; ++i) {
                    y = (mulmod64(y, y, n) + c) % n;
                    q = mulmod64(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                k += steps;
            }
            r <<= 1;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (mulmod64(ys, ys, n) + c) % n;
                u64 diff = x > ys ? x - ys : ys - x;
                d = std::gcd(diff, n);
            }
        }
        if (d != n) return d;
    }
}

void factor_u64_into(u64 n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out[Int(static_cast<unsigned long>(n))] += 1;
        return;
    }
    u64 d = pollard_brent_u64(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

bool miller_rabin_witness(const Int& n, const Int& base, const Int& d, unsigned long r) {
    if (base % n == 0) return false;
    Int x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness
}

Int pollard_brent_mpz(const Int& n) {
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1, q = 1, ys = 2;
        unsigned long r = 1;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                unsigned long steps = std::min<unsigned long>(64, r - k);
                for (unsigned long i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += steps;
            }
            r <<= 1;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                Int diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d != n) return d;
    }
}

void factor_mpz_into(const Int& n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Int d = pollard_brent_mpz(n);
    factor_mpz_into(d, out);
    Int rest;
    mpz_divexact(rest.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    factor_mpz_into(rest, out);
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(mpz_get_ui(n.get_mpz_t()));
    if (mpz_even_p(n.get_mpz_t())) return false;
    Int d = n - 1;
    unsigned long r = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++r;
    }
    for (long b : kMrBases)
        if (miller_rabin_witness(n, Int(b), d, r)) return false;
    static const Int kDeterministicBound("3317044064679887385961981");
    if (n >= kDeterministicBound)
        return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
    return true;
}

FactoredInteger factorize(const Int& n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be nonzero");
    FactoredInteger out;
    out.value = n;
    out.sign = (n < 0) ? -1 : 1;
    Int big = abs(n);
    std::map<Int, int> acc;
    if (mpz_fits_ulong_p(big.get_mpz_t())) {
        u64 m = mpz_get_ui(big.get_mpz_t());
        for (u64 p : {2ull, 3ull, 5ull}) {
            while (m % p == 0) {
                m /= p;
                acc[Int(static_cast<unsigned long>(p))] += 1;
            }
        }
        // wheel over the cached sieve; rho handles any cofactor past 1e6
        const auto& small = primes_up_to(1000000);
        for (u64 p : small) {
            if (p < 7) continue;
            if (p * p > m) break;
            while (m % p == 0) {
                m /= p;
                acc[Int(static_cast<unsigned long>(p))] += 1;
            }
        }
        if (m > 1) {
            if (is_prime_u64(m))
                acc[Int(static_cast<unsigned long>(m))] += 1;
            else
                factor_u64_into(m, acc);
        }
    } else {
        Int m = big;
        const auto& small = primes_up_to(1000000);
        for (u64 p : small) {
            if (Int(static_cast<unsigned long>(p)) * Int(static_cast<unsigned long>(p)) > m) break;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                acc[Int(static_cast<unsigned long>(p))] += 1;
            }
            if (m == 1) break;
        }
        if (m > 1) factor_mpz_into(m, acc);
    }
    out.factors.assign(acc.begin(), acc.end());
    return out;
}

bool is_squarefree(const Int& n) {
    if (n == 0) throw std::invalid_argument("is_squarefree: n must be nonzero");
    Int m = abs(n);
    if (m == 1) return true;
    for (const auto& [p, e] : factorize(m).factors)
        if (e > 1) return false;
    return true;
}

bool is_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_cube(const Int& n) {
    Int m = abs(n);
    Int r;
    int exact = mpz_root(r.get_mpz_t(), m.get_mpz_t(), 3);
    return exact != 0;
}

}  // namespace mono12
