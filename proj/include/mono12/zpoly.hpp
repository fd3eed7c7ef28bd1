// Univariate polynomials over Z and over prime fields: gcd, factorization,
// Hensel lifting, rational irreducibility, and the Dedekind index criterion.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mono12/arith.hpp"

namespace mono12 {

// Dense integer polynomial, constant term first. The zero polynomial has an
// empty coefficient vector; otherwise the leading coefficient is nonzero.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    const Int& lc() const { return c.back(); }
    Int coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Int(0); }
    void trim();
    Int eval(const Int& x) const;
    std::string to_string(const std::string& var = "x") const;

    bool operator==(const IntPoly& o) const { return c == o.c; }
};

IntPoly ip_add(const IntPoly& u, const IntPoly& v);
IntPoly ip_sub(const IntPoly& u, const IntPoly& v);
IntPoly ip_mul(const IntPoly& u, const IntPoly& v);
IntPoly ip_scale(const IntPoly& u, const Int& s);
IntPoly ip_derivative(const IntPoly& u);
// u(x^k)
IntPoly ip_compose_power(const IntPoly& u, long k);
// Quotient of exact division; returns false if v does not divide u over Z.
bool ip_divide_exact(const IntPoly& u, const IntPoly& v, IntPoly* quotient);
// Resultant via fraction-free elimination of the Sylvester matrix.
Int ip_resultant(const IntPoly& u, const IntPoly& v);
// (-1)^{n(n-1)/2} Res(u, u') / lc(u)
Int ip_discriminant(const IntPoly& u);

// Polynomial over F_p, coefficients reduced to [0, p). Moduli are limited to
// 62 bits; the desk-scale inputs this library targets stay far below that.
struct ModPoly {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> c;

    ModPoly() = default;
    ModPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs)
        : p(modulus), c(std::move(coeffs)) {
        reduce();
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    void reduce();  // reduce coefficients mod p and trim
    std::string to_string(const std::string& var = "x") const;

    bool operator==(const ModPoly& o) const { return p == o.p && c == o.c; }
    bool operator<(const ModPoly& o) const;  // degree, then coefficients
};

ModPoly mp_reduce(const IntPoly& u, std::uint64_t p);
IntPoly mp_lift(const ModPoly& u);  // representatives in [0, p)
ModPoly mp_add(const ModPoly& u, const ModPoly& v);
ModPoly mp_sub(const ModPoly& u, const ModPoly& v);
ModPoly mp_mul(const ModPoly& u, const ModPoly& v);
ModPoly mp_monic(const ModPoly& u);
void mp_divmod(const ModPoly& u, const ModPoly& v, ModPoly* q, ModPoly* r);
ModPoly mp_mod(const ModPoly& u, const ModPoly& v);
ModPoly mp_divexact(const ModPoly& u, const ModPoly& v);
// x^e mod u, with an arbitrary-precision exponent
ModPoly mp_xpow_mod(const Int& e, const ModPoly& u);
ModPoly mp_powmod(const ModPoly& base, const Int& e, const ModPoly& u);

// Monic gcd. Rejects mismatched moduli and gcd(0, 0).
ModPoly mod_gcd(const ModPoly& u, const ModPoly& v);
// Monic gcd g plus a Bezout certificate s*u + t*v = g.
ModPoly mod_gcd_ext(const ModPoly& u, const ModPoly& v, ModPoly* s, ModPoly* t);

struct ModFactor {
    ModPoly factor;  // monic irreducible
    int multiplicity = 0;
};

// Complete factorization into monic irreducibles; multiplying the factors and
// the leading unit of u reproduces u. Splitting randomness is seeded from the
// input, so results are deterministic.
std::vector<ModFactor> mod_factor(const ModPoly& u);

// Factor-degree partition (descending) of a squarefree monic polynomial,
// computed by distinct-degree factorization only.
std::vector<int> mp_degree_partition(const ModPoly& u);

// Exact irreducibility over Q for monic u of degree >= 1: degree-pattern
// sieve modulo good primes, then Hensel lifting + factor recombination.
bool zz_irreducible(const IntPoly& u);

// Dedekind criterion: does p divide [Z_K : Z[theta]] for theta a root of u?
// u must be monic and irreducible over Q.
bool dedekind_divides_index(const IntPoly& u, const Int& p);
// Same, but trusts the caller on irreducibility (harness hot path).
bool dedekind_divides_index_trusted(const IntPoly& u, const Int& p);

}  // namespace mono12
