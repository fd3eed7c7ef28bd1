#include "mono12/trinomial.hpp"

namespace mono12 {

void validate(const QuadraticLikeTrinomial& t) {
    if (t.m < 1) throw std::invalid_argument("trinomial: m >= 1 required");
    if (t.A == 0 || t.B == 0) throw std::invalid_argument("trinomial: A*B != 0 required");
}

IntPoly to_poly(const QuadraticLikeTrinomial& t) {
    validate(t);
    std::vector<Int> c(2 * t.m + 1, Int(0));
    c[0] = t.B;
    c[t.m] = t.A;
    c[2 * t.m] = 1;
    return IntPoly(std::move(c));
}

Int discriminant(const QuadraticLikeTrinomial& t) {
    validate(t);
    Int delta = t.A * t.A - 4 * t.B;
    Int out = int_pow(t.B, static_cast<unsigned long>(t.m - 1));
    out *= int_pow(Int(t.m), static_cast<unsigned long>(2 * t.m));
    out *= int_pow(delta, static_cast<unsigned long>(t.m));
    return out;
}

DerivedQuantities derive(const Int& a, const Int& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("derive: ab != 0 required");
    DerivedQuantities d;
    d.delta = a * a - 4 * b;
    d.reduced_delta = mpz_even_p(a.get_mpz_t()) ? Int(d.delta / 4) : d.delta;
    if (is_square(b)) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), b.get_mpz_t());
        d.alpha = a + 2 * r;
        d.beta = a - 2 * r;
    }
    d.resolvent = IntPoly({a * b, -3 * b, Int(0), Int(1)});
    return d;
}

bool resolvent_reducible(const Int& a, const Int& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("resolvent_reducible: ab != 0 required");
    IntPoly r({a * b, -3 * b, Int(0), Int(1)});
    // integer roots divide the constant term ab; cap by 1 + 3|b| + |ab|
    Int bound = 1 + 3 * abs(b) + abs(a * b);
    FactoredInteger fac = factorize(a * b);
    std::vector<Int> divisors{Int(1)};
    for (const auto& [p, e] : fac.factors) {
        size_t existing = divisors.size();
        Int pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < existing; ++j) {
                Int d = divisors[j] * pk;
                if (d <= bound) divisors.push_back(d);
            }
        }
    }
    for (const Int& d : divisors) {
        if (r.eval(d) == 0 || r.eval(-d) == 0) return true;
    }
    return false;
}

}  // namespace mono12
