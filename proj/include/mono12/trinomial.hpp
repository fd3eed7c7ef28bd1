// Domain model for x^{2m} + A x^m + B and the quantities derived from a
// coefficient pair (a, b): delta, its 2-reduced form, the square roots of b
// when they exist, and the cubic resolvent.
#pragma once

#include <optional>

#include "mono12/zpoly.hpp"

namespace mono12 {

// x^{2m} + A x^m + B with A*B != 0.
struct QuadraticLikeTrinomial {
    long m = 1;
    Int A;
    Int B;
};

void validate(const QuadraticLikeTrinomial& t);
IntPoly to_poly(const QuadraticLikeTrinomial& t);

// Swan's closed form B^{m-1} m^{2m} (A^2 - 4B)^m.
Int discriminant(const QuadraticLikeTrinomial& t);

struct DerivedQuantities {
    Int delta;                 // a^2 - 4b
    Int reduced_delta;         // delta / gcd(2, a)^2
    std::optional<Int> alpha;  // a + 2*sqrt(b), when b is a perfect square
    std::optional<Int> beta;   // a - 2*sqrt(b)
    IntPoly resolvent;         // x^3 - 3bx + ab
};

DerivedQuantities derive(const Int& a, const Int& b);

// Whether x^3 - 3bx + ab has an integer root (equivalently: is reducible
// over Q, the cubic being monic). Candidates are divisors of ab capped by a
// Cauchy-style bound.
bool resolvent_reducible(const Int& a, const Int& b);

}  // namespace mono12
