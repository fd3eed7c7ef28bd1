// Per-prime index-divisibility test for x^{2m} + A x^m + B, and the full
// monogenicity decision over the prime factors of the discriminant.
#pragma once

#include <optional>

#include "mono12/trinomial.hpp"

namespace mono12 {

// Worksheet for one (trinomial, prime) pair. Exactly one of the five
// conditions applies, selected by divisibility of A, B, m by q; only the
// fields of the selected branch are populated.
struct JksContext {
    QuadraticLikeTrinomial trinomial;
    Int q;
    int condition = 0;  // 1..5
    Int a1, a2, b1, b2;
    long j = 0, l = 0, s = 0, k = 0;  // q^j || 2m; q^l || m; m = s q^k with q !| s
    IntPoly H1, H2;                   // condition 4 only
};

struct IndexVerdict {
    Int prime;
    bool divides_index = false;
    int condition_used = 0;
};

struct MonogenicityReport {
    bool irreducible = false;
    bool monogenic = false;
    std::optional<Int> obstruction_prime;
    std::optional<int> obstruction_condition;
};

// Builds the applicable branch data; requires q prime and q | discriminant.
JksContext jks_context(const QuadraticLikeTrinomial& t, const Int& q);
IndexVerdict jks_evaluate(const JksContext& ctx);

// Full check including the irreducibility precondition.
IndexVerdict jks_prime_ok(const QuadraticLikeTrinomial& t, const Int& q);
// Hot-path variant: the caller vouches for irreducibility.
IndexVerdict jks_prime_ok_trusted(const QuadraticLikeTrinomial& t, const Int& q);

// Ascending prime factors of discriminant(t), obtained from the factors of
// B, m and A^2 - 4B rather than the (possibly huge) product.
std::vector<Int> discriminant_primes(const QuadraticLikeTrinomial& t);

MonogenicityReport is_monogenic(const QuadraticLikeTrinomial& t);
MonogenicityReport is_monogenic_trusted(const QuadraticLikeTrinomial& t);

// The power-compositional criterion for f(x) = g(x^k): g(0) squarefree, no
// prime of k divides the index of the composition, and g monogenic. Rejects
// reducible compositions. Must agree with is_monogenic on the composition.
bool kkr_monogenic(const QuadraticLikeTrinomial& g, long k);

}  // namespace mono12
