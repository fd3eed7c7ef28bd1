#include <doctest.h>

#include "mono12/jks.hpp"

using namespace mono12;

TEST_CASE("per-prime conditions on the worked examples") {
    // (m=6, A=2, B=2, q=2): condition 1, index not divisible
    auto v = jks_prime_ok(QuadraticLikeTrinomial{6, Int(2), Int(2)}, Int(2));
    CHECK(v.condition_used == 1);
    CHECK_FALSE(v.divides_index);

    // (m=6, A=-1, B=1, q=2): condition 4 with coprime H1, H2
    QuadraticLikeTrinomial phi{6, Int(-1), Int(1)};
    v = jks_prime_ok(phi, Int(2));
    CHECK(v.condition_used == 4);
    CHECK_FALSE(v.divides_index);
    JksContext ctx = jks_context(phi, Int(2));
    CHECK(ctx.s == 3);
    CHECK(ctx.k == 1);
    CHECK(ctx.H1 == IntPoly({Int(1), Int(0), Int(0), Int(-1), Int(0), Int(0), Int(1)}));
    // H2 = (1 - x^3); reduced mod 2 it splits as (x+1)(x^2+x+1)
    CHECK(ctx.H2 == IntPoly({Int(1), Int(0), Int(0), Int(-1)}));

    // (m=6, A=9, B=1, q=3): condition 2 fails with b1 = 0
    QuadraticLikeTrinomial t91{6, Int(9), Int(1)};
    v = jks_prime_ok(t91, Int(3));
    CHECK(v.condition_used == 2);
    CHECK(v.divides_index);
    ctx = jks_context(t91, Int(3));
    CHECK(ctx.j == 1);
    CHECK(ctx.a2 == 3);
    CHECK(ctx.b1 == 0);

    // (m=3, A=11, B=33, q=3): condition 3 fails
    v = jks_prime_ok(QuadraticLikeTrinomial{3, Int(11), Int(33)}, Int(3));
    CHECK(v.condition_used == 3);
    CHECK(v.divides_index);
}

TEST_CASE("per-prime test rejects bad inputs") {
    QuadraticLikeTrinomial phi{6, Int(-1), Int(1)};
    CHECK_THROWS_AS(jks_prime_ok(phi, Int(5)), std::invalid_argument);   // 5 does not divide disc
    CHECK_THROWS_AS(jks_prime_ok(phi, Int(4)), std::invalid_argument);   // not prime
    QuadraticLikeTrinomial red{6, Int(1), Int(1)};                        // reducible
    CHECK_THROWS_AS(jks_prime_ok(red, Int(2)), std::invalid_argument);
}

TEST_CASE("is_monogenic on the worked examples") {
    auto r = is_monogenic(QuadraticLikeTrinomial{6, Int(-1), Int(1)});
    CHECK(r.irreducible);
    CHECK(r.monogenic);
    CHECK_FALSE(r.obstruction_prime.has_value());

    r = is_monogenic(QuadraticLikeTrinomial{6, Int(11), Int(33)});
    CHECK(r.irreducible);
    CHECK_FALSE(r.monogenic);
    REQUIRE(r.obstruction_prime.has_value());
    CHECK(*r.obstruction_prime == 3);
    CHECK(*r.obstruction_condition == 3);

    r = is_monogenic(QuadraticLikeTrinomial{6, Int(-5), Int(5)});
    CHECK(r.monogenic);

    // the report records the smallest obstructing prime: at a = -11 the prime
    // 2 also divides the index, so it wins over the q = 3 obstruction
    r = is_monogenic(QuadraticLikeTrinomial{6, Int(-11), Int(33)});
    CHECK_FALSE(r.monogenic);
    REQUIRE(r.obstruction_prime.has_value());
    CHECK(*r.obstruction_prime == 2);
    CHECK(*r.obstruction_condition == 4);
    CHECK(jks_prime_ok_trusted(QuadraticLikeTrinomial{6, Int(-11), Int(33)}, Int(3)).divides_index);

    r = is_monogenic(QuadraticLikeTrinomial{6, Int(1), Int(1)});
    CHECK_FALSE(r.irreducible);
    CHECK_FALSE(r.monogenic);
    CHECK_FALSE(r.obstruction_prime.has_value());
}

TEST_CASE("kkr_monogenic on the worked examples") {
    CHECK(kkr_monogenic(QuadraticLikeTrinomial{3, Int(-1), Int(1)}, 2));    // f = g6(x^2)
    CHECK_FALSE(kkr_monogenic(QuadraticLikeTrinomial{1, Int(11), Int(33)}, 3));
    CHECK(kkr_monogenic(QuadraticLikeTrinomial{1, Int(-2), Int(2)}, 6));    // x^12 - 2x^6 + 2
    CHECK_THROWS_AS(kkr_monogenic(QuadraticLikeTrinomial{1, Int(1), Int(1)}, 6),
                    std::invalid_argument);  // composition reducible
    CHECK_THROWS_AS(kkr_monogenic(QuadraticLikeTrinomial{1, Int(-2), Int(2)}, 1),
                    std::invalid_argument);
}

TEST_CASE("kkr agrees with the direct test on compositions") {
    // bases and exponents producing g4, g6 and f from lower trinomials
    const std::pair<long, long> shapes[] = {{1, 2}, {1, 3}, {1, 6}, {3, 2}, {2, 3}};
    for (long a = -10; a <= 10; ++a) {
        if (a == 0) continue;
        for (long b = -10; b <= 10; ++b) {
            if (b == 0) continue;
            for (auto [m, k] : shapes) {
                QuadraticLikeTrinomial base{m, Int(a), Int(b)};
                QuadraticLikeTrinomial composed{m * k, Int(a), Int(b)};
                if (!zz_irreducible(to_poly(composed))) continue;
                REQUIRE(kkr_monogenic(base, k) == is_monogenic(composed).monogenic);
            }
        }
    }
}

TEST_CASE("monogenic trinomials close downward over divisors") {
    for (long a = -10; a <= 10; ++a) {
        if (a == 0) continue;
        for (long b = -10; b <= 10; ++b) {
            if (b == 0) continue;
            QuadraticLikeTrinomial f{6, Int(a), Int(b)};
            auto rep = is_monogenic(f);
            if (!rep.irreducible || !rep.monogenic) continue;
            for (long m : {1L, 2L, 3L})
                REQUIRE(is_monogenic(QuadraticLikeTrinomial{m, Int(a), Int(b)}).monogenic);
            REQUIRE(is_squarefree(Int(b)));
            REQUIRE(is_squarefree(derive(Int(a), Int(b)).reduced_delta));
        }
    }
}

TEST_CASE("exactly one condition is selected per prime") {
    for (long a = -10; a <= 10; ++a) {
        if (a == 0) continue;
        for (long b = -10; b <= 10; ++b) {
            if (b == 0) continue;
            for (long m : {1L, 2L, 3L, 6L}) {
                QuadraticLikeTrinomial t{m, Int(a), Int(b)};
                for (const Int& q : discriminant_primes(t)) {
                    JksContext ctx = jks_context(t, q);
                    bool qa = mpz_divisible_p(Int(t.A).get_mpz_t(), q.get_mpz_t());
                    bool qb = mpz_divisible_p(Int(t.B).get_mpz_t(), q.get_mpz_t());
                    bool qm = mpz_divisible_p(Int(m).get_mpz_t(), q.get_mpz_t());
                    int expected = qa && qb ? 1 : qa ? 2 : qb ? 3 : qm ? 4 : 5;
                    REQUIRE(ctx.condition == expected);
                }
            }
        }
    }
}

TEST_CASE("the reported obstruction is the smallest obstructing prime") {
    for (long a = -9; a <= 9; ++a) {
        if (a == 0) continue;
        for (long b = -9; b <= 9; ++b) {
            if (b == 0) continue;
            QuadraticLikeTrinomial f{6, Int(a), Int(b)};
            if (!zz_irreducible(to_poly(f))) continue;
            MonogenicityReport rep = is_monogenic_trusted(f);
            if (rep.monogenic) continue;
            REQUIRE(jks_prime_ok_trusted(f, *rep.obstruction_prime).divides_index);
            for (const Int& q : discriminant_primes(f)) {
                if (q >= *rep.obstruction_prime) break;
                REQUIRE_FALSE(jks_prime_ok_trusted(f, q).divides_index);
            }
        }
    }
}

TEST_CASE("per-prime verdicts agree with the Dedekind criterion (small box)") {
    long long checks = 0;
    for (long a = -10; a <= 10; ++a) {
        if (a == 0) continue;
        for (long b = -10; b <= 10; ++b) {
            if (b == 0) continue;
            for (long m : {1L, 2L, 3L, 6L}) {
                QuadraticLikeTrinomial t{m, Int(a), Int(b)};
                IntPoly u = to_poly(t);
                if (!zz_irreducible(u)) continue;
                for (const Int& q : discriminant_primes(t)) {
                    REQUIRE(jks_prime_ok_trusted(t, q).divides_index ==
                            dedekind_divides_index_trusted(u, q));
                    ++checks;
                }
            }
        }
    }
    CHECK(checks > 3000);
}
