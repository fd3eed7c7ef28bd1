#include "mono12/jks.hpp"

#include <algorithm>

namespace mono12 {

namespace {

Int mod_nonneg(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool divides(const Int& q, const Int& a) { return mpz_divisible_p(a.get_mpz_t(), q.get_mpz_t()); }

// (A x^{s q^k} + B + (-A x^s - B)^{q^k}) / q, expanded exactly over Z.
IntPoly condition4_h2(const Int& A, const Int& B, long s, long E, const Int& q) {
    std::vector<Int> c(static_cast<size_t>(s) * E + 1, Int(0));
    c[0] = B;
    c[static_cast<size_t>(s) * E] = A;
    for (long i = 0; i <= E; ++i) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(E), static_cast<unsigned long>(i));
        Int term = binom * int_pow(-A, static_cast<unsigned long>(i)) *
                   int_pow(-B, static_cast<unsigned long>(E - i));
        c[static_cast<size_t>(s) * i] += term;
    }
    for (auto& x : c) {
        if (!divides(q, x)) throw std::logic_error("jks: H2 numerator not divisible by q");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
    }
    return IntPoly(std::move(c));
}

}  // namespace

JksContext jks_context(const QuadraticLikeTrinomial& t, const Int& q) {
    validate(t);
    if (!is_prime(q)) throw std::invalid_argument("jks: q must be prime");
    if (!divides(q, discriminant(t)))
        throw std::invalid_argument("jks: q does not divide the discriminant");
    JksContext ctx;
    ctx.trinomial = t;
    ctx.q = q;
    const Int& A = t.A;
    const Int& B = t.B;
    const long m = t.m;
    const bool qA = divides(q, A), qB = divides(q, B);
    if (qA && qB) {
        ctx.condition = 1;
    } else if (qA) {
        ctx.condition = 2;
        ctx.j = valuation(Int(2 * m), q);
        if (ctx.j < 1) throw std::logic_error("jks: condition 2 needs q | 2m");
        Int qj = int_pow(q, static_cast<unsigned long>(ctx.j));
        mpz_divexact(ctx.a2.get_mpz_t(), A.get_mpz_t(), q.get_mpz_t());
        Int num = B + int_pow(-B, mpz_get_ui(qj.get_mpz_t()));
        if (!divides(q, num)) throw std::logic_error("jks: b1 not integral");
        mpz_divexact(ctx.b1.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
    } else if (qB) {
        ctx.condition = 3;
        ctx.l = valuation(Int(m), q);  // l = 0 allowed: a1 comes out as 0
        Int ql = int_pow(q, static_cast<unsigned long>(ctx.l));
        mpz_divexact(ctx.b2.get_mpz_t(), B.get_mpz_t(), q.get_mpz_t());
        Int num = A + int_pow(-A, mpz_get_ui(ql.get_mpz_t()));
        if (!divides(q, num)) throw std::logic_error("jks: a1 not integral");
        mpz_divexact(ctx.a1.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
    } else if (divides(q, Int(m))) {
        ctx.condition = 4;
        ctx.k = valuation(Int(m), q);
        long E = 1;
        for (long i = 0; i < ctx.k; ++i) E *= static_cast<long>(mpz_get_ui(q.get_mpz_t()));
        ctx.s = m / E;
        std::vector<Int> h1(2 * ctx.s + 1, Int(0));
        h1[0] = B;
        h1[ctx.s] = A;
        h1[2 * ctx.s] = 1;
        ctx.H1 = IntPoly(std::move(h1));
        ctx.H2 = condition4_h2(A, B, ctx.s, E, q);
    } else {
        ctx.condition = 5;
    }
    return ctx;
}

IndexVerdict jks_evaluate(const JksContext& ctx) {
    IndexVerdict v;
    v.prime = ctx.q;
    v.condition_used = ctx.condition;
    const Int& q = ctx.q;
    const Int& A = ctx.trinomial.A;
    const Int& B = ctx.trinomial.B;
    bool ok = false;
    switch (ctx.condition) {
        case 1:
            ok = !divides(q * q, B);
            break;
        case 2: {
            bool first = divides(q, ctx.a2) && !divides(q, ctx.b1);
            Int expr = mod_nonneg(ctx.a2 * (ctx.a2 * ctx.a2 * B + ctx.b1 * ctx.b1), q);
            ok = first || expr != 0;
            break;
        }
        case 3: {
            bool first = divides(q, ctx.a1) && !divides(q, ctx.b2);
            Int pw;
            mpz_powm_ui(pw.get_mpz_t(), mod_nonneg(ctx.b2, q).get_mpz_t(),
                        static_cast<unsigned long>(ctx.trinomial.m - 1), q.get_mpz_t());
            Int expr = mod_nonneg(ctx.a1 * pw * (A * ctx.a1 - ctx.b2), q);
            ok = first || expr != 0;
            break;
        }
        case 4: {
            std::uint64_t qu = mpz_get_ui(q.get_mpz_t());
            ModPoly h1 = mp_reduce(ctx.H1, qu);
            ModPoly h2 = mp_reduce(ctx.H2, qu);
            if (h2.is_zero())
                ok = false;  // gcd is H1 itself, never a unit here
            else
                ok = mod_gcd(h1, h2).degree() == 0;
            break;
        }
        case 5:
            ok = !divides(q * q, A * A - 4 * B);
            break;
        default:
            throw std::logic_error("jks: no condition selected");
    }
    v.divides_index = !ok;
    return v;
}

IndexVerdict jks_prime_ok_trusted(const QuadraticLikeTrinomial& t, const Int& q) {
    return jks_evaluate(jks_context(t, q));
}

IndexVerdict jks_prime_ok(const QuadraticLikeTrinomial& t, const Int& q) {
    validate(t);
    if (!zz_irreducible(to_poly(t))) throw std::invalid_argument("jks: trinomial is reducible");
    return jks_prime_ok_trusted(t, q);
}

std::vector<Int> discriminant_primes(const QuadraticLikeTrinomial& t) {
    validate(t);
    Int delta = t.A * t.A - 4 * t.B;
    std::vector<Int> primes;
    auto absorb = [&primes](const Int& n) {
        if (n == 0) return;
        for (const auto& [p, e] : factorize(n).factors) primes.push_back(p);
    };
    if (t.m >= 2) absorb(t.B);
    absorb(Int(t.m));
    absorb(delta);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

MonogenicityReport is_monogenic(const QuadraticLikeTrinomial& t) {
    validate(t);
    MonogenicityReport rep;
    if (!zz_irreducible(to_poly(t))) return rep;
    return is_monogenic_trusted(t);
}

MonogenicityReport is_monogenic_trusted(const QuadraticLikeTrinomial& t) {
    MonogenicityReport rep;
    rep.irreducible = true;
    for (const Int& q : discriminant_primes(t)) {
        IndexVerdict v = jks_prime_ok_trusted(t, q);
        if (v.divides_index) {
            rep.monogenic = false;
            rep.obstruction_prime = q;
            rep.obstruction_condition = v.condition_used;
            return rep;
        }
    }
    rep.monogenic = true;
    return rep;
}

bool kkr_monogenic(const QuadraticLikeTrinomial& g, long k) {
    validate(g);
    if (k < 2) throw std::invalid_argument("kkr: k >= 2 required");
    QuadraticLikeTrinomial composed{g.m * k, g.A, g.B};
    if (!zz_irreducible(to_poly(composed)))
        throw std::invalid_argument("kkr: composition is reducible");
    if (!is_squarefree(g.B)) return false;
    for (const auto& [q, e] : factorize(Int(k)).factors) {
        if (jks_prime_ok_trusted(composed, q).divides_index) return false;
    }
    return is_monogenic_trusted(g).monogenic;
}

}  // namespace mono12
