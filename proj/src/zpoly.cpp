#include "mono12/zpoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace mono12 {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kModulusLimit = u64(1) << 62;

u64 addm(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}
u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 invm(u64 a, u64 p) {
    // extended Euclid; p prime, a != 0 mod p
    __int128 t = 0, newt = 1;
    __int128 r = p, newr = a % p;
    while (newr != 0) {
        __int128 q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw std::invalid_argument("invm: not invertible");
    if (t < 0) t += p;
    return static_cast<u64>(t);
}

struct SplitMix64 {
    u64 state;
    explicit SplitMix64(u64 seed) : state(seed) {}
    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

u64 fnv_hash_poly(const ModPoly& u) {
    u64 h = 1469598103934665603ull;
    auto mix = [&](u64 x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(u.p);
    for (u64 v : u.c) mix(v + 1);
    return h;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntPoly

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = c[i];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Int m = abs(a);
        if (m != 1 || i == 0) os << m.get_str();
        if (i > 0) {
            if (m != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

IntPoly ip_add(const IntPoly& u, const IntPoly& v) {
    std::vector<Int> c(std::max(u.c.size(), v.c.size()), Int(0));
    for (size_t i = 0; i < u.c.size(); ++i) c[i] += u.c[i];
    for (size_t i = 0; i < v.c.size(); ++i) c[i] += v.c[i];
    return IntPoly(std::move(c));
}

IntPoly ip_sub(const IntPoly& u, const IntPoly& v) {
    std::vector<Int> c(std::max(u.c.size(), v.c.size()), Int(0));
    for (size_t i = 0; i < u.c.size(); ++i) c[i] += u.c[i];
    for (size_t i = 0; i < v.c.size(); ++i) c[i] -= v.c[i];
    return IntPoly(std::move(c));
}

IntPoly ip_mul(const IntPoly& u, const IntPoly& v) {
    if (u.is_zero() || v.is_zero()) return IntPoly();
    std::vector<Int> c(u.c.size() + v.c.size() - 1, Int(0));
    for (size_t i = 0; i < u.c.size(); ++i) {
        if (u.c[i] == 0) continue;
        for (size_t j = 0; j < v.c.size(); ++j) c[i + j] += u.c[i] * v.c[j];
    }
    return IntPoly(std::move(c));
}

IntPoly ip_scale(const IntPoly& u, const Int& s) {
    std::vector<Int> c = u.c;
    for (auto& x : c) x *= s;
    return IntPoly(std::move(c));
}

IntPoly ip_derivative(const IntPoly& u) {
    if (u.degree() < 1) return IntPoly();
    std::vector<Int> c(u.c.size() - 1);
    for (size_t i = 1; i < u.c.size(); ++i) c[i - 1] = u.c[i] * static_cast<long>(i);
    return IntPoly(std::move(c));
}

IntPoly ip_compose_power(const IntPoly& u, long k) {
    if (k < 1) throw std::invalid_argument("ip_compose_power: k >= 1");
    if (u.is_zero()) return IntPoly();
    std::vector<Int> c(static_cast<size_t>(u.degree()) * k + 1, Int(0));
    for (size_t i = 0; i < u.c.size(); ++i) c[i * k] = u.c[i];
    return IntPoly(std::move(c));
}

bool ip_divide_exact(const IntPoly& u, const IntPoly& v, IntPoly* quotient) {
    if (v.is_zero()) throw std::invalid_argument("ip_divide_exact: division by zero");
    if (u.is_zero()) {
        if (quotient) *quotient = IntPoly();
        return true;
    }
    if (u.degree() < v.degree()) return false;
    std::vector<Int> rem = u.c;
    std::vector<Int> q(u.degree() - v.degree() + 1, Int(0));
    for (int i = u.degree(); i >= v.degree(); --i) {
        Int& lead = rem[i];
        if (lead == 0) continue;
        if (!mpz_divisible_p(lead.get_mpz_t(), v.lc().get_mpz_t())) return false;
        Int f;
        mpz_divexact(f.get_mpz_t(), lead.get_mpz_t(), v.lc().get_mpz_t());
        q[i - v.degree()] = f;
        for (int j = 0; j <= v.degree(); ++j) rem[i - v.degree() + j] -= f * v.c[j];
    }
    for (const Int& r : rem)
        if (r != 0) return false;
    if (quotient) *quotient = IntPoly(std::move(q));
    return true;
}

Int ip_resultant(const IntPoly& u, const IntPoly& v) {
    if (u.is_zero() || v.is_zero()) return 0;
    int n = u.degree(), k = v.degree();
    if (n == 0) return int_pow(u.c[0], static_cast<unsigned long>(k));
    if (k == 0) return int_pow(v.c[0], static_cast<unsigned long>(n));
    int N = n + k;
    std::vector<std::vector<Int>> m(N, std::vector<Int>(N, Int(0)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= n; ++j) m[i][i + j] = u.c[n - j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= k; ++j) m[k + i][i + j] = v.c[k - j];
    // Bareiss fraction-free elimination
    Int prev = 1;
    int sign = 1;
    for (int r = 0; r < N - 1; ++r) {
        int pivot = -1;
        for (int i = r; i < N; ++i)
            if (m[i][r] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != r) {
            std::swap(m[pivot], m[r]);
            sign = -sign;
        }
        for (int i = r + 1; i < N; ++i) {
            for (int j = r + 1; j < N; ++j) {
                Int t = m[r][r] * m[i][j] - m[i][r] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][r] = 0;
        }
        prev = m[r][r];
    }
    return sign * m[N - 1][N - 1];
}

Int ip_discriminant(const IntPoly& u) {
    int n = u.degree();
    if (n < 1) throw std::invalid_argument("ip_discriminant: degree >= 1 required");
    Int res = ip_resultant(u, ip_derivative(u));
    Int out;
    mpz_divexact(out.get_mpz_t(), res.get_mpz_t(), u.lc().get_mpz_t());
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) out = -out;
    return out;
}

// ---------------------------------------------------------------------------
// ModPoly

void ModPoly::reduce() {
    if (p < 2) throw std::invalid_argument("ModPoly: modulus must be >= 2");
    if (p >= kModulusLimit) throw std::invalid_argument("ModPoly: modulus too large");
    for (auto& x : c) x %= p;
    while (!c.empty() && c.back() == 0) c.pop_back();
}

bool ModPoly::operator<(const ModPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return std::lexicographical_compare(c.begin(), c.end(), o.c.begin(), o.c.end());
}

std::string ModPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        u64 a = c[i];
        if (a == 0) continue;
        if (!first) os << " + ";
        if (a != 1 || i == 0) os << a;
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

ModPoly mp_reduce(const IntPoly& u, u64 p) {
    ModPoly out;
    out.p = p;
    if (p < 2 || p >= kModulusLimit) throw std::invalid_argument("mp_reduce: bad modulus");
    out.c.resize(u.c.size());
    for (size_t i = 0; i < u.c.size(); ++i) out.c[i] = mpz_fdiv_ui(u.c[i].get_mpz_t(), p);
    while (!out.c.empty() && out.c.back() == 0) out.c.pop_back();
    return out;
}

IntPoly mp_lift(const ModPoly& u) {
    std::vector<Int> c(u.c.size());
    for (size_t i = 0; i < u.c.size(); ++i) c[i] = Int(static_cast<unsigned long>(u.c[i]));
    return IntPoly(std::move(c));
}

namespace {

void check_same_modulus(const ModPoly& u, const ModPoly& v) {
    if (u.p != v.p) throw std::invalid_argument("ModPoly: modulus mismatch");
}

ModPoly mp_make(u64 p, std::vector<u64> c) {
    ModPoly out;
    out.p = p;
    out.c = std::move(c);
    while (!out.c.empty() && out.c.back() == 0) out.c.pop_back();
    return out;
}

ModPoly mp_x(u64 p) { return mp_make(p, {0, 1}); }
ModPoly mp_const(u64 p, u64 v) { return mp_make(p, {v % p}); }

}  // namespace

ModPoly mp_add(const ModPoly& u, const ModPoly& v) {
    check_same_modulus(u, v);
    std::vector<u64> c(std::max(u.c.size(), v.c.size()), 0);
    for (size_t i = 0; i < u.c.size(); ++i) c[i] = u.c[i];
    for (size_t i = 0; i < v.c.size(); ++i) c[i] = addm(c[i], v.c[i], u.p);
    return mp_make(u.p, std::move(c));
}

ModPoly mp_sub(const ModPoly& u, const ModPoly& v) {
    check_same_modulus(u, v);
    std::vector<u64> c(std::max(u.c.size(), v.c.size()), 0);
    for (size_t i = 0; i < u.c.size(); ++i) c[i] = u.c[i];
    for (size_t i = 0; i < v.c.size(); ++i) c[i] = subm(c[i], v.c[i], u.p);
    return mp_make(u.p, std::move(c));
}

ModPoly mp_mul(const ModPoly& u, const ModPoly& v) {
    check_same_modulus(u, v);
    if (u.is_zero() || v.is_zero()) return mp_make(u.p, {});
    std::vector<u64> c(u.c.size() + v.c.size() - 1, 0);
    for (size_t i = 0; i < u.c.size(); ++i) {
        if (u.c[i] == 0) continue;
        for (size_t j = 0; j < v.c.size(); ++j)
            c[i + j] = addm(c[i + j], mulm(u.c[i], v.c[j], u.p), u.p);
    }
    return mp_make(u.p, std::move(c));
}

ModPoly mp_monic(const ModPoly& u) {
    if (u.is_zero()) throw std::invalid_argument("mp_monic: zero polynomial");
    if (u.is_monic()) return u;
    u64 inv = invm(u.c.back(), u.p);
    std::vector<u64> c = u.c;
    for (auto& x : c) x = mulm(x, inv, u.p);
    return mp_make(u.p, std::move(c));
}

void mp_divmod(const ModPoly& u, const ModPoly& v, ModPoly* q, ModPoly* r) {
    check_same_modulus(u, v);
    if (v.is_zero()) throw std::invalid_argument("mp_divmod: division by zero");
    std::vector<u64> rem = u.c;
    int dv = v.degree();
    std::vector<u64> quo(u.degree() >= dv ? u.degree() - dv + 1 : 0, 0);
    u64 inv = invm(v.c.back(), u.p);
    for (int i = u.degree(); i >= dv; --i) {
        u64 lead = rem[i];
        if (lead == 0) continue;
        u64 f = mulm(lead, inv, u.p);
        quo[i - dv] = f;
        for (int j = 0; j <= dv; ++j)
            rem[i - dv + j] = subm(rem[i - dv + j], mulm(f, v.c[j], u.p), u.p);
    }
    if (q) *q = mp_make(u.p, std::move(quo));
    if (r) *r = mp_make(u.p, std::move(rem));
}

ModPoly mp_mod(const ModPoly& u, const ModPoly& v) {
    ModPoly r;
    mp_divmod(u, v, nullptr, &r);
    return r;
}

ModPoly mp_divexact(const ModPoly& u, const ModPoly& v) {
    ModPoly q, r;
    mp_divmod(u, v, &q, &r);
    if (!r.is_zero()) throw std::logic_error("mp_divexact: division not exact");
    return q;
}

ModPoly mp_powmod(const ModPoly& base, const Int& e, const ModPoly& u) {
    check_same_modulus(base, u);
    if (e < 0) throw std::invalid_argument("mp_powmod: negative exponent");
    ModPoly result = mp_const(u.p, 1);
    if (e == 0) return result;
    ModPoly b = mp_mod(base, u);
    size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = nbits; i-- > 0;) {
        result = mp_mod(mp_mul(result, result), u);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mp_mod(mp_mul(result, b), u);
    }
    return result;
}

ModPoly mp_xpow_mod(const Int& e, const ModPoly& u) { return mp_powmod(mp_x(u.p), e, u); }

ModPoly mod_gcd(const ModPoly& u, const ModPoly& v) {
    check_same_modulus(u, v);
    if (u.is_zero() && v.is_zero()) throw std::invalid_argument("mod_gcd: gcd(0, 0)");
    ModPoly a = u, b = v;
    while (!b.is_zero()) {
        ModPoly r = mp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(a);
}

ModPoly mod_gcd_ext(const ModPoly& u, const ModPoly& v, ModPoly* s, ModPoly* t) {
    check_same_modulus(u, v);
    if (u.is_zero() && v.is_zero()) throw std::invalid_argument("mod_gcd_ext: gcd(0, 0)");
    u64 p = u.p;
    ModPoly r0 = u, r1 = v;
    ModPoly s0 = mp_const(p, 1), s1 = mp_make(p, {});
    ModPoly t0 = mp_make(p, {}), t1 = mp_const(p, 1);
    while (!r1.is_zero()) {
        ModPoly q, r;
        mp_divmod(r0, r1, &q, &r);
        ModPoly s2 = mp_sub(s0, mp_mul(q, s1));
        ModPoly t2 = mp_sub(t0, mp_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    u64 inv = invm(r0.c.back(), p);
    auto scale = [&](ModPoly w) {
        for (auto& x : w.c) x = mulm(x, inv, p);
        return w;
    };
    if (s) *s = scale(s0);
    if (t) *t = scale(t0);
    return scale(r0);
}

// ---------------------------------------------------------------------------
// Factorization over F_p

namespace {

ModPoly mp_derivative(const ModPoly& u) {
    if (u.degree() < 1) return mp_make(u.p, {});
    std::vector<u64> c(u.c.size() - 1);
    for (size_t i = 1; i < u.c.size(); ++i) c[i - 1] = mulm(u.c[i], i % u.p, u.p);
    return mp_make(u.p, std::move(c));
}

// w(x) = z(x^p) with coefficients in the prime field, so z has the same
// coefficients at compressed positions.
ModPoly mp_pth_root(const ModPoly& w) {
    u64 p = w.p;
    std::vector<u64> c(w.degree() / p + 1, 0);
    for (size_t i = 0; i < w.c.size(); ++i) {
        if (w.c[i] == 0) continue;
        if (i % p != 0) throw std::logic_error("mp_pth_root: not a p-th power");
        c[i / p] = w.c[i];
    }
    return mp_make(p, std::move(c));
}

// squarefree decomposition of a monic polynomial in characteristic p
void squarefree_decomp(const ModPoly& w, int outer, std::vector<std::pair<ModPoly, int>>& out) {
    if (w.degree() < 1) return;
    ModPoly d = mp_derivative(w);
    if (d.is_zero()) {
        squarefree_decomp(mp_pth_root(w), outer * static_cast<int>(w.p), out);
        return;
    }
    ModPoly c = mod_gcd(w, d);
    ModPoly u = mp_divexact(w, c);
    int i = 1;
    while (u.degree() > 0) {
        ModPoly y = mod_gcd(u, c);
        ModPoly z = mp_divexact(u, y);
        if (z.degree() > 0) out.emplace_back(z, i * outer);
        u = std::move(y);
        c = mp_divexact(c, u);
        ++i;
    }
    if (c.degree() > 0) squarefree_decomp(mp_pth_root(c), outer * static_cast<int>(w.p), out);
}

// distinct-degree stage: (product of irreducibles of degree d, d) pairs
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& v0) {
    std::vector<std::pair<ModPoly, int>> blocks;
    ModPoly v = v0;
    ModPoly h = mp_x(v.p);
    int d = 0;
    while (v.degree() > 0 && 2 * (d + 1) <= v.degree()) {
        ++d;
        h = mp_powmod(h, Int(static_cast<unsigned long>(v.p)), v);
        ModPoly g = mod_gcd(mp_sub(h, mp_x(v.p)), v);
        if (g.degree() > 0) {
            blocks.emplace_back(g, d);
            v = mp_divexact(v, g);
            if (v.degree() > 0) h = mp_mod(h, v);
        }
    }
    if (v.degree() > 0) blocks.emplace_back(v, v.degree());
    return blocks;
}

ModPoly random_poly(u64 p, int deg_below, SplitMix64& rng) {
    std::vector<u64> c(static_cast<size_t>(deg_below), 0);
    for (auto& x : c) x = rng.next() % p;
    return mp_make(p, std::move(c));
}

// Cantor-Zassenhaus equal-degree splitting of a product of irreducibles of
// degree d; the p = 2 branch uses the trace map.
void equal_degree(const ModPoly& f, int d, SplitMix64& rng, std::vector<ModPoly>& out) {
    if (f.degree() == d) {
        out.push_back(mp_monic(f));
        return;
    }
    u64 p = f.p;
    while (true) {
        ModPoly r = random_poly(p, f.degree(), rng);
        if (r.degree() < 1) continue;
        ModPoly g;
        if (p == 2) {
            ModPoly trace = r, cur = r;
            for (int i = 1; i < d; ++i) {
                cur = mp_mod(mp_mul(cur, cur), f);
                trace = mp_add(trace, cur);
            }
            if (trace.is_zero()) continue;
            g = mod_gcd(trace, f);
        } else {
            Int e = (int_pow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
            ModPoly w = mp_powmod(r, e, f);
            w = mp_sub(w, mp_const(p, 1));
            if (w.is_zero()) continue;
            g = mod_gcd(w, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(mp_divexact(f, g), d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<ModFactor> mod_factor(const ModPoly& u) {
    if (u.is_zero()) throw std::invalid_argument("mod_factor: zero polynomial");
    std::vector<ModFactor> out;
    if (u.degree() < 1) return out;
    ModPoly v = mp_monic(u);
    SplitMix64 rng(fnv_hash_poly(u));
    std::vector<std::pair<ModPoly, int>> parts;
    squarefree_decomp(v, 1, parts);
    for (const auto& [w, mult] : parts) {
        for (const auto& [block, d] : distinct_degree(w)) {
            std::vector<ModPoly> irreducibles;
            equal_degree(block, d, rng, irreducibles);
            for (auto& f : irreducibles) out.push_back({std::move(f), mult});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ModFactor& a, const ModFactor& b) { return a.factor < b.factor; });
    return out;
}

std::vector<int> mp_degree_partition(const ModPoly& u) {
    if (u.is_zero() || u.degree() < 1) throw std::invalid_argument("mp_degree_partition: need degree >= 1");
    ModPoly v = mp_monic(u);
    ModPoly d = mp_derivative(v);
    if (d.is_zero() || mod_gcd(v, d).degree() != 0)
        throw std::invalid_argument("mp_degree_partition: input not squarefree");
    std::vector<int> partition;
    for (const auto& [block, deg] : distinct_degree(v))
        for (int i = 0; i < block.degree() / deg; ++i) partition.push_back(deg);
    std::sort(partition.rbegin(), partition.rend());
    return partition;
}

// ---------------------------------------------------------------------------
// Hensel lifting and rational irreducibility

namespace {

// One linear Hensel step is iterated until the working modulus exceeds the
// target. Inputs: u = G*H (mod M) with G, H monic, g0/h0 = reductions mod p,
// coprime. Coefficients of G, H stay in [0, M).
void hensel_lift_pair(const IntPoly& u, const ModPoly& g0, const ModPoly& h0, const Int& p,
                      const Int& target, IntPoly* G_out, IntPoly* H_out) {
    ModPoly s, t;
    ModPoly one = mod_gcd_ext(g0, h0, &s, &t);
    if (one.degree() != 0) throw std::logic_error("hensel_lift_pair: factors not coprime");
    IntPoly G = mp_lift(g0), H = mp_lift(h0);
    Int M = p;
    u64 pu = mpz_get_ui(p.get_mpz_t());
    while (M < target) {
        IntPoly diff = ip_sub(u, ip_mul(G, H));
        std::vector<Int> ec(diff.c.size());
        for (size_t i = 0; i < diff.c.size(); ++i)
            mpz_divexact(ec[i].get_mpz_t(), diff.c[i].get_mpz_t(), M.get_mpz_t());
        ModPoly e = mp_reduce(IntPoly(std::move(ec)), pu);
        ModPoly dg = mp_mod(mp_mul(t, e), g0);
        ModPoly dh = mp_divexact(mp_sub(e, mp_mul(dg, h0)), g0);
        IntPoly dG = ip_scale(mp_lift(dg), M);
        IntPoly dH = ip_scale(mp_lift(dh), M);
        G = ip_add(G, dG);
        H = ip_add(H, dH);
        M *= p;
    }
    *G_out = std::move(G);
    *H_out = std::move(H);
}

// Lift a full list of pairwise-coprime monic local factors of u to mod p^K.
void hensel_lift_all(const IntPoly& u, const std::vector<ModPoly>& local, const Int& p,
                     const Int& target, std::vector<IntPoly>& out) {
    if (local.size() == 1) {
        // reduce u's coefficients into [0, target)
        std::vector<Int> c(u.c.size());
        for (size_t i = 0; i < u.c.size(); ++i) mpz_fdiv_r(c[i].get_mpz_t(), u.c[i].get_mpz_t(), target.get_mpz_t());
        out.push_back(IntPoly(std::move(c)));
        return;
    }
    ModPoly g0 = local[0];
    ModPoly h0 = local[1];
    for (size_t i = 2; i < local.size(); ++i) h0 = mp_mul(h0, local[i]);
    IntPoly G, H;
    hensel_lift_pair(u, g0, h0, p, target, &G, &H);
    out.push_back(std::move(G));
    std::vector<ModPoly> rest(local.begin() + 1, local.end());
    hensel_lift_all(H, rest, p, target, out);
}

Int symmetric_residue(const Int& a, const Int& M) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), M.get_mpz_t());
    if (r * 2 > M) r -= M;
    return r;
}

IntPoly product_mod(const std::vector<IntPoly>& fs, const std::vector<int>& idx, const Int& M) {
    IntPoly acc(std::vector<Int>{Int(1)});
    for (int i : idx) {
        acc = ip_mul(acc, fs[i]);
        for (auto& cc : acc.c) mpz_fdiv_r(cc.get_mpz_t(), cc.get_mpz_t(), M.get_mpz_t());
        acc.trim();
    }
    for (auto& cc : acc.c) cc = symmetric_residue(cc, M);
    acc.trim();
    return acc;
}

// 2^n * l2norm(u), a coarse Mignotte-style bound on coefficients of monic
// factors of u.
Int factor_coeff_bound(const IntPoly& u) {
    Int s = 0;
    for (const Int& a : u.c) s += a * a;
    Int root;
    mpz_sqrt(root.get_mpz_t(), s.get_mpz_t());
    root += 1;
    return (root + 1) << static_cast<unsigned>(u.degree());
}

}  // namespace

bool zz_irreducible(const IntPoly& u) {
    if (!u.is_monic()) throw std::invalid_argument("zz_irreducible: monic input required");
    int n = u.degree();
    if (n < 1) throw std::invalid_argument("zz_irreducible: degree >= 1 required");
    if (n > 62) throw std::invalid_argument("zz_irreducible: degree above 62 unsupported");
    if (n == 1) return true;
    if (u.c[0] == 0) return false;  // divisible by x
    Int disc = ip_discriminant(u);
    if (disc == 0) return false;  // repeated factor
    if (n == 2) return !is_square(disc);

    // degree-pattern sieve modulo good primes
    const std::uint64_t all_degrees = (std::uint64_t(1) << (n + 1)) - 1;
    const std::uint64_t proper = all_degrees & ~((std::uint64_t(1) << n) | 1u);
    std::uint64_t possible = all_degrees;
    u64 best_prime = 0;
    size_t best_factor_count = SIZE_MAX;
    int good_seen = 0;
    for (u64 p : primes_up_to(100000)) {
        if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
        std::vector<int> part = mp_degree_partition(mp_reduce(u, p));
        std::uint64_t mask = 1;
        for (int d : part) mask |= mask << d;
        possible &= mask;
        if ((possible & proper) == 0) return true;
        if (part.size() < best_factor_count) {
            best_factor_count = part.size();
            best_prime = p;
        }
        if (++good_seen >= 8) break;
    }
    if (best_prime == 0) throw std::logic_error("zz_irreducible: no good prime found");

    // Hensel lift the factorization at the best prime, then try to assemble a
    // rational factor from subsets of the local factors (Zassenhaus).
    ModPoly reduced = mp_reduce(u, best_prime);
    std::vector<ModFactor> fac = mod_factor(reduced);
    std::vector<ModPoly> local;
    for (auto& f : fac) local.push_back(f.factor);
    int r = static_cast<int>(local.size());
    if (r == 1) return true;
    Int p(static_cast<unsigned long>(best_prime));
    Int target = 2 * factor_coeff_bound(u) + 1;
    Int M = p;
    while (M < target) M *= p;
    std::vector<IntPoly> lifted;
    hensel_lift_all(u, local, p, M, lifted);

    std::vector<int> degs(r);
    for (int i = 0; i < r; ++i) degs[i] = local[i].degree();
    // subsets by increasing size, up to half the factors
    for (int size = 1; 2 * size <= r; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            bool pinned_ok = (2 * size < r) || idx[0] == 0;
            if (pinned_ok) {
                int dsum = 0;
                for (int i : idx) dsum += degs[i];
                if (dsum < n && (possible >> dsum) & 1u) {
                    IntPoly cand = product_mod(lifted, idx, M);
                    if (!cand.is_zero() && cand.c[0] != 0 &&
                        mpz_divisible_p(u.c[0].get_mpz_t(), cand.c[0].get_mpz_t())) {
                        if (ip_divide_exact(u, cand, nullptr)) return false;
                    }
                }
            }
            // next combination
            int i = size - 1;
            while (i >= 0 && idx[i] == r - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Dedekind criterion

bool dedekind_divides_index_trusted(const IntPoly& u, const Int& p) {
    if (!u.is_monic()) throw std::invalid_argument("dedekind: monic input required");
    if (!mpz_fits_ulong_p(p.get_mpz_t()))
        throw std::invalid_argument("dedekind: prime too large for the mod-p engine");
    u64 pu = mpz_get_ui(p.get_mpz_t());
    ModPoly ubar = mp_reduce(u, pu);
    if (ubar.degree() != u.degree())
        throw std::logic_error("dedekind: leading coefficient vanished mod p");
    std::vector<ModFactor> fac = mod_factor(ubar);
    ModPoly radical = mp_const(pu, 1);
    for (const auto& f : fac) radical = mp_mul(radical, f.factor);
    ModPoly cofactor = mp_divexact(ubar, radical);
    IntPoly g_lift = mp_lift(radical);
    IntPoly h_lift = mp_lift(cofactor);
    IntPoly diff = ip_sub(ip_mul(g_lift, h_lift), u);
    std::vector<Int> tc(diff.c.size());
    for (size_t i = 0; i < diff.c.size(); ++i)
        mpz_divexact(tc[i].get_mpz_t(), diff.c[i].get_mpz_t(), p.get_mpz_t());
    ModPoly tbar = mp_reduce(IntPoly(std::move(tc)), pu);
    ModPoly d = mod_gcd(radical, cofactor);  // cofactor is monic, possibly the constant 1
    if (d.degree() == 0) return false;
    d = mod_gcd(d, tbar);  // tbar may be zero; d is not
    return d.degree() >= 1;
}

bool dedekind_divides_index(const IntPoly& u, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("dedekind: p must be prime");
    if (!zz_irreducible(u)) throw std::invalid_argument("dedekind: reducible input");
    return dedekind_divides_index_trusted(u, p);
}

}  // namespace mono12
