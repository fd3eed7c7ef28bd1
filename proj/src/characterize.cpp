#include "mono12/characterize.hpp"

#include <algorithm>

namespace mono12 {

namespace {

long mod_ui(const Int& a, unsigned long m) { return static_cast<long>(mpz_fdiv_ui(a.get_mpz_t(), m)); }

bool in_pairs(const std::vector<std::pair<int, int>>& table, long x, long y) {
    return std::find(table.begin(), table.end(),
                     std::make_pair(static_cast<int>(x), static_cast<int>(y))) != table.end();
}

Int reduced_delta(const Int& a, const Int& b) {
    Int delta = a * a - 4 * b;
    return mpz_even_p(a.get_mpz_t()) ? Int(delta / 4) : delta;
}

}  // namespace

const std::vector<std::pair<int, int>>& mod4_admissible_pairs() {
    static const std::vector<std::pair<int, int>> t = {{0, 1}, {0, 2}, {2, 2}, {2, 3},
                                                       {1, 3}, {3, 2}, {3, 1}, {3, 3}};
    return t;
}

const std::vector<std::pair<int, int>>& mod9_pairs_both_div() {
    static const std::vector<std::pair<int, int>> t = {{0, 3}, {0, 6}, {3, 3},
                                                       {3, 6}, {6, 3}, {6, 6}};
    return t;
}

const std::vector<std::pair<int, int>>& mod9_pairs_only_a_div() {
    static const std::vector<std::pair<int, int>> t = {{0, 2}, {0, 4}, {0, 5}, {0, 7},
                                                       {3, 1}, {3, 4}, {3, 7}, {3, 8},
                                                       {6, 1}, {6, 4}, {6, 7}, {6, 8}};
    return t;
}

const std::vector<std::pair<int, int>>& mod9_pairs_only_b_div() {
    static const std::vector<std::pair<int, int>> t = {{1, 3}, {1, 6}, {2, 3}, {4, 6},
                                                       {5, 6}, {7, 3}, {8, 3}, {8, 6}};
    return t;
}

const std::vector<std::pair<int, int>>& mod9_pairs_none_div() {
    static const std::vector<std::pair<int, int>> t = {
        {1, 1}, {1, 2}, {1, 4}, {1, 5}, {1, 8}, {2, 2}, {2, 4}, {2, 5}, {2, 7}, {2, 8},
        {4, 1}, {4, 2}, {4, 5}, {4, 7}, {5, 1}, {5, 2}, {5, 5}, {5, 7}, {7, 2}, {7, 4},
        {7, 5}, {7, 7}, {7, 8}, {8, 1}, {8, 2}, {8, 4}, {8, 5}, {8, 8}};
    return t;
}

const std::vector<std::pair<int, int>>& mod9_admissible_pairs() {
    static const std::vector<std::pair<int, int>> t = [] {
        std::vector<std::pair<int, int>> all;
        for (const auto* part : {&mod9_pairs_both_div(), &mod9_pairs_only_a_div(),
                                 &mod9_pairs_only_b_div(), &mod9_pairs_none_div()})
            all.insert(all.end(), part->begin(), part->end());
        return all;
    }();
    return t;
}

bool g2_monogenic_char(const Int& a, const Int& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("g2_monogenic_char: ab != 0 required");
    // residue gate first: pairs like (2,1) fail here before the squarefree
    // test, whose input would vanish for them
    if (mpz_even_p(a.get_mpz_t())) {
        static const std::vector<std::pair<int, int>> even_pairs = {{0, 1}, {0, 2}, {2, 2}, {2, 3}};
        if (!in_pairs(even_pairs, mod_ui(a, 4), mod_ui(b, 4))) return false;
    }
    Int w = reduced_delta(a, b);
    if (w == 0) throw std::invalid_argument("g2_monogenic_char: delta vanishes");
    return is_squarefree(w);
}

std::pair<GaloisLabel, bool> g4_monogenic_char(const Int& a, const Int& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("g4_monogenic_char: ab != 0 required");
    Int delta = a * a - 4 * b;
    if (is_square(delta)) throw std::invalid_argument("g4_monogenic_char: quadratic resolvent splits");
    GaloisLabel g4 = classify_g4_trusted(a, b);
    bool w_sf = is_squarefree(reduced_delta(a, b));
    bool verdict = false;
    if (g4.index == 1) {
        verdict = (b == 2 && (a == 4 || a == -4)) || (a == -5 && b == 5);
    } else if (g4.index == 2) {
        long am4 = mod_ui(a, 4);
        verdict = b == 1 && (am4 == 0 || am4 == 3) && w_sf;
    } else {
        verdict = w_sf && b != 1 && is_squarefree(b) && !is_square(Int(b * delta)) &&
                  in_pairs(mod4_admissible_pairs(), mod_ui(a, 4), mod_ui(b, 4));
    }
    return {g4, verdict};
}

namespace {

bool sextic_family_f2(const Int& a, const Int& b) {
    return b == 2 && (a == 2 || a == -2);
}

bool sextic_family_f3(const Int& a, const Int& b) {
    if (b != 1) return false;
    if (mod_ui(a, 9) == 0 || a == 1 || a == -1) return false;
    if (a == 2 || a == -2) return false;  // a -+ 2 would vanish
    return is_squarefree(Int(a - 2)) && is_squarefree(Int(a + 2));
}

bool sextic_family_f4(const Int& a, const Int& b) {
    if (b != -1) return false;
    long am9 = mod_ui(a, 9);
    if (mod_ui(a, 4) == 0 || am9 == 0 || am9 == 4 || am9 == 5) return false;
    Int n = a * a + 4;
    Int g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), Int(4).get_mpz_t());
    return is_squarefree(Int(n / g));
}

bool sextic_family_f5(const Int& a, const Int& b) {
    if (mpz_even_p(a.get_mpz_t()) || a == 1 || a == -1) return false;
    Int expect = (a * a + 3) / 4;
    return b == expect && is_squarefree(expect);
}

}  // namespace

std::optional<bool> g6_monogenic_char(const Int& a, const Int& b, long prime_bound) {
    if (a == 0 || b == 0) throw std::invalid_argument("g6_monogenic_char: ab != 0 required");
    QuadraticLikeTrinomial g6{3, a, b};
    if (!zz_irreducible(to_poly(g6)))
        throw std::invalid_argument("g6_monogenic_char: reducible sextic");
    GaloisLabel g = classify_g6_trusted(a, b, prime_bound).first;
    switch (g.index) {
        case 1:
            return b == 1 && (a == 1 || a == -1);
        case 2:
            return false;
        case 3:
            return sextic_family_f2(a, b) || sextic_family_f3(a, b) || sextic_family_f4(a, b);
        case 5:
            return sextic_family_f5(a, b);
        default:
            return std::nullopt;  // 6T9: no closed family here, fall back to the per-prime test
    }
}

bool cond_12t10(const Int& a) {
    if (a == -1) return false;
    long am4 = mod_ui(a, 4);
    if (am4 != 0 && am4 != 3) return false;
    if (mod_ui(a, 9) == 0) return false;
    return is_squarefree(reduced_delta(a, Int(1)));
}

bool cond_12t28(const Int& a) {
    if (mod_ui(a, 4) == 0) return false;
    long am9 = mod_ui(a, 9);
    if (am9 == 0 || am9 == 4 || am9 == 5) return false;
    return is_squarefree(reduced_delta(a, Int(-1)));
}

bool cond_12t38(const Int& a) {
    long am4 = mod_ui(a, 4);
    if (am4 != 0 && am4 != 3) return false;
    long am9 = mod_ui(a, 9);
    if (am9 == 2 || am9 == 7) return false;
    return is_squarefree(reduced_delta(a, Int(-3)));
}

bool cond_12t42(const Int& a) {
    if (mpz_even_p(a.get_mpz_t()))
        throw std::invalid_argument("cond_12t42: a must be odd for b = (a^2+3)/4 to be integral");
    long am8 = mod_ui(a, 8);
    if (am8 != 3 && am8 != 5 && am8 != 7) return false;
    if (a == -1) return false;
    return is_squarefree(Int((a * a + 3) / 4));
}

bool cond_12t81(const Int& a, const Int& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("cond_12t81: ab != 0 required");
    if (b == 1) return false;
    Int delta = a * a - 4 * b;
    if (delta == 0) return false;
    if (!is_squarefree(b) || !is_squarefree(reduced_delta(a, b))) return false;
    if (is_square(Int(-3 * b)) || is_square(Int(-3 * b * delta)) || is_square(Int(b * delta)))
        return false;
    if (!in_pairs(mod4_admissible_pairs(), mod_ui(a, 4), mod_ui(b, 4))) return false;
    return in_pairs(mod9_admissible_pairs(), mod_ui(a, 9), mod_ui(b, 9));
}

Prediction predict_f(const Int& a, const Int& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("predict_f: ab != 0 required");
    QuadraticLikeTrinomial f{6, a, b};
    if (!zz_irreducible(to_poly(f))) throw std::invalid_argument("predict_f: reducible trinomial");
    Prediction pr;
    pr.applicable = true;
    auto fire = [&pr](int index, const std::string& rule) {
        pr.predicted_monogenic = true;
        pr.predicted_label = GaloisLabel{12, index};
        pr.matched_rule = rule;
    };
    const bool a_odd = mpz_odd_p(a.get_mpz_t());
    if (a == -1 && b == 1) {
        fire(2, "12T2 list");
    } else if (b == 2 && (a == 2 || a == -2)) {
        fire(28, "12T28 list");
    } else if ((b == -2 || b == 6) && (a == 4 || a == -4)) {
        fire(38, "12T38 list");
    } else if ((b == 2 && (a == 4 || a == -4)) || (a == -5 && b == 5)) {
        fire(39, "12T39 list");
    } else if (b == 1 && cond_12t10(a)) {
        fire(10, "12T10 family");
    } else if (b == -1 && cond_12t28(a)) {
        fire(28, "12T28 family");
    } else if (b == -3 && cond_12t38(a)) {
        fire(38, "12T38 family");
    } else if (a_odd && b == (a * a + 3) / 4 && cond_12t42(a)) {
        fire(42, "12T42 family");
    } else if (cond_12t81(a, b)) {
        fire(81, "12T81 conditions");
    } else {
        pr.predicted_monogenic = false;
        pr.matched_rule = "none";
    }
    return pr;
}

}  // namespace mono12
