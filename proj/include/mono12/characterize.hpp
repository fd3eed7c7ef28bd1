// Executable form of the characterization theorems: residue tables, the
// per-family condition sets, and the full monogenicity prediction for
// x^12 + a x^6 + b.
#pragma once

#include <string>

#include "mono12/galois.hpp"
#include "mono12/jks.hpp"

namespace mono12 {

// Admissible (a mod 4, b mod 4) pairs shared by the quadratic/quartic
// characterizations and the 12T81 conditions.
const std::vector<std::pair<int, int>>& mod4_admissible_pairs();
// Admissible (a mod 9, b mod 9) pairs for the 12T81 conditions, grouped by
// which divisibility pattern of (a, b) by 3 they belong to.
const std::vector<std::pair<int, int>>& mod9_pairs_both_div();    // 3|a, 3|b
const std::vector<std::pair<int, int>>& mod9_pairs_only_a_div();  // 3|a, 3!|b
const std::vector<std::pair<int, int>>& mod9_pairs_only_b_div();  // 3!|a, 3|b
const std::vector<std::pair<int, int>>& mod9_pairs_none_div();    // 3!|ab
const std::vector<std::pair<int, int>>& mod9_admissible_pairs();  // union

// Monogenicity characterization of x^2 + a x + b (requires delta nonsquare).
bool g2_monogenic_char(const Int& a, const Int& b);

// Quartic characterization: the classification by square tests plus the
// matching item's verdict. The classification is evaluated arithmetically, so
// pairs whose quartic is reducible (but delta is not a square) still get the
// theorem's verdict; only a square delta is rejected.
std::pair<GaloisLabel, bool> g4_monogenic_char(const Int& a, const Int& b);

// Sextic characterization; absent when the sextic group is 6T9 (that case is
// decided by the per-prime test instead).
std::optional<bool> g6_monogenic_char(const Int& a, const Int& b, long prime_bound = 10000);

// Condition sets gating the parametric monogenic families of f, one per
// degree-12 label with such a family.
bool cond_12t10(const Int& a);               // b = 1
bool cond_12t28(const Int& a);               // b = -1
bool cond_12t38(const Int& a);               // b = -3
bool cond_12t42(const Int& a);               // b = (a^2+3)/4; rejects even a
bool cond_12t81(const Int& a, const Int& b);

struct Prediction {
    bool applicable = false;
    bool predicted_monogenic = false;
    std::optional<GaloisLabel> predicted_label;
    std::string matched_rule;
};

// The main characterization: which rule (finite list or parametric family)
// fires for (a, b), if any. Rejects reducible f.
Prediction predict_f(const Int& a, const Int& b);

}  // namespace mono12
