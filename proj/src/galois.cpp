#include "mono12/galois.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mono12 {

using permgroup::Perm;

std::string GaloisLabel::to_string() const {
    std::ostringstream os;
    os << degree << "T" << index;
    return os.str();
}

namespace {

const std::vector<GaloisLabel> kValidLabels = {
    {2, 1},  {4, 1},  {4, 2},  {4, 3},  {6, 1},   {6, 2},   {6, 3},   {6, 5},   {6, 9},
    {12, 2}, {12, 3}, {12, 10}, {12, 11}, {12, 12}, {12, 13}, {12, 14}, {12, 15}, {12, 16},
    {12, 18}, {12, 28}, {12, 37}, {12, 38}, {12, 39}, {12, 42}, {12, 81}};

const std::vector<GaloisLabel> kFLabels = {{12, 2},  {12, 3},  {12, 10}, {12, 11},
                                           {12, 12}, {12, 13}, {12, 14}, {12, 15},
                                           {12, 16}, {12, 18}, {12, 28}, {12, 37},
                                           {12, 38}, {12, 39}, {12, 42}, {12, 81}};

// The regular degree-6 representation of S3: permutations of {0..5} induced by
// left multiplication on a fixed element order.
std::vector<Perm> regular_s3() {
    std::vector<Perm> elems;  // permutations of {0,1,2}
    Perm base = {0, 1, 2};
    do
        elems.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    auto index_of = [&elems](const Perm& p) {
        return static_cast<int>(std::find(elems.begin(), elems.end(), p) - elems.begin());
    };
    std::vector<Perm> gens;
    for (const Perm& g : {Perm{1, 0, 2}, Perm{1, 2, 0}}) {
        Perm action(6);
        for (size_t i = 0; i < elems.size(); ++i)
            action[i] = index_of(permgroup::compose(g, elems[i]));
        gens.push_back(action);
    }
    return gens;
}

struct LabelGroup {
    long order = 0;
    std::vector<Perm> gens;
    std::map<CycleType, int> counts;
};

// Candidate Galois groups in their root-permutation representations. The
// degree-12 generators come from the transitive subgroups of the 144-element
// generic group of x^12 + a x^6 + b (the regeneration test rebuilds that
// enumeration and cross-checks every entry); the degree-6 groups act on the
// cube-root symbol blocks {0,1,2},{3,4,5}.
std::map<GaloisLabel, LabelGroup> build_label_groups() {
    std::map<GaloisLabel, LabelGroup> out;
    auto add = [&out](GaloisLabel l, long order, std::vector<Perm> gens) {
        out[l] = LabelGroup{order, std::move(gens), {}};
    };
    add({6, 1}, 6, {{1, 2, 3, 4, 5, 0}});
    add({6, 2}, 6, regular_s3());
    add({6, 3}, 12, {{1, 2, 3, 4, 5, 0}, {0, 5, 4, 3, 2, 1}});
    add({6, 5}, 18, {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}, {3, 4, 5, 0, 1, 2}});
    add({6, 9}, 36,
        {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}, {3, 4, 5, 0, 1, 2}, {0, 2, 1, 3, 5, 4}});

    add({12, 2}, 12,
        {{1, 2, 3, 4, 5, 0, 7, 8, 9, 10, 11, 6}, {6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5}});
    add({12, 3}, 12,
        {{1, 2, 3, 4, 5, 0, 7, 8, 9, 10, 11, 6}, {6, 11, 10, 9, 8, 7, 0, 5, 4, 3, 2, 1}});
    add({12, 10}, 24,
        {{0, 5, 4, 3, 2, 1, 6, 11, 10, 9, 8, 7},
         {1, 0, 5, 4, 3, 2, 7, 6, 11, 10, 9, 8},
         {6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5}});
    add({12, 11}, 24,
        {{0, 5, 4, 3, 2, 1, 6, 11, 10, 9, 8, 7},
         {1, 0, 5, 4, 3, 2, 7, 6, 11, 10, 9, 8},
         {6, 7, 8, 9, 10, 11, 3, 4, 5, 0, 1, 2}});
    add({12, 12}, 24,
        {{0, 5, 4, 3, 2, 1, 7, 6, 11, 10, 9, 8},
         {1, 0, 5, 4, 3, 2, 6, 11, 10, 9, 8, 7},
         {6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5}});
    add({12, 13}, 24,
        {{0, 5, 4, 3, 2, 1, 7, 6, 11, 10, 9, 8},
         {1, 0, 5, 4, 3, 2, 6, 11, 10, 9, 8, 7},
         {6, 7, 8, 9, 10, 11, 3, 4, 5, 0, 1, 2}});
    add({12, 14}, 24,
        {{0, 1, 2, 3, 4, 5, 9, 10, 11, 6, 7, 8},
         {1, 2, 3, 4, 5, 0, 7, 8, 9, 10, 11, 6},
         {6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5}});
    add({12, 15}, 24,
        {{0, 1, 2, 3, 4, 5, 9, 10, 11, 6, 7, 8},
         {1, 2, 3, 4, 5, 0, 7, 8, 9, 10, 11, 6},
         {6, 11, 10, 9, 8, 7, 0, 5, 4, 3, 2, 1}});
    add({12, 16}, 36,
        {{0, 1, 2, 3, 4, 5, 8, 9, 10, 11, 6, 7},
         {1, 0, 5, 4, 3, 2, 7, 6, 11, 10, 9, 8},
         {2, 3, 4, 5, 0, 1, 6, 7, 8, 9, 10, 11},
         {6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5}});
    add({12, 18}, 36,
        {{0, 1, 2, 3, 4, 5, 8, 9, 10, 11, 6, 7},
         {1, 2, 3, 4, 5, 0, 7, 8, 9, 10, 11, 6},
         {6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5}});
    add({12, 28}, 48,
        {{0, 1, 2, 3, 4, 5, 9, 10, 11, 6, 7, 8},
         {0, 5, 4, 3, 2, 1, 6, 11, 10, 9, 8, 7},
         {1, 0, 5, 4, 3, 2, 7, 6, 11, 10, 9, 8},
         {6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5}});
    add({12, 37}, 72,
        {{0, 1, 2, 3, 4, 5, 8, 9, 10, 11, 6, 7},
         {0, 5, 4, 3, 2, 1, 6, 11, 10, 9, 8, 7},
         {1, 0, 5, 4, 3, 2, 7, 6, 11, 10, 9, 8},
         {6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5}});
    add({12, 38}, 72,
        {{0, 1, 2, 3, 4, 5, 8, 9, 10, 11, 6, 7},
         {0, 5, 4, 3, 2, 1, 7, 6, 11, 10, 9, 8},
         {1, 0, 5, 4, 3, 2, 6, 11, 10, 9, 8, 7},
         {6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5}});
    add({12, 39}, 72,
        {{0, 1, 2, 3, 4, 5, 8, 9, 10, 11, 6, 7},
         {0, 5, 4, 3, 2, 1, 6, 11, 10, 9, 8, 7},
         {1, 0, 5, 4, 3, 2, 7, 6, 11, 10, 9, 8},
         {6, 7, 8, 9, 10, 11, 1, 2, 3, 4, 5, 0}});
    add({12, 42}, 72,
        {{0, 1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 6},
         {1, 2, 3, 4, 5, 0, 6, 7, 8, 9, 10, 11},
         {6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5}});
    add({12, 81}, 144,
        {{0, 1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 6},
         {0, 5, 4, 3, 2, 1, 6, 11, 10, 9, 8, 7},
         {1, 0, 5, 4, 3, 2, 6, 11, 10, 9, 8, 7},
         {6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5}});

    for (auto& [label, lg] : out) {
        std::vector<Perm> group = permgroup::closure(lg.gens);
        if (static_cast<long>(group.size()) != lg.order)
            throw std::logic_error("group data: closure of " + label.to_string() +
                                   " has unexpected order");
        if (!permgroup::is_transitive(group, label.degree))
            throw std::logic_error("group data: " + label.to_string() + " not transitive");
        lg.counts = permgroup::cycle_type_counts(group);
    }
    return out;
}

const std::map<GaloisLabel, LabelGroup>& label_groups() {
    static const std::map<GaloisLabel, LabelGroup> data = build_label_groups();
    return data;
}

const LabelGroup& group_for(const GaloisLabel& l) {
    auto it = label_groups().find(l);
    if (it == label_groups().end())
        throw std::invalid_argument("no group data for label " + l.to_string());
    return it->second;
}

}  // namespace

bool is_valid_label(const GaloisLabel& l) {
    return std::find(kValidLabels.begin(), kValidLabels.end(), l) != kValidLabels.end();
}

const std::vector<GaloisLabel>& possible_f_labels() { return kFLabels; }

const std::vector<Perm>& label_generators(const GaloisLabel& l) { return group_for(l).gens; }
long label_group_order(const GaloisLabel& l) { return group_for(l).order; }
const std::map<CycleType, int>& label_cycle_type_counts(const GaloisLabel& l) {
    return group_for(l).counts;
}
bool cycle_type_realizable(const GaloisLabel& l, const CycleType& t) {
    return group_for(l).counts.count(t) > 0;
}

// ---------------------------------------------------------------------------

GaloisLabel classify_g4_trusted(const Int& a, const Int& b) {
    Int delta = a * a - 4 * b;
    if (is_square(Int(b * delta))) return {4, 1};
    if (is_square(b)) return {4, 2};
    return {4, 3};
}

GaloisLabel classify_g4(const Int& a, const Int& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("classify_g4: ab != 0 required");
    QuadraticLikeTrinomial g4{2, a, b};
    if (!zz_irreducible(to_poly(g4))) throw std::invalid_argument("classify_g4: reducible quartic");
    return classify_g4_trusted(a, b);
}

TrinomialStatements statements(const Int& a, const Int& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("statements: ab != 0 required");
    Int delta = a * a - 4 * b;
    TrinomialStatements st;
    st.neg3bdelta_square = is_square(Int(-3 * b * delta));
    st.neg3b_square = is_square(Int(-3 * b));
    st.resolvent_reducible = resolvent_reducible(a, b);
    st.b_is_cube = is_cube(b);
    return st;
}

// ---------------------------------------------------------------------------

CycleTypeEvidence frobenius_sample_trusted(const IntPoly& u, long prime_bound) {
    if (!u.is_monic() || u.degree() < 1)
        throw std::invalid_argument("frobenius_sample: monic polynomial of degree >= 1 required");
    CycleTypeEvidence ev;
    Int disc = ip_discriminant(u);
    if (disc == 0) throw std::invalid_argument("frobenius_sample: repeated roots");
    for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(prime_bound))) {
        if (p > static_cast<std::uint64_t>(prime_bound)) break;
        if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
        CycleType t = mp_degree_partition(mp_reduce(u, p));
        ++ev.sampled_primes;
        auto [it, fresh] = ev.first_seen.try_emplace(t, Int(static_cast<unsigned long>(p)));
        (void)it;
        ev.observed_types[t] += 1;
        if (fresh && t.size() == 1 && !ev.certificate)
            ev.certificate = Int(static_cast<unsigned long>(p));  // irreducible reduction
    }
    return ev;
}

CycleTypeEvidence frobenius_sample(const IntPoly& u, long prime_bound) {
    if (prime_bound < 100) throw std::invalid_argument("frobenius_sample: prime_bound >= 100");
    if (!u.is_monic() || u.degree() < 1 || !zz_irreducible(u))
        throw std::invalid_argument("frobenius_sample: monic irreducible input required");
    return frobenius_sample_trusted(u, prime_bound);
}

namespace {

// Pick the smallest candidate group whose cycle types cover everything
// observed; record what certified the choice, or a bound on the chance that a
// larger group was missed.
GaloisLabel select_by_evidence(const std::vector<GaloisLabel>& candidates, CycleTypeEvidence& ev) {
    int chosen = -1;
    for (size_t i = 0; i < candidates.size(); ++i) {
        const auto& ct = label_cycle_type_counts(candidates[i]);
        bool covers = true;
        for (const auto& [t, cnt] : ev.observed_types)
            if (!ct.count(t)) {
                covers = false;
                break;
            }
        if (covers) {
            chosen = static_cast<int>(i);
            break;
        }
    }
    if (chosen < 0)
        throw std::logic_error("classify_g6: observed cycle types fit no candidate group");
    const GaloisLabel selected = candidates[chosen];
    std::optional<Int> cert;
    for (int j = 0; j < chosen; ++j) {
        const auto& ct = label_cycle_type_counts(candidates[j]);
        for (const auto& [t, p] : ev.first_seen) {
            if (ct.count(t)) continue;
            if (!cert || p < *cert) cert = p;
        }
    }
    ev.certificate = cert;
    std::optional<double> bound;
    const auto& sel_ct = label_cycle_type_counts(selected);
    for (size_t j = chosen + 1; j < candidates.size(); ++j) {
        const auto& alt = group_for(candidates[j]);
        bool covers = true;
        for (const auto& [t, cnt] : ev.observed_types)
            if (!alt.counts.count(t)) {
                covers = false;
                break;
            }
        if (!covers) continue;
        long distinguishing = 0;
        for (const auto& [t, cnt] : alt.counts)
            if (!sel_ct.count(t)) distinguishing += cnt;
        if (distinguishing == 0)
            throw std::logic_error("classify_g6: indistinguishable candidate groups");
        double miss = 1.0 - static_cast<double>(distinguishing) / static_cast<double>(alt.order);
        double lg = ev.sampled_primes * std::log10(miss);
        if (!bound || lg > *bound) bound = lg;
    }
    ev.error_bound_log10 = bound;
    return selected;
}

}  // namespace

std::pair<GaloisLabel, CycleTypeEvidence> classify_g6_trusted(const Int& a, const Int& b,
                                                              long prime_bound) {
    QuadraticLikeTrinomial g6{3, a, b};
    CycleTypeEvidence ev = frobenius_sample_trusted(to_poly(g6), prime_bound);
    Int delta = a * a - 4 * b;
    std::vector<GaloisLabel> candidates;
    if (is_square(Int(-3 * delta)))
        candidates = {{6, 2}, {6, 1}, {6, 5}};  // single quadratic subfield: order 6 or 18
    else
        candidates = {{6, 3}, {6, 9}};
    GaloisLabel chosen = select_by_evidence(candidates, ev);
    return {chosen, std::move(ev)};
}

std::pair<GaloisLabel, CycleTypeEvidence> classify_g6(const Int& a, const Int& b,
                                                      long prime_bound) {
    if (a == 0 || b == 0) throw std::invalid_argument("classify_g6: ab != 0 required");
    QuadraticLikeTrinomial g6{3, a, b};
    if (!zz_irreducible(to_poly(g6))) throw std::invalid_argument("classify_g6: reducible sextic");
    return classify_g6_trusted(a, b, prime_bound);
}

// ---------------------------------------------------------------------------

GaloisLabel chen_lookup(const GaloisLabel& g4, const GaloisLabel& g6, bool three_alpha_beta_square,
                        const TrinomialStatements& st) {
    if (g4.degree != 4 || g6.degree != 6 || !is_valid_label(g4) || !is_valid_label(g6))
        throw std::invalid_argument("chen_lookup: bad labels");
    auto pair_is = [&](int i4, int i6) { return g4.index == i4 && g6.index == i6; };
    if (pair_is(1, 1) || pair_is(1, 2) || pair_is(1, 5))
        throw std::logic_error("chen_lookup: impossible (G4, G6) pair " + g4.to_string() + "," +
                               g6.to_string());
    if (pair_is(1, 3)) return {12, 11};
    if (pair_is(1, 9)) return {12, 39};
    if (pair_is(2, 1)) return {12, 2};
    if (pair_is(2, 2)) return {12, 3};
    if (pair_is(2, 3)) return three_alpha_beta_square ? GaloisLabel{12, 3} : GaloisLabel{12, 10};
    if (pair_is(2, 5)) return {12, 18};
    if (pair_is(2, 9)) return three_alpha_beta_square ? GaloisLabel{12, 16} : GaloisLabel{12, 37};
    if (pair_is(3, 1)) return {12, 14};
    if (pair_is(3, 2)) return {12, 15};
    if (pair_is(3, 3)) {
        const bool P = st.neg3bdelta_square, Q = st.neg3b_square, R = st.resolvent_reducible,
                   S = st.b_is_cube;
        if ((P && R) || (Q && S)) return {12, 12};
        if ((Q && R) || (P && S)) return {12, 13};
        return {12, 28};
    }
    if (pair_is(3, 5)) return {12, 42};
    if (pair_is(3, 9)) return (st.neg3b_square || st.neg3bdelta_square) ? GaloisLabel{12, 38}
                                                                        : GaloisLabel{12, 81};
    throw std::invalid_argument("chen_lookup: unhandled pair");
}

GaloisLabel classify_f_trusted(const Int& a, const Int& b, long prime_bound) {
    GaloisLabel g4 = classify_g4_trusted(a, b);
    auto [g6, ev] = classify_g6_trusted(a, b, prime_bound);
    TrinomialStatements st = statements(a, b);
    bool three = false;
    if (g4.index == 2) {
        // b is a square here, so integer alpha/beta exist
        DerivedQuantities d = derive(a, b);
        three = is_square(Int(3 * *d.alpha)) || is_square(Int(3 * *d.beta));
    }
    return chen_lookup(g4, g6, three, st);
}

GaloisLabel classify_f(const Int& a, const Int& b, long prime_bound) {
    if (a == 0 || b == 0) throw std::invalid_argument("classify_f: ab != 0 required");
    QuadraticLikeTrinomial f{6, a, b};
    if (!zz_irreducible(to_poly(f))) throw std::invalid_argument("classify_f: reducible trinomial");
    return classify_f_trusted(a, b, prime_bound);
}

}  // namespace mono12
