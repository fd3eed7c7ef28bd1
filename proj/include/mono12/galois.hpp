// Galois-group classification for the trinomial tower: exact quartic
// classification by square tests, an evidence-based sextic classifier backed
// by Frobenius cycle-type sampling, and the pair table that determines the
// degree-12 group.
#pragma once

#include <map>
#include <optional>
#include <set>

#include "mono12/permgroup.hpp"
#include "mono12/trinomial.hpp"

namespace mono12 {

// Transitive-group label nTk for n in {2, 4, 6, 12}.
struct GaloisLabel {
    int degree = 0;
    int index = 0;

    std::string to_string() const;
    bool operator==(const GaloisLabel& o) const = default;
    auto operator<=>(const GaloisLabel& o) const = default;
};

bool is_valid_label(const GaloisLabel& l);
// The sixteen possible degree-12 labels, ascending.
const std::vector<GaloisLabel>& possible_f_labels();

struct TrinomialStatements {
    bool neg3bdelta_square = false;  // -3*b*delta is a square
    bool neg3b_square = false;       // -3*b is a square
    bool resolvent_reducible = false;
    bool b_is_cube = false;
};

using CycleType = std::vector<int>;  // descending partition of the degree

struct CycleTypeEvidence {
    int sampled_primes = 0;
    std::map<CycleType, int> observed_types;  // type -> number of primes
    std::map<CycleType, Int> first_seen;      // type -> smallest witnessing prime
    std::optional<Int> certificate;           // prime whose type decided the group
    // log10 of an upper bound on the chance the selected group is wrong
    // (absent when the selection is certified by a witnessed cycle type).
    std::optional<double> error_bound_log10;
};

// Quartic x^4 + a x^2 + b: C4 iff b*delta square, V4 iff b square, else D4.
GaloisLabel classify_g4(const Int& a, const Int& b);
GaloisLabel classify_g4_trusted(const Int& a, const Int& b);

TrinomialStatements statements(const Int& a, const Int& b);

// Sextic x^6 + a x^3 + b. The -3*delta square test splits the candidates by
// the quadratic subfield; Frobenius sampling separates the rest, with an
// explicit certificate or error bound in the evidence.
std::pair<GaloisLabel, CycleTypeEvidence> classify_g6(const Int& a, const Int& b,
                                                      long prime_bound = 10000);
std::pair<GaloisLabel, CycleTypeEvidence> classify_g6_trusted(const Int& a, const Int& b,
                                                              long prime_bound = 10000);

// Degree-12 label via the (G4, G6) pair table plus the square statements.
GaloisLabel classify_f(const Int& a, const Int& b, long prime_bound = 10000);
GaloisLabel classify_f_trusted(const Int& a, const Int& b, long prime_bound = 10000);

// Pure table lookup; throws on the three impossible pairs.
GaloisLabel chen_lookup(const GaloisLabel& g4, const GaloisLabel& g6, bool three_alpha_beta_square,
                        const TrinomialStatements& st);

// Factor-degree partitions of u modulo every good prime up to the bound.
CycleTypeEvidence frobenius_sample(const IntPoly& u, long prime_bound);
CycleTypeEvidence frobenius_sample_trusted(const IntPoly& u, long prime_bound);

// Embedded permutation-group data for the 6Tn / 12Tn candidates.
const std::vector<permgroup::Perm>& label_generators(const GaloisLabel& l);
long label_group_order(const GaloisLabel& l);
const std::map<CycleType, int>& label_cycle_type_counts(const GaloisLabel& l);
bool cycle_type_realizable(const GaloisLabel& l, const CycleType& t);

}  // namespace mono12
