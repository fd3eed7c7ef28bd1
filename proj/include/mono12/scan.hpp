// Box scans, theorem verification, and the JKS-vs-Dedekind cross-check, with
// CSV/JSON rendering. This is the engine behind the CLI subcommands.
#pragma once

#include <iosfwd>

#include "mono12/characterize.hpp"

namespace mono12 {

struct ScanOptions {
    long prime_bound = 10000;  // Frobenius sampling bound for the sextic classifier
    int threads = 1;
};

struct ScanRow {
    long long a = 0, b = 0;
    bool irreducible = false;
    std::optional<GaloisLabel> g4, g6, gal_f;
    std::optional<bool> monogenic;
    std::optional<Int> obstruction_prime;
    std::optional<int> obstruction_condition;
    bool prediction_agrees = true;
};

ScanRow classify_cell(long long a, long long b, const ScanOptions& opts = {});

// All rows with ab != 0, a-major then b ascending. Cells are independent, so
// they may be distributed over a small worker pool; the output order is fixed
// by the cell index either way.
std::vector<ScanRow> scan_box(long long amin, long long amax, long long bmin, long long bmax,
                              const ScanOptions& opts = {});

void write_csv(std::ostream& os, const std::vector<ScanRow>& rows);
void write_json(std::ostream& os, const std::vector<ScanRow>& rows);
std::map<GaloisLabel, long long> monogenic_counts(const std::vector<ScanRow>& rows);

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
};

// The theorem-level verification harness over |a|,|b| <= box.
std::vector<CheckResult> verify_box(long long box, const ScanOptions& opts = {});

struct OracleCheckStats {
    long long trinomials = 0;
    long long prime_checks = 0;
    long long mismatches = 0;
    std::string first_mismatch;
};

// JKS conditions vs the Dedekind criterion, for every irreducible trinomial
// in the tower with |a|,|b| <= box and every prime factor of its discriminant.
OracleCheckStats oracle_check_box(long long box);

}  // namespace mono12
