// mono12: irreducibility, Galois group and monogenicity of x^12 + a x^6 + b
// and its divisor-degree trinomials.
//
//   mono12 classify --a -1 --b 1
//   mono12 scan --amin -5 --amax 5 --bmin -5 --bmax 5 --out rows.csv
//   mono12 verify --box 12
//   mono12 oracle-check --box 10

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mono12/scan.hpp"

using namespace mono12;

namespace {

int run_classify(long long a, long long b, bool as_json, long prime_bound) {
    if (a == 0 || b == 0) {
        std::cerr << "classify: need a*b != 0\n";
        return 2;
    }
    Int A(static_cast<long>(a)), B(static_cast<long>(b));
    QuadraticLikeTrinomial f{6, A, B};
    bool irreducible = zz_irreducible(to_poly(f));
    DerivedQuantities d = derive(A, B);
    Int disc = discriminant(f);
    FactoredInteger disc_fac = factorize(disc);

    if (!irreducible) {
        if (as_json) {
            nlohmann::ordered_json o;
            o["a"] = a;
            o["b"] = b;
            o["irreducible"] = false;
            std::cout << o.dump(2) << '\n';
        } else {
            std::cout << "f(x) = x^12 + (" << a << ")x^6 + (" << b << ")\n"
                      << "  irreducible: false\n";
        }
        return 0;
    }

    TrinomialStatements st = statements(A, B);
    GaloisLabel g4 = classify_g4_trusted(A, B);
    auto [g6, ev] = classify_g6_trusted(A, B, prime_bound);
    bool three = false;
    if (g4.index == 2) three = is_square(Int(3 * *d.alpha)) || is_square(Int(3 * *d.beta));
    GaloisLabel galf = chen_lookup(g4, g6, three, st);
    MonogenicityReport rep = is_monogenic_trusted(f);
    Prediction pr = predict_f(A, B);
    bool agrees = pr.predicted_monogenic == rep.monogenic &&
                  (!rep.monogenic || (pr.predicted_label && *pr.predicted_label == galf));

    std::string disc_str = disc_fac.sign < 0 ? "-" : "";
    for (size_t i = 0; i < disc_fac.factors.size(); ++i) {
        const auto& [p, e] = disc_fac.factors[i];
        disc_str += (i ? " * " : "") + p.get_str();
        if (e > 1) disc_str += "^" + std::to_string(e);
    }

    std::string g6_confidence;
    if (ev.certificate)
        g6_confidence = "certified by p=" + ev.certificate->get_str();
    if (ev.error_bound_log10) {
        if (!g6_confidence.empty()) g6_confidence += ", ";
        g6_confidence += "error < 10^" + std::to_string(static_cast<long>(*ev.error_bound_log10));
    }
    if (g6_confidence.empty()) g6_confidence = "exact";
    g6_confidence += ", " + std::to_string(ev.sampled_primes) + " primes sampled";

    if (as_json) {
        nlohmann::ordered_json o;
        o["a"] = a;
        o["b"] = b;
        o["irreducible"] = true;
        o["delta"] = d.delta.get_str();
        o["reduced_delta"] = d.reduced_delta.get_str();
        o["discriminant"] = disc.get_str();
        o["discriminant_factored"] = disc_str;
        o["statements"] = {{"neg3bdelta_square", st.neg3bdelta_square},
                           {"neg3b_square", st.neg3b_square},
                           {"resolvent_reducible", st.resolvent_reducible},
                           {"b_is_cube", st.b_is_cube}};
        o["G4"] = g4.to_string();
        o["G6"] = g6.to_string();
        o["G6_confidence"] = g6_confidence;
        o["Gal_f"] = galf.to_string();
        o["monogenic"] = rep.monogenic;
        if (rep.obstruction_prime) {
            o["obstruction_prime"] = rep.obstruction_prime->get_str();
            o["obstruction_condition"] = *rep.obstruction_condition;
        }
        o["predicted_monogenic"] = pr.predicted_monogenic;
        if (pr.predicted_label) o["predicted_label"] = pr.predicted_label->to_string();
        o["matched_rule"] = pr.matched_rule;
        o["prediction_agrees"] = agrees;
        std::cout << o.dump(2) << '\n';
    } else {
        std::cout << "f(x) = x^12 + (" << a << ")x^6 + (" << b << ")\n"
                  << "  irreducible:    true\n"
                  << "  delta:          " << d.delta.get_str() << "\n"
                  << "  reduced delta:  " << d.reduced_delta.get_str() << "\n"
                  << "  discriminant:   " << disc_str << " = " << disc.get_str() << "\n"
                  << "  statements:     P=" << st.neg3bdelta_square << " Q=" << st.neg3b_square
                  << " R=" << st.resolvent_reducible << " S=" << st.b_is_cube << "\n"
                  << "  G4:             " << g4.to_string() << "\n"
                  << "  G6:             " << g6.to_string() << " (" << g6_confidence << ")\n"
                  << "  Gal(f):         " << galf.to_string() << "\n"
                  << "  monogenic:      " << (rep.monogenic ? "true" : "false");
        if (rep.obstruction_prime)
            std::cout << "  (obstruction q=" << rep.obstruction_prime->get_str() << ", condition "
                      << *rep.obstruction_condition << ")";
        std::cout << "\n  prediction:     "
                  << (pr.predicted_monogenic ? "monogenic" : "not monogenic");
        if (pr.predicted_label) std::cout << " with Gal(f) = " << pr.predicted_label->to_string();
        std::cout << " (rule: " << pr.matched_rule << ")\n"
                  << "  agreement:      " << (agrees ? "true" : "false") << "\n";
    }
    return 0;
}

int run_scan(long long amin, long long amax, long long bmin, long long bmax,
             const std::string& out_path, const std::string& format, long prime_bound,
             int threads) {
    if (amin > amax || bmin > bmax) {
        std::cerr << "scan: empty range\n";
        return 2;
    }
    ScanOptions opts;
    opts.prime_bound = prime_bound;
    opts.threads = threads;
    std::vector<ScanRow> rows = scan_box(amin, amax, bmin, bmax, opts);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "scan: cannot open output path " << out_path << "\n";
        return 2;
    }
    if (format == "json")
        write_json(out, rows);
    else
        write_csv(out, rows);
    out.close();
    if (!out) {
        std::cerr << "scan: write failed for " << out_path << "\n";
        return 2;
    }
    std::cout << rows.size() << " rows written to " << out_path << "\n";
    auto counts = monogenic_counts(rows);
    long long total = 0;
    std::cout << "monogenic trinomials by group:\n";
    for (const auto& [label, count] : counts) {
        std::cout << "  " << label.to_string() << "  " << count << "\n";
        total += count;
    }
    std::cout << "  total " << total << "\n";
    return 0;
}

int run_verify(long long box, long prime_bound, int threads) {
    ScanOptions opts;
    opts.prime_bound = prime_bound;
    opts.threads = threads;
    std::vector<CheckResult> checks = verify_box(box, opts);
    bool all_ok = true;
    for (const CheckResult& c : checks) {
        std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
        all_ok = all_ok && c.ok;
    }
    return all_ok ? 0 : 1;
}

int run_oracle_check(long long box) {
    OracleCheckStats stats = oracle_check_box(box);
    std::cout << "trinomials checked: " << stats.trinomials << "\n"
              << "prime checks:       " << stats.prime_checks << "\n"
              << "mismatches:         " << stats.mismatches << "\n";
    if (stats.mismatches > 0) {
        std::cout << "first mismatch:     " << stats.first_mismatch << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monogenicity and Galois groups of x^12 + a x^6 + b"};
    app.require_subcommand(1);

    long long a = 0, b = 0;
    bool as_json = false;
    long prime_bound = 10000;
    int threads = 1;

    CLI::App* classify = app.add_subcommand("classify", "classify a single pair (a, b)");
    classify->add_option("--a", a, "coefficient a")->required();
    classify->add_option("--b", b, "coefficient b")->required();
    classify->add_flag("--json", as_json, "emit JSON instead of text");
    classify->add_option("--prime-bound", prime_bound, "Frobenius sampling bound");

    long long amin = 0, amax = 0, bmin = 0, bmax = 0;
    std::string out_path, format = "csv";
    CLI::App* scan = app.add_subcommand("scan", "classify every pair in a box");
    scan->add_option("--amin", amin)->required();
    scan->add_option("--amax", amax)->required();
    scan->add_option("--bmin", bmin)->required();
    scan->add_option("--bmax", bmax)->required();
    scan->add_option("--out", out_path, "output file")->required();
    scan->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("--prime-bound", prime_bound, "Frobenius sampling bound");
    scan->add_option("--threads", threads, "worker threads");

    long long box = 0;
    CLI::App* verify = app.add_subcommand("verify", "check the characterization theorems on a box");
    verify->add_option("--box", box, "|a|,|b| bound")->required();
    verify->add_option("--prime-bound", prime_bound, "Frobenius sampling bound");
    verify->add_option("--threads", threads, "worker threads");

    long long obox = 0;
    CLI::App* oracle = app.add_subcommand("oracle-check", "per-prime test vs Dedekind criterion");
    oracle->add_option("--box", obox, "|a|,|b| bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (classify->parsed()) return run_classify(a, b, as_json, prime_bound);
        if (scan->parsed()) return run_scan(amin, amax, bmin, bmax, out_path, format, prime_bound, threads);
        if (verify->parsed()) {
            if (box < 1) {
                std::cerr << "verify: box >= 1 required\n";
                return 2;
            }
            return run_verify(box, prime_bound, threads);
        }
        if (oracle->parsed()) {
            if (obox < 1) {
                std::cerr << "oracle-check: box >= 1 required\n";
                return 2;
            }
            return run_oracle_check(obox);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
