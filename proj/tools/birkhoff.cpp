// Command-line front end: exact relative/true volumes of the Birkhoff
// polytope B_n and its faces by standard triangulation, Ehrhart
// polynomials by magic-square counting, Monte Carlo spot checks, the
// staircase-face Catalan conjecture, and the minimal-simplex census.
//
// Exit codes: 0 success, 2 usage error, 3 invalid face, 4 record budget
// exceeded, 5 internal consistency failure (--verify mismatch).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "birkhoff/ehrhart.hpp"
#include "birkhoff/monte_carlo.hpp"
#include "birkhoff/triangulate.hpp"
#include "birkhoff/young_faces.hpp"

using json = nlohmann::ordered_json;
using namespace birkhoff;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInvalidFace = 3;
constexpr int kExitBudget = 4;
constexpr int kExitConsistency = 5;

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

json lattice_stats_json(const FaceLattice& lat) {
    json levels = json::array();
    for (int d = lat.top_dimension; d >= 0; --d)
        levels.push_back(json{{"dim", d}, {"records", lat.levels[d].size()}});
    return levels;
}

json lattice_dump_json(const FaceLattice& lat) {
    json doc;
    doc["n"] = lat.n;
    json levels = json::array();
    for (int d = lat.top_dimension; d >= 0; --d) {
        json faces = json::array();
        for (const FaceRecord& rec : lat.levels[d]) {
            json parents = json::array();
            for (const auto& [idx, mult] : rec.parents)
                parents.push_back(json::array({idx, mult}));
            faces.push_back(json{{"bits", format_face(rec.face)}, {"parents", parents}});
        }
        levels.push_back(json{{"dim", d}, {"faces", faces}});
    }
    doc["levels"] = levels;
    return doc;
}

int report_budget(const budget_exceeded_error& e, bool as_json) {
    if (as_json) {
        json doc;
        doc["error"] = "budget-exceeded";
        doc["message"] = e.what();
        json levels = json::array();
        for (const auto& [dim, records] : e.partial_level_sizes)
            levels.push_back(json{{"dim", dim}, {"records", records}});
        doc["partial_levels"] = levels;
        emit(doc);
    } else {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "partial level statistics:\n";
        for (const auto& [dim, records] : e.partial_level_sizes)
            std::cerr << "  dim " << dim << ": " << records << " records\n";
    }
    return kExitBudget;
}

int run_volume_report(const BinaryMatrix& face, bool is_full_polytope, bool as_json, bool verify,
                      bool dump, const BuildOptions& opts, int threads) {
    FaceLattice lat = build_lattice(face, opts);
    BigInt relvol = accumulate_volume(lat);
    int dim = lat.top_dimension;

    if (dump) {
        emit(lattice_dump_json(lat));
        return 0;
    }

    int n = face.order();
    json doc;
    doc["n"] = n;
    doc["dimension"] = dim;
    doc["relative_volume"] = to_decimal(relvol);
    if (is_full_polytope) doc["true_volume"] = to_decimal(true_volume(n, relvol));
    doc["levels"] = lattice_stats_json(lat);
    doc["total_records"] = lat.total_records();
    doc["total_parent_pointers"] = lat.total_parent_pointers();

    bool verified = true;
    if (verify && is_full_polytope) {
        EhrhartPoly p = ehrhart_polynomial(n, threads);
        verified = p.coeffs.back() == relvol;
        doc["verify"] = json{{"method", "ehrhart-leading-coefficient"},
                             {"value", to_decimal(p.coeffs.back())},
                             {"match", verified}};
    }

    if (as_json) {
        emit(doc);
    } else {
        if (!is_full_polytope) std::cout << "dimension:        " << dim << "\n";
        std::cout << "relative volume:  " << to_decimal(relvol) << "\n";
        if (is_full_polytope)
            std::cout << "true volume:      " << to_decimal(true_volume(n, relvol)) << "\n";
        std::cout << "lattice records:  " << lat.total_records() << " ("
                  << lat.total_parent_pointers() << " parent pointers)\n";
        for (int d = lat.top_dimension; d >= 0; --d)
            std::cout << "  dim " << d << ": " << lat.levels[d].size() << " records\n";
        if (verify && is_full_polytope)
            std::cout << "cross-check (ehrhart leading coefficient): "
                      << (verified ? "match" : "MISMATCH") << "\n";
    }
    return verified ? 0 : kExitConsistency;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "birkhoff: exact volumes and Ehrhart polynomials of the polytope of doubly "
        "stochastic matrices"};
    app.require_subcommand(1);

    bool as_json = false;
    int threads = 1;
    app.add_flag("--json", as_json, "machine-readable JSON output");
    app.add_option("--threads", threads, "worker thread count")->check(CLI::PositiveNumber);

    int n = 0;
    int t = 0;
    std::uint64_t trials = 100000, seed = 1;
    int partitions = 0;
    std::string face_path;
    std::size_t memory_cap = std::size_t{1} << 28;
    bool verify = false, dump = false, exact_canonical = false;

    CLI::App* c_volume = app.add_subcommand("volume", "relative and true volume of B_n");
    c_volume->add_option("--n", n, "order (1..8)")->required()->check(CLI::Range(1, 8));
    c_volume->add_flag("--verify", verify, "cross-check against the Ehrhart leading coefficient");
    c_volume->add_option("--memory-cap", memory_cap, "lattice record budget");
    c_volume->add_flag("--dump-lattice", dump, "emit the face lattice as JSON and exit");
    c_volume->add_flag("--exact-canonical", exact_canonical,
                       "exact orbit canonicalization (n <= 6, slow)");

    CLI::App* c_face = app.add_subcommand("face-volume", "relative volume of a face from a file");
    c_face->add_option("--face", face_path, "face file (n lines of n chars, '0'/'1')")
        ->required();
    c_face->add_option("--memory-cap", memory_cap, "lattice record budget");
    c_face->add_flag("--dump-lattice", dump, "emit the face lattice as JSON and exit");

    CLI::App* c_ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial of B_n");
    c_ehrhart->add_option("--n", n, "order (1..8)")->required()->check(CLI::Range(1, 8));
    c_ehrhart->add_flag("--verify", verify,
                        "check reciprocity identities and the triangulation cross-check");

    CLI::App* c_magic = app.add_subcommand("magic-count",
                                           "number of n x n magic squares with line sum t");
    c_magic->add_option("--n", n, "order (1..8)")->required()->check(CLI::Range(1, 8));
    c_magic->add_option("--t", t, "line sum (>= 0)")->required()->check(CLI::NonNegativeNumber);

    CLI::App* c_mc = app.add_subcommand("montecarlo", "Monte Carlo estimate of vol(A_n)/vol(C_n)");
    c_mc->add_option("--n", n, "order (2..8)")->required()->check(CLI::Range(2, 8));
    c_mc->add_option("--trials", trials, "sample count")->check(CLI::PositiveNumber);
    c_mc->add_option("--seed", seed, "RNG seed");
    c_mc->add_option("--partitions", partitions,
                     "independent seed streams (default: thread count)");

    CLI::App* c_conj = app.add_subcommand("conjecture",
                                          "staircase-face volume vs the Catalan product");
    c_conj->add_option("--n", n, "order (2..8)")->required()->check(CLI::Range(2, 8));

    CLI::App* c_census = app.add_subcommand("census", "minimal-simplex census on B_n's vertices");
    c_census->add_option("--n", n, "order (4 only)")->required();

    // let --json / --threads appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (c_volume->parsed()) {
            BuildOptions opts;
            opts.memory_cap_records = memory_cap;
            opts.exact_canonical = exact_canonical;
            try {
                return run_volume_report(BinaryMatrix::ones(n), true, as_json, verify, dump, opts,
                                         threads);
            } catch (const budget_exceeded_error& e) {
                return report_budget(e, as_json);
            }
        }

        if (c_face->parsed()) {
            std::ifstream in(face_path);
            if (!in) {
                std::cerr << "error: cannot open " << face_path << "\n";
                return kExitUsage;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            BinaryMatrix parsed = BinaryMatrix::zero(1);
            try {
                parsed = parse_face(buf.str());
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitInvalidFace;
            }
            BinaryMatrix closed = face_closure(parsed);
            if (closed.is_zero()) {
                std::cerr << "error: " << face_path
                          << " contains no permutation matrix; not a face\n";
                return kExitInvalidFace;
            }
            if (closed != parsed)
                std::cerr << "warning: input is not a union of permutation matrices; "
                             "closed it first\n";
            BuildOptions opts;
            opts.memory_cap_records = memory_cap;
            try {
                return run_volume_report(closed, false, as_json, false, dump, opts, threads);
            } catch (const budget_exceeded_error& e) {
                return report_budget(e, as_json);
            }
        }

        if (c_ehrhart->parsed()) {
            EhrhartPoly p = ehrhart_polynomial(n, threads);
            json doc;
            doc["n"] = n;
            doc["basis"] = "C(t+n-1+k, n-1+2k)";
            json coeffs = json::array();
            for (const BigInt& c : p.coeffs) coeffs.push_back(to_decimal(c));
            doc["coeffs"] = coeffs;

            bool ok = true;
            if (verify) {
                // reciprocity: zeros at t = -1..-(n-1), and
                // e(-n-t) = (-1)^(n-1) e(t) on a window
                for (int tt = 1; tt < n && ok; ++tt)
                    ok = evaluate(p, BigInt(-tt)) == 0;
                int window = n * (n - 1) / 2;
                for (int tt = 0; tt <= window && ok; ++tt) {
                    BigInt lhs = evaluate(p, BigInt(-n - tt));
                    BigInt rhs = evaluate(p, BigInt(tt));
                    ok = lhs == (n % 2 == 1 ? rhs : -rhs);
                }
                json ver{{"identities", ok}};
                if (n <= 7) {
                    BigInt relvol = relative_volume(BinaryMatrix::ones(n));
                    bool cross = relvol == p.coeffs.back();
                    ver["triangulation"] = to_decimal(relvol);
                    ver["match"] = cross;
                    ok = ok && cross;
                } else {
                    ver["triangulation"] = "skipped (memory-infeasible at n=8)";
                }
                doc["verify"] = ver;
            }

            if (as_json) {
                emit(doc);
            } else {
                std::cout << "e(B_" << n << ",t) = ";
                for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
                    if (k) std::cout << " + ";
                    std::cout << to_decimal(p.coeffs[k]) << "*C(t+" << (n - 1 + k) << ","
                              << (n - 1 + 2 * k) << ")";
                }
                std::cout << "\n";
                if (verify)
                    std::cout << "verify: " << (ok ? "ok" : "MISMATCH") << "\n";
            }
            return ok ? 0 : kExitConsistency;
        }

        if (c_magic->parsed()) {
            BigInt count = magic_count(n, t, nullptr, threads);
            if (as_json)
                emit(json{{"n", n}, {"t", t}, {"count", to_decimal(count)}});
            else
                std::cout << to_decimal(count) << "\n";
            return 0;
        }

        if (c_mc->parsed()) {
            if (partitions <= 0) partitions = threads;
            SampleReport r = estimate_alpha(n, trials, seed, partitions, threads);
            json doc{{"n", r.n},           {"trials", r.trials},
                     {"hits", r.hits},     {"alpha_hat", r.alpha_hat},
                     {"stderr", r.stderr_est}, {"seed", r.seed}};
            std::string exact;
            if (n <= 6) {
                BigRational a = exact_alpha(n, relative_volume(BinaryMatrix::ones(n)));
                exact = to_decimal(a);
                doc["exact_alpha"] = exact;
                double expected_hits = a.convert_to<double>() * static_cast<double>(trials);
                if (expected_hits < 10.0)
                    std::cerr << "warning: expected hit count " << expected_hits
                              << " is below 10; increase --trials for a usable estimate\n";
            }
            doc["partitions"] = r.partitions;
            doc["rng"] = r.rng;
            if (as_json) {
                emit(doc);
            } else {
                std::cout << "alpha_hat = " << r.alpha_hat << " (" << r.hits << "/" << r.trials
                          << "), stderr " << r.stderr_est << ", seed " << r.seed << ", partitions "
                          << r.partitions << "\n";
                if (!exact.empty()) std::cout << "exact alpha = " << exact << "\n";
            }
            return 0;
        }

        if (c_conj->parsed()) {
            BigInt vol = relative_volume(staircase_face(n));
            BigInt prod = catalan_product(n);
            bool ok = vol == prod;
            if (as_json)
                emit(json{{"n", n},
                          {"volume", to_decimal(vol)},
                          {"catalan_product", to_decimal(prod)},
                          {"verified", ok}});
            else if (ok)
                std::cout << "verified: " << to_decimal(vol) << "\n";
            else
                std::cout << "MISMATCH: volume " << to_decimal(vol) << " vs product "
                          << to_decimal(prod) << "\n";
            return ok ? 0 : kExitConsistency;
        }

        if (c_census->parsed()) {
            SimplexCensus c = census_minimal_simplices(n);
            if (as_json)
                emit(json{{"n", n},
                          {"total", to_decimal(c.total)},
                          {"in_standard", to_decimal(c.in_standard)}});
            else
                std::cout << "minimal simplices: " << to_decimal(c.total)
                          << "\nin some standard triangulation: " << to_decimal(c.in_standard)
                          << "\n";
            return 0;
        }
    } catch (const invalid_face_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidFace;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
