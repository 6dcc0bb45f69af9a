// tau-engine: validate moduli files, evaluate the invariants, compose
// and reverse snapshots, fuzz perturbation moves, enumerate Brieskorn
// moduli numerically, and regress tau against the closed-form table.
//
// Exit codes: 0 success/pass, 1 validation failure (or bad input),
// 2 regression mismatch, 3 solver non-convergence.

#include "casson/composition.hpp"
#include "casson/invariants.hpp"
#include "casson/moduli.hpp"
#include "casson/moduli_builder.hpp"
#include "casson/moduli_json.hpp"
#include "casson/moves.hpp"
#include "casson/seifert.hpp"
#include "casson/su2_enumeration.hpp"
#include "casson/su3_solver.hpp"
#include "casson/tau_table.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitRegression = 2;
constexpr int kExitSolver = 3;

// diagnostics go to stderr so stdout stays pipeable
void print_violation(const char* severity, const casson::Violation& v) {
    std::cerr << severity << ": " << v.rule << " at " << v.record << ": " << v.detail << "\n";
}

int load_checked(const std::string& path, casson::ModuliData& out) {
    try {
        out = casson::load_moduli_file(path);
    } catch (const casson::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    casson::ValidationReport rep = casson::validate(out);
    for (const auto& w : rep.warnings)
        print_violation("warning", w);
    if (!rep.ok()) {
        for (const auto& v : rep.errors)
            print_violation("error", v);
        return kExitValidation;
    }
    return kExitOk;
}

void print_invariants(const std::string& label, const casson::ModuliData& m) {
    std::cout << label << "lambda_prime = " << casson::lambda_prime(m) << "\n"
              << label << "tau_correction = " << casson::tau_correction(m) << "\n"
              << label << "tau = " << casson::tau(m) << "\n"
              << label << "lambda_double_prime = " << casson::lambda_double_prime(m).str() << "\n"
              << label << "lambda_su3 = " << casson::lambda_su3(m).str() << "\n"
              << label << "lambda_su2 = " << casson::lambda_su2(m) << "\n";
}

casson::json census_to_json(const casson::Su3Census& census, int restarts) {
    casson::json j;
    j["seifert"]["a"] = census.presentation.a;
    j["seifert"]["b0"] = census.presentation.b0;
    j["seifert"]["b"] = census.presentation.b;
    j["assignments"] = census.assignment_count;
    j["restarts_per_assignment"] = restarts;
    j["counts"]["irreducible"] = census.irreducible.size();
    j["counts"]["reducible_nonabelian"] = census.reducible_nonabelian.size();
    j["counts"]["abelian_discarded"] = census.abelian_clusters;
    auto clusters_json = [](const std::vector<casson::RepCluster>& list) {
        casson::json arr = casson::json::array();
        for (const auto& cl : list) {
            casson::json e;
            e["character_key"] = casson::character_key(cl.character);
            casson::json chi = casson::json::array();
            for (const auto& c : cl.character)
                chi.push_back({c.real(), c.imag()});
            e["character"] = std::move(chi);
            e["residual"] = cl.residual;
            e["commutant_dim"] = cl.commutant_dim;
            e["multiplicity"] = cl.multiplicity;
            e["spread"] = cl.spread;
            arr.push_back(std::move(e));
        }
        return arr;
    };
    j["clusters"]["irreducible"] = clusters_json(census.irreducible);
    j["clusters"]["reducible_nonabelian"] = clusters_json(census.reducible_nonabelian);
    j["diagnostics"]["restarts"] = census.diagnostics.restarts;
    j["diagnostics"]["converged"] = census.diagnostics.converged;
    j["diagnostics"]["stalled"] = census.diagnostics.stalled;
    j["diagnostics"]["near_misses"] = census.diagnostics.near_misses;
    j["diagnostics"]["worst_accepted_residual"] = census.diagnostics.worst_accepted_residual;
    j["errors"] = census.errors;
    return j;
}

bool solver_trouble(const casson::Su3Census& census) {
    return !census.errors.empty() || census.diagnostics.near_misses > 0;
}

std::optional<casson::SignOracle> load_sign_oracle(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: " << path << ": cannot open sign-oracle file\n";
        return std::nullopt;
    }
    casson::SignOracle oracle;
    try {
        casson::json j = casson::json::parse(in);
        if (!j.is_object())
            throw casson::ParseError("sign oracle must be a JSON object");
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!it.value().is_number_integer() && !it.value().is_number_unsigned())
                throw casson::ParseError("sign oracle values must be integers");
            oracle.sf_by_character[it.key()] = it.value().get<std::int64_t>();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        return std::nullopt;
    }
    return oracle;
}

int run_validate(const std::string& file) {
    casson::ModuliData m;
    int rc = load_checked(file, m);
    if (rc != kExitOk) return rc;
    std::cout << "valid: " << m.components.size() << " components, " << m.reducible_orbits.size()
              << " reducible orbits, " << m.irreducible_orbits.size() << " irreducible orbits\n";
    return kExitOk;
}

int run_invariants(const std::string& file) {
    casson::ModuliData m;
    int rc = load_checked(file, m);
    if (rc != kExitOk) return rc;
    print_invariants("", m);
    return kExitOk;
}

int run_sum(const std::string& file1, const std::string& file2, const std::string& out) {
    casson::ModuliData m1, m2;
    int rc = load_checked(file1, m1);
    if (rc != kExitOk) return rc;
    rc = load_checked(file2, m2);
    if (rc != kExitOk) return rc;

    casson::ModuliData sum = casson::connected_sum_reducible(m1, m2);
    std::int64_t t1 = casson::tau(m1), t2 = casson::tau(m2);
    std::int64_t l1 = casson::lambda_su2(m1), l2 = casson::lambda_su2(m2);
    std::cout << "tau(first) = " << t1 << "\n"
              << "tau(second) = " << t2 << "\n"
              << "lambda_su2(first) = " << l1 << "\n"
              << "lambda_su2(second) = " << l2 << "\n"
              << "tau(sum) = " << casson::tau_connected_sum(t1, t2, l1, l2) << "\n";
    bool additivity = casson::correction_additivity_check(m1, m2);
    std::cout << "correction additivity: " << (additivity ? "pass" : "FAIL") << "\n";
    std::cout << "composed reducible stratum: " << sum.components.size() << " components, "
              << sum.reducible_orbits.size() << " orbits\n";
    if (!out.empty())
        casson::save_moduli_file(out, sum);
    return additivity ? kExitOk : kExitValidation;
}

int run_reverse(const std::string& file, const std::string& out) {
    casson::ModuliData m;
    int rc = load_checked(file, m);
    if (rc != kExitOk) return rc;
    casson::ModuliData rev = casson::orientation_reverse(m);
    if (out.empty())
        std::cout << casson::serialize_moduli(rev);
    else
        casson::save_moduli_file(out, rev);
    return kExitOk;
}

int run_fuzz(const std::string& file, std::uint64_t seed, std::uint64_t steps, const std::string& out) {
    casson::ModuliData m;
    int rc = load_checked(file, m);
    if (rc != kExitOk) return rc;

    casson::ModuliData walked = casson::random_walk(m, seed, steps);
    casson::ValidationReport rep = casson::validate(walked);
    if (!rep.ok()) {
        for (const auto& v : rep.errors)
            print_violation("error", v);
        return kExitValidation;
    }

    print_invariants("before: ", m);
    print_invariants("after:  ", walked);
    bool ok = casson::tau(m) == casson::tau(walked) &&
              casson::lambda_su3(m) == casson::lambda_su3(walked) &&
              casson::lambda_su2(m) == casson::lambda_su2(walked) &&
              casson::signed_alpha_sum(m) == casson::signed_alpha_sum(walked);
    std::cout << "invariants preserved over " << steps << " moves: " << (ok ? "yes" : "NO") << "\n";
    if (!out.empty())
        casson::save_moduli_file(out, walked);
    return ok ? kExitOk : kExitValidation;
}

int run_enumerate(const std::vector<std::int64_t>& a, int restarts, std::uint64_t seed,
                  const std::string& oracle_path, const std::string& out,
                  const std::string& census_path, int threads) {
    casson::SignOracle oracle;
    if (!oracle_path.empty()) {
        auto loaded = load_sign_oracle(oracle_path);
        if (!loaded) return kExitValidation;
        oracle = std::move(*loaded);
    }

    casson::SeifertPresentation pres;
    try {
        pres = casson::seifert_presentation(a[0], a[1], a[2]);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    casson::SolverConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = seed;
    cfg.threads = threads;
    casson::Su3Census census = casson::enumerate_su3(pres, cfg);

    casson::json report = census_to_json(census, restarts);
    std::cout << report.dump(2) << "\n";
    if (!census_path.empty())
        casson::write_file_atomic(census_path, report.dump(2) + "\n");

    if (solver_trouble(census)) {
        std::cerr << "error: solver non-convergence or ambiguous clusters; moduli not written\n";
        return kExitSolver;
    }

    casson::ModuliData m;
    try {
        m = casson::moduli_from_enumeration(census, oracle);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    casson::save_moduli_file(out, m);
    return kExitOk;
}

int run_regress(const std::string& family, std::int64_t k_max, int restarts, std::uint64_t seed,
                int threads) {
    auto comma = family.find(',');
    std::int64_t first = 0, p = 0;
    try {
        if (comma == std::string::npos) throw std::invalid_argument("");
        first = std::stoll(family.substr(0, comma));
        p = std::stoll(family.substr(comma + 1));
    } catch (const std::exception&) {
        std::cerr << "error: --family expects \"2,P\" with P in {3,5,7,9}\n";
        return kExitValidation;
    }
    if (first != 2 || (p != 3 && p != 5 && p != 7 && p != 9)) {
        std::cerr << "error: --family expects \"2,P\" with P in {3,5,7,9}\n";
        return kExitValidation;
    }
    if (k_max < 1) {
        std::cerr << "error: --k-max must be >= 1\n";
        return kExitValidation;
    }

    std::vector<std::int64_t> residues;
    if (p == 3) residues = {1};
    else if (p == 5) residues = {1, 3};
    else if (p == 7) residues = {1, 3, 5};
    else residues = {1, 5, 7};

    bool mismatch = false, trouble = false;
    for (std::int64_t k = 1; k <= k_max; ++k) {
        for (std::int64_t r : residues) {
            for (int sign : {-1, +1}) {
                std::int64_t q = 2 * p * k + sign * r;
                casson::SeifertPresentation pres = casson::seifert_presentation(2, p, q);
                casson::SolverConfig cfg;
                cfg.restarts = restarts;
                cfg.seed = seed;
                cfg.threads = threads;
                casson::Su3Census census = casson::enumerate_su3(pres, cfg);
                std::int64_t expected = casson::tau_table(p, q);
                std::string row = "Sigma(2," + std::to_string(p) + "," + std::to_string(q) + ")";
                if (solver_trouble(census)) {
                    trouble = true;
                    std::cout << row << " SOLVER TROUBLE\n"
                              << census_to_json(census, restarts).dump(2) << "\n";
                    continue;
                }
                casson::ModuliData m = casson::moduli_from_enumeration(census);
                std::int64_t got = casson::tau(m);
                bool pass = got == expected;
                std::cout << row << " tau = " << got << " table = " << expected << " "
                          << (pass ? "PASS" : "FAIL") << "\n";
                if (!pass) {
                    mismatch = true;
                    std::cout << "sign hypothesis (uniform positive) may not hold; full census:\n"
                              << census_to_json(census, restarts).dump(2) << "\n";
                }
            }
        }
    }
    if (trouble) return kExitSolver;
    return mismatch ? kExitRegression : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"integer-valued su(3) invariant engine for moduli snapshots"};
    app.require_subcommand(1);

    std::string file, file2, out, census_path, oracle_path, seifert_arg, family;
    std::uint64_t seed = 1, steps = 0;
    std::int64_t k_max = 1;
    int restarts = 200, threads = 0;

    CLI::App* c_validate = app.add_subcommand("validate", "check a moduli file against the data invariants");
    c_validate->add_option("file", file, "moduli JSON file")->required();

    CLI::App* c_invariants = app.add_subcommand("invariants", "print all invariant values of a moduli file");
    c_invariants->add_option("file", file, "moduli JSON file")->required();

    CLI::App* c_sum = app.add_subcommand("sum", "connected-sum composition of two moduli files");
    c_sum->add_option("first", file, "first moduli JSON file")->required();
    c_sum->add_option("second", file2, "second moduli JSON file")->required();
    c_sum->add_option("--out", out, "write the composed reducible data here");

    CLI::App* c_reverse = app.add_subcommand("reverse", "orientation-reverse a moduli file");
    c_reverse->add_option("file", file, "moduli JSON file")->required();
    c_reverse->add_option("--out", out, "output file (stdout if omitted)");

    CLI::App* c_fuzz = app.add_subcommand("fuzz", "random perturbation-move walk; reports invariants");
    c_fuzz->add_option("file", file, "moduli JSON file");
    c_fuzz->add_option("--input", file, "moduli JSON file (alternative to the positional)");
    c_fuzz->add_option("--seed", seed, "walk seed")->required();
    c_fuzz->add_option("--steps", steps, "number of moves")->required();
    c_fuzz->add_option("--out", out, "write the walked snapshot here");

    CLI::App* c_enum = app.add_subcommand("enumerate", "numerically enumerate flat moduli of Sigma(a1,a2,a3)");
    c_enum->add_option("--seifert", seifert_arg, "A1,A2,A3 pairwise coprime, >= 2")->required();
    c_enum->add_option("--restarts", restarts, "descent restarts per assignment (default 200)");
    c_enum->add_option("--seed", seed, "master seed (default 1)");
    c_enum->add_option("--sign-oracle", oracle_path, "JSON map: character key -> sf_theta");
    c_enum->add_option("--out", out, "moduli output file")->required();
    c_enum->add_option("--census", census_path, "also write the census report here");
    c_enum->add_option("--threads", threads, "solver threads (default: hardware, capped by TAU_ENGINE_THREADS)");

    CLI::App* c_regress = app.add_subcommand("regress", "compare enumerated tau against the table families");
    c_regress->add_option("--family", family, "2,P with P in {3,5,7,9}")->required();
    c_regress->add_option("--k-max", k_max, "largest k to test")->required();
    c_regress->add_option("--restarts", restarts, "descent restarts per assignment (default 200)");
    c_regress->add_option("--seed", seed, "master seed (default 1)");
    c_regress->add_option("--threads", threads, "solver threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (app.got_subcommand(c_validate)) return run_validate(file);
        if (app.got_subcommand(c_invariants)) return run_invariants(file);
        if (app.got_subcommand(c_sum)) return run_sum(file, file2, out);
        if (app.got_subcommand(c_reverse)) return run_reverse(file, out);
        if (app.got_subcommand(c_fuzz)) {
            if (file.empty()) {
                std::cerr << "error: fuzz needs an input file\n";
                return kExitValidation;
            }
            return run_fuzz(file, seed, steps, out);
        }
        if (app.got_subcommand(c_enum)) {
            std::vector<std::int64_t> a;
            std::string piece;
            std::stringstream ss(seifert_arg);
            while (std::getline(ss, piece, ','))
                a.push_back(std::stoll(piece));
            if (a.size() != 3) {
                std::cerr << "error: --seifert expects three comma-separated integers\n";
                return kExitValidation;
            }
            return run_enumerate(a, restarts, seed, oracle_path, out, census_path, threads);
        }
        if (app.got_subcommand(c_regress)) return run_regress(family, k_max, restarts, seed, threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
