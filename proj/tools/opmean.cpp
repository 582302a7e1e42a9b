// Command-line front end: mean evaluation, order classification, curve
// sampling, property-suite verification, and test-pair generation.
//
// Exit codes: 0 success (order: relation holds / verify: suite clean),
// 1 relation absent or suite not clean, 2 usage or input error,
// 3 numerical failure.

#include <cmath>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opmean/gen.hpp"
#include "opmean/linalg.hpp"
#include "opmean/matrix_io.hpp"
#include "opmean/means.hpp"
#include "opmean/orders.hpp"
#include "opmean/verify.hpp"

namespace {

using namespace opmean;

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

Matrix load(const std::string& path) { return read_matrix_file(path); }

int cmd_mean(const std::string& kind, const std::string& a_path,
             const std::string& b_path, double t, const std::string& out) {
    const Matrix a = load(a_path);
    const Matrix b = load(b_path);
    const Matrix m = mean(parse_mean_kind(kind), a, b, t);
    if (out.empty())
        std::cout << to_matrix_document(m);
    else
        write_matrix_file(out, m);
    return 0;
}

int cmd_order(const std::string& a_path, const std::string& b_path,
              const std::string& relation, double tol_abs, double tol_rel) {
    const Matrix a = load(a_path);
    const Matrix b = load(b_path);
    const Tolerance tol{tol_abs, tol_rel};

    if (relation == "classify") {
        const Classification c = classify(a, b, tol);
        std::cout << "strongest: " << to_string(c.strongest) << "\n";
        if (c.capped_by_indeterminate)
            std::cout << "note: ascent stopped at an indeterminate relation\n";
        auto line = [](const char* name, const OrderVerdict& v) {
            std::cout << name << ": " << to_string(v.verdict)
                      << " margin=" << fmt(v.margin);
            if (v.witness >= 0) std::cout << " witness=" << v.witness;
            std::cout << "\n";
        };
        line("loewner", c.loewner);
        line("near", c.near);
        line("eig-entrywise", c.eig_entrywise);
        line("weak-log-majorization", c.weak_log);
        return c.strongest == OrderRelationKind::NoRelation ? 1 : 0;
    }

    OrderVerdict v;
    if (relation == "loewner")
        v = loewner_cmp(a, b, tol);
    else if (relation == "near")
        v = near_cmp(a, b, tol);
    else if (relation == "eig-entrywise")
        v = eig_entrywise_cmp(a, b, tol);
    else if (relation == "weak-log-majorization")
        v = weak_log_majorize_cmp(a, b, tol);
    else if (relation == "log-majorization")
        v = log_majorize_cmp(a, b, tol);
    else
        throw InvalidInput("unknown relation: " + relation);

    std::cout << to_string(v.verdict) << " margin=" << fmt(v.margin);
    if (v.witness >= 0) std::cout << " witness=" << v.witness;
    std::cout << "\n";
    return v.verdict == Verdict::holds ? 0 : 1;
}

int cmd_curve(const std::string& kind, const std::string& a_path,
              const std::string& b_path, double t_start, double t_end, int steps) {
    if (steps < 2) throw InvalidInput("curve requires at least 2 steps");
    const Matrix a = load(a_path);
    const Matrix b = load(b_path);
    std::vector<double> grid(static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i)
        grid[static_cast<size_t>(i)] =
            t_start + (t_end - t_start) * i / (steps - 1);
    const auto samples = sample_curve(parse_mean_kind(kind), a, b, grid);

    std::cout << "t";
    for (int i = 1; i <= a.dim(); ++i) std::cout << ",lambda_" << i;
    std::cout << ",det,near_vs_prev\n";
    for (size_t i = 0; i < samples.size(); ++i) {
        std::cout << fmt(samples[i].t);
        for (double lam : samples[i].eigenvalues) std::cout << ',' << fmt(lam);
        std::cout << ',' << fmt(samples[i].determinant) << ',';
        if (i == 0)
            std::cout << "n/a";
        else
            std::cout << to_string(
                near_cmp(samples[i - 1].value, samples[i].value).verdict);
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, int trials, uint64_t seed, int n,
               double kappa, bool serial, bool quiet) {
    SuiteConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.n = n;
    cfg.kappa = kappa;
    const auto reports = run_suite(suite, cfg, !serial);
    if (!quiet)
        for (const auto& r : reports) std::cout << r.to_line() << "\n";
    const SuiteSummary s = summarize(reports);
    std::cout << "summary: total=" << s.total << " holds=" << s.holds
              << " fails=" << s.fails << " indeterminate=" << s.indeterminate
              << " skipped=" << s.skipped << " sub-checks=" << s.sub_checks
              << " sub-indeterminate=" << s.sub_indeterminate << "\n";
    return s.fails == 0 ? 0 : 1;
}

int cmd_gen(const std::string& structure, int n, double kappa, uint64_t seed,
            double gap, const std::string& ordered, const std::string& out_a,
            const std::string& out_b) {
    GenSpec spec;
    spec.n = n;
    spec.kappa = kappa;
    spec.seed = seed;
    if (structure == "generic")
        spec.structure = GenStructure::generic;
    else if (structure == "commuting")
        spec.structure = GenStructure::commuting;
    else if (structure == "diagonal")
        spec.structure = GenStructure::diagonal;
    else
        throw InvalidInput("unknown structure: " + structure);
    spec.validate();

    Matrix a(1), b(1);
    if (ordered == "none") {
        a = random_spd(spec);
        GenSpec spec2 = spec;
        spec2.seed = SplitMix64::mix(seed, 1);
        b = random_spd(spec2);
    } else if (ordered == "near") {
        std::tie(a, b) = near_ordered_pair(spec, gap);
    } else if (ordered == "loewner") {
        std::tie(a, b) = loewner_ordered_pair(spec, gap);
    } else if (ordered == "commuting") {
        std::tie(a, b) = commuting_pair(spec);
    } else {
        throw InvalidInput("unknown ordering: " + ordered);
    }
    write_matrix_file(out_a, a);
    write_matrix_file(out_b, b);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"operator means on symmetric positive definite matrices"};
    app.require_subcommand(1);

    std::string kind = "wasserstein", a_path, b_path, out_path;
    double t = 0.5;

    auto* mean_cmd = app.add_subcommand("mean", "evaluate a two-parameter mean");
    mean_cmd->add_option("--kind", kind, "mean family")->capture_default_str();
    mean_cmd->add_option("--a", a_path, "first matrix (JSON)")->required();
    mean_cmd->add_option("--b", b_path, "second matrix (JSON)")->required();
    mean_cmd->add_option("--t", t, "curve parameter")->capture_default_str();
    mean_cmd->add_option("--out", out_path, "output file (default: stdout)");

    std::string relation = "classify";
    double tol_abs = 1e-9, tol_rel = 1e-12;
    auto* order_cmd = app.add_subcommand("order", "test or classify an order relation");
    order_cmd->add_option("--a", a_path, "first matrix (JSON)")->required();
    order_cmd->add_option("--b", b_path, "second matrix (JSON)")->required();
    order_cmd
        ->add_option("--relation", relation,
                     "loewner|near|eig-entrywise|weak-log-majorization|"
                     "log-majorization|classify")
        ->capture_default_str();
    order_cmd->add_option("--tol-abs", tol_abs)->capture_default_str();
    order_cmd->add_option("--tol-rel", tol_rel)->capture_default_str();

    double t_start = 0.0, t_end = 1.0;
    int steps = 11;
    auto* curve_cmd = app.add_subcommand("curve", "sample a mean curve as CSV");
    curve_cmd->add_option("--kind", kind, "mean family")->capture_default_str();
    curve_cmd->add_option("--a", a_path, "first matrix (JSON)")->required();
    curve_cmd->add_option("--b", b_path, "second matrix (JSON)")->required();
    curve_cmd->add_option("--t-start", t_start)->capture_default_str();
    curve_cmd->add_option("--t-end", t_end)->capture_default_str();
    curve_cmd->add_option("--steps", steps)->capture_default_str();

    std::string suite = "all";
    int trials = 200, n = 3;
    double kappa = 100.0;
    uint64_t seed = 1;
    bool serial = false, quiet = false;
    auto* verify_cmd = app.add_subcommand("verify", "run property-check suites");
    verify_cmd->add_option("--suite", suite, "suite name or 'all'")
        ->capture_default_str();
    verify_cmd->add_option("--trials", trials)->capture_default_str();
    verify_cmd->add_option("--seed", seed)->capture_default_str();
    verify_cmd->add_option("--n", n)->capture_default_str();
    verify_cmd->add_option("--kappa", kappa)->capture_default_str();
    verify_cmd->add_flag("--serial", serial, "use the serial reference runner");
    verify_cmd->add_flag("--quiet", quiet, "print the summary line only");

    std::string structure = "generic", ordered = "none";
    std::string out_a = "a.json", out_b = "b.json";
    double gap = 0.1;
    auto* gen_cmd = app.add_subcommand("gen", "generate seeded test matrices");
    gen_cmd->add_option("--structure", structure, "generic|commuting|diagonal")
        ->capture_default_str();
    gen_cmd->add_option("--n", n)->capture_default_str();
    gen_cmd->add_option("--kappa", kappa)->capture_default_str();
    gen_cmd->add_option("--seed", seed)->capture_default_str();
    gen_cmd->add_option("--gap", gap, "order margin for constructed pairs")
        ->capture_default_str();
    gen_cmd->add_option("--ordered", ordered, "none|near|loewner|commuting")
        ->capture_default_str();
    gen_cmd->add_option("--out-a", out_a)->capture_default_str();
    gen_cmd->add_option("--out-b", out_b)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (mean_cmd->parsed()) return cmd_mean(kind, a_path, b_path, t, out_path);
        if (order_cmd->parsed())
            return cmd_order(a_path, b_path, relation, tol_abs, tol_rel);
        if (curve_cmd->parsed())
            return cmd_curve(kind, a_path, b_path, t_start, t_end, steps);
        if (verify_cmd->parsed())
            return cmd_verify(suite, trials, seed, n, kappa, serial, quiet);
        if (gen_cmd->parsed())
            return cmd_gen(structure, n, kappa, seed, gap, ordered, out_a, out_b);
    } catch (const opmean::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const opmean::NotPositiveDefinite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const opmean::NumericalFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
