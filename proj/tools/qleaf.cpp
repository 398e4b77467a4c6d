// Command-line front end: every subcommand prints one JSON report to stdout.
// Exit codes: 0 success, 2 bad input, 3 not representable, 4 internal check
// failure.

#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "qleaf/json_io.hpp"

namespace {

using namespace qleaf;

struct CommonOpts {
    std::string quiver_file;
    std::string group;
    std::string lambda_csv;
    std::string c_csv;
    std::string alpha_csv;
    std::string bound_csv;
    Int n = 0;
    bool pretty = false;
    bool timing = false;
};

void add_io_flags(CLI::App* cmd, CommonOpts& opt) {
    cmd->add_flag("--pretty", opt.pretty, "indent the JSON output");
    cmd->add_flag("--timing", opt.timing,
                  "append wall-clock timing (breaks byte-for-byte "
                  "reproducibility)");
}

// Resolved problem data shared by the quiver-based subcommands.
struct Problem {
    Quiver quiver{{"0"}, {}};
    std::optional<GammaData> gamma;
    std::optional<Parameter> lambda;
    std::optional<DimVector> alpha;
    json inputs = json::object();
};

Problem resolve(const CommonOpts& opt, bool need_lambda, bool need_alpha) {
    Problem pr;
    if (opt.quiver_file.empty() == opt.group.empty())
        throw input_error("give exactly one of a quiver file or --group");
    if (!opt.c_csv.empty() && opt.group.empty())
        throw input_error("--c requires --group");
    if (!opt.c_csv.empty() && !opt.lambda_csv.empty())
        throw input_error("give at most one of --lambda and --c");
    if (!opt.c_csv.empty() && opt.n <= 0)
        throw input_error("--c requires --n (the parameter depends on it)");

    if (!opt.group.empty()) {
        pr.gamma = gamma_data_named(opt.group);
        pr.quiver = frame(*pr.gamma);
        pr.inputs["group"] = opt.group;
    } else {
        pr.quiver = quiver_from_json(load_json_file(opt.quiver_file));
        pr.inputs["quiver_file"] = opt.quiver_file;
    }
    const auto nv = pr.quiver.vertex_count();

    if (!opt.c_csv.empty()) {
        auto tokens_needed =
            static_cast<Eigen::Index>(pr.gamma->classes.size());  // c1 + rest
        Parameter c_values = parameter_from_csv(opt.c_csv, tokens_needed);
        CParam c;
        c.c1 = c_values[0].to_rational();
        for (Eigen::Index i = 1; i < tokens_needed; ++i)
            c.c_class.push_back(c_values[i]);
        pr.lambda = lambda_prime(*pr.gamma, lambda_of_c(*pr.gamma, c), opt.n);
        pr.inputs["c"] = opt.c_csv;
    } else if (!opt.lambda_csv.empty()) {
        pr.lambda = parameter_from_csv(opt.lambda_csv, nv);
        pr.inputs["lambda"] = opt.lambda_csv;
    }
    if (need_lambda && !pr.lambda)
        throw input_error("this command needs --lambda or --c");

    if (!opt.alpha_csv.empty() && opt.n > 0)
        throw input_error("give at most one of --alpha and --n");
    if (!opt.alpha_csv.empty()) {
        pr.alpha = dim_vector_from_csv(opt.alpha_csv, nv);
        pr.inputs["alpha"] = opt.alpha_csv;
    } else if (opt.n > 0) {
        if (!pr.gamma) throw input_error("--n requires --group");
        pr.alpha = cm_dim_vector(*pr.gamma, opt.n);
        pr.inputs["n"] = opt.n;
    }
    if (need_alpha && !pr.alpha)
        throw input_error("this command needs --alpha or --n");
    return pr;
}

DimVector resolve_bound(const CommonOpts& opt, const Problem& pr) {
    if (!opt.bound_csv.empty())
        return dim_vector_from_csv(opt.bound_csv, pr.quiver.vertex_count());
    if (pr.alpha) return *pr.alpha;
    throw input_error("this command needs --bound (or --alpha/--n)");
}

int emit(json report, const CommonOpts& opt,
         std::chrono::steady_clock::time_point started) {
    if (opt.timing) {
        auto elapsed = std::chrono::steady_clock::now() - started;
        report["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
                .count();
    }
    std::cout << report.dump(opt.pretty ? 2 : -1) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact root-system combinatorics for quiver moment-map reductions"};
    app.require_subcommand(1);

    CommonOpts opt;
    std::string rep_file;

    auto add_common = [&](CLI::App* cmd, bool with_alpha) {
        cmd->add_option("quiver", opt.quiver_file, "quiver JSON file");
        cmd->add_option("--group", opt.group,
                        "built-in group: cyclic:l, bindihedral:l, bintetra, "
                        "binocta, binicosa (uses the framed McKay quiver)");
        cmd->add_option("--lambda", opt.lambda_csv,
                        "parameter, comma separated (rationals or "
                        "[c0,c1,...]@N)");
        cmd->add_option("--c", opt.c_csv,
                        "reflection weights c1,c_class... (with --group)");
        if (with_alpha) {
            cmd->add_option("--alpha", opt.alpha_csv,
                            "dimension vector, comma separated");
            cmd->add_option("--n", opt.n,
                            "use the framed vector with n copies of delta");
        }
        cmd->add_option("--bound", opt.bound_csv,
                        "enumeration box cap (defaults to alpha)");
        add_io_flags(cmd, opt);
    };

    auto* cmd_roots = app.add_subcommand(
        "roots", "positive roots inside a box, classified");
    add_common(cmd_roots, true);

    auto* cmd_sigma = app.add_subcommand(
        "sigma", "simple dimension vectors inside a box");
    add_common(cmd_sigma, true);

    auto* cmd_decompose = app.add_subcommand(
        "decompose", "all decompositions of alpha plus the canonical one");
    add_common(cmd_decompose, true);

    auto* cmd_smooth = app.add_subcommand(
        "smooth", "smoothness of the reduction at (lambda, alpha)");
    add_common(cmd_smooth, true);

    auto* cmd_leaves = app.add_subcommand(
        "leaves", "symplectic leaves with dimensions");
    add_common(cmd_leaves, true);

    auto* cmd_mckay = app.add_subcommand(
        "mckay-info", "conjugacy classes, character table and McKay quiver");
    cmd_mckay->add_option("--group", opt.group, "group name")->required();
    add_io_flags(cmd_mckay, opt);

    auto* cmd_check = app.add_subcommand(
        "check-rep", "evaluate the moment map on explicit matrices");
    cmd_check->add_option("rep", rep_file, "representation JSON file")
        ->required();
    cmd_check->add_option("--lambda", opt.lambda_csv,
                          "rational parameter, comma separated")
        ->required();
    add_io_flags(cmd_check, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        if (cmd_roots->parsed()) {
            Problem pr = resolve(opt, false, false);
            DimVector bound = resolve_bound(opt, pr);
            return emit(roots_report(pr.quiver, bound, pr.lambda, pr.inputs),
                        opt, started);
        }
        if (cmd_sigma->parsed()) {
            Problem pr = resolve(opt, true, false);
            DimVector bound = resolve_bound(opt, pr);
            return emit(sigma_report(pr.quiver, *pr.lambda, bound, pr.inputs),
                        opt, started);
        }
        if (cmd_decompose->parsed()) {
            Problem pr = resolve(opt, true, true);
            DimVector bound = resolve_bound(opt, pr);
            return emit(decompose_report(pr.quiver, *pr.lambda, *pr.alpha,
                                         bound, pr.inputs),
                        opt, started);
        }
        if (cmd_smooth->parsed()) {
            Problem pr = resolve(opt, true, true);
            DimVector bound = resolve_bound(opt, pr);
            return emit(smooth_report(pr.quiver, *pr.lambda, *pr.alpha, bound,
                                      pr.inputs),
                        opt, started);
        }
        if (cmd_leaves->parsed()) {
            Problem pr = resolve(opt, true, true);
            DimVector bound = resolve_bound(opt, pr);
            return emit(leaves_report(pr.quiver, *pr.lambda, *pr.alpha, bound,
                                      pr.inputs),
                        opt, started);
        }
        if (cmd_mckay->parsed()) {
            GammaData g = gamma_data_named(opt.group);
            return emit(
                mckay_info_report(g, json{{"group", opt.group}}), opt,
                started);
        }
        if (cmd_check->parsed()) {
            Representation r =
                representation_from_json(load_json_file(rep_file));
            Parameter lam = parameter_from_csv(
                opt.lambda_csv, r.doubled().vertex_count());
            json inputs{{"rep_file", rep_file}, {"lambda", opt.lambda_csv}};
            return emit(check_rep_report(r, lam, inputs), opt, started);
        }
        throw input_error("no subcommand given");
    } catch (const not_representable_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
