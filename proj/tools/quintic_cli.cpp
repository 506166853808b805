#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "quintic/app/commands.hpp"

namespace {

using namespace quintic::app;

struct GlobalFlags {
    std::string format = "json";
    double tol = 1e-12;
    int max_iter = 25;
    bool verify = false;
    unsigned jobs = 0;
    bool no_timing = false;
};

template <typename T>
void from_env(const char* name, T& value) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return;
    try {
        std::size_t used = 0;
        if constexpr (std::is_same_v<T, int>) {
            value = std::stoi(raw, &used);
        } else {
            value = std::stod(raw, &used);
        }
        if (raw[used] != '\0') throw std::invalid_argument(raw);
    } catch (const std::exception&) {
        throw UsageError(std::string("invalid value for ") + name + ": '" + raw + "'");
    }
}

quintic::Complex complex_flag(const std::string& text, const char* flag) {
    if (text.empty()) throw UsageError(std::string("missing ") + flag);
    return parse_complex(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radical and trigonometric solvers for the quintic"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    try {
        from_env("QUINTIC_TOL", g.tol);
        from_env("QUINTIC_MAX_ITER", g.max_iter);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    app.add_option("--format", g.format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
    app.add_option("--tol", g.tol, "Step tolerance of the radical iteration");
    app.add_option("--max-iter", g.max_iter, "Iteration cap of the radical iteration");
    app.add_flag("--verify", g.verify, "Cross-check against the polynomial oracle");
    app.add_option("--jobs", g.jobs, "Batch worker count (0 = all cores)");
    app.add_flag("--no-timing", g.no_timing, "Report timing_ms as 0");

    std::string form = "form1", method = "both", a, lambda, d1, d0;
    double xi = 0.0, theta = 0.0;
    auto* solve = app.add_subcommand("solve", "Solve one quintic");
    solve->add_option("--form", form, "bring-jerrard, form1, form2 or form3");
    solve->add_option("--method", method, "radical, trig or both");
    solve->add_option("--a", a, "Form 1 coefficient");
    solve->add_option("--lambda", lambda, "Form 2 right-hand side");
    solve->add_option("--xi", xi, "Form 3 modulus");
    solve->add_option("--theta", theta, "Form 3 angle in [0, pi/5]");
    solve->add_option("--d1", d1, "Bring-Jerrard linear coefficient");
    solve->add_option("--d0", d0, "Bring-Jerrard constant term");

    std::string input = "-";
    auto* batch = app.add_subcommand("batch", "Solve JSONL requests, one report per line");
    batch->add_option("input", input, "Input file, - for stdin");

    double demo_a = 0.01, demo_x0 = 0.0;
    int demo_steps = 14;
    auto* demo = app.add_subcommand("demo-divergence", "Compare the naive fixed point with the radical iteration");
    demo->add_option("--a", demo_a);
    demo->add_option("--x0", demo_x0);
    demo->add_option("--steps", demo_steps)->check(CLI::PositiveNumber);

    GridSpec grid;
    double point_xi = 0.0, point_theta = 0.0;
    auto* bounds = app.add_subcommand("verify-bounds", "Sweep a grid and check the error bounds");
    bounds->add_option("--xi-min", grid.xi_min);
    bounds->add_option("--xi-max", grid.xi_max);
    bounds->add_option("--xi-count", grid.xi_count);
    bounds->add_option("--theta-min", grid.theta_min);
    bounds->add_option("--theta-max", grid.theta_max);
    bounds->add_option("--theta-count", grid.theta_count);
    bounds->add_option("--a-min", grid.a_min);
    bounds->add_option("--a-max", grid.a_max);
    bounds->add_option("--a-count", grid.a_count);
    bounds->add_option("--arg-count", grid.arg_count);
    bounds->add_option("--contraction-floor", grid.contraction_floor);
    auto* opt_xi = bounds->add_option("--xi", point_xi, "Single Form 3 point (skips the Form 1 sweep)");
    auto* opt_theta = bounds->add_option("--theta", point_theta, "Angle of the single point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        const OutputFormat format = parse_format(g.format);
        const bool timing = !g.no_timing;

        SolveRequest defaults;
        defaults.tol = g.tol;
        defaults.max_iter = g.max_iter;
        defaults.verify = g.verify;

        if (*solve) {
            SolveRequest req = defaults;
            req.form = parse_form(form);
            req.method = parse_method(method);
            switch (req.form) {
            case Form::BringJerrard:
                req.d1 = complex_flag(d1, "--d1");
                req.d0 = complex_flag(d0, "--d0");
                break;
            case Form::Form1: req.a = complex_flag(a, "--a"); break;
            case Form::Form2: req.lambda = complex_flag(lambda, "--lambda"); break;
            case Form::Form3:
                req.xi = xi;
                req.theta = theta;
                break;
            }
            const SolveReport report = cmd_solve(req, {timing});
            switch (format) {
            case OutputFormat::Json: std::cout << to_json(report).dump(2) << '\n'; break;
            case OutputFormat::Text: std::cout << render_text(report); break;
            case OutputFormat::Csv: std::cout << render_csv(report); break;
            }
            return report.status == "ok" ? kExitOk : kExitSolver;
        }

        if (*batch) {
            const BatchSettings settings{defaults, g.jobs, timing};
            if (input == "-") return cmd_batch(std::cin, std::cout, settings);
            std::ifstream file(input);
            if (!file) throw UsageError("cannot open '" + input + "'");
            return cmd_batch(file, std::cout, settings);
        }

        if (*demo) {
            const DivergenceDemo result = cmd_demo_divergence(demo_a, demo_x0, demo_steps);
            if (format == OutputFormat::Json) {
                std::cout << to_json(result).dump(2) << '\n';
            } else {
                std::cout << render_text(result);
            }
            return kExitOk;
        }

        if (*opt_xi) {
            grid.xi_min = grid.xi_max = point_xi;
            grid.xi_count = 1;
            grid.theta_min = grid.theta_max = point_theta;
            grid.theta_count = 1;
            grid.a_count = 0;
        } else if (*opt_theta) {
            throw UsageError("--theta needs --xi");
        }
        if (grid.xi_count < 0 || grid.theta_count < 0 || grid.a_count < 0 || grid.arg_count < 0 ||
            !(grid.xi_min > 0.0) || grid.xi_max < grid.xi_min || grid.theta_min < 0.0 ||
            grid.theta_max > 0.62831853071795864769 || grid.theta_max < grid.theta_min ||
            (grid.a_count > 0 && (!(grid.a_min > 0.0) || grid.a_max < grid.a_min))) {
            throw UsageError("invalid grid ranges");
        }
        const BoundsSummary summary = cmd_verify_bounds(grid);
        if (format == OutputFormat::Json) {
            std::cout << to_json(summary).dump(2) << '\n';
        } else {
            std::cout << render_text(summary);
        }
        return summary.passed() ? kExitOk : kExitSolver;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolver;
    }
}
