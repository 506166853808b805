#include "quintic/app/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <iterator>
#include <numbers>
#include <thread>
#include <variant>

#include <fmt/format.h>

#include "quintic/errors.hpp"
#include "quintic/oracle.hpp"
#include "quintic/radical_solver.hpp"
#include "quintic/trig_solver.hpp"

namespace quintic::app {

namespace {

constexpr double kOracleMatchTolerance = 1e-8;

std::string describe(const SolverError& e) {
    return std::string(to_string(e.kind())) + ": " + e.what();
}

void record_error(SolveReport& report, const std::string& message) {
    report.status = "error";
    if (!report.error) report.error = message;
}

// Everything the report builder needs to know about one equation form.
struct FormAdapter {
    std::string variable;
    Form3Problem p3;
    std::function<RadicalSolution(SolveOptions)> radical;
    std::function<RootSet()> trig;
    oracle::QuinticCoefficients polynomial;
};

double bring_jerrard_residual(Complex v, Complex d1, Complex d0) {
    const Complex v2 = v * v;
    const Complex value = v2 * v2 * v + d1 * v + d0;
    const double scale = std::max({1.0, std::pow(std::abs(v), 5), std::abs(d1 * v), std::abs(d0)});
    return std::abs(value) / scale;
}

RadicalSolution scale_solution(RadicalSolution sol, Complex scale, Complex d1, Complex d0) {
    for (auto& x : sol.trace.iterates) x *= scale;
    sol.root.value *= scale;
    sol.root.residual = bring_jerrard_residual(sol.root.value, d1, d0);
    sol.root.certified_abs_bound *= std::abs(scale);
    return sol;
}

FormAdapter adapter_for(const SolveRequest& req, const Form1Reduction* reduction) {
    FormAdapter ad;
    switch (req.form) {
    case Form::Form3: {
        const Form3Problem p3 = make_form3(req.xi, req.theta);
        ad = {"y", p3, [p3](SolveOptions o) { return solve_form3(p3, o); },
              [p3] { return all_roots_form3(p3); }, oracle::form3_polynomial(p3.xi, p3.u)};
        break;
    }
    case Form::Form2: {
        const Form2Problem p2{req.lambda};
        ad = {"z", form2_to_form3(p2), [p2](SolveOptions o) { return solve_form2(p2, o); },
              [p2] { return all_roots_form2(p2); }, oracle::form2_polynomial(p2.lambda)};
        break;
    }
    case Form::Form1: {
        const Form1Problem p1{req.a};
        ad = {"x", form2_to_form3(form1_to_form2(p1)),
              [p1](SolveOptions o) { return solve_form1(p1, o); },
              [p1] { return all_roots_form1(p1); }, oracle::form1_polynomial(p1.a)};
        break;
    }
    case Form::BringJerrard: {
        const Form1Problem p1 = reduction->problem;
        const Complex s = reduction->scale;
        const Complex d1 = req.d1;
        const Complex d0 = req.d0;
        ad.variable = "v";
        ad.p3 = form2_to_form3(form1_to_form2(p1));
        ad.radical = [=](SolveOptions o) {
            try {
                return scale_solution(solve_form1(p1, o), s, d1, d0);
            } catch (const MaxIterExceeded& e) {
                throw MaxIterExceeded(scale_solution(e.best(), s, d1, d0));
            }
        };
        ad.trig = [=] {
            RootSet set = all_roots_form1(p1);
            for (auto& rec : set.roots) {
                rec.value *= s;
                rec.residual = bring_jerrard_residual(rec.value, d1, d0);
            }
            return set;
        };
        ad.polynomial = oracle::bring_jerrard_polynomial(d1, d0);
        break;
    }
    }
    return ad;
}

std::vector<TraceRow> trace_rows(const IterationTrace& trace, Complex reference) {
    std::vector<TraceRow> rows;
    for (const Complex& v : trace.iterates) {
        rows.push_back({v, std::abs(v - reference), std::abs(v / reference - 1.0)});
    }
    return rows;
}

// Runs `solve`, keeping the best estimate when the step criterion fails.
RadicalSolution run_radical(const std::function<RadicalSolution(SolveOptions)>& solve,
                            SolveOptions opts, SolveReport& report) {
    try {
        return solve(opts);
    } catch (const MaxIterExceeded& e) {
        record_error(report, describe(e));
        return e.best();
    }
}

void attach_oracle(SolveReport& report, const oracle::QuinticCoefficients& poly) {
    const oracle::Roots truth = oracle::oracle_roots(poly);
    double scale = 1.0;
    for (const Complex& r : truth) scale = std::max(scale, std::abs(r));

    std::vector<Complex> trig;
    double max_distance = 0.0;
    for (const auto& r : report.roots) {
        if (r.method == "radical") {
            max_distance = std::max(max_distance, oracle::nearest_root(r.value, truth).distance);
        } else {
            trig.push_back(r.value);
        }
    }
    if (!trig.empty()) {
        max_distance = std::max(max_distance, oracle::multiset_distance(trig, truth));
    }
    report.oracle = OracleReport{max_distance <= kOracleMatchTolerance * scale, max_distance};
}

void solve_into(const SolveRequest& req, SolveReport& report) {
    std::optional<Form1Reduction> reduction;
    if (req.form == Form::BringJerrard) {
        auto reduced = bring_jerrard_to_form1({req.d1, req.d0});
        if (const auto* special = std::get_if<SpecialCaseRoots>(&reduced)) {
            for (const Complex& v : special->roots) {
                report.roots.push_back(
                    {v, bring_jerrard_residual(v, req.d1, req.d0), "direct", std::nullopt,
                     std::nullopt, std::nullopt});
            }
            if (req.verify) attach_oracle(report, oracle::bring_jerrard_polynomial(req.d1, req.d0));
            return;
        }
        reduction = std::get<Form1Reduction>(reduced);
    }

    const FormAdapter ad = adapter_for(req, reduction ? &*reduction : nullptr);
    report.variable = ad.variable;
    report.form3 = Form3Report{ad.p3.xi, ad.p3.theta, ad.p3.conjugated, {}};

    const bool want_trig = req.method != Method::Radical;
    const bool want_radical = req.method != Method::Trig;

    if (want_trig) {
        try {
            const RootSet set = ad.trig();
            const RootSet set3 = all_roots_form3(ad.p3);
            for (const auto& rec : set.roots) {
                report.roots.push_back(
                    {rec.value, rec.residual, "trig", rec.k, std::nullopt, std::nullopt});
            }
            for (const auto& rec : set3.roots) report.form3->roots.push_back(rec.value);
        } catch (const SolverError& e) {
            record_error(report, describe(e));
        }
    }

    if (want_radical) {
        const SolveOptions opts{req.tol, req.max_iter};
        const RadicalSolution sol = run_radical(ad.radical, opts, report);
        const Complex root = sol.root.value;

        std::optional<int> k;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& r : report.roots) {
            if (r.method == "trig" && r.k && std::abs(r.value - root) < best) {
                best = std::abs(r.value - root);
                k = r.k;
            }
        }
        report.roots.push_back({root, sol.root.residual, "radical", k, sol.root.iterations,
                                sol.root.certified_abs_bound});

        TraceReport trace{ad.variable, trace_rows(sol.trace, root), {}};
        if (req.form == Form::Form3) {
            trace.form3_rows = trace.rows;
        } else {
            const RadicalSolution sol3 = run_radical(
                [&](SolveOptions o) { return solve_form3(ad.p3, o); }, opts, report);
            trace.form3_rows = trace_rows(sol3.trace, sol3.root.value);
        }
        if (trace.rows.size() > 1) {
            const TraceRow& first = trace.rows[1];
            report.formula_root = FormulaReport{first.value, first.abs_err, first.rel_err};
        }
        report.trace = std::move(trace);
    }

    if (req.verify) attach_oracle(report, ad.polynomial);
}

std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> out;
    if (count <= 0) return out;
    if (count == 1) return {lo};
    const double step = (std::log10(hi) - std::log10(lo)) / (count - 1);
    for (int i = 0; i < count; ++i) out.push_back(std::pow(10.0, std::log10(lo) + step * i));
    return out;
}

std::vector<double> linear_grid(double lo, double hi, int count) {
    std::vector<double> out;
    if (count <= 0) return out;
    if (count == 1) return {lo};
    for (int i = 0; i < count; ++i) out.push_back(lo + (hi - lo) * i / (count - 1));
    out.back() = hi;
    return out;
}

void observe_max(BoundCheck& check, double value) {
    ++check.samples;
    check.observed = std::max(check.observed, value);
    if (!(value < check.bound)) ++check.violations;
}

// Contraction ratios e_{k+1}/e_k for k >= 1 while e_k exceeds the floor.
void observe_contraction(BoundCheck& check, const std::vector<double>& errors, double floor) {
    for (std::size_t k = 1; k + 1 < errors.size(); ++k) {
        if (!(errors[k] > floor)) break;
        observe_max(check, errors[k + 1] / errors[k]);
    }
}

constexpr int kSweepSteps = 8;

}  // namespace

SolveReport cmd_solve(const SolveRequest& req, SolveSettings settings) {
    validate(req);
    const auto start = std::chrono::steady_clock::now();
    SolveReport report;
    report.request = req;
    report.variable = std::string(1, "vxzy"[static_cast<int>(req.form)]);
    try {
        solve_into(req, report);
    } catch (const SolverError& e) {
        record_error(report, describe(e));
    }
    if (settings.timing) {
        report.timing_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    }
    return report;
}

int cmd_batch(std::istream& in, std::ostream& out, const BatchSettings& settings) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);

    std::vector<std::string> results(lines.size());
    std::vector<char> failed(lines.size(), 0);
    std::atomic<std::size_t> next{0};

    const auto worker = [&] {
        for (std::size_t i = next++; i < lines.size(); i = next++) {
            const std::string& line = lines[i];
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            try {
                const SolveRequest req = request_from_json(Json::parse(line), settings.defaults);
                const SolveReport report = cmd_solve(req, {settings.timing});
                results[i] = to_json(report).dump();
                failed[i] = report.status != "ok";
            } catch (const std::exception& e) {
                Json err;
                err["line"] = i + 1;
                err["error"] = std::string(e.what());
                results[i] = err.dump();
                failed[i] = 1;
            }
        }
    };

    unsigned jobs = settings.jobs != 0 ? settings.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(lines.size(), 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
    }

    bool any_failed = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (results[i].empty()) continue;
        out << results[i] << '\n';
        any_failed = any_failed || failed[i];
    }
    return any_failed ? kExitPartialBatch : kExitOk;
}

DivergenceDemo cmd_demo_divergence(double a, double x0, int steps) {
    DivergenceDemo demo{a, x0, steps, {}, {}, {}};
    for (const Complex& x : naive_iteration_demo(a, x0, steps).iterates) demo.naive.push_back(x.real());
    if (a != 0.0) {
        RadicalSolution sol;
        try {
            sol = solve_form1(Form1Problem{Complex{a}});
        } catch (const MaxIterExceeded& e) {
            sol = e.best();
        }
        sol.trace.set_reference(sol.root.value);
        demo.proposed = sol.trace.iterates;
        demo.proposed_abs_err = sol.trace.abs_errors;
    }
    return demo;
}

Json to_json(const DivergenceDemo& demo) {
    Json proposed = Json::array();
    for (std::size_t i = 0; i < demo.proposed.size(); ++i) {
        Json row = to_json(demo.proposed[i]);
        row["abs_err"] = demo.proposed_abs_err[i];
        proposed.push_back(row);
    }
    return Json{{"a", demo.a}, {"x0", demo.x0}, {"steps", demo.steps},
                {"naive", demo.naive}, {"proposed", proposed}};
}

std::string render_text(const DivergenceDemo& demo) {
    fmt::memory_buffer out;
    auto it = std::back_inserter(out);
    fmt::format_to(it, "x^5 + x + a = 0   a = {}   x0 = {}\n", demo.a, demo.x0);
    fmt::format_to(it, "{:>4}  {:>14}  {:<30}{:>12}\n", "k", "naive x_k", "radical x_k", "|x_k-x*|");
    const std::size_t rows = std::max(demo.naive.size(), demo.proposed.size());
    for (std::size_t k = 0; k < rows; ++k) {
        const std::string naive = k < demo.naive.size() ? fmt::format("{:.4f}", demo.naive[k]) : "";
        const std::string prop = k < demo.proposed.size() ? format_complex(demo.proposed[k]) : "";
        const std::string err =
            k < demo.proposed.size() ? fmt::format("{:.2e}", demo.proposed_abs_err[k]) : "";
        std::string line = fmt::format("{:>4}  {:>14}  {:<30}{:>12}", k, naive, prop, err);
        line.erase(line.find_last_not_of(' ') + 1);
        fmt::format_to(it, "{}\n", line);
    }
    return fmt::to_string(out);
}

bool BoundsSummary::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.passed(); });
}

BoundsSummary cmd_verify_bounds(const GridSpec& grid) {
    using C = AlgorithmConstants;
    BoundsSummary summary;
    summary.grid = grid;
    BoundCheck location{"form3_root_location", "location", 0.0, 1.0, 0, 0};
    BoundCheck abs3{"form3_abs_error", "form3", 0.0, C::C0, 0, 0};
    BoundCheck rel3{"form3_rel_error", "form3", 0.0, C::C1, 0, 0};
    BoundCheck con3{"form3_contraction", "form3", 0.0, 1.0 / C::K, 0, 0};
    BoundCheck abs1{"form1_abs_error", "form1", 0.0, C::C2, 0, 0};
    BoundCheck rel1{"form1_rel_error", "form1", 0.0, C::C1prime, 0, 0};
    BoundCheck con1{"form1_contraction", "form1", 0.0, 1.0 / C::Kprime, 0, 0};

    // A grid point "fails" location when the sector [-theta/4, 0] does not
    // hold exactly one oracle root; observed counts those points.
    const auto locate = [&](const Form3Problem& p3) -> std::optional<Complex> {
        const auto truth = oracle::oracle_roots(oracle::form3_polynomial(p3.xi, p3.u));
        const auto match = oracle::root_with_argument(truth, -p3.theta / 4.0, 0.0);
        ++location.samples;
        if (match.count != 1) {
            ++location.violations;
            location.observed += 1.0;
            return std::nullopt;
        }
        return match.root;
    };

    for (double xi : log_grid(grid.xi_min, grid.xi_max, grid.xi_count)) {
        for (double theta : linear_grid(grid.theta_min, grid.theta_max, grid.theta_count)) {
            const Form3Problem p3 = make_form3(xi, theta);
            const auto root = locate(p3);
            if (!root) continue;
            IterationTrace trace = iterate_form3(p3, kSweepSteps);
            trace.set_reference(*root);
            observe_max(abs3, trace.abs_errors[1]);
            observe_max(rel3, trace.rel_errors[1]);
            observe_contraction(con3, trace.abs_errors, grid.contraction_floor);
        }
    }

    for (double modulus : log_grid(grid.a_min, grid.a_max, grid.a_count)) {
        for (int j = 0; j < grid.arg_count; ++j) {
            const Form1Problem p1{std::polar(modulus, 2.0 * std::numbers::pi * j / grid.arg_count)};
            const Form3Problem p3 = form2_to_form3(form1_to_form2(p1));
            const auto root3 = locate(p3);
            if (!root3) continue;
            // x* is the oracle Form-1 root that the sector root maps onto.
            const auto truth = oracle::oracle_roots(oracle::form1_polynomial(p1.a));
            const Complex x_star = oracle::nearest_root(map_form3_to_form1(*root3, p3, p1), truth).root;

            IterationTrace trace;
            for (const Complex& y : iterate_form3(p3, kSweepSteps).iterates) {
                trace.iterates.push_back(map_form3_to_form1(y, p3, p1));
            }
            trace.set_reference(x_star);
            observe_max(abs1, trace.abs_errors[1]);
            observe_max(rel1, trace.rel_errors[1]);
            observe_contraction(con1, trace.abs_errors, grid.contraction_floor);
        }
    }

    summary.checks = {location, abs3, rel3, con3};
    if (grid.a_count > 0) {
        summary.checks.push_back(abs1);
        summary.checks.push_back(rel1);
        summary.checks.push_back(con1);
    }
    return summary;
}

Json to_json(const BoundsSummary& summary) {
    Json checks = Json::array();
    for (const auto& c : summary.checks) {
        checks.push_back({{"name", c.name},
                          {"family", c.family},
                          {"observed", c.observed},
                          {"bound", c.bound},
                          {"samples", c.samples},
                          {"violations", c.violations},
                          {"passed", c.passed()}});
    }
    const GridSpec& g = summary.grid;
    return Json{{"grid",
                 {{"xi_min", g.xi_min}, {"xi_max", g.xi_max}, {"xi_count", g.xi_count},
                  {"theta_min", g.theta_min}, {"theta_max", g.theta_max},
                  {"theta_count", g.theta_count}, {"a_min", g.a_min}, {"a_max", g.a_max},
                  {"a_count", g.a_count}, {"arg_count", g.arg_count},
                  {"contraction_floor", g.contraction_floor}}},
                {"checks", checks},
                {"passed", summary.passed()}};
}

std::string render_text(const BoundsSummary& summary) {
    fmt::memory_buffer out;
    auto it = std::back_inserter(out);
    fmt::format_to(it, "{:<14}{:<22}{:>12}{:>12}{:>9}{:>11}  {}\n", "family", "check", "observed",
                   "bound", "samples", "violations", "result");
    for (const auto& c : summary.checks) {
        fmt::format_to(it, "{:<14}{:<22}{:>12.4e}{:>12.4e}{:>9}{:>11}  {}\n", c.family, c.name,
                       c.observed, c.bound, c.samples, c.violations, c.passed() ? "PASS" : "FAIL");
    }
    return fmt::to_string(out);
}

}  // namespace quintic::app
