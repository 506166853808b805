#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quintic/app/io.hpp"

namespace quintic::app {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitPartialBatch = 1,
    kExitUsage = 2,
    kExitSolver = 3,
};

struct SolveSettings {
    /// When false, timing_ms is reported as 0 so reports are reproducible.
    bool timing = true;
};

/// Runs the requested solvers. Solver failures are reported in the returned
/// report (status "error"); invalid requests throw UsageError.
SolveReport cmd_solve(const SolveRequest& req, SolveSettings settings = {});

struct BatchSettings {
    SolveRequest defaults;
    unsigned jobs = 0;  // 0 = hardware concurrency
    bool timing = true;
};

/// One JSONL report per non-blank input line, in input order. Returns
/// kExitPartialBatch if any line failed, kExitOk otherwise.
int cmd_batch(std::istream& in, std::ostream& out, const BatchSettings& settings);

struct DivergenceDemo {
    double a = 0.01;
    double x0 = 0.0;
    int steps = 14;
    /// x_0 .. x_steps of the naive iteration x_{k+1} = -(a + x_k)^(1/5).
    std::vector<double> naive;
    /// x_0 .. x_n of the radical iteration for the same a.
    std::vector<Complex> proposed;
    std::vector<double> proposed_abs_err;
};

DivergenceDemo cmd_demo_divergence(double a, double x0, int steps);
Json to_json(const DivergenceDemo& demo);
std::string render_text(const DivergenceDemo& demo);

struct GridSpec {
    double xi_min = 1e-9;
    double xi_max = 1e9;
    int xi_count = 40;
    double theta_min = 0.0;
    double theta_max = 0.62831853071795864769;  // pi/5
    int theta_count = 20;
    double a_min = 1e-4;
    double a_max = 1e4;
    int a_count = 20;  // 0 skips the Form-1 sweep
    int arg_count = 16;
    /// Errors at or below this are excluded from contraction ratios.
    double contraction_floor = 1e-13;
};

struct BoundCheck {
    std::string name;
    std::string family;
    double observed = 0.0;
    double bound = 0.0;
    int samples = 0;
    int violations = 0;
    bool passed() const { return violations == 0; }
};

struct BoundsSummary {
    GridSpec grid;
    std::vector<BoundCheck> checks;
    bool passed() const;
};

/// Sweeps the grid against oracle roots and compares each observed extreme
/// with its proven constant.
BoundsSummary cmd_verify_bounds(const GridSpec& grid);
Json to_json(const BoundsSummary& summary);
std::string render_text(const BoundsSummary& summary);

}  // namespace quintic::app
