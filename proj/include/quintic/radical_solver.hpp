#pragma once

// Iteration of radicals for (y^5 + u y^4) / 2 = xi.
//
// Factoring gives y = (2 xi / (u + y))^(1/4); completing the fifth power gives
// (y + u/5)^5 = 2 xi + (2u^2/5) y^3 + (2u^3/25) y^2 + (u^4/125) y + u^5/3125.
// G substitutes the first into the right-hand side of the second. Starting at
// y0 = (xi / alpha)^(2/9), the sequence y_{k+1} = G(y_k) converges to the
// unique root with argument in [-theta/4, 0], contracting by at least a
// factor K per step. y1 is a closed-form radical expression within C0 of that
// root for every xi > 0 and theta in [0, pi/5].

#include <optional>
#include <vector>

#include "quintic/errors.hpp"
#include "quintic/reductions.hpp"

namespace quintic {

/// Proven constants of the algorithm.
struct AlgorithmConstants {
    /// sqrt((2 + sqrt 2) / 4) = cos(pi/8); scales the starting point.
    static constexpr double alpha = 0.92387953251128675613;
    /// |y1 - y*| < C0 for Form 2/3.
    static constexpr double C0 = 4.32e-3;
    /// |y1/y* - 1| < C1 for Form 2/3.
    static constexpr double C1 = 2.51e-2;
    /// |x1/x* - 1| < C1' for Form 1.
    static constexpr double C1prime = 2.57e-2;
    /// |x1 - x*| < C2 for Form 1.
    static constexpr double C2 = 2.90e-2;
    /// Per-step contraction of the Form-2/3 iteration.
    static constexpr double K = 15.44;
    /// Per-step contraction of the Form-1 iterates x_k = a / z_k.
    static constexpr double Kprime = 14.68;
};

struct RootEstimate {
    Complex value;
    /// Scale-relative residual against the equation the estimate answers.
    double residual = 0.0;
    int iterations = 0;
    /// A-priori bound on |value - root|: C/K^(k-1) after k iterations.
    double certified_abs_bound = 0.0;
};

struct IterationTrace {
    /// iterates[k] is the k-th iterate; iterates[0] is the starting point.
    std::vector<Complex> iterates;
    std::optional<Complex> reference;
    std::vector<double> abs_errors;
    std::vector<double> rel_errors;

    /// Fills the error columns against ref.
    void set_reference(Complex ref);
};

struct SolveOptions {
    double tol = 1e-12;
    int max_iter = 25;
};

struct RadicalSolution {
    RootEstimate root;
    IterationTrace trace;
};

/// Raised when the step-size criterion is not met within max_iter steps.
/// Carries the last iterate and the full trace.
class MaxIterExceeded : public SolverError {
public:
    explicit MaxIterExceeded(RadicalSolution best);
    const RadicalSolution& best() const noexcept { return best_; }

private:
    RadicalSolution best_;
};

/// (xi / alpha)^(2/9).
double starting_point(double xi);

/// One application of G. Throws SolverError(DegenerateInput) when u + y = 0.
Complex g_map(const Form3Problem& p, Complex y);

/// The closed-form approximation y1 = G(y0).
Complex radical_formula(const Form3Problem& p);

/// Exactly `steps` applications of G from the starting point; no stopping rule.
IterationTrace iterate_form3(const Form3Problem& p, int steps);

/// Iterates until |y_{k+1} - y_k| <= tol * max(1, |y_{k+1}|).
/// Throws MaxIterExceeded when the step criterion fails within max_iter.
RadicalSolution solve_form3(const Form3Problem& p, SolveOptions opts = {});

/// Form 2 through the rotation z = y/u (conjugation-aware); trace holds z_k.
RadicalSolution solve_form2(const Form2Problem& p, SolveOptions opts = {});

/// Form 1 through x_k = a / z_k; trace holds x_k.
RadicalSolution solve_form1(const Form1Problem& p, SolveOptions opts = {});

/// A root of x^5 + x + a = 0 (the Bring radical); a = 0 gives 0.
RootEstimate bring_radical(Complex a, SolveOptions opts = {});

/// The single-iteration radical approximation x1 of bring_radical(a).
Complex bring_radical_closed_form(Complex a);

/// x_{k+1} = -(a + x_k)^(1/5) with the real odd fifth root.
IterationTrace naive_iteration_demo(double a, double x0, int steps);

}  // namespace quintic
