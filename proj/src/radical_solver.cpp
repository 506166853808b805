#include "quintic/radical_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace quintic {

namespace {

using LComplex = std::complex<long double>;

Complex round_to_double(LComplex z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

double certified_bound(double c, double k_factor, int iterations, Complex value) {
    if (iterations < 1) return std::numeric_limits<double>::infinity();
    const double floor = std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(value));
    return std::max(c / std::pow(k_factor, iterations - 1), floor);
}

void check_options(const SolveOptions& opts) {
    if (!(opts.tol >= 1e-15)) {
        throw SolverError(ErrorKind::InvalidInput, "tol must be at least 1e-15");
    }
    if (opts.max_iter < 1) {
        throw SolverError(ErrorKind::InvalidInput, "max_iter must be positive");
    }
}

// Re-expresses a Form-3 solution in another variable. `map` carries each
// iterate; `residual` scores the final value.
template <typename Map, typename Residual>
RadicalSolution transform(const RadicalSolution& in, Map map, Residual residual, double c,
                          double k_factor) {
    RadicalSolution out;
    out.trace.iterates.reserve(in.trace.iterates.size());
    for (const Complex& y : in.trace.iterates) out.trace.iterates.push_back(map(y));
    out.root.value = map(in.root.value);
    out.root.iterations = in.root.iterations;
    out.root.residual = residual(out.root.value);
    out.root.certified_abs_bound = certified_bound(c, k_factor, out.root.iterations, out.root.value);
    return out;
}

template <typename Map, typename Residual>
RadicalSolution solve_via_form3(const Form3Problem& p3, SolveOptions opts, Map map,
                                Residual residual, double c, double k_factor) {
    try {
        return transform(solve_form3(p3, opts), map, residual, c, k_factor);
    } catch (const MaxIterExceeded& e) {
        throw MaxIterExceeded(transform(e.best(), map, residual, c, k_factor));
    }
}

}  // namespace

void IterationTrace::set_reference(Complex ref) {
    reference = ref;
    abs_errors.clear();
    rel_errors.clear();
    for (const Complex& v : iterates) {
        abs_errors.push_back(std::abs(v - ref));
        rel_errors.push_back(std::abs(v / ref - 1.0));
    }
}

MaxIterExceeded::MaxIterExceeded(RadicalSolution best)
    : SolverError(ErrorKind::MaxIterExceeded, "step-size tolerance not reached within max_iter"),
      best_(std::move(best)) {}

double starting_point(double xi) {
    if (!(xi > 0.0)) throw SolverError(ErrorKind::InvalidInput, "xi must be positive");
    const long double ratio = static_cast<long double>(xi) / AlgorithmConstants::alpha;
    return static_cast<double>(std::pow(ratio, 2.0L / 9.0L));
}

Complex g_map(const Form3Problem& p, Complex y) {
    const LComplex u(p.u);
    const LComplex denom = u + LComplex(y);
    if (denom == LComplex{}) {
        throw SolverError(ErrorKind::DegenerateInput, "u + y vanishes");
    }
    const long double two_xi = 2.0L * static_cast<long double>(p.xi);
    const LComplex t = branch_nth_root(two_xi / denom, 4);
    const LComplex u2 = u * u;
    const LComplex u3 = u2 * u;
    const LComplex u4 = u2 * u2;
    const LComplex u5 = u4 * u;
    // 2 xi + (2u^2/5) t^3 + (2u^3/25) t^2 + (u^4/125) t + u^5/3125
    const LComplex rhs = two_xi
                         + t * (u4 / 125.0L + t * (2.0L * u3 / 25.0L + t * (2.0L * u2 / 5.0L)))
                         + u5 / 3125.0L;
    return round_to_double(branch_nth_root(rhs, 5) - u / 5.0L);
}

Complex radical_formula(const Form3Problem& p) {
    validate(p);
    return g_map(p, Complex{starting_point(p.xi)});
}

IterationTrace iterate_form3(const Form3Problem& p, int steps) {
    validate(p);
    IterationTrace trace;
    trace.iterates.push_back(Complex{starting_point(p.xi)});
    for (int k = 0; k < steps; ++k) trace.iterates.push_back(g_map(p, trace.iterates.back()));
    return trace;
}

RadicalSolution solve_form3(const Form3Problem& p, SolveOptions opts) {
    validate(p);
    check_options(opts);

    RadicalSolution sol;
    auto& iterates = sol.trace.iterates;
    iterates.push_back(Complex{starting_point(p.xi)});
    bool converged = false;
    for (int k = 1; k <= opts.max_iter; ++k) {
        const Complex prev = iterates.back();
        const Complex next = g_map(p, prev);
        iterates.push_back(next);
        if (std::abs(next - prev) <= opts.tol * std::max(1.0, std::abs(next))) {
            converged = true;
            break;
        }
    }
    sol.root.value = iterates.back();
    sol.root.iterations = static_cast<int>(iterates.size()) - 1;
    sol.root.residual = form3_residual(sol.root.value, p);
    sol.root.certified_abs_bound =
        certified_bound(AlgorithmConstants::C0, AlgorithmConstants::K, sol.root.iterations,
                        sol.root.value);
    if (!converged) throw MaxIterExceeded(std::move(sol));
    return sol;
}

RadicalSolution solve_form2(const Form2Problem& p, SolveOptions opts) {
    const Form3Problem p3 = form2_to_form3(p);
    return solve_via_form3(
        p3, opts, [&](Complex y) { return form3_root_to_form2_root(y, p3, p); },
        [&](Complex z) { return form2_residual(z, p.lambda); }, AlgorithmConstants::C0,
        AlgorithmConstants::K);
}

RadicalSolution solve_form1(const Form1Problem& p, SolveOptions opts) {
    const Form2Problem p2 = form1_to_form2(p);
    const Form3Problem p3 = form2_to_form3(p2);
    return solve_via_form3(
        p3, opts, [&](Complex y) { return p.a / form3_root_to_form2_root(y, p3, p2); },
        [&](Complex x) { return form1_residual(x, p.a); }, AlgorithmConstants::C2,
        AlgorithmConstants::Kprime);
}

RootEstimate bring_radical(Complex a, SolveOptions opts) {
    if (a == Complex{}) return RootEstimate{};
    return solve_form1(Form1Problem{a}, opts).root;
}

Complex bring_radical_closed_form(Complex a) {
    if (a == Complex{}) return {};
    const Form1Problem p1{a};
    const Form3Problem p3 = form2_to_form3(form1_to_form2(p1));
    return map_form3_to_form1(radical_formula(p3), p3, p1);
}

IterationTrace naive_iteration_demo(double a, double x0, int steps) {
    if (steps < 1) throw SolverError(ErrorKind::InvalidInput, "steps must be positive");
    IterationTrace trace;
    double x = x0;
    trace.iterates.emplace_back(x);
    for (int k = 0; k < steps; ++k) {
        const double s = a + x;
        x = -std::copysign(std::pow(std::abs(s), 0.2), s);
        trace.iterates.emplace_back(x);
    }
    return trace;
}

}  // namespace quintic
