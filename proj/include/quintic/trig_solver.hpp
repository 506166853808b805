#pragma once

// All five roots of (y^5 + u y^4) / 2 = xi by bisection on the root argument.
//
// Writing y = r e^{i sigma}, the imaginary part of the equation fixes
// r = -sin(theta + 4 sigma) / sin(5 sigma); substituting into the real part
// leaves the angular equation
//
//     f(sigma) = sin^4(theta + 4 sigma) sin(sigma - theta) / sin^5(5 sigma) = 2 xi.
//
// On each of five disjoint intervals I_k, f runs continuously from 0 at one
// end to +inf at a pole of sin(5 sigma) at the other, so each interval holds
// a root argument. For theta = 0 the interval I_0 collapses (and I_-2 for
// theta = pi/5); the missing root then comes from the x^4 coefficient.

#include <array>
#include <vector>

#include "quintic/reductions.hpp"

namespace quintic {

enum class IntervalEnd { Lower, Upper };
enum class RootSource { Bisection, Vieta };

struct AngularInterval {
    int k = 0;
    double lo = 0.0;
    double hi = 0.0;
    IntervalEnd zero_end = IntervalEnd::Lower;
    IntervalEnd singular_end = IntervalEnd::Upper;

    double zero() const { return zero_end == IntervalEnd::Lower ? lo : hi; }
    double pole() const { return singular_end == IntervalEnd::Lower ? lo : hi; }
    double width() const { return hi - lo; }
};

struct RootRecord {
    Complex value;
    int k = 0;
    /// Argument and modulus of the underlying Form-3 root.
    double sigma = 0.0;
    double r = 0.0;
    double residual = 0.0;
    RootSource via = RootSource::Bisection;
};

/// Five roots ordered by k = -2..2.
struct RootSet {
    std::array<RootRecord, 5> roots;
};

/// f(sigma). Returns +/-inf when the quotient overflows; throws
/// SolverError(PoleEvaluation) when sin(5 sigma) is exactly zero.
double f_sigma(double sigma, double theta);

/// r(sigma) = -sin(theta + 4 sigma) / sin(5 sigma). Throws on a pole.
double radius_from_sigma(double sigma, double theta);

/// Five intervals for 0 < theta < pi/5; four for the endpoints (I_0 dropped at
/// theta = 0, I_-2 dropped at theta = pi/5). Throws OutOfRange outside [0, pi/5].
std::vector<AngularInterval> intervals_for(double theta);

/// True when theta is within 1e-14 of 0 or pi/5.
bool is_endpoint_theta(double theta);

/// Root argument of f(sigma) = 2 xi inside `interval`.
struct SigmaSolution {
    double sigma = 0.0;
    /// |sigma - pole|.
    double pole_offset = 0.0;
    /// r(sigma), evaluated from the offset to the nearer end.
    double radius = 0.0;
    /// e^{i sigma}.
    Complex direction{1.0, 0.0};
};

SigmaSolution bisect_sigma_detail(const AngularInterval& interval, double theta, double xi,
                                  double tol_sigma = 1e-13);

/// Throws SolverError(BracketFailure) if no sign change is found in 200 halvings.
double bisect_sigma(const AngularInterval& interval, double theta, double xi,
                    double tol_sigma = 1e-13);

struct TrigOptions {
    /// Residual bound |q(y)| / max(1, 2 xi) for each returned root.
    double tol = 1e-10;
    double tol_sigma = 1e-13;
    int polish_steps = 5;
};

/// Form-3 roots y_k.
RootSet all_roots_form3(const Form3Problem& p, TrigOptions opts = {});

/// Form-2 roots z_k mapped from the Form-3 roots.
RootSet all_roots_form2(const Form2Problem& p, TrigOptions opts = {});

/// Form-1 roots x_k mapped from the Form-3 roots; residuals are Form-1 residuals.
RootSet all_roots_form1(const Form1Problem& p, TrigOptions opts = {});

}  // namespace quintic
