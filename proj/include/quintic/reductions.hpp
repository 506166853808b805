#pragma once

// Equation forms and the maps between them:
//
//   Bring-Jerrard   v^5 + d1 v + d0 = 0
//   Form 1          x^5 + x + a = 0                 x = v / d1^(1/4)
//   Form 2          (z^5 + z^4) / 2 = lambda        z = a / x, lambda = -a^4/2
//   Form 3          (y^5 + u y^4) / 2 = xi          y = u z, xi = |lambda|
//
// Form 3 is normalized so that u = e^{i theta} with theta in [0, pi/5]. When
// the branch root of |lambda|/lambda has negative argument the problem is
// conjugated, and the solver works on the conjugate equation.

#include <array>
#include <variant>

#include "quintic/complex_branch.hpp"

namespace quintic {

struct BringJerrardProblem {
    Complex d1;
    Complex d0;
};

struct Form1Problem {
    Complex a;
};

struct Form2Problem {
    Complex lambda;
};

struct Form3Problem {
    double xi = 1.0;
    double theta = 0.0;
    Complex u{1.0, 0.0};
    /// True when (xi, conj(u0)) replaced the original (xi, u0) problem.
    bool conjugated = false;
};

/// Largest xi accepted by the solvers; keeps 2*xi and its powers finite.
inline constexpr double kMaxXi = 1e300;

/// Builds a Form-3 problem directly from (xi, theta).
/// Throws SolverError(InvalidInput / OutOfRange) on invalid parameters.
Form3Problem make_form3(double xi, double theta);

/// Throws unless xi is in (0, kMaxXi], theta in [0, pi/5] and |u| = 1.
void validate(const Form3Problem& p);

/// Scaled reduction of a Bring-Jerrard problem: v = scale * x.
struct Form1Reduction {
    Form1Problem problem;
    Complex scale;
};

/// Roots of the trivial cases d1 = 0 or d0 = 0, with multiplicity.
struct SpecialCaseRoots {
    std::array<Complex, 5> roots;
};

std::variant<Form1Reduction, SpecialCaseRoots>
bring_jerrard_to_form1(const BringJerrardProblem& p);

Form2Problem form1_to_form2(const Form1Problem& p);
Form3Problem form2_to_form3(const Form2Problem& p);

/// Maps a root y of the (possibly conjugated) Form-3 problem to the root z of
/// the Form-2 problem it was derived from. No residual check.
Complex form3_root_to_form2_root(Complex y, const Form3Problem& p3, const Form2Problem& p2);

/// x = a / z composed with form3_root_to_form2_root. No residual check; used
/// for mapping iterates.
Complex map_form3_to_form1(Complex y, const Form3Problem& p3, const Form1Problem& p1);

/// Residual-checked back-map. Throws SolverError(ResidualTooLarge) when
/// |x^5 + x + a| >= 1e-10 * max(1, |x|^5).
Complex form3_root_to_form1_root(Complex y, const Form3Problem& p3, const Form1Problem& p1);

/// Scale-relative residuals used throughout.
double form1_residual(Complex x, Complex a);
double form2_residual(Complex z, Complex lambda);
double form3_residual(Complex y, const Form3Problem& p);

}  // namespace quintic
