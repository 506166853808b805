#include "quintic/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "quintic/errors.hpp"

namespace quintic {

namespace {

constexpr double kPiOver5 = std::numbers::pi / 5.0;
constexpr double kBackMapTolerance = 1e-10;

// Fifth roots of unity times w.
std::array<Complex, 5> rotations(Complex w, int n) {
    std::array<Complex, 5> out{};
    for (int j = 0; j < n; ++j) {
        out[static_cast<std::size_t>(j)] = w * std::polar(1.0, 2.0 * std::numbers::pi * j / n);
    }
    return out;
}

bool on_negative_real_axis(Complex lambda) {
    return lambda.imag() == 0.0 && lambda.real() < 0.0;
}

}  // namespace

Form3Problem make_form3(double xi, double theta) {
    Form3Problem p{xi, theta, std::polar(1.0, theta), false};
    validate(p);
    return p;
}

void validate(const Form3Problem& p) {
    if (!(p.xi > 0.0) || !std::isfinite(p.xi)) {
        throw SolverError(ErrorKind::InvalidInput, "xi must be positive and finite");
    }
    if (p.xi > kMaxXi) {
        throw SolverError(ErrorKind::OutOfRange, "xi exceeds 1e300");
    }
    if (!(p.theta >= 0.0 && p.theta <= kPiOver5)) {
        throw SolverError(ErrorKind::OutOfRange, "theta must lie in [0, pi/5]");
    }
    if (std::abs(std::abs(p.u) - 1.0) > 1e-14) {
        throw SolverError(ErrorKind::InvalidInput, "u must be unimodular");
    }
}

std::variant<Form1Reduction, SpecialCaseRoots>
bring_jerrard_to_form1(const BringJerrardProblem& p) {
    const Complex zero{};
    if (p.d1 == zero) {
        // v^5 = -d0; all five values are zero when d0 is too.
        return SpecialCaseRoots{rotations(branch_nth_root(-p.d0, 5), 5)};
    }
    if (p.d0 == zero) {
        // v (v^4 + d1) = 0
        SpecialCaseRoots out{};
        const auto quartic = rotations(branch_nth_root(-p.d1, 4), 4);
        out.roots[0] = zero;
        std::copy_n(quartic.begin(), 4, out.roots.begin() + 1);
        return out;
    }
    // a = d0 / s^5 with s = d1^(1/4), so that v = s x exactly.
    const auto scale = branch_nth_root(std::complex<long double>(p.d1), 4);
    const auto s5 = scale * scale * scale * scale * scale;
    const auto a = std::complex<long double>(p.d0) / s5;
    return Form1Reduction{
        Form1Problem{{static_cast<double>(a.real()), static_cast<double>(a.imag())}},
        {static_cast<double>(scale.real()), static_cast<double>(scale.imag())}};
}

Form2Problem form1_to_form2(const Form1Problem& p) {
    if (p.a == Complex{}) {
        throw SolverError(ErrorKind::InvalidInput, "a must be nonzero");
    }
    const Complex a2 = p.a * p.a;
    return Form2Problem{-(a2 * a2) / 2.0};
}

Form3Problem form2_to_form3(const Form2Problem& p) {
    if (p.lambda == Complex{}) {
        throw SolverError(ErrorKind::InvalidInput, "lambda must be nonzero");
    }
    const double xi = std::abs(p.lambda);
    if (!std::isfinite(xi) || xi > kMaxXi) {
        throw SolverError(ErrorKind::OutOfRange, "|lambda| exceeds 1e300");
    }
    const Complex u0 = branch_nth_root(Complex{xi} / p.lambda, 5);
    const double theta0 = principal_arg(u0);
    Form3Problem out;
    out.xi = xi;
    if (theta0 >= 0.0) {
        out.theta = std::min(theta0, kPiOver5);
        out.u = u0;
        out.conjugated = false;
    } else {
        out.theta = std::min(-theta0, kPiOver5);
        out.u = std::conj(u0);
        out.conjugated = true;
    }
    // Re-derive u from theta so |u| = 1 and u = e^{i theta} hold to rounding.
    out.u = std::polar(1.0, out.theta);
    return out;
}

Complex form3_root_to_form2_root(Complex y, const Form3Problem& p3, const Form2Problem& p2) {
    if (!p3.conjugated || on_negative_real_axis(p2.lambda)) {
        // On the seam the Form-2 equation has real coefficients, so the
        // solver-frame root is itself a Form-2 root.
        return y / p3.u;
    }
    return std::conj(y) / std::conj(p3.u);
}

Complex map_form3_to_form1(Complex y, const Form3Problem& p3, const Form1Problem& p1) {
    return p1.a / form3_root_to_form2_root(y, p3, form1_to_form2(p1));
}

Complex form3_root_to_form1_root(Complex y, const Form3Problem& p3, const Form1Problem& p1) {
    if (y == Complex{}) {
        throw SolverError(ErrorKind::DegenerateInput, "Form-3 root must be nonzero");
    }
    const Complex x = map_form3_to_form1(y, p3, p1);
    const double residual = form1_residual(x, p1.a);
    if (!(residual < kBackMapTolerance)) {
        throw SolverError(ErrorKind::ResidualTooLarge,
                          "back-mapped Form-1 root has residual " + fmt::format("{:.3g}", residual));
    }
    return x;
}

double form1_residual(Complex x, Complex a) {
    const Complex x2 = x * x;
    const Complex value = x2 * x2 * x + x + a;
    return std::abs(value) / std::max(1.0, std::pow(std::abs(x), 5));
}

double form2_residual(Complex z, Complex lambda) {
    const Complex z2 = z * z;
    const Complex value = z2 * z2 * (z + 1.0) / 2.0 - lambda;
    return std::abs(value) / std::max(1.0, std::abs(lambda));
}

double form3_residual(Complex y, const Form3Problem& p) {
    const Complex y2 = y * y;
    const Complex value = y2 * y2 * (y + p.u) / 2.0 - p.xi;
    return std::abs(value) / std::max(1.0, p.xi);
}

}  // namespace quintic
