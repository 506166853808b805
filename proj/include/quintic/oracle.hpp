#pragma once

// Ground-truth roots for degree-5 polynomials, independent of the radical and
// trigonometric solvers. Durand-Kerner (Weierstrass) simultaneous iteration
// followed by Newton polishing in extended precision.

#include <array>
#include <complex>
#include <span>

namespace quintic::oracle {

using Complex = std::complex<double>;
using Roots = std::array<Complex, 5>;

/// c[0] + c[1] x + ... + c[5] x^5, with c[5] != 0.
struct QuinticCoefficients {
    std::array<Complex, 6> c{};

    Complex operator()(Complex x) const;
    /// sum |c_k| |x|^k, the natural scale of an evaluation at x.
    double magnitude(Complex x) const;
};

/// y^5 + u y^4 - 2 xi  (twice the Form-3 equation).
QuinticCoefficients form3_polynomial(double xi, Complex u);
/// x^5 + x + a.
QuinticCoefficients form1_polynomial(Complex a);
/// z^5 + z^4 - 2 lambda.
QuinticCoefficients form2_polynomial(Complex lambda);
/// v^5 + d1 v + d0.
QuinticCoefficients bring_jerrard_polynomial(Complex d1, Complex d0);

/// Throws quintic::SolverError(NoConvergence) when 500 sweeps leave a
/// relative residual above 1e-14, and (InvalidInput) when c5 = 0.
Roots oracle_roots(const QuinticCoefficients& q);

/// Largest |q(x)| / magnitude(x) over the given roots.
double max_relative_residual(const QuinticCoefficients& q, std::span<const Complex> roots);

struct NearestRoot {
    Complex root;
    double distance = 0.0;
};

/// Closest root to target; ties go to the first root in (re, im) order.
NearestRoot nearest_root(Complex target, std::span<const Complex> roots);

/// Roots with argument in [lo, hi] (inclusive, with slack `eps`).
/// Returns the count found and the first such root.
struct ArgumentMatch {
    int count = 0;
    Complex root;
};
ArgumentMatch root_with_argument(std::span<const Complex> roots, double lo, double hi,
                                 double eps = 1e-12);

/// Greedy minimal-distance pairing of two equally sized multisets; returns
/// the largest paired distance (infinity when sizes differ).
double multiset_distance(std::span<const Complex> a, std::span<const Complex> b);

/// Elementary symmetric polynomials e1..e5 against (-1)^k c_{5-k} / c5.
struct VietaReport {
    std::array<bool, 5> passed{};
    std::array<double, 5> deviation{};

    bool all_passed() const;
};

/// Identity k passes when |e_k - expected_k| <= tol * max(1, |expected_k|, C(5,k) R^k),
/// R being the largest root modulus.
VietaReport vieta_check(const QuinticCoefficients& q, std::span<const Complex, 5> roots,
                        double tol);

}  // namespace quintic::oracle
