#include "quintic/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "quintic/errors.hpp"

namespace quintic::oracle {

namespace {

constexpr int kMaxSweeps = 500;
constexpr int kPolishSteps = 3;
constexpr double kSweepTolerance = 1e-14;
constexpr double kStalledResidual = 1e-14;

using LComplex = std::complex<long double>;

template <typename C>
C horner(const std::array<C, 6>& c, C x) {
    C acc = c[5];
    for (int k = 4; k >= 0; --k) acc = acc * x + c[static_cast<std::size_t>(k)];
    return acc;
}

template <typename C>
C horner_derivative(const std::array<C, 6>& c, C x) {
    C acc = c[5] * C(5);
    for (int k = 4; k >= 1; --k) acc = acc * x + c[static_cast<std::size_t>(k)] * C(k);
    return acc;
}

bool lex_less(Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

}  // namespace

Complex QuinticCoefficients::operator()(Complex x) const { return horner(c, x); }

double QuinticCoefficients::magnitude(Complex x) const {
    const double r = std::abs(x);
    double acc = 0.0;
    for (int k = 5; k >= 0; --k) acc = acc * r + std::abs(c[static_cast<std::size_t>(k)]);
    return acc;
}

QuinticCoefficients form3_polynomial(double xi, Complex u) {
    return {{Complex{-2.0 * xi}, {}, {}, {}, u, Complex{1.0}}};
}

QuinticCoefficients form1_polynomial(Complex a) {
    return {{a, Complex{1.0}, {}, {}, {}, Complex{1.0}}};
}

QuinticCoefficients form2_polynomial(Complex lambda) {
    return {{-2.0 * lambda, {}, {}, {}, Complex{1.0}, Complex{1.0}}};
}

QuinticCoefficients bring_jerrard_polynomial(Complex d1, Complex d0) {
    return {{d0, d1, {}, {}, {}, Complex{1.0}}};
}

Roots oracle_roots(const QuinticCoefficients& q) {
    const Complex lead = q.c[5];
    if (lead == Complex{}) throw SolverError(ErrorKind::InvalidInput, "leading coefficient is zero");

    std::array<Complex, 6> monic{};
    double bound = 0.0;
    for (std::size_t k = 0; k < 6; ++k) {
        monic[k] = q.c[k] / lead;
        if (k < 5) bound = std::max(bound, std::abs(monic[k]));
    }

    Roots x{};
    const double radius = 1.0 + bound;
    for (int j = 0; j < 5; ++j) {
        x[static_cast<std::size_t>(j)] =
            std::polar(radius, 2.0 * std::numbers::pi * j / 5.0 + 0.4);
    }

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        double max_update = 0.0;
        double scale = 1.0;
        for (std::size_t i = 0; i < 5; ++i) {
            Complex denom{1.0};
            for (std::size_t j = 0; j < 5; ++j) {
                if (j != i) denom *= x[i] - x[j];
            }
            if (denom == Complex{}) denom = Complex{std::numeric_limits<double>::epsilon()};
            const Complex update = horner(monic, x[i]) / denom;
            x[i] -= update;
            max_update = std::max(max_update, std::abs(update));
            scale = std::max(scale, std::abs(x[i]));
        }
        converged = max_update < kSweepTolerance * scale;
    }
    std::array<LComplex, 6> wide{};
    for (std::size_t k = 0; k < 6; ++k) wide[k] = LComplex(monic[k]);
    for (auto& root : x) {
        LComplex w(root);
        for (int step = 0; step < kPolishSteps; ++step) {
            const LComplex d = horner_derivative(wide, w);
            if (d == LComplex{}) break;
            w -= horner(wide, w) / d;
        }
        root = {static_cast<double>(w.real()), static_cast<double>(w.imag())};
    }
    // Near a multiple root the sweeps only converge linearly; accept them if
    // the polished roots already satisfy the polynomial to rounding.
    if (!converged && max_relative_residual(q, x) > kStalledResidual) {
        throw SolverError(ErrorKind::NoConvergence, "Durand-Kerner did not converge in 500 sweeps");
    }
    return x;
}

double max_relative_residual(const QuinticCoefficients& q, std::span<const Complex> roots) {
    double worst = 0.0;
    for (const Complex& r : roots) {
        const double scale = q.magnitude(r);
        worst = std::max(worst, scale > 0.0 ? std::abs(q(r)) / scale : 0.0);
    }
    return worst;
}

NearestRoot nearest_root(Complex target, std::span<const Complex> roots) {
    std::vector<Complex> sorted(roots.begin(), roots.end());
    std::sort(sorted.begin(), sorted.end(), lex_less);
    NearestRoot best{{}, std::numeric_limits<double>::infinity()};
    for (const Complex& r : sorted) {
        const double d = std::abs(target - r);
        if (d < best.distance) best = {r, d};
    }
    return best;
}

ArgumentMatch root_with_argument(std::span<const Complex> roots, double lo, double hi,
                                 double eps) {
    ArgumentMatch match;
    for (const Complex& r : roots) {
        const double arg = std::arg(r);
        if (arg >= lo - eps && arg <= hi + eps) {
            if (match.count == 0) match.root = r;
            ++match.count;
        }
    }
    return match;
}

double multiset_distance(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::vector<bool> used(b.size(), false);
    double worst = 0.0;
    for (const Complex& x : a) {
        std::size_t best = b.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(x - b[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_d);
    }
    return worst;
}

bool VietaReport::all_passed() const {
    return std::all_of(passed.begin(), passed.end(), [](bool b) { return b; });
}

VietaReport vieta_check(const QuinticCoefficients& q, std::span<const Complex, 5> roots,
                        double tol) {
    // e[k] = k-th elementary symmetric polynomial, built incrementally.
    std::array<Complex, 6> e{Complex{1.0}};
    for (const Complex& r : roots) {
        for (std::size_t k = 5; k >= 1; --k) e[k] += e[k - 1] * r;
    }
    // e_k is a sum of C(5,k) products of k roots, so cancellation error grows
    // like C(5,k) R^k even when the coefficient itself is zero.
    double radius = 0.0;
    for (const Complex& r : roots) radius = std::max(radius, std::abs(r));
    constexpr double kBinomial[6] = {1, 5, 10, 10, 5, 1};
    VietaReport report;
    for (std::size_t k = 1; k <= 5; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const Complex expected = sign * q.c[5 - k] / q.c[5];
        const double dev = std::abs(e[k] - expected);
        const double scale = std::max({1.0, std::abs(expected), kBinomial[k] * std::pow(radius, static_cast<double>(k))});
        report.deviation[k - 1] = dev;
        report.passed[k - 1] = dev <= tol * scale;
    }
    return report;
}

}  // namespace quintic::oracle
