#include "quintic/trig_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "quintic/errors.hpp"

namespace quintic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPiOver5 = kPi / 5.0;
constexpr int kMaxHalvings = 200;

// sin(q pi/2 + phi) for integer q, exact in the quadrant part.
double sin_quadrant(int q, double phi) {
    switch (((q % 4) + 4) % 4) {
        case 0: return std::sin(phi);
        case 1: return std::cos(phi);
        case 2: return -std::sin(phi);
        default: return -std::cos(phi);
    }
}

// Two exact coordinates for a point of an interval.
//
// Zero frame: sigma = zq pi/2 + zc theta + dz eps, eps the distance from the
// zero end. Then theta + 4 sigma, sigma - theta and 5 sigma all split into a
// quadrant multiple plus a small remainder, so no sine cancels near that end.
//
// Pole frame: every pole is a multiple of 2pi/5, so with sigma = pole +
// dp delta we get sin(5 sigma) = dp sin(5 delta) without cancellation.
//
// width = eps + delta is formed from the closed forms of both ends.
struct IntervalFrame {
    int zq;
    double zc;
    double dz;
    double dp;
    double pole;
    double width;
    double theta;
};

IntervalFrame frame_for(const AngularInterval& iv, double theta) {
    const double dp = iv.singular_end == IntervalEnd::Lower ? 1.0 : -1.0;
    switch (iv.k) {
        case -2: return {-2, 1.0, 1.0, dp, iv.pole(), kPiOver5 - theta, theta};
        case -1: return {-1, -0.25, 1.0, dp, iv.pole(), kPi / 10.0 + theta / 4.0, theta};
        case 0: return {0, -0.25, 1.0, dp, iv.pole(), theta / 4.0, theta};
        case 1: return {1, -0.25, -1.0, dp, iv.pole(), kPi / 10.0 - theta / 4.0, theta};
        default: return {2, -0.25, -1.0, dp, iv.pole(), kPiOver5 - theta / 4.0, theta};
    }
}

struct FramePoint {
    double s1;  // sin(theta + 4 sigma)
    double s2;  // sin(sigma - theta)
    double s5;  // sin(5 sigma)
    double cos_sigma;
    double sin_sigma;
    double sigma;
};

// The point at distance eps from the zero end and delta = width - eps from
// the pole; sin(5 sigma) is taken from whichever offset is the smaller.
FramePoint evaluate(const IntervalFrame& fr, double eps, double delta) {
    const double phi = fr.zc * fr.theta + fr.dz * eps;
    FramePoint pt{};
    pt.s1 = std::sin((1.0 + 4.0 * fr.zc) * fr.theta + 4.0 * fr.dz * eps);
    pt.s2 = sin_quadrant(fr.zq, phi - fr.theta);
    pt.s5 = eps <= delta ? sin_quadrant(5 * fr.zq, 5.0 * phi) : fr.dp * std::sin(5.0 * delta);
    pt.cos_sigma = sin_quadrant(fr.zq + 1, phi);
    pt.sin_sigma = sin_quadrant(fr.zq, phi);
    pt.sigma = eps <= delta ? fr.zq * (kPi / 2.0) + phi : fr.pole + fr.dp * delta;
    return pt;
}

// f(sigma) > target, decided in log space so huge xi never overflows.
bool exceeds_target(const FramePoint& pt, double log_target) {
    if (pt.s1 == 0.0 || pt.s2 == 0.0) return false;
    if (pt.s5 == 0.0) return true;
    if (std::signbit(pt.s2) != std::signbit(pt.s5)) return false;  // f < 0
    const double log_f = 4.0 * std::log(std::abs(pt.s1)) + std::log(std::abs(pt.s2)) -
                         5.0 * std::log(std::abs(pt.s5));
    return log_f > log_target;
}

std::string bracket_message(int k) {
    return "no sign change of f - 2 xi in interval k=" + std::to_string(k);
}

Complex polish(Complex y, Complex u, double two_xi, int steps) {
    for (int i = 0; i < steps; ++i) {
        const Complex y2 = y * y;
        const Complex y3 = y2 * y;
        const Complex q = y3 * y * (y + u) - two_xi;
        const Complex dq = y3 * (5.0 * y + 4.0 * u);
        if (dq == Complex{}) break;
        const Complex step = q / dq;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        y -= step;
        if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(y)) break;
    }
    return y;
}

double qnorm_residual(Complex y, Complex u, double xi) {
    const Complex y2 = y * y;
    return std::abs(y2 * y2 * (y + u) - 2.0 * xi) / std::max(1.0, 2.0 * xi);
}

template <typename Map, typename Residual>
RootSet map_roots(const RootSet& in, Map map, Residual residual) {
    RootSet out = in;
    for (auto& rec : out.roots) {
        rec.value = map(rec.value);
        rec.residual = residual(rec.value);
    }
    return out;
}

}  // namespace

double f_sigma(double sigma, double theta) {
    const double s5 = std::sin(5.0 * sigma);
    if (s5 == 0.0) throw SolverError(ErrorKind::PoleEvaluation, "sin(5 sigma) = 0");
    const double s1 = std::sin(theta + 4.0 * sigma);
    const double s2 = std::sin(sigma - theta);
    if (std::abs(s5) < 1e-30) {
        if (s1 == 0.0 || s2 == 0.0) return 0.0;
        const double log_f =
            4.0 * std::log(std::abs(s1)) + std::log(std::abs(s2)) - 5.0 * std::log(std::abs(s5));
        const double magnitude = std::exp(log_f);
        return std::signbit(s2) == std::signbit(s5) ? magnitude : -magnitude;
    }
    const double s1_2 = s1 * s1;
    return s1_2 * s1_2 * s2 / std::pow(s5, 5);
}

double radius_from_sigma(double sigma, double theta) {
    const double s5 = std::sin(5.0 * sigma);
    if (s5 == 0.0) throw SolverError(ErrorKind::PoleEvaluation, "sin(5 sigma) = 0");
    return -std::sin(theta + 4.0 * sigma) / s5;
}

bool is_endpoint_theta(double theta) {
    return std::abs(theta) < 1e-14 || std::abs(theta - kPiOver5) < 1e-14;
}

std::vector<AngularInterval> intervals_for(double theta) {
    if (!(theta >= -1e-14 && theta <= kPiOver5 + 1e-14)) {
        throw SolverError(ErrorKind::OutOfRange, "theta must lie in [0, pi/5]");
    }
    const bool at_zero = std::abs(theta) < 1e-14;
    const bool at_pi5 = std::abs(theta - kPiOver5) < 1e-14;
    using E = IntervalEnd;
    std::vector<AngularInterval> out;
    if (!at_pi5) out.push_back({-2, -kPi + theta, -4.0 * kPiOver5, E::Lower, E::Upper});
    out.push_back({-1, -kPi / 2.0 - theta / 4.0, -2.0 * kPiOver5, E::Lower, E::Upper});
    if (!at_zero) out.push_back({0, -theta / 4.0, 0.0, E::Lower, E::Upper});
    out.push_back({1, 2.0 * kPiOver5, kPi / 2.0 - theta / 4.0, E::Upper, E::Lower});
    out.push_back({2, 4.0 * kPiOver5, kPi - theta / 4.0, E::Upper, E::Lower});
    return out;
}

SigmaSolution bisect_sigma_detail(const AngularInterval& interval, double theta, double xi,
                                  double tol_sigma) {
    if (!(xi > 0.0) || !std::isfinite(xi)) {
        throw SolverError(ErrorKind::InvalidInput, "xi must be positive and finite");
    }
    const IntervalFrame fr = frame_for(interval, theta);
    const double log_target = std::log(2.0 * xi);
    const double w = fr.width;
    const auto at_eps = [&](double eps) { return evaluate(fr, eps, w - eps); };
    const auto at_delta = [&](double delta) { return evaluate(fr, w - delta, delta); };

    // f rises from 0 at the zero end to infinity at the pole. The midpoint
    // decides which half holds the root; that half is then searched in its
    // own offset, stepping geometrically toward its end first.
    double eps = 0.0;
    double delta = 0.0;
    if (exceeds_target(at_eps(0.5 * w), log_target)) {
        double hi = 0.5 * w;
        double lo = hi / 2.0;
        int halvings = 0;
        while (exceeds_target(at_eps(lo), log_target)) {
            hi = lo;
            lo /= 2.0;
            if (++halvings > kMaxHalvings || lo == 0.0) {
                throw SolverError(ErrorKind::BracketFailure, bracket_message(interval.k));
            }
        }
        while (hi - lo > tol_sigma * std::min(1.0, lo)) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            (exceeds_target(at_eps(mid), log_target) ? hi : lo) = mid;
        }
        eps = 0.5 * (lo + hi);
        delta = w - eps;
    } else {
        double far = 0.5 * w;
        double near = far / 2.0;
        int halvings = 0;
        while (!exceeds_target(at_delta(near), log_target)) {
            far = near;
            near /= 2.0;
            if (++halvings > kMaxHalvings || near == 0.0) {
                throw SolverError(ErrorKind::BracketFailure, bracket_message(interval.k));
            }
        }
        while (far - near > tol_sigma * std::min(1.0, near)) {
            const double mid = 0.5 * (near + far);
            if (mid <= near || mid >= far) break;
            (exceeds_target(at_delta(mid), log_target) ? near : far) = mid;
        }
        delta = 0.5 * (near + far);
        eps = w - delta;
    }
    const FramePoint pt = evaluate(fr, eps, delta);
    return {pt.sigma, delta, -pt.s1 / pt.s5, Complex{pt.cos_sigma, pt.sin_sigma}};
}

double bisect_sigma(const AngularInterval& interval, double theta, double xi, double tol_sigma) {
    return bisect_sigma_detail(interval, theta, xi, tol_sigma).sigma;
}

namespace {

// max of r^4 (1 - r) on [0, 1], attained at r = 4/5.
constexpr double kSeamBound = 256.0 / 3125.0;

// Root of r^4 (1 - r) = two_xi in [lo, hi], where the sign changes.
double seam_radius(double lo, double hi, double two_xi) {
    const auto h = [two_xi](double r) { return r * r * r * r * (1.0 - r) - two_xi; };
    const bool rising = h(lo) < 0.0;
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        ((h(mid) < 0.0) == rising ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

RootSet all_roots_form3(const Form3Problem& p, TrigOptions opts) {
    validate(p);
    const auto intervals = intervals_for(p.theta);
    const double two_xi = 2.0 * p.xi;

    RootSet set;
    std::array<bool, 5> found{};
    Complex sum{};
    // At theta = 0 with 2 xi below max of r^4 (1 - r), the k = +-2 roots are
    // both negative real: they sit on the shared end sigma = pi of I_-2 and
    // I_2, where f is 0/0. Solve r^4 (1 - r) = 2 xi on the real axis instead.
    const bool seam = is_endpoint_theta(p.theta) && p.theta < kPi / 10 && two_xi < kSeamBound;
    for (const auto& iv : intervals) {
        double sigma = kPi;
        double r = 0.0;
        Complex start;
        if (seam && (iv.k == -2 || iv.k == 2)) {
            r = iv.k == -2 ? seam_radius(0.8, 1.0, two_xi) : seam_radius(0.0, 0.8, two_xi);
            start = Complex{-r, 0.0};
        } else {
            const SigmaSolution sol = bisect_sigma_detail(iv, p.theta, p.xi, opts.tol_sigma);
            sigma = sol.sigma;
            r = sol.radius;
            start = r * sol.direction;
        }
        const Complex y = polish(start, p.u, two_xi, opts.polish_steps);

        RootRecord rec{y, iv.k, sigma, r, qnorm_residual(y, p.u, p.xi), RootSource::Bisection};
        if (!(rec.residual < opts.tol)) {
            throw SolverError(ErrorKind::ResidualTooLarge,
                              "bisection root k=" + std::to_string(iv.k) + " has residual " +
                                  fmt::format("{:.3g}", rec.residual));
        }
        const auto slot = static_cast<std::size_t>(iv.k + 2);
        set.roots[slot] = rec;
        found[slot] = true;
        sum += y;
    }

    if (intervals.size() == 4) {
        // Sum of the roots of y^5 + u y^4 - 2 xi is -u.
        const auto slot = static_cast<std::size_t>(std::find(found.begin(), found.end(), false) -
                                                   found.begin());
        const Complex y = -p.u - sum;
        RootRecord rec{y,
                       static_cast<int>(slot) - 2,
                       principal_arg(y),
                       std::abs(y),
                       qnorm_residual(y, p.u, p.xi),
                       RootSource::Vieta};
        if (!(rec.residual < opts.tol)) {
            throw SolverError(ErrorKind::VietaResidualFailure,
                              "Vieta root has residual " + fmt::format("{:.3g}", rec.residual));
        }
        set.roots[slot] = rec;
    }
    return set;
}

RootSet all_roots_form2(const Form2Problem& p, TrigOptions opts) {
    const Form3Problem p3 = form2_to_form3(p);
    return map_roots(
        all_roots_form3(p3, opts), [&](Complex y) { return form3_root_to_form2_root(y, p3, p); },
        [&](Complex z) { return form2_residual(z, p.lambda); });
}

RootSet all_roots_form1(const Form1Problem& p, TrigOptions opts) {
    const Form2Problem p2 = form1_to_form2(p);
    const Form3Problem p3 = form2_to_form3(p2);
    RootSet out = map_roots(
        all_roots_form3(p3, opts),
        [&](Complex y) { return p.a / form3_root_to_form2_root(y, p3, p2); },
        [&](Complex x) { return form1_residual(x, p.a); });
    for (const auto& rec : out.roots) {
        if (!(rec.residual < opts.tol)) {
            throw SolverError(ErrorKind::ResidualTooLarge,
                              "Form-1 root k=" + std::to_string(rec.k) + " has residual " +
                                  fmt::format("{:.3g}", rec.residual));
        }
    }
    return out;
}

}  // namespace quintic
