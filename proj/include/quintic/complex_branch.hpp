#pragma once

// n-th roots with the argument of the result confined to [-pi/n, pi/n).
//
// The interval is closed on the left, so for inputs on the negative real axis
// the root lands on -pi/n rather than the usual principal value pi/n. Every
// reduction and iteration map in this library depends on that choice.

#include <complex>
#include <concepts>
#include <numbers>

namespace quintic {

using Complex = std::complex<double>;

/// Argument in (-pi, pi]. A negative real with a signed-zero imaginary part
/// reports pi, not -pi.
template <std::floating_point T>
T principal_arg(std::complex<T> z) {
    T arg = std::atan2(z.imag(), z.real());
    if (arg == -std::numbers::pi_v<T>) arg = std::numbers::pi_v<T>;
    return arg;
}

/// Root w of w^n = z with Arg(w) in [-pi/n, pi/n). branch_nth_root(0, n) is 0.
template <std::floating_point T>
std::complex<T> branch_nth_root(std::complex<T> z, int n) {
    if (z == std::complex<T>{}) return {};
    const T bound = std::numbers::pi_v<T> / static_cast<T>(n);
    T arg = principal_arg(z) / static_cast<T>(n);
    if (arg >= bound) arg = -bound;
    const T modulus = std::pow(std::abs(z), T{1} / static_cast<T>(n));
    return std::polar(modulus, arg);
}

/// Double-precision entry point; evaluated in long double and rounded once.
inline Complex branch_nth_root(Complex z, int n) {
    const auto w = branch_nth_root(std::complex<long double>(z), n);
    return {static_cast<double>(w.real()), static_cast<double>(w.imag())};
}

/// branch_nth_root(z, q) raised to the integer power p.
template <std::floating_point T>
std::complex<T> rational_power(std::complex<T> z, int p, int q) {
    const std::complex<T> root = branch_nth_root(z, q);
    std::complex<T> result{1};
    std::complex<T> base = p < 0 ? std::complex<T>{1} / root : root;
    for (unsigned e = static_cast<unsigned>(p < 0 ? -p : p); e != 0; e >>= 1) {
        if (e & 1u) result *= base;
        base *= base;
    }
    return result;
}

inline Complex rational_power(Complex z, int p, int q) {
    const auto w = rational_power(std::complex<long double>(z), p, q);
    return {static_cast<double>(w.real()), static_cast<double>(w.imag())};
}

}  // namespace quintic
