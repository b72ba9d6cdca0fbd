#include "specwave/field.hpp"

#include <cmath>
#include <stdexcept>

namespace specwave {

double stored_norm(const SpectralField& v) {
    double s = 0.0;
    for (const auto& [mode, c] : v.coeffs()) s += v.weight().weight(mode) * std::abs(c);
    return s;
}

double norm(const SpectralField& v) { return stored_norm(v) + v.tail_budget(); }

SpectralField linear_combine(double a, const SpectralField& u, double b, const SpectralField& v) {
    if (u.weight() != v.weight())
        throw std::invalid_argument("linear_combine: mismatched weight configs");
    SpectralField out(u.weight());
    for (const auto& [mode, c] : u.coeffs()) out.set(mode.m, mode.n, a * c);
    for (const auto& [mode, c] : v.coeffs()) {
        const double merged = out.coeff(mode.m, mode.n) + b * c;
        out.set(mode.m, mode.n, merged);
    }
    out.set_tail(std::abs(a) * u.tail_budget() + std::abs(b) * v.tail_budget());
    return out;
}

double evaluate(const SpectralField& v, double tau, double x) {
    double s = 0.0;
    for (const auto& [mode, c] : v.coeffs())
        s += c * std::sin((2 * mode.m + 1) * tau) * std::sin((2 * mode.n + 1) * x);
    return s;
}

SpectralField project(const SpectralField& v, Subspace s) {
    SpectralField out(v.weight());
    for (const auto& [mode, c] : v.coeffs())
        if (in_subspace(mode, s)) out.set(mode.m, mode.n, c);
    if (s == Subspace::Z1 || s == Subspace::Z2) out.set_tail(v.tail_budget());
    return out;
}

SpectralField truncate_by_degree(const SpectralField& v, int max_degree) {
    SpectralField out(v.weight());
    double dropped = 0.0;
    for (const auto& [mode, c] : v.coeffs()) {
        if (mode.m + mode.n + 1 > max_degree)
            dropped += v.weight().weight(mode) * std::abs(c);
        else
            out.set(mode.m, mode.n, c);
    }
    out.set_tail(v.tail_budget() + dropped);
    return out;
}

SpectralField rescale(const SpectralField& v, int m, int n) {
    if (m <= 0 || n <= 0 || m % 2 == 0 || n % 2 == 0)
        throw std::domain_error("rescale: image not representable in X (m, n must be odd)");
    SpectralField out(v.weight());
    for (const auto& [mode, c] : v.coeffs()) {
        const int mt = (m * (2 * mode.m + 1) - 1) / 2;
        const int nt = (n * (2 * mode.n + 1) - 1) / 2;
        out.set(mt, nt, n * c);
    }
    out.set_tail(n * v.tail_budget());
    return out;
}

SpectralField focusing_transform(const SpectralField& v, double omega) {
    if (!(omega > 0.0)) throw std::domain_error("focusing_transform: omega must be positive");
    SpectralField out(v.weight());
    for (const auto& [mode, c] : v.coeffs()) out.set(mode.n, mode.m, c / omega);
    out.set_tail(v.tail_budget() / omega);
    return out;
}

}  // namespace specwave
