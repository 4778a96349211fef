#include "theta_agm/lattice_theta.hpp"

#include <cmath>
#include <numbers>

namespace theta_agm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxRadiusGrowth = 10;
constexpr std::size_t kBoxCap = 1u << 23;

void check_args(const Lattice2D& lattice, double alpha) {
    if (std::abs(lattice.density() - 1.0) > 1e-12)
        throw DomainError("lattice theta: unit-density lattice required; rescale explicitly");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("lattice theta: alpha must be positive");
}

// Upper bound on the mass of all lattice points at distance > R from the
// sum's center. Points with distance in [r, r+1) number at most
// pi (r+1+mu)^2 for a unit-covolume lattice with covering radius <= mu,
// and each contributes at most e^{-pi alpha r^2}.
double tail_mass_bound(double radius, double alpha, double mu) {
    double bound = 0.0;
    for (int j = 0; j < 200; ++j) {
        const double r = radius + j;
        const double count = kPi * (r + 1.0 + mu) * (r + 1.0 + mu);
        const double t = count * std::exp(-kPi * alpha * r * r);
        bound += t;
        if (t < 1e-18 * bound) break;
    }
    return bound;
}

double covering_radius_bound(const Mat2& gen) {
    return 0.5 * (gen.col(0).norm() + gen.col(1).norm());
}

double initial_radius(double alpha, double rel_tol) {
    return std::max(3.0, std::sqrt(-std::log(rel_tol) / (kPi * alpha)) + 2.0);
}

} // namespace

LatticeSum theta_lattice(const Lattice2D& lattice, Vec2 b, double alpha,
                         const SeriesControl& ctl) {
    ctl.validate();
    check_args(lattice, alpha);
    const Mat2 gen = lattice.unit_generator();
    const Mat2 inv = gen.inverse();
    const double mu = covering_radius_bound(gen);

    double radius = initial_radius(alpha, ctl.rel_tol);
    for (int attempt = 0; attempt < kMaxRadiusGrowth; ++attempt) {
        // integer box around the disk |l + b| <= radius
        const Vec2 center = inv * (-b);
        const long k_rad = static_cast<long>(std::ceil(inv.row(0).norm() * radius)) + 1;
        const long l_rad = static_cast<long>(std::ceil(inv.row(1).norm() * radius)) + 1;
        if (static_cast<std::size_t>(2 * k_rad + 1) * static_cast<std::size_t>(2 * l_rad + 1) >
            kBoxCap)
            throw NonConvergence("theta_lattice: truncation box exceeds capacity");

        const long k0 = static_cast<long>(std::llround(center.x));
        const long l0 = static_cast<long>(std::llround(center.y));
        CompensatedSum sum;
        for (long k = k0 - k_rad; k <= k0 + k_rad; ++k) {
            for (long l = l0 - l_rad; l <= l0 + l_rad; ++l) {
                const Vec2 p =
                    gen * Vec2{static_cast<double>(k), static_cast<double>(l)} + b;
                sum.add(std::exp(-kPi * alpha * p.norm_sq()));
            }
        }
        const double bound = tail_mass_bound(radius, alpha, mu);
        if (bound < ctl.rel_tol * sum.value())
            return {sum.value(), {radius, bound}};
        radius *= 1.4;
    }
    throw NonConvergence("theta_lattice: tail certificate not met within radius cap");
}

LatticeSum theta_lattice_dual(const Lattice2D& lattice, Vec2 b, double alpha,
                              const SeriesControl& ctl) {
    ctl.validate();
    check_args(lattice, alpha);
    const Mat2 gen = lattice.unit_generator();
    const Mat2 inv = gen.inverse();
    const double mu = covering_radius_bound(gen);

    double radius = initial_radius(alpha, ctl.rel_tol);
    for (int attempt = 0; attempt < kMaxRadiusGrowth; ++attempt) {
        const long k_rad = static_cast<long>(std::ceil(inv.row(0).norm() * radius)) + 1;
        const long l_rad = static_cast<long>(std::ceil(inv.row(1).norm() * radius)) + 1;
        if (static_cast<std::size_t>(2 * k_rad + 1) * static_cast<std::size_t>(2 * l_rad + 1) >
            kBoxCap)
            throw NonConvergence("theta_lattice_dual: truncation box exceeds capacity");

        // half-lattice sweep; +/-l paired into 2 cos(2 pi sigma(b, l))
        CompensatedSum sum;
        sum.add(1.0);
        for (long k = 0; k <= k_rad; ++k) {
            const long l_begin = (k == 0) ? 1 : -l_rad;
            for (long l = l_begin; l <= l_rad; ++l) {
                const Vec2 p = gen * Vec2{static_cast<double>(k), static_cast<double>(l)};
                const double w = std::exp(-kPi * alpha * p.norm_sq());
                sum.add(2.0 * w * std::cos(2.0 * kPi * symplectic_form(b, p)));
            }
        }
        const double bound = tail_mass_bound(radius, alpha, mu);
        if (bound < ctl.rel_tol * std::abs(sum.value()))
            return {sum.value(), {radius, bound}};
        radius *= 1.4;
    }
    throw NonConvergence("theta_lattice_dual: tail certificate not met within radius cap");
}

double check_functional_equation(const Lattice2D& lattice, Vec2 b, double alpha,
                                 const SeriesControl& ctl) {
    const double lhs = theta_lattice(lattice, b, alpha, ctl).value;
    const double rhs = theta_lattice_dual(lattice, b, 1.0 / alpha, ctl).value / alpha;
    return std::abs(lhs - rhs) / lhs;
}

} // namespace theta_agm
