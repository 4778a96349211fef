#include "theta_agm/gabor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "theta_agm/agm.hpp"
#include "theta_agm/series.hpp"
#include "theta_agm/special.hpp"

namespace theta_agm {

namespace {

constexpr double kPi = std::numbers::pi;
// e^{-x} underflows past this; saturated rungs report exact 1.0 bounds.
constexpr double kExpUnderflow = 745.0;

FrameBounds saturated_bounds(double density, LatticeKind kind, double aspect) {
    FrameBounds fb;
    fb.lower = 1.0;
    fb.upper = 1.0;
    fb.density = density;
    fb.lattice_kind = kind;
    fb.aspect = aspect;
    fb.method = BoundsMethod::closed_form;
    fb.saturated = true;
    return fb;
}

void check_ladder_index(long long n) {
    if (n < 1) throw DomainError("closed-form bounds: N must be a positive integer");
}

// ---- Janssen character sum -------------------------------------------------

struct CharacterTerm {
    double k;
    double l;
    double w;
};

// F in lattice coordinates z = alpha^{-1/2} M (u, v):
// F(u, v) = sum w_{k,l} cos(2 pi (k v - l u)), w = e^{-pi N |M(k,l)|^2}.
struct CharacterSum {
    std::vector<CharacterTerm> terms;

    double operator()(double u, double v) const {
        CompensatedSum sum;
        for (const CharacterTerm& t : terms)
            sum.add(t.w * std::cos(2.0 * kPi * (t.k * v - t.l * u)));
        return sum.value();
    }
};

CharacterSum build_character_sum(const Mat2& unit_gen, double n_value) {
    // keep weights down to ~1e-19; |M(k,l)| <= sqrt(43/(pi N))
    const double reach = std::sqrt(43.0 / (kPi * n_value));
    const Mat2 inv = unit_gen.inverse();
    const long k_rad = static_cast<long>(std::ceil(inv.row(0).norm() * reach)) + 1;
    const long l_rad = static_cast<long>(std::ceil(inv.row(1).norm() * reach)) + 1;
    CharacterSum f;
    for (long k = -k_rad; k <= k_rad; ++k) {
        for (long l = -l_rad; l <= l_rad; ++l) {
            const Vec2 p = unit_gen * Vec2{static_cast<double>(k), static_cast<double>(l)};
            const double w = std::exp(-kPi * n_value * p.norm_sq());
            if (w >= 1e-19)
                f.terms.push_back({static_cast<double>(k), static_cast<double>(l), w});
        }
    }
    return f;
}

// ---- Nelder-Mead simplex (2D) ----------------------------------------------

struct SimplexResult {
    Vec2 point;
    double value;
};

template <typename F>
SimplexResult nelder_mead(const F& f, Vec2 start, double step, double dom_tol) {
    std::array<Vec2, 3> x{start, start + Vec2{step, 0.0}, start + Vec2{0.0, step}};
    std::array<double, 3> fx{f(x[0].x, x[0].y), f(x[1].x, x[1].y), f(x[2].x, x[2].y)};

    auto order = [&] {
        if (fx[0] > fx[1]) { std::swap(fx[0], fx[1]); std::swap(x[0], x[1]); }
        if (fx[1] > fx[2]) { std::swap(fx[1], fx[2]); std::swap(x[1], x[2]); }
        if (fx[0] > fx[1]) { std::swap(fx[0], fx[1]); std::swap(x[0], x[1]); }
    };

    for (int iter = 0; iter < 500; ++iter) {
        order();
        const double diam = std::max((x[1] - x[0]).norm(), (x[2] - x[0]).norm());
        if (diam < dom_tol) return {x[0], fx[0]};

        const Vec2 centroid = (x[0] + x[1]) * 0.5;
        const Vec2 refl = centroid + (centroid - x[2]);
        const double f_refl = f(refl.x, refl.y);
        if (std::isnan(f_refl))
            throw OptimizationError("nelder_mead: objective produced NaN");

        if (f_refl < fx[0]) {
            const Vec2 exp_pt = centroid + (centroid - x[2]) * 2.0;
            const double f_exp = f(exp_pt.x, exp_pt.y);
            if (f_exp < f_refl) { x[2] = exp_pt; fx[2] = f_exp; }
            else { x[2] = refl; fx[2] = f_refl; }
        } else if (f_refl < fx[1]) {
            x[2] = refl;
            fx[2] = f_refl;
        } else {
            const Vec2 contr = centroid + (x[2] - centroid) * 0.5;
            const double f_contr = f(contr.x, contr.y);
            if (f_contr < fx[2]) { x[2] = contr; fx[2] = f_contr; }
            else {
                // shrink toward the best vertex
                x[1] = x[0] + (x[1] - x[0]) * 0.5;
                x[2] = x[0] + (x[2] - x[0]) * 0.5;
                fx[1] = f(x[1].x, x[1].y);
                fx[2] = f(x[2].x, x[2].y);
            }
        }
    }
    order();
    return {x[0], fx[0]};
}

double wrap_unit(double u) {
    double r = u - std::floor(u);
    if (r >= 1.0) r -= 1.0;
    return r;
}

} // namespace

FrameBounds bounds_square_closed(long long n) {
    check_ladder_index(n);
    const double density = 2.0 * static_cast<double>(n);
    const double x = kPi * static_cast<double>(n);
    if (x > kExpUnderflow) return saturated_bounds(density, LatticeKind::square, 1.0);
    const Nome q{std::exp(-x)};
    const double t3 = theta3(q);
    const double t4 = theta4(q);
    FrameBounds fb;
    fb.lower = t4 * t4;
    fb.upper = t3 * t3;
    fb.density = density;
    fb.lattice_kind = LatticeKind::square;
    fb.method = BoundsMethod::closed_form;
    return fb;
}

FrameBounds bounds_hexagonal_closed(long long n) {
    check_ladder_index(n);
    const double density = 2.0 * static_cast<double>(n);
    const double x = 2.0 * kPi * static_cast<double>(n) / std::sqrt(3.0);
    if (x > kExpUnderflow) return saturated_bounds(density, LatticeKind::hexagonal, 1.0);
    const Nome q{std::exp(-x)};
    FrameBounds fb;
    fb.lower = cubic_b(q);
    fb.upper = cubic_a(q);
    fb.density = density;
    fb.lattice_kind = LatticeKind::hexagonal;
    fb.method = BoundsMethod::closed_form;
    return fb;
}

FrameBounds bounds_rectangular_closed(double a, long long n) {
    check_ladder_index(n);
    if (!(a > 0.0) || !std::isfinite(a))
        throw DomainError("bounds_rectangular_closed: side must be positive");
    const double density = 2.0 * static_cast<double>(n);
    const double xa = kPi * static_cast<double>(n) * a * a;
    const double xb = kPi * static_cast<double>(n) / (a * a);
    double f4a = 1.0, f3a = 1.0, f4b = 1.0, f3b = 1.0;
    bool saturated = false;
    if (xa > kExpUnderflow) {
        saturated = true;
    } else {
        const Nome qa{std::exp(-xa)};
        f4a = theta4(qa);
        f3a = theta3(qa);
    }
    if (xb > kExpUnderflow) {
        saturated = true;
    } else {
        const Nome qb{std::exp(-xb)};
        f4b = theta4(qb);
        f3b = theta3(qb);
    }
    FrameBounds fb;
    fb.lower = f4a * f4b;
    fb.upper = f3a * f3b;
    fb.density = density;
    fb.lattice_kind = a == 1.0 ? LatticeKind::square : LatticeKind::rectangular;
    fb.aspect = a;
    fb.method = BoundsMethod::closed_form;
    fb.saturated = saturated;
    return fb;
}

FrameBounds bounds_janssen_numeric(const Lattice2D& lattice, const JanssenOptions& opt) {
    if (opt.grid < 8)
        throw DomainError("bounds_janssen_numeric: grid must be at least 8");
    if (!(opt.refine_tol > 0.0))
        throw DomainError("bounds_janssen_numeric: refine_tol must be positive");
    const double density = lattice.density();
    const double n_real = 0.5 * density;
    const long long n_int = std::llround(n_real);
    if (n_int < 1 || std::abs(n_real - static_cast<double>(n_int)) > 1e-9)
        throw DensityError("bounds_janssen_numeric: density must be an even integer 2N");

    const CharacterSum f = build_character_sum(lattice.unit_generator(),
                                               static_cast<double>(n_int));

    // initial mesh over one fundamental torus cell
    const int g = opt.grid;
    std::vector<double> mesh(static_cast<std::size_t>(g) * g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            mesh[static_cast<std::size_t>(i) * g + j] =
                f(static_cast<double>(i) / g, static_cast<double>(j) / g);

    auto at = [&](int i, int j) {
        return mesh[static_cast<std::size_t>((i % g + g) % g) * g + ((j % g + g) % g)];
    };

    // collect local minima on the torus mesh, keep the best few
    struct Cell {
        double value;
        int i, j;
    };
    std::vector<Cell> minima;
    int max_i = 0, max_j = 0;
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) {
            const double v = at(i, j);
            if (v > at(max_i, max_j)) { max_i = i; max_j = j; }
            bool is_min = true;
            for (int di = -1; di <= 1 && is_min; ++di)
                for (int dj = -1; dj <= 1 && is_min; ++dj)
                    if ((di || dj) && at(i + di, j + dj) < v) is_min = false;
            if (is_min) minima.push_back({v, i, j});
        }
    }
    std::sort(minima.begin(), minima.end(),
              [](const Cell& a, const Cell& b) { return a.value < b.value; });
    if (minima.size() > 4) minima.resize(4);
    if (minima.empty())
        throw OptimizationError("bounds_janssen_numeric: no mesh minimum found");

    const double step = 0.5 / g;
    SimplexResult best_min{{0.0, 0.0}, std::numeric_limits<double>::infinity()};
    for (const Cell& c : minima) {
        const SimplexResult r = nelder_mead(
            [&](double u, double v) { return f(u, v); },
            Vec2{static_cast<double>(c.i) / g, static_cast<double>(c.j) / g}, step,
            opt.refine_tol);
        if (r.value < best_min.value) best_min = r;
    }

    const SimplexResult max_r = nelder_mead(
        [&](double u, double v) { return -f(u, v); },
        Vec2{static_cast<double>(max_i) / g, static_cast<double>(max_j) / g}, step,
        opt.refine_tol);

    // the maximum must sit at a lattice point (z = 0 on the torus)
    const Mat2 scaled = lattice.scaled_generator();
    const double du = max_r.point.x - std::round(max_r.point.x);
    const double dv = max_r.point.y - std::round(max_r.point.y);
    const Vec2 max_offset = scaled * Vec2{du, dv};
    if (max_offset.norm() > std::max(1e-6, 100.0 * opt.refine_tol))
        throw OptimizationError("bounds_janssen_numeric: maximum not at a lattice point");

    FrameBounds fb;
    fb.lower = best_min.value;
    fb.upper = -max_r.value;
    fb.density = density;
    fb.lattice_kind = lattice.kind();
    fb.aspect = lattice.aspect();
    fb.method = BoundsMethod::janssen_numeric;
    fb.minimizer = scaled * Vec2{wrap_unit(best_min.point.x), wrap_unit(best_min.point.y)};
    return fb;
}

double bessel_bound(const Lattice2D& lattice) {
    // adjoint points are alpha^{1/2} M (k, l); weights e^{-(pi/2)|l°|^2}
    const double alpha = lattice.density();
    const Mat2 gen = lattice.unit_generator();
    const Mat2 inv = gen.inverse();
    const double reach = std::sqrt(86.0 / kPi) / std::sqrt(alpha);
    const long k_rad = static_cast<long>(std::ceil(inv.row(0).norm() * reach)) + 1;
    const long l_rad = static_cast<long>(std::ceil(inv.row(1).norm() * reach)) + 1;
    CompensatedSum sum;
    for (long k = -k_rad; k <= k_rad; ++k) {
        for (long l = -l_rad; l <= l_rad; ++l) {
            const Vec2 p = gen * Vec2{static_cast<double>(k), static_cast<double>(l)};
            sum.add(std::exp(-0.5 * kPi * alpha * p.norm_sq()));
        }
    }
    return sum.value();
}

AgmBoundSequence agm_bound_sequence(LatticeKind kind, int n_max) {
    if (kind != LatticeKind::square && kind != LatticeKind::hexagonal)
        throw DomainError("agm_bound_sequence: square or hexagonal only");
    if (n_max < 1 || n_max > 32)
        throw DomainError("agm_bound_sequence: n_max must be in [1, 32]");

    AgmBoundSequence seq;
    seq.kind = kind;
    double lower_it = 0.0, upper_it = 0.0;
    long long n_value = 1;
    for (int i = 1; i <= n_max; ++i) {
        const FrameBounds closed = (kind == LatticeKind::square)
                                       ? bounds_square_closed(n_value)
                                       : bounds_hexagonal_closed(n_value);
        if (i == 1) {
            lower_it = closed.lower;
            upper_it = closed.upper;
        } else if (kind == LatticeKind::square) {
            const double up = 0.5 * (lower_it + upper_it);
            const double lo = std::sqrt(lower_it * upper_it);
            upper_it = up;
            lower_it = lo;
        } else {
            const double up = (upper_it + 2.0 * lower_it) / 3.0;
            const double lo = std::cbrt(
                lower_it * ((lower_it * lower_it + lower_it * upper_it + upper_it * upper_it) / 3.0));
            upper_it = up;
            lower_it = lo;
        }
        if (std::abs(closed.lower - lower_it) > 1e-11 * closed.lower ||
            std::abs(closed.upper - upper_it) > 1e-11 * closed.upper)
            throw NonConvergence("agm_bound_sequence: closed form and AGM recursion disagree");
        seq.steps.push_back({closed.density, closed.lower, closed.upper, lower_it, upper_it,
                             closed.saturated});
        seq.saturated = seq.saturated || closed.saturated;
        n_value *= (kind == LatticeKind::square) ? 2 : 3;
    }
    return seq;
}

KappaSequence kappa_sequence(LatticeKind kind, int n_max) {
    if (kind != LatticeKind::square && kind != LatticeKind::hexagonal)
        throw DomainError("kappa_sequence: square or hexagonal only");
    if (n_max < 1 || n_max > 64)
        throw DomainError("kappa_sequence: n_max must be in [1, 64]");

    KappaSequence seq;
    seq.kind = kind;
    double kappa =
        (kind == LatticeKind::square) ? std::sqrt(2.0) : std::cbrt(2.0);
    double density = 2.0;
    const double cbrt3 = std::cbrt(3.0);
    for (int i = 1; i <= n_max; ++i) {
        seq.densities.push_back(density);
        seq.kappas.push_back(kappa);
        if (kind == LatticeKind::square) {
            const double root = std::sqrt(kappa);
            kappa = 0.5 * (1.0 / root + root);
            density *= 2.0;
        } else {
            kappa = cbrt3 / 3.0 * (kappa + 2.0) / std::cbrt(1.0 + kappa + kappa * kappa);
            density *= 3.0;
        }
        // rounding may undershoot the invariant kappa >= 1 by one ulp
        kappa = std::max(kappa, 1.0);
    }
    return seq;
}

ConjectureConstants conjecture_constants() {
    auto c_of = [](double r) {
        return 2.0 * kPi * r / std::tan(kPi / r) * gamma_fn(2.0 / r) * gamma_fn(2.0 / r) /
               (gamma_fn(1.0 / r) * gamma_fn(1.0 / r) * gamma_fn(1.0 / r) * gamma_fn(1.0 / r));
    };
    ConjectureConstants c{c_of(3.0), c_of(4.0)};
    if (!(c.c4 > c.c3))
        throw NonConvergence("conjecture_constants: C4 > C3 violated numerically");
    return c;
}

} // namespace theta_agm
