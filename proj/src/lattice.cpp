#include "theta_agm/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace theta_agm {

namespace {

void check_density(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("Lattice2D: density must be positive and finite");
}

Mat2 hexagonal_generator() {
    const double c = std::sqrt(2.0) / std::pow(3.0, 0.25);
    return {c, 0.5 * c, 0.0, c * std::sqrt(3.0) / 2.0};
}

} // namespace

Lattice2D Lattice2D::von_neumann(double alpha) {
    check_density(alpha);
    return Lattice2D(Mat2::identity(), alpha, LatticeKind::square, 1.0);
}

Lattice2D Lattice2D::hexagonal(double alpha) {
    check_density(alpha);
    return Lattice2D(hexagonal_generator(), alpha, LatticeKind::hexagonal, 1.0);
}

Lattice2D Lattice2D::rectangular(double a, double alpha) {
    check_density(alpha);
    if (!(a > 0.0) || !std::isfinite(a))
        throw DomainError("Lattice2D: rectangular side must be positive");
    if (a == 1.0) return von_neumann(alpha);
    return Lattice2D({a, 0.0, 0.0, 1.0 / a}, alpha, LatticeKind::rectangular, a);
}

Lattice2D Lattice2D::from_generator(const Mat2& g) {
    const double d = std::abs(g.det());
    if (!(d > 0.0) || !std::isfinite(d))
        throw DomainError("Lattice2D: generator must be nonsingular");
    const double s = std::sqrt(d);
    return Lattice2D(g * (1.0 / s), 1.0 / d, LatticeKind::general, 1.0);
}

Mat2 Lattice2D::scaled_generator() const { return unit_gen_ * (1.0 / std::sqrt(density_)); }

Lattice2D Lattice2D::adjoint() const {
    const Mat2 g = symplectic_j() * unit_gen_.inverse().transpose();
    // The J-rotation turns a hexagonal basis obtuse, where the canonical
    // deep-hole coordinates no longer apply; orthogonal cells survive.
    LatticeKind kind = kind_;
    if (kind_ == LatticeKind::hexagonal || kind_ == LatticeKind::general)
        kind = LatticeKind::general;
    return Lattice2D(g, 1.0 / density_, kind, aspect_);
}

Lattice2D Lattice2D::dual() const {
    const Mat2 g = unit_gen_.inverse().transpose();
    LatticeKind kind = kind_;
    double aspect = aspect_;
    if (kind_ == LatticeKind::hexagonal || kind_ == LatticeKind::general)
        kind = LatticeKind::general;
    else if (kind_ == LatticeKind::rectangular)
        aspect = 1.0 / aspect_;
    return Lattice2D(g, 1.0 / density_, kind, aspect);
}

Vec2 Lattice2D::deep_hole() const {
    switch (kind_) {
        case LatticeKind::square:
        case LatticeKind::rectangular:
            return scaled_generator() * Vec2{0.5, 0.5};
        case LatticeKind::hexagonal:
            return scaled_generator() * Vec2{1.0 / 3.0, 1.0 / 3.0};
        case LatticeKind::general:
            break;
    }
    throw UnsupportedLattice("deep_hole: only defined for the named lattice families");
}

Vec2 Lattice2D::point(long k, long l) const {
    return scaled_generator() * Vec2{static_cast<double>(k), static_cast<double>(l)};
}

std::vector<Vec2> Lattice2D::points_within(double radius, std::size_t cap) const {
    if (!(radius > 0.0))
        throw DomainError("points_within: radius must be positive");
    const Mat2 s = scaled_generator();
    const Mat2 s_inv = s.inverse();
    // (k, l) = S^{-1} p, so |k| <= |row0(S^{-1})| r and likewise for l.
    const long kmax = static_cast<long>(std::floor(s_inv.row(0).norm() * radius)) + 1;
    const long lmax = static_cast<long>(std::floor(s_inv.row(1).norm() * radius)) + 1;
    const std::size_t grid =
        static_cast<std::size_t>(2 * kmax + 1) * static_cast<std::size_t>(2 * lmax + 1);
    if (grid > cap)
        throw CapacityError("points_within: enumeration exceeds capacity cap");

    const double r_tol = radius * (1.0 + 1e-12) + 1e-12;
    std::vector<Vec2> pts;
    pts.reserve(std::min<std::size_t>(grid, 4096));
    for (long k = -kmax; k <= kmax; ++k) {
        for (long l = -lmax; l <= lmax; ++l) {
            const Vec2 p = s * Vec2{static_cast<double>(k), static_cast<double>(l)};
            if (p.norm() <= r_tol) pts.push_back(p);
        }
    }
    return pts;
}

namespace {

bool set_contains(std::span<const Vec2> set, Vec2 v, double tol) {
    return std::any_of(set.begin(), set.end(),
                       [&](Vec2 w) { return (w - v).norm() <= tol; });
}

} // namespace

RootAxiomVerdicts validate_root_system(std::span<const Vec2> roots, double tol) {
    RootAxiomVerdicts out;
    if (roots.empty()) return out;

    // (i) no zero vector and two linearly independent roots
    bool has_zero = false;
    for (Vec2 v : roots)
        if (v.norm() <= tol) has_zero = true;
    bool spans = false;
    for (std::size_t i = 0; i < roots.size() && !spans; ++i)
        for (std::size_t j = i + 1; j < roots.size() && !spans; ++j)
            if (std::abs(symplectic_form(roots[i], roots[j])) >
                tol * std::max(1.0, roots[i].norm() * roots[j].norm()))
                spans = true;
    out.spans_plane = !has_zero && spans;

    // (ii) closure under negation; parallel roots only at ratio +/-1
    bool negation = true;
    for (Vec2 v : roots)
        if (!set_contains(roots, -v, tol)) negation = false;
    bool scaling = true;
    for (Vec2 v : roots) {
        if (v.norm() <= tol) continue;
        for (Vec2 w : roots) {
            const double cross = std::abs(symplectic_form(v, w));
            if (cross > tol * std::max(1.0, v.norm() * w.norm())) continue;
            const double ratio = v.dot(w) / v.norm_sq();
            if (std::abs(std::abs(ratio) - 1.0) > tol) scaling = false;
        }
    }
    out.negation_scaling = negation && scaling;

    // (iii) reflection closure: v2 - 2 (v1.v2)/(v1.v1) v1 in R
    bool reflections = true;
    for (Vec2 v1 : roots) {
        if (v1.norm() <= tol) continue;
        for (Vec2 v2 : roots) {
            const Vec2 refl = v2 - v1 * (2.0 * v1.dot(v2) / v1.norm_sq());
            if (!set_contains(roots, refl, tol)) reflections = false;
        }
    }
    out.reflection_closed = reflections;

    // (iv) Cartan integers
    bool integral = true;
    for (Vec2 v1 : roots) {
        if (v1.norm() <= tol) continue;
        for (Vec2 v2 : roots) {
            const double c = 2.0 * v1.dot(v2) / v1.norm_sq();
            if (std::abs(c - std::round(c)) > tol) integral = false;
        }
    }
    out.integral_cartan = integral;
    return out;
}

RootSystem standard_root_system(RootSystemName name) {
    RootSystem rs;
    rs.name = name;
    auto add_pair = [&](Vec2 v) {
        rs.roots.push_back(v);
        rs.roots.push_back(-v);
    };
    const Lattice2D hex = Lattice2D::hexagonal(1.0);
    switch (name) {
        case RootSystemName::a1xa1:
            add_pair({1.0, 0.0});
            add_pair({0.0, 1.0});
            break;
        case RootSystemName::d2:
            add_pair({1.0, 1.0});
            add_pair({1.0, -1.0});
            break;
        case RootSystemName::b2:
            add_pair({1.0, 0.0});
            add_pair({0.0, 1.0});
            add_pair({1.0, 1.0});
            add_pair({1.0, -1.0});
            break;
        case RootSystemName::c2:
            add_pair({2.0, 0.0});
            add_pair({0.0, 2.0});
            add_pair({1.0, 1.0});
            add_pair({1.0, -1.0});
            break;
        case RootSystemName::a2:
            add_pair(hex.point(1, 0));
            add_pair(hex.point(0, 1));
            add_pair(hex.point(1, -1));
            break;
        case RootSystemName::g2:
            // short roots: first hexagonal shell; long roots: second shell,
            // rotated 30 degrees and sqrt(3) times longer
            add_pair(hex.point(1, 0));
            add_pair(hex.point(0, 1));
            add_pair(hex.point(1, -1));
            add_pair(hex.point(1, 1));
            add_pair(hex.point(2, -1));
            add_pair(hex.point(1, -2));
            break;
    }
    return rs;
}

Lattice2D host_lattice(RootSystemName name) {
    switch (name) {
        case RootSystemName::a1xa1:
        case RootSystemName::d2:
        case RootSystemName::b2:
        case RootSystemName::c2:
            return Lattice2D::von_neumann(1.0);
        case RootSystemName::a2:
        case RootSystemName::g2:
            return Lattice2D::hexagonal(1.0);
    }
    throw DomainError("host_lattice: unknown root system");
}

const char* root_system_label(RootSystemName name) {
    switch (name) {
        case RootSystemName::a1xa1: return "A1xA1";
        case RootSystemName::d2: return "D2";
        case RootSystemName::b2: return "B2";
        case RootSystemName::c2: return "C2";
        case RootSystemName::a2: return "A2";
        case RootSystemName::g2: return "G2";
    }
    return "?";
}

bool contained_in_lattice(std::span<const Vec2> roots, const Lattice2D& lattice, double tol) {
    const Mat2 s = lattice.scaled_generator();
    const Mat2 s_inv = s.inverse();
    for (Vec2 v : roots) {
        const Vec2 coeff = s_inv * v;
        const Vec2 nearest =
            s * Vec2{std::round(coeff.x), std::round(coeff.y)};
        if ((nearest - v).norm() > tol) return false;
    }
    return true;
}

} // namespace theta_agm
