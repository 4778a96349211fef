#ifndef THETA_AGM_LATTICE_HPP
#define THETA_AGM_LATTICE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "theta_agm/geometry.hpp"

namespace theta_agm {

enum class LatticeKind { square, hexagonal, rectangular, general };

/// A planar lattice stored as a unit-covolume generator matrix plus a
/// density alpha: the point set is alpha^{-1/2} M Z^2 with |det M| = 1.
/// Keeping one internal normalization makes the dual and adjoint formulas
/// uniform; scale is always carried by the density.
class Lattice2D {
public:
    /// alpha^{-1/2} Z^2.
    static Lattice2D von_neumann(double alpha);
    /// alpha^{-1/2} H Z^2 with H = sqrt(2)/3^{1/4} [[1, 1/2], [0, sqrt(3)/2]].
    static Lattice2D hexagonal(double alpha);
    /// alpha^{-1/2} (a Z x (1/a) Z).
    static Lattice2D rectangular(double a, double alpha);
    /// Arbitrary generator; covolume is factored into the density.
    static Lattice2D from_generator(const Mat2& g);

    const Mat2& unit_generator() const { return unit_gen_; }
    Mat2 scaled_generator() const;
    double density() const { return density_; }
    double covolume() const { return 1.0 / density_; }
    LatticeKind kind() const { return kind_; }
    double aspect() const { return aspect_; }

    /// Adjoint (symplectic dual) lattice J M^{-T} Z^2, the lattice of
    /// commuting time-frequency shifts. In the plane it coincides with
    /// alpha * Lambda; density 1/alpha.
    Lattice2D adjoint() const;

    /// Dual lattice M^{-T} Z^2; density 1/alpha.
    Lattice2D dual() const;

    /// The point maximizing the distance to the nearest lattice point:
    /// cell center for square/rectangular, triangle circumcenter for
    /// hexagonal. Only defined for the named families.
    Vec2 deep_hole() const;

    /// Lattice point for integer coordinates (k, l).
    Vec2 point(long k, long l) const;

    /// All lattice points with |p| <= radius (origin included).
    std::vector<Vec2> points_within(double radius, std::size_t cap = 1u << 22) const;

private:
    Lattice2D(const Mat2& unit_gen, double density, LatticeKind kind, double aspect)
        : unit_gen_(unit_gen), density_(density), kind_(kind), aspect_(aspect) {}

    Mat2 unit_gen_;
    double density_;
    LatticeKind kind_;
    double aspect_;
};

enum class RootSystemName { a1xa1, d2, b2, c2, a2, g2 };

struct RootSystem {
    std::optional<RootSystemName> name;
    std::vector<Vec2> roots;
};

/// Outcome of checking the four root-system axioms on a vector set.
struct RootAxiomVerdicts {
    bool spans_plane = false;       // (i)  0 not in R and span(R) = R^2
    bool negation_scaling = false;  // (ii) -v in R; r v in R only for r = +/-1
    bool reflection_closed = false; // (iii) reflections stay in R
    bool integral_cartan = false;   // (iv) 2 (v1.v2)/(v1.v1) integral

    bool all_pass() const {
        return spans_plane && negation_scaling && reflection_closed && integral_cartan;
    }
};

RootAxiomVerdicts validate_root_system(std::span<const Vec2> roots, double tol = 1e-10);

/// The six planar root systems, sized so that each sits inside its host
/// lattice: A1xA1/D2/B2/C2 in Z^2, A2/G2 in the density-1 hexagonal
/// lattice (G2 = A2 plus its 30-degree-rotated sqrt(3)-scaled copy).
RootSystem standard_root_system(RootSystemName name);

Lattice2D host_lattice(RootSystemName name);

const char* root_system_label(RootSystemName name);

/// True when every vector coincides with a lattice point within tol.
bool contained_in_lattice(std::span<const Vec2> roots, const Lattice2D& lattice,
                          double tol = 1e-10);

} // namespace theta_agm

#endif
