#ifndef THETA_AGM_GABOR_HPP
#define THETA_AGM_GABOR_HPP

#include <optional>
#include <vector>

#include "theta_agm/lattice.hpp"

namespace theta_agm {

enum class BoundsMethod { closed_form, janssen_numeric };

/// Sharp spectral bounds of the volume-normalized Gaussian Gabor frame
/// operator: A ||f||^2 <= <S f, f> <= B ||f||^2 with A <= 1 <= B.
struct FrameBounds {
    double lower = 0.0; // A
    double upper = 0.0; // B
    double density = 0.0;
    LatticeKind lattice_kind = LatticeKind::general;
    double aspect = 1.0;
    BoundsMethod method = BoundsMethod::closed_form;
    /// Closed form hit exp underflow; both bounds equal 1 to full binary64
    /// precision rather than carrying denormal garbage.
    bool saturated = false;
    /// Location of the spectral minimum (janssen_numeric only).
    std::optional<Vec2> minimizer;

    double kappa() const { return upper / lower; }
};

/// Square lattice of density 2N: A = theta4(e^{-pi N})^2, B = theta3(e^{-pi N})^2.
FrameBounds bounds_square_closed(long long n);

/// Hexagonal lattice of density 2N with q = e^{-2 pi N/sqrt3}: A = b(q), B = a(q).
FrameBounds bounds_hexagonal_closed(long long n);

/// Rectangular a x (1/a) lattice of density 2N, q = e^{-pi}:
/// A = theta4(q^{N a^2}) theta4(q^{N/a^2}), B analogous with theta3.
FrameBounds bounds_rectangular_closed(double a, long long n);

struct JanssenOptions {
    int grid = 32;            // initial mesh per torus direction
    double refine_tol = 1e-12; // simplex domain tolerance
};

/// Numerical extremization of the Janssen-duality character sum
///   F(z) = sum_{l° in L°} e^{-(pi/2)|l°|^2} cos(2 pi sigma(l°, z))
/// over one fundamental cell; A = min F, B = max F (attained at z = 0).
/// Requires density 2N; throws DensityError otherwise.
FrameBounds bounds_janssen_numeric(const Lattice2D& lattice, const JanssenOptions& opt = {});

/// Bessel bound B~ = sum_{l° in L°} e^{-(pi/2)|l°|^2}; valid upper bound
/// (not necessarily sharp) at any density.
double bessel_bound(const Lattice2D& lattice);

/// One rung of the density ladder, carried by both available routes.
struct AgmBoundStep {
    double density = 0.0;
    double lower_closed = 0.0;
    double upper_closed = 0.0;
    double lower_iterated = 0.0; // AGM recursion applied to the previous rung
    double upper_iterated = 0.0;
    bool saturated = false;
};

struct AgmBoundSequence {
    LatticeKind kind = LatticeKind::square;
    std::vector<AgmBoundStep> steps;
    bool saturated = false;
};

/// Frame-bound ladder along densities 2^n (square) or 2*3^{n-1}
/// (hexagonal), n = 1..n_max. Each rung is produced both by the closed
/// form and by one AGM step from the previous rung; the routes must agree
/// to 1e-11 relative.
AgmBoundSequence agm_bound_sequence(LatticeKind kind, int n_max);

struct KappaSequence {
    LatticeKind kind = LatticeKind::square;
    std::vector<double> densities;
    std::vector<double> kappas;
};

/// Condition numbers along the same ladders via the closed recursions
/// kappa' = (kappa^{-1/2} + kappa^{1/2})/2 (square, from kappa = sqrt2) and
/// kappa' = 3^{1/3}/3 (kappa+2)(1+kappa+kappa^2)^{-1/3} (hexagonal, from cbrt2).
KappaSequence kappa_sequence(LatticeKind kind, int n_max);

struct ConjectureConstants {
    double c3 = 0.0;
    double c4 = 0.0;
};

/// C_r = (2 pi r / tan(pi/r)) Gamma(2/r)^2 / Gamma(1/r)^4 for r = 3, 4.
ConjectureConstants conjecture_constants();

} // namespace theta_agm

#endif
