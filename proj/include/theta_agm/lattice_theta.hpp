#ifndef THETA_AGM_LATTICE_THETA_HPP
#define THETA_AGM_LATTICE_THETA_HPP

#include "theta_agm/lattice.hpp"
#include "theta_agm/series.hpp"

namespace theta_agm {

/// A-posteriori certificate for a truncated Gaussian lattice sum: every
/// lattice point beyond `radius` was discarded, and the discarded mass is
/// provably below `discarded_mass_bound`.
struct TailBound {
    double radius = 0.0;
    double discarded_mass_bound = 0.0;
};

struct LatticeSum {
    double value = 0.0;
    TailBound tail;
};

/// Gaussian lattice sum theta_L(b; alpha) = sum_{l in L} e^{-pi alpha |l+b|^2}
/// for a unit-density lattice. The truncation radius is certified by a
/// covering-radius ring bound; NonConvergence if no radius satisfies the
/// requested tolerance within the enumeration cap.
LatticeSum theta_lattice(const Lattice2D& lattice, Vec2 b, double alpha,
                         const SeriesControl& ctl = {});

/// Symplectic dual sum theta^_L(b; alpha)
///   = sum_{l in L} e^{-pi alpha |l|^2} e^{2 pi i sigma(b, l)}.
/// The +/-l pairing keeps the arithmetic real (paired cosines).
LatticeSum theta_lattice_dual(const Lattice2D& lattice, Vec2 b, double alpha,
                              const SeriesControl& ctl = {});

/// Relative residual of the functional equation
///   theta_L(b; alpha) = (1/alpha) theta^_L(b; 1/alpha),
/// the symplectic Poisson summation formula in action.
double check_functional_equation(const Lattice2D& lattice, Vec2 b, double alpha,
                                 const SeriesControl& ctl = {});

} // namespace theta_agm

#endif
