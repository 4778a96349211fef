#ifndef THETA_AGM_SPECIAL_HPP
#define THETA_AGM_SPECIAL_HPP

#include "theta_agm/errors.hpp"
#include "theta_agm/series.hpp"

namespace theta_agm {

/// Nome q of a theta series, restricted to the real interval (0, 1).
/// Equivalently q = e^{-pi tau} with tau > 0 purely "imaginary-axis".
class Nome {
public:
    explicit Nome(double q);

    double value() const noexcept { return q_; }
    /// tau with q = e^{-pi tau}.
    double tau() const noexcept { return tau_; }

private:
    double q_;
    double tau_;
};

enum class TripleKind { quadratic, cubic };

/// An AGM-compatible theta triple at a fixed nome:
/// quadratic (low, mid, high) = (theta2^2, theta4^2, theta3^2) with
/// high^2 = mid^2 + low^2; cubic (c, b, a) with high^3 = mid^3 + low^3.
struct ThetaTriple {
    TripleKind kind;
    double low;
    double mid;
    double high;
    Nome nome;
};

/// Elliptic modulus pair: (k, k') with k^2 + k'^2 = 1 for the quadratic
/// theory, (s, s') with s^3 + s'^3 = 1 for the cubic one.
struct EllipticModuli {
    TripleKind kind;
    double modulus;
    double complement;
    Nome nome;
};

// Jacobi theta constants (z = 0). For tau < 1 the series are evaluated
// through the imaginary transformation (DLMF 20.7.30-33), which keeps all
// summands positive; the stated series is used verbatim for tau >= 1.
double theta2(const Nome& q, const SeriesControl& ctl = {});
double theta3(const Nome& q, const SeriesControl& ctl = {});
double theta4(const Nome& q, const SeriesControl& ctl = {});

// Borwein cubic theta functions:
//   a(q) = sum q^{m^2+mn+n^2},
//   b(q) = sum zeta^{n-m} q^{m^2+mn+n^2}, zeta a primitive cube root of 1,
//   c(q) = sum q^{(m+1/3)^2+(m+1/3)(n+1/3)+(n+1/3)^2}.
// b is real by the +/- pairing of the double sum; the weights are applied
// as exact {1, -1/2} cosine values. The hexagonal modular transform is
// used for q > e^{-2 pi / sqrt 3} for the same accuracy reason as above.
double cubic_a(const Nome& q, const SeriesControl& ctl = {});
double cubic_b(const Nome& q, const SeriesControl& ctl = {});
double cubic_c(const Nome& q, const SeriesControl& ctl = {});

/// Euler Gamma for x > 0.
double gamma_fn(double x);

/// Gauss hypergeometric series 2F1(a, b; c; x) for positive parameters
/// with a + b <= c and 0 <= x < 1. When c = a + b and x is close to 1 the
/// series is replaced by the connection formula in powers of 1 - x
/// (DLMF 15.8.10); see hyp2f1_near_one.
double hyp2f1(double a, double b, double c, double x, const SeriesControl& ctl = {});

/// 2F1(a, b; a+b; 1 - eps) evaluated directly from the complement
/// eps = 1 - x. This is the entry point for arguments so close to 1 that
/// x itself is not representable below 1 in binary64.
double hyp2f1_near_one(double a, double b, double eps, const SeriesControl& ctl = {});

/// Digamma function for x > 0 (recurrence + asymptotic series).
double digamma(double x);

/// Complete elliptic integral of the first kind, K(k) for 0 <= k < 1,
/// computed as (pi/2) / ag2(k', 1).
double elliptic_k(double k);

ThetaTriple quadratic_triple(const Nome& q, const SeriesControl& ctl = {});
ThetaTriple cubic_triple(const Nome& q, const SeriesControl& ctl = {});

/// k = theta2^2/theta3^2 and k' = theta4^2/theta3^2.
EllipticModuli modulus_quadratic(const Nome& q, const SeriesControl& ctl = {});
/// s = c/a and s' = b/a.
EllipticModuli modulus_cubic(const Nome& q, const SeriesControl& ctl = {});

/// A named constant together with the worst disagreement between its
/// independent computation routes.
struct ConstantCheck {
    double value;
    double residual;
};

// Gauss' constant G = theta4(e^{-pi})^2 = 1/ag2(sqrt2, 1) = 2*varpi/(2*pi).
// The three routes (theta series, AGM, hypergeometric series) must agree
// to 1e-10; the theta-based value is returned.
ConstantCheck constant_gauss_check();
double constant_gauss();

// Conjectural Landau constant L+ = Gamma(1/3) Gamma(5/6) / Gamma(1/6),
// cross-checked against ag3(cbrt2, 1)/2 and 1/(2 b(e^{-2 pi/sqrt3})).
ConstantCheck constant_landau_plus_check();
double constant_landau_plus();

// Twice the lemniscate constant, 2*varpi = 2 sqrt2 K(1/sqrt2),
// cross-checked against 2 pi G.
ConstantCheck constant_lemniscate_check();
double constant_lemniscate();

} // namespace theta_agm

#endif
