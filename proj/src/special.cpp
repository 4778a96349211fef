#include "theta_agm/special.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>

#include "theta_agm/agm.hpp"

namespace theta_agm {

namespace {

constexpr double kPi = std::numbers::pi;
// Transform threshold slack: nomes sitting exactly on the self-dual points
// (e^{-pi}, e^{-2 pi/sqrt 3}) are evaluated by the direct series so that
// cross-checks against AGM/hypergeometric routes stay independent.
constexpr double kTransformSlack = 1e-12;

// theta2(q) = 2 q^{1/4} sum_{k>=0} q^{k(k+1)}; all terms positive.
double theta2_series(double q, const SeriesControl& ctl) {
    CompensatedSum sum;
    sum.add(1.0);
    double term = 1.0;
    const double q2 = q * q;
    double ratio = q2; // q^{2(k+1)} for k = 0
    for (std::size_t k = 0; k < ctl.max_terms; ++k) {
        term *= ratio;
        ratio *= q2;
        sum.add(term);
        if (term < ctl.rel_tol * sum.value())
            return 2.0 * std::pow(q, 0.25) * sum.value();
    }
    throw NonConvergence("theta2: term cap reached");
}

// theta3(q) = 1 + 2 sum_{k>=1} q^{k^2}, theta4 the alternating variant.
double theta34_series(double q, bool alternating, const SeriesControl& ctl) {
    CompensatedSum sum;
    sum.add(1.0);
    double term = 1.0;
    double ratio = q; // q^{2k+1} for k = 0
    const double q2 = q * q;
    double sign = 1.0;
    for (std::size_t k = 0; k < ctl.max_terms; ++k) {
        term *= ratio;
        ratio *= q2;
        if (alternating) sign = -sign;
        sum.add(2.0 * (alternating ? sign : 1.0) * term);
        if (term < 0.5 * ctl.rel_tol * std::abs(sum.value()))
            return sum.value();
    }
    throw NonConvergence("theta3/theta4: term cap reached");
}

double theta3_series(double q, const SeriesControl& ctl) { return theta34_series(q, false, ctl); }
double theta4_series(double q, const SeriesControl& ctl) { return theta34_series(q, true, ctl); }

// Cubic theta double sums, accumulated over square rings
// max(|m|,|n|) = M. The quadratic form satisfies m^2+mn+n^2 >= M^2/2 on
// ring M, so the discarded tail is below sum_{j>M} 8 j q^{(j-s)^2/2} with
// s the coordinate shift (0 or 1/3).
enum class CubicKind { a, b, c };

double cubic_ring_tail(double q, int from, double shift) {
    double tail = 0.0;
    for (int j = from; j < from + 80; ++j) {
        const double t = 8.0 * j * std::pow(q, 0.5 * (j - shift) * (j - shift));
        tail += t;
        if (t < 1e-300) break;
    }
    return tail;
}

double cubic_series(double q, CubicKind kind, const SeriesControl& ctl) {
    // weight zeta^{n-m} realized as exact cos(2 pi (n-m)/3) values
    static constexpr double kW[3] = {1.0, -0.5, -0.5};
    const double shift = (kind == CubicKind::c) ? 1.0 / 3.0 : 0.0;

    auto term = [&](long m, long n) {
        const double tm = static_cast<double>(m) + shift;
        const double tn = static_cast<double>(n) + shift;
        const double e = tm * tm + tm * tn + tn * tn;
        double v = std::pow(q, e);
        if (kind == CubicKind::b) v *= kW[((n - m) % 3 + 3) % 3];
        return v;
    };

    CompensatedSum sum;
    sum.add(term(0, 0));
    for (long M = 1;; ++M) {
        if (static_cast<std::size_t>(2 * M + 1) * static_cast<std::size_t>(2 * M + 1) >
            ctl.max_terms)
            throw NonConvergence("cubic theta: ring cap reached");
        for (long m = -M; m <= M; ++m) {
            sum.add(term(m, -M));
            sum.add(term(m, M));
        }
        for (long n = -M + 1; n <= M - 1; ++n) {
            sum.add(term(-M, n));
            sum.add(term(M, n));
        }
        const double tail = cubic_ring_tail(q, static_cast<int>(M) + 1, shift);
        if (tail < ctl.rel_tol * std::abs(sum.value())) return sum.value();
    }
}

struct CubicDispatch {
    double q_eval;      // nome the series are evaluated at
    double scale;       // prefactor (1 or 1/alpha)
    bool swapped;       // b and c trade places under the modular transform
};

// The hexagonal lattice parameter is alpha with q = e^{-2 pi alpha/sqrt3}.
// For alpha < 1 the sums are evaluated at the dual parameter 1/alpha,
// where all cancellation disappears: a -> a, b <-> c, scaled by 1/alpha.
CubicDispatch cubic_dispatch(const Nome& q) {
    const double alpha = 0.5 * std::sqrt(3.0) * q.tau();
    if (alpha >= 1.0 - kTransformSlack) return {q.value(), 1.0, false};
    const double inv = 1.0 / alpha;
    return {std::exp(-2.0 * kPi * inv / std::sqrt(3.0)), inv, true};
}

} // namespace

Nome::Nome(double q) : q_(q) {
    if (!(q > 0.0) || !(q < 1.0))
        throw DomainError("Nome: q must lie strictly inside (0, 1)");
    tau_ = -std::log(q) / kPi;
}

double theta2(const Nome& q, const SeriesControl& ctl) {
    ctl.validate();
    if (q.tau() >= 1.0 - kTransformSlack) return theta2_series(q.value(), ctl);
    const double inv_tau = 1.0 / q.tau();
    return std::sqrt(inv_tau) * theta4_series(std::exp(-kPi * inv_tau), ctl);
}

double theta3(const Nome& q, const SeriesControl& ctl) {
    ctl.validate();
    if (q.tau() >= 1.0 - kTransformSlack) return theta3_series(q.value(), ctl);
    const double inv_tau = 1.0 / q.tau();
    return std::sqrt(inv_tau) * theta3_series(std::exp(-kPi * inv_tau), ctl);
}

double theta4(const Nome& q, const SeriesControl& ctl) {
    ctl.validate();
    if (q.tau() >= 1.0 - kTransformSlack) return theta4_series(q.value(), ctl);
    const double inv_tau = 1.0 / q.tau();
    return std::sqrt(inv_tau) * theta2_series(std::exp(-kPi * inv_tau), ctl);
}

double cubic_a(const Nome& q, const SeriesControl& ctl) {
    ctl.validate();
    const CubicDispatch d = cubic_dispatch(q);
    return d.scale * cubic_series(d.q_eval, CubicKind::a, ctl);
}

double cubic_b(const Nome& q, const SeriesControl& ctl) {
    ctl.validate();
    const CubicDispatch d = cubic_dispatch(q);
    return d.scale * cubic_series(d.q_eval, d.swapped ? CubicKind::c : CubicKind::b, ctl);
}

double cubic_c(const Nome& q, const SeriesControl& ctl) {
    ctl.validate();
    const CubicDispatch d = cubic_dispatch(q);
    return d.scale * cubic_series(d.q_eval, d.swapped ? CubicKind::b : CubicKind::c, ctl);
}

double gamma_fn(double x) {
    if (!(x > 0.0))
        throw DomainError("gamma_fn: requires x > 0");
    return std::tgamma(x);
}

double digamma(double x) {
    if (!(x > 0.0))
        throw DomainError("digamma: requires x > 0");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // psi(x) ~ ln x - 1/(2x) - sum_{k>=1} B_{2k}/(2k x^{2k})
    const double tail =
        inv2 * (1.0 / 12 -
                inv2 * (1.0 / 120 -
                        inv2 * (1.0 / 252 -
                                inv2 * (1.0 / 240 -
                                        inv2 * (1.0 / 132 -
                                                inv2 * (691.0 / 32760 - inv2 / 12))))));
    return acc + std::log(x) - 0.5 * inv - tail;
}

double hyp2f1(double a, double b, double c, double x, const SeriesControl& ctl) {
    ctl.validate();
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
        throw DomainError("hyp2f1: parameters must be positive");
    if (a + b > c + 1e-12)
        throw DomainError("hyp2f1: requires a + b <= c");
    if (!(x >= 0.0) || !(x < 1.0))
        throw DomainError("hyp2f1: requires 0 <= x < 1");

    const bool log_case = std::abs(a + b - c) <= 1e-12;
    if (log_case && x > 0.75) return hyp2f1_near_one(a, b, 1.0 - x, ctl);

    CompensatedSum sum;
    sum.add(1.0);
    double term = 1.0;
    for (std::size_t n = 0; n < ctl.max_terms; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
        sum.add(term);
        if (std::abs(term) < ctl.rel_tol * std::abs(sum.value())) return sum.value();
    }
    throw NonConvergence("hyp2f1: term cap reached");
}

double hyp2f1_near_one(double a, double b, double eps, const SeriesControl& ctl) {
    ctl.validate();
    if (!(a > 0.0) || !(b > 0.0))
        throw DomainError("hyp2f1_near_one: parameters must be positive");
    if (!(eps > 0.0) || !(eps <= 0.5))
        throw DomainError("hyp2f1_near_one: requires 0 < 1-x <= 1/2");

    // DLMF 15.8.10 for c = a + b:
    // 2F1(a,b;a+b;x) = G * sum_s p_s [2 psi(s+1) - psi(a+s) - psi(b+s) - ln eps] eps^s
    // with p_s = (a)_s (b)_s / (s!)^2 and G = Gamma(a+b)/(Gamma(a) Gamma(b)).
    const double pref = gamma_fn(a + b) / (gamma_fn(a) * gamma_fn(b));
    const double log_term = -std::log(eps);
    double psi_s1 = digamma(1.0);
    double psi_as = digamma(a);
    double psi_bs = digamma(b);
    double poch = 1.0;
    CompensatedSum sum;
    int small_streak = 0;
    for (std::size_t s = 0; s < ctl.max_terms; ++s) {
        const double contrib = poch * (2.0 * psi_s1 - psi_as - psi_bs + log_term);
        sum.add(contrib);
        const double ds = static_cast<double>(s);
        poch *= (a + ds) * (b + ds) / ((ds + 1.0) * (ds + 1.0)) * eps;
        psi_s1 += 1.0 / (ds + 1.0);
        psi_as += 1.0 / (a + ds);
        psi_bs += 1.0 / (b + ds);
        // terms can grow before the eps^s decay takes over, so ask for two
        // consecutive negligible contributions
        if (std::abs(contrib) < ctl.rel_tol * std::abs(sum.value())) {
            if (++small_streak >= 2) return pref * sum.value();
        } else {
            small_streak = 0;
        }
    }
    throw NonConvergence("hyp2f1_near_one: term cap reached");
}

double elliptic_k(double k) {
    if (!(k >= 0.0) || !(k < 1.0))
        throw DomainError("elliptic_k: requires 0 <= k < 1");
    const double k_prime = std::sqrt((1.0 - k) * (1.0 + k));
    return (kPi / 2.0) / ag2(k_prime, 1.0);
}

ThetaTriple quadratic_triple(const Nome& q, const SeriesControl& ctl) {
    const double t2 = theta2(q, ctl);
    const double t3 = theta3(q, ctl);
    const double t4 = theta4(q, ctl);
    ThetaTriple t{TripleKind::quadratic, t2 * t2, t4 * t4, t3 * t3, q};
    const double resid = std::abs(t.high * t.high - t.mid * t.mid - t.low * t.low);
    if (!(resid <= 1e-11 * t.high * t.high) || !(t.low > 0.0) || !(t.mid < t.high))
        throw NonConvergence("quadratic_triple: Jacobi identity violated numerically");
    return t;
}

ThetaTriple cubic_triple(const Nome& q, const SeriesControl& ctl) {
    const double a = cubic_a(q, ctl);
    const double b = cubic_b(q, ctl);
    const double c = cubic_c(q, ctl);
    ThetaTriple t{TripleKind::cubic, c, b, a, q};
    const double resid =
        std::abs(t.high * t.high * t.high - t.mid * t.mid * t.mid - t.low * t.low * t.low);
    if (!(resid <= 1e-11 * t.high * t.high * t.high) || !(t.low > 0.0) || !(t.mid < t.high))
        throw NonConvergence("cubic_triple: cube identity violated numerically");
    return t;
}

EllipticModuli modulus_quadratic(const Nome& q, const SeriesControl& ctl) {
    const ThetaTriple t = quadratic_triple(q, ctl);
    EllipticModuli m{TripleKind::quadratic, t.low / t.high, t.mid / t.high, q};
    if (std::abs(m.modulus * m.modulus + m.complement * m.complement - 1.0) > 1e-12)
        throw NonConvergence("modulus_quadratic: k^2 + k'^2 != 1 numerically");
    return m;
}

EllipticModuli modulus_cubic(const Nome& q, const SeriesControl& ctl) {
    const ThetaTriple t = cubic_triple(q, ctl);
    EllipticModuli m{TripleKind::cubic, t.low / t.high, t.mid / t.high, q};
    const double s3 = m.modulus * m.modulus * m.modulus;
    const double sp3 = m.complement * m.complement * m.complement;
    if (std::abs(s3 + sp3 - 1.0) > 1e-12)
        throw NonConvergence("modulus_cubic: s^3 + s'^3 != 1 numerically");
    return m;
}

namespace {

double pairwise_residual(double u, double v, double w) {
    const double scale = std::abs(u);
    double r = std::abs(u - v);
    r = std::max(r, std::abs(u - w));
    r = std::max(r, std::abs(v - w));
    return r / scale;
}

} // namespace

ConstantCheck constant_gauss_check() {
    const Nome q{std::exp(-kPi)};
    const double t4 = theta4(q);
    const double via_theta = t4 * t4;
    const double via_agm = 1.0 / ag2(std::sqrt(2.0), 1.0);
    // 2*varpi/(2*pi) with K expressed through the hypergeometric series,
    // keeping this route independent of both others.
    const double via_hyp = hyp2f1(0.5, 0.5, 1.0, 0.5) / std::sqrt(2.0);
    const double residual = pairwise_residual(via_theta, via_agm, via_hyp);
    if (residual > 1e-10)
        throw NonConvergence("constant_gauss: cross-routes disagree beyond 1e-10");
    return {via_theta, residual};
}

double constant_gauss() { return constant_gauss_check().value; }

ConstantCheck constant_landau_plus_check() {
    const double via_gamma = gamma_fn(1.0 / 3.0) * gamma_fn(5.0 / 6.0) / gamma_fn(1.0 / 6.0);
    const double via_agm = 0.5 * ag3(std::cbrt(2.0), 1.0);
    const Nome q{std::exp(-2.0 * kPi / std::sqrt(3.0))};
    const double via_cubic = 1.0 / (2.0 * cubic_b(q));
    const double residual = pairwise_residual(via_gamma, via_agm, via_cubic);
    if (residual > 1e-10)
        throw NonConvergence("constant_landau_plus: cross-routes disagree beyond 1e-10");
    return {via_gamma, residual};
}

double constant_landau_plus() { return constant_landau_plus_check().value; }

ConstantCheck constant_lemniscate_check() {
    const double via_k = 2.0 * std::sqrt(2.0) * elliptic_k(1.0 / std::sqrt(2.0));
    const Nome q{std::exp(-kPi)};
    const double t4 = theta4(q);
    const double via_theta = 2.0 * kPi * t4 * t4;
    const double residual = std::abs(via_k - via_theta) / via_k;
    if (residual > 1e-10)
        throw NonConvergence("constant_lemniscate: cross-routes disagree beyond 1e-10");
    return {via_k, residual};
}

double constant_lemniscate() { return constant_lemniscate_check().value; }

} // namespace theta_agm
