#ifndef THETA_AGM_AGM_HPP
#define THETA_AGM_AGM_HPP

#include <cstddef>
#include <vector>

namespace theta_agm {

/// Full iteration history of an order-N arithmetic-geometric mean run.
///
/// The three sequences follow
///     a_{n+1} = (a_n + (N-1) b_n) / N,
///     c_{n+1} = (a_n - b_n) / N,
///     b_n^N   = a_n^N - c_n^N,
/// so a_{n+1}^N - b_{n+1}^N = ((a_n - b_n)/N)^N at every step, which is
/// what gives the iteration its convergence order N.
struct AgmTrace {
    int order = 2;
    std::vector<double> a_seq;
    std::vector<double> b_seq;
    std::vector<double> c_seq;
    double limit = 0.0;

    std::size_t iterations() const { return a_seq.empty() ? 0 : a_seq.size() - 1; }
};

/// Order-N AGM with full trace. Inputs are swapped so that a0 >= b0.
/// Stops once |a_n - b_n| < tol * a_n (default near machine precision).
AgmTrace agm_general(int order, double a0, double b0, double tol = 1e-15);

/// Classical AGM: a' = (a+b)/2, b' = sqrt(a b).
double ag2(double a0, double b0, double tol = 1e-15);

/// Cubic AGM: a' = (a+2b)/3, b' = cbrt(b (a^2+ab+b^2)/3).
double ag3(double a0, double b0, double tol = 1e-15);

} // namespace theta_agm

#endif
