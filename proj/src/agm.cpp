#include "theta_agm/agm.hpp"

#include <cassert>
#include <cmath>
#include <utility>

#include "theta_agm/errors.hpp"

namespace theta_agm {

namespace {

constexpr int kMaxIterations = 64;

double ipow(double x, int n) {
    double r = 1.0;
    while (n > 0) {
        if (n & 1) r *= x;
        x *= x;
        n >>= 1;
    }
    return r;
}

void check_start(double a0, double b0, double tol) {
    if (!(a0 > 0.0) || !(b0 > 0.0) || !std::isfinite(a0) || !std::isfinite(b0))
        throw DomainError("agm: starting values must be positive finite reals");
    if (!(tol > 0.0))
        throw DomainError("agm: tolerance must be positive");
}

} // namespace

AgmTrace agm_general(int order, double a0, double b0, double tol) {
    if (order < 2)
        throw DomainError("agm_general: order must be an integer >= 2");
    check_start(a0, b0, tol);
    if (a0 < b0) std::swap(a0, b0);

    AgmTrace trace;
    trace.order = order;

    const double n = static_cast<double>(order);
    double a = a0;
    double b = b0;
    // c_0 is defined through b_0^N = a_0^N - c_0^N.
    double c0 = std::pow(std::max(ipow(a0, order) - ipow(b0, order), 0.0), 1.0 / n);
    trace.a_seq.push_back(a);
    trace.b_seq.push_back(b);
    trace.c_seq.push_back(c0);

    for (int iter = 0; iter < kMaxIterations; ++iter) {
        if (std::abs(a - b) < tol * a) {
            trace.limit = (a == b) ? a : (a + (n - 1.0) * b) / n;
            return trace;
        }
        const double a_next = (a + (n - 1.0) * b) / n;
        const double c_next = (a - b) / n;
        const double gap = ipow(a_next, order) - ipow(c_next, order);
        assert(gap >= 0.0 && "a_{n+1} >= c_{n+1} is guaranteed for a0 >= b0 > 0");
        const double b_next = std::pow(gap, 1.0 / n);
        a = a_next;
        b = b_next;
        trace.a_seq.push_back(a);
        trace.b_seq.push_back(b);
        trace.c_seq.push_back(c_next);
    }
    throw NonConvergence("agm_general: iteration cap reached before tolerance");
}

double ag2(double a0, double b0, double tol) {
    check_start(a0, b0, tol);
    if (a0 < b0) std::swap(a0, b0);
    double a = a0, b = b0;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        if (std::abs(a - b) < tol * a) return (a == b) ? a : 0.5 * (a + b);
        const double a_next = 0.5 * (a + b);
        const double b_next = std::sqrt(a * b);
        a = a_next;
        b = b_next;
    }
    throw NonConvergence("ag2: iteration cap reached before tolerance");
}

double ag3(double a0, double b0, double tol) {
    check_start(a0, b0, tol);
    if (a0 < b0) std::swap(a0, b0);
    double a = a0, b = b0;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        if (std::abs(a - b) < tol * a) return (a == b) ? a : (a + 2.0 * b) / 3.0;
        const double a_next = (a + 2.0 * b) / 3.0;
        const double b_next = std::cbrt(b * ((a * a + a * b + b * b) / 3.0));
        a = a_next;
        b = b_next;
    }
    throw NonConvergence("ag3: iteration cap reached before tolerance");
}

} // namespace theta_agm
