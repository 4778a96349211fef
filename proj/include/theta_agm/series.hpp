#ifndef THETA_AGM_SERIES_HPP
#define THETA_AGM_SERIES_HPP

#include <cmath>
#include <cstddef>

#include "theta_agm/errors.hpp"

namespace theta_agm {

/// Truncation policy shared by all series evaluations.
struct SeriesControl {
    double rel_tol = 1e-14;
    std::size_t max_terms = 1'000'000;

    void validate() const {
        if (!(rel_tol > 0.0))
            throw DomainError("SeriesControl: rel_tol must be positive");
        if (max_terms < 1)
            throw DomainError("SeriesControl: max_terms must be at least 1");
    }
};

/// Neumaier-compensated accumulator. Summation order stays deterministic;
/// the compensation keeps long positive sums at a couple of ulps.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace theta_agm

#endif
