#ifndef THETA_AGM_VERIFY_HPP
#define THETA_AGM_VERIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace theta_agm::verify {

enum class Suite { theta, cubic, agm, lattice, gabor, all };

/// One verified identity: worst measured residual against its tolerance.
/// Structural (pass/fail) checks report residual 0 or 1 with tolerance 1/2.
struct Check {
    std::string suite;
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Runs the identity suite(s). A positive tol_override replaces every
/// per-check tolerance (CLI --tol / THETA_AGM_TOL hook).
std::vector<Check> run(Suite suite, double tol_override = 0.0);

std::optional<Suite> parse_suite(std::string_view name);
const char* suite_label(Suite suite);

} // namespace theta_agm::verify

#endif
