#pragma once

#include "ddm/types.hpp"

#include <string>

namespace ddm {

/// Bracketing bisection controls for the implied-return solve.
struct SolveConfig {
    double bracket_low = 0.0;
    double bracket_high = 1.0;
    double tolerance = 1e-10; ///< absolute error on r
    int max_iterations = 200;
};

struct ImpliedReturnSolve {
    double rate = 0.0;
    int iterations = 0;
};

/// The required return r* at which the closed-form value equals market_price,
/// found by bisection on the strictly decreasing map r -> P0(r).
///
/// Throws BracketError when the price is not strictly straddled by the values
/// at the bracket ends; NonConvergent propagates when bracket_low does not
/// exceed the terminal growth.
double implied_return(const DividendSchedule& schedule, double market_price,
                      const SolveConfig& config);

/// As implied_return, also reporting the bisection iteration count.
ImpliedReturnSolve implied_return_detail(const DividendSchedule& schedule,
                                         double market_price,
                                         const SolveConfig& config);

/// One central-difference sensitivity of the present value.
struct SensitivityReport {
    std::string parameter;
    double bump = 0.0;
    double central_difference = 0.0; ///< currency per unit parameter
};

/// dP0/d(parameter) by central differences: (P0(p+b) - P0(p-b)) / (2b).
///
/// Parameter names: "d0" (initial dividend), "r" (required return),
/// "terminal" (perpetuity growth), "g1".."gN" (stage growth rates).
/// Throws InvalidInput when either bumped input leaves the valid domain.
SensitivityReport sensitivity(const DividendSchedule& schedule,
                              const DiscountContext& ctx,
                              const std::string& parameter, double bump);

} // namespace ddm
