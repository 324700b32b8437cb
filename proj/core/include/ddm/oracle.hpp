#pragma once

#include "ddm/types.hpp"

namespace ddm {

/// Controls for the brute-force series summation.
struct OracleConfig {
    /// Absolute error budget for the truncated perpetuity tail.
    double tail_tolerance = 1e-9;
    /// Hard cap on explicitly summed years; must cover every staged year.
    long max_horizon = 100000;
};

/// Present value by direct summation of the discounted dividend series.
///
/// Every staged year is summed term by term through dividend_at. The
/// perpetuity tail is then valued two independent ways: analytically, and by
/// summing explicit tail terms until the geometric remainder drops below the
/// tail tolerance. The two tails must agree within tail_tolerance (a
/// std::logic_error otherwise); the returned value uses the summed tail.
///
/// Throws NonConvergent when r <= terminal growth, HorizonExceeded when the
/// remainder bound is not met within max_horizon.
double value_series(const DividendSchedule& schedule, const DiscountContext& ctx,
                    const OracleConfig& config = {});

} // namespace ddm
