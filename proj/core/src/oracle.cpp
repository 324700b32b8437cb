#include "ddm/oracle.hpp"

#include "ddm/errors.hpp"
#include "ddm/valuation.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ddm {

double value_series(const DividendSchedule& schedule, const DiscountContext& ctx,
                    const OracleConfig& config) {
    validate(schedule);
    validate(ctx);
    if (!(config.tail_tolerance > 0.0)) {
        throw InvalidInput("tail_tolerance: must be > 0");
    }
    const double r = ctx.required_return;
    const double g = schedule.terminal_growth;
    if (!(r > g)) {
        std::ostringstream msg;
        msg << "series does not converge: required_return (" << r
            << ") must exceed terminal growth (" << g << ")";
        throw NonConvergent(msg.str());
    }

    const int last_stage_end = cumulative_stage_ends(schedule).back();
    if (config.max_horizon < last_stage_end + 1) {
        throw InvalidInput("max_horizon: must cover every staged year plus one");
    }

    // staged years, one term at a time
    double staged = 0.0;
    for (int t = 1; t <= last_stage_end; ++t) {
        staged += dividend_at(schedule, t) / pow_int(1.0 + r, t);
    }

    // perpetuity tail: exact geometric decay at ratio x < 1, so the remainder
    // after the term for year t is exactly term * x / (1 - x). Summing stops
    // at half the budget, leaving the other half to rounding in the
    // cross-check below.
    const double x = (1.0 + g) / (1.0 + r);
    const double discounted_last =
        dividend_at(schedule, last_stage_end) / pow_int(1.0 + r, last_stage_end);
    double term = discounted_last;
    double summed_tail = 0.0;
    long year = last_stage_end;
    while (true) {
        if (year >= config.max_horizon) {
            std::ostringstream msg;
            msg << "remainder bound not met within max_horizon ("
                << config.max_horizon << " years)";
            throw HorizonExceeded(msg.str());
        }
        ++year;
        term *= x;
        summed_tail += term;
        const double remainder = term * x / (1.0 - x);
        if (remainder <= 0.5 * config.tail_tolerance) {
            break;
        }
    }

    const double analytic_tail = discounted_last * perpetuity_sum(g, r);
    if (std::abs(analytic_tail - summed_tail) > config.tail_tolerance) {
        std::ostringstream msg;
        msg << "oracle tail mismatch: analytic " << analytic_tail << " vs summed "
            << summed_tail << " exceeds tolerance " << config.tail_tolerance;
        throw std::logic_error(msg.str());
    }

    return staged + summed_tail;
}

} // namespace ddm
