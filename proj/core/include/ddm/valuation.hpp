#pragma once

#include "ddm/types.hpp"

#include <vector>

namespace ddm {

/// base^exponent for exponent >= 0 by repeated squaring. Keeps integer-year
/// compounding off the log/exp path of std::pow.
double pow_int(double base, long exponent);

/// Cumulative stage end years [ST_0, ST_1, ..., ST_N], ST_0 = 0.
std::vector<int> cumulative_stage_ends(const DividendSchedule& schedule);

/// Dividend paid in year `year`. The stage containing the year determines the
/// compounding; years past the last stage compound at the terminal rate.
/// dividend_at(schedule, 0) is D0.
double dividend_at(const DividendSchedule& schedule, int year);

/// [(t, dividend_at(t)) for t = 0..horizon].
std::vector<DividendPoint> project_dividends(const DividendSchedule& schedule,
                                             int horizon);

/// Finite-annuity truncation factor A = 1 - ((1+g)/(1+r))^T.
/// Zero when g == r or T == 0.
double stage_factor(double growth_rate, int duration, double required_return);

/// Sum_{l=1..T} ((1+g)/(1+r))^l. Closed form ((1+g)/(r-g)) * A when g != r;
/// exactly T when g == r (every summand is 1).
double annuity_sum(double growth_rate, int duration, double required_return);

/// Sum_{j=1..inf} ((1+g)/(1+r))^j = (1+g)/(r-g).
/// Throws NonConvergent unless r > g.
double perpetuity_sum(double growth_rate, double required_return);

/// Present value of the schedule: one discounted-annuity term per stage plus
/// the discounted perpetuity. Stage dividends are taken from dividend_at;
/// stages whose growth equals r are valued through the annuity limit, not the
/// 0/0 quotient. Throws NonConvergent when r <= terminal growth.
ValuationResult value_closed_form(const DividendSchedule& schedule,
                                  const DiscountContext& ctx);

/// Same value, with every term expanded from D0 through the running product
/// of stage growth factors (empty product = 1). Agrees with value_closed_form
/// to rounding.
ValuationResult value_closed_form_d0(const DividendSchedule& schedule,
                                     const DiscountContext& ctx);

} // namespace ddm
