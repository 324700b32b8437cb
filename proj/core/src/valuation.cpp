#include "ddm/valuation.hpp"

#include "ddm/errors.hpp"

#include <sstream>
#include <string>

namespace ddm {

namespace {

[[noreturn]] void throw_non_convergent(double required_return,
                                       double terminal_growth) {
    std::ostringstream msg;
    msg << "perpetuity does not converge: required_return (" << required_return
        << ") must exceed terminal growth (" << terminal_growth << ")";
    throw NonConvergent(msg.str());
}

void check_rates(double growth_rate, double required_return) {
    if (!(growth_rate > -1.0)) {
        throw InvalidInput("growth_rate: must be > -1");
    }
    if (!(required_return > -1.0)) {
        throw InvalidInput("required_return: must be > -1");
    }
}

} // namespace

double pow_int(double base, long exponent) {
    if (exponent < 0) {
        throw InvalidInput("pow_int: exponent must be >= 0");
    }
    double result = 1.0;
    double square = base;
    for (long e = exponent; e > 0; e >>= 1) {
        if (e & 1) {
            result *= square;
        }
        if (e > 1) {
            square *= square;
        }
    }
    return result;
}

std::vector<int> cumulative_stage_ends(const DividendSchedule& schedule) {
    std::vector<int> ends;
    ends.reserve(schedule.stages.size() + 1);
    ends.push_back(0);
    for (const auto& stage : schedule.stages) {
        ends.push_back(ends.back() + stage.duration);
    }
    return ends;
}

double dividend_at(const DividendSchedule& schedule, int year) {
    validate(schedule);
    if (year < 0) {
        throw InvalidInput("year: must be >= 0 (got " + std::to_string(year) +
                           ")");
    }
    double amount = schedule.initial_dividend;
    int stage_start = 0; // last year already covered by earlier stages
    for (const auto& stage : schedule.stages) {
        const int stage_end = stage_start + stage.duration;
        if (year <= stage_end) {
            return amount * pow_int(1.0 + stage.growth_rate, year - stage_start);
        }
        amount *= pow_int(1.0 + stage.growth_rate, stage.duration);
        stage_start = stage_end;
    }
    return amount * pow_int(1.0 + schedule.terminal_growth, year - stage_start);
}

std::vector<DividendPoint> project_dividends(const DividendSchedule& schedule,
                                             int horizon) {
    if (horizon < 0) {
        throw InvalidInput("horizon: must be >= 0 (got " +
                           std::to_string(horizon) + ")");
    }
    std::vector<DividendPoint> points;
    points.reserve(static_cast<std::size_t>(horizon) + 1);
    for (int t = 0; t <= horizon; ++t) {
        points.push_back({t, dividend_at(schedule, t)});
    }
    return points;
}

double stage_factor(double growth_rate, int duration, double required_return) {
    check_rates(growth_rate, required_return);
    if (duration < 0) {
        throw InvalidInput("duration: must be >= 0");
    }
    return 1.0 - pow_int((1.0 + growth_rate) / (1.0 + required_return), duration);
}

double annuity_sum(double growth_rate, int duration, double required_return) {
    check_rates(growth_rate, required_return);
    if (duration < 0) {
        throw InvalidInput("duration: must be >= 0");
    }
    if (growth_rate == required_return) {
        // every summand is exactly 1
        return static_cast<double>(duration);
    }
    return (1.0 + growth_rate) / (required_return - growth_rate) *
           stage_factor(growth_rate, duration, required_return);
}

double perpetuity_sum(double growth_rate, double required_return) {
    check_rates(growth_rate, required_return);
    if (!(required_return > growth_rate)) {
        throw_non_convergent(required_return, growth_rate);
    }
    return (1.0 + growth_rate) / (required_return - growth_rate);
}

ValuationResult value_closed_form(const DividendSchedule& schedule,
                                  const DiscountContext& ctx) {
    validate(schedule);
    validate(ctx);
    const double r = ctx.required_return;
    if (!(r > schedule.terminal_growth)) {
        throw_non_convergent(r, schedule.terminal_growth);
    }

    ValuationResult result;
    result.stage_terms.reserve(schedule.stages.size());
    int stage_start = 0; // ST_{k-1}
    for (const auto& stage : schedule.stages) {
        const double discount = pow_int(1.0 + r, stage_start);
        double term;
        if (stage.growth_rate == r) {
            // the quotient form is 0/0 here; each discounted growth factor
            // is 1, so the stage contributes its duration times the stage's
            // opening dividend, discounted to time 0
            term = dividend_at(schedule, stage_start) * stage.duration / discount;
        } else {
            const double truncation =
                stage_factor(stage.growth_rate, stage.duration, r);
            term = dividend_at(schedule, stage_start + 1) /
                   (discount * (r - stage.growth_rate)) * truncation;
        }
        result.stage_terms.push_back(term);
        stage_start += stage.duration;
    }

    const double discount = pow_int(1.0 + r, stage_start);
    result.terminal_term = dividend_at(schedule, stage_start + 1) /
                           (discount * (r - schedule.terminal_growth));

    double total = 0.0;
    for (const double term : result.stage_terms) {
        total += term;
    }
    result.present_value = total + result.terminal_term;
    return result;
}

ValuationResult value_closed_form_d0(const DividendSchedule& schedule,
                                     const DiscountContext& ctx) {
    validate(schedule);
    validate(ctx);
    const double r = ctx.required_return;
    if (!(r > schedule.terminal_growth)) {
        throw_non_convergent(r, schedule.terminal_growth);
    }
    const double d0 = schedule.initial_dividend;

    ValuationResult result;
    result.stage_terms.reserve(schedule.stages.size());
    double growth_product = 1.0; // prod over completed stages of (1+g_i)^T_i
    int stage_start = 0;
    for (const auto& stage : schedule.stages) {
        const double discount = pow_int(1.0 + r, stage_start);
        double term;
        if (stage.growth_rate == r) {
            term = d0 * growth_product * stage.duration / discount;
        } else {
            const double truncation =
                stage_factor(stage.growth_rate, stage.duration, r);
            term = d0 * growth_product * (1.0 + stage.growth_rate) /
                   (discount * (r - stage.growth_rate)) * truncation;
        }
        result.stage_terms.push_back(term);
        growth_product *= pow_int(1.0 + stage.growth_rate, stage.duration);
        stage_start += stage.duration;
    }

    const double discount = pow_int(1.0 + r, stage_start);
    result.terminal_term = d0 * growth_product *
                           (1.0 + schedule.terminal_growth) /
                           (discount * (r - schedule.terminal_growth));

    double total = 0.0;
    for (const double term : result.stage_terms) {
        total += term;
    }
    result.present_value = total + result.terminal_term;
    return result;
}

} // namespace ddm
