#include "ddm/analysis.hpp"

#include "ddm/errors.hpp"
#include "ddm/valuation.hpp"

#include <charconv>
#include <sstream>
#include <utility>

namespace ddm {

namespace {

double present_value_at(const DividendSchedule& schedule, double rate) {
    return value_closed_form(schedule, DiscountContext{rate}).present_value;
}

// Inputs for one leg of a central difference.
struct BumpedInputs {
    DividendSchedule schedule;
    DiscountContext ctx;
};

int parse_stage_index(const std::string& parameter, std::size_t stage_count) {
    int index = 0;
    const char* first = parameter.data() + 1;
    const char* last = parameter.data() + parameter.size();
    auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec != std::errc{} || ptr != last || index < 1) {
        throw InvalidInput("parameter: unknown name '" + parameter +
                           "' (expected d0, r, terminal, or g1..gN)");
    }
    if (static_cast<std::size_t>(index) > stage_count) {
        throw InvalidInput("parameter: " + parameter + " is out of range for a " +
                           std::to_string(stage_count) + "-stage schedule");
    }
    return index;
}

BumpedInputs apply_bump(const DividendSchedule& schedule,
                        const DiscountContext& ctx,
                        const std::string& parameter, double delta) {
    BumpedInputs bumped{schedule, ctx};
    if (parameter == "d0") {
        bumped.schedule.initial_dividend += delta;
    } else if (parameter == "r") {
        bumped.ctx.required_return += delta;
    } else if (parameter == "terminal") {
        bumped.schedule.terminal_growth += delta;
    } else if (parameter.size() >= 2 && parameter[0] == 'g') {
        const int index = parse_stage_index(parameter, schedule.stages.size());
        bumped.schedule.stages[static_cast<std::size_t>(index) - 1].growth_rate +=
            delta;
    } else {
        throw InvalidInput("parameter: unknown name '" + parameter +
                           "' (expected d0, r, terminal, or g1..gN)");
    }
    return bumped;
}

void require_valid(const BumpedInputs& inputs, const std::string& parameter,
                   double bump) {
    validate(inputs.schedule);
    validate(inputs.ctx);
    if (!(inputs.ctx.required_return > inputs.schedule.terminal_growth)) {
        std::ostringstream msg;
        msg << "bump " << bump << " on parameter '" << parameter
            << "' violates required_return > terminal_growth ("
            << inputs.ctx.required_return
            << " vs " << inputs.schedule.terminal_growth << ")";
        throw InvalidInput(msg.str());
    }
}

} // namespace

ImpliedReturnSolve implied_return_detail(const DividendSchedule& schedule,
                                         double market_price,
                                         const SolveConfig& config) {
    validate(schedule);
    if (!(market_price > 0.0)) {
        throw InvalidInput("market_price: must be > 0");
    }
    if (!(config.bracket_low < config.bracket_high)) {
        throw InvalidInput("bracket: bracket_low must be < bracket_high");
    }
    if (!(config.tolerance > 0.0)) {
        throw InvalidInput("tolerance: must be > 0");
    }
    if (config.max_iterations < 1) {
        throw InvalidInput("max_iterations: must be >= 1");
    }

    // NonConvergent propagates from here when bracket_low <= terminal growth.
    const double value_low = present_value_at(schedule, config.bracket_low);
    const double value_high = present_value_at(schedule, config.bracket_high);
    if (!(value_high < market_price && market_price < value_low)) {
        std::ostringstream msg;
        msg << "price " << market_price << " is not straddled by the bracket: P("
            << config.bracket_low << ") = " << value_low << ", P("
            << config.bracket_high << ") = " << value_high;
        throw BracketError(msg.str());
    }

    double lo = config.bracket_low;
    double hi = config.bracket_high;
    int iterations = 0;
    while (hi - lo > config.tolerance && iterations < config.max_iterations) {
        const double mid = lo + (hi - lo) / 2.0;
        ++iterations;
        // P0 decreases in r, so the root lies above mid when P0(mid) > price
        if (present_value_at(schedule, mid) > market_price) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {lo + (hi - lo) / 2.0, iterations};
}

double implied_return(const DividendSchedule& schedule, double market_price,
                      const SolveConfig& config) {
    return implied_return_detail(schedule, market_price, config).rate;
}

SensitivityReport sensitivity(const DividendSchedule& schedule,
                              const DiscountContext& ctx,
                              const std::string& parameter, double bump) {
    validate(schedule);
    validate(ctx);
    if (!(bump > 0.0)) {
        throw InvalidInput("bump: must be > 0");
    }

    const BumpedInputs up = apply_bump(schedule, ctx, parameter, bump);
    const BumpedInputs down = apply_bump(schedule, ctx, parameter, -bump);
    require_valid(up, parameter, bump);
    require_valid(down, parameter, bump);

    const double value_up = value_closed_form(up.schedule, up.ctx).present_value;
    const double value_down =
        value_closed_form(down.schedule, down.ctx).present_value;
    return {parameter, bump, (value_up - value_down) / (2.0 * bump)};
}

} // namespace ddm
