#include "ddm/types.hpp"

#include "ddm/errors.hpp"

#include <sstream>
#include <string>

namespace ddm {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& constraint,
                       double got) {
    std::ostringstream msg;
    msg << field << ": " << constraint << " (got " << got << ")";
    throw InvalidInput(msg.str());
}

void validate_stage(const GrowthStage& stage, const std::string& field) {
    // !(x > -1) also rejects NaN
    if (!(stage.growth_rate > -1.0)) {
        fail(field + ".growth_rate", "must be > -1", stage.growth_rate);
    }
    if (stage.duration < 0) {
        fail(field + ".duration", "must be >= 0", stage.duration);
    }
}

} // namespace

void validate(const GrowthStage& stage) { validate_stage(stage, "stage"); }

void validate(const DividendSchedule& schedule) {
    if (!(schedule.initial_dividend > 0.0)) {
        fail("initial_dividend", "must be > 0", schedule.initial_dividend);
    }
    for (std::size_t i = 0; i < schedule.stages.size(); ++i) {
        validate_stage(schedule.stages[i], "stages[" + std::to_string(i) + "]");
    }
    if (!(schedule.terminal_growth > -1.0)) {
        fail("terminal_growth", "must be > -1", schedule.terminal_growth);
    }
}

void validate(const DiscountContext& ctx) {
    if (!(ctx.required_return > -1.0)) {
        fail("required_return", "must be > -1", ctx.required_return);
    }
}

} // namespace ddm
