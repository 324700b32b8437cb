#pragma once

#include <vector>

namespace ddm {

/// One annuity leg: dividends compound at `growth_rate` for `duration` whole
/// years. A zero-duration stage is a no-op.
struct GrowthStage {
    double growth_rate = 0.0; ///< fraction per year (0.05 = 5%), must be > -1
    int duration = 0;         ///< whole years, must be >= 0
};

/// A dividend stream: the just-paid dividend D0, an ordered list of finite
/// growth stages, and a perpetuity growth rate applied forever afterwards.
struct DividendSchedule {
    double initial_dividend = 0.0;   ///< D0, must be > 0
    std::vector<GrowthStage> stages; ///< may be empty (pure perpetuity)
    double terminal_growth = 0.0;    ///< perpetuity growth, must be > -1
};

/// Discounting inputs for a valuation call.
struct DiscountContext {
    double required_return = 0.0; ///< r, fraction per year, must be > -1
};

/// Present value split into per-stage terms plus the perpetuity term.
/// present_value is always the sum of the stored terms.
struct ValuationResult {
    double present_value = 0.0;
    std::vector<double> stage_terms; ///< one entry per finite stage
    double terminal_term = 0.0;
};

/// A projected dividend: (year t, amount D_t). Year 0 is the just-paid D0.
struct DividendPoint {
    int year = 0;
    double amount = 0.0;
};

/// Throw InvalidInput naming the offending field when an invariant fails.
void validate(const GrowthStage& stage);
void validate(const DividendSchedule& schedule);
void validate(const DiscountContext& ctx);

} // namespace ddm
