#pragma once

#include "ddm/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ddm {

// All rates in schedule and batch files are decimal fractions per year
// (0.05 means 5%), never percent points.

/// One parsed schedule file, with every numeric constraint already enforced.
struct ScheduleDocument {
    std::optional<std::string> name;
    double initial_dividend = 0.0;
    std::vector<GrowthStage> stages;
    double terminal_growth = 0.0;
    double required_return = 0.0;
    std::optional<double> market_price;
};

DividendSchedule to_schedule(const ScheduleDocument& doc);
DiscountContext to_context(const ScheduleDocument& doc);

/// Parse a JSON schedule document. Keys: name (optional), initial_dividend,
/// required_return, terminal_growth, market_price (optional), stages = array
/// of {growth, years}. Throws ParseError for malformed JSON, ValidationError
/// naming the offending field for domain violations.
ScheduleDocument parse_schedule(const std::string& text);

/// Serialize a schedule document back to JSON. parse -> render -> parse is a
/// fixed point.
std::string render_schedule(const ScheduleDocument& doc);

/// One batch table line. `row` is the 1-based data row, header excluded.
struct BatchRow {
    int row = 0;
    std::string name;
    double initial_dividend = 0.0;
    double required_return = 0.0;
    double terminal_growth = 0.0;
    std::optional<double> market_price;
    std::vector<GrowthStage> stages;
};

DividendSchedule to_schedule(const BatchRow& row);
DiscountContext to_context(const BatchRow& row);

struct BatchRowError {
    int row = 0;
    std::string column;
    std::string message;
};

/// Rows that parsed cleanly plus one error per failed row; a failed row never
/// discards its neighbours.
struct BatchParseResult {
    std::vector<BatchRow> rows;
    std::vector<BatchRowError> errors;
};

/// Parse a comma-separated batch table with header
///   name,initial_dividend,required_return,terminal_growth,market_price,
///   g1,t1,...,g8,t8
/// Stage cells are filled from g1 leftwards; empty trailing cells mean "no
/// further stages"; market_price may be empty. Cell values must not contain
/// commas. Throws ParseError only when the header itself is unusable.
BatchParseResult parse_batch(const std::string& text);

enum class Verdict { underpriced, overpriced, fair };

/// FAIR within 1e-4 relative of the present value, otherwise UNDERPRICED when
/// the market price sits below it and OVERPRICED above.
Verdict classify_price(double present_value, double market_price);

std::string to_string(Verdict verdict);

enum class OutputFormat { text, structured };

/// A named valuation ready for rendering; the verdict is derived when a
/// market price is present.
struct ResultRecord {
    std::optional<std::string> name;
    ValuationResult valuation;
    std::optional<double> market_price;
};

/// Text mode prints the present value and each term to 5 decimal places;
/// structured mode emits a JSON record with every field at full precision.
std::string render_result(const ResultRecord& record, OutputFormat format);
std::string render_result(const ValuationResult& result, OutputFormat format);

} // namespace ddm
