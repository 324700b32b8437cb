#include "ddm/io.hpp"

#include "ddm/errors.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string_view>

namespace ddm {

using nlohmann::json;

namespace {

std::string fixed5(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.5f", value);
    return buffer;
}

[[noreturn]] void invalid_field(const std::string& field,
                                const std::string& constraint) {
    throw ValidationError(field + ": " + constraint);
}

double require_number(const json& object, const std::string& field) {
    if (!object.contains(field)) {
        invalid_field(field, "missing required field");
    }
    const json& value = object.at(field);
    if (!value.is_number()) {
        invalid_field(field, "must be a number");
    }
    return value.get<double>();
}

void check_schedule_fields(const ScheduleDocument& doc) {
    if (!(doc.initial_dividend > 0.0)) {
        invalid_field("initial_dividend", "must be > 0");
    }
    if (!(doc.required_return > -1.0)) {
        invalid_field("required_return", "must be > -1");
    }
    if (!(doc.terminal_growth > -1.0)) {
        invalid_field("terminal_growth", "must be > -1");
    }
    for (std::size_t i = 0; i < doc.stages.size(); ++i) {
        const std::string prefix = "stages[" + std::to_string(i) + "]";
        if (!(doc.stages[i].growth_rate > -1.0)) {
            invalid_field(prefix + ".growth", "must be > -1");
        }
        if (doc.stages[i].duration < 0) {
            invalid_field(prefix + ".years", "must be >= 0");
        }
    }
    if (!(doc.terminal_growth < doc.required_return)) {
        std::ostringstream msg;
        msg << "must be < required_return for the perpetuity to converge (got "
            << doc.terminal_growth << " vs required_return "
            << doc.required_return << ")";
        invalid_field("terminal_growth", msg.str());
    }
    if (doc.market_price && !(*doc.market_price > 0.0)) {
        invalid_field("market_price", "must be > 0");
    }
}

// ---- batch table ----

constexpr int kMaxBatchStages = 8;

const std::vector<std::string>& batch_header() {
    static const std::vector<std::string> header = [] {
        std::vector<std::string> columns = {"name", "initial_dividend",
                                            "required_return", "terminal_growth",
                                            "market_price"};
        for (int i = 1; i <= kMaxBatchStages; ++i) {
            columns.push_back("g" + std::to_string(i));
            columns.push_back("t" + std::to_string(i));
        }
        return columns;
    }();
    return header;
}

std::string trim(std::string_view text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) {
        return "";
    }
    const auto end = text.find_last_not_of(" \t\r");
    return std::string(text.substr(begin, end - begin + 1));
}

std::vector<std::string> split_cells(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(trim(line.substr(start)));
            break;
        }
        cells.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return cells;
}

bool parse_double_cell(const std::string& cell, double& out) {
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && !cell.empty();
}

bool parse_int_cell(const std::string& cell, int& out) {
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && !cell.empty();
}

// Thrown internally to carry the column of the first problem in a row.
struct CellError {
    std::string column;
    std::string message;
};

double require_numeric_cell(const std::vector<std::string>& cells,
                            std::size_t index, const std::string& column) {
    const std::string& cell = index < cells.size() ? cells[index] : "";
    if (cell.empty()) {
        throw CellError{column, "missing value"};
    }
    double value = 0.0;
    if (!parse_double_cell(cell, value)) {
        throw CellError{column, "not a number: '" + cell + "'"};
    }
    return value;
}

BatchRow parse_batch_row(const std::vector<std::string>& cells, int row_number) {
    if (cells.size() > batch_header().size()) {
        throw CellError{"", "row has " + std::to_string(cells.size()) +
                                " cells, expected at most " +
                                std::to_string(batch_header().size())};
    }
    BatchRow row;
    row.row = row_number;
    row.name = cells.empty() ? "" : cells[0];
    row.initial_dividend = require_numeric_cell(cells, 1, "initial_dividend");
    row.required_return = require_numeric_cell(cells, 2, "required_return");
    row.terminal_growth = require_numeric_cell(cells, 3, "terminal_growth");

    const std::string price_cell = cells.size() > 4 ? cells[4] : "";
    if (!price_cell.empty()) {
        double price = 0.0;
        if (!parse_double_cell(price_cell, price)) {
            throw CellError{"market_price", "not a number: '" + price_cell + "'"};
        }
        row.market_price = price;
    }

    bool tail_reached = false; // set once a stage pair is left blank
    for (int i = 1; i <= kMaxBatchStages; ++i) {
        const std::size_t growth_index = static_cast<std::size_t>(3 + 2 * i);
        const std::size_t years_index = growth_index + 1;
        const std::string growth_column = "g" + std::to_string(i);
        const std::string years_column = "t" + std::to_string(i);
        const std::string growth_cell =
            growth_index < cells.size() ? cells[growth_index] : "";
        const std::string years_cell =
            years_index < cells.size() ? cells[years_index] : "";

        if (growth_cell.empty() && years_cell.empty()) {
            tail_reached = true;
            continue;
        }
        if (tail_reached) {
            throw CellError{growth_cell.empty() ? years_column : growth_column,
                            "stage pairs must be contiguous from g1"};
        }
        if (growth_cell.empty() || years_cell.empty()) {
            throw CellError{growth_cell.empty() ? growth_column : years_column,
                            "growth and years must be given together"};
        }
        GrowthStage stage;
        if (!parse_double_cell(growth_cell, stage.growth_rate)) {
            throw CellError{growth_column, "not a number: '" + growth_cell + "'"};
        }
        if (!parse_int_cell(years_cell, stage.duration)) {
            throw CellError{years_column,
                            "not an integer: '" + years_cell + "'"};
        }
        row.stages.push_back(stage);
    }

    // same domain rules as the schedule document, reported per column
    if (!(row.initial_dividend > 0.0)) {
        throw CellError{"initial_dividend", "must be > 0"};
    }
    if (!(row.required_return > -1.0)) {
        throw CellError{"required_return", "must be > -1"};
    }
    if (!(row.terminal_growth > -1.0)) {
        throw CellError{"terminal_growth", "must be > -1"};
    }
    for (std::size_t i = 0; i < row.stages.size(); ++i) {
        if (!(row.stages[i].growth_rate > -1.0)) {
            throw CellError{"g" + std::to_string(i + 1), "must be > -1"};
        }
        if (row.stages[i].duration < 0) {
            throw CellError{"t" + std::to_string(i + 1), "must be >= 0"};
        }
    }
    if (!(row.terminal_growth < row.required_return)) {
        throw CellError{"terminal_growth",
                        "must be < required_return for the perpetuity to "
                        "converge"};
    }
    if (row.market_price && !(*row.market_price > 0.0)) {
        throw CellError{"market_price", "must be > 0"};
    }
    return row;
}

json result_record_json(const ResultRecord& record) {
    json object;
    if (record.name) {
        object["name"] = *record.name;
    }
    object["present_value"] = record.valuation.present_value;
    object["stage_terms"] = record.valuation.stage_terms;
    object["terminal_term"] = record.valuation.terminal_term;
    if (record.market_price) {
        object["market_price"] = *record.market_price;
        object["verdict"] = to_string(
            classify_price(record.valuation.present_value, *record.market_price));
    }
    return object;
}

} // namespace

DividendSchedule to_schedule(const ScheduleDocument& doc) {
    return {doc.initial_dividend, doc.stages, doc.terminal_growth};
}

DiscountContext to_context(const ScheduleDocument& doc) {
    return {doc.required_return};
}

DividendSchedule to_schedule(const BatchRow& row) {
    return {row.initial_dividend, row.stages, row.terminal_growth};
}

DiscountContext to_context(const BatchRow& row) {
    return {row.required_return};
}

ScheduleDocument parse_schedule(const std::string& text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::parse_error& error) {
        throw ParseError(std::string("schedule document: ") + error.what());
    }
    if (!document.is_object()) {
        throw ParseError("schedule document: top level must be an object");
    }

    for (const auto& [key, value] : document.items()) {
        (void)value;
        if (key != "name" && key != "initial_dividend" &&
            key != "required_return" && key != "terminal_growth" &&
            key != "market_price" && key != "stages") {
            invalid_field(key, "unknown field");
        }
    }

    ScheduleDocument doc;
    if (document.contains("name")) {
        if (!document.at("name").is_string()) {
            invalid_field("name", "must be a string");
        }
        doc.name = document.at("name").get<std::string>();
    }
    doc.initial_dividend = require_number(document, "initial_dividend");
    doc.required_return = require_number(document, "required_return");
    doc.terminal_growth = require_number(document, "terminal_growth");
    if (document.contains("market_price")) {
        doc.market_price = require_number(document, "market_price");
    }

    if (!document.contains("stages")) {
        invalid_field("stages", "missing required field");
    }
    const json& stages = document.at("stages");
    if (!stages.is_array()) {
        invalid_field("stages", "must be an array");
    }
    for (std::size_t i = 0; i < stages.size(); ++i) {
        const std::string prefix = "stages[" + std::to_string(i) + "]";
        const json& entry = stages[i];
        if (!entry.is_object()) {
            invalid_field(prefix, "must be an object with growth and years");
        }
        for (const auto& [key, value] : entry.items()) {
            (void)value;
            if (key != "growth" && key != "years") {
                invalid_field(prefix + "." + key, "unknown field");
            }
        }
        if (!entry.contains("growth") || !entry.at("growth").is_number()) {
            invalid_field(prefix + ".growth", "must be a number");
        }
        if (!entry.contains("years") ||
            !entry.at("years").is_number_integer()) {
            invalid_field(prefix + ".years", "must be an integer");
        }
        doc.stages.push_back({entry.at("growth").get<double>(),
                              entry.at("years").get<int>()});
    }

    check_schedule_fields(doc);
    validate(to_schedule(doc));
    validate(to_context(doc));
    return doc;
}

std::string render_schedule(const ScheduleDocument& doc) {
    json document;
    if (doc.name) {
        document["name"] = *doc.name;
    }
    document["initial_dividend"] = doc.initial_dividend;
    document["required_return"] = doc.required_return;
    document["terminal_growth"] = doc.terminal_growth;
    if (doc.market_price) {
        document["market_price"] = *doc.market_price;
    }
    document["stages"] = json::array();
    for (const auto& stage : doc.stages) {
        document["stages"].push_back(
            {{"growth", stage.growth_rate}, {"years", stage.duration}});
    }
    return document.dump(2) + "\n";
}

BatchParseResult parse_batch(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream stream(text);
        std::string line;
        while (std::getline(stream, line)) {
            if (!trim(line).empty()) {
                lines.push_back(line);
            }
        }
    }
    if (lines.empty()) {
        throw ParseError("batch table: missing header row");
    }
    const std::vector<std::string> header = split_cells(lines[0]);
    if (header != batch_header()) {
        std::ostringstream msg;
        msg << "batch table: bad header; expected '";
        for (std::size_t i = 0; i < batch_header().size(); ++i) {
            msg << (i ? "," : "") << batch_header()[i];
        }
        msg << "'";
        throw ParseError(msg.str());
    }

    BatchParseResult result;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const int row_number = static_cast<int>(i);
        try {
            result.rows.push_back(
                parse_batch_row(split_cells(lines[i]), row_number));
        } catch (const CellError& error) {
            result.errors.push_back({row_number, error.column, error.message});
        }
    }
    return result;
}

Verdict classify_price(double present_value, double market_price) {
    if (std::abs(market_price - present_value) <=
        1e-4 * std::abs(present_value)) {
        return Verdict::fair;
    }
    return market_price < present_value ? Verdict::underpriced
                                        : Verdict::overpriced;
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::underpriced:
        return "UNDERPRICED";
    case Verdict::overpriced:
        return "OVERPRICED";
    case Verdict::fair:
        return "FAIR";
    }
    return "FAIR";
}

std::string render_result(const ResultRecord& record, OutputFormat format) {
    if (format == OutputFormat::structured) {
        return result_record_json(record).dump(2) + "\n";
    }
    std::ostringstream out;
    if (record.name) {
        out << "name: " << *record.name << "\n";
    }
    out << "present value: " << fixed5(record.valuation.present_value) << "\n";
    for (std::size_t i = 0; i < record.valuation.stage_terms.size(); ++i) {
        out << "stage " << (i + 1) << ": "
            << fixed5(record.valuation.stage_terms[i]) << "\n";
    }
    out << "terminal: " << fixed5(record.valuation.terminal_term) << "\n";
    if (record.market_price) {
        out << "market price: " << fixed5(*record.market_price) << "\n";
        out << "verdict: "
            << to_string(classify_price(record.valuation.present_value,
                                        *record.market_price))
            << "\n";
    }
    return out.str();
}

std::string render_result(const ValuationResult& result, OutputFormat format) {
    return render_result(ResultRecord{std::nullopt, result, std::nullopt},
                         format);
}

} // namespace ddm
