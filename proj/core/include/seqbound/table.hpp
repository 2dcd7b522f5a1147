#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace seqbound {

enum class TableFormat { Csv, Json };

TableFormat parse_table_format(std::string_view name);

/// Named columns of equal length.
///
/// CSV: header row, comma separator, LF endings, numbers in shortest
/// round-trip form. JSON: an object mapping column name to number array,
/// columns in insertion order.
class OutputTable {
public:
    explicit OutputTable(std::vector<std::string> names);

    const std::vector<std::string>& names() const noexcept { return names_; }
    std::size_t rows() const noexcept { return columns_.empty() ? 0 : columns_.front().size(); }
    const std::vector<double>& column(std::size_t i) const { return columns_.at(i); }

    // ArgumentError unless values.size() == names().size().
    void add_row(const std::vector<double>& values);

    std::string to_csv() const;
    std::string to_json() const;
    std::string render(TableFormat format) const;

    // IoError on malformed input, with the offending line number.
    static OutputTable parse_csv(std::string_view text);

    bool operator==(const OutputTable&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<double>> columns_;
};

// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

} // namespace seqbound
