#include "seqbound/table.hpp"

#include "seqbound/errors.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

namespace seqbound {

TableFormat parse_table_format(std::string_view name) {
    if (name == "csv") return TableFormat::Csv;
    if (name == "json") return TableFormat::Json;
    throw ArgumentError("unknown table format '" + std::string(name) + "' (expected csv or json)");
}

std::string format_double(double v) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw IoError("format_double: conversion failed");
    return std::string(buf, end);
}

OutputTable::OutputTable(std::vector<std::string> names) : names_(std::move(names)), columns_(names_.size()) {
    if (names_.empty()) throw ArgumentError("OutputTable: at least one column required");
    for (const auto& n : names_)
        if (n.empty() || n.find_first_of(",\n\r\"") != std::string::npos)
            throw ArgumentError("OutputTable: invalid column name '" + n + "'");
}

void OutputTable::add_row(const std::vector<double>& values) {
    if (values.size() != names_.size())
        throw ArgumentError("OutputTable: row has " + std::to_string(values.size()) + " values, expected " +
                            std::to_string(names_.size()));
    for (std::size_t i = 0; i < values.size(); ++i) columns_[i].push_back(values[i]);
}

std::string OutputTable::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (i) out += ',';
        out += names_[i];
    }
    out += '\n';
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (i) out += ',';
            out += format_double(columns_[i][r]);
        }
        out += '\n';
    }
    return out;
}

std::string OutputTable::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < names_.size(); ++i) j[names_[i]] = columns_[i];
    return j.dump(2) + "\n";
}

std::string OutputTable::render(TableFormat format) const {
    return format == TableFormat::Csv ? to_csv() : to_json();
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

} // namespace

OutputTable OutputTable::parse_csv(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const auto nl = text.find('\n', start);
        lines.push_back(text.substr(start, nl - start));
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    if (lines.empty()) throw IoError("csv line 1: missing header row");

    std::vector<std::string> names;
    for (auto f : split(lines[0])) names.emplace_back(f);
    OutputTable table(std::move(names));
    for (std::size_t l = 1; l < lines.size(); ++l) {
        const auto fields = split(lines[l]);
        if (fields.size() != table.names_.size())
            throw IoError("csv line " + std::to_string(l + 1) + ": expected " + std::to_string(table.names_.size()) +
                          " fields, found " + std::to_string(fields.size()));
        std::vector<double> row(fields.size());
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const auto [end, ec] = std::from_chars(fields[i].data(), fields[i].data() + fields[i].size(), row[i]);
            if (ec != std::errc{} || end != fields[i].data() + fields[i].size())
                throw IoError("csv line " + std::to_string(l + 1) + ": field " + std::to_string(i + 1) +
                              " is not a number: '" + std::string(fields[i]) + "'");
        }
        table.add_row(row);
    }
    return table;
}

} // namespace seqbound
