#include "seqbound/state_io.hpp"

#include "seqbound/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace seqbound {

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// 1-based line and column of a byte offset.
std::string locate(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') ++line, column = 1;
        else ++column;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

double number_field(const nlohmann::json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw IoError(std::string("state file: missing key '") + key + "'");
    if (!it->is_number()) throw IoError(std::string("state file: '") + key + "' must be a number");
    return it->get<double>();
}

} // namespace

std::string serialize_state(const StateGrid& state) {
    std::string out = "{\n  \"x_min\": " + g17(state.x_min()) + ",\n  \"x_max\": " + g17(state.x_max()) +
                      ",\n  \"samples\": [\n";
    const auto samples = state.baked_samples();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        out += "    [" + g17(samples[i].real()) + ", " + g17(samples[i].imag()) + "]";
        out += i + 1 < samples.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

StateGrid parse_state(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError("state file: parse error at " + locate(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + e.what());
    }
    if (!j.is_object()) throw IoError("state file: top level must be an object");
    const double x_min = number_field(j, "x_min");
    const double x_max = number_field(j, "x_max");
    const auto it = j.find("samples");
    if (it == j.end() || !it->is_array()) throw IoError("state file: 'samples' must be an array of [re, im] pairs");
    std::vector<Complex> samples;
    samples.reserve(it->size());
    for (std::size_t i = 0; i < it->size(); ++i) {
        const auto& pair = (*it)[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw IoError("state file: samples[" + std::to_string(i) + "] is not a [re, im] number pair");
        samples.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return StateGrid(x_min, x_max, std::move(samples));
}

StateGrid read_state_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open state file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_state(buf.str());
    } catch (const IoError& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

void write_text(const std::filesystem::path& path, std::string_view text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw IoError("failed writing to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    out.close();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void write_state_file(const std::filesystem::path& path, const StateGrid& state) {
    write_text(path, serialize_state(state));
}

} // namespace seqbound
