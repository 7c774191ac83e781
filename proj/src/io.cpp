#include "greedy/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "greedy/errors.hpp"

namespace greedy {
namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& token, const std::string& where) {
    const std::string t = trim(token);
    if (t.empty()) {
        throw ParseError(where + ": empty field");
    }
    double value = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(where + ": cannot parse '" + t + "' as a number");
    }
    return value;
}

std::vector<double> parse_csv_row(const std::string& line, const std::string& where) {
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        const std::string field = (comma == std::string::npos)
                                      ? line.substr(start)
                                      : line.substr(start, comma - start);
        row.push_back(parse_double(field, where));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return row;
}

std::vector<std::vector<double>> parse_csv_rows(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        rows.push_back(parse_csv_row(line, "line " + std::to_string(lineno)));
    }
    return rows;
}

} // namespace

std::string fmt_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Dictionary load_dictionary(std::istream& in, DictFormat format) {
    if (format == DictFormat::Csv) {
        auto rows = parse_csv_rows(in);
        if (rows.empty()) {
            throw ParseError("dictionary CSV contains no atoms");
        }
        const std::size_t dim = rows[0].size();
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (rows[i].size() != dim) {
                throw InconsistentRowError(
                    "dictionary row " + std::to_string(i + 1) + " has " +
                    std::to_string(rows[i].size()) + " entries, expected " +
                    std::to_string(dim));
            }
        }
        std::vector<Vector> atoms;
        atoms.reserve(rows.size());
        for (auto& row : rows) atoms.emplace_back(std::move(row));
        return Dictionary(std::move(atoms), "csv");
    }

    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("dictionary JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("atoms")) {
        throw ParseError("dictionary JSON must be an object with 'dim' and 'atoms'");
    }
    if (!j["dim"].is_number_unsigned() && !j["dim"].is_number_integer()) {
        throw ParseError("dictionary JSON: 'dim' must be an integer");
    }
    const long long dim_ll = j["dim"].get<long long>();
    if (dim_ll <= 0) {
        throw ParseError("dictionary JSON: 'dim' must be positive");
    }
    const std::size_t dim = static_cast<std::size_t>(dim_ll);
    if (!j["atoms"].is_array() || j["atoms"].empty()) {
        throw ParseError("dictionary JSON: 'atoms' must be a non-empty array");
    }
    std::vector<Vector> atoms;
    atoms.reserve(j["atoms"].size());
    std::size_t idx = 0;
    for (const auto& a : j["atoms"]) {
        ++idx;
        if (!a.is_array()) {
            throw ParseError("dictionary JSON: atom " + std::to_string(idx) +
                             " is not an array");
        }
        if (a.size() != dim) {
            throw InconsistentRowError("dictionary JSON: atom " + std::to_string(idx) +
                                       " has " + std::to_string(a.size()) +
                                       " entries, expected " + std::to_string(dim));
        }
        std::vector<double> coords;
        coords.reserve(dim);
        for (const auto& x : a) {
            if (!x.is_number()) {
                throw ParseError("dictionary JSON: atom " + std::to_string(idx) +
                                 " contains a non-numeric entry");
            }
            coords.push_back(x.get<double>());
        }
        atoms.emplace_back(std::move(coords));
    }
    return Dictionary(std::move(atoms), "json");
}

Dictionary load_dictionary_text(const std::string& text, DictFormat format) {
    std::istringstream in(text);
    return load_dictionary(in, format);
}

Dictionary load_dictionary_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open dictionary file '" + path + "'");
    }
    const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    return load_dictionary(in, json ? DictFormat::Json : DictFormat::Csv);
}

Vector load_signal_csv(std::istream& in) {
    auto rows = parse_csv_rows(in);
    if (rows.empty()) {
        throw ParseError("signal file contains no data row");
    }
    if (rows.size() > 1) {
        throw ParseError("signal file must contain exactly one row, found " +
                         std::to_string(rows.size()));
    }
    return Vector(std::move(rows[0]));
}

Vector load_signal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open signal file '" + path + "'");
    }
    return load_signal_csv(in);
}

std::vector<double> load_values(std::istream& in) {
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto row = parse_csv_row(line, "line " + std::to_string(lineno));
        values.insert(values.end(), row.begin(), row.end());
    }
    if (values.empty()) {
        throw ParseError("values file contains no numbers");
    }
    return values;
}

std::vector<double> load_values_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open values file '" + path + "'");
    }
    return load_values(in);
}

std::string dictionary_to_csv(const Dictionary& dict) {
    std::string out;
    for (std::size_t i = 0; i < dict.size(); ++i) {
        const Vector& a = dict.atom(i);
        for (std::size_t k = 0; k < a.dim(); ++k) {
            if (k) out += ',';
            out += fmt_g17(a[k]);
        }
        out += '\n';
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
        throw IoError("failed while writing '" + path + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace greedy
