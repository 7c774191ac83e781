#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "greedy/dictionary.hpp"
#include "greedy/vector.hpp"

namespace greedy {

enum class DictFormat { Csv, Json };

// Shortest representation that round-trips a double (%.17g).
std::string fmt_g17(double v);

Dictionary load_dictionary(std::istream& in, DictFormat format);
Dictionary load_dictionary_text(const std::string& text, DictFormat format);

// Dispatches on extension: ".json" selects the JSON format, anything else CSV.
Dictionary load_dictionary_file(const std::string& path);

// Exactly one non-empty row of comma-separated numbers.
Vector load_signal_csv(std::istream& in);
Vector load_signal_file(const std::string& path);

// Flat list of numbers separated by commas and/or newlines.
std::vector<double> load_values(std::istream& in);
std::vector<double> load_values_file(const std::string& path);

std::string dictionary_to_csv(const Dictionary& dict);

// Whole-buffer write: the target file never exists in a partial state
// short of an I/O failure mid-flush.
void write_file(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

} // namespace greedy
