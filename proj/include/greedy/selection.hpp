#pragma once

#include <string>

#include "greedy/dictionary.hpp"

namespace greedy {

/// How a weak search picks among atoms that clear the threshold.
///  Max           - always return the maximizer (ties: lowest index, then +1).
///  ThresholdFirst- return the lowest-indexed signed atom whose inner product
///                  reaches t * sup; exercises genuinely weak selection.
enum class SelectionPolicy { Max, ThresholdFirst };

const char* to_string(SelectionPolicy policy);
SelectionPolicy parse_policy(const std::string& name);

struct AtomSelection {
    std::size_t index = 0;
    int sign = 1;
    double value = 0.0;     // <f, sign * atom(index)>, always >= 0
    double sup_value = 0.0; // max over +/- atoms of <f, g>
};

/// Signed argmax of |<f, g>| over the dictionary.
AtomSelection best_atom(const Vector& f, const Dictionary& dict);

/// Any signed atom with <f, sign*g> >= t * sup; which one depends on policy.
/// t must lie in (0, 1].
AtomSelection weak_atom(const Vector& f, const Dictionary& dict, double t,
                        SelectionPolicy policy);

} // namespace greedy
