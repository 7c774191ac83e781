#include "greedy/selection.hpp"

#include <cmath>

#include "greedy/errors.hpp"

namespace greedy {

const char* to_string(SelectionPolicy policy) {
    switch (policy) {
    case SelectionPolicy::Max:
        return "max";
    case SelectionPolicy::ThresholdFirst:
        return "threshold-first";
    }
    return "max";
}

SelectionPolicy parse_policy(const std::string& name) {
    if (name == "max") return SelectionPolicy::Max;
    if (name == "threshold-first" || name == "threshold_first") {
        return SelectionPolicy::ThresholdFirst;
    }
    throw ConfigError("unknown selection policy '" + name +
                      "' (expected max or threshold-first)");
}

AtomSelection best_atom(const Vector& f, const Dictionary& dict) {
    check_same_dim(f, dict.atom(0));
    AtomSelection sel;
    for (std::size_t i = 0; i < dict.size(); ++i) {
        const double v = inner(f, dict.atom(i));
        const double a = std::abs(v);
        if (a > sel.sup_value) {
            sel.sup_value = a;
            sel.value = a;
            sel.index = i;
            sel.sign = (v < 0.0) ? -1 : 1;
        }
    }
    return sel;
}

AtomSelection weak_atom(const Vector& f, const Dictionary& dict, double t,
                        SelectionPolicy policy) {
    if (!(t > 0.0 && t <= 1.0)) {
        throw ConfigError("weakness parameter t must lie in (0,1], got " +
                          std::to_string(t));
    }
    AtomSelection best = best_atom(f, dict);
    if (policy == SelectionPolicy::Max) return best;

    const double threshold = t * best.sup_value;
    for (std::size_t i = 0; i < dict.size(); ++i) {
        const double v = inner(f, dict.atom(i));
        if (std::abs(v) >= threshold) {
            AtomSelection sel;
            sel.index = i;
            sel.sign = (v < 0.0) ? -1 : 1;
            sel.value = std::abs(v);
            sel.sup_value = best.sup_value;
            return sel;
        }
    }
    return best; // unreachable: the maximizer always clears its own threshold
}

} // namespace greedy
