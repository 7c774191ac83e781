#include "greedy/schedule.hpp"

#include <string>

#include "greedy/errors.hpp"

namespace greedy {

WeakSchedule::WeakSchedule(std::vector<double> values) : values_(std::move(values)) {}

WeakSchedule WeakSchedule::constant(double t) {
    if (!(t > 0.0 && t <= 1.0)) {
        throw ConfigError("weakness parameter t must lie in (0,1], got " +
                          std::to_string(t));
    }
    return WeakSchedule(std::vector<double>{t});
}

WeakSchedule WeakSchedule::from_values(const std::vector<double>& values) {
    if (values.empty()) {
        throw ConfigError("weakness schedule must not be empty");
    }
    double prev = 1.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double t = values[i];
        if (!(t > 0.0 && t <= 1.0)) {
            throw ConfigError("weakness schedule entry " + std::to_string(i + 1) +
                              " must lie in (0,1], got " + std::to_string(t));
        }
        if (t > prev) {
            throw ConfigError("weakness schedule must be nonincreasing, entry " +
                              std::to_string(i + 1) + " rises to " + std::to_string(t));
        }
        prev = t;
    }
    return WeakSchedule(values);
}

double WeakSchedule::at(std::size_t m) const {
    if (m == 0) m = 1;
    const std::size_t idx = (m <= values_.size()) ? m - 1 : values_.size() - 1;
    return values_[idx];
}

double WeakSchedule::sum_sq(std::size_t m) const {
    if (values_.size() == 1) {
        return static_cast<double>(m) * values_[0] * values_[0];
    }
    double s = 0.0;
    const std::size_t explicit_part = (m < values_.size()) ? m : values_.size();
    for (std::size_t k = 0; k < explicit_part; ++k) s += values_[k] * values_[k];
    if (m > values_.size()) {
        const double tail = values_.back();
        s += static_cast<double>(m - values_.size()) * tail * tail;
    }
    return s;
}

void GreedyConfig::validate() const {
    if (!(b > 0.0 && b <= 1.0)) {
        throw ConfigError("relaxation parameter b must lie in (0,1], got " +
                          std::to_string(b));
    }
    if (max_iter < 1) {
        throw ConfigError("max_iter must be at least 1");
    }
    if (!(residual_atol >= 0.0)) {
        throw ConfigError("residual_atol must be nonnegative");
    }
}

} // namespace greedy
