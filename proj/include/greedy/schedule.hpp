#pragma once

#include <cstddef>
#include <vector>

#include "greedy/selection.hpp"

namespace greedy {

// Nonincreasing weakness sequence t_1 >= t_2 >= ... with entries in (0,1].
// Explicit schedules repeat their last value past the end, so every
// schedule is conceptually infinite.
class WeakSchedule {
public:
    static WeakSchedule constant(double t);
    static WeakSchedule from_values(const std::vector<double>& values);

    // 1-based: at(1) is the weakness used for the first iteration.
    double at(std::size_t m) const;

    // sum of t_k^2 for k = 1..m
    double sum_sq(std::size_t m) const;

    bool is_constant() const { return values_.size() == 1; }
    const std::vector<double>& values() const { return values_; }

private:
    explicit WeakSchedule(std::vector<double> values);
    std::vector<double> values_;
};

struct GreedyConfig {
    double b = 1.0;
    WeakSchedule schedule = WeakSchedule::constant(1.0);
    SelectionPolicy policy = SelectionPolicy::Max;
    std::size_t max_iter = 1000;
    double residual_atol = 1e-12;

    void validate() const;
};

} // namespace greedy
