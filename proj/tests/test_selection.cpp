#include <doctest.h>

#include <cmath>

#include "greedy/dictionary.hpp"
#include "greedy/errors.hpp"
#include "greedy/rng.hpp"
#include "greedy/selection.hpp"

using namespace greedy;

namespace {

Vector random_vector(Rng& rng, std::size_t dim) {
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = rng.normal();
    return v;
}

// straight double loop, no tie-break subtleties shared with the implementation
AtomSelection naive_best(const Vector& f, const Dictionary& dict) {
    AtomSelection best;
    double sup = -1.0;
    for (std::size_t i = 0; i < dict.size(); ++i) {
        double v = 0.0;
        for (std::size_t k = 0; k < f.dim(); ++k) v += f[k] * dict.atom(i)[k];
        if (std::abs(v) > sup) {
            sup = std::abs(v);
            best.index = i;
            best.sign = v < 0.0 ? -1 : 1;
            best.value = std::abs(v);
            best.sup_value = sup;
        }
    }
    return best;
}

} // namespace

TEST_CASE("best_atom picks the largest magnitude inner product") {
    const Dictionary dict = make_orthonormal_dictionary(3, 3);
    const Vector f(std::vector<double>{0.2, -0.9, 0.5});
    const AtomSelection sel = best_atom(f, dict);
    CHECK(sel.index == 1);
    CHECK(sel.sign == -1);
    CHECK(sel.value == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(sel.sup_value == sel.value);
}

TEST_CASE("best_atom breaks ties toward the lowest index") {
    std::vector<Vector> atoms;
    atoms.emplace_back(std::vector<double>{1.0, 0.0});
    atoms.emplace_back(std::vector<double>{0.0, 1.0});
    const Dictionary dict(std::move(atoms), "tie");
    const Vector f(std::vector<double>{0.5, 0.5});
    CHECK(best_atom(f, dict).index == 0);
    const Vector g(std::vector<double>{-0.5, 0.5});
    const AtomSelection sel = best_atom(g, dict);
    CHECK(sel.index == 0);
    CHECK(sel.sign == -1);
}

TEST_CASE("best_atom matches a naive scan on random instances") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = 2 + rng.uniform_index(6);
        const std::size_t count = 1 + rng.uniform_index(12);
        const Dictionary dict = make_random_unit_dictionary(dim, count, rng.split());
        const Vector f = random_vector(rng, dim);
        const AtomSelection a = best_atom(f, dict);
        const AtomSelection b = naive_best(f, dict);
        CHECK(a.index == b.index);
        CHECK(a.sign == b.sign);
        CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));
    }
}

TEST_CASE("weak_atom with t=1 equals best_atom under both policies") {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const Dictionary dict = make_random_unit_dictionary(4, 9, rng.split());
        const Vector f = random_vector(rng, 4);
        const AtomSelection best = best_atom(f, dict);
        for (const auto policy : {SelectionPolicy::Max, SelectionPolicy::ThresholdFirst}) {
            const AtomSelection weak = weak_atom(f, dict, 1.0, policy);
            CHECK(weak.index == best.index);
            CHECK(weak.sign == best.sign);
            CHECK(weak.value == best.value);
        }
    }
}

TEST_CASE("threshold-first returns the first atom clearing the bar") {
    const Dictionary dict = make_orthonormal_dictionary(3, 3);
    const Vector f(std::vector<double>{0.6, -0.7, 1.0});
    const AtomSelection sel = weak_atom(f, dict, 0.5, SelectionPolicy::ThresholdFirst);
    CHECK(sel.index == 0); // 0.6 >= 0.5 * 1.0
    CHECK(sel.sign == 1);
    CHECK(sel.value == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(sel.sup_value == doctest::Approx(1.0).epsilon(1e-15));

    const AtomSelection strict = weak_atom(f, dict, 0.8, SelectionPolicy::ThresholdFirst);
    CHECK(strict.index == 2); // only 1.0 >= 0.8
}

TEST_CASE("threshold-first selection always satisfies the weakness inequality") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = 2 + rng.uniform_index(5);
        const Dictionary dict = make_random_unit_dictionary(dim, 3 + rng.uniform_index(10),
                                                            rng.split());
        const Vector f = random_vector(rng, dim);
        const double t = 0.05 + 0.95 * rng.uniform01();
        const AtomSelection sel = weak_atom(f, dict, t, SelectionPolicy::ThresholdFirst);
        const AtomSelection best = best_atom(f, dict);
        CHECK(sel.value >= t * best.sup_value - 1e-12);
        CHECK(sel.sup_value == best.sup_value);
    }
}

TEST_CASE("weak_atom validates t") {
    const Dictionary dict = make_orthonormal_dictionary(2, 2);
    const Vector f(std::vector<double>{1.0, 0.0});
    CHECK_THROWS_AS(weak_atom(f, dict, 0.0, SelectionPolicy::Max), ConfigError);
    CHECK_THROWS_AS(weak_atom(f, dict, 1.5, SelectionPolicy::Max), ConfigError);
    CHECK_THROWS_AS(weak_atom(f, dict, -0.2, SelectionPolicy::Max), ConfigError);
}

TEST_CASE("selection of the zero vector reports value zero") {
    const Dictionary dict = make_orthonormal_dictionary(2, 2);
    const Vector f(std::vector<double>{0.0, 0.0});
    const AtomSelection sel = best_atom(f, dict);
    CHECK(sel.value == 0.0);
    CHECK(sel.sup_value == 0.0);
}

TEST_CASE("policy names round-trip") {
    CHECK(parse_policy("max") == SelectionPolicy::Max);
    CHECK(parse_policy("threshold-first") == SelectionPolicy::ThresholdFirst);
    CHECK(parse_policy("threshold_first") == SelectionPolicy::ThresholdFirst);
    CHECK(std::string(to_string(SelectionPolicy::Max)) == "max");
    CHECK(std::string(to_string(SelectionPolicy::ThresholdFirst)) == "threshold-first");
    CHECK_THROWS_AS(parse_policy("fastest"), ConfigError);
}
