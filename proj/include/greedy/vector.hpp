#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "greedy/errors.hpp"

namespace greedy {

/// Dense real vector with Euclidean inner product.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : c_(dim, 0.0) {}
    explicit Vector(std::vector<double> coords) : c_(std::move(coords)) {}

    std::size_t dim() const { return c_.size(); }
    double operator[](std::size_t i) const { return c_[i]; }
    double& operator[](std::size_t i) { return c_[i]; }
    const double* data() const { return c_.data(); }
    double* data() { return c_.data(); }
    const std::vector<double>& coords() const { return c_; }

    bool operator==(const Vector&) const = default;

private:
    std::vector<double> c_;
};

inline void check_same_dim(const Vector& u, const Vector& v) {
    if (u.dim() != v.dim()) {
        throw ConfigError("dimension mismatch: " + std::to_string(u.dim()) +
                          " vs " + std::to_string(v.dim()));
    }
}

inline bool all_finite(const Vector& v) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (!std::isfinite(v[i])) return false;
    }
    return true;
}

inline double inner(const Vector& u, const Vector& v) {
    check_same_dim(u, v);
    const double* a = u.data();
    const double* b = v.data();
    double s = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm_sq(const Vector& v) {
    const double* a = v.data();
    double s = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i) s += a[i] * a[i];
    return s;
}

inline double norm(const Vector& v) { return std::sqrt(norm_sq(v)); }

/// y += alpha * x
inline void axpy(double alpha, const Vector& x, Vector& y) {
    check_same_dim(x, y);
    const double* a = x.data();
    double* b = y.data();
    for (std::size_t i = 0; i < x.dim(); ++i) b[i] += alpha * a[i];
}

inline Vector add(const Vector& u, const Vector& v) {
    check_same_dim(u, v);
    Vector r(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) r[i] = u[i] + v[i];
    return r;
}

inline Vector sub(const Vector& u, const Vector& v) {
    check_same_dim(u, v);
    Vector r(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) r[i] = u[i] - v[i];
    return r;
}

inline void scale(Vector& v, double alpha) {
    double* a = v.data();
    for (std::size_t i = 0; i < v.dim(); ++i) a[i] *= alpha;
}

inline Vector scaled(const Vector& v, double alpha) {
    Vector r = v;
    scale(r, alpha);
    return r;
}

} // namespace greedy
