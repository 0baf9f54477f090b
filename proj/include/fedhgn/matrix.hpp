#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "fedhgn/errors.hpp"
#include "fedhgn/rng.hpp"

namespace fedhgn {

// Dense row-major matrix of 64-bit floats. All model math is double
// precision, including on the wire, so equivalence tests can demand
// bit-exact results.
struct Matrix {
    int32_t rows = 0;
    int32_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int32_t r, int32_t c) : rows(r), cols(c), data(size_t(r) * size_t(c), 0.0) {
        if (r < 0 || c < 0) throw ContractViolation("negative matrix dimension");
    }

    static Matrix zeros(int32_t r, int32_t c) { return Matrix(r, c); }

    double& at(int32_t i, int32_t j) { return data[size_t(i) * cols + j]; }
    double at(int32_t i, int32_t j) const { return data[size_t(i) * cols + j]; }

    size_t size() const { return data.size(); }
    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }

    bool operator==(const Matrix& o) const = default;
};

inline bool all_finite(const Matrix& m) {
    for (double v : m.data)
        if (!std::isfinite(v)) return false;
    return true;
}

inline void require_shape(const Matrix& m, int32_t r, int32_t c, const char* what) {
    if (m.rows != r || m.cols != c) throw ContractViolation(std::string("shape mismatch: ") + what);
}

// Uniform Xavier/Glorot init over the matrix's own fan-in/fan-out.
inline Matrix xavier_uniform(int32_t rows, int32_t cols, Rng& rng) {
    Matrix m(rows, cols);
    double limit = std::sqrt(6.0 / double(rows + cols));
    for (double& v : m.data) v = rng.uniform(-limit, limit);
    return m;
}

}  // namespace fedhgn
