#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace urnlab {

using Vec = std::vector<double>;
using Complex = std::complex<double>;

// Small dense row-major matrix. Everything in this library is k x k with k
// rarely above a few dozen, so there is no blocking, no views, no cleverness.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static Mat ones(std::size_t n) { return Mat(n, n, 1.0); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    double operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    const double* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool operator==(const Mat& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

inline Mat transpose(const Mat& a) {
    Mat t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    assert(a.cols() == b.rows());
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const double ail = a(i, l);
            if (ail == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += ail * b(l, j);
        }
    return c;
}

// Row vector times matrix.
inline Vec vec_mat(const Vec& x, const Mat& a) {
    assert(x.size() == a.rows());
    Vec y(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double xi = x[i];
        if (xi == 0.0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) y[j] += xi * a(i, j);
    }
    return y;
}

inline double sum(const Vec& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

// Exact sum of a few doubles (Neumaier), used when rounding drift matters.
inline double sum_exact(const Vec& v) {
    double s = 0.0, c = 0.0;
    for (double x : v) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    return s + c;
}

inline double inf_norm(const Vec& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline double inf_norm_diff(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double max_abs_diff(const Mat& a, const Mat& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

inline double frobenius_norm(const Mat& a) {
    double s = 0.0;
    for (double x : a.data()) s += x * x;
    return std::sqrt(s);
}

inline Vec scaled(Vec v, double s) {
    for (double& x : v) x *= s;
    return v;
}

}  // namespace urnlab
