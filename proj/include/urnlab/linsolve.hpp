#pragma once

#include <cmath>
#include <vector>

#include "urnlab/errors.hpp"
#include "urnlab/types.hpp"

namespace urnlab {

// Dense LU with partial pivoting. Matrices here are tiny (k x k), so a
// direct factorisation plus one step of iterative refinement is plenty.
struct LuFactors {
    Mat lu;
    std::vector<int> piv;
    bool singular = false;
    int sign = 1;
};

inline LuFactors lu_factor(Mat a) {
    const std::size_t n = a.rows();
    LuFactors f{std::move(a), std::vector<int>(n), false, 1};
    Mat& m = f.lu;
    double scale = 0.0;
    for (double x : m.data()) scale = std::max(scale, std::abs(x));
    const double tiny = scale * n * 1e-14;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(m(r, c)) > std::abs(m(p, c))) p = r;
        f.piv[c] = static_cast<int>(p);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(p, j));
            f.sign = -f.sign;
        }
        if (std::abs(m(c, c)) <= tiny) {
            f.singular = true;
            continue;
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            const double l = m(r, c) / m(c, c);
            m(r, c) = l;
            for (std::size_t j = c + 1; j < n; ++j) m(r, j) -= l * m(c, j);
        }
    }
    return f;
}

inline Vec lu_solve(const LuFactors& f, Vec b) {
    const std::size_t n = f.lu.rows();
    for (std::size_t i = 0; i < n; ++i) {
        std::swap(b[i], b[static_cast<std::size_t>(f.piv[i])]);
        for (std::size_t j = 0; j < i; ++j) b[i] -= f.lu(i, j) * b[j];
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) b[i] -= f.lu(i, j) * b[j];
        b[i] /= f.lu(i, i);
    }
    return b;
}

// Solve A x = b with one step of iterative refinement.
inline Vec solve_refined(const Mat& a, const Vec& b, const LuFactors& f) {
    const std::size_t n = a.rows();
    Vec x = lu_solve(f, b);
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0, c = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double term = a(i, j) * x[j];
            const double t = s + term;
            if (std::abs(s) >= std::abs(term))
                c += (s - t) + term;
            else
                c += (term - t) + s;
            s = t;
        }
        r[i] = b[i] - (s + c);
    }
    Vec dx = lu_solve(f, std::move(r));
    for (std::size_t i = 0; i < n; ++i) x[i] += dx[i];
    return x;
}

inline Vec solve_refined(const Mat& a, const Vec& b) {
    LuFactors f = lu_factor(a);
    if (f.singular) raise(Err::SingularSystem, "matrix is numerically singular");
    return solve_refined(a, b, f);
}

inline Mat inverse(const Mat& a) {
    const std::size_t n = a.rows();
    LuFactors f = lu_factor(a);
    if (f.singular) raise(Err::SingularSystem, "matrix is numerically singular");
    Mat inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec e(n, 0.0);
        e[j] = 1.0;
        Vec col = solve_refined(a, e, f);
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
}

inline double determinant(const Mat& a) {
    LuFactors f = lu_factor(a);
    if (f.singular) return 0.0;
    double d = f.sign;
    for (std::size_t i = 0; i < a.rows(); ++i) d *= f.lu(i, i);
    return d;
}

}  // namespace urnlab
