#pragma once

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <vector>

#include "urnlab/errors.hpp"
#include "urnlab/types.hpp"

namespace urnlab {

namespace detail {

inline double sign_like(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

// Householder reduction to upper Hessenberg form, in place.
inline void hessenberg(Mat& a) {
    const int n = static_cast<int>(a.rows());
    std::vector<double> v(n);
    for (int c = 0; c + 2 < n; ++c) {
        double norm2 = 0.0;
        for (int i = c + 1; i < n; ++i) norm2 += a(i, c) * a(i, c);
        const double sigma = std::sqrt(norm2);
        if (sigma == 0.0) continue;
        double below2 = norm2 - a(c + 1, c) * a(c + 1, c);
        if (below2 <= norm2 * DBL_EPSILON * DBL_EPSILON) {
            for (int i = c + 2; i < n; ++i) a(i, c) = 0.0;
            continue;
        }
        const double alpha = -sign_like(sigma, a(c + 1, c));
        double vtv = 0.0;
        for (int i = c + 1; i < n; ++i) {
            v[i] = a(i, c);
            if (i == c + 1) v[i] -= alpha;
            vtv += v[i] * v[i];
        }
        const double beta = 2.0 / vtv;
        // A <- H A (rows c+1.., all columns)
        for (int j = c; j < n; ++j) {
            double w = 0.0;
            for (int i = c + 1; i < n; ++i) w += v[i] * a(i, j);
            w *= beta;
            for (int i = c + 1; i < n; ++i) a(i, j) -= w * v[i];
        }
        // A <- A H (all rows, columns c+1..)
        for (int i = 0; i < n; ++i) {
            double w = 0.0;
            for (int j = c + 1; j < n; ++j) w += a(i, j) * v[j];
            w *= beta;
            for (int j = c + 1; j < n; ++j) a(i, j) -= w * v[j];
        }
        a(c + 1, c) = alpha;
        for (int i = c + 2; i < n; ++i) a(i, c) = 0.0;
    }
}

// Francis double-shift QR on an upper Hessenberg matrix; eigenvalues only.
// Classic EISPACK hqr, zero-based, with explicit-epsilon deflation tests.
inline void hqr_eigenvalues(Mat& a, std::vector<Complex>& out) {
    const int n = static_cast<int>(a.rows());
    out.assign(n, Complex(0.0, 0.0));
    const double eps = DBL_EPSILON;

    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));
    if (anorm == 0.0) return;  // the zero matrix

    int nn = n - 1;
    double t = 0.0;
    double p = 0.0, q = 0.0, r = 0.0, x, y, z, w, s;
    while (nn >= 0) {
        int its = 0;
        int l;
        do {
            for (l = nn; l >= 1; --l) {
                s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(a(l, l - 1)) <= eps * s) {
                    a(l, l - 1) = 0.0;
                    break;
                }
            }
            if (l < 0) l = 0;
            x = a(nn, nn);
            if (l == nn) {
                out[nn] = Complex(x + t, 0.0);
                --nn;
            } else {
                y = a(nn - 1, nn - 1);
                w = a(nn, nn - 1) * a(nn - 1, nn);
                if (l == nn - 1) {
                    p = 0.5 * (y - x);
                    q = p * p + w;
                    z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0.0) {
                        z = p + sign_like(z, p);
                        double wr1 = x + z;
                        double wr2 = (z != 0.0) ? x - w / z : x + z;
                        out[nn - 1] = Complex(wr1, 0.0);
                        out[nn] = Complex(wr2, 0.0);
                    } else {
                        out[nn - 1] = Complex(x + p, -z);
                        out[nn] = Complex(x + p, z);
                    }
                    nn -= 2;
                } else {
                    if (its == 30)
                        raise(Err::EigenFailure, "QR iteration did not converge");
                    if (its == 10 || its == 20) {
                        t += x;
                        for (int i = 0; i <= nn; ++i) a(i, i) -= x;
                        s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        w = -0.4375 * s * s;
                    }
                    ++its;
                    int m;
                    for (m = nn - 2; m >= l; --m) {
                        z = a(m, m);
                        r = x - z;
                        s = y - z;
                        p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
                        q = a(m + 1, m + 1) - z - r - s;
                        r = a(m + 2, m + 1);
                        s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
                        const double v = std::abs(p) * (std::abs(a(m - 1, m - 1)) +
                                                        std::abs(z) + std::abs(a(m + 1, m + 1)));
                        if (u <= eps * v) break;
                    }
                    if (m < l) m = l;
                    for (int i = m + 2; i <= nn; ++i) {
                        a(i, i - 2) = 0.0;
                        if (i != m + 2) a(i, i - 3) = 0.0;
                    }
                    for (int k = m; k <= nn - 1; ++k) {
                        if (k != m) {
                            p = a(k, k - 1);
                            q = a(k + 1, k - 1);
                            r = 0.0;
                            if (k + 1 != nn) r = a(k + 2, k - 1);
                            x = std::abs(p) + std::abs(q) + std::abs(r);
                            if (x != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        s = sign_like(std::sqrt(p * p + q * q + r * r), p);
                        if (s == 0.0) continue;
                        if (k == m) {
                            if (l != m) a(k, k - 1) = -a(k, k - 1);
                        } else {
                            a(k, k - 1) = -s * x;
                        }
                        p += s;
                        x = p / s;
                        y = q / s;
                        z = r / s;
                        q /= p;
                        r /= p;
                        for (int j = k; j <= nn; ++j) {
                            p = a(k, j) + q * a(k + 1, j);
                            if (k + 1 != nn) {
                                p += r * a(k + 2, j);
                                a(k + 2, j) -= p * z;
                            }
                            a(k + 1, j) -= p * y;
                            a(k, j) -= p * x;
                        }
                        const int mmin = nn < k + 3 ? nn : k + 3;
                        for (int i = l; i <= mmin; ++i) {
                            p = x * a(i, k) + y * a(i, k + 1);
                            if (k + 1 != nn) {
                                p += z * a(i, k + 2);
                                a(i, k + 2) -= p * r;
                            }
                            a(i, k + 1) -= p * q;
                            a(i, k) -= p;
                        }
                    }
                }
            }
        } while (l < nn - 1);
    }
}

}  // namespace detail

// All complex eigenvalues of a small dense real matrix via Hessenberg
// reduction and the Francis double-shift QR iteration. Throws EigenFailure
// if the iteration fails to deflate within the classic 30-step budget.
inline std::vector<Complex> eigenvalues(Mat a) {
    if (a.rows() != a.cols()) raise(Err::DimensionMismatch, "eigenvalues need a square matrix");
    const int n = static_cast<int>(a.rows());
    std::vector<Complex> out;
    if (n == 0) return out;
    if (n == 1) return {Complex(a(0, 0), 0.0)};
    detail::hessenberg(a);
    detail::hqr_eigenvalues(a, out);
    return out;
}

// Deterministic presentation order: descending real part, then descending
// imaginary part.
inline void sort_spectrum(std::vector<Complex>& eigs) {
    std::sort(eigs.begin(), eigs.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
}

}  // namespace urnlab
