#include "alab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "alab/errors.hpp"

namespace alab {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidElement: return "InvalidElement";
        case ErrorKind::BasisMismatch: return "BasisMismatch";
        case ErrorKind::NotAntipodal: return "NotAntipodal";
        case ErrorKind::NotProximal: return "NotProximal";
        case ErrorKind::AngleUnderflow: return "AngleUnderflow";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::InvalidTheta: return "InvalidTheta";
        case ErrorKind::DegenerateForm: return "DegenerateForm";
        case ErrorKind::OptimFailed: return "OptimFailed";
        case ErrorKind::InsufficientScales: return "InsufficientScales";
        case ErrorKind::ScaleRangeTooNarrow: return "ScaleRangeTooNarrow";
        case ErrorKind::ConfigError: return "ConfigError";
    }
    return "Error";
}

QrResult qr_positive(const Mat& a) {
    int m = a.rows(), n = a.cols();
    Mat r = a;
    Mat q = Mat::identity(m);

    // Householder reflections accumulated into q.
    for (int k = 0; k < std::min(m - 1, n); ++k) {
        double norm = 0;
        for (int i = k; i < m; ++i) norm += r(i, k) * r(i, k);
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        double alpha = r(k, k) > 0 ? -norm : norm;
        std::vector<double> v(m, 0.0);
        v[k] = r(k, k) - alpha;
        for (int i = k + 1; i < m; ++i) v[i] = r(i, k);
        double vnorm2 = 0;
        for (int i = k; i < m; ++i) vnorm2 += v[i] * v[i];
        if (vnorm2 == 0.0) continue;

        for (int j = 0; j < n; ++j) {
            double dot = 0;
            for (int i = k; i < m; ++i) dot += v[i] * r(i, j);
            double f = 2.0 * dot / vnorm2;
            for (int i = k; i < m; ++i) r(i, j) -= f * v[i];
        }
        for (int j = 0; j < m; ++j) {
            double dot = 0;
            for (int i = k; i < m; ++i) dot += v[i] * q(j, i);
            double f = 2.0 * dot / vnorm2;
            for (int i = k; i < m; ++i) q(j, i) -= f * v[i];
        }
    }

    // Force positive diagonal of R by flipping signs columnwise in Q.
    for (int k = 0; k < std::min(m, n); ++k) {
        if (r(k, k) < 0) {
            for (int j = k; j < n; ++j) r(k, j) = -r(k, j);
            for (int i = 0; i < m; ++i) q(i, k) = -q(i, k);
        }
    }
    // Zero out the strictly-lower part (reflection residue).
    for (int i = 1; i < m; ++i)
        for (int j = 0; j < std::min(i, n); ++j) r(i, j) = 0.0;

    return {q, r};
}

SvdResult jacobi_svd(const Mat& a) {
    int m = a.rows(), n = a.cols();
    Mat w = a;
    Mat v = Mat::identity(n);

    const double eps = 1e-15;
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double app = 0, aqq = 0, apq = 0;
                for (int i = 0; i < m; ++i) {
                    app += w(i, p) * w(i, p);
                    aqq += w(i, q) * w(i, q);
                    apq += w(i, p) * w(i, q);
                }
                double denom = std::sqrt(app * aqq);
                if (denom > 0) off = std::max(off, std::fabs(apq) / denom);
                if (std::fabs(apq) <= eps * denom) continue;

                double tau = (aqq - app) / (2.0 * apq);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = c * t;
                for (int i = 0; i < m; ++i) {
                    double wp = w(i, p), wq = w(i, q);
                    w(i, p) = c * wp - s * wq;
                    w(i, q) = s * wp + c * wq;
                }
                for (int i = 0; i < n; ++i) {
                    double vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
            }
        }
        if (off <= eps) break;
    }

    // Column norms are the singular values; sort descending.
    std::vector<double> sig(n);
    for (int j = 0; j < n; ++j) {
        double s = 0;
        for (int i = 0; i < m; ++i) s += w(i, j) * w(i, j);
        sig[j] = std::sqrt(s);
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return sig[i] > sig[j]; });

    SvdResult out;
    out.u = Mat(m, n);
    out.v = Mat(n, n);
    out.sigma.resize(n);
    for (int j = 0; j < n; ++j) {
        int src = order[j];
        out.sigma[j] = sig[src];
        double inv = sig[src] > 0 ? 1.0 / sig[src] : 0.0;
        for (int i = 0; i < m; ++i) out.u(i, j) = w(i, src) * inv;
        for (int i = 0; i < n; ++i) out.v(i, j) = v(i, src);
    }
    return out;
}

double determinant(const Mat& a) {
    int n = a.rows();
    Mat lu = a;
    double det = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::fabs(lu(i, k)) > std::fabs(lu(piv, k))) piv = i;
        if (lu(piv, k) == 0.0) return 0.0;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
            det = -det;
        }
        det *= lu(k, k);
        for (int i = k + 1; i < n; ++i) {
            double f = lu(i, k) / lu(k, k);
            for (int j = k; j < n; ++j) lu(i, j) -= f * lu(k, j);
        }
    }
    return det;
}

Mat inverse(const Mat& a) {
    int n = a.rows();
    Mat w = a;
    Mat inv = Mat::identity(n);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::fabs(w(i, k)) > std::fabs(w(piv, k))) piv = i;
        if (w(piv, k) == 0.0) fail(ErrorKind::InvalidElement, "singular matrix");
        if (piv != k) {
            for (int j = 0; j < n; ++j) {
                std::swap(w(k, j), w(piv, j));
                std::swap(inv(k, j), inv(piv, j));
            }
        }
        double d = w(k, k);
        for (int j = 0; j < n; ++j) {
            w(k, j) /= d;
            inv(k, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            double f = w(i, k);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                w(i, j) -= f * w(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

std::vector<double> solve(const Mat& a, const std::vector<double>& b) {
    Mat inv = inverse(a);
    int n = a.rows();
    std::vector<double> x(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x[i] += inv(i, j) * b[j];
    return x;
}

std::vector<double> principal_cosines(const Mat& a, const Mat& b) {
    Mat g = a.transpose() * b;
    SvdResult s = jacobi_svd(g);
    for (double& c : s.sigma) c = std::min(c, 1.0);
    return s.sigma;
}

double subspace_gap(const Mat& frame_a, const Mat& frame_b, int p) {
    int n = frame_a.rows();
    Mat a(n, p), b(n, p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < p; ++j) {
            a(i, j) = frame_a(i, j);
            b(i, j) = frame_b(i, j);
        }
    std::vector<double> cosines = principal_cosines(a, b);
    double cmin = 1.0;
    for (double c : cosines) cmin = std::min(cmin, c);
    return std::sqrt(std::max(0.0, 1.0 - cmin * cmin));
}

} // namespace alab
