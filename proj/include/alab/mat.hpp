#pragma once

#include <cassert>
#include <cmath>
#include <initializer_list>
#include <vector>

namespace alab {

// Small dense row-major matrix. Sizes in this project stay tiny
// (n <= 8 for group elements, C(8,4) = 70 for exterior powers).
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), d_(static_cast<size_t>(rows) * cols, 0.0) {}
    Mat(int rows, int cols, std::initializer_list<double> vals) : Mat(rows, cols) {
        assert(static_cast<int>(vals.size()) == rows * cols);
        size_t k = 0;
        for (double v : vals) d_[k++] = v;
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    double& operator()(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
    double operator()(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }

    double* data() { return d_.data(); }
    const double* data() const { return d_.data(); }

    Mat transpose() const {
        Mat t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        assert(c_ == o.r_);
        Mat out(r_, o.c_);
        for (int i = 0; i < r_; ++i) {
            for (int k = 0; k < c_; ++k) {
                double a = (*this)(i, k);
                if (a == 0.0) continue;
                for (int j = 0; j < o.c_; ++j) out(i, j) += a * o(k, j);
            }
        }
        return out;
    }

    Mat operator*(double s) const {
        Mat out = *this;
        for (double& v : out.d_) v *= s;
        return out;
    }

    Mat operator+(const Mat& o) const {
        assert(r_ == o.r_ && c_ == o.c_);
        Mat out = *this;
        for (size_t k = 0; k < d_.size(); ++k) out.d_[k] += o.d_[k];
        return out;
    }

    Mat operator-(const Mat& o) const {
        assert(r_ == o.r_ && c_ == o.c_);
        Mat out = *this;
        for (size_t k = 0; k < d_.size(); ++k) out.d_[k] -= o.d_[k];
        return out;
    }

    std::vector<double> col(int j) const {
        std::vector<double> v(r_);
        for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    double frobenius() const {
        double s = 0;
        for (double v : d_) s += v * v;
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0;
        for (double v : d_) m = std::max(m, std::fabs(v));
        return m;
    }

    bool all_finite() const {
        for (double v : d_) {
            if (!std::isfinite(v)) return false;
        }
        return true;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<double> d_;
};

inline double max_abs_diff(const Mat& a, const Mat& b) { return (a - b).max_abs(); }

} // namespace alab
