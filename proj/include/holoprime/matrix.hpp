#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "holoprime/rational.hpp"

namespace holoprime {

/// Dense exact-rational matrix. Row-major; small sizes (<= a few hundred).
class Mat {
public:
    Mat() : r_(0), c_(0) {}
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(std::size_t(rows) * cols, Rational(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    Rational& operator()(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }

    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix product shape mismatch");
        Mat out(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.c_; ++j) {
                    const Rational& bkj = b(k, j);
                    if (bkj != 0) out(i, j) += aik * bkj;
                }
            }
        return out;
    }

    friend Mat operator-(Mat a, const Mat& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix difference shape mismatch");
        for (int i = 0; i < a.r_; ++i)
            for (int j = 0; j < a.c_; ++j) a(i, j) -= b(i, j);
        return a;
    }

    /// y = M x for a column vector x.
    std::vector<Rational> apply(const std::vector<Rational>& x) const {
        if (int(x.size()) != c_) throw std::invalid_argument("apply: vector length mismatch");
        std::vector<Rational> y(r_, Rational(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if ((*this)(i, j) != 0 && x[j] != 0) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    std::vector<Rational> row(int i) const {
        return std::vector<Rational>(a_.begin() + std::size_t(i) * c_,
                                     a_.begin() + std::size_t(i + 1) * c_);
    }

    void set_row(int i, const std::vector<Rational>& v) {
        std::copy(v.begin(), v.end(), a_.begin() + std::size_t(i) * c_);
    }

    static Mat stack(const Mat& top, const Mat& bottom) {
        if (top.c_ != bottom.c_ && top.r_ != 0 && bottom.r_ != 0)
            throw std::invalid_argument("stack: column mismatch");
        int cols = top.r_ ? top.c_ : bottom.c_;
        Mat out(top.r_ + bottom.r_, cols);
        for (int i = 0; i < top.r_; ++i)
            for (int j = 0; j < cols; ++j) out(i, j) = top(i, j);
        for (int i = 0; i < bottom.r_; ++i)
            for (int j = 0; j < cols; ++j) out(top.r_ + i, j) = bottom(i, j);
        return out;
    }

private:
    int r_, c_;
    std::vector<Rational> a_;
};

/// In-place Gauss-Jordan to reduced row echelon form. Pivot selection is
/// deterministic: leftmost column, first remaining row with a nonzero entry.
/// Returns the pivot columns in increasing order; zero rows are dropped.
inline std::vector<int> rref_inplace(Mat& m) {
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
        int sel = -1;
        for (int i = lead; i < m.rows(); ++i) {
            if (m(i, col) != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != lead)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(lead, j));
        Rational inv = Rational(1) / m(lead, col);
        for (int j = col; j < m.cols(); ++j)
            if (m(lead, j) != 0) m(lead, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == lead) continue;
            const Rational f = m(i, col);
            if (f == 0) continue;
            for (int j = col; j < m.cols(); ++j)
                if (m(lead, j) != 0) m(i, j) -= f * m(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    // compact away identically-zero rows (all rows >= lead are zero)
    Mat compact(int(pivots.size()), m.cols());
    for (int i = 0; i < compact.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) compact(i, j) = m(i, j);
    m = std::move(compact);
    return pivots;
}

/// Rank by fraction-free (Bareiss) elimination over the integers after
/// clearing row denominators. Much faster than rational Gauss on the sizes
/// the sampled-lambda paths hit.
inline int rank_of(const Mat& m) {
    const int R = m.rows(), C = m.cols();
    if (R == 0 || C == 0) return 0;
    std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
    for (int i = 0; i < R; ++i) {
        Integer l(1);
        for (int j = 0; j < C; ++j) {
            const Rational& x = m(i, j);
            if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        }
        for (int j = 0; j < C; ++j) {
            const Rational& x = m(i, j);
            if (x == 0) continue;
            a[i][j] = x.get_num() * (l / x.get_den());
        }
    }
    Integer prev(1);
    int rank = 0;
    for (int col = 0; col < C && rank < R; ++col) {
        int sel = -1;
        for (int i = rank; i < R; ++i)
            if (a[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != rank) std::swap(a[sel], a[rank]);
        const Integer& p = a[rank][col];
        for (int i = rank + 1; i < R; ++i) {
            for (int j = col + 1; j < C; ++j) {
                Integer t = a[i][j] * p - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

/// Nullspace of M (vectors x with Mx = 0), returned as RREF rows.
inline Mat kernel_of(const Mat& m) {
    Mat r = m;
    std::vector<int> piv = rref_inplace(r);
    std::vector<bool> is_piv(m.cols(), false);
    for (int p : piv) is_piv[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < m.cols(); ++j)
        if (!is_piv[j]) free_cols.push_back(j);
    Mat k(int(free_cols.size()), m.cols());
    for (int t = 0; t < int(free_cols.size()); ++t) {
        int f = free_cols[t];
        k(t, f) = 1;
        for (int i = 0; i < int(piv.size()); ++i) k(t, piv[i]) = -r(i, f);
    }
    rref_inplace(k);
    return k;
}

/// Inverse by Gauss-Jordan with the identity appended. Throws on singular.
inline Mat inverse_of(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const int n = m.rows();
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<int> piv = rref_inplace(aug);
    if (int(piv.size()) != n || piv.back() != n - 1)
        throw std::domain_error("matrix is singular");
    for (int i = 0; i < n; ++i)
        if (piv[i] != i) throw std::domain_error("matrix is singular");
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

inline Rational trace_of(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("trace of non-square matrix");
    Rational t(0);
    for (int i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

}  // namespace holoprime
