#pragma once

#include "kummer/scalar.hpp"

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kummer {

// Dense matrix over an exact field (Rat or Quad).
template <class K>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<K> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, K(0)) {}
    Mat(std::initializer_list<std::initializer_list<K>> init) {
        rows = static_cast<int>(init.size());
        cols = rows ? static_cast<int>(init.begin()->size()) : 0;
        a.reserve(static_cast<std::size_t>(rows) * cols);
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols) {
                throw std::invalid_argument("ragged matrix initializer");
            }
            for (const auto& v : row) {
                a.push_back(v);
            }
        }
    }

    K& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const K& operator()(int i, int j) const {
        return a[static_cast<std::size_t>(i) * cols + j];
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) {
            m(i, i) = K(1);
        }
        return m;
    }

    Mat transpose() const {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    Mat conj_transpose() const {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                t(j, i) = conj_of((*this)(i, j));
            }
        }
        return t;
    }

    bool is_zero() const {
        for (const auto& v : a) {
            if (!kummer::is_zero(v)) {
                return false;
            }
        }
        return true;
    }

    K trace() const {
        K t(0);
        for (int i = 0; i < rows && i < cols; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        Mat r(x.rows, x.cols);
        for (std::size_t i = 0; i < x.a.size(); ++i) {
            r.a[i] = x.a[i] + y.a[i];
        }
        return r;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        Mat r(x.rows, x.cols);
        for (std::size_t i = 0; i < x.a.size(); ++i) {
            r.a[i] = x.a[i] - y.a[i];
        }
        return r;
    }
    friend Mat operator-(const Mat& x) {
        Mat r(x.rows, x.cols);
        for (std::size_t i = 0; i < x.a.size(); ++i) {
            r.a[i] = -x.a[i];
        }
        return r;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols != y.rows) {
            throw std::invalid_argument("matrix shape mismatch");
        }
        Mat r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i) {
            for (int k = 0; k < x.cols; ++k) {
                const K& v = x(i, k);
                if (kummer::is_zero(v)) {
                    continue;
                }
                for (int j = 0; j < y.cols; ++j) {
                    r(i, j) += v * y(k, j);
                }
            }
        }
        return r;
    }
    friend Mat operator*(const K& s, const Mat& x) {
        Mat r(x.rows, x.cols);
        for (std::size_t i = 0; i < x.a.size(); ++i) {
            r.a[i] = s * x.a[i];
        }
        return r;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

// In-place reduced row echelon form; returns the pivot columns.
template <class K>
std::vector<int> rref(Mat<K>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i) {
            if (!is_zero(m(i, col))) {
                p = i;
                break;
            }
        }
        if (p < 0) {
            continue;
        }
        if (p != row) {
            for (int j = 0; j < m.cols; ++j) {
                std::swap(m(p, j), m(row, j));
            }
        }
        K inv = inverse_of(m(row, col));
        for (int j = col; j < m.cols; ++j) {
            m(row, j) = inv * m(row, j);
        }
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || is_zero(m(i, col))) {
                continue;
            }
            K f = m(i, col);
            for (int j = col; j < m.cols; ++j) {
                m(i, j) -= f * m(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
int rank_of(Mat<K> m) {
    return static_cast<int>(rref(m).size());
}

template <class K>
K det(Mat<K> m) {
    if (m.rows != m.cols) {
        throw std::invalid_argument("determinant of a non square matrix");
    }
    K d(1);
    for (int col = 0; col < m.cols; ++col) {
        int p = -1;
        for (int i = col; i < m.rows; ++i) {
            if (!is_zero(m(i, col))) {
                p = i;
                break;
            }
        }
        if (p < 0) {
            return K(0);
        }
        if (p != col) {
            for (int j = 0; j < m.cols; ++j) {
                std::swap(m(p, j), m(col, j));
            }
            d = -d;
        }
        d *= m(col, col);
        K inv = inverse_of(m(col, col));
        for (int i = col + 1; i < m.rows; ++i) {
            if (is_zero(m(i, col))) {
                continue;
            }
            K f = inv * m(i, col);
            for (int j = col; j < m.cols; ++j) {
                m(i, j) -= f * m(col, j);
            }
        }
    }
    return d;
}

template <class K>
Mat<K> inverse(const Mat<K>& m) {
    if (m.rows != m.cols) {
        throw std::invalid_argument("inverse of a non square matrix");
    }
    int n = m.rows;
    Mat<K> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, n + i) = K(1);
    }
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) {
        throw std::domain_error("singular matrix");
    }
    Mat<K> inv(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            inv(i, j) = aug(i, n + j);
        }
    }
    return inv;
}

// Basis of the right kernel, one vector per column of the result.
template <class K>
Mat<K> kernel(Mat<K> m) {
    int n = m.cols;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) {
        is_pivot[c] = true;
    }
    int k = n - static_cast<int>(pivots.size());
    Mat<K> ker(n, k);
    int idx = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        ker(f, idx) = K(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            ker(pivots[r], idx) = -m(static_cast<int>(r), f);
        }
        ++idx;
    }
    return ker;
}

// Solves m x = rhs (multiple right hand sides allowed); throws when
// inconsistent.  Free variables are set to zero.
template <class K>
Mat<K> solve(const Mat<K>& m, const Mat<K>& rhs) {
    if (m.rows != rhs.rows) {
        throw std::invalid_argument("solve shape mismatch");
    }
    Mat<K> aug(m.rows, m.cols + rhs.cols);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            aug(i, j) = m(i, j);
        }
        for (int j = 0; j < rhs.cols; ++j) {
            aug(i, m.cols + j) = rhs(i, j);
        }
    }
    auto pivots = rref(aug);
    for (int c : pivots) {
        if (c >= m.cols) {
            throw std::domain_error("inconsistent linear system");
        }
    }
    Mat<K> x(m.cols, rhs.cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        for (int j = 0; j < rhs.cols; ++j) {
            x(pivots[r], j) = aug(static_cast<int>(r), m.cols + j);
        }
    }
    return x;
}

// Canonical basis of the row space: rref with zero rows dropped.
template <class K>
Mat<K> row_space(Mat<K> m) {
    auto pivots = rref(m);
    Mat<K> r(static_cast<int>(pivots.size()), m.cols);
    for (int i = 0; i < r.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            r(i, j) = m(i, j);
        }
    }
    return r;
}

template <class K>
bool same_row_space(const Mat<K>& x, const Mat<K>& y) {
    return row_space(x) == row_space(y);
}

}  // namespace kummer
