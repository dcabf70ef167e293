#pragma once

#include "kummer/ext.hpp"
#include "kummer/matrix.hpp"
#include "kummer/scalar.hpp"

#include <stdexcept>

namespace kummer {

template <class K>
void require_alternating4(const Mat<K>& x) {
    if (x.rows != 4 || x.cols != 4) {
        throw std::invalid_argument("expected a 4x4 matrix");
    }
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (!kummer::is_zero(x(i, j) + x(j, i))) {
                throw std::invalid_argument("matrix is not alternating");
            }
        }
    }
}

template <class K>
K pfaffian(const Mat<K>& x) {
    require_alternating4(x);
    return x(0, 1) * x(2, 3) - x(0, 2) * x(1, 3) + x(0, 3) * x(1, 2);
}

// Closed-formula inverse of an alternating 4x4 matrix; the inverse is again
// alternating and has Pfaffian 1/Pf(x).
template <class K>
Mat<K> invert_skew(const Mat<K>& x) {
    K p = pfaffian(x);
    if (kummer::is_zero(p)) {
        throw std::domain_error("degenerate alternating matrix");
    }
    K a = x(0, 1), b = x(0, 2), c = x(0, 3);
    K d = x(1, 2), e = x(1, 3), f = x(2, 3);
    Mat<K> inv{{K(0), -f, e, -d},
               {f, K(0), -c, b},
               {-e, c, K(0), -a},
               {d, -b, a, K(0)}};
    K ip = K(1) / p;
    for (auto& v : inv.a) {
        v = ip * v;
    }
    return inv;
}

// Quadratic identity satisfied by a product of two alternating 4x4 maps:
//   (XY)^2 - (tr(XY)/2) XY + Pf(X) Pf(Y) Id = 0.
template <class K>
bool skew_cayley_check(const Mat<K>& x, const Mat<K>& y) {
    K px = pfaffian(x);
    K py = pfaffian(y);
    Mat<K> xy = x * y;
    Mat<K> lhs = xy * xy - (xy.trace() / K(2)) * xy + (px * py) * Mat<K>::identity(4);
    return lhs.is_zero();
}

// A skew map V -> V* on the rank-4 space, stored through its Gram matrix
// against the standard basis: entry (i, j) is the two-form evaluated on
// (v_i, v_j), so column j lists the covector coordinates of the image of
// v_j and the map sends v to X v.
template <class K>
struct SkewMap4 {
    Mat<K> x;

    SkewMap4() : x(4, 4) {}
    explicit SkewMap4(Mat<K> m) : x(std::move(m)) { require_alternating4(x); }

    static SkewMap4 from_omega(const Ext<K>& omega) {
        if (!omega.dual) {
            throw std::invalid_argument("skew map expects a covector-side two-form");
        }
        if (!omega.is_homogeneous(2)) {
            throw std::invalid_argument("skew map expects a homogeneous two-form");
        }
        Mat<K> m(4, 4);
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                unsigned mask = (1u << i) | (1u << j);
                m(i, j) = omega.c[mask];
                m(j, i) = -omega.c[mask];
            }
        }
        return SkewMap4(std::move(m));
    }

    Ext<K> to_omega() const {
        Ext<K> w(true);
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                w.c[(1u << i) | (1u << j)] = x(i, j);
            }
        }
        return w;
    }

    // Covector coordinates of the image of a vector.
    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != 4) {
            throw std::invalid_argument("expected four coordinates");
        }
        std::vector<K> r(4, K(0));
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                r[i] += x(i, j) * v[j];
            }
        }
        return r;
    }

    K pf() const { return pfaffian(x); }
};

}  // namespace kummer
