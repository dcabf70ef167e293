#pragma once

#include "kummer/matrix.hpp"
#include "kummer/scalar.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <vector>

namespace kummer {

// Sign of the shuffle moving the ascending concatenation (A, B) of two
// disjoint index sets into one ascending run: counts pairs a > b.
inline int shuffle_sign(unsigned a, unsigned b) {
    int inv = 0;
    for (int i = 0; i < 4; ++i) {
        if (!(b & (1u << i))) {
            continue;
        }
        for (int j = i + 1; j < 4; ++j) {
            if (a & (1u << j)) {
                ++inv;
            }
        }
    }
    return (inv & 1) ? -1 : 1;
}

// Element of the exterior algebra on four generators over K, graded by the
// popcount of the basis mask (bit i encodes generator i+1).  The dual flag
// marks covector-side elements: the two sides wedge separately and meet
// only through the explicit pairings below.
template <class K>
struct Ext {
    bool dual = false;
    std::array<K, 16> c{};

    Ext() { c.fill(K(0)); }
    explicit Ext(bool dual_) : dual(dual_) { c.fill(K(0)); }

    static Ext monomial(unsigned mask, bool dual_ = false) {
        Ext e(dual_);
        e.c[mask] = K(1);
        return e;
    }
    static Ext scalar(const K& v, bool dual_ = false) {
        Ext e(dual_);
        e.c[0] = v;
        return e;
    }

    bool is_zero() const {
        for (const auto& v : c) {
            if (!kummer::is_zero(v)) {
                return false;
            }
        }
        return true;
    }

    Ext degree_part(int p) const {
        Ext r(dual);
        for (unsigned s = 0; s < 16; ++s) {
            if (std::popcount(s) == p) {
                r.c[s] = c[s];
            }
        }
        return r;
    }

    int top_degree() const {
        int d = -1;
        for (unsigned s = 0; s < 16; ++s) {
            if (!kummer::is_zero(c[s])) {
                d = std::max(d, std::popcount(s));
            }
        }
        return d;
    }

    bool is_homogeneous(int p) const {
        for (unsigned s = 0; s < 16; ++s) {
            if (std::popcount(s) != p && !kummer::is_zero(c[s])) {
                return false;
            }
        }
        return true;
    }

    Ext operator-() const {
        Ext r(dual);
        for (unsigned s = 0; s < 16; ++s) {
            r.c[s] = -c[s];
        }
        return r;
    }
    Ext& operator+=(const Ext& o) {
        if (dual != o.dual) {
            throw std::invalid_argument("adding vector and covector sides");
        }
        for (unsigned s = 0; s < 16; ++s) {
            c[s] += o.c[s];
        }
        return *this;
    }
    Ext& operator-=(const Ext& o) {
        if (dual != o.dual) {
            throw std::invalid_argument("subtracting vector and covector sides");
        }
        for (unsigned s = 0; s < 16; ++s) {
            c[s] -= o.c[s];
        }
        return *this;
    }
    friend Ext operator+(Ext x, const Ext& y) { return x += y; }
    friend Ext operator-(Ext x, const Ext& y) { return x -= y; }
    friend Ext operator*(const K& s, const Ext& x) {
        Ext r(x.dual);
        for (unsigned t = 0; t < 16; ++t) {
            r.c[t] = s * x.c[t];
        }
        return r;
    }
    friend bool operator==(const Ext& x, const Ext& y) {
        return x.dual == y.dual && x.c == y.c;
    }
};

template <class K>
Ext<K> wedge(const Ext<K>& x, const Ext<K>& y) {
    if (x.dual != y.dual) {
        throw std::invalid_argument("wedging vector and covector sides");
    }
    Ext<K> r(x.dual);
    for (unsigned s = 0; s < 16; ++s) {
        if (kummer::is_zero(x.c[s])) {
            continue;
        }
        for (unsigned t = 0; t < 16; ++t) {
            if ((s & t) || kummer::is_zero(y.c[t])) {
                continue;
            }
            K v = x.c[s] * y.c[t];
            if (shuffle_sign(s, t) < 0) {
                v = -v;
            }
            r.c[s | t] += v;
        }
    }
    return r;
}

// Coefficient of the full top monomial.
template <class K>
K vol(const Ext<K>& x) {
    if (x.dual) {
        throw std::invalid_argument("volume of a covector-side element");
    }
    if (!x.is_homogeneous(4)) {
        throw std::invalid_argument("volume expects a homogeneous degree 4 element");
    }
    return x.c[15];
}

// Determinant-convention pairing of a covector-side element against a
// vector-side element: basis 2-forms pair to delta on equal masks.
template <class K>
K pair_forms(const Ext<K>& xd, const Ext<K>& y) {
    if (!xd.dual || y.dual) {
        throw std::invalid_argument("pairing expects covector, vector order");
    }
    K r(0);
    for (unsigned s = 0; s < 16; ++s) {
        r += xd.c[s] * y.c[s];
    }
    return r;
}

// Signed complement map on two-forms from the covector side to the vector
// side: the unique y with vol(y ^ z) equal to the determinant-convention
// pairing of the input against z for every two-form z.  A dual basis
// monomial on S goes to the complementary monomial with the shuffle sign
// of (complement, S).
template <class K>
Ext<K> iota(const Ext<K>& xd) {
    if (!xd.dual) {
        throw std::invalid_argument("iota expects a covector-side element");
    }
    if (!xd.is_homogeneous(2)) {
        throw std::invalid_argument("iota expects a homogeneous degree 2 element");
    }
    Ext<K> r(false);
    for (unsigned s = 0; s < 16; ++s) {
        if (kummer::is_zero(xd.c[s])) {
            continue;
        }
        unsigned comp = ~s & 15u;
        K v = xd.c[s];
        if (shuffle_sign(comp, s) < 0) {
            v = -v;
        }
        r.c[comp] += v;
    }
    return r;
}

template <class K>
Ext<K> iota_inv(const Ext<K>& y) {
    if (y.dual) {
        throw std::invalid_argument("iota_inv expects a vector-side element");
    }
    if (!y.is_homogeneous(2)) {
        throw std::invalid_argument("iota_inv expects a homogeneous degree 2 element");
    }
    Ext<K> r(true);
    for (unsigned t = 0; t < 16; ++t) {
        if (kummer::is_zero(y.c[t])) {
            continue;
        }
        unsigned comp = ~t & 15u;
        K v = y.c[t];
        if (shuffle_sign(t, comp) < 0) {
            v = -v;
        }
        r.c[comp] += v;
    }
    return r;
}

// Interior product against a covector-side degree 1 element: an
// antiderivation on the vector side.
template <class K>
Ext<K> contract(const Ext<K>& ell, const Ext<K>& x) {
    if (!ell.dual || x.dual) {
        throw std::invalid_argument("contraction expects covector against vector");
    }
    if (!ell.is_homogeneous(1)) {
        throw std::invalid_argument("contraction direction must have degree 1");
    }
    Ext<K> r(false);
    for (unsigned s = 0; s < 16; ++s) {
        if (kummer::is_zero(x.c[s])) {
            continue;
        }
        int pos = 0;
        for (int i = 0; i < 4; ++i) {
            unsigned bit = 1u << i;
            if (!(s & bit)) {
                continue;
            }
            const K& li = ell.c[bit];
            if (!kummer::is_zero(li)) {
                K v = li * x.c[s];
                if (pos & 1) {
                    v = -v;
                }
                r.c[s & ~bit] += v;
            }
            ++pos;
        }
    }
    return r;
}

// Degree-k coordinates in ascending mask order.
template <class K>
std::vector<K> coords(const Ext<K>& x, int p) {
    std::vector<K> v;
    for (unsigned s = 0; s < 16; ++s) {
        if (std::popcount(s) == p) {
            v.push_back(x.c[s]);
        }
    }
    return v;
}

template <class K>
Ext<K> from_coords(const std::vector<K>& v, int p, bool dual_) {
    Ext<K> x(dual_);
    std::size_t idx = 0;
    for (unsigned s = 0; s < 16; ++s) {
        if (std::popcount(s) == p) {
            x.c[s] = v.at(idx++);
        }
    }
    if (idx != v.size()) {
        throw std::invalid_argument("coordinate count mismatch");
    }
    return x;
}

}  // namespace kummer
