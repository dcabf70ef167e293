#pragma once

#include "kummer/hodge.hpp"
#include "kummer/smith.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace kummer {

// Constants of the pairing map in the fourfold case, together with the
// norm constant of the zeta direction.
inline ThetaTriple fourfold_theta() {
    return ThetaTriple(Rat(-1), Rat(-3), Rat(-3), Rat(1, 6));
}

// A polarizing class in the normal form c (e v1*^v2* + v3*^v4*) + s zeta-dual
// with positive c, e and gcd(c, s) = 1.
struct PolClass {
    Int c;
    Int e;
    Int s;

    PolClass(Int c_, Int e_, Int s_) : c(std::move(c_)), e(std::move(e_)), s(std::move(s_)) {
        if (c <= 0) {
            throw std::invalid_argument("the leading coefficient must be positive");
        }
        if (e <= 0) {
            throw std::invalid_argument("the diagonal weight must be positive");
        }
        if (int_gcd(c, s) != 1) {
            throw std::invalid_argument("the class coefficients must be coprime");
        }
    }

    // square under the degree-two form of the fourfold
    Int square() const { return 2 * c * c * e - 6 * s * s; }

    // divisibility of the class inside the degree-two lattice: the gcd of
    // its pairings against lattice generators is gcd(c, 6s)
    Int divisibility() const { return int_gcd(c, 6 * s); }

    PolarizationClass to_polarization() const {
        Ext<Rat> f(true);
        f.c[0b0011] = Rat(c * e);
        f.c[0b1100] = Rat(c);
        return PolarizationClass(std::move(f), Rat(s));
    }
};

// The four coprimality templates, one per divisibility value.
inline PolClass divisor_case(int div, const Int& e) {
    switch (div) {
        case 1:
            return PolClass(Int(1), e, Int(0));
        case 2:
            return PolClass(Int(2), e, Int(1));
        case 3:
            return PolClass(Int(3), e, Int(1));
        case 6:
            return PolClass(Int(6), e, Int(1));
        default:
            throw std::invalid_argument("divisibility must be 1, 2, 3 or 6");
    }
}

// Distinguished basis of the degree-three lattice: the first and second
// quadruples each span an isotropic subgroup of the polarization pairing,
// for every polarizing class in normal form.
inline std::array<H3Element<Rat>, 8> standard_divisor_basis() {
    auto unit = [](int k, int v) {
        H3Element<Rat> r{};
        r[static_cast<std::size_t>(k)] = Rat(v);
        return r;
    };
    return {
        unit(4, 1),  unit(1, 1), unit(3, 1), unit(6, 1),
        unit(5, -1), unit(0, 1), unit(2, 1), unit(7, -1),
    };
}

// 8x8 Gram matrix of the polarization pairing on the standard basis.
inline Mat<Rat> gram_on_standard_basis(const PolClass& p) {
    ThetaTriple th = fourfold_theta();
    PolarizationClass h = p.to_polarization();
    auto basis = standard_divisor_basis();
    Mat<Rat> g(8, 8);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            g(i, j) = polarization_pairing(th, h, basis[static_cast<std::size_t>(i)],
                                           basis[static_cast<std::size_t>(j)]);
        }
    }
    return g;
}

inline IMat to_integer_matrix(const Mat<Rat>& m) {
    IMat r(static_cast<std::size_t>(m.rows), std::vector<Int>(static_cast<std::size_t>(m.cols)));
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            const Rat& v = m(i, j);
            if (denominator(v) != 1) {
                throw std::domain_error("matrix entry is not an integer");
            }
            r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = numerator(v);
        }
    }
    return r;
}

// Elementary divisors of the Gram matrix for a divisibility template.
inline std::array<Int, 4> elementary_divisor_table(int div, const Int& e) {
    PolClass p = divisor_case(div, e);
    std::vector<Int> d = skew_smith(to_integer_matrix(gram_on_standard_basis(p)));
    return {d[0], d[1], d[2], d[3]};
}

// The tabulated diagonal entries for each template, with g = gcd(3, e).
inline std::array<Int, 4> stated_divisors(int div, const Int& e) {
    Int g = int_gcd(Int(3), e);
    switch (div) {
        case 1:
            return {Int(1), g, 3 * e / g, 3 * e};
        case 2:
            return {Int(1), g, 3 * (4 * e - 3) / g, 3 * (4 * e - 3)};
        case 3:
            return {Int(3), Int(3), 3 * (3 * e - 1), 3 * (3 * e - 1)};
        case 6:
            return {Int(3), Int(3), 3 * (12 * e - 1), 3 * (12 * e - 1)};
        default:
            throw std::invalid_argument("divisibility must be 1, 2, 3 or 6");
    }
}

// Extended euclid: returns g = gcd(a, b) and fills x, y with a x + b y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = a < 0 ? Int(-1) : Int(1);
        y = 0;
        return int_abs(a);
    }
    Int x1, y1;
    Int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Unimodular change of basis bringing the Gram matrix of a divisibility
// template to the two-block form ((0, D), (-D, 0)) with D the diagonal of
// stated_divisors; rows are coordinates in the standard divisor basis.
// The divisibility-6 rows correct a transcription slip in the printed
// table: with the scalars 2 and 6e transposed (third entry of each half),
// the cross block picks up an off-diagonal entry 6 - 18e instead of 0.
inline Mat<Rat> divisor_basis_change(int div, const Int& e) {
    auto put = [](Mat<Rat>& t, int row, std::array<std::pair<int, Rat>, 2> entries) {
        for (const auto& [col, val] : entries) {
            if (col >= 0) {
                t(row, col) = val;
            }
        }
    };
    Mat<Rat> t(8, 8);
    Rat re(e);
    if (div == 1 || div == 2) {
        Int half = (div == 1) ? e : 2 * e;
        Int x, y;
        Int g = ext_gcd(Int(3), half, x, y);
        Rat rg(g);
        put(t, 0, {{{2, Rat(1)}, {-1, Rat(0)}}});
        put(t, 1, {{{0, Rat(x)}, {1, Rat(y)}}});
        put(t, 2, {{{0, Rat(half) / rg}, {1, Rat(-3) / rg}}});
        if (div == 1) {
            put(t, 3, {{{3, Rat(1)}, {-1, Rat(0)}}});
            put(t, 4, {{{6, Rat(1)}, {-1, Rat(0)}}});
            put(t, 5, {{{4, Rat(1)}, {5, Rat(1)}}});
            put(t, 6, {{{4, Rat(half * y) / rg}, {5, Rat(-3 * x) / rg}}});
            put(t, 7, {{{7, Rat(1)}, {-1, Rat(0)}}});
        } else {
            put(t, 3, {{{2, Rat(6 * e - 3)}, {3, Rat(-1)}}});
            put(t, 4, {{{7, Rat(1)}, {6, Rat(-1)}}});
            put(t, 5, {{{5, Rat(1)}, {-1, Rat(0)}}});
            put(t, 6, {{{4, Rat(1)}, {5, Rat(-(6 * x + 3 * y)) / rg}}});
            put(t, 7, {{{6, Rat(3)}, {7, Rat(-2)}}});
        }
        return t;
    }
    if (div == 3) {
        put(t, 0, {{{2, Rat(1)}, {-1, Rat(0)}}});
        put(t, 1, {{{0, Rat(1)}, {-1, Rat(0)}}});
        put(t, 2, {{{3, Rat(1)}, {2, Rat(-1)}}});
        put(t, 3, {{{0, re}, {1, Rat(-1)}}});
        put(t, 4, {{{6, Rat(1)}, {-1, Rat(0)}}});
        put(t, 5, {{{5, Rat(1)}, {-1, Rat(0)}}});
        put(t, 6, {{{7, Rat(1)}, {6, Rat(-1)}}});
        put(t, 7, {{{4, Rat(1)}, {5, Rat(-3)}}});
        return t;
    }
    if (div == 6) {
        put(t, 0, {{{0, Rat(1)}, {-1, Rat(0)}}});
        put(t, 1, {{{2, Rat(1)}, {-1, Rat(0)}}});
        put(t, 2, {{{2, Rat(6) * re}, {3, Rat(-1)}}});
        put(t, 3, {{{0, Rat(2) * re}, {1, Rat(-1)}}});
        put(t, 4, {{{5, Rat(1)}, {-1, Rat(0)}}});
        put(t, 5, {{{7, Rat(1)}, {-1, Rat(0)}}});
        put(t, 6, {{{6, Rat(1)}, {7, Rat(-2)}}});
        put(t, 7, {{{4, Rat(1)}, {5, Rat(-6)}}});
        return t;
    }
    throw std::invalid_argument("divisibility must be 1, 2, 3 or 6");
}

}  // namespace kummer
