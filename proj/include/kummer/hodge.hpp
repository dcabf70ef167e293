#pragma once

#include "kummer/ext.hpp"
#include "kummer/matrix.hpp"
#include "kummer/rng.hpp"
#include "kummer/scalar.hpp"
#include "kummer/skew.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kummer {

// The three ansatz constants together with the norm constant of the zeta
// direction.  The product relation t1*t2 == 2*m*t3^2 is what makes the
// graph locus and the period quadric match; constructors only require the
// entries to be usable, and the routines that depend on the relation check
// it themselves.
struct ThetaTriple {
    Rat t1;
    Rat t2;
    Rat t3;
    Rat m;

    ThetaTriple(Rat t1_, Rat t2_, Rat t3_, Rat m_)
        : t1(std::move(t1_)), t2(std::move(t2_)), t3(std::move(t3_)), m(std::move(m_)) {
        if (t1 == 0 || t2 == 0 || t3 == 0) {
            throw std::invalid_argument("ansatz constants must be nonzero");
        }
        if (m <= 0) {
            throw std::invalid_argument("the zeta norm constant must be positive");
        }
    }

    bool satisfies_product_relation() const { return t1 * t2 == 2 * m * t3 * t3; }
};

// Image of a decomposable element under the ansatz map: a vector-side
// two-form plus a multiple of the distinguished zeta class.
template <class K>
struct PhiImage {
    Ext<K> two_form;
    K zeta;

    PhiImage() : two_form(false), zeta(0) {}
};

// Coordinates (v_1..v_4, v_1*..v_4*) of an element of V + V*.
template <class K>
using H3Element = std::array<K, 8>;

template <class K>
H3Element<K> h3_row(const Mat<K>& m, int i) {
    if (m.cols != 8) {
        throw std::invalid_argument("expected eight coordinate columns");
    }
    H3Element<K> r;
    for (int j = 0; j < 8; ++j) {
        r[static_cast<std::size_t>(j)] = m(i, j);
    }
    return r;
}

template <class K>
H3Element<K> h3_conj(const H3Element<K>& x) {
    H3Element<K> r;
    for (std::size_t i = 0; i < 8; ++i) {
        r[i] = conj_of(x[i]);
    }
    return r;
}

// Hyperbolic pairing on V + V*: the symmetric form whose quadratic values
// are twice the evaluation of the covector half on the vector half.
template <class K>
K h3_pairing(const H3Element<K>& x, const H3Element<K>& y) {
    K r(0);
    for (std::size_t i = 0; i < 4; ++i) {
        r += x[4 + i] * y[i] + y[4 + i] * x[i];
    }
    return r;
}

template <class K>
K h3_square(const H3Element<K>& x) {
    return h3_pairing(x, x);
}

// The ansatz map on a wedge of two elements (v, g) and (w, h) of V + V*:
// t1 v^w plus t2 times the duality image of g^h, plus t3 (g(w) - h(v))
// on the zeta coordinate.
template <class K>
PhiImage<K> phi_theta(const ThetaTriple& th, const H3Element<K>& x, const H3Element<K>& y) {
    Ext<K> xv(false);
    Ext<K> yv(false);
    Ext<K> xl(true);
    Ext<K> yl(true);
    for (int i = 0; i < 4; ++i) {
        unsigned bit = 1u << i;
        xv.c[bit] = x[static_cast<std::size_t>(i)];
        yv.c[bit] = y[static_cast<std::size_t>(i)];
        xl.c[bit] = x[static_cast<std::size_t>(4 + i)];
        yl.c[bit] = y[static_cast<std::size_t>(4 + i)];
    }
    PhiImage<K> r;
    r.two_form = K(th.t1) * wedge(xv, yv) + K(th.t2) * iota(wedge(xl, yl));
    K cross(0);
    for (std::size_t i = 0; i < 4; ++i) {
        cross += x[4 + i] * y[i] - y[4 + i] * x[i];
    }
    r.zeta = K(th.t3) * cross;
    return r;
}

// Seven coordinates of a phi image: the six two-form coordinates in
// ascending mask order followed by the zeta coordinate.
template <class K>
std::vector<K> phi_coords(const PhiImage<K>& p) {
    std::vector<K> v = coords(p.two_form, 2);
    v.push_back(p.zeta);
    return v;
}

// Dimension of the image of gamma ^ (V + V*) under the ansatz map.
template <class K>
int phi_line_rank(const ThetaTriple& th, const H3Element<K>& gamma) {
    Mat<K> m(8, 7);
    for (int k = 0; k < 8; ++k) {
        H3Element<K> e{};
        for (auto& v : e) {
            v = K(0);
        }
        e[static_cast<std::size_t>(k)] = K(1);
        auto row = phi_coords(phi_theta(th, gamma, e));
        for (int j = 0; j < 7; ++j) {
            m(k, j) = row[static_cast<std::size_t>(j)];
        }
    }
    return rank_of(m);
}

// Dimension of the image of the second exterior power of the row span.
template <class K>
int phi_wedge_rank(const ThetaTriple& th, const Mat<K>& basis) {
    int pairs = basis.rows * (basis.rows - 1) / 2;
    Mat<K> m(pairs, 7);
    int r = 0;
    for (int i = 0; i < basis.rows; ++i) {
        for (int j = i + 1; j < basis.rows; ++j) {
            auto row = phi_coords(phi_theta(th, h3_row(basis, i), h3_row(basis, j)));
            for (int c = 0; c < 7; ++c) {
                m(r, c) = row[static_cast<std::size_t>(c)];
            }
            ++r;
        }
    }
    return rank_of(m);
}

// When the vector-side block of the 4 x 8 row basis is invertible the span
// is the graph of a map V -> V*; recover its Gram matrix.
template <class K>
bool try_graph_map(const Mat<K>& basis, Mat<K>& x_out) {
    if (basis.rows != 4 || basis.cols != 8) {
        throw std::invalid_argument("expected four rows of eight coordinates");
    }
    Mat<K> vpart(4, 4);
    Mat<K> lpart(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            vpart(i, j) = basis(i, j);
            lpart(i, j) = basis(i, 4 + j);
        }
    }
    if (rank_of(vpart) != 4) {
        return false;
    }
    // rows satisfy l_i = v_i X^T, so X^T solves vpart * X^T = lpart.
    x_out = solve(vpart, lpart).transpose();
    return true;
}

enum class SubspaceKind { GraphCase, SplitCase, NotOneDim };

template <class K>
struct SubspaceClassification {
    SubspaceKind kind = SubspaceKind::NotOneDim;
    Mat<K> graph_map;  // 4 x 4 skew Gram matrix in the graph case
    Mat<K> split_u;    // 2 x 4 reduced coordinates of U in the split case
};

// Structural classification of the four-dimensional subspaces whose wedge
// square maps to a line: either the graph of a skew map whose Pfaffian
// matches t1/t2, or a sum U + Ann(U) with U of dimension two.
template <class K>
SubspaceClassification<K> classify_subspace(const ThetaTriple& th, const Mat<K>& basis) {
    if (basis.rows != 4 || basis.cols != 8) {
        throw std::invalid_argument("expected four rows of eight coordinates");
    }
    if (rank_of(basis) != 4) {
        throw std::invalid_argument("expected a four-dimensional subspace");
    }
    SubspaceClassification<K> out;
    Mat<K> x(4, 4);
    if (try_graph_map(basis, x)) {
        if (!(x + x.transpose()).is_zero()) {
            return out;
        }
        if (K(th.t1) == K(th.t2) * pfaffian(x)) {
            out.kind = SubspaceKind::GraphCase;
            out.graph_map = x;
        }
        return out;
    }
    Mat<K> vpart(4, 4);
    Mat<K> lpart(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            vpart(i, j) = basis(i, j);
            lpart(i, j) = basis(i, 4 + j);
        }
    }
    // Coefficient combinations lying in V kill the covector block, and the
    // ones lying in V* kill the vector block.
    Mat<K> in_v = kernel(lpart.transpose());
    Mat<K> in_l = kernel(vpart.transpose());
    if (in_v.cols != 2 || in_l.cols != 2) {
        return out;
    }
    Mat<K> u(2, 4);
    Mat<K> w(2, 4);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 4; ++c) {
            K uv(0);
            K wv(0);
            for (int k = 0; k < 4; ++k) {
                uv += in_v(k, r) * vpart(k, c);
                wv += in_l(k, r) * lpart(k, c);
            }
            u(r, c) = uv;
            w(r, c) = wv;
        }
    }
    for (int r = 0; r < 2; ++r) {
        for (int s = 0; s < 2; ++s) {
            K val(0);
            for (int c = 0; c < 4; ++c) {
                val += w(r, c) * u(s, c);
            }
            if (!is_zero(val)) {
                return out;
            }
        }
    }
    rref(u);
    out.kind = SubspaceKind::SplitCase;
    out.split_u = u;
    return out;
}

// A candidate period: a vector-side two-form plus a zeta coordinate, with
// the quadric (a + x zeta, b + y zeta) = vol(a ^ b) - m x y.
template <class K>
struct PeriodPoint {
    Ext<K> omega;
    K zeta;

    PeriodPoint() : omega(false), zeta(0) {}
    PeriodPoint(Ext<K> omega_, K zeta_) : omega(std::move(omega_)), zeta(std::move(zeta_)) {
        if (omega.dual) {
            throw std::invalid_argument("period two-form must live on the vector side");
        }
        if (!omega.is_homogeneous(2)) {
            throw std::invalid_argument("period two-form must be homogeneous of degree 2");
        }
    }
};

template <class K>
K period_pairing(const ThetaTriple& th, const PeriodPoint<K>& s, const PeriodPoint<K>& t) {
    return vol(wedge(s.omega, t.omega)) - K(th.m) * s.zeta * t.zeta;
}

inline PeriodPoint<Quad> period_conj(const PeriodPoint<Quad>& s) {
    PeriodPoint<Quad> r;
    r.omega = Ext<Quad>(false);
    for (unsigned m = 0; m < 16; ++m) {
        r.omega.c[m] = s.omega.c[m].conj();
    }
    r.zeta = s.zeta.conj();
    return r;
}

// Membership in the period domain: isotropic with positive pairing against
// the conjugate.  The conjugate pairing of any point is invariant under
// conjugation, hence rational.
inline bool period_in_domain(const ThetaTriple& th, const PeriodPoint<Quad>& s) {
    if (!period_pairing(th, s, s).is_zero()) {
        return false;
    }
    Quad v = period_pairing(th, s, period_conj(s));
    if (!v.is_rational()) {
        throw std::logic_error("conjugate pairing must be rational");
    }
    return v.rational() > 0;
}

// A weight-one structure on V + V*, stored through the row-reduced basis
// of its holomorphic half.
struct WeightOneHS {
    Mat<Quad> basis;  // 4 x 8, reduced row echelon form
};

namespace detail {

// Check that a phi image is proportional to the period line.
inline bool phi_on_line(const PhiImage<Quad>& p, const PeriodPoint<Quad>& sigma) {
    std::vector<Quad> a = phi_coords(p);
    std::vector<Quad> b = coords(sigma.omega, 2);
    b.push_back(sigma.zeta);
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = i + 1; j < 7; ++j) {
            if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace detail

// Weight-one structure attached to a period in the domain: for a nonzero
// zeta coordinate the holomorphic half is the graph of the skew map whose
// duality image carries the rescaled two-form part; for zeta = 0 the
// two-form is decomposable and the half is U + Ann(U) for the plane U it
// spans.  The defining properties (the wedge square maps onto the period
// line, and the half meets its conjugate trivially) are verified before
// returning.
inline WeightOneHS hodge_from_period(const ThetaTriple& th, const PeriodPoint<Quad>& sigma) {
    if (!th.satisfies_product_relation()) {
        throw std::invalid_argument("ansatz constants must satisfy the product relation");
    }
    if (!period_in_domain(th, sigma)) {
        throw std::invalid_argument("period must lie in the domain");
    }
    Mat<Quad> basis(4, 8);
    if (!sigma.zeta.is_zero()) {
        // Rescale the representative so the zeta coordinate is -2 t3.
        Quad lam = Quad(Rat(-2) * th.t3) / sigma.zeta;
        Ext<Quad> alpha = (lam / Quad(th.t2)) * sigma.omega;
        auto f = SkewMap4<Quad>::from_omega(iota_inv(alpha));
        for (int j = 0; j < 4; ++j) {
            basis(j, j) = Quad(1);
            for (int i = 0; i < 4; ++i) {
                basis(j, 4 + i) = f.x(i, j);
            }
        }
    } else {
        // The two-form is isotropic, hence decomposable; its contractions
        // span the plane it lies on.
        Mat<Quad> cont(4, 4);
        for (int l = 0; l < 4; ++l) {
            Ext<Quad> ell = Ext<Quad>::monomial(1u << l, true);
            Ext<Quad> r = contract(ell, sigma.omega);
            for (int i = 0; i < 4; ++i) {
                cont(l, i) = r.c[1u << i];
            }
        }
        if (rank_of(cont) != 2) {
            throw std::logic_error("expected a decomposable two-form");
        }
        Mat<Quad> u = cont;
        rref(u);
        Mat<Quad> ann = kernel(u);
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 4; ++c) {
                basis(r, c) = u(r, c);
                basis(2 + r, 4 + c) = ann(c, r);
            }
        }
    }
    rref(basis);
    // Defining property: the wedge square lands on the period line.
    bool hit = false;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            PhiImage<Quad> p = phi_theta(th, h3_row(basis, i), h3_row(basis, j));
            if (!detail::phi_on_line(p, sigma)) {
                throw std::logic_error("wedge square leaves the period line");
            }
            if (!p.two_form.is_zero() || !p.zeta.is_zero()) {
                hit = true;
            }
        }
    }
    if (!hit) {
        throw std::logic_error("wedge square vanishes");
    }
    // Defining property: trivial intersection with the conjugate half.
    Mat<Quad> stack(8, 8);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 8; ++j) {
            stack(i, j) = basis(i, j);
            stack(4 + i, j) = basis(i, j).conj();
        }
    }
    if (rank_of(stack) != 8) {
        throw std::logic_error("holomorphic half meets its conjugate");
    }
    return WeightOneHS{std::move(basis)};
}

// A class of the degree-two cohomology acting on phi images through the
// zeta duality: a covector-side two-form plus a multiple of the functional
// dual to zeta.
struct PolarizationClass {
    Ext<Rat> form;
    Rat zeta;

    PolarizationClass() : form(true), zeta(0) {}
    PolarizationClass(Ext<Rat> form_, Rat zeta_) : form(std::move(form_)), zeta(std::move(zeta_)) {
        if (!form.dual) {
            throw std::invalid_argument("polarization form must live on the covector side");
        }
        if (!form.is_homogeneous(2)) {
            throw std::invalid_argument("polarization form must be homogeneous of degree 2");
        }
    }
};

// Evaluation of a polarization class on a phi image.  The zeta duality
// enters through an explicit orientation sign on the zeta coordinate; the
// two choices differ by the involution flipping the zeta functional, and
// each consumer fixes the one matching its normal form.
template <class K>
K dual_pairing(const PolarizationClass& h, const PhiImage<K>& p, int zeta_sign) {
    if (zeta_sign != 1 && zeta_sign != -1) {
        throw std::invalid_argument("zeta orientation must be +1 or -1");
    }
    Ext<K> hf(true);
    for (unsigned s = 0; s < 16; ++s) {
        hf.c[s] = K(h.form.c[s]);
    }
    return pair_forms(hf, p.two_form) + K(zeta_sign) * K(h.zeta) * p.zeta;
}

// Intersection pairing of two elements of V + V* against a polarization
// class, with the zeta orientation of the divisor tables.
template <class K>
K polarization_pairing(const ThetaTriple& th, const PolarizationClass& h, const H3Element<K>& a,
                       const H3Element<K>& b) {
    return dual_pairing(h, phi_theta(th, a, b), -1);
}

// Value of a polarization class on a period point, with the positivity
// orientation on zeta.
inline Quad polarization_on_period(const PolarizationClass& h, const PeriodPoint<Quad>& sigma) {
    Ext<Quad> hf(true);
    for (unsigned s = 0; s < 16; ++s) {
        hf.c[s] = Quad(h.form.c[s]);
    }
    return pair_forms(hf, sigma.omega) + Quad(h.zeta) * sigma.zeta;
}

// Square of a polarization class under the dual quadratic form.
inline Rat polarization_square(const PolarizationClass& h, const Rat& m) {
    return wedge(h.form, h.form).c[15] - h.zeta * h.zeta / m;
}

// Hermitian Gram matrix of the polarization on the holomorphic half:
// entry (i, j) pairs i times the phi image of b_i against the conjugate
// of b_j with the class h.
inline Mat<Quad> hermitian_gram(const ThetaTriple& th, const PolarizationClass& h,
                                const WeightOneHS& hs) {
    Quad iunit = Quad::sqrt_of(Rat(-1));
    Mat<Quad> g(4, 4);
    for (int i = 0; i < 4; ++i) {
        H3Element<Quad> a = h3_row(hs.basis, i);
        for (int j = 0; j < 4; ++j) {
            H3Element<Quad> b = h3_conj(h3_row(hs.basis, j));
            g(i, j) = iunit * dual_pairing(h, phi_theta(th, a, b), 1);
        }
    }
    return g;
}

// Sign of the Hermitian values of a polarization class of positive square
// on the weight-one structure of a period orthogonal to it: +1 or -1.
inline int positivity_check(const ThetaTriple& th, const PolarizationClass& h,
                            const PeriodPoint<Quad>& sigma) {
    if (!polarization_on_period(h, sigma).is_zero()) {
        throw std::invalid_argument("period must be orthogonal to the polarization");
    }
    if (polarization_square(h, th.m) <= 0) {
        throw std::invalid_argument("polarization must have positive square");
    }
    WeightOneHS hs = hodge_from_period(th, sigma);
    Quad iunit = Quad::sqrt_of(Rat(-1));
    int sign = 0;
    for (int i = 0; i < 4; ++i) {
        H3Element<Quad> a = h3_row(hs.basis, i);
        Quad val = iunit * dual_pairing(h, phi_theta(th, a, h3_conj(a)), 1);
        if (!val.is_rational()) {
            throw std::logic_error("hermitian diagonal value must be rational");
        }
        Rat v = val.rational();
        if (v == 0) {
            throw std::domain_error("hermitian diagonal value vanishes");
        }
        int s = v > 0 ? 1 : -1;
        if (sign == 0) {
            sign = s;
        } else if (sign != s) {
            throw std::domain_error("hermitian diagonal values of mixed sign");
        }
    }
    return sign;
}

// Even spinor: a scalar, a vector-side two-form, and a multiple of the
// volume form.
template <class K>
struct EvenSpinor {
    K scalar;
    Ext<K> two;
    K top;

    EvenSpinor() : scalar(0), two(false), top(0) {}
    EvenSpinor(K scalar_, Ext<K> two_, K top_)
        : scalar(std::move(scalar_)), two(std::move(two_)), top(std::move(top_)) {
        if (two.dual) {
            throw std::invalid_argument("spinor two-form must live on the vector side");
        }
        if (!two.is_homogeneous(2)) {
            throw std::invalid_argument("spinor two-form must be homogeneous of degree 2");
        }
    }
};

// The even half-spin quadratic form: the top coefficient of the wedge
// square minus twice the product of the extreme components.
template <class K>
K q_plus(const EvenSpinor<K>& x) {
    return wedge(x.two, x.two).c[15] - K(2) * x.scalar * x.top;
}

// Membership in the distinguished translate: (n + 1) times the scalar
// component equals the volume coefficient.
template <class K>
bool t_plus_membership(int n, const EvenSpinor<K>& x) {
    if (n < 1) {
        throw std::invalid_argument("expected a positive dimension parameter");
    }
    return K(Rat(n + 1)) * x.scalar == x.top;
}

// Annihilator of an even spinor inside V + V* under the Clifford action
// (vectors wedge, covectors contract).  For a nonzero isotropic spinor the
// annihilator has dimension four.
template <class K>
struct ZSubspace {
    Mat<K> basis;  // 4 x 8, reduced row echelon form
};

template <class K>
ZSubspace<K> z_subspace(const EvenSpinor<K>& x) {
    if (!is_zero(q_plus(x))) {
        throw std::invalid_argument("expected an isotropic even spinor");
    }
    if (is_zero(x.scalar) && x.two.is_zero() && is_zero(x.top)) {
        throw std::invalid_argument("expected a nonzero even spinor");
    }
    Mat<K> m(8, 8);
    // Degree-one block: scalar * v + contraction of l against the two-form.
    for (int i = 0; i < 4; ++i) {
        m(i, i) = x.scalar;
        for (int j = 0; j < 4; ++j) {
            Ext<K> ell = Ext<K>::monomial(1u << j, true);
            m(i, 4 + j) = contract(ell, x.two).c[1u << i];
        }
    }
    // Degree-three block: v ^ two-form + contraction of l against the top.
    Ext<K> vol_part = K(x.top) * Ext<K>::monomial(15u);
    int r = 4;
    for (unsigned mask = 0; mask < 16; ++mask) {
        if (std::popcount(mask) != 3) {
            continue;
        }
        for (int i = 0; i < 4; ++i) {
            m(r, i) = wedge(Ext<K>::monomial(1u << i), x.two).c[mask];
        }
        for (int j = 0; j < 4; ++j) {
            Ext<K> ell = Ext<K>::monomial(1u << j, true);
            m(r, 4 + j) = contract(ell, vol_part).c[mask];
        }
        ++r;
    }
    Mat<K> ker = kernel(m);
    if (ker.cols != 4) {
        throw std::logic_error("annihilator dimension must be four");
    }
    Mat<K> basis = ker.transpose();
    rref(basis);
    return ZSubspace<K>{std::move(basis)};
}

// Twisted embedding of a two-form plus a zeta coordinate into the even
// spinors: the scalar part takes the zeta coordinate over 2(n + 1) and the
// volume part takes half of it, both multiplied by (-1)^eps.
template <class K>
EvenSpinor<K> embed_i(int n, const Ext<K>& eta, const K& zeta_coord, int eps) {
    if (n < 1) {
        throw std::invalid_argument("expected a positive dimension parameter");
    }
    K s = (eps % 2 == 0) ? K(1) : K(-1);
    EvenSpinor<K> r;
    r.scalar = s * zeta_coord / K(Rat(2 * (n + 1)));
    r.two = eta;
    r.top = s * zeta_coord / K(2);
    if (r.two.dual || !r.two.is_homogeneous(2)) {
        throw std::invalid_argument("embedded two-form must be vector-side of degree 2");
    }
    return r;
}

// ------------------------------------------------------------------
// Deterministic samplers used by the randomized suites.

inline Quad random_gauss(Rng& rng, int lim) {
    return Quad(Rat(rng.uniform(-lim, lim)), Rat(rng.uniform(-lim, lim)), Rat(-1));
}

// Random period with nonzero zeta coordinate: five two-form coordinates
// and zeta are sampled, the sixth coordinate solves the isotropy equation,
// and the conjugate-pairing sign is enforced by rejection.
inline PeriodPoint<Quad> random_period(const ThetaTriple& th, Rng& rng, int lim = 6) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Quad c12 = random_gauss(rng, lim);
        Quad c13 = random_gauss(rng, lim);
        Quad c14 = random_gauss(rng, lim);
        Quad c23 = random_gauss(rng, lim);
        Quad c34 = random_gauss(rng, lim);
        Quad zeta = random_gauss(rng, lim);
        if (c13.is_zero() || zeta.is_zero()) {
            continue;
        }
        // vol(w ^ w) = 2 (c12 c34 - c13 c24 + c14 c23) = m zeta^2.
        Quad c24 = (Quad(2) * (c12 * c34 + c14 * c23) - Quad(th.m) * zeta * zeta) /
                   (Quad(2) * c13);
        Ext<Quad> w(false);
        w.c[0b0011] = c12;
        w.c[0b0101] = c13;
        w.c[0b1001] = c14;
        w.c[0b0110] = c23;
        w.c[0b1010] = c24;
        w.c[0b1100] = c34;
        PeriodPoint<Quad> s(w, zeta);
        if (period_in_domain(th, s)) {
            return s;
        }
    }
    throw std::logic_error("failed to sample a period point");
}

// Random period with zero zeta coordinate: a decomposable two-form is
// automatically isotropic, and the conjugate-pairing sign is enforced by
// rejection.
inline PeriodPoint<Quad> random_split_period(const ThetaTriple& th, Rng& rng, int lim = 6) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Ext<Quad> a(false);
        Ext<Quad> b(false);
        for (int i = 0; i < 4; ++i) {
            a.c[1u << i] = random_gauss(rng, lim);
            b.c[1u << i] = random_gauss(rng, lim);
        }
        Ext<Quad> w = wedge(a, b);
        if (w.is_zero()) {
            continue;
        }
        PeriodPoint<Quad> s(w, Quad(0));
        if (period_in_domain(th, s)) {
            return s;
        }
    }
    throw std::logic_error("failed to sample a split period point");
}

}  // namespace kummer
