#pragma once

#include "kummer/hodge.hpp"
#include "kummer/polarization.hpp"
#include "kummer/smith.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kummer {

// Symplectic pairing of the twisted-endomorphism structure: the
// polarization pairing with the positivity orientation on zeta.
template <class K>
K weil_pairing(const ThetaTriple& th, const PolarizationClass& h, const H3Element<K>& x,
               const H3Element<K>& y) {
    return dual_pairing(h, phi_theta(th, x, y), 1);
}

// 8x8 matrix on (v | l) coordinates of (v, l) -> (x^{-1} l - b v, b l - N x v).
inline Mat<Rat> twisted_endo_matrix(const Mat<Rat>& xg, const Rat& n_val, const Rat& b_val) {
    Mat<Rat> xinv = invert_skew(xg);
    Mat<Rat> p(8, 8);
    for (int i = 0; i < 4; ++i) {
        p(i, i) = -b_val;
        p(4 + i, 4 + i) = b_val;
        for (int j = 0; j < 4; ++j) {
            p(i, 4 + j) = xinv(i, j);
            p(4 + i, j) = -n_val * xg(i, j);
        }
    }
    return p;
}

// Context of the twisted endomorphism attached to the pairing constants
// and a polarizing class in normal form: the skew map carries the
// two-form part of the class, N and b are the halved coefficients of the
// minimal polynomial x^2 - 2bx + N, and D = N - b^2 is positive exactly
// when the class has positive square.
struct WeilContext {
    ThetaTriple th;
    PolClass cls;
    Mat<Rat> xg;
    Rat N;
    Rat b;
    Rat D;

    WeilContext(ThetaTriple th_, PolClass cls_)
        : th(std::move(th_)), cls(std::move(cls_)), xg(4, 4) {
        if (!th.satisfies_product_relation()) {
            throw std::invalid_argument("ansatz constants must satisfy the product relation");
        }
        Rat c2e = Rat(cls.c * cls.c * cls.e);
        N = th.t1 / (c2e * th.t2);
        b = Rat(cls.s) * th.t3 / (c2e * th.t2);
        D = N - b * b;
        if (D <= 0) {
            throw std::invalid_argument("the polarizing class must have positive square");
        }
        Rat ce(cls.c * cls.e);
        Rat c(cls.c);
        xg(0, 1) = ce;
        xg(1, 0) = -ce;
        xg(2, 3) = c;
        xg(3, 2) = -c;
    }

    PolarizationClass h() const { return cls.to_polarization(); }

    Mat<Rat> psi_matrix() const { return twisted_endo_matrix(xg, N, b); }

    // Gram matrix of the symplectic pairing on the coordinate basis.
    Mat<Rat> gram_matrix() const {
        PolarizationClass hh = h();
        Mat<Rat> g(8, 8);
        for (int i = 0; i < 8; ++i) {
            H3Element<Rat> a{};
            a[static_cast<std::size_t>(i)] = Rat(1);
            for (int j = 0; j < 8; ++j) {
                H3Element<Rat> bb{};
                bb[static_cast<std::size_t>(j)] = Rat(1);
                g(i, j) = weil_pairing(th, hh, a, bb);
            }
        }
        return g;
    }
};

// Value of the endomorphism on an element, by the defining formula.
template <class K>
H3Element<K> psi_apply(const WeilContext& ctx, const H3Element<K>& x) {
    Mat<Rat> xinv = invert_skew(ctx.xg);
    H3Element<K> r{};
    for (int i = 0; i < 4; ++i) {
        K gi(0);
        K li(0);
        for (int j = 0; j < 4; ++j) {
            gi += K(xinv(i, j)) * x[static_cast<std::size_t>(4 + j)];
            li += K(ctx.xg(i, j)) * x[static_cast<std::size_t>(j)];
        }
        r[static_cast<std::size_t>(i)] = gi - K(ctx.b) * x[static_cast<std::size_t>(i)];
        r[static_cast<std::size_t>(4 + i)] = K(ctx.b) * x[static_cast<std::size_t>(4 + i)] - K(ctx.N) * li;
    }
    return r;
}

// Roots b + sqrt(-D) and b - sqrt(-D) of the minimal polynomial; the
// endomorphism acts on the graph of (that root times the skew map) with
// eigenvalue root - b.
inline Quad weil_eigenvalue(const WeilContext& ctx, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("eigenvalue sign must be +1 or -1");
    }
    Quad sd = Quad::sqrt_of(-ctx.D);
    return (sign == 1) ? Quad(ctx.b) + sd : Quad(ctx.b) - sd;
}

// Rows (e_j | root * (column j of the skew map)) spanning an eigenspace.
inline Mat<Quad> weil_eigenspace(const WeilContext& ctx, int sign) {
    Quad lam = weil_eigenvalue(ctx, sign);
    Mat<Quad> basis(4, 8);
    for (int j = 0; j < 4; ++j) {
        basis(j, j) = Quad(1);
        for (int i = 0; i < 4; ++i) {
            basis(j, 4 + i) = lam * Quad(ctx.xg(i, j));
        }
    }
    return basis;
}

// Express the action of an 8x8 matrix on the row span of a reduced
// (pivot-leading) 4x8 basis: fills r_out, whose column j holds the
// coefficients of the image of row j, and reports whether the span is
// preserved at all.
template <class K>
bool restrict_to_row_span(const Mat<K>& basis, const Mat<K>& p, Mat<K>& r_out) {
    if (basis.rows != 4 || basis.cols != 8 || p.rows != 8 || p.cols != 8) {
        throw std::invalid_argument("expected a 4x8 basis and an 8x8 matrix");
    }
    std::array<int, 4> piv{};
    for (int i = 0; i < 4; ++i) {
        int j = 0;
        while (j < 8 && is_zero(basis(i, j))) {
            ++j;
        }
        if (j == 8 || basis(i, j) != K(1)) {
            throw std::invalid_argument("expected a reduced basis with unit pivots");
        }
        piv[static_cast<std::size_t>(i)] = j;
    }
    r_out = Mat<K>(4, 4);
    bool preserved = true;
    for (int j = 0; j < 4; ++j) {
        std::array<K, 8> img{};
        for (int a = 0; a < 8; ++a) {
            K v(0);
            for (int k = 0; k < 8; ++k) {
                v += p(a, k) * basis(j, k);
            }
            img[static_cast<std::size_t>(a)] = v;
        }
        for (int i = 0; i < 4; ++i) {
            r_out(i, j) = img[static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])];
        }
        for (int a = 0; a < 8 && preserved; ++a) {
            K s(0);
            for (int i = 0; i < 4; ++i) {
                s += r_out(i, j) * basis(i, a);
            }
            if (s != img[static_cast<std::size_t>(a)]) {
                preserved = false;
            }
        }
    }
    return preserved;
}

struct WeilReport {
    bool graph_case = false;
    bool square_scalar = false;   // the endomorphism squares to -D on the lattice
    bool preserves_half = false;  // it maps the holomorphic half into itself
    bool eigen_split = false;     // the restriction is traceless and squares to -D
    bool scaling = false;         // the pairing of two images picks up the factor D
    bool minimal_poly = false;    // graph case: the composed skew maps satisfy the
                                  // minimal polynomial; split case: the plane maps
                                  // into its annihilator
    bool trace_value = false;     // graph case: the composed trace equals 4b
    bool ok = false;
};

// The Weil-structure verification on a period orthogonal to the class.
inline WeilReport verify_weil(const WeilContext& ctx, const PeriodPoint<Quad>& sigma) {
    WeilReport rep;
    PolarizationClass h = ctx.h();
    if (!polarization_on_period(h, sigma).is_zero()) {
        throw std::invalid_argument("period must be orthogonal to the polarizing class");
    }
    WeightOneHS hs = hodge_from_period(ctx.th, sigma);
    auto cls = classify_subspace(ctx.th, hs.basis);
    rep.graph_case = (cls.kind == SubspaceKind::GraphCase);

    Mat<Rat> p = ctx.psi_matrix();
    rep.square_scalar = (p * p == (-ctx.D) * Mat<Rat>::identity(8));

    Mat<Quad> pq(8, 8);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            pq(i, j) = Quad(p(i, j));
        }
    }
    Mat<Quad> r(4, 4);
    rep.preserves_half = restrict_to_row_span(hs.basis, pq, r);
    if (rep.preserves_half) {
        Quad tr(0);
        for (int i = 0; i < 4; ++i) {
            tr += r(i, i);
        }
        rep.eigen_split =
            tr.is_zero() && (r * r == (-Quad(ctx.D)) * Mat<Quad>::identity(4));
    }

    Mat<Rat> g = ctx.gram_matrix();
    rep.scaling = (p.transpose() * g * p == ctx.D * g);

    if (rep.graph_case) {
        Mat<Quad> m(4, 4);
        Mat<Rat> xginv = invert_skew(ctx.xg);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                Quad v(0);
                for (int k = 0; k < 4; ++k) {
                    v += Quad(xginv(i, k)) * cls.graph_map(k, j);
                }
                m(i, j) = v;
            }
        }
        Mat<Quad> lhs = m * m - Quad(Rat(2) * ctx.b) * m + Quad(ctx.N) * Mat<Quad>::identity(4);
        rep.minimal_poly = lhs.is_zero();
        Quad tr(0);
        for (int i = 0; i < 4; ++i) {
            tr += m(i, i);
        }
        rep.trace_value = (tr == Quad(Rat(4) * ctx.b));
    } else {
        // the plane carrying the period is isotropic for the skew form,
        // so the skew map takes it into the annihilator and both graded
        // pieces are preserved no matter the values of N and b
        bool iso = true;
        for (int r1 = 0; r1 < 2 && iso; ++r1) {
            for (int r2 = 0; r2 < 2 && iso; ++r2) {
                Quad v(0);
                for (int i = 0; i < 4; ++i) {
                    for (int j = 0; j < 4; ++j) {
                        v += cls.split_u(r1, i) * Quad(ctx.xg(i, j)) * cls.split_u(r2, j);
                    }
                }
                iso = iso && v.is_zero();
            }
        }
        rep.minimal_poly = iso;
        rep.trace_value = iso;
    }

    rep.ok = rep.square_scalar && rep.preserves_half && rep.eigen_split && rep.scaling &&
             rep.minimal_poly && rep.trace_value;
    return rep;
}

struct EigenspaceReport {
    bool invariant = false;  // both graphs are eigenspaces with roots apart by 2 sqrt(-D)
    bool isotropic = false;  // each graph is isotropic for the symplectic pairing
    bool cross_factor = false;  // pairing across the graphs is the skew form scaled by
                                // t1 (h,h)-dual / (c^2 e)
    bool ok = false;
};

inline EigenspaceReport verify_eigenspaces(const WeilContext& ctx) {
    EigenspaceReport rep;
    Mat<Rat> p = ctx.psi_matrix();
    Mat<Quad> pq(8, 8);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            pq(i, j) = Quad(p(i, j));
        }
    }
    PolarizationClass h = ctx.h();
    Mat<Quad> plus = weil_eigenspace(ctx, 1);
    Mat<Quad> minus = weil_eigenspace(ctx, -1);
    rep.invariant = true;
    rep.isotropic = true;
    for (int sign : {1, -1}) {
        const Mat<Quad>& basis = (sign == 1) ? plus : minus;
        Quad mu = weil_eigenvalue(ctx, sign) - Quad(ctx.b);
        for (int r = 0; r < 4; ++r) {
            for (int a = 0; a < 8; ++a) {
                Quad v(0);
                for (int k = 0; k < 8; ++k) {
                    v += pq(a, k) * basis(r, k);
                }
                if (v != mu * basis(r, a)) {
                    rep.invariant = false;
                }
            }
            for (int r2 = 0; r2 < 4; ++r2) {
                Quad v = weil_pairing(ctx.th, h, h3_row(basis, r), h3_row(basis, r2));
                if (!v.is_zero()) {
                    rep.isotropic = false;
                }
            }
        }
    }
    Rat c2e(ctx.cls.c * ctx.cls.c * ctx.cls.e);
    Quad factor = Quad(ctx.th.t1 * polarization_square(h, ctx.th.m) / c2e);
    rep.cross_factor = true;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            Quad v = weil_pairing(ctx.th, h, h3_row(plus, i), h3_row(minus, j));
            if (v != factor * Quad(ctx.xg(i, j))) {
                rep.cross_factor = false;
            }
        }
    }
    rep.ok = rep.invariant && rep.isotropic && rep.cross_factor;
    return rep;
}

struct HermitianReport {
    Mat<Quad> gram;  // on the basis (v_1, 0)..(v_4, 0) over the field with sqrt(-D)
    Rat det;
    Rat witness;  // element whose norm is the determinant
    bool hermitian = false;
    bool matches_closed_form = false;  // equals t1 sqrt(-D) times the skew map
    bool witness_ok = false;
    bool ok = false;

    HermitianReport() : gram(4, 4) {}
};

// Hermitian form of the Weil structure: pairs an element against the
// endomorphism image of another, plus sqrt(-D) times the plain pairing,
// evaluated on the vector-side coordinate basis.
inline HermitianReport weil_hermitian_gram(const WeilContext& ctx) {
    HermitianReport rep;
    Quad sd = Quad::sqrt_of(-ctx.D);
    PolarizationClass h = ctx.h();
    for (int i = 0; i < 4; ++i) {
        H3Element<Rat> a{};
        a[static_cast<std::size_t>(i)] = Rat(1);
        for (int j = 0; j < 4; ++j) {
            H3Element<Rat> bb{};
            bb[static_cast<std::size_t>(j)] = Rat(1);
            Rat twisted = weil_pairing(ctx.th, h, a, psi_apply(ctx, bb));
            Rat plain = weil_pairing(ctx.th, h, a, bb);
            rep.gram(i, j) = Quad(twisted) + sd * Quad(plain);
        }
    }
    rep.hermitian = (rep.gram == rep.gram.conj_transpose());
    Mat<Quad> closed(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            closed(i, j) = Quad(ctx.th.t1) * sd * Quad(ctx.xg(i, j));
        }
    }
    rep.matches_closed_form = (rep.gram == closed);
    Quad dq = det(rep.gram);
    if (!dq.is_rational()) {
        throw std::logic_error("hermitian determinant must be rational");
    }
    rep.det = dq.rational();
    if (rep.det == 0) {
        throw std::domain_error("hermitian form is degenerate");
    }
    Rat c2e(ctx.cls.c * ctx.cls.c * ctx.cls.e);
    rep.witness = ctx.th.t1 * ctx.th.t1 * c2e * ctx.D;
    rep.witness_ok = (rep.witness * rep.witness == rep.det);
    rep.ok = rep.hermitian && rep.matches_closed_form && rep.witness_ok;
    return rep;
}

// ------------------------------------------------------------------
// Deterministic samplers for periods orthogonal to the class of a context.

// Nonzero-zeta flavor: the two-form coordinate on v3^v4 solves the
// orthogonality constraint and the coordinate on v2^v4 the isotropy one.
inline PeriodPoint<Quad> random_orthogonal_period(const WeilContext& ctx, Rng& rng, int lim = 4) {
    Rat ce(ctx.cls.c * ctx.cls.e);
    Rat c(ctx.cls.c);
    Rat s(ctx.cls.s);
    for (int attempt = 0; attempt < 2000; ++attempt) {
        Quad c12 = random_gauss(rng, lim);
        Quad c13 = random_gauss(rng, lim);
        Quad c14 = random_gauss(rng, lim);
        Quad c23 = random_gauss(rng, lim);
        Quad zeta = random_gauss(rng, lim);
        if (c13.is_zero() || zeta.is_zero()) {
            continue;
        }
        Quad c34 = (Quad(0) - (Quad(ce) * c12 + Quad(s) * zeta)) / Quad(c);
        Quad c24 = (Quad(2) * (c12 * c34 + c14 * c23) - Quad(ctx.th.m) * zeta * zeta) /
                   (Quad(2) * c13);
        Ext<Quad> w(false);
        w.c[0b0011] = c12;
        w.c[0b0101] = c13;
        w.c[0b1001] = c14;
        w.c[0b0110] = c23;
        w.c[0b1010] = c24;
        w.c[0b1100] = c34;
        PeriodPoint<Quad> sg(w, zeta);
        if (period_in_domain(ctx.th, sg)) {
            return sg;
        }
    }
    throw std::logic_error("failed to sample an orthogonal period");
}

// Zero-zeta flavor: a wedge of two vectors spanning a plane isotropic for
// the skew form of the context.
inline PeriodPoint<Quad> random_orthogonal_split_period(const WeilContext& ctx, Rng& rng,
                                                        int lim = 4) {
    for (int attempt = 0; attempt < 2000; ++attempt) {
        Mat<Quad> row(1, 4);
        bool zero = true;
        for (int j = 0; j < 4; ++j) {
            Quad u = random_gauss(rng, lim);
            zero = zero && u.is_zero();
            row(0, j) = u;
        }
        if (zero) {
            continue;
        }
        // covector cutting out the orthogonal complement under the skew form
        Mat<Quad> cut(1, 4);
        for (int j = 0; j < 4; ++j) {
            Quad v(0);
            for (int i = 0; i < 4; ++i) {
                v += row(0, i) * Quad(ctx.xg(i, j));
            }
            cut(0, j) = v;
        }
        Mat<Quad> ker = kernel(cut);
        std::vector<Quad> coeff;
        for (int k = 0; k < ker.cols; ++k) {
            coeff.push_back(random_gauss(rng, lim));
        }
        Ext<Quad> a(false);
        Ext<Quad> bb(false);
        for (int i = 0; i < 4; ++i) {
            a.c[1u << i] = row(0, i);
            Quad v(0);
            for (int k = 0; k < ker.cols; ++k) {
                v += coeff[static_cast<std::size_t>(k)] * ker(i, k);
            }
            bb.c[1u << i] = v;
        }
        Ext<Quad> w = wedge(a, bb);
        if (w.is_zero()) {
            continue;
        }
        PeriodPoint<Quad> sg(w, Quad(0));
        if (period_in_domain(ctx.th, sg)) {
            return sg;
        }
    }
    throw std::logic_error("failed to sample an orthogonal split period");
}

struct CubeRootReport {
    Rat N;
    Rat b;
    Rat D;
    bool psi_squares = false;          // the rescaled endomorphism squares to -3
    bool omega_cubes = false;          // the averaged map is a nontrivial cube root of 1
    bool omega_not_integral = false;   // it does not preserve the standard lattice
    Int lattice_index = 0;             // index of the standard lattice in the enlarged one
    bool kernel_two_elementary = false;  // the quotient is an F_2 vector space
    bool omega_preserves_lattice = false;
    bool ok = false;
};

// Worked example on the principal polarizing class: the rescaled
// endomorphism generates a cube root of unity acting on the lattice
// enlarged by the half-diagonal classes (v/2, g(v)/2).
inline CubeRootReport cube_root_endomorphism_example() {
    WeilContext ctx(fourfold_theta(), PolClass(Int(1), Int(1), Int(0)));
    CubeRootReport rep;
    rep.N = ctx.N;
    rep.b = ctx.b;
    rep.D = ctx.D;

    Mat<Rat> p0 = Rat(3) * ctx.psi_matrix();
    rep.psi_squares = (p0 * p0 == Rat(-3) * Mat<Rat>::identity(8));

    Mat<Rat> id8 = Mat<Rat>::identity(8);
    Mat<Rat> omega = Rat(-1, 2) * (id8 + p0);
    rep.omega_cubes = (omega * omega * omega == id8) && !(omega == id8);
    bool integral = true;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            integral = integral && denominator(omega(i, j)) == 1;
        }
    }
    rep.omega_not_integral = !integral;

    // twice the enlarged lattice inside the standard one: doubled basis
    // vectors together with the diagonal rows (e_j | column j of the skew map)
    IMat gens;
    for (int i = 0; i < 8; ++i) {
        std::vector<Int> row(8, Int(0));
        row[static_cast<std::size_t>(i)] = 2;
        gens.push_back(std::move(row));
    }
    Mat<Rat> diag_half(8, 8);
    for (int j = 0; j < 4; ++j) {
        std::vector<Int> row(8, Int(0));
        row[static_cast<std::size_t>(j)] = 1;
        for (int i = 0; i < 4; ++i) {
            Rat v = ctx.xg(i, j);
            if (denominator(v) != 1) {
                throw std::logic_error("skew map must be integral on the lattice");
            }
            row[static_cast<std::size_t>(4 + i)] = numerator(v);
        }
        gens.push_back(std::move(row));
    }
    Int index_doubled = lattice_index(gens, 8);  // [standard : twice-enlarged]
    rep.lattice_index = Int(256) / index_doubled;

    IMat h = hermite_normal_form(gens);
    Mat<Rat> bl(8, 8);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            bl(i, j) = Rat(h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) / Rat(2);
        }
    }
    // the standard basis written in the enlarged basis has integer rows;
    // its elementary divisors describe the quotient group
    IMat quot = to_integer_matrix(inverse(bl));
    std::vector<Int> inv = smith_normal_form(quot);
    rep.kernel_two_elementary =
        inv == std::vector<Int>{Int(1), Int(1), Int(1), Int(1), Int(2), Int(2), Int(2), Int(2)};

    Mat<Rat> blt = bl.transpose();
    Mat<Rat> coeff = solve(blt, omega * blt);
    bool stable = true;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            stable = stable && denominator(coeff(i, j)) == 1;
        }
    }
    rep.omega_preserves_lattice = stable;

    rep.ok = rep.psi_squares && rep.omega_cubes && rep.omega_not_integral &&
             rep.lattice_index == 16 && rep.kernel_two_elementary && rep.omega_preserves_lattice;
    return rep;
}

}  // namespace kummer
