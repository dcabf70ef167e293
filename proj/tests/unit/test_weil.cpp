#include "kummer/constants.hpp"
#include "kummer/polarization.hpp"
#include "kummer/rng.hpp"

#include "kummer/frozen.hpp"
#include "kummer/weil.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <vector>

using namespace kummer;

namespace {

WeilContext make_context(int div, Int e) {
    PolClass base = divisor_case(div, e);
    return WeilContext(fourfold_theta(), base);
}

Mat<Rat> random_integer_skew(Rng& rng, int lim) {
    Mat<Rat> x(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            Rat v(rng.uniform(-lim, lim));
            x(i, j) = v;
            x(j, i) = -v;
        }
    }
    return x;
}

}  // namespace

TEST_CASE("twisted endomorphism context constants") {
    // principal class: N = 1/3, b = 0, D = 1/3
    WeilContext ctx(fourfold_theta(), PolClass(Int(1), Int(1), Int(0)));
    REQUIRE(ctx.N == Rat(1, 3));
    REQUIRE(ctx.b == Rat(0));
    REQUIRE(ctx.D == Rat(1, 3));
    REQUIRE(ctx.xg(0, 1) == Rat(1));
    REQUIRE(ctx.xg(2, 3) == Rat(1));

    // divisibility-2 template at e = 1: c = 2, e = 1, s = 1
    WeilContext ctx2(fourfold_theta(), divisor_case(2, Int(1)));
    REQUIRE(ctx2.N == Rat(1, 12));
    REQUIRE(ctx2.b == Rat(1, 4));
    REQUIRE(ctx2.D == Rat(1, 48));

    // D is the dual square of the class scaled by t3^2 m / (t2^2 c^4 e^2)
    ThetaTriple th = fourfold_theta();
    for (int div : {1, 2, 3, 6}) {
        for (Int e = 1; e <= 6; ++e) {
            PolClass cls = divisor_case(div, e);
            WeilContext c(th, cls);
            Rat c4e2(cls.c * cls.c * cls.c * cls.c * cls.e * cls.e);
            Rat hh = polarization_square(c.h(), th.m);
            REQUIRE(hh > 0);
            REQUIRE(c.D == th.t3 * th.t3 * th.m / (th.t2 * th.t2) * hh / c4e2);
            REQUIRE(c.N - c.b * c.b == c.D);
        }
    }

    // a class with negative square is rejected: c = 1, e = 1, s = 1 has
    // square 2 - 6 = -4
    REQUIRE_THROWS_AS(WeilContext(th, PolClass(Int(1), Int(1), Int(1))), std::invalid_argument);

    // broken constants are rejected before any geometry happens
    ThetaTriple broken(Rat(-1), Rat(-3), Rat(-2), Rat(1, 6));
    REQUIRE_FALSE(broken.satisfies_product_relation());
    REQUIRE_THROWS_AS(WeilContext(broken, PolClass(Int(1), Int(1), Int(0))),
                      std::invalid_argument);
}

TEST_CASE("endomorphism matrix squares to minus D") {
    ThetaTriple th = fourfold_theta();
    Rng rng(4021);
    int checked = 0;
    for (int div : {1, 2, 3, 6}) {
        for (int t = 0; t < 4; ++t) {
            Int e(rng.uniform(1, 9));
            WeilContext ctx(th, divisor_case(div, e));
            Mat<Rat> p = ctx.psi_matrix();
            REQUIRE(p * p == (-ctx.D) * Mat<Rat>::identity(8));
            // matrix and direct formula agree on random elements
            for (int k = 0; k < 3; ++k) {
                H3Element<Rat> x{};
                for (auto& v : x) {
                    v = Rat(rng.uniform(-9, 9), rng.uniform(1, 4));
                }
                H3Element<Rat> direct = psi_apply(ctx, x);
                for (int i = 0; i < 8; ++i) {
                    Rat acc(0);
                    for (int j = 0; j < 8; ++j) {
                        acc += p(i, j) * x[static_cast<std::size_t>(j)];
                    }
                    REQUIRE(acc == direct[static_cast<std::size_t>(i)]);
                }
            }
            ++checked;
        }
    }
    REQUIRE(checked == 16);

    // for the principal class b = 0, so the endomorphism swaps the vector
    // and covector summands
    WeilContext ctx(th, PolClass(Int(1), Int(1), Int(0)));
    H3Element<Rat> v{};
    v[0] = Rat(1);
    H3Element<Rat> img = psi_apply(ctx, v);
    REQUIRE(img[0] == 0);
    REQUIRE(img[1] == 0);
    REQUIRE(img[2] == 0);
    REQUIRE(img[3] == 0);
    // covector part is -N times the skew image of v_1
    REQUIRE(img[4] == 0);
    REQUIRE(img[5] == Rat(1, 3));
    REQUIRE(img[6] == 0);
    REQUIRE(img[7] == 0);
}

TEST_CASE("gram matrix of the symplectic pairing") {
    ThetaTriple th = fourfold_theta();
    for (int div : {1, 2, 3, 6}) {
        for (Int e : {Int(1), Int(3), Int(5)}) {
            WeilContext ctx(th, divisor_case(div, e));
            Mat<Rat> g = ctx.gram_matrix();
            REQUIRE(g + g.transpose() == Mat<Rat>(8, 8));

            // block closed form: [[t1 X, -s t3 I], [s t3 I, -c^2 e t2 X^{-1}]]
            Rat s(ctx.cls.s);
            Rat c2e(ctx.cls.c * ctx.cls.c * ctx.cls.e);
            Mat<Rat> xinv = invert_skew(ctx.xg);
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) {
                    REQUIRE(g(i, j) == th.t1 * ctx.xg(i, j));
                    REQUIRE(g(i, 4 + j) == ((i == j) ? -s * th.t3 : Rat(0)));
                    REQUIRE(g(4 + i, j) == ((i == j) ? s * th.t3 : Rat(0)));
                    REQUIRE(g(4 + i, 4 + j) == -c2e * th.t2 * xinv(i, j));
                }
            }

            // the endomorphism scales the pairing by D
            Mat<Rat> p = ctx.psi_matrix();
            REQUIRE(p.transpose() * g * p == ctx.D * g);
        }
    }
}

TEST_CASE("eigenspaces of the twisted endomorphism") {
    ThetaTriple th = fourfold_theta();
    Rng rng(5300);
    for (int div : {1, 2, 3, 6}) {
        for (int t = 0; t < 3; ++t) {
            Int e(rng.uniform(1, 10));
            WeilContext ctx(th, divisor_case(div, e));
            Quad lam1 = weil_eigenvalue(ctx, 1);
            Quad lam2 = weil_eigenvalue(ctx, -1);
            REQUIRE(lam1 + lam2 == Quad(Rat(2) * ctx.b));
            REQUIRE(lam1 * lam2 == Quad(ctx.N));
            REQUIRE(lam1 != lam2);
            EigenspaceReport rep = verify_eigenspaces(ctx);
            REQUIRE(rep.invariant);
            REQUIRE(rep.isotropic);
            REQUIRE(rep.cross_factor);
            REQUIRE(rep.ok);
        }
    }
    REQUIRE_THROWS_AS(weil_eigenvalue(make_context(1, Int(1)), 0), std::invalid_argument);
}

TEST_CASE("weil verification on orthogonal graph periods") {
    ThetaTriple th = fourfold_theta();
    Rng rng(6100);
    for (int div : {1, 2, 3, 6}) {
        for (Int e : {Int(1), Int(2), Int(4)}) {
            WeilContext ctx(th, divisor_case(div, e));
            for (int t = 0; t < 3; ++t) {
                PeriodPoint<Quad> sigma = random_orthogonal_period(ctx, rng);
                REQUIRE(polarization_on_period(ctx.h(), sigma).is_zero());
                WeilReport rep = verify_weil(ctx, sigma);
                REQUIRE(rep.graph_case);
                REQUIRE(rep.square_scalar);
                REQUIRE(rep.preserves_half);
                REQUIRE(rep.eigen_split);
                REQUIRE(rep.scaling);
                REQUIRE(rep.minimal_poly);
                REQUIRE(rep.trace_value);
                REQUIRE(rep.ok);
            }
        }
    }
}

TEST_CASE("weil verification on orthogonal split periods") {
    ThetaTriple th = fourfold_theta();
    Rng rng(6200);
    for (int div : {1, 3}) {
        for (Int e : {Int(1), Int(3)}) {
            WeilContext ctx(th, divisor_case(div, e));
            for (int t = 0; t < 3; ++t) {
                PeriodPoint<Quad> sigma = random_orthogonal_split_period(ctx, rng);
                REQUIRE(polarization_on_period(ctx.h(), sigma).is_zero());
                WeilReport rep = verify_weil(ctx, sigma);
                REQUIRE_FALSE(rep.graph_case);
                REQUIRE(rep.ok);
            }
        }
    }

    // the split half is preserved by the twisted formula for any choice of
    // the coefficients, not only the ones fixed by the class
    WeilContext ctx(th, divisor_case(1, Int(2)));
    PeriodPoint<Quad> sigma = random_orthogonal_split_period(ctx, rng);
    WeightOneHS hs = hodge_from_period(th, sigma);
    Mat<Rat> alt = twisted_endo_matrix(ctx.xg, Rat(7, 5), Rat(-2, 3));
    Mat<Quad> altq(8, 8);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            altq(i, j) = Quad(alt(i, j));
        }
    }
    Mat<Quad> r(4, 4);
    REQUIRE(restrict_to_row_span(hs.basis, altq, r));
}

TEST_CASE("weil verification rejects non-orthogonal periods") {
    ThetaTriple th = fourfold_theta();
    WeilContext ctx(th, PolClass(Int(1), Int(1), Int(0)));
    Rng rng(6300);
    // a generic domain period is almost never orthogonal to the class
    for (int t = 0; t < 50; ++t) {
        PeriodPoint<Quad> sigma = random_period(th, rng);
        if (polarization_on_period(ctx.h(), sigma).is_zero()) {
            continue;
        }
        REQUIRE_THROWS_AS(verify_weil(ctx, sigma), std::invalid_argument);
        break;
    }
}

TEST_CASE("hermitian gram of the weil structure") {
    ThetaTriple th = fourfold_theta();
    for (int div : {1, 2, 3, 6}) {
        for (Int e : {Int(1), Int(2), Int(7)}) {
            WeilContext ctx(th, divisor_case(div, e));
            HermitianReport rep = weil_hermitian_gram(ctx);
            REQUIRE(rep.hermitian);
            REQUIRE(rep.matches_closed_form);
            Rat c4e2(ctx.cls.c * ctx.cls.c * ctx.cls.c * ctx.cls.c * ctx.cls.e * ctx.cls.e);
            REQUIRE(rep.det == th.t1 * th.t1 * th.t1 * th.t1 * c4e2 * ctx.D * ctx.D);
            REQUIRE(rep.witness * rep.witness == rep.det);
            REQUIRE(rep.witness_ok);
            REQUIRE(rep.ok);
        }
    }
}

TEST_CASE("quadratic identity for products of skew maps") {
    Rng rng(7000);
    for (int t = 0; t < 200; ++t) {
        Mat<Rat> x = random_integer_skew(rng, 12);
        Mat<Rat> y = random_integer_skew(rng, 12);
        REQUIRE(skew_cayley_check(x, y));
    }
    // the minimal polynomial of the composed map in a context is the
    // defining quadratic: trace/2 gives 2b and the pfaffian product gives N
    ThetaTriple th = fourfold_theta();
    Rng rng2(7001);
    WeilContext ctx(th, divisor_case(2, Int(3)));
    PeriodPoint<Quad> sigma = random_orthogonal_period(ctx, rng2);
    WeightOneHS hs = hodge_from_period(th, sigma);
    auto cls = classify_subspace(th, hs.basis);
    REQUIRE(cls.kind == SubspaceKind::GraphCase);
    Mat<Quad> xgq(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            xgq(i, j) = Quad(ctx.xg(i, j));
        }
    }
    Quad pf_prod = pfaffian(invert_skew(xgq)) * pfaffian(cls.graph_map);
    REQUIRE(pf_prod == Quad(ctx.N));
    Mat<Quad> m = invert_skew(xgq) * cls.graph_map;
    Quad tr(0);
    for (int i = 0; i < 4; ++i) {
        tr += m(i, i);
    }
    REQUIRE(tr == Quad(Rat(4) * ctx.b));
}

TEST_CASE("cube root endomorphism on the principal class") {
    CubeRootReport rep = cube_root_endomorphism_example();
    REQUIRE(rep.N == Rat(frozen::example_N_num, frozen::example_N_den));
    REQUIRE(rep.b == Rat(frozen::example_b));
    REQUIRE(rep.D == Rat(frozen::example_D_num, frozen::example_D_den));
    REQUIRE(rep.psi_squares);
    REQUIRE(rep.omega_cubes);
    REQUIRE(rep.omega_not_integral);
    REQUIRE(rep.lattice_index == Int(frozen::example_lattice_index));
    REQUIRE(rep.kernel_two_elementary);
    REQUIRE(rep.omega_preserves_lattice);
    REQUIRE(rep.ok);
}

TEST_CASE("restriction helper validates its inputs") {
    Mat<Quad> basis(4, 8);
    for (int i = 0; i < 4; ++i) {
        basis(i, i) = Quad(1);
    }
    Mat<Quad> p(8, 8);
    Mat<Quad> r(4, 4);
    REQUIRE(restrict_to_row_span(basis, p, r));
    REQUIRE(r.is_zero());

    Mat<Quad> bad(3, 8);
    REQUIRE_THROWS_AS(restrict_to_row_span(bad, p, r), std::invalid_argument);
    Mat<Quad> unpivoted(4, 8);
    for (int i = 0; i < 4; ++i) {
        unpivoted(i, i) = Quad(2);
    }
    REQUIRE_THROWS_AS(restrict_to_row_span(unpivoted, p, r), std::invalid_argument);

    // a projection onto the first half does not preserve a generic graph
    Mat<Quad> graph(4, 8);
    for (int i = 0; i < 4; ++i) {
        graph(i, i) = Quad(1);
        graph(i, 4 + ((i + 1) % 4)) = Quad(1);
    }
    Mat<Quad> proj(8, 8);
    for (int i = 0; i < 4; ++i) {
        proj(i, i) = Quad(1);
    }
    Mat<Quad> r2(4, 4);
    REQUIRE_FALSE(restrict_to_row_span(graph, proj, r2));
}
