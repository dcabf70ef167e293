#include "kummer/constants.hpp"
#include "kummer/hodge.hpp"
#include "kummer/rng.hpp"

#include "kummer/frozen.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <vector>

using namespace kummer;

namespace {

ThetaTriple triple_n2() { return ThetaTriple(Rat(-1), Rat(-3), Rat(-3), Rat(1, 6)); }
ThetaTriple triple_n3() {
    return ThetaTriple(Rat(-72), Rat(-288), Rat(-288), Rat(1, 8));
}

Quad imag() { return Quad::sqrt_of(Rat(-1)); }

template <class K>
H3Element<K> elem(std::array<int, 8> v) {
    H3Element<K> r;
    for (std::size_t i = 0; i < 8; ++i) {
        r[i] = K(v[i]);
    }
    return r;
}

Rat rnd_rat(Rng& rng) { return Rat(rng.uniform(-5, 5)); }

template <class K>
Mat<K> random_invertible4(Rng& rng) {
    for (;;) {
        Mat<K> m(4, 4);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                m(i, j) = K(Rat(rng.uniform(-3, 3)));
            }
        }
        if (rank_of(m) == 4) {
            return m;
        }
    }
}

// graph basis rows (e_j | column j of x)
template <class K>
Mat<K> graph_basis(const Mat<K>& x) {
    Mat<K> b(4, 8);
    for (int j = 0; j < 4; ++j) {
        b(j, j) = K(1);
        for (int i = 0; i < 4; ++i) {
            b(j, 4 + i) = x(i, j);
        }
    }
    return b;
}

// skew matrix with prescribed pfaffian, the remaining entries random
Mat<Rat> random_skew_with_pf(Rng& rng, const Rat& pf) {
    for (;;) {
        Rat x12 = rnd_rat(rng);
        if (x12 == 0) {
            continue;
        }
        Rat x13 = rnd_rat(rng), x14 = rnd_rat(rng);
        Rat x23 = rnd_rat(rng), x24 = rnd_rat(rng);
        Rat x34 = (pf + x13 * x24 - x14 * x23) / x12;
        Mat<Rat> m{{Rat(0), x12, x13, x14},
                   {-x12, Rat(0), x23, x24},
                   {-x13, -x23, Rat(0), x34},
                   {-x14, -x24, -x34, Rat(0)}};
        return m;
    }
}

// period sample constrained to be orthogonal to the polarization class
// with covector form e12* + e34* and no zeta part
PeriodPoint<Quad> orthogonal_period(const ThetaTriple& th, Rng& rng) {
    for (int attempt = 0; attempt < 2000; ++attempt) {
        Quad c12 = random_gauss(rng, 4);
        Quad c13 = random_gauss(rng, 4);
        Quad c14 = random_gauss(rng, 4);
        Quad c23 = random_gauss(rng, 4);
        Quad zeta = random_gauss(rng, 4);
        Quad c34 = -c12;  // orthogonality against e12* + e34*
        if (c13.is_zero() || zeta.is_zero()) {
            continue;
        }
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
    throw std::logic_error("failed to sample an orthogonal period");
}

}  // namespace

TEST_CASE("ansatz map on decomposable pairs") {
    ThetaTriple th = triple_n2();

    // purely covector wedge lands on the duality image
    auto p1 = phi_theta(th, elem<Rat>({0, 0, 0, 0, 1, 0, 0, 0}),
                        elem<Rat>({0, 0, 0, 0, 0, 1, 0, 0}));
    REQUIRE(p1.two_form.c[0b1100] == Rat(-3));
    REQUIRE(p1.two_form.is_homogeneous(2));
    REQUIRE(p1.zeta == Rat(0));

    // purely vector wedge scales by the first constant
    auto p2 = phi_theta(th, elem<Rat>({1, 0, 0, 0, 0, 0, 0, 0}),
                        elem<Rat>({0, 1, 0, 0, 0, 0, 0, 0}));
    REQUIRE(p2.two_form.c[0b0011] == Rat(-1));
    REQUIRE(p2.zeta == Rat(0));

    // the cross pair lands on the zeta line with the third constant
    auto p3 = phi_theta(th, elem<Rat>({1, 0, 0, 0, 0, 0, 0, 0}),
                        elem<Rat>({0, 0, 0, 0, 1, 0, 0, 0}));
    REQUIRE(p3.two_form.is_zero());
    REQUIRE(p3.zeta == Rat(3));  // -t3

    // antisymmetry
    Rng rng(7001);
    for (int trial = 0; trial < 20; ++trial) {
        H3Element<Rat> x, y;
        for (int i = 0; i < 8; ++i) {
            x[static_cast<std::size_t>(i)] = rnd_rat(rng);
            y[static_cast<std::size_t>(i)] = rnd_rat(rng);
        }
        auto pxy = phi_theta(th, x, y);
        auto pyx = phi_theta(th, y, x);
        REQUIRE(pxy.two_form == -pyx.two_form);
        REQUIRE(pxy.zeta == -pyx.zeta);
    }
}

TEST_CASE("hyperbolic pairing and the image rank table") {
    ThetaTriple th2 = triple_n2();
    ThetaTriple th3 = triple_n3();

    REQUIRE(h3_square(elem<Rat>({1, 0, 0, 0, 1, 0, 0, 0})) == Rat(2));
    REQUIRE(h3_square(elem<Rat>({1, 0, 0, 0, 0, 0, 0, 0})) == Rat(0));
    REQUIRE(h3_pairing(elem<Rat>({1, 0, 0, 0, 0, 0, 0, 0}),
                       elem<Rat>({0, 0, 0, 0, 1, 0, 0, 0})) == Rat(1));

    // zero class
    REQUIRE(phi_line_rank(th2, elem<Rat>({0, 0, 0, 0, 0, 0, 0, 0})) == 0);
    // isotropic classes
    REQUIRE(phi_line_rank(th2, elem<Rat>({1, 0, 0, 0, 0, 0, 0, 0})) == 4);
    REQUIRE(phi_line_rank(th2, elem<Rat>({0, 0, 0, 0, 0, 0, 1, 0})) == 4);
    REQUIRE(phi_line_rank(th2, elem<Rat>({1, 0, 0, 0, 0, 1, 0, 0})) == 4);
    // anisotropic classes
    REQUIRE(phi_line_rank(th2, elem<Rat>({1, 0, 0, 0, 1, 0, 0, 0})) == 7);
    REQUIRE(phi_line_rank(th2, elem<Rat>({1, 1, 0, 0, 1, 0, -1, 0})) == 7);

    // randomized agreement with the square
    Rng rng(7002);
    for (int trial = 0; trial < 60; ++trial) {
        const ThetaTriple& th = (trial % 2 == 0) ? th2 : th3;
        H3Element<Rat> g;
        bool zero = true;
        for (int i = 0; i < 8; ++i) {
            g[static_cast<std::size_t>(i)] = Rat(rng.uniform(-3, 3));
            zero = zero && g[static_cast<std::size_t>(i)] == 0;
        }
        int expect = zero ? 0 : (h3_square(g) == 0 ? 4 : 7);
        REQUIRE(phi_line_rank(th, g) == expect);
    }
}

TEST_CASE("subspace classification on structured examples") {
    ThetaTriple th = triple_n2();

    // graph with the matched pfaffian 1/3
    Mat<Rat> x{{Rat(0), Rat(1), Rat(0), Rat(0)},
               {Rat(-1), Rat(0), Rat(0), Rat(0)},
               {Rat(0), Rat(0), Rat(0), Rat(1, 3)},
               {Rat(0), Rat(0), Rat(-1, 3), Rat(0)}};
    auto cls = classify_subspace(th, graph_basis(x));
    REQUIRE(cls.kind == SubspaceKind::GraphCase);
    REQUIRE(cls.graph_map == x);
    REQUIRE(phi_wedge_rank(th, graph_basis(x)) == 1);

    // graph with the wrong pfaffian
    Mat<Rat> y{{Rat(0), Rat(1), Rat(0), Rat(0)},
               {Rat(-1), Rat(0), Rat(0), Rat(0)},
               {Rat(0), Rat(0), Rat(0), Rat(1)},
               {Rat(0), Rat(0), Rat(-1), Rat(0)}};
    REQUIRE(classify_subspace(th, graph_basis(y)).kind == SubspaceKind::NotOneDim);
    REQUIRE(phi_wedge_rank(th, graph_basis(y)) != 1);

    // graph of a non-skew map
    REQUIRE(classify_subspace(th, graph_basis(Mat<Rat>::identity(4))).kind ==
            SubspaceKind::NotOneDim);

    // U + Ann(U) for the coordinate plane
    Mat<Rat> split(4, 8);
    split(0, 0) = Rat(1);
    split(1, 1) = Rat(1);
    split(2, 4 + 2) = Rat(1);
    split(3, 4 + 3) = Rat(1);
    auto scls = classify_subspace(th, split);
    REQUIRE(scls.kind == SubspaceKind::SplitCase);
    REQUIRE(scls.split_u(0, 0) == Rat(1));
    REQUIRE(scls.split_u(1, 1) == Rat(1));
    REQUIRE(phi_wedge_rank(th, split) == 1);

    // U + W with W not the annihilator
    Mat<Rat> bad(4, 8);
    bad(0, 0) = Rat(1);
    bad(1, 1) = Rat(1);
    bad(2, 4 + 0) = Rat(1);
    bad(3, 4 + 3) = Rat(1);
    REQUIRE(classify_subspace(th, bad).kind == SubspaceKind::NotOneDim);

    // dimension guards
    Mat<Rat> degenerate(4, 8);
    degenerate(0, 0) = Rat(1);
    degenerate(1, 0) = Rat(1);
    degenerate(2, 1) = Rat(1);
    degenerate(3, 2) = Rat(1);
    REQUIRE_THROWS_AS(classify_subspace(th, degenerate), std::invalid_argument);
    REQUIRE_THROWS_AS(classify_subspace(th, Mat<Rat>(3, 8)), std::invalid_argument);
}

TEST_CASE("classification agrees with the image rank on random subspaces") {
    Rng rng(7003);
    for (int trial = 0; trial < 40; ++trial) {
        ThetaTriple th = (trial % 2 == 0) ? triple_n2() : triple_n3();
        Rat pf = th.t1 / th.t2;
        Mat<Rat> mix = random_invertible4<Rat>(rng);

        // matched graph, mixed basis: same canonical graph map
        Mat<Rat> x = random_skew_with_pf(rng, pf);
        Mat<Rat> basis = mix * graph_basis(x);
        auto cls = classify_subspace(th, basis);
        REQUIRE(cls.kind == SubspaceKind::GraphCase);
        REQUIRE(cls.graph_map == x);
        REQUIRE(phi_wedge_rank(th, basis) == 1);

        // graph with a perturbed pfaffian
        Mat<Rat> xoff = random_skew_with_pf(rng, pf + Rat(1));
        Mat<Rat> boff = mix * graph_basis(xoff);
        REQUIRE(classify_subspace(th, boff).kind == SubspaceKind::NotOneDim);
        REQUIRE(phi_wedge_rank(th, boff) != 1);

        // split subspace from a random plane
        Mat<Rat> u(2, 4);
        do {
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 4; ++j) {
                    u(i, j) = rnd_rat(rng);
                }
            }
        } while (rank_of(u) != 2);
        Mat<Rat> ann = kernel(u);
        Mat<Rat> sb(4, 8);
        for (int j = 0; j < 4; ++j) {
            sb(0, j) = u(0, j);
            sb(1, j) = u(1, j);
            sb(2, 4 + j) = ann(j, 0);
            sb(3, 4 + j) = ann(j, 1);
        }
        sb = mix * sb;
        auto scls = classify_subspace(th, sb);
        REQUIRE(scls.kind == SubspaceKind::SplitCase);
        Mat<Rat> ucan = u;
        rref(ucan);
        REQUIRE(scls.split_u == ucan);
        REQUIRE(phi_wedge_rank(th, sb) == 1);

        // generic subspace
        Mat<Rat> gen(4, 8);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 8; ++j) {
                gen(i, j) = rnd_rat(rng);
            }
        }
        if (rank_of(gen) == 4) {
            auto gcls = classify_subspace(th, gen);
            REQUIRE((gcls.kind != SubspaceKind::NotOneDim) ==
                    (phi_wedge_rank(th, gen) == 1));
        }
    }
}

TEST_CASE("weight one structure from a graph period") {
    ThetaTriple th = triple_n2();
    Quad i = imag();

    // alpha = v12 + 4/3 v34 + i v13 - i v24 satisfies the quadric with
    // zeta = 6 after scaling by the second constant
    Ext<Quad> alpha(false);
    alpha.c[0b0011] = Quad(1);
    alpha.c[0b1100] = Quad(Rat(4, 3));
    alpha.c[0b0101] = i;
    alpha.c[0b1010] = -i;
    PeriodPoint<Quad> sigma(Quad(-3) * alpha, Quad(6));

    REQUIRE(period_pairing(th, sigma, sigma).is_zero());
    REQUIRE(period_pairing(th, sigma, period_conj(sigma)) == Quad(36));
    REQUIRE(period_in_domain(th, sigma));

    WeightOneHS hs = hodge_from_period(th, sigma);
    Mat<Quad> x{{Quad(0), Quad(Rat(4, 3)), i, Quad(0)},
                {Quad(Rat(-4, 3)), Quad(0), Quad(0), -i},
                {-i, Quad(0), Quad(0), Quad(1)},
                {Quad(0), i, Quad(-1), Quad(0)}};
    REQUIRE(pfaffian(x) == Quad(Rat(1, 3)));
    REQUIRE(hs.basis == graph_basis(x));

    auto cls = classify_subspace(th, hs.basis);
    REQUIRE(cls.kind == SubspaceKind::GraphCase);
    REQUIRE(cls.graph_map == x);

    // domain rejections
    Ext<Quad> real_alpha(false);
    real_alpha.c[0b0011] = Quad(1);
    real_alpha.c[0b1100] = Quad(3);
    PeriodPoint<Quad> on_wall(Quad(-3) * real_alpha, Quad(18));
    REQUIRE(period_pairing(th, on_wall, on_wall).is_zero());
    REQUIRE_FALSE(period_in_domain(th, on_wall));
    REQUIRE_THROWS_AS(hodge_from_period(th, on_wall), std::invalid_argument);

    PeriodPoint<Quad> off_quadric(Quad(-3) * alpha, Quad(5));
    REQUIRE_THROWS_AS(hodge_from_period(th, off_quadric), std::invalid_argument);

    ThetaTriple broken(Rat(-1), Rat(-3), Rat(5), Rat(1, 6));
    REQUIRE_THROWS_AS(hodge_from_period(broken, sigma), std::invalid_argument);
}

TEST_CASE("weight one structure from a split period") {
    ThetaTriple th = triple_n2();
    Quad i = imag();

    // omega spans U = <v1 + i v2, v3 + i v4>
    Ext<Quad> a(false);
    a.c[0b0001] = Quad(1);
    a.c[0b0010] = i;
    Ext<Quad> b(false);
    b.c[0b0100] = Quad(1);
    b.c[0b1000] = i;
    PeriodPoint<Quad> sigma(wedge(a, b), Quad(0));

    REQUIRE(period_in_domain(th, sigma));
    WeightOneHS hs = hodge_from_period(th, sigma);

    Mat<Quad> expect(4, 8);
    expect(0, 0) = Quad(1);
    expect(0, 1) = i;
    expect(1, 2) = Quad(1);
    expect(1, 3) = i;
    expect(2, 4) = Quad(1);
    expect(2, 5) = i;
    expect(3, 6) = Quad(1);
    expect(3, 7) = i;
    REQUIRE(hs.basis == expect);

    auto cls = classify_subspace(th, hs.basis);
    REQUIRE(cls.kind == SubspaceKind::SplitCase);
    REQUIRE(cls.split_u(0, 1) == i);
    REQUIRE(cls.split_u(1, 3) == i);
}

TEST_CASE("weight one structures from sampled periods") {
    Rng rng(7004);
    for (const auto& th : {triple_n2(), triple_n3()}) {
        for (int trial = 0; trial < 8; ++trial) {
            PeriodPoint<Quad> s = random_period(th, rng);
            WeightOneHS hs = hodge_from_period(th, s);
            REQUIRE(phi_wedge_rank(th, hs.basis) == 1);
            REQUIRE(classify_subspace(th, hs.basis).kind == SubspaceKind::GraphCase);

            PeriodPoint<Quad> sp = random_split_period(th, rng);
            WeightOneHS hsp = hodge_from_period(th, sp);
            REQUIRE(phi_wedge_rank(th, hsp.basis) == 1);
            REQUIRE(classify_subspace(th, hsp.basis).kind == SubspaceKind::SplitCase);
        }
    }
    // determinism of the samplers
    Rng r1(99);
    Rng r2(99);
    ThetaTriple th = triple_n2();
    PeriodPoint<Quad> s1 = random_period(th, r1);
    PeriodPoint<Quad> s2 = random_period(th, r2);
    REQUIRE(s1.omega == s2.omega);
    REQUIRE(s1.zeta == s2.zeta);
}

TEST_CASE("polarization pairing orientation") {
    ThetaTriple th = triple_n2();
    // h = c (e e12* + e34*) + s zeta-dual
    Rat c(1), e(2), s(1);
    Ext<Rat> hf(true);
    hf.c[0b0011] = c * e;
    hf.c[0b1100] = c;
    PolarizationClass h(hf, s);

    // (0, v1*) against (0, -v2*): second constant through the duality
    auto a1 = elem<Rat>({0, 0, 0, 0, 1, 0, 0, 0});
    auto b1 = elem<Rat>({0, 0, 0, 0, 0, -1, 0, 0});
    REQUIRE(polarization_pairing(th, h, a1, b1) == Rat(3) * c);

    // (0, v1*) against (v1, 0): the divisor orientation flips the zeta sign
    auto b2 = elem<Rat>({1, 0, 0, 0, 0, 0, 0, 0});
    REQUIRE(polarization_pairing(th, h, a1, b2) == Rat(3) * s);

    // zeta orientation guard
    PhiImage<Rat> p = phi_theta(th, a1, b2);
    REQUIRE_THROWS_AS(dual_pairing(h, p, 2), std::invalid_argument);
    REQUIRE(dual_pairing(h, p, 1) == Rat(-3) * s);
}

TEST_CASE("polarization square") {
    Ext<Rat> hf(true);
    hf.c[0b0011] = Rat(2);  // c e with c = 1, e = 2
    hf.c[0b1100] = Rat(1);
    REQUIRE(polarization_square(PolarizationClass(hf, Rat(0)), Rat(1, 6)) == Rat(4));
    REQUIRE(polarization_square(PolarizationClass(hf, Rat(1)), Rat(1, 6)) ==
            Rat(4) - Rat(6));
}

TEST_CASE("positivity of the hermitian pairing") {
    ThetaTriple th = triple_n2();
    Quad i = imag();
    Ext<Rat> hf(true);
    hf.c[0b0011] = Rat(1);
    hf.c[0b1100] = Rat(1);
    PolarizationClass h(hf, Rat(0));

    // deterministic split example: U = <v1 + i v2, v3 + i v4>
    Ext<Quad> a(false);
    a.c[0b0001] = Quad(1);
    a.c[0b0010] = i;
    Ext<Quad> b(false);
    b.c[0b0100] = Quad(1);
    b.c[0b1000] = i;
    PeriodPoint<Quad> sigma(wedge(a, b), Quad(0));
    REQUIRE(polarization_on_period(h, sigma).is_zero());
    REQUIRE(positivity_check(th, h, sigma) == -1);
    REQUIRE(positivity_check(th, h, period_conj(sigma)) == 1);

    // the hermitian gram matrix is hermitian and definite of the same sign
    for (const PeriodPoint<Quad>& s : {sigma, period_conj(sigma)}) {
        int sign = positivity_check(th, h, s);
        Mat<Quad> g = hermitian_gram(th, h, hodge_from_period(th, s));
        REQUIRE(g == g.conj_transpose());
        for (int k = 1; k <= 4; ++k) {
            Mat<Quad> lead(k, k);
            for (int r = 0; r < k; ++r) {
                for (int c = 0; c < k; ++c) {
                    lead(r, c) = g(r, c);
                }
            }
            Quad d = det(lead);
            REQUIRE(d.is_rational());
            int expect_sign = 1;
            for (int t = 0; t < k; ++t) {
                expect_sign *= sign;
            }
            REQUIRE(sgn(d.rational()) == expect_sign);
        }
    }

    // sampled graph periods orthogonal to the class
    Rng rng(7005);
    for (int trial = 0; trial < 6; ++trial) {
        PeriodPoint<Quad> s = orthogonal_period(th, rng);
        int sign = positivity_check(th, h, s);
        REQUIRE((sign == 1 || sign == -1));
        REQUIRE(positivity_check(th, h, period_conj(s)) == -sign);
    }

    // precondition failures
    Ext<Quad> alpha(false);
    alpha.c[0b0011] = Quad(1);
    alpha.c[0b1100] = Quad(Rat(4, 3));
    alpha.c[0b0101] = i;
    alpha.c[0b1010] = -i;
    PeriodPoint<Quad> nonorth(Quad(-3) * alpha, Quad(6));
    REQUIRE_THROWS_AS(positivity_check(th, h, nonorth), std::invalid_argument);

    Ext<Rat> small(true);
    small.c[0b0011] = Rat(1);
    PolarizationClass bad(small, Rat(1));  // square 0 - 6 < 0
    REQUIRE_THROWS_AS(positivity_check(th, bad, sigma), std::invalid_argument);
}

TEST_CASE("even spinor quadratic form and the distinguished translate") {
    Ext<Rat> two(false);
    two.c[0b0011] = Rat(1);
    two.c[0b1100] = Rat(1);
    REQUIRE(q_plus(EvenSpinor<Rat>(Rat(0), two, Rat(0))) == Rat(2));
    REQUIRE(q_plus(EvenSpinor<Rat>(Rat(1), Ext<Rat>(false), Rat(1))) == Rat(-2));
    Ext<Rat> dec(false);
    dec.c[0b0011] = Rat(1);
    REQUIRE(q_plus(EvenSpinor<Rat>(Rat(1), dec, Rat(0))) == Rat(0));

    REQUIRE(t_plus_membership(2, EvenSpinor<Rat>(Rat(1), two, Rat(3))));
    REQUIRE_FALSE(t_plus_membership(2, EvenSpinor<Rat>(Rat(1), two, Rat(2))));
    REQUIRE(t_plus_membership(3, EvenSpinor<Rat>(Rat(1), two, Rat(4))));
}

TEST_CASE("spinor embedding") {
    // the zeta-only class lands on (1/6, 0, 1/2) with square -1/6
    EvenSpinor<Rat> x = embed_i(2, Ext<Rat>(false), Rat(1), 0);
    REQUIRE(x.scalar == Rat(1, 6));
    REQUIRE(x.top == Rat(1, 2));
    REQUIRE(q_plus(x) == Rat(-1, 6));
    REQUIRE(t_plus_membership(2, x));

    // twisted variant flips both ends
    EvenSpinor<Rat> xt = embed_i(2, Ext<Rat>(false), Rat(1), 1);
    REQUIRE(xt.scalar == Rat(-1, 6));
    REQUIRE(xt.top == Rat(-1, 2));
    REQUIRE(q_plus(xt) == Rat(-1, 6));
    REQUIRE(t_plus_membership(2, xt));

    // the pullback of the even form is the dual quadratic form
    Rng rng(7006);
    for (int n : {2, 3}) {
        Rat m(1, 2 * (n + 1));
        for (int trial = 0; trial < 10; ++trial) {
            Ext<Rat> eta_part(false);
            for (unsigned mask = 0; mask < 16; ++mask) {
                if (std::popcount(mask) == 2) {
                    eta_part.c[mask] = rnd_rat(rng);
                }
            }
            Rat zc = rnd_rat(rng);
            for (int eps : {0, 1}) {
                EvenSpinor<Rat> y = embed_i(n, eta_part, zc, eps);
                REQUIRE(q_plus(y) ==
                        wedge(eta_part, eta_part).c[15] - m * zc * zc);
                REQUIRE(t_plus_membership(n, y));
            }
        }
    }
}

TEST_CASE("spinor annihilators are graphs on the frozen samples") {
    for (const auto& row : frozen::spinor_rows) {
        Rat a(row.a_num, row.a_den);
        Rat t(row.t_num, row.t_den);
        Ext<Rat> two(false);
        two.c[0b0011] = Rat(1);
        two.c[0b1100] = t;
        EvenSpinor<Rat> x(a, two, t / a);
        REQUIRE(q_plus(x) == Rat(0));

        ZSubspace<Rat> z = z_subspace(x);
        Mat<Rat> g(4, 4);
        REQUIRE(try_graph_map(z.basis, g));
        REQUIRE((g + g.transpose()).is_zero());
        REQUIRE(g(0, 1) == -a);
        REQUIRE(g(2, 3) == -a / t);
        REQUIRE(g(0, 2) == Rat(0));
        REQUIRE(g(0, 3) == Rat(0));
        REQUIRE(g(1, 2) == Rat(0));
        REQUIRE(g(1, 3) == Rat(0));
        REQUIRE(pfaffian(g) == Rat(row.pf_num, row.pf_den));

        // direct re-check of the annihilator equations and isotropy
        for (int r = 0; r < 4; ++r) {
            Ext<Rat> v(false);
            Ext<Rat> ell(true);
            for (int k = 0; k < 4; ++k) {
                v.c[1u << k] = z.basis(r, k);
                ell.c[1u << k] = z.basis(r, 4 + k);
            }
            Ext<Rat> deg1 = x.scalar * v + contract(ell, x.two);
            REQUIRE(deg1.is_zero());
            Ext<Rat> deg3 =
                wedge(v, x.two) + contract(ell, x.top * Ext<Rat>::monomial(15u));
            REQUIRE(deg3.is_zero());
            for (int r2 = 0; r2 < 4; ++r2) {
                REQUIRE(h3_pairing(h3_row(z.basis, r), h3_row(z.basis, r2)) ==
                        Rat(0));
            }
        }
    }

    // guards
    Ext<Rat> two(false);
    two.c[0b0011] = Rat(1);
    two.c[0b1100] = Rat(1);
    REQUIRE_THROWS_AS(z_subspace(EvenSpinor<Rat>(Rat(0), two, Rat(0))),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(z_subspace(EvenSpinor<Rat>(Rat(0), Ext<Rat>(false), Rat(0))),
                      std::invalid_argument);
}

TEST_CASE("embedding twist matches the period graph") {
    for (int n : {2, 3}) {
        ThetaValues tv = compute_theta(n);
        Rat t3 = tv.theta3_signed();
        Rat p(2);
        Rat q = tv.theta1 / (tv.theta2 * p);
        Mat<Rat> m{{Rat(0), p, Rat(0), Rat(0)},
                   {-p, Rat(0), Rat(0), Rat(0)},
                   {Rat(0), Rat(0), Rat(0), q},
                   {Rat(0), Rat(0), -q, Rat(0)}};
        // eta carries the duality image of the graph form, scaled by the
        // second constant; the zeta coordinate is -2 t3
        Ext<Rat> omega_f(true);
        omega_f.c[0b0011] = p;
        omega_f.c[0b1100] = q;
        Ext<Rat> eta_part = tv.theta2 * iota(omega_f);
        Rat zc = Rat(-2) * t3;

        EvenSpinor<Rat> straight = embed_i(n, eta_part, zc, 0);
        REQUIRE(q_plus(straight) == Rat(0));
        ZSubspace<Rat> z0 = z_subspace(straight);
        REQUIRE(z0.basis == graph_basis(m));

        // the twisted embedding lands on the opposite graph
        EvenSpinor<Rat> twisted = embed_i(n, eta_part, zc, 1);
        REQUIRE(q_plus(twisted) == Rat(0));
        ZSubspace<Rat> z1 = z_subspace(twisted);
        REQUIRE(z1.basis != graph_basis(m));
        REQUIRE(z1.basis == graph_basis(-m));
    }
}

TEST_CASE("ansatz constants validation") {
    REQUIRE_THROWS_AS(ThetaTriple(Rat(0), Rat(1), Rat(1), Rat(1)),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(ThetaTriple(Rat(1), Rat(1), Rat(1), Rat(0)),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(ThetaTriple(Rat(1), Rat(1), Rat(1), Rat(-1)),
                      std::invalid_argument);
    REQUIRE(triple_n2().satisfies_product_relation());
    REQUIRE(triple_n3().satisfies_product_relation());
    REQUIRE_FALSE(ThetaTriple(Rat(1), Rat(1), Rat(1), Rat(1)).satisfies_product_relation());
}
