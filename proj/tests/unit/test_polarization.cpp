#include "kummer/constants.hpp"
#include "kummer/polarization.hpp"
#include "kummer/rng.hpp"

#include "kummer/frozen.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <array>

using namespace kummer;

namespace {

// expected cross block of the Gram matrix in normal form
Mat<Rat> cross_block(const Int& c, const Int& e, const Int& s) {
    Rat rc(c), re(e), rs(s);
    return Mat<Rat>{{Rat(3) * rc, Rat(3) * rs, Rat(0), Rat(0)},
                    {Rat(3) * rs, rc * re, Rat(0), Rat(0)},
                    {Rat(0), Rat(0), rc, Rat(3) * rs},
                    {Rat(0), Rat(0), Rat(3) * rs, Rat(3) * rc * re}};
}

int case_row(int div) { return div == 6 ? 3 : div - 1; }

}  // namespace

TEST_CASE("polarizing class invariants") {
    PolClass base(Int(1), Int(1), Int(0));
    REQUIRE(base.square() == 2);
    REQUIRE(base.divisibility() == 1);

    for (int div : {1, 2, 3, 6}) {
        for (int e = 1; e <= 10; ++e) {
            PolClass p = divisor_case(div, Int(e));
            REQUIRE(p.divisibility() == div);
            Int sq;
            switch (div) {
                case 1:
                    sq = 2 * e;
                    break;
                case 2:
                    sq = 2 * (4 * e - 3);
                    break;
                case 3:
                    sq = 6 * (3 * e - 1);
                    break;
                default:
                    sq = 6 * (12 * e - 1);
                    break;
            }
            REQUIRE(p.square() == sq);
        }
    }

    REQUIRE_THROWS_AS(PolClass(Int(0), Int(1), Int(1)), std::invalid_argument);
    REQUIRE_THROWS_AS(PolClass(Int(1), Int(0), Int(0)), std::invalid_argument);
    REQUIRE_THROWS_AS(PolClass(Int(2), Int(1), Int(2)), std::invalid_argument);
    REQUIRE_THROWS_AS(divisor_case(4, Int(1)), std::invalid_argument);

    // the fourfold constants agree with the computed ones
    ThetaValues tv = compute_theta(2);
    ThetaTriple th = fourfold_theta();
    REQUIRE(th.t1 == tv.theta1);
    REQUIRE(th.t2 == tv.theta2);
    REQUIRE(th.t3 == tv.theta3_signed());
    REQUIRE(th.m == Rat(1, 6));
    REQUIRE(th.satisfies_product_relation());
}

TEST_CASE("pairing table on the standard basis") {
    // two hand-checked reference classes
    Mat<Rat> g1 = gram_on_standard_basis(PolClass(Int(1), Int(1), Int(0)));
    Mat<Rat> g2 = gram_on_standard_basis(PolClass(Int(2), Int(1), Int(1)));
    Mat<Rat> m1 = cross_block(Int(1), Int(1), Int(0));
    Mat<Rat> m2 = cross_block(Int(2), Int(1), Int(1));
    REQUIRE(m1(0, 0) == Rat(3));
    REQUIRE(m1(1, 1) == Rat(1));
    REQUIRE(m2(0, 0) == Rat(6));
    REQUIRE(m2(0, 1) == Rat(3));
    REQUIRE(m2(1, 1) == Rat(2));

    Rng rng(8001);
    for (int trial = 0; trial < 12; ++trial) {
        Int c, e, s;
        if (trial == 0) {
            c = 1, e = 1, s = 0;
        } else if (trial == 1) {
            c = 2, e = 1, s = 1;
        } else {
            do {
                c = Int(rng.uniform(1, 9));
                e = Int(rng.uniform(1, 9));
                s = Int(rng.uniform(-6, 6));
            } while (int_gcd(c, s) != 1);
        }
        PolClass p(c, e, s);
        Mat<Rat> g = gram_on_standard_basis(p);
        Mat<Rat> cb = cross_block(c, e, s);
        REQUIRE((g + g.transpose()).is_zero());
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                // the two distinguished quadruples are isotropic
                REQUIRE(g(i, j) == Rat(0));
                REQUIRE(g(4 + i, 4 + j) == Rat(0));
                REQUIRE(g(i, 4 + j) == cb(i, j));
            }
        }
    }
}

TEST_CASE("elementary divisors across the four templates") {
    for (int div : {1, 2, 3, 6}) {
        for (int e = 1; e <= 10; ++e) {
            auto got = elementary_divisor_table(div, Int(e));
            auto want = stated_divisors(div, Int(e));
            const auto& fr = frozen::divisor_table[static_cast<std::size_t>(case_row(div))]
                                                  [static_cast<std::size_t>(e - 1)];
            for (int k = 0; k < 4; ++k) {
                REQUIRE(got[static_cast<std::size_t>(k)] ==
                        want[static_cast<std::size_t>(k)]);
                REQUIRE(got[static_cast<std::size_t>(k)] ==
                        Int(fr[static_cast<std::size_t>(k)]));
            }
            // divisibility chain
            REQUIRE(got[1] % got[0] == 0);
            REQUIRE(got[2] % got[1] == 0);
            REQUIRE(got[3] % got[2] == 0);
            // the squared product is the Gram determinant
            Mat<Rat> g = gram_on_standard_basis(divisor_case(div, Int(e)));
            Rat dg = det(g);
            Int prod = got[0] * got[1] * got[2] * got[3];
            REQUIRE(dg == Rat(prod * prod));
        }
    }
}

TEST_CASE("change of basis diagonalizes the pairing") {
    for (int div : {1, 2, 3, 6}) {
        for (int e = 1; e <= 10; ++e) {
            Mat<Rat> t = divisor_basis_change(div, Int(e));
            // integral and unimodular
            for (int i = 0; i < 8; ++i) {
                for (int j = 0; j < 8; ++j) {
                    REQUIRE(denominator(t(i, j)) == 1);
                }
            }
            Rat dt = det(t);
            REQUIRE((dt == 1 || dt == -1));

            Mat<Rat> g = gram_on_standard_basis(divisor_case(div, Int(e)));
            Mat<Rat> ng = t * g * t.transpose();
            auto delta = stated_divisors(div, Int(e));
            Mat<Rat> expect(8, 8);
            for (int k = 0; k < 4; ++k) {
                Rat d(delta[static_cast<std::size_t>(k)]);
                expect(k, 4 + k) = d;
                expect(4 + k, k) = -d;
            }
            REQUIRE(ng == expect);
        }
    }
}
