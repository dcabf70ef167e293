#pragma once

// Expected values for the test suites, frozen from the independent
// reference computations under tools/oracles/ (outputs kept in
// tools/oracles/out/).  Everything here was produced without running
// any code from include/, so these constants are usable as oracles.

#include <array>
#include <cstdint>

namespace kummer::frozen {

// Signed involution mapping a dual basis 2-form to a primal 2-vector on the
// complementary index pair.  Masks use bit i for basis index i+1.
struct IotaEntry {
    unsigned mask;
    unsigned image;
    int sign;
};
inline constexpr std::array<IotaEntry, 6> iota_table{{
    {0b0011u, 0b1100u, +1},
    {0b0101u, 0b1010u, -1},
    {0b0110u, 0b1001u, +1},
    {0b1001u, 0b0110u, +1},
    {0b1010u, 0b0101u, -1},
    {0b1100u, 0b0011u, +1},
}};

// Theta triples: first two entries exact, third stored as |theta3|.
// For n = 2 the resolved sign is negative (odd mu-nu-xi integral).
struct ThetaRow {
    int n;
    long long t1;
    long long t2;
    long long t3_abs;
};
inline constexpr std::array<ThetaRow, 4> theta_rows{{
    {2, -1, -3, 3},
    {3, -72, -288, 288},
    {4, -9900, -49500, 49500},
    {5, -2223936, -13343616, 13343616},
}};
inline constexpr long long theta3_signed_n2 = -3;
inline constexpr int ansatz_theta3_sign_n2 = -1;

// Integrals of sigma^i xi^(2n-2i) over the 2n-fold, i = 0..n.
inline constexpr std::array<long long, 3> sigma_xi_n2{324, -54, 36};
inline constexpr std::array<long long, 4> sigma_xi_n3{-30720, 2304, -384, 240};

// Integrals of qdual^l gamma^(2n-2l), gamma = xi (square -2(n+1)).
inline constexpr std::array<long long, 3> qdual_xi_n2{324, -162, 189};
inline constexpr std::array<long long, 4> qdual_xi_n3{-30720, 8448, -3168, 2772};
// Same with a polarization class gamma of square 2 orthogonal to xi.
inline constexpr std::array<long long, 3> qdual_g2_n2{36, 54, 189};
inline constexpr std::array<long long, 4> qdual_g2_n3{480, 528, 792, 2772};

// Coefficient pairs (C, D) of the two-unknown linear systems; D = 0 always.
// C is stored as numerator/denominator.
struct CdRow {
    int n;
    int which;
    long long c_num;
    long long c_den;
};
inline constexpr std::array<CdRow, 6> cd_rows{{
    {3, 1, -1, 44},
    {3, 2, -4, 11},
    {4, 1, -1, 65},
    {4, 2, -4, 13},
    {5, 1, -1, 90},
    {5, 2, -4, 15},
}};

// Odd-part spot values for the sample data
//   alpha = eta1 eta2 eta4, alpha' = eta1 eta2 eta3,
//   beta = eta1, beta' = eta2, gamma = eta12 + eta34,
// so that the bridged pairing integral is -1 for the degree 3 pair,
// +1 for the degree 1 pair, and the gamma square is 2.
// The degree 3 odd classes enter unhalved (nu3, not nu3/2).
inline constexpr long long mu3mu3_mu_n2 = 1;
inline constexpr long long mu3mu3_mu_n3 = 6;
inline constexpr long long mu3mu3_mu_xi2_n3 = -8;
inline constexpr long long nu3nu3_mu_n2 = -12;
inline constexpr long long nu3nu3_mu_n3 = -96;
inline constexpr long long nu3nu3_mu_xi2_n3 = 128;

// Top self-intersection samples: (n, square, value).
struct FujikiRow {
    int n;
    long long q;
    long long value;
};
inline constexpr std::array<FujikiRow, 3> fujiki_rows{{
    {2, 2, 36},
    {2, -6, 324},
    {3, -8, -30720},
}};
// Mixed polarized sample, n = 2: integral of g^2 d^2 with
// (g,g) = (d,d) = 2, (g,d) = 0 -> 3[(g,g)(d,d) + 2(g,d)^2] = 12.
inline constexpr long long mixed_quad_n2 = 12;

// Double-factorial sum identity samples: closed-form right hand sides.
inline constexpr long long identity_sample_011 = 3;     // (k,l,n) = (0,1,1)
inline constexpr long long identity_sample_234 = 1287;  // (k,l,n) = (2,3,4)

// Elementary divisor quadruples, rows indexed by case 1..4, columns e = 1..10.
inline constexpr std::array<std::array<std::array<long long, 4>, 10>, 4>
    divisor_table{{
        {{{1, 1, 3, 3},
          {1, 1, 6, 6},
          {1, 3, 3, 9},
          {1, 1, 12, 12},
          {1, 1, 15, 15},
          {1, 3, 6, 18},
          {1, 1, 21, 21},
          {1, 1, 24, 24},
          {1, 3, 9, 27},
          {1, 1, 30, 30}}},
        {{{1, 1, 3, 3},
          {1, 1, 15, 15},
          {1, 3, 9, 27},
          {1, 1, 39, 39},
          {1, 1, 51, 51},
          {1, 3, 21, 63},
          {1, 1, 75, 75},
          {1, 1, 87, 87},
          {1, 3, 33, 99},
          {1, 1, 111, 111}}},
        {{{3, 3, 6, 6},
          {3, 3, 15, 15},
          {3, 3, 24, 24},
          {3, 3, 33, 33},
          {3, 3, 42, 42},
          {3, 3, 51, 51},
          {3, 3, 60, 60},
          {3, 3, 69, 69},
          {3, 3, 78, 78},
          {3, 3, 87, 87}}},
        {{{3, 3, 33, 33},
          {3, 3, 69, 69},
          {3, 3, 105, 105},
          {3, 3, 141, 141},
          {3, 3, 177, 177},
          {3, 3, 213, 213},
          {3, 3, 249, 249},
          {3, 3, 285, 285},
          {3, 3, 321, 321},
          {3, 3, 357, 357}}},
    }};

// Annihilator-kernel samples: eta = a v1^v2 + t v3^v4 gives the graph of a
// skew map with omega = -a e12* - (a/t) e34* and Pfaffian a^2/t.
struct SpinorRow {
    long long a_num, a_den;
    long long t_num, t_den;
    long long pf_num, pf_den;
};
inline constexpr std::array<SpinorRow, 3> spinor_rows{{
    {1, 1, 1, 1, 1, 1},
    {1, 1, 3, 1, 1, 3},
    {2, 1, -5, 2, -8, 5},
}};

// Rank-one worked example of the order-3 symmetry.
inline constexpr long long example_N_num = 1, example_N_den = 3;
inline constexpr long long example_b = 0;
inline constexpr long long example_D_num = 1, example_D_den = 3;
inline constexpr long long example_lattice_index = 16;

// Spinor embedding twist that matches the graph kernel (n = 2 and 3).
inline constexpr int embed_epsilon = 0;

}  // namespace kummer::frozen
