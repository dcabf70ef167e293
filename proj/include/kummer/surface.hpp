#pragma once

#include "kummer/ext.hpp"
#include "kummer/scalar.hpp"
#include "kummer/tensor.hpp"

#include <array>
#include <stdexcept>

namespace kummer {

// Cohomology of the abelian surface: the exterior algebra on the four
// degree 1 generators, vector side of Ext.  Ordinary degree is the mask
// popcount; the shifted degree subtracts 2.
using CohA = Ext<Rat>;

inline CohA eta(int i) {
    if (i < 1 || i > 4) {
        throw std::invalid_argument("generator index out of range");
    }
    return CohA::monomial(1u << (i - 1), false);
}

inline CohA eta_top() {
    return CohA::monomial(15u, false);
}

// Evaluation of the top-degree component against the fundamental class.
inline Rat integrate_A(const CohA& x) {
    if (x.dual) {
        throw std::invalid_argument("integration expects a vector-side class");
    }
    return x.c[15];
}

// Basis of the degree 3 part dual to the generators under the pairing
// below: the i-th class is (-1)^i times the ascending monomial omitting
// the i-th generator, so pairing against generator j gives delta_ij.
inline CohA w_class(int i) {
    if (i < 1 || i > 4) {
        throw std::invalid_argument("generator index out of range");
    }
    CohA w = CohA::monomial(15u & ~(1u << (i - 1)), false);
    return (i % 2) ? -w : w;
}

// Pairing of a degree 3 class against a degree 1 class by integrating the
// cup product.
inline Rat duality_31(const CohA& alpha, const CohA& beta) {
    if (!alpha.is_homogeneous(3) || !beta.is_homogeneous(1)) {
        throw std::invalid_argument("pairing expects degrees 3 and 1");
    }
    return integrate_A(wedge(alpha, beta));
}

// Coordinates of a degree 3 class in the w basis.
inline std::array<Rat, 4> h3_coords(const CohA& alpha) {
    std::array<Rat, 4> a;
    for (int i = 1; i <= 4; ++i) {
        a[i - 1] = duality_31(alpha, eta(i));
    }
    return a;
}

inline CohA from_h3_coords(const std::array<Rat, 4>& a) {
    CohA out(false);
    for (int i = 1; i <= 4; ++i) {
        out += a[i - 1] * w_class(i);
    }
    return out;
}

// Exterior square of the degree 3 part, written on the w basis: a second
// rank-4 exterior algebra whose generator i stands for the i-th w class.
// The wedge of two degree 3 classes lands in degree 2 of that algebra.
inline Ext<Rat> wedge2_h3(const CohA& alpha, const CohA& beta) {
    auto a = h3_coords(alpha);
    auto b = h3_coords(beta);
    Ext<Rat> xa(false), xb(false);
    for (int i = 0; i < 4; ++i) {
        xa.c[1u << i] = a[i];
        xb.c[1u << i] = b[i];
    }
    return wedge(xa, xb);
}

// Transport of a two-form in the w coordinates to a degree 2 surface
// class: on basis pairs i0 < j0 with ascending complement h0 < k0 it
// sends the wedge of w_{i0}, w_{j0} to -(-1)^{i0+j0} times the monomial
// on {h0, k0}; the signs coincide with the signed complement table, which
// is applied after retagging.
inline CohA surface_iota_inv(const Ext<Rat>& u) {
    if (u.dual) {
        throw std::invalid_argument("expected w-coordinate input on the vector side");
    }
    Ext<Rat> tagged(true);
    tagged.c = u.c;
    return iota(tagged);
}

inline Ext<Rat> surface_iota(const CohA& gamma) {
    Ext<Rat> d = iota_inv(gamma);
    Ext<Rat> out(false);
    out.c = d.c;
    return out;
}

// Tensor with a surface class in one slot and units elsewhere.
inline TensorHA p_star_tensor(int m, int slot, const CohA& x) {
    if (x.dual) {
        throw std::invalid_argument("expected a vector-side class");
    }
    if (slot < 0 || slot >= m) {
        throw std::invalid_argument("slot out of range");
    }
    TensorHA t(m);
    for (unsigned mask = 0; mask < 16; ++mask) {
        if (x.c[mask] != 0) {
            t.add_term(static_cast<std::uint32_t>(mask) << (4 * slot), x.c[mask]);
        }
    }
    return t;
}

}  // namespace kummer
