#pragma once

#include "kummer/perm.hpp"
#include "kummer/scalar.hpp"
#include "kummer/surface.hpp"
#include "kummer/tensor.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kummer {

// Element of the smash product ring: for each permutation, a tensor over
// its orbit set, the orbits sorted by minimal element.
struct LSElement {
    int m = 0;
    std::map<Perm, TensorHA> parts;

    LSElement() = default;
    explicit LSElement(int m_) : m(m_) {}

    static LSElement zero(int m_) { return LSElement(m_); }

    static LSElement unit(int m_) {
        LSElement x(m_);
        x.parts.emplace(Perm::identity(m_), TensorHA::unit(m_));
        return x;
    }

    void add_part(const Perm& p, const TensorHA& t) {
        if (t.is_zero()) {
            return;
        }
        auto it = parts.find(p);
        if (it == parts.end()) {
            parts.emplace(p, t);
        } else {
            it->second += t;
            if (it->second.is_zero()) {
                parts.erase(it);
            }
        }
    }

    bool is_zero() const { return parts.empty(); }

    LSElement& operator+=(const LSElement& o) {
        if (m != o.m) {
            throw std::invalid_argument("mixing ring elements of different sizes");
        }
        for (const auto& [p, t] : o.parts) {
            add_part(p, t);
        }
        return *this;
    }
    friend LSElement operator+(LSElement x, const LSElement& y) { return x += y; }
    friend LSElement operator*(const Rat& s, const LSElement& x) {
        LSElement out(x.m);
        if (s == 0) {
            return out;
        }
        for (const auto& [p, t] : x.parts) {
            out.parts.emplace(p, s * t);
        }
        return out;
    }
    LSElement operator-() const { return Rat(-1) * *this; }
    friend LSElement operator-(LSElement x, const LSElement& y) {
        return x += Rat(-1) * y;
    }
    friend bool operator==(const LSElement& x, const LSElement& y) {
        return x.m == y.m && x.parts == y.parts;
    }
};

// Graph defect of a pair of permutations: for each orbit B of the group
// they generate, half of |B| + 2 minus the orbit counts of the first, the
// second, and the product inside B.  Always a nonnegative integer.
inline std::vector<std::pair<std::vector<int>, int>> graph_defect(const Perm& pi,
                                                                  const Perm& rho) {
    if (pi.m() != rho.m()) {
        throw std::invalid_argument("mixing permutations of different sizes");
    }
    int m = pi.m();
    auto joint = joint_orbits({pi, rho}, m);
    auto count_inside = [&](const Perm& p, const std::vector<int>& b) {
        int cnt = 0;
        for (const auto& orb : p.orbits()) {
            if (std::find(b.begin(), b.end(), orb[0]) != b.end()) {
                ++cnt;
            }
        }
        return cnt;
    };
    Perm tau = pi * rho;
    std::vector<std::pair<std::vector<int>, int>> out;
    for (const auto& b : joint) {
        int v = static_cast<int>(b.size()) + 2 - count_inside(pi, b) -
                count_inside(rho, b) - count_inside(tau, b);
        if (v < 0 || v % 2 != 0) {
            throw std::logic_error("graph defect is not a nonnegative integer");
        }
        out.emplace_back(b, v / 2);
    }
    return out;
}

namespace detail {

// surjection from the orbit set of p onto the joint orbit set, both in
// min-sorted order
inline std::vector<int> orbit_surjection(const Perm& p,
                                         const std::vector<std::vector<int>>& joint) {
    std::vector<int> owner(p.m());
    for (std::size_t j = 0; j < joint.size(); ++j) {
        for (int x : joint[j]) {
            owner[x] = static_cast<int>(j);
        }
    }
    std::vector<int> s;
    for (const auto& orb : p.orbits()) {
        s.push_back(owner[orb[0]]);
    }
    return s;
}

struct ProductRecipe {
    bool defect_zero = false;
    Perm tau;
    int joint_count = 0;
    std::vector<int> s_pi;
    std::vector<int> s_rho;
    std::vector<int> s_tau;
};

inline const ProductRecipe& recipe_for(const Perm& pi, const Perm& rho) {
    thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, ProductRecipe>
        cache;
    auto key = std::make_pair(pi.img, rho.img);
    auto it = cache.find(key);
    if (it != cache.end()) {
        return it->second;
    }
    ProductRecipe r;
    r.tau = pi * rho;
    auto joint = joint_orbits({pi, rho}, pi.m());
    r.joint_count = static_cast<int>(joint.size());
    r.defect_zero = true;
    for (const auto& bg : graph_defect(pi, rho)) {
        if (bg.second != 0) {
            r.defect_zero = false;
        }
    }
    r.s_pi = orbit_surjection(pi, joint);
    r.s_rho = orbit_surjection(rho, joint);
    r.s_tau = orbit_surjection(r.tau, joint);
    return cache.emplace(std::move(key), std::move(r)).first->second;
}

}  // namespace detail

// Term-level product: pull both tensors back to the joint orbit set,
// multiply there, and push forward to the orbit set of the product
// permutation; zero whenever the graph defect is not identically zero.
inline LSElement ls_term_multiply(const Perm& pi, const TensorHA& a, const Perm& rho,
                                  const TensorHA& b) {
    const auto& rec = detail::recipe_for(pi, rho);
    LSElement out(pi.m());
    if (!rec.defect_zero) {
        return out;
    }
    TensorHA pa = pullback_f(rec.s_pi, rec.joint_count, a);
    TensorHA pb = pullback_f(rec.s_rho, rec.joint_count, b);
    TensorHA prod = tensor_product(pa, pb);
    if (prod.is_zero()) {
        return out;
    }
    out.add_part(rec.tau, pushforward_f(rec.s_tau, rec.joint_count, prod));
    return out;
}

inline LSElement ls_multiply(const LSElement& x, const LSElement& y) {
    if (x.m != y.m) {
        throw std::invalid_argument("mixing ring elements of different sizes");
    }
    LSElement out(x.m);
    for (const auto& [pi, a] : x.parts) {
        for (const auto& [rho, b] : y.parts) {
            out += ls_term_multiply(pi, a, rho, b);
        }
    }
    return out;
}

// Sum over the slots of a class placed in one factor of the identity part.
inline LSElement mu_class(int m, const CohA& alpha) {
    LSElement out(m);
    for (int i = 0; i < m; ++i) {
        out.add_part(Perm::identity(m), p_star_tensor(m, i, alpha));
    }
    return out;
}

// Sum over transpositions of a class placed at the merged-orbit slot.
inline LSElement c_class(int m, const CohA& beta) {
    if (m < 2) {
        throw std::invalid_argument("transposition classes need at least two points");
    }
    LSElement out(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            // orbits of (i j): singletons below i keep their index, so the
            // merged orbit sits at slot i
            out.add_part(Perm::transposition(m, i, j), p_star_tensor(m - 1, i, beta));
        }
    }
    return out;
}

namespace detail {

inline int slot_of_orbit(const std::vector<std::vector<int>>& orbits, int member) {
    for (std::size_t t = 0; t < orbits.size(); ++t) {
        if (std::find(orbits[t].begin(), orbits[t].end(), member) != orbits[t].end()) {
            return static_cast<int>(t);
        }
    }
    throw std::logic_error("orbit lookup failed");
}

}  // namespace detail

// Image of the two-slot adjoint-of-multiplication tensor under placing its
// factors in slots i < j of the identity part on m points.
inline LSElement delta_ij_star(int m, int i, int j, const CohA& xi) {
    if (i < 0 || j <= i || j >= m) {
        throw std::invalid_argument("slot pair out of range");
    }
    TensorHA d2 = delta_star(2, xi);
    TensorHA t(m);
    for (const auto& [key, v] : d2.terms) {
        std::uint32_t nk = 0;
        nk = TensorHA::with_slot(nk, i, TensorHA::slot(key, 0));
        nk = TensorHA::with_slot(nk, j, TensorHA::slot(key, 1));
        t.add_term(nk, v);
    }
    LSElement out(m);
    out.add_part(Perm::identity(m), t);
    return out;
}

// Same for the three-slot tensor on ascending slots h < k < l.
inline LSElement delta_hkl_star(int m, int h, int k, int l, const CohA& xi) {
    if (h < 0 || k <= h || l <= k || l >= m) {
        throw std::invalid_argument("slot triple out of range");
    }
    TensorHA d3 = delta_star(3, xi);
    TensorHA t(m);
    for (const auto& [key, v] : d3.terms) {
        std::uint32_t nk = 0;
        nk = TensorHA::with_slot(nk, h, TensorHA::slot(key, 0));
        nk = TensorHA::with_slot(nk, k, TensorHA::slot(key, 1));
        nk = TensorHA::with_slot(nk, l, TensorHA::slot(key, 2));
        t.add_term(nk, v);
    }
    LSElement out(m);
    out.add_part(Perm::identity(m), t);
    return out;
}

// Closed form of the product of two transposition-sum classes: a diagonal
// part over coincident transpositions, a cyclic part in which every
// 3-cycle arises from three ordered triples, and a disjoint part with both
// classes at the min-sorted slots of their own orbits.
inline LSElement c_square_expand(int m, const CohA& beta, const CohA& betap) {
    if (m < 2) {
        throw std::invalid_argument("transposition classes need at least two points");
    }
    LSElement out(m);
    CohA cup = wedge(beta, betap);
    // coincident transpositions
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            out += delta_ij_star(m, i, j, cup);
        }
    }
    // ordered distinct triples (h, k, l) mapping h->k->l->h; the three
    // rotations of a triple give the same permutation
    for (int h = 0; h < m; ++h) {
        for (int k = 0; k < m; ++k) {
            for (int l = 0; l < m; ++l) {
                if (h == k || h == l || k == l) {
                    continue;
                }
                Perm cyc = Perm::cycle(m, {h, k, l});
                int mn = std::min(h, std::min(k, l));
                auto orbits = cyc.orbits();
                int slot = detail::slot_of_orbit(orbits, mn);
                LSElement term(m);
                term.add_part(cyc,
                              p_star_tensor(static_cast<int>(orbits.size()), slot, cup));
                out += term;
            }
        }
    }
    // disjoint pairs of transpositions, first class from the first factor
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            for (int h = 0; h < m; ++h) {
                for (int k = h + 1; k < m; ++k) {
                    if (h == i || h == j || k == i || k == j) {
                        continue;
                    }
                    Perm prod = Perm::transposition(m, i, j) * Perm::transposition(m, h, k);
                    auto orbits = prod.orbits();
                    int r = static_cast<int>(orbits.size());
                    TensorHA z = tensor_product(
                        p_star_tensor(r, detail::slot_of_orbit(orbits, i), beta),
                        p_star_tensor(r, detail::slot_of_orbit(orbits, h), betap));
                    LSElement term(m);
                    term.add_part(prod, z);
                    out += term;
                }
            }
        }
    }
    return out;
}

// Conjugation action: relabel the permutation, transport the tensor along
// the induced orbit relabeling, and re-sort into min order with the
// Koszul sign of the rearrangement.
inline LSElement sm_act(const Perm& sigma, const LSElement& x) {
    if (sigma.m() != x.m) {
        throw std::invalid_argument("acting with a permutation of the wrong size");
    }
    LSElement out(x.m);
    for (const auto& [pi, t] : x.parts) {
        Perm tau = conjugate(sigma, pi);
        auto old_orbits = pi.orbits();
        auto new_orbits = tau.orbits();
        // new slot q holds the image under sigma of the old orbit; find
        // which old slot that is
        std::vector<int> order(new_orbits.size());
        for (std::size_t q = 0; q < new_orbits.size(); ++q) {
            int pre = sigma.inverse()(new_orbits[q][0]);
            order[q] = detail::slot_of_orbit(old_orbits, pre);
        }
        TensorHA nt(t.r);
        for (const auto& [key, v] : t.terms) {
            std::uint32_t nk = 0;
            for (std::size_t q = 0; q < order.size(); ++q) {
                nk = TensorHA::with_slot(nk, static_cast<int>(q),
                                         TensorHA::slot(key, order[q]));
            }
            int sign = koszul_reorder_sign(key, order);
            nt.add_term(nk, sign < 0 ? Rat(-v) : v);
        }
        out.add_part(tau, nt);
    }
    return out;
}

inline bool is_sm_invariant(const LSElement& x) {
    for (const Perm& s : all_perms(x.m)) {
        if (!(sm_act(s, x) == x)) {
            return false;
        }
    }
    return true;
}

// Degree of a term on the 4n-dimensional variety: tensor degree plus twice
// the total drop in orbit count.
inline int kn_degree(int m, const Perm& pi, std::uint32_t key) {
    return TensorHA::key_degree(key) + 2 * (m - pi.orbit_count());
}

namespace detail {

// identity part of the cutting class: the product of the four one-generator
// mu classes has only identity terms, so a plain tensor carries it
inline const TensorHA& omega_cut_tensor(int m) {
    thread_local std::map<int, TensorHA> cache;
    auto it = cache.find(m);
    if (it != cache.end()) {
        return it->second;
    }
    LSElement w = mu_class(m, eta(1));
    for (int s = 2; s <= 4; ++s) {
        w = ls_multiply(w, mu_class(m, eta(s)));
    }
    if (w.parts.size() != 1 || !(w.parts.begin()->first == Perm::identity(m))) {
        throw std::logic_error("cutting class is not an identity part");
    }
    return cache.emplace(m, w.parts.begin()->second).first->second;
}

}  // namespace detail

// Integral over the 2n-dimensional hyperkahler: multiply by the cutting
// class, read the coefficient of the top tensor on the identity, divide
// by m!.  Terms must sit in the top degree 4n.
inline Rat integrate_kummer(int n, const LSElement& x) {
    int m = n + 1;
    if (x.m != m) {
        throw std::invalid_argument("ring size does not match the integration dimension");
    }
    for (const auto& [pi, t] : x.parts) {
        for (const auto& [key, v] : t.terms) {
            if (kn_degree(m, pi, key) != 4 * n) {
                throw std::invalid_argument("integrand is not of top degree");
            }
        }
    }
    // only the identity part can reach the identity part of the product
    // against the identity-only cutting class
    auto it = x.parts.find(Perm::identity(m));
    if (it == x.parts.end()) {
        return Rat(0);
    }
    TensorHA z = tensor_product(it->second, detail::omega_cut_tensor(m));
    std::uint32_t top = 0;
    for (int i = 0; i < m; ++i) {
        top = TensorHA::with_slot(top, i, 15u);
    }
    auto jt = z.terms.find(top);
    if (jt == z.terms.end()) {
        return Rat(0);
    }
    return jt->second / Rat(factorial(m));
}

// Identity-part-of-product shortcut: the integral of u * v computed from
// the term pairs whose permutations are mutually inverse, avoiding the
// full product expansion.
inline Rat integrate_kummer_product(int n, const LSElement& u, const LSElement& v) {
    int m = n + 1;
    if (u.m != m || v.m != m) {
        throw std::invalid_argument("ring size does not match the integration dimension");
    }
    LSElement id_part(m);
    for (const auto& [pi, a] : u.parts) {
        auto it = v.parts.find(pi.inverse());
        if (it == v.parts.end()) {
            continue;
        }
        id_part += ls_term_multiply(pi, a, it->first, it->second);
    }
    if (id_part.is_zero()) {
        return Rat(0);
    }
    return integrate_kummer(n, id_part);
}

// Serialization view: one row per pure term, the permutation in cycle
// notation and the tensor as (slot, monomial mask) pairs with the
// coefficient.
struct LSTermView {
    std::string cycles;
    std::vector<std::pair<int, unsigned>> slots;
    Rat coeff;
};

inline std::vector<LSTermView> describe(const LSElement& x) {
    std::vector<LSTermView> out;
    for (const auto& [pi, t] : x.parts) {
        for (const auto& [key, c] : t.terms) {
            LSTermView v;
            v.cycles = pi.cycle_str();
            for (int i = 0; i < t.r; ++i) {
                v.slots.emplace_back(i, TensorHA::slot(key, i));
            }
            v.coeff = c;
            out.push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace kummer
