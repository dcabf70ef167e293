#pragma once

#include "kummer/ext.hpp"
#include "kummer/scalar.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace kummer {

// Tensor power of the surface cohomology ring: a sum of pure tensors of
// monomials on the four degree 1 generators, one four-bit mask per slot
// (slot 0 in the lowest nibble).  Grading is shifted by 2 in every slot;
// the shift is even, so Koszul parities agree with the ordinary ones and
// popcounts are used throughout.
struct TensorHA {
    int r = 0;
    std::map<std::uint32_t, Rat> terms;

    TensorHA() = default;
    explicit TensorHA(int slots) : r(slots) {
        if (slots < 0 || slots > 6) {
            throw std::invalid_argument("unsupported slot count");
        }
    }

    static unsigned slot(std::uint32_t key, int i) {
        return (key >> (4 * i)) & 15u;
    }
    static std::uint32_t with_slot(std::uint32_t key, int i, unsigned mask) {
        return (key & ~(15u << (4 * i))) | (mask << (4 * i));
    }

    static TensorHA unit(int slots) {
        TensorHA t(slots);
        t.terms[0] = Rat(1);
        return t;
    }

    static TensorHA monomial(const std::vector<unsigned>& masks, Rat coeff = Rat(1)) {
        TensorHA t(static_cast<int>(masks.size()));
        std::uint32_t key = 0;
        for (std::size_t i = 0; i < masks.size(); ++i) {
            if (masks[i] > 15) {
                throw std::invalid_argument("slot mask out of range");
            }
            key = with_slot(key, static_cast<int>(i), masks[i]);
        }
        t.add_term(key, coeff);
        return t;
    }

    void add_term(std::uint32_t key, const Rat& coeff) {
        if (coeff == 0) {
            return;
        }
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) {
                terms.erase(it);
            }
        }
    }

    bool is_zero() const { return terms.empty(); }

    TensorHA& operator+=(const TensorHA& o) {
        if (r != o.r) {
            throw std::invalid_argument("tensor slot count mismatch");
        }
        for (const auto& [k, v] : o.terms) {
            add_term(k, v);
        }
        return *this;
    }
    friend TensorHA operator+(TensorHA x, const TensorHA& y) { return x += y; }
    friend TensorHA operator*(const Rat& s, const TensorHA& x) {
        TensorHA t(x.r);
        if (s == 0) {
            return t;
        }
        for (const auto& [k, v] : x.terms) {
            t.terms.emplace(k, s * v);
        }
        return t;
    }
    TensorHA operator-() const { return Rat(-1) * *this; }
    friend TensorHA operator-(TensorHA x, const TensorHA& y) { return x += Rat(-1) * y; }
    friend bool operator==(const TensorHA& x, const TensorHA& y) {
        return x.r == y.r && x.terms == y.terms;
    }

    // total ordinary degree of a pure-tensor key
    static int key_degree(std::uint32_t key) {
        int d = 0;
        for (std::uint32_t k = key; k; k >>= 4) {
            d += std::popcount(k & 15u);
        }
        return d;
    }
};

// Koszul sign of rearranging the slots of a pure tensor into the sequence
// `order` of old slot indices: inversions weighted by degree products.
inline int koszul_reorder_sign(std::uint32_t key, const std::vector<int>& order) {
    int parity = 0;
    for (std::size_t p = 0; p < order.size(); ++p) {
        for (std::size_t q = p + 1; q < order.size(); ++q) {
            if (order[p] > order[q]) {
                parity += std::popcount(TensorHA::slot(key, order[p])) *
                          std::popcount(TensorHA::slot(key, order[q]));
            }
        }
    }
    return (parity & 1) ? -1 : 1;
}

// Slot-wise graded product: each second factor moves left past the later
// first factors, then multiplies inside its slot.
inline TensorHA tensor_product(const TensorHA& x, const TensorHA& y) {
    if (x.r != y.r) {
        throw std::invalid_argument("tensor slot count mismatch");
    }
    TensorHA out(x.r);
    for (const auto& [kx, vx] : x.terms) {
        std::vector<int> xdeg(x.r);
        for (int i = 0; i < x.r; ++i) {
            xdeg[i] = std::popcount(TensorHA::slot(kx, i));
        }
        std::vector<int> xsuf(x.r + 1, 0);
        for (int i = x.r - 1; i >= 0; --i) {
            xsuf[i] = xsuf[i + 1] + xdeg[i];
        }
        for (const auto& [ky, vy] : y.terms) {
            int parity = 0;
            bool dead = false;
            std::uint32_t key = 0;
            for (int i = 0; i < x.r && !dead; ++i) {
                unsigned a = TensorHA::slot(kx, i);
                unsigned b = TensorHA::slot(ky, i);
                if (a & b) {
                    dead = true;
                    break;
                }
                parity += std::popcount(b) * xsuf[i + 1];
                if (shuffle_sign(a, b) < 0) {
                    ++parity;
                }
                key = TensorHA::with_slot(key, i, a | b);
            }
            if (dead) {
                continue;
            }
            Rat v = vx * vy;
            if (parity & 1) {
                v = -v;
            }
            out.add_term(key, v);
        }
    }
    return out;
}

// Product of minus-integrals over the slots: nonzero only on tensors of
// top monomials in every slot, where it contributes (-1)^r.
inline Rat t_form(const TensorHA& x) {
    Rat total(0);
    for (const auto& [k, v] : x.terms) {
        bool top = true;
        for (int i = 0; i < x.r; ++i) {
            if (TensorHA::slot(k, i) != 15u) {
                top = false;
                break;
            }
        }
        if (top) {
            total += (x.r & 1) ? -v : v;
        }
    }
    return total;
}

inline void require_surjection(const std::vector<int>& s, int k) {
    std::vector<bool> hit(k, false);
    for (int v : s) {
        if (v < 0 || v >= k) {
            throw std::invalid_argument("surjection target out of range");
        }
        hit[v] = true;
    }
    for (bool h : hit) {
        if (!h) {
            throw std::invalid_argument("map between index sets is not surjective");
        }
    }
}

// Multiplication over the fibers of s: slot j of the result is the cup
// product of the input slots in the fiber over j, factors first regrouped
// by fiber with the Koszul sign of that rearrangement.
inline TensorHA pullback_f(const std::vector<int>& s, int k, const TensorHA& x) {
    if (static_cast<int>(s.size()) != x.r) {
        throw std::invalid_argument("surjection domain size mismatch");
    }
    require_surjection(s, k);
    std::vector<int> order;
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < x.r; ++i) {
            if (s[i] == j) {
                order.push_back(i);
            }
        }
    }
    TensorHA out(k);
    for (const auto& [key, v] : x.terms) {
        int sign = koszul_reorder_sign(key, order);
        std::uint32_t okey = 0;
        bool dead = false;
        std::size_t pos = 0;
        for (int j = 0; j < k && !dead; ++j) {
            unsigned acc = 0;
            while (pos < order.size() && s[order[pos]] == j) {
                unsigned mask = TensorHA::slot(key, order[pos]);
                if (acc & mask) {
                    dead = true;
                    break;
                }
                if (shuffle_sign(acc, mask) < 0) {
                    sign = -sign;
                }
                acc |= mask;
                ++pos;
            }
            okey = TensorHA::with_slot(okey, j, acc);
        }
        if (!dead) {
            out.add_term(okey, sign < 0 ? Rat(-v) : v);
        }
    }
    return out;
}

// Adjoint of pullback_f with respect to the minus-integral forms: the
// unique z with T_I(z * x) = T_J(y * pullback_f(s, x)) for all x.  The
// T-pairing matches each monomial with its slot-wise complement and
// nothing else, so z is read off one monomial x at a time; a monomial x
// contributes only when, over every fiber, its slots exactly partition
// the complement of the y-term mask there, so the enumeration assigns
// each needed generator to one slot of its fiber.
inline TensorHA pushforward_f(const std::vector<int>& s, int k, const TensorHA& y) {
    int r = static_cast<int>(s.size());
    require_surjection(s, k);
    if (y.r != k) {
        throw std::invalid_argument("tensor slot count mismatch");
    }
    std::vector<std::vector<int>> fiber(k);
    for (int i = 0; i < r; ++i) {
        fiber[s[i]].push_back(i);
    }
    TensorHA out(r);
    for (const auto& [wkey, wv] : y.terms) {
        TensorHA w(k);
        w.terms[wkey] = wv;
        // per fiber, the ways to split the needed mask over its slots
        std::vector<std::vector<std::uint32_t>> splits(k);
        for (int j = 0; j < k; ++j) {
            unsigned need = 15u & ~TensorHA::slot(wkey, j);
            std::vector<int> gens;
            for (int g = 0; g < 4; ++g) {
                if (need & (1u << g)) {
                    gens.push_back(g);
                }
            }
            std::size_t fsz = fiber[j].size();
            std::vector<std::size_t> assign(gens.size(), 0);
            for (;;) {
                std::uint32_t part = 0;
                for (std::size_t t = 0; t < gens.size(); ++t) {
                    int slot_i = fiber[j][assign[t]];
                    part = TensorHA::with_slot(
                        part, slot_i, TensorHA::slot(part, slot_i) | (1u << gens[t]));
                }
                splits[j].push_back(part);
                std::size_t t = 0;
                while (t < gens.size() && ++assign[t] == fsz) {
                    assign[t] = 0;
                    ++t;
                }
                if (t == gens.size()) {
                    break;
                }
            }
        }
        std::vector<std::size_t> pick(k, 0);
        for (;;) {
            std::uint32_t xkey = 0;
            for (int j = 0; j < k; ++j) {
                xkey |= splits[j][pick[j]];
            }
            TensorHA x(r);
            x.terms[xkey] = Rat(1);
            Rat num = t_form(tensor_product(w, pullback_f(s, k, x)));
            if (num != 0) {
                std::uint32_t bar = 0;
                for (int i = 0; i < r; ++i) {
                    bar = TensorHA::with_slot(bar, i, 15u & ~TensorHA::slot(xkey, i));
                }
                TensorHA xb(r);
                xb.terms[bar] = Rat(1);
                Rat den = t_form(tensor_product(xb, x));
                out.add_term(bar, num / den);
            }
            int j = 0;
            while (j < k && ++pick[j] == splits[j].size()) {
                pick[j] = 0;
                ++j;
            }
            if (j == k) {
                break;
            }
        }
    }
    return out;
}

// Adjoint-of-multiplication image of a single class along [r] -> [1].
inline TensorHA delta_star(int r, const Ext<Rat>& xi) {
    if (r < 1 || r > 6) {
        throw std::invalid_argument("unsupported slot count");
    }
    if (xi.dual) {
        throw std::invalid_argument("expected a vector-side class");
    }
    TensorHA y(1);
    for (unsigned m = 0; m < 16; ++m) {
        if (xi.c[m] != 0) {
            y.add_term(m, xi.c[m]);
        }
    }
    std::vector<int> s(r, 0);
    return pushforward_f(s, 1, y);
}

}  // namespace kummer
