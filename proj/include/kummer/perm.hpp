#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kummer {

// Bijection of {0, ..., m-1}, stored through its image list.
struct Perm {
    std::vector<int> img;

    Perm() = default;
    explicit Perm(int m) : img(m) { std::iota(img.begin(), img.end(), 0); }
    explicit Perm(std::vector<int> images) : img(std::move(images)) {
        std::vector<bool> seen(img.size(), false);
        for (int v : img) {
            if (v < 0 || v >= static_cast<int>(img.size()) || seen[v]) {
                throw std::invalid_argument("not a permutation");
            }
            seen[v] = true;
        }
    }

    static Perm identity(int m) { return Perm(m); }

    static Perm transposition(int m, int i, int j) {
        Perm p(m);
        std::swap(p.img[i], p.img[j]);
        return p;
    }

    // cycle (c0 c1 ... ck): c0 -> c1 -> ... -> ck -> c0
    static Perm cycle(int m, const std::vector<int>& c) {
        Perm p(m);
        for (std::size_t t = 0; t < c.size(); ++t) {
            p.img[c[t]] = c[(t + 1) % c.size()];
        }
        return Perm(p.img);
    }

    int m() const { return static_cast<int>(img.size()); }
    int operator()(int x) const { return img[x]; }

    bool is_identity() const {
        for (int x = 0; x < m(); ++x) {
            if (img[x] != x) {
                return false;
            }
        }
        return true;
    }

    Perm inverse() const {
        std::vector<int> inv(img.size());
        for (int x = 0; x < m(); ++x) {
            inv[img[x]] = x;
        }
        return Perm(std::move(inv));
    }

    // orbits sorted by their minimal element, elements ascending
    std::vector<std::vector<int>> orbits() const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(img.size(), false);
        for (int x = 0; x < m(); ++x) {
            if (seen[x]) {
                continue;
            }
            std::vector<int> orb;
            int y = x;
            while (!seen[y]) {
                seen[y] = true;
                orb.push_back(y);
                y = img[y];
            }
            std::sort(orb.begin(), orb.end());
            out.push_back(std::move(orb));
        }
        return out;
    }

    int orbit_count() const {
        return static_cast<int>(orbits().size());
    }

    std::string cycle_str() const {
        std::ostringstream os;
        std::vector<bool> seen(img.size(), false);
        bool any = false;
        for (int x = 0; x < m(); ++x) {
            if (seen[x] || img[x] == x) {
                seen[x] = true;
                continue;
            }
            os << '(';
            int y = x;
            bool first = true;
            while (!seen[y]) {
                seen[y] = true;
                if (!first) {
                    os << ' ';
                }
                os << (y + 1);
                first = false;
                y = img[y];
            }
            os << ')';
            any = true;
        }
        return any ? os.str() : "()";
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

// (a * b)(x) = a(b(x))
inline Perm operator*(const Perm& a, const Perm& b) {
    if (a.m() != b.m()) {
        throw std::invalid_argument("composing permutations of different sizes");
    }
    std::vector<int> r(a.img.size());
    for (int x = 0; x < a.m(); ++x) {
        r[x] = a(b(x));
    }
    return Perm(std::move(r));
}

inline Perm conjugate(const Perm& s, const Perm& p) {
    return s * p * s.inverse();
}

// Orbits of the group generated by any number of permutations, sorted by
// minimal element.
inline std::vector<std::vector<int>> joint_orbits(const std::vector<Perm>& gens, int m) {
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const Perm& g : gens) {
        for (int x = 0; x < m; ++x) {
            int a = find(x);
            int b = find(g(x));
            if (a != b) {
                parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    std::vector<std::vector<int>> buckets(m);
    for (int x = 0; x < m; ++x) {
        buckets[find(x)].push_back(x);
    }
    std::vector<std::vector<int>> out;
    for (auto& b : buckets) {
        if (!b.empty()) {
            out.push_back(std::move(b));
        }
    }
    return out;
}

inline std::vector<Perm> all_perms(int m) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace kummer
