#pragma once

#include "kummer/scalar.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace kummer {

using IMat = std::vector<std::vector<Int>>;

inline Int int_gcd(Int x, Int y) {
    return boost::multiprecision::gcd(x, y);
}

inline Int int_abs(const Int& x) {
    return x < 0 ? Int(-x) : x;
}

// Fraction-free determinant (Bareiss).
inline Int int_det(IMat m) {
    int n = static_cast<int>(m.size());
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i) {
                if (m[i][k] != 0) {
                    p = i;
                    break;
                }
            }
            if (p < 0) {
                return 0;
            }
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return n == 0 ? Int(1) : Int(sign * m[n - 1][n - 1]);
}

// Gcd of all k x k minors; zero when every minor vanishes.
inline Int minor_gcd(const IMat& m, int k) {
    int r = static_cast<int>(m.size());
    int c = r ? static_cast<int>(m[0].size()) : 0;
    if (k <= 0 || k > r || k > c) {
        throw std::invalid_argument("minor size out of range");
    }
    Int g = 0;
    std::vector<int> rsub(k), csub(k);
    auto next_subset = [](std::vector<int>& s, int n) {
        int k2 = static_cast<int>(s.size());
        int i = k2 - 1;
        while (i >= 0 && s[i] == n - k2 + i) {
            --i;
        }
        if (i < 0) {
            return false;
        }
        ++s[i];
        for (int j = i + 1; j < k2; ++j) {
            s[j] = s[j - 1] + 1;
        }
        return true;
    };
    for (int i = 0; i < k; ++i) {
        rsub[i] = i;
    }
    do {
        for (int i = 0; i < k; ++i) {
            csub[i] = i;
        }
        do {
            IMat sub(k, std::vector<Int>(k));
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < k; ++j) {
                    sub[i][j] = m[rsub[i]][csub[j]];
                }
            }
            g = int_gcd(g, int_det(sub));
        } while (next_subset(csub, c));
    } while (next_subset(rsub, r));
    return g;
}

// Smith normal form; returns the diagonal (nonnegative, each entry dividing
// the next, zeros trailing).
inline std::vector<Int> smith_normal_form(IMat m) {
    int r = static_cast<int>(m.size());
    int c = r ? static_cast<int>(m[0].size()) : 0;
    int t = 0;
    std::vector<Int> diag;
    while (t < r && t < c) {
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < r; ++i) {
            for (int j = t; j < c; ++j) {
                if (m[i][j] != 0 && (best == 0 || int_abs(m[i][j]) < best)) {
                    best = int_abs(m[i][j]);
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi < 0) {
            break;
        }
        std::swap(m[t], m[pi]);
        for (int i = 0; i < r; ++i) {
            std::swap(m[i][t], m[i][pj]);
        }
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (m[i][t] == 0) {
                    continue;
                }
                Int q = m[i][t] / m[t][t];
                for (int j = t; j < c; ++j) {
                    m[i][j] -= q * m[t][j];
                }
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < c; ++j) {
                if (m[t][j] == 0) {
                    continue;
                }
                Int q = m[t][j] / m[t][t];
                for (int i = t; i < r; ++i) {
                    m[i][j] -= q * m[i][t];
                }
                if (m[t][j] != 0) {
                    for (int i = 0; i < r; ++i) {
                        std::swap(m[i][t], m[i][j]);
                    }
                    clean = false;
                }
            }
            if (clean) {
                // the pivot must divide the inner block
                for (int i = t + 1; i < r && clean; ++i) {
                    for (int j = t + 1; j < c && clean; ++j) {
                        if (m[i][j] % m[t][t] != 0) {
                            for (int jj = t; jj < c; ++jj) {
                                m[t][jj] += m[i][jj];
                            }
                            clean = false;
                        }
                    }
                }
            }
        }
        diag.push_back(int_abs(m[t][t]));
        ++t;
    }
    while (static_cast<int>(diag.size()) < std::min(r, c)) {
        diag.push_back(0);
    }
    return diag;
}

// Row-style Hermite normal form: upper echelon, positive pivots, entries
// above each pivot reduced into [0, pivot).
inline IMat hermite_normal_form(IMat m) {
    int r = static_cast<int>(m.size());
    int c = r ? static_cast<int>(m[0].size()) : 0;
    int t = 0;
    for (int j = 0; j < c && t < r; ++j) {
        int p = -1;
        for (int i = t; i < r; ++i) {
            if (m[i][j] != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) {
            continue;
        }
        std::swap(m[t], m[p]);
        for (int i = t + 1; i < r; ++i) {
            while (m[i][j] != 0) {
                Int q = m[t][j] / m[i][j];
                for (int k = 0; k < c; ++k) {
                    m[t][k] -= q * m[i][k];
                }
                std::swap(m[t], m[i]);
            }
        }
        if (m[t][j] < 0) {
            for (int k = 0; k < c; ++k) {
                m[t][k] = -m[t][k];
            }
        }
        for (int i = 0; i < t; ++i) {
            Int q = m[i][j] / m[t][j];
            if (m[i][j] % m[t][j] < 0) {
                q -= 1;
            }
            if (q != 0) {
                for (int k = 0; k < c; ++k) {
                    m[i][k] -= q * m[t][k];
                }
            }
        }
        ++t;
    }
    return m;
}

// Index in Z^n of the lattice generated by the rows (rows may be redundant).
inline Int lattice_index(const IMat& gens, int n) {
    IMat h = hermite_normal_form(gens);
    Int idx = 1;
    int t = 0;
    for (int j = 0; j < n; ++j) {
        if (t >= static_cast<int>(h.size()) || h[t][j] == 0) {
            throw std::domain_error("generators do not span a full lattice");
        }
        idx *= h[t][j];
        ++t;
    }
    return idx;
}

// Normal form of a nondegenerate alternating integer matrix under
// congruence: returns the chain d1 | d2 | ... | d_{n/2} of positive block
// divisors, the matrix being integrally congruent to the block diagonal
// with blocks [[0, d_k], [-d_k, 0]]; simultaneous row/column operations
// keep the matrix alternating throughout.
inline std::vector<Int> skew_smith(IMat m) {
    int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (m[i][j] != -m[j][i]) {
                throw std::invalid_argument("matrix is not alternating");
            }
        }
    }
    auto sim_swap = [&](int x, int y) {
        if (x == y) {
            return;
        }
        std::swap(m[x], m[y]);
        for (int i = 0; i < n; ++i) {
            std::swap(m[i][x], m[i][y]);
        }
    };
    // adds c * (row/col y) to (row/col x)
    auto sim_add = [&](int x, int y, const Int& c) {
        for (int j = 0; j < n; ++j) {
            m[x][j] += c * m[y][j];
        }
        for (int i = 0; i < n; ++i) {
            m[i][x] += c * m[i][y];
        }
    };
    std::vector<Int> divisors;
    int t = 0;
    while (t + 1 < n) {
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (m[i][j] != 0 && (best == 0 || int_abs(m[i][j]) < best)) {
                    best = int_abs(m[i][j]);
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi < 0) {
            break;
        }
        sim_swap(pi, t);
        if (pj == t) {
            pj = pi;
        }
        sim_swap(pj, t + 1);
        if (m[t][t + 1] < 0) {
            sim_swap(t, t + 1);
        }
        bool restart = false;
        // clear both pivot rows beyond the pivot pair
        for (int k = t + 2; k < n && !restart; ++k) {
            Int d = m[t][t + 1];
            if (m[t][k] != 0) {
                Int q = m[t][k] / d;
                sim_add(k, t + 1, -q);
                if (m[t][k] != 0) {
                    restart = true;
                }
            }
            if (!restart && m[t + 1][k] != 0) {
                Int q = -m[t + 1][k] / d;
                sim_add(k, t, -q);
                if (m[t + 1][k] != 0) {
                    restart = true;
                }
            }
        }
        if (restart) {
            continue;
        }
        // the pivot must divide the inner block
        Int d = m[t][t + 1];
        bool divides = true;
        for (int i = t + 2; i < n && divides; ++i) {
            for (int j = i + 1; j < n && divides; ++j) {
                if (m[i][j] % d != 0) {
                    sim_add(t + 1, i, 1);
                    divides = false;
                }
            }
        }
        if (!divides) {
            continue;
        }
        divisors.push_back(d);
        t += 2;
    }
    if (2 * static_cast<int>(divisors.size()) != n) {
        throw std::domain_error("degenerate alternating matrix");
    }
    for (std::size_t i = 0; i + 1 < divisors.size(); ++i) {
        if (divisors[i + 1] % divisors[i] != 0) {
            throw std::logic_error("alternating reduction divisibility chain broken");
        }
    }
    return divisors;
}

}  // namespace kummer
