#!/usr/bin/env python3
"""Independent sympy oracle for the polarization lattice tables.

Implements the theta-pairing on V + V* from first principles (wedge,
degree-2 duality map, zeta-duality), derives the 4x4 intersection matrix
of the distinguished isotropic bases symbolically in (c, e, s), then for
each of the four divisibility templates and e = 1..10:
  * assembles the 8x8 Gram matrix,
  * verifies the explicit change-of-basis is unimodular and brings the
    Gram to ((0, D), (-D, 0)) with the stated diagonal D,
  * computes the Smith normal form independently and checks it consists
    of the D entries doubled, in divisibility order.
Emits the frozen (case, e) -> divisor table consumed by the C++ tests."""

import sys
from math import gcd
import sympy as sp
from sympy.matrices.normalforms import smith_normal_form

def check(label, ok):
    if not ok:
        print(f"FAIL {label}")
        sys.exit(1)

# ---- exterior helpers on 4 generators (masks) --------------------------
def popcount(m):
    return bin(m).count("1")

def wedge_masks(a, b):
    if a & b:
        return 0, 0
    sign = 1
    for i in range(4):
        if b >> i & 1 and popcount(a >> (i + 1)) % 2:
            sign = -sign
    return sign, a | b

DEG2 = [m for m in range(16) if popcount(m) == 2]

def shuffle_sign(compl, S):
    seq = [i for i in range(4) if compl >> i & 1] + [i for i in range(4) if S >> i & 1]
    sgn = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sgn = -sgn
    return sgn

IOTA = {S: ((~S) & 0b1111, shuffle_sign((~S) & 0b1111, S)) for S in DEG2}

# ---- elements of V + V*: (vector coeffs, covector coeffs) --------------
# pairing(x, y) = <h, Phi(x ^ y)> with
#   Phi((v,g),(w,h)) = (t1 v^w + t2 iota(g^h), t3 (g(w) - h(v)))
# and duality <h0 + s zeta*, omega + z zeta> = <h0, omega> - s z
# (the zeta-sign below is the one that reproduces the printed pairing
# table; the endomorphism oracle uses the opposite one, see notes).
t1, t2, t3 = sp.Integer(-1), sp.Integer(-3), sp.Integer(-3)

def pair(x, y, c, e, s, zeta_sign=-1):
    xv, xl = x
    yv, yl = y
    # wedge part t1 * xv ^ yv  (dict mask->coeff, deg2)
    omega = {}
    for i in range(4):
        for j in range(4):
            if xv[i] == 0 or yv[j] == 0:
                continue
            sgn, m = wedge_masks(1 << i, 1 << j)
            if sgn:
                omega[m] = omega.get(m, 0) + sgn * t1 * xv[i] * yv[j]
    # iota part t2 * iota(xl ^ yl)
    for i in range(4):
        for j in range(4):
            if xl[i] == 0 or yl[j] == 0:
                continue
            sgn, m = wedge_masks(1 << i, 1 << j)
            if sgn:
                cm, cs = IOTA[m]
                omega[cm] = omega.get(cm, 0) + sgn * cs * t2 * xl[i] * yl[j]
    # zeta part t3 (g(w) - h(v))
    z = t3 * (sum(xl[k] * yv[k] for k in range(4)) - sum(yl[k] * xv[k] for k in range(4)))
    # duality with h0 = c(e v1*^v2* + v3*^v4*) + s zeta*
    val = c * e * omega.get(0b0011, 0) + c * omega.get(0b1100, 0) + zeta_sign * s * z
    return sp.expand(val)

def E(i):  # (v_i, 0)
    v = [0] * 4
    v[i - 1] = 1
    return (v, [0] * 4)

def Ed(i, k=1):  # (0, k * v_i*)
    l = [0] * 4
    l[i - 1] = k
    return ([0] * 4, l)

ALPHA = [Ed(1), E(2), E(4), Ed(3)]
BETA = [Ed(2, -1), E(1), E(3), Ed(4, -1)]

c, e, s = sp.symbols("c e s", integer=True)
B = sp.Matrix(4, 4, lambda i, j: pair(ALPHA[i], BETA[j], c, e, s))
EXPECT = sp.Matrix([[3*c, 3*s, 0, 0], [3*s, c*e, 0, 0], [0, 0, c, 3*s], [0, 0, 3*s, 3*c*e]])
check("intersection matrix symbolic", sp.simplify(B - EXPECT) == sp.zeros(4, 4))
print("pairing table (alpha_i, beta_j) symbolic in (c,e,s): OK")
for i in range(4):
    for j in range(4):
        check("alpha isotropy", pair(ALPHA[i], ALPHA[j], c, e, s) == 0)
        check("beta isotropy", pair(BETA[i], BETA[j], c, e, s) == 0)
print("alpha-span and beta-span isotropic: OK")

# with the opposite zeta-sign the s-entries flip (the wobble documented
# in the notes); record it so the C++ side pins both conventions:
Bplus = sp.Matrix(4, 4, lambda i, j: pair(ALPHA[i], BETA[j], c, e, s, zeta_sign=+1))
check("zeta-sign flip swaps s-entries",
      sp.simplify(Bplus - EXPECT.subs(s, -s)) == sp.zeros(4, 4))
print("zeta-sign +1 variant equals the table with s -> -s: OK")

# ---- four divisibility templates ---------------------------------------
def ext_gcd(a, b):
    if b == 0:
        return a, 1, 0
    g2, x2, y2 = ext_gcd(b, a % b)
    return g2, y2, x2 - (a // b) * y2

def gram(cv, ev, sv):
    G = sp.zeros(8, 8)
    basis = ALPHA + BETA
    for i in range(8):
        for j in range(8):
            G[i, j] = pair(basis[i], basis[j], cv, ev, sv)
    return G

def case_data(case, ev):
    """returns (c, s, square, new basis rows in alpha/beta coords, Delta)"""
    if case == 1:
        cv, sv = 1, 0
        g = gcd(3, ev)
        _, x, y = ext_gcd(3, ev)  # 3x + e y = g
        assert 3 * x + ev * y == g
        rows = [
            [0, 0, 1, 0, 0, 0, 0, 0],          # a3
            [x, y, 0, 0, 0, 0, 0, 0],          # x a1 + y a2
            [sp.Rational(ev, g), sp.Rational(-3, g), 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0, 0, 0],          # a4
            [0, 0, 0, 0, 0, 0, 1, 0],          # b3
            [0, 0, 0, 0, 1, 1, 0, 0],          # b1 + b2
            [0, 0, 0, 0, sp.Rational(ev * y, g), sp.Rational(-3 * x, g), 0, 0],
            [0, 0, 0, 0, 0, 0, 0, 1],          # b4
        ]
        delta = [1, g, sp.Rational(3 * ev, g), 3 * ev]
        square = 2 * ev
    elif case == 2:
        cv, sv = 2, 1
        g = gcd(3, ev)
        assert g == gcd(3, 2 * ev)
        _, x, y = ext_gcd(3, 2 * ev)  # 3x + 2e y = g
        assert 3 * x + 2 * ev * y == g
        rows = [
            [0, 0, 1, 0, 0, 0, 0, 0],
            [x, y, 0, 0, 0, 0, 0, 0],
            [sp.Rational(2 * ev, g), sp.Rational(-3, g), 0, 0, 0, 0, 0, 0],
            [0, 0, 6 * ev - 3, -1, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, -1, 1],         # b4 - b3
            [0, 0, 0, 0, 0, 1, 0, 0],          # b2
            [0, 0, 0, 0, 1, sp.Rational(-(6 * x + 3 * y), g), 0, 0],
            [0, 0, 0, 0, 0, 0, 3, -2],         # 3 b3 - 2 b4
        ]
        delta = [1, g, sp.Rational(3 * (4 * ev - 3), g), 3 * (4 * ev - 3)]
        square = 2 * (4 * ev - 3)
    elif case == 3:
        cv, sv = 3, 1
        rows = [
            [0, 0, 1, 0, 0, 0, 0, 0],
            [1, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, -1, 1, 0, 0, 0, 0],
            [ev, -1, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0, 0, -1, 1],
            [0, 0, 0, 0, 1, -3, 0, 0],
        ]
        delta = [3, 3, 3 * (3 * ev - 1), 3 * (3 * ev - 1)]
        square = 6 * (3 * ev - 1)
    else:
        cv, sv = 6, 1
        # the printed source transposes the scalars 2 and 6e between the
        # third alpha-entry and third beta-entry; as printed, the cross
        # pairings are 6 - 18e (nonzero for every e) instead of 0.  With
        # the scalars in the positions below the claimed diagonal form
        # holds for all e, confirmed independently by the Smith normal
        # form of the Gram matrix.
        rows = [
            [1, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, 1, 0, 0, 0, 0, 0],
            [0, 0, 6 * ev, -1, 0, 0, 0, 0],
            [2 * ev, -1, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0, 0, 0, 1],
            [0, 0, 0, 0, 0, 0, 1, -2],
            [0, 0, 0, 0, 1, -6, 0, 0],
        ]
        delta = [3, 3, 3 * (12 * ev - 1), 3 * (12 * ev - 1)]
        square = 6 * (12 * ev - 1)
    return cv, sv, square, sp.Matrix(rows), delta

frozen = {}
for case in (1, 2, 3, 4):
    for ev in range(1, 11):
        cv, sv, square, T, delta = case_data(case, ev)
        for entry in T:
            check(f"integral basis case {case} e={ev}", entry == sp.floor(entry))
        check(f"unimodular case {case} e={ev}", abs(T.det()) == 1)
        G = gram(cv, ev, sv)
        NG = T * G * T.T
        D = sp.diag(*delta)
        EXPECTG = sp.Matrix(sp.BlockMatrix([[sp.zeros(4, 4), D], [-D, sp.zeros(4, 4)]]))
        check(f"diagonalization case {case} e={ev}", NG == EXPECTG)
        # independent Smith normal form of the 8x8 Gram
        snf = smith_normal_form(sp.Matrix(8, 8, lambda i, j: sp.Integer(G[i, j])))
        diag = [abs(snf[i, i]) for i in range(8)]
        want = sorted([int(d) for d in delta] * 2, key=lambda v: (v, ))
        # divisibility-ordered chain: sort respecting divisibility
        ds = sorted(int(d) for d in delta)
        chain = []
        for d in ds:
            chain += [d, d]
        chain.sort()
        # the actual SNF diag must be the multiset of doubled deltas in
        # ascending divisibility order
        check(f"snf multiset case {case} e={ev}", sorted(diag) == sorted(chain))
        for i in range(7):
            if diag[i] != 0 and diag[i + 1] != 0:
                check(f"snf chain case {case} e={ev}", diag[i + 1] % diag[i] == 0)
        frozen[(case, ev)] = tuple(int(d) for d in sorted(ds for ds in [int(x) for x in delta]))
        # keep the stated (unsorted) delta too; both are frozen below
        frozen[(case, ev)] = tuple(int(x) for x in delta)

# hand-checked reference rows
check("case1 e=1", frozen[(1, 1)] == (1, 1, 3, 3))
check("case1 e=2", frozen[(1, 2)] == (1, 1, 6, 6))
check("case1 e=3", frozen[(1, 3)] == (1, 3, 3, 9))
check("case3 e=1", frozen[(3, 1)] == (3, 3, 6, 6))
print("divisor tables verified for all four cases, e = 1..10; frozen table:")
for case in (1, 2, 3, 4):
    row = ", ".join(f"e={ev}:{frozen[(case, ev)]}" for ev in range(1, 11))
    print(f"  case {case}: {row}")

print("ALL LATTICE ORACLE CHECKS PASSED")
