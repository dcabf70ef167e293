#!/usr/bin/env python3
"""Symbolic oracle for the skew-endomorphism identities and the Weil-type
structure, plus the worked rank-one example and the resolution of the
sign twist in the spinor embedding.

Everything here is independent of the C++ engine: sympy for the symbolic
algebra, exact Fractions for the small Grassmann computations."""

import sys
from fractions import Fraction as Fr
import sympy as sp

def check(label, ok):
    if not ok:
        print(f"FAIL {label}")
        sys.exit(1)

# ---------------------------------------------------------------- part 1
# generic skew 4x4: Pfaffian, inverse, and the quadratic identity for a
# product of two skew matrices.
def skew(sym):
    a = sp.symbols(f"{sym}12 {sym}13 {sym}14 {sym}23 {sym}24 {sym}34")
    m = sp.zeros(4, 4)
    (m[0, 1], m[0, 2], m[0, 3], m[1, 2], m[1, 3], m[2, 3]) = a
    for i in range(4):
        for j in range(i):
            m[i, j] = -m[j, i]
    return m

def pf(m):
    return m[0, 1] * m[2, 3] - m[0, 2] * m[1, 3] + m[0, 3] * m[1, 2]

def invskew(m):
    p = pf(m)
    (x12, x13, x14, x23, x24, x34) = (m[0, 1], m[0, 2], m[0, 3], m[1, 2], m[1, 3], m[2, 3])
    return sp.Matrix([
        [0, -x34, x24, -x23],
        [x34, 0, -x14, x13],
        [-x24, x14, 0, -x12],
        [x23, -x13, x12, 0]]) / p

X = skew("x")
Y = skew("y")
check("pfaffian squared is determinant", sp.expand(pf(X) ** 2 - X.det()) == 0)
check("skew inverse", sp.simplify(X * invskew(X) - sp.eye(4)) == sp.zeros(4, 4))
XY = X * Y
quad = XY * XY - sp.Rational(1, 2) * XY.trace() * XY + pf(X) * pf(Y) * sp.eye(4)
check("quadratic identity for product of skews", sp.expand(quad) == sp.zeros(4, 4))
tr_skew = sp.expand(XY.trace() + 2 * sum(X[i, j] * Y[i, j] for i in range(4) for j in range(i + 1, 4)))
check("trace of product of skews", tr_skew == 0)
print("pfaffian / inverse / product-quadratic / trace identities: OK")

# ---------------------------------------------------------------- part 2
# structured reference form: omega_g = c(e v1*^v2* + v3*^v4*)
c, e, s, t2, t3, m = sp.symbols("c e s t2 t3 m", positive=False)
t1 = 2 * m * t3 ** 2 / t2          # the product relation t1 t2 = 2 m t3^2
Xg = sp.zeros(4, 4)
Xg[0, 1], Xg[1, 0] = c * e, -c * e
Xg[2, 3], Xg[3, 2] = c, -c
tr_id = sp.simplify(sp.trace(invskew(Xg) * Y) - 2 * (Y[0, 1] + e * Y[2, 3]) / (c * e))
check("trace of g-inverse times Y", tr_id == 0)
print("structured trace identity: OK")

N = t1 / (c ** 2 * e * t2)
b = s * t3 / (c ** 2 * e * t2)
D = sp.simplify(N - b ** 2)
hh = 2 * c ** 2 * e - s ** 2 / m   # square of the polarization class
check("discriminant vs class square",
      sp.simplify(D - t3 ** 2 * m * hh / (c ** 4 * e ** 2 * t2 ** 2)) == 0)

# 8x8 endomorphism (v, l) -> (g^-1 l - b v, b l - N g v), columns act on
# stacked coordinates (v; l)
Xinv = invskew(Xg)
P = sp.zeros(8, 8)
P[0:4, 0:4] = -b * sp.eye(4)
P[0:4, 4:8] = Xinv
P[4:8, 0:4] = -N * Xg
P[4:8, 4:8] = b * sp.eye(4)
check("endomorphism squares to -(N - b^2)", sp.simplify(P * P + D * sp.eye(8)) == sp.zeros(8, 8))

# Gram of the theta-pairing on the standard basis (v_i, 0), (0, v_i*);
# zeta-duality sign +1 here (the convention under which the eigenspace
# and Hermitian statements hold verbatim; see notes on the sign wobble).
G = sp.zeros(8, 8)
G[0:4, 0:4] = t1 * Xg
G[0:4, 4:8] = -s * t3 * sp.eye(4)
G[4:8, 0:4] = s * t3 * sp.eye(4)
G[4:8, 4:8] = -c ** 2 * e * t2 * Xinv
check("pairing rescales by the discriminant", sp.simplify(P.T * G * P - D * G) == sp.zeros(8, 8))
print("endomorphism square / pairing rescaling: OK")

# eigenvectors (v, lam * g v); within an eigenspace the pairing vanishes,
# across the two eigenspaces it is proportional to omega_g with the
# factor t1 (h,h) / (c^2 e).
lam1, lam2 = sp.symbols("lam1 lam2")
def eigvec(i, lam):
    u = sp.zeros(8, 1)
    u[i] = 1
    u[4:8, 0] = lam * Xg[:, i]
    return u

minpoly = lambda l: l ** 2 - 2 * b * l + N
charsub = {lam1 * lam2: N, lam1 + lam2: 2 * b}
cross_factor = sp.simplify(t1 * hh / (c ** 2 * e))
for i in range(4):
    for j in range(4):
        pij = sp.expand((eigvec(i, lam1).T * G * eigvec(j, lam1))[0, 0])
        rem = sp.rem(pij, minpoly(lam1), lam1)
        check(f"eigenspace isotropy {i}{j}", sp.simplify(rem) == 0)
        cij = sp.expand((eigvec(i, lam1).T * G * eigvec(j, lam2))[0, 0])
        # polynomial in lam1, lam2 of joint degree (1,1); symmetric parts
        c11 = cij.coeff(lam1).coeff(lam2)
        c10 = cij.coeff(lam1).subs(lam2, 0)
        c01 = cij.coeff(lam2).subs(lam1, 0)
        c00 = cij.subs({lam1: 0, lam2: 0})
        check(f"cross pairing symmetric {i}{j}", sp.simplify(c10 - c01) == 0)
        red = sp.simplify(c11 * N + c10 * 2 * b + c00)
        check(f"cross pairing value {i}{j}", sp.simplify(red - cross_factor * Xg[i, j]) == 0)
print("eigenspace isotropy and cross-pairing factor: OK")

# Hermitian matrix on the K-basis (v_i, 0): entries E(b_i, P b_j) +
# sqrt(-D) E(b_i, b_j); the rational part cancels exactly and what is
# left is omega_g scaled by t1 sqrt(-D).
sq = sp.symbols("sq")            # stands for sqrt(-D)
H = sp.zeros(4, 4)
for i in range(4):
    for j in range(4):
        bi = sp.zeros(8, 1); bi[i] = 1
        bj = sp.zeros(8, 1); bj[j] = 1
        H[i, j] = sp.simplify((bi.T * G * (P * bj))[0, 0] + sq * (bi.T * G * bj)[0, 0])
check("hermitian gram entries", sp.simplify(H - t1 * sq * Xg) == sp.zeros(4, 4))
detH = sp.simplify(H.det().subs(sq ** 4, D ** 2).subs(sq ** 2, -D))
check("hermitian gram determinant", sp.simplify(detH - t1 ** 4 * c ** 4 * e ** 2 * D ** 2) == 0)
print("hermitian gram closed form: OK")

# ---------------------------------------------------------------- part 3
# rank-one worked example: t = (-1, -3, -3), c = e = 1, s = 0, m = 1/6
sub = {c: 1, e: 1, s: 0, t2: -3, t3: -3, m: sp.Rational(1, 6)}
N0, b0 = N.subs(sub), b.subs(sub)
check("example N", N0 == sp.Rational(1, 3))
check("example b", b0 == 0)
P0 = P.subs(sub)
Psi0 = 3 * P0
check("rescaled endomorphism squares to -3", sp.simplify(Psi0 * Psi0 + 3 * sp.eye(8)) == sp.zeros(8, 8))
Om = -(sp.eye(8) + Psi0) / 2
check("order three", sp.simplify(Om ** 3 - sp.eye(8)) == sp.zeros(8, 8))
check("not integral on the standard lattice", any(sp.Rational(x).q != 1 for x in Om))

# enlarged lattice: standard basis plus the half-vectors (v_i/2, g(v_i)/2)
Xg0 = Xg.subs(sub)
gens = sp.zeros(12, 8)
gens[0:8, 0:8] = 2 * sp.eye(8)   # generators of 2L: 2 Z^8 and (v_i, g v_i)
for i in range(4):
    gens[8 + i, i] = 1
    gens[8 + i, 4:8] = Xg0[:, i].T
from sympy.matrices.normalforms import hermite_normal_form
Hnf = hermite_normal_form(sp.Matrix(gens).T)   # column-style HNF of the span
d = abs(Hnf.det())
check("index of standard lattice in enlarged one", sp.Integer(256) / d == 16)
# basis of L: columns of Hnf / 2
BL = Hnf / 2
BLi = BL.inv()
check("enlarged lattice preserved", all(sp.Rational(x).q == 1 for x in BLi * Om * BL))
check("half scaling lands in standard lattice", all(sp.Rational(2 * x).q == 1 for x in BL))
print("rank-one worked example (index 16, order-3 symmetry): OK")

# ---------------------------------------------------------------- part 4
# sign twist in the spinor embedding: i_eps(omega + x zeta*) =
# (-1)^eps x / (2(n+1)) + omega + ((-1)^eps x / 2) tau.  For a graph
# period the annihilator of the embedded spinor must be the graph of f;
# that pins eps = 0.
def popcount(mask):
    return bin(mask).count("1")

def wedge_masks(a_, b_):
    if a_ & b_:
        return 0, 0
    sign = 1
    for i in range(4):
        if b_ >> i & 1 and popcount(a_ >> (i + 1)) % 2:
            sign = -sign
    return sign, a_ | b_

def contract(l, elem):
    # interior product of a covector (list of 4 coeffs) with an element
    out = {}
    for mask, coeff in elem.items():
        for pos in range(4):
            if not (mask >> pos & 1):
                continue
            before = popcount(mask & ((1 << pos) - 1))
            nm = mask & ~(1 << pos)
            val = coeff * l[pos] * (-1) ** before
            if val:
                out[nm] = out.get(nm, 0) + val
    return {k: v for k, v in out.items() if v}

def wedge(e1, e2):
    out = {}
    for m1, c1 in e1.items():
        for m2, c2 in e2.items():
            sg, mm = wedge_masks(m1, m2)
            if sg:
                out[mm] = out.get(mm, 0) + sg * c1 * c2
    return {k: v for k, v in out.items() if v}

def solve_kernel(rows):
    # exact kernel basis of a rational matrix given as list of rows
    import copy
    rs = [list(map(Fr, r)) for r in rows]
    ncol = len(rs[0])
    piv = []
    r = 0
    for col in range(ncol):
        sel = None
        for i in range(r, len(rs)):
            if rs[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        rs[r], rs[sel] = rs[sel], rs[r]
        pv = rs[r][col]
        rs[r] = [x / pv for x in rs[r]]
        for i in range(len(rs)):
            if i != r and rs[i][col] != 0:
                f = rs[i][col]
                rs[i] = [a - f * bb for a, bb in zip(rs[i], rs[r])]
        piv.append(col)
        r += 1
    free = [cidx for cidx in range(ncol) if cidx not in piv]
    basis = []
    for fc in free:
        vec = [Fr(0)] * ncol
        vec[fc] = Fr(1)
        for ri, pc in enumerate(piv):
            vec[pc] = -rs[ri][fc]
        basis.append(vec)
    return basis

def span_eq(b1, b2):
    # both lists of rational vectors; compare row spans via rref
    def rref(rows):
        rs = [list(r) for r in rows]
        ncol = len(rs[0])
        r = 0
        for colx in range(ncol):
            sel = None
            for i in range(r, len(rs)):
                if rs[i][colx] != 0:
                    sel = i
                    break
            if sel is None:
                continue
            rs[r], rs[sel] = rs[sel], rs[r]
            pv = rs[r][colx]
            rs[r] = [x / pv for x in rs[r]]
            for i in range(len(rs)):
                if i != r and rs[i][colx] != 0:
                    f = rs[i][colx]
                    rs[i] = [a - f * bb for a, bb in zip(rs[i], rs[r])]
            r += 1
        return [row for row in rs[:r]]
    return rref(b1) == rref(b2)

for n, theta in ((2, (Fr(-1), Fr(-3), Fr(-3))), (3, (Fr(-72), Fr(-288), Fr(-288)))):
    u1, u2, u3 = theta
    p = Fr(2)
    q = u1 / (u2 * p)                 # pfaffian of f equals u1/u2
    # omega_f = p v1*^v2* + q v3*^v4*; f(v_j) = sum_i M_ij v_i*
    M = [[0, p, 0, 0], [-p, 0, 0, 0], [0, 0, 0, q], [0, 0, -q, 0]]
    iota_o = {0b1100: p, 0b0011: q}   # degree-2 duality image of omega_f
    x = -2 * u3                       # zeta*-coefficient of the period
    eta = {k: u2 * v for k, v in iota_o.items()}
    results = {}
    for eps in (0, 1):
        alpha = Fr((-1) ** eps) * x / (2 * (n + 1))
        beta = Fr((-1) ** eps) * x / 2
        # annihilator: alpha v + iota_l eta = 0 and eta ^ v + beta iota_l vol = 0
        rows = []
        for comp in range(4):          # degree-1 component equations
            row = [Fr(0)] * 8
            row[comp] += alpha
            for lpos in range(4):
                l = [Fr(0)] * 4
                l[lpos] = Fr(1)
                row[4 + lpos] += contract(l, eta).get(1 << comp, Fr(0))
            rows.append(row)
        deg3 = [m_ for m_ in range(16) if popcount(m_) == 3]
        vol = {0b1111: Fr(1)}
        for comp in deg3:              # degree-3 component equations
            row = [Fr(0)] * 8
            for vpos in range(4):
                row[vpos] += wedge(eta, {1 << vpos: Fr(1)}).get(comp, Fr(0))
            for lpos in range(4):
                l = [Fr(0)] * 4
                l[lpos] = Fr(1)
                row[4 + lpos] += beta * contract(l, vol).get(comp, Fr(0))
            rows.append(row)
        ker = solve_kernel(rows)
        graph = []
        for j in range(4):
            vrow = [Fr(0)] * 8
            vrow[j] = Fr(1)
            for i in range(4):
                vrow[4 + i] = Fr(M[i][j])
            graph.append(vrow)
        results[eps] = (len(ker) == 4) and span_eq(ker, graph)
    check(f"embedding twist resolves to 0 at n={n}", results[0] and not results[1])
print("spinor embedding twist: eps = 0 for n = 2, 3 (twisted variant fails): OK")

print("ALL ENDOMORPHISM ORACLE CHECKS PASSED")
