#!/usr/bin/env python3
"""Independent pure-Python exterior-algebra oracle.

Builds the rank-4 Grassmann algebra and its tensor powers from scratch
(fractions only), then:
  * solves the defining linear system for the degree-2 duality map iota
    and freezes its signed-permutation table,
  * validates the product-manifold expansion backend (the omega cutting
    class and the 1/m! normalization) against the closed intersection
    formulas, before any C++ exists,
  * computes the odd-pairing sample integrals frozen into the unit tests,
  * solves the annihilator system for sample even spinors and checks the
    graph/pfaffian structure of the resulting 4-dim isotropic subspace.
"""

from fractions import Fraction as Fr
from itertools import combinations
import sys

def check(label, got, want):
    if got != want:
        print(f"FAIL {label}: got {got!r}, want {want!r}")
        sys.exit(1)

# ------------------------------------------------------------ exterior core
# elements: dict mask -> Fraction, masks over bits 0..3 for generators 1..4

def popcount(m):
    return bin(m).count("1")

def wedge_masks(a, b):
    """sign and mask of e_a ^ e_b, 0 if sharing a generator"""
    if a & b:
        return 0, 0
    # count inversions: for each bit of b, generators of a above it
    sign = 1
    for i in range(4):
        if b >> i & 1:
            higher = a >> (i + 1)
            if popcount(higher) % 2:
                sign = -sign
    return sign, a | b

def wmul(x, y):
    r = {}
    for ma, ca in x.items():
        for mb, cb in y.items():
            s, m = wedge_masks(ma, mb)
            if s:
                r[m] = r.get(m, Fr(0)) + s * ca * cb
    return {m: c for m, c in r.items() if c != 0}

def wadd(x, y):
    r = dict(x)
    for m, c in y.items():
        r[m] = r.get(m, Fr(0)) + c
    return {m: c for m, c in r.items() if c != 0}

def wscale(x, k):
    return {m: c * k for m, c in x.items() if c * k != 0}

def gen(i):  # generator 1..4
    return {1 << (i - 1): Fr(1)}

def mono(idxs):
    r = {0: Fr(1)}
    for i in idxs:
        r = wmul(r, gen(i))
    return r

def top_coeff(x):
    return x.get(0b1111, Fr(0))

# dual-side pairing in the determinant convention:
# <e*_S, e_T> = delta_{S,T} on same-degree masks
def pair_dual(xd, y):
    s = Fr(0)
    for m, c in xd.items():
        s += c * y.get(m, Fr(0))
    return s

def contract(l, x):
    """interior product of covector l (dict mask(single-bit)->Fr) into x"""
    r = {}
    for m, c in x.items():
        for i in range(4):
            if not (m >> i & 1):
                continue
            li = l.get(1 << i, Fr(0))
            if li == 0:
                continue
            below = m & ((1 << i) - 1)
            sgn = -1 if popcount(below) % 2 else 1
            nm = m & ~(1 << i)
            r[nm] = r.get(nm, Fr(0)) + sgn * li * c
    return {m: c for m, c in r.items() if c != 0}

# ---------------------------------------------------------------- iota map
# defined by: top_coeff(iota(x) ^ z) = <x, z> for all z of degree 2,
# where x lives on the dual side. Solve the 6x6 system per basis vector.
deg2 = [m for m in range(16) if popcount(m) == 2]

def solve_linear(A, b):
    """exact Gaussian elimination; A list of rows, b vector"""
    n = len(A)
    M = [row[:] + [b[i]] for i, row in enumerate(A)]
    col = 0
    pivots = []
    for col in range(n):
        piv = next((r for r in range(len(pivots), n) if M[r][col] != 0), None)
        if piv is None:
            continue
        r0 = len(pivots)
        M[r0], M[piv] = M[piv], M[r0]
        M[r0] = [v / M[r0][col] for v in M[r0]]
        for r in range(n):
            if r != r0 and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * bb for a, bb in zip(M[r], M[r0])]
        pivots.append(col)
    x = [Fr(0)] * n
    for r, c in enumerate(pivots):
        x[c] = M[r][n]
    return x

iota_table = {}
for S in deg2:
    # unknowns: coefficients of iota(e*_S) on deg2 masks
    A = []
    b = []
    for Z in deg2:
        row = []
        for T in deg2:
            s, m = wedge_masks(T, Z)
            row.append(Fr(s) if m == 0b1111 else Fr(0))
        A.append(row)
        b.append(Fr(1) if Z == S else Fr(0))
    sol = solve_linear(A, b)
    nz = {deg2[i]: sol[i] for i in range(6) if sol[i] != 0}
    check(f"iota(e*_{S:04b}) monomial", len(nz), 1)
    iota_table[S] = nz

def shuffle_sign(A, B):
    """sign of the permutation (sorted A, sorted B) of 1..4"""
    seq = sorted(A) + sorted(B)
    sgn = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sgn = -sgn
    return sgn

def mask_set(m):
    return [i + 1 for i in range(4) if m >> i & 1]

print("iota table:")
for S in deg2:
    ((m, c),) = iota_table[S].items()
    comp = 0b1111 & ~S
    check(f"iota({S:04b}) complement", m, comp)
    check(f"iota({S:04b}) sign", c, Fr(shuffle_sign(mask_set(comp), mask_set(S))))
    print(f"  iota(e*{mask_set(S)}) = {'+' if c > 0 else '-'} e{mask_set(m)}")

# involution: applying the same signed table twice is the identity
for S in deg2:
    ((m, c),) = iota_table[S].items()
    ((m2, c2),) = iota_table[m].items()
    check("iota involution", (m2, c * c2), (S, Fr(1)))
print("iota is an involution: OK")

# expected signed table (shuffle-sign closed form), frozen for C++:
#   12->+34, 13->-24, 14->+23, 23->+14, 24->-13, 34->+12
expect = {0b0011: (0b1100, 1), 0b0101: (0b1010, -1), 0b1001: (0b0110, 1),
          0b0110: (0b1001, 1), 0b1010: (0b0101, -1), 0b1100: (0b0011, 1)}
for S, (m, c) in expect.items():
    check(f"iota frozen {S:04b}", iota_table[S], {m: Fr(c)})
print("iota frozen table OK")

# -------------------------------------------- duality basis and odd bridge
# w_i = (-1)^i * (ascending generator monomial omitting i); then the
# surface integral of w_i ^ eta_j is delta_ij.
def w_basis(i):
    idxs = [j for j in (1, 2, 3, 4) if j != i]
    return wscale(mono(idxs), Fr((-1) ** i))

for i in (1, 2, 3, 4):
    for j in (1, 2, 3, 4):
        v = top_coeff(wmul(w_basis(i), gen(j)))
        check(f"duality basis <w_{i}, eta_{j}>", v, Fr(1 if i == j else 0))
print("duality basis w_i = (-1)^i (monomial omitting i): OK")

# bridged wedge of two degree-3 monomials: for i0 < j0,
# inverse-iota of (monomial omitting i0) ^ (monomial omitting j0)
# equals minus the product of the two complementary generators.
def eps(i0):
    return mono([j for j in (1, 2, 3, 4) if j != i0])

for i0, j0 in combinations((1, 2, 3, 4), 2):
    h0, k0 = [x for x in (1, 2, 3, 4) if x not in (i0, j0)]
    lhs = wmul(eps(i0), gen(j0))  # eps_{i0} ^ eta_{j0} spans top... not used
    # compute eps_{i0} ^ eps_{j0} in the w-coordinates first:
    # w_{i0} ^ w_{j0} = (-1)^{i0+j0} eps_{i0} ^ eps_{j0}; but we check the
    # monomial statement directly through iota^{-1} on the v-side:
    prod = wmul(wscale(eps(i0), 1), wscale(eps(j0), 1))
    # both are degree 3: product is zero in rank 4 -- the bridge acts on
    # the *abstract* wedge of H^3, i.e. on v-coordinates. Translate:
    # eps_i = (-1)^i v_i, so eps_{i0} wedge eps_{j0} "=" (-1)^{i0+j0} v_{i0} ^ v_{j0}.
    vmask = (1 << (i0 - 1)) | (1 << (j0 - 1))
    coeff = Fr((-1) ** (i0 + j0))
    # iota^{-1} on the v-side has the same signed table (involution):
    ((dm, dc),) = iota_table[vmask].items()
    bridged = {dm: dc * coeff}
    want = wscale(wmul(gen(h0), gen(k0)), Fr(-1))
    check(f"bridge ({i0},{j0})", bridged, want)
print("bridged wedge: iota^{-1}(eps_i0 ^ eps_j0) = -eta_h0 ^ eta_k0 for i0<j0: OK")

# --------------------------------------------------------- tensor expansion
class Tensor:
    __slots__ = ("r", "t")
    def __init__(self, r, t=None):
        self.r = r
        self.t = t or {}
    @staticmethod
    def slot(r, a, x):
        """pullback of x into slot a (0-based), units elsewhere"""
        res = Tensor(r)
        for m, c in x.items():
            key = [0] * r
            key[a] = m
            res.t[tuple(key)] = c
        return res
    def add(self, o):
        res = Tensor(self.r, dict(self.t))
        for k, c in o.t.items():
            res.t[k] = res.t.get(k, Fr(0)) + c
            if res.t[k] == 0:
                del res.t[k]
        return res
    def mul(self, o):
        res = Tensor(self.r)
        for ka, ca in self.t.items():
            dega = [popcount(m) for m in ka]
            suffa = [0] * (self.r + 1)
            for i in range(self.r - 1, -1, -1):
                suffa[i] = suffa[i + 1] + dega[i]
            for kb, cb in o.t.items():
                sgn = 1
                key = []
                ok = True
                for i in range(self.r):
                    s, m = wedge_masks(ka[i], kb[i])
                    if s == 0:
                        ok = False
                        break
                    # Koszul: move kb[i] past ka[i+1..]
                    if popcount(kb[i]) % 2 and suffa[i + 1] % 2:
                        sgn = -sgn
                    sgn *= s
                    key.append(m)
                if not ok:
                    continue
                k = tuple(key)
                res.t[k] = res.t.get(k, Fr(0)) + sgn * ca * cb
                if res.t[k] == 0:
                    del res.t[k]
        return res
    def integrate(self):
        return self.t.get(tuple([0b1111] * self.r), Fr(0))

def sum_slots(r, x):
    res = Tensor(r)
    for a in range(r):
        res = res.add(Tensor.slot(r, a, x))
    return res

def fact(k):
    r = 1
    for i in range(2, k + 1):
        r *= i
    return r

def product_integral(n, factors):
    """integral over the 2n-dim variety of a product of diagonal-type
    classes of surface classes, via the m = n+1 fold expansion with the
    cutting class."""
    m = n + 1
    acc = Tensor(m, {tuple([0] * m): Fr(1)})
    for x in factors:
        acc = acc.mul(sum_slots(m, x))
    for s in (1, 2, 3, 4):
        acc = acc.mul(sum_slots(m, gen(s)))
    return acc.integrate() / fact(m)

gamma = wadd(mono([1, 2]), mono([3, 4]))
v = product_integral(2, [gamma] * 4)
check("expansion: gamma^4, n=2", v, Fr(36))
print("expansion backend vs closed form: gamma^4 (q=2, n=2) ->", v)

v324 = product_integral(2, [wadd(mono([1, 2]), wscale(mono([3, 4]), -1))] * 4)
# q(eta12 - eta34) = -2: closed form 3*3*(-2)^2 = 36 as well
check("expansion: q=-2 class, n=2", v324, Fr(36))

alpha = mono([1, 2, 4])
alphap = mono([1, 2, 3])
v1 = product_integral(2, [alpha, alphap, gamma])
check("expansion: odd-odd-even n=2", v1, Fr(1))
print("expansion: alpha=eta124, alpha'=eta123, gamma=eta12+eta34, n=2 ->", v1)

# closed-form route for the same value:
# -(2n-3)!! * (integral of bridged-wedge ^ gamma) * (integral gamma^2)^(n-2)
brid = {0b0011: Fr(-1)}  # -eta1^eta2 from the bridge table (i0=3, j0=4)
p_val = top_coeff(wmul(brid, gamma))
check("bridge pairing p", p_val, Fr(-1))
check("closed route n=2", -Fr(1) * p_val * Fr(1), v1)

v3 = product_integral(3, [alpha, alphap, gamma, gamma, gamma])
check("expansion: odd-odd-even^3 n=3", v3, Fr(6))
print("expansion: same classes with gamma^3, n=3 ->", v3)
# closed: -(2*3-3)!! * p * q^(3-2) = -3 * (-1) * 2 = 6  OK

v3b = product_integral(3, [gamma] * 6)
check("expansion: gamma^6 n=3", v3b, Fr(480))
print("expansion: gamma^6 (q=2, n=3) ->", v3b, "(= 4*15*2^3)")

# mixed Fujiki polarization sample, n=2: x1=x2=gamma, x3=x4=delta
delta = wadd(mono([1, 3]), wscale(mono([2, 4]), -1))  # q(delta) = 2... check below
qdelta = 2 * top_coeff(wmul(delta, delta)) / 2  # vol(delta^2) = q by BBF on A-side
# BBF on the surface part: (a,b) = integral a^b; q(delta) = integral delta^2
qd = top_coeff(wmul(delta, delta))
print("q(delta) =", qd)
vmix = product_integral(2, [gamma, gamma, delta, delta])
# Fujiki polarization: 3 * [ (g,g)(d,d) + 2 (g,d)^2 ]
gg = top_coeff(wmul(gamma, gamma))
dd = qd
gd = top_coeff(wmul(gamma, delta))
check("mixed Fujiki n=2", vmix, 3 * (gg * dd + 2 * gd * gd))
print("mixed polarized sample n=2:", vmix, "= 3[(g,g)(d,d)+2(g,d)^2] with",
      (gg, dd, gd))

# ----------------------------------------------------- spinor annihilators
# even spinor x = a + eta + b*vol with eta = v1^v2 + t v3^v4 and b = t*a
# (isotropic). The annihilator in V + V* is the graph of a skew map f with
# omega_f = -a v1*^v2* - (a/t) v3*^v4*.
def spinor_kernel(a, t):
    b = t / a  # isotropy: vol(eta^eta) = 2ab, eta^eta = 2t vol
    eta = wadd(mono([1, 2]), wscale(mono([3, 4]), t))
    # unknowns: v coords c1..c4, l coords d1..d4
    rows = []
    rhs = []
    # deg-1 block: a*v + contract(l, eta) = 0   (4 equations, coords e_i)
    for i in range(4):
        row = [Fr(0)] * 8
        row[i] = a
        for j in range(4):
            l = {1 << j: Fr(1)}
            val = contract(l, eta).get(1 << i, Fr(0))
            row[4 + j] = val
        rows.append(row)
        rhs.append(Fr(0))
    # deg-3 block: v ^ eta + contract(l, b*vol) = 0 (4 equations, deg-3 masks)
    deg3 = [m for m in range(16) if popcount(m) == 3]
    for m3 in deg3:
        row = [Fr(0)] * 8
        for i in range(4):
            val = wmul({1 << i: Fr(1)}, eta).get(m3, Fr(0))
            row[i] = val
        for j in range(4):
            l = {1 << j: Fr(1)}
            val = contract(l, {0b1111: b}).get(m3, Fr(0))
            row[4 + j] = val
        rows.append(row)
        rhs.append(Fr(0))
    # kernel via rref
    M = [r[:] for r in rows]
    ncols = 8
    pivots = []
    prow = 0
    for col in range(ncols):
        piv = next((r for r in range(prow, len(M)) if M[r][col] != 0), None)
        if piv is None:
            continue
        M[prow], M[piv] = M[piv], M[prow]
        M[prow] = [x / M[prow][col] for x in M[prow]]
        for r in range(len(M)):
            if r != prow and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x1 - f * x2 for x1, x2 in zip(M[r], M[prow])]
        pivots.append(col)
        prow += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vvec = [Fr(0)] * ncols
        vvec[fc] = Fr(1)
        for r, pc in enumerate(pivots):
            vvec[pc] = -M[r][fc]
        basis.append(vvec)
    return basis

for (a, t) in [(Fr(1), Fr(1)), (Fr(1), Fr(3)), (Fr(2), Fr(-5, 2))]:
    B = spinor_kernel(a, t)
    check(f"kernel dim a={a} t={t}", len(B), 4)
    # graph over V: the v-coordinates of the basis span 4 dims
    # extract f: solve for each std vector
    import copy
    # matrix with columns = basis vectors; find combo with v-part = e_i
    # simpler: rref over v-part
    f_cols = {}
    for i in range(4):
        # solve sum_k x_k B[k][0:4] = e_i
        A = [[B[k][r] for k in range(4)] for r in range(4)]
        bvec = [Fr(1) if r == i else Fr(0) for r in range(4)]
        xs = solve_linear(A, bvec)
        lpart = [sum(xs[k] * B[k][4 + r] for k in range(4)) for r in range(4)]
        f_cols[i] = lpart
    # omega entries: omega(v_i, v_j) = f(v_j)(v_i) ... with the convention
    # f(v)(w) = omega(w, v):  omega_ij = f(v_j) evaluated at v_i
    om12 = f_cols[1][0]
    om34 = f_cols[3][2]
    om13 = f_cols[2][0]
    check(f"omega12 a={a} t={t}", om12, -a)
    check(f"omega34 a={a} t={t}", om34, -a / t)
    check(f"omega13 a={a} t={t}", om13, Fr(0))
    # skewness of f as a map: f(v_i)(v_j) = -f(v_j)(v_i)
    for i in range(4):
        for j in range(4):
            check("skew f", f_cols[i][j], -f_cols[j][i] if i != j else Fr(0))
    # the quadric q((v,l)) = 2 l(v) vanishes pairwise on the kernel
    for x in B:
        for y in B:
            val = sum(x[4 + r] * y[r] + y[4 + r] * x[r] for r in range(4))
            check("isotropic kernel", val, Fr(0))
    # pfaffian of omega_f = (-a)(-a/t) = a^2/t; on the distinguished locus
    # (n+1)a = b = t*a, i.e. t = n+1, this is a/(n+1) -> 1/(n+1) for a=1
    pf = om12 * om34
    check(f"pfaffian a={a} t={t}", pf, a * a / t)
    print(f"spinor kernel a={a}, t={t}: dim 4, graph of skew f, "
          f"omega = -{a} e12* - {a}/{t} e34*, Pf = {pf}")

print("ALL EXTERIOR ORACLE CHECKS PASSED")
