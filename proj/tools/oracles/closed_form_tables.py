#!/usr/bin/env python3
"""Independent exact-arithmetic oracle for the double-factorial identity,
the Fujiki-type intersection numbers, the sigma/xi intersection table,
the dual-form power integrals, the theta constants, and the 2x2
coefficient systems.  Everything here is computed with Fraction only,
from the closed formulas, with internal cross-checks between
independent routes.  Output is frozen into the C++ test data."""

from fractions import Fraction as Fr
from math import comb
import sys

def df(n: int) -> int:
    # double factorial with 0!! = (-1)!! = 1
    if n <= 0:
        return 1
    r = 1
    while n > 0:
        r *= n
        n -= 2
    return r

def check(label, got, want):
    if got != want:
        print(f"FAIL {label}: got {got}, want {want}")
        sys.exit(1)

# ---------------------------------------------------------------- identity
# sum_{i=0}^{l} C(l,i) (2i+2k)!!/(2k)!! (2n-2i-1)!!/(2n-2l-1)!!
#   == (2n+2k+1)!!/(2n-2l+2k+1)!!
def identity_lhs(k, l, n):
    s = Fr(0)
    for i in range(l + 1):
        s += Fr(comb(l, i)) * Fr(df(2*i + 2*k), df(2*k)) * Fr(df(2*n - 2*i - 1), df(2*n - 2*l - 1))
    return s

def identity_rhs(k, l, n):
    return Fr(df(2*n + 2*k + 1), df(2*n - 2*l + 2*k + 1))

fails = 0
for n in range(0, 9):
    for l in range(0, min(n, 6) + 1):
        for k in range(0, 7):
            if identity_lhs(k, l, n) != identity_rhs(k, l, n):
                print(f"identity FAIL k={k} l={l} n={n}")
                fails += 1
check("identity grid", fails, 0)
check("identity sample (k=0,l=1,n=1)", identity_rhs(0, 1, 1), Fr(3))
check("identity sample (k=2,l=3,n=4)", identity_rhs(2, 3, 4), Fr(df(13), df(7)))
print("identity: all k<=6, l<=min(n,6), n<=8 OK;",
      "sample (0,1,1) ->", identity_rhs(0, 1, 1),
      "; sample (2,3,4) ->", identity_rhs(2, 3, 4))

# ---------------------------------------------------------------- Fujiki
def fujiki_top(n, q):
    # integral of a^(2n) = (n+1)(2n-1)!! q(a)^n
    return Fr(n + 1) * df(2*n - 1) * Fr(q)**n

check("fujiki n=2 q=2", fujiki_top(2, 2), 36)
check("fujiki n=2 q=-6", fujiki_top(2, -6), 324)
check("fujiki n=3 q=-8", fujiki_top(3, -8), -30720)
print("fujiki: n=2 q=2 ->", fujiki_top(2, 2), "; n=2 q=-6 ->", fujiki_top(2, -6),
      "; n=3 q=-8 ->", fujiki_top(3, -8))

# --------------------------------------------------- sigma/xi power table
# integral over the 2n-fold: sigma^i xi^(2n-2i)
#   = (n+1) * (1/2) i! (i+2)(i+1) (-2(n+1))^(n-i) (2n-2i-1)!!
import math
def sigma_xi(n, i):
    return Fr(n + 1) * Fr(1, 2) * math.factorial(i) * (i + 2) * (i + 1) \
        * Fr(-2 * (n + 1))**(n - i) * df(2*n - 2*i - 1)

tbl2 = [sigma_xi(2, i) for i in range(3)]
tbl3 = [sigma_xi(3, i) for i in range(4)]
check("sigma/xi n=2", tbl2, [Fr(324), Fr(-54), Fr(36)])
check("sigma/xi n=3", tbl3, [Fr(-30720), Fr(2304), Fr(-384), Fr(240)])
print("sigma_xi n=2:", tbl2)
print("sigma_xi n=3:", tbl3)

# xi^(2n) must also be the Fujiki value with q(xi) = -2(n+1)
check("xi^4 vs fujiki", tbl2[0], fujiki_top(2, -6))
check("xi^6 vs fujiki", tbl3[0], fujiki_top(3, -8))

# ----------------------------------------------------- dual-form integrals
# integral q_dual^l gamma^(2n-2l)
#   = (n+1) (2n+5)!!/(2n+5-2l)!! (2n-2l-1)!! q(gamma)^(n-l)
def qdual_power(n, l, q):
    return Fr(n + 1) * Fr(df(2*n + 5), df(2*n + 5 - 2*l)) * df(2*n - 2*l - 1) * Fr(q)**(n - l)

# independent route: q_dual = 2 sigma - xi^2/(2(n+1)), expand binomially
# against the sigma/xi table, with gamma = xi, q(xi) = -2(n+1)
def qdual_power_expanded_xi(n, l):
    s = Fr(0)
    for j in range(l + 1):
        s += comb(l, j) * Fr(2)**j * (Fr(-1, 2 * (n + 1)))**(l - j) * sigma_xi(n, j)
    return s

for n in (2, 3):
    for l in range(n + 1):
        a = qdual_power(n, l, -2 * (n + 1))
        b = qdual_power_expanded_xi(n, l)
        check(f"qdual n={n} l={l} xi-route", a, b)

vals2 = [qdual_power(2, l, -6) for l in range(3)]
vals3 = [qdual_power(3, l, -8) for l in range(4)]
check("qdual n=2 (gamma=xi)", vals2, [Fr(324), Fr(-162), Fr(189)])
check("qdual n=3 (gamma=xi)", vals3, [Fr(-30720), Fr(8448), Fr(-3168), Fr(2772)])
print("qdual powers, gamma=xi, n=2:", vals2)
print("qdual powers, gamma=xi, n=3:", vals3)
q2gamma2 = [qdual_power(2, l, 2) for l in range(3)]
q3gamma2 = [qdual_power(3, l, 2) for l in range(4)]
print("qdual powers, q(gamma)=2, n=2:", q2gamma2)
print("qdual powers, q(gamma)=2, n=3:", q3gamma2)

# --------------------------------------------------------- theta constants
# theta1(n) = -2^(n-2) (n+1)^(n-2) (2n+3)!!/7!!,  theta2 = (n+1) theta1,
# |theta3| = |theta2|
def theta1(n):
    return -Fr(2)**(n - 2) * Fr(n + 1)**(n - 2) * Fr(df(2*n + 3), df(7))

thetas = {n: (theta1(n), (n + 1) * theta1(n), abs((n + 1) * theta1(n))) for n in range(2, 6)}
check("theta n=2", thetas[2], (Fr(-1), Fr(-3), Fr(3)))
check("theta n=3", thetas[3], (Fr(-72), Fr(-288), Fr(288)))
check("theta n=4", thetas[4], (Fr(-9900), Fr(-49500), Fr(49500)))
check("theta n=5", thetas[5], (Fr(-2223936), Fr(-13343616), Fr(13343616)))
for n, t in thetas.items():
    print(f"theta n={n}:", t)

# theta1 * theta2 = 2 m theta3^2 with m = 1/(2(n+1))  (second relation)
for n in range(2, 6):
    t1, t2, t3a = thetas[n]
    m = Fr(1, 2 * (n + 1))
    check(f"theta relation n={n}", t1 * t2, 2 * m * t3a * t3a)
print("theta relation t1*t2 = 2m*t3^2: OK for n=2..5")

# ------------------------------------------------------- coefficient system
# system rows (after normalizing the common integrals to 1):
#   row1: L1 = (n+1)(2n+5)(2n-3)!! C - 2(n+1)^2 (2n-3)!! D
#   row2: L2 = -2(n+1)^2(2n+5)(2n-5)!! C + 12 (n+1)^3 (2n-5)!! D
# first kind:  L1 = -(2n-3)!!,  L2 = 2(n+1)(2n-5)!!
# second kind: both left sides multiplied by 4(n+1)
def solve_cd(n, kind):
    a11 = Fr(n + 1) * (2*n + 5) * df(2*n - 3)
    a12 = Fr(-2) * (n + 1)**2 * df(2*n - 3)
    a21 = Fr(-2) * (n + 1)**2 * (2*n + 5) * df(2*n - 5)
    a22 = Fr(12) * (n + 1)**3 * df(2*n - 5)
    l1 = Fr(-df(2*n - 3))
    l2 = Fr(2 * (n + 1) * df(2*n - 5))
    if kind == 2:
        l1 *= 4 * (n + 1)
        l2 *= 4 * (n + 1)
    det = a11 * a22 - a12 * a21
    C = (l1 * a22 - a12 * l2) / det
    D = (a11 * l2 - l1 * a21) / det
    return C, D

for n in (3, 4, 5):
    C1, D1 = solve_cd(n, 1)
    C2, D2 = solve_cd(n, 2)
    check(f"C1 n={n}", C1, Fr(-1, (n + 1) * (2*n + 5)))
    check(f"D1 n={n}", D1, Fr(0))
    check(f"C2 n={n}", C2, Fr(-4, 2*n + 5))
    check(f"D2 n={n}", D2, Fr(0))
    print(f"solve n={n}: first kind ({C1}, {D1}), second kind ({C2}, {D2})")

# ------------------------------------------------- odd-part closed values
# mu3 mu3 pairing against mu2^(2n-3): -(2n-3)!! * p * q^(n-2)
# (p = pairing integral of the bridged wedge with gamma, q = gamma square)
def mu3mu3_mu(n, p, q):
    return -Fr(df(2*n - 3)) * p * Fr(q)**(n - 2)

def mu3mu3_mu_xi2(n, p, q):
    return Fr(2) * (n + 1) * df(2*n - 5) * p * Fr(q)**(n - 3)

def nu3nu3_mu(n, p, q):
    return -Fr(4) * (n + 1) * df(2*n - 3) * p * Fr(q)**(n - 2)

def nu3nu3_mu_xi2(n, p, q):
    return Fr(8) * (n + 1)**2 * df(2*n - 5) * p * Fr(q)**(n - 3)

# frozen spot values used by the unit tests (p = -1, q = 2 sample data)
print("mu3mu3 n=2 (p=-1,q=2):", mu3mu3_mu(2, Fr(-1), 2))
print("mu3mu3 n=3 (p=-1,q=2):", mu3mu3_mu(3, Fr(-1), 2))
print("mu3mu3xi2 n=3 (p=-1,q=2):", mu3mu3_mu_xi2(3, Fr(-1), 2))
print("nu3nu3 n=2 (p=1,q=2):", nu3nu3_mu(2, Fr(1), 2))
print("nu3nu3 n=3 (p=1,q=2):", nu3nu3_mu(3, Fr(1), 2))
print("nu3nu3xi2 n=3 (p=1,q=2):", nu3nu3_mu_xi2(3, Fr(1), 2))

# grand closed form: mu3 mu3 against qbar^(n-2) mu2(gamma) equals
# theta1(n) * p, with qbar = 2(n+1) q_dual
# consistency with the n=3 ring route is checked in C++; here we freeze
# the expansion of qbar^(n-2) coefficients for n=3:
#   qbar = 2(n+1)(2 sigma) - xi^2, n=3: 16 sigma - xi^2
print("qbar n=3 expansion: 16*sigma - xi^2")

print("ALL CLOSED-FORM ORACLE CHECKS PASSED")
