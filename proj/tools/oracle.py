#!/usr/bin/env python3
"""Offline high-precision reference generator for the test suite.

Computes, with mpmath at 50 significant digits, every frozen numeric value
asserted by the C++ tests: foundation constants, the comparison-constant
ledger for several eps0 values, exact arc lengths for pinned pants metrics,
collar decompositions, the deterministic grid infimum of middle segments,
and the boundary-halving divergence table.

This script is the only place extended precision is used; the library itself
is plain IEEE binary64.  Run it offline and paste the printed digits into the
tests (they are asserted with tolerances >= 1e-12 relative, so libm ulp
differences never matter).

Usage: python3 tools/oracle.py
"""

import mpmath as mp

mp.mp.dps = 50

E = mp.e
LN2 = mp.log(2)

EPS0_PRIME = mp.log(1 + mp.sqrt(2))
EPS_STAR = EPS0_PRIME / E
C0_PRIME = EPS0_PRIME / 2
M0_PAPER = 8 / EPS0_PRIME

GRID_MIN = mp.mpf("1e-6")
GRID_POINTS = 16


def fmt(x, digits=20):
    return mp.nstr(mp.mpf(x), digits, strip_zeros=False)


def show(name, value):
    print(f"{name:44s} = {fmt(value)}")


# ---------------------------------------------------------------------------
# Elementary lengths
# ---------------------------------------------------------------------------

def pentagon_side(a, b):
    return mp.acosh(mp.sinh(a) * mp.sinh(b))


def hexagon_side(a, b, c):
    return mp.acosh((mp.cosh(c) + mp.cosh(a) * mp.cosh(b)) /
                    (mp.sinh(a) * mp.sinh(b)))


def eta(x):
    return mp.asinh(1 / mp.sinh(x / 2))


def seam_length(l, i, j):
    k = 3 - i - j  # indices 0,1,2
    return hexagon_side(l[i] / 2, l[j] / 2, l[k] / 2)


def loop_split(l, i):
    """Foot split t of the loop arc around boundary i: the unique root of
    cosh(l_j/2)/sinh(t) = cosh(l_k/2)/sinh(l_i/2 - t) in (0, l_i/2)."""
    j, k = [m for m in range(3) if m != i]
    half = l[i] / 2
    cj, ck = mp.cosh(l[j] / 2), mp.cosh(l[k] / 2)

    def g(t):
        return cj / mp.sinh(t) - ck / mp.sinh(half - t)

    lo, hi = half * mp.mpf("1e-30"), half * (1 - mp.mpf("1e-30"))
    for _ in range(220):
        mid = (lo + hi) / 2
        if g(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def loop_length(l, i):
    j = [m for m in range(3) if m != i][0]
    t = loop_split(l, i)
    return 2 * mp.asinh(mp.cosh(l[j] / 2) / mp.sinh(t))


def inner_boundary_offset(li):
    """Collar segment d: push boundary i inward until the offset curve has
    length EPS0_PRIME; zero when the boundary is already >= EPS_STAR."""
    if li >= EPS_STAR:
        return mp.mpf(0)
    return mp.acosh(EPS0_PRIME / li)


def seam_middle(l, i, j):
    return seam_length(l, i, j) - inner_boundary_offset(l[i]) - inner_boundary_offset(l[j])


def loop_middle(l, i):
    return loop_length(l, i) - 2 * inner_boundary_offset(l[i])


# ---------------------------------------------------------------------------
# Constant ledger (must mirror the C++ build_ledger formula for formula)
# ---------------------------------------------------------------------------

def grid_infimum_middle(eps0):
    """Deterministic 16-point geometric grid scan of all middles, as in
    build_ledger.  Seam middles scanned on the full grid; loop middles on a
    coarsened subgrid (they are verified below to sit far above the seams)."""
    lo, hi = mp.log(GRID_MIN), mp.log(eps0)
    pts = [mp.exp(lo + (hi - lo) * k / (GRID_POINTS - 1)) for k in range(GRID_POINTS)]
    best = mp.inf
    arg = None
    for a in pts:
        for b in pts:
            for c in pts:
                l = (a, b, c)
                for (i, j) in ((0, 1), (0, 2), (1, 2)):
                    m = seam_middle(l, i, j)
                    if m < best:
                        best, arg = m, (a, b, c, "seam", i, j)
    sub = pts[::5] + [pts[-1]]
    best_loop = mp.inf
    for a in sub:
        for b in sub:
            for c in sub:
                l = (a, b, c)
                for i in range(3):
                    m = loop_middle(l, i)
                    if m < best_loop:
                        best_loop = m
    return best, arg, best_loop


def ledger(eps0, m0e):
    eps0 = mp.mpf(eps0)
    L = {}
    L["eps0"] = eps0
    L["eps0_prime"] = EPS0_PRIME
    L["eps_star"] = EPS_STAR
    L["c0_prime"] = C0_PRIME
    L["M0_paper"] = M0_PAPER
    L["M0_empirical"] = m0e
    k1 = mp.sinh(eps0 / 2) / (eps0 / 2)
    L["k1"] = k1
    M1 = max(2 / C0_PRIME ** 2, 4 * k1 ** 2 * C0_PRIME ** 2)
    L["M1"] = M1
    D1 = max(abs(mp.log(2 * M1)), abs(mp.log(M1 * (1 + mp.cosh(eps0)))))
    L["D1"] = D1
    M = 2 * D1 + 1
    L["M"] = M
    L["K1prime"] = max(3, 3 * M ** 2 / (2 * m0e * eps0), 3 * M / m0e, 2 * eps0 / m0e)
    L["K1"] = max(L["K1prime"], 2)

    k2_loop = max(k1, 2 / (1 - mp.exp(-m0e)))
    D2 = max(abs(mp.log(EPS0_PRIME / (4 * k2_loop))), abs(mp.log(k2_loop * EPS0_PRIME)))
    L["D2"] = D2
    M2 = 2 * D2 + 1
    L["K2prime"] = max(3, 3 * M2 ** 2 / (m0e * eps0), 6 * M2 / m0e, 4 * eps0 / m0e)
    L["K2"] = max(L["K2prime"], 2)

    Mp = min(m0e / 2, mp.acosh(1 / mp.sinh(eps0 / 2) ** 2 + 1))
    L["Mprime"] = Mp
    M1_bc = max(8 * E / EPS0_PRIME ** 2, eps0 * k1 ** 2 * EPS0_PRIME / 4)
    D_bc = max(abs(mp.log(2 * M1_bc)), abs(mp.log(M1_bc * (1 + mp.cosh(eps0)))))
    M1_d = max(8 * E ** 2 / EPS0_PRIME ** 2, k1 ** 2 * eps0 ** 2 / 4)
    D_d = max(abs(mp.log(2 * M1_d)), abs(mp.log(M1_d * (1 + mp.cosh(eps0)))))
    D3 = max(D1, D_bc, D_d)
    M3 = 2 * D3 + 1
    L["K3prime"] = max(3, 3 * M3 ** 2 / (2 * Mp * eps0), 3 * M3 / Mp, 2 * eps0 / Mp)
    L["K3dprime"] = max(2, 2 * E / Mp)
    L["K3tprime"] = L["K3dprime"]
    L["K3"] = 3 * max(L["K3prime"], L["K3dprime"], L["K3tprime"])

    M0p = min(m0e / 2, mp.asinh(1 / mp.sinh(eps0 / 2)))
    L["M0prime"] = M0p
    k2_gen = max(k1, 2 / (1 - mp.exp(-2 * M0p)))
    D2p = max(abs(mp.log(EPS0_PRIME / (4 * E * k2_gen))), abs(mp.log(k2_gen * eps0 / 2)))
    L["D2prime"] = D2p
    D4 = max(D2, D2p)
    M4 = 2 * D4 + 1
    L["K4prime"] = max(3, 3 * M4 ** 2 / (2 * M0p * eps0), 3 * M4 / M0p, 2 * eps0 / M0p)
    L["K4dprime"] = max(2, 2 * E / M0p)
    L["K4"] = 2 * max(L["K4prime"], L["K4dprime"])

    L["K"] = max(L["K1"], L["K2"], L["K3"], L["K4"])
    L["C"] = mp.log(L["K"])
    return L


# ---------------------------------------------------------------------------
# Report
# ---------------------------------------------------------------------------

def main():
    print("== foundation constants ==")
    show("eps0_prime = ln(1+sqrt2)", EPS0_PRIME)
    show("eps_star = eps0_prime/e", EPS_STAR)
    show("c0_prime", C0_PRIME)
    show("M0_paper = 8/eps0_prime", M0_PAPER)
    show("2*ln(2/eps0_prime)  (corner limit)", 2 * mp.log(2 / EPS0_PRIME))

    print("\n== inverse hyperbolics / elementary sides ==")
    show("pentagon_side(2, 2)", pentagon_side(2, 2))
    show("pentagon_side(3, 0.5)", pentagon_side(3, mp.mpf("0.5")))
    show("pentagon_side(400, 400)", pentagon_side(400, 400))
    show("hexagon_side(1, 1, 1)", hexagon_side(1, 1, 1))
    show("hexagon_side(0.05, 0.05, 0.5)", hexagon_side(mp.mpf("0.05"), mp.mpf("0.05"), mp.mpf("0.5")))
    show("hexagon_side(2, 3, 4)", hexagon_side(2, 3, 4))
    show("hexagon_side(1e-7, 1e-7, 0)", hexagon_side(mp.mpf("1e-7"), mp.mpf("1e-7"), 0))
    show("hexagon_side(1e-9, 1, 0)", hexagon_side(mp.mpf("1e-9"), 1, 0))
    show("hexagon_side(350, 350, 700)", hexagon_side(350, 350, 700))
    show("hexagon_side(1e-12, 1e-12, 350)", hexagon_side(mp.mpf("1e-12"), mp.mpf("1e-12"), 350))

    print("\n== collar quantities ==")
    show("eta(0.2)", eta(mp.mpf("0.2")))
    show("eta(1e-6)", eta(mp.mpf("1e-6")))
    show("ln(4/1e-6)", mp.log(4 / mp.mpf("1e-6")))
    show("eta(2)", eta(2))
    show("offset_length(0.1, 2) = 0.1*cosh(2)", mp.mpf("0.1") * mp.cosh(2))
    show("offset_for_target(0.1, eps0_prime)", mp.acosh(EPS0_PRIME / mp.mpf("0.1")))
    show("inner_boundary_offset(0.2)", inner_boundary_offset(mp.mpf("0.2")))
    show("inner_boundary_offset(0.3)", inner_boundary_offset(mp.mpf("0.3")))
    show("collar_segment_bounds(0.2).lo", mp.log(C0_PRIME / mp.mpf("0.1")))
    show("collar_segment_bounds(0.2).hi", 2 * mp.log(C0_PRIME / mp.mpf("0.1")))

    print("\n== pants arc lengths ==")
    m033 = (mp.mpf("0.3"),) * 3
    show("seam(0.3,0.3,0.3)", seam_length(m033, 0, 1))
    show("loop(0.3,0.3,0.3)", loop_length(m033, 0))
    show("loop split t(0.3,0.3,0.3) [= l/4]", loop_split(m033, 0))
    m113 = (mp.mpf("0.1"), mp.mpf("0.1"), mp.mpf("0.3"))
    show("seam_12(0.1,0.1,0.3)", seam_length(m113, 0, 1))
    show("middle seam_12(0.1,0.1,0.3)", seam_middle(m113, 0, 1))
    m513 = (mp.mpf("0.5"), mp.mpf("0.1"), mp.mpf("0.3"))
    show("seam_12(0.5,0.1,0.3)", seam_length(m513, 0, 1))
    show("middle seam_12(0.5,0.1,0.3)", seam_middle(m513, 0, 1))
    m234 = (mp.mpf("0.2"), mp.mpf("0.3"), mp.mpf("0.4"))
    show("loop_1 split t(0.2,0.3,0.4)", loop_split(m234, 0))
    show("loop_1(0.2,0.3,0.4)", loop_length(m234, 0))
    show("seam_12(0.3,0.3,0)", seam_length((mp.mpf("0.3"), mp.mpf("0.3"), mp.mpf(0)), 0, 1))
    show("loop_1(0.3,0,0)", loop_length((mp.mpf("0.3"), mp.mpf(0), mp.mpf(0)), 0))
    show("loop_1(0.3,0,0.1)", loop_length((mp.mpf("0.3"), mp.mpf(0), mp.mpf("0.1")), 0))

    print("\n== spec-example ratio pair P1=(0.3,0,0.1) P2=(0.1,0,0.2) ==")
    p1 = (mp.mpf("0.3"), mp.mpf(0), mp.mpf("0.1"))
    p2 = (mp.mpf("0.1"), mp.mpf(0), mp.mpf("0.2"))
    s1, s2 = seam_length(p1, 0, 2), seam_length(p2, 0, 2)
    la1, la2 = loop_length(p1, 0), loop_length(p2, 0)
    lc1, lc2 = loop_length(p1, 2), loop_length(p2, 2)
    show("seam_13 P1", s1)
    show("seam_13 P2", s2)
    show("loop_1 P1", la1)
    show("loop_1 P2", la2)
    show("loop_3 P1", lc1)
    show("loop_3 P2", lc2)
    sup_arcs = max(max(s1 / s2, s2 / s1), max(la1 / la2, la2 / la1), max(lc1 / lc2, lc2 / lc1))
    show("sup_arcs (symmetrized)", sup_arcs)

    print("\n== thick-part example P1=(0.3,0.3,0.3) P2=(0.1,0.1,0.1) ==")
    q2 = (mp.mpf("0.1"),) * 3
    s_a, s_b = seam_length(m033, 0, 1), seam_length(q2, 0, 1)
    l_a, l_b = loop_length(m033, 0), loop_length(q2, 0)
    show("seam P2/P1 one-sided", s_b / s_a)
    show("loop P2/P1 one-sided", l_b / l_a)
    lhs = max(mp.mpf(1) / 3, s_b / s_a, l_b / l_a)
    show("lhs sup (curves+arcs)", lhs)
    show("needed K0 = lhs/(1/3)", lhs * 3)

    print("\n== grid infimum of middles (ledger M0_empirical) ==")
    m0e = {}
    for eps0 in ("0.1", "0.3", "1.0", "6.0"):
        best, arg, best_loop = grid_infimum_middle(mp.mpf(eps0))
        m0e[eps0] = best
        print(f"eps0={eps0}: seam-grid min = {fmt(best)}")
        print(f"          at l=({fmt(arg[0], 8)}, {fmt(arg[1], 8)}, {fmt(arg[2], 8)}) {arg[3]}({arg[4]},{arg[5]})")
        print(f"          loop subgrid min = {fmt(best_loop)} (must exceed seam min)")
    show("corner middle(1e-6,1e-6,1e-6)", seam_middle((GRID_MIN,) * 3, 0, 1))
    show("corner middle(6,6,1e-6)", seam_middle((mp.mpf(6), mp.mpf(6), GRID_MIN), 0, 1))

    for eps0 in ("0.1", "0.3", "1.0", "6.0"):
        print(f"\n== ledger eps0 = {eps0} ==")
        for k, v in ledger(eps0, m0e[eps0]).items():
            show(f"  {k}", v)

    print("\n== halving family, base (0.3,0.3,0.3) ==")
    seam0 = seam_length(m033, 0, 1)
    loop0 = loop_length(m033, 0)
    rows = {}
    for n in (0, 1, 2, 10, 11, 20, 29, 30):
        l = (mp.mpf("0.3") / 2 ** n,) * 3
        rows[n] = (seam_length(l, 0, 1), loop_length(l, 0))
        show(f"seam n={n}", rows[n][0])
        show(f"loop n={n}", rows[n][1])
    arc_sup = {n: max(rows[n][0] / seam0, rows[n][1] / loop0) for n in rows}
    show("arc_sup(1)", arc_sup[1])
    show("arc_sup(30)", arc_sup[30])
    show("arc_sup(30)/arc_sup(1)", arc_sup[30] / arc_sup[1])
    worst = mp.mpf(0)
    prev = None
    for n in range(10, 31):
        l = (mp.mpf("0.3") / 2 ** n,) * 3
        s = seam_length(l, 0, 1)
        if prev is not None:
            worst = max(worst, abs((s - prev) - 2 * LN2))
        prev = s
    show("max |seam increment - 2ln2|, n in 10..30", worst)
    show("2*ln2", 2 * LN2)


if __name__ == "__main__":
    main()
