#!/usr/bin/env python3
"""Symbolic oracles for the frozen constants used in the C++ test suite.

Run: python3 tests/oracles/symbolic_oracles.py

Derives, with sympy, closed-form curvature data for the static metrics
  -A(r) dt^2 + B(r) dr^2 + r^2 (dtheta^2 + sin^2 theta dphi^2)
and their t=0 slices, plus the conformal Killing-Yano identity for
Q = r dr^t. Everything printed here is frozen into the C++ tests; the
C++ implementation never calls this script.
"""

import sympy as sp

t, r, th, ph, M = sp.symbols("t r theta phi M", positive=True)


def christoffel(g, coords):
    ginv = g.inv()
    n = len(coords)
    Gamma = [[[sp.simplify(
        sp.Rational(1, 2) * sum(ginv[l, s] * (sp.diff(g[s, m], coords[k])
                                              + sp.diff(g[s, k], coords[m])
                                              - sp.diff(g[k, m], coords[s]))
                                for s in range(n)))
        for m in range(n)] for k in range(n)] for l in range(n)]
    return Gamma


def riemann_down(g, coords):
    """R_{lknm} with R^l_{knm} = d_n Gamma^l_{mk} - d_m Gamma^l_{nk} + ..."""
    n = len(coords)
    Gamma = christoffel(g, coords)
    Rud = [[[[sp.simplify(
        sp.diff(Gamma[l][m][k], coords[nn]) - sp.diff(Gamma[l][nn][k], coords[m])
        + sum(Gamma[l][nn][s] * Gamma[s][m][k] - Gamma[l][m][s] * Gamma[s][nn][k]
              for s in range(n)))
        for m in range(n)] for nn in range(n)] for k in range(n)] for l in range(n)]
    Rdown = [[[[sp.simplify(sum(g[a, l] * Rud[l][k][nn][m] for l in range(n)))
                for m in range(n)] for nn in range(n)] for k in range(n)]
             for a in range(n)]
    return Rdown


def ricci(g, coords):
    n = len(coords)
    ginv = g.inv()
    R = riemann_down(g, coords)
    # Ric_{km} = g^{al} R_{alkm}  with the index pattern R_{a k a m} raised
    ric = sp.zeros(n, n)
    for k in range(n):
        for m in range(n):
            ric[k, m] = sp.simplify(sum(ginv[a, l] * R[a][k][l][m]
                                        for a in range(n) for l in range(n)))
    return ric


def kretschmann(g, coords):
    n = len(coords)
    ginv = g.inv()
    R = riemann_down(g, coords)
    tot = 0
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    up = sum(ginv[a, p] * ginv[b, q] * ginv[c, u] * ginv[d, v]
                             * R[p][q][u][v]
                             for p in range(n) for q in range(n)
                             for u in range(n) for v in range(n))
                    tot += R[a][b][c][d] * up
    return sp.simplify(tot)


def spacetime_metric(F):
    return sp.diag(-F, 1 / F, r**2, r**2 * sp.sin(th)**2)


def slice_metric(F):
    return sp.diag(1 / F, r**2, r**2 * sp.sin(th)**2)


def main():
    coords4 = [t, r, th, ph]
    coords3 = [r, th, ph]

    print("== Schwarzschild spacetime, F = 1 - 2M/r ==")
    F = 1 - 2 * M / r
    g = spacetime_metric(F)
    print("  Kretschmann:", kretschmann(g, coords4))
    ric = ricci(g, coords4)
    print("  Ricci == 0:", all(sp.simplify(ric[i, j]) == 0
                               for i in range(4) for j in range(4)))

    print("== Schwarzschild t=0 slice ==")
    gs = slice_metric(F)
    ric3 = ricci(gs, coords3)
    ginv3 = gs.inv()
    mixed = sp.simplify(ginv3 * ric3)
    print("  Ric^i_j diag:", [sp.simplify(mixed[i, i]) for i in range(3)])
    print("  scalar:", sp.simplify(sum(mixed[i, i] for i in range(3))))

    print("== AdS spacetime, F = 1 + r^2 ==")
    F = 1 + r**2
    g = spacetime_metric(F)
    R4 = riemann_down(g, coords4)
    ok = True
    for a in range(4):
        for b in range(4):
            for c in range(4):
                for d in range(4):
                    want = -(g[a, c] * g[b, d] - g[a, d] * g[b, c])
                    if sp.simplify(R4[a][b][c][d] - want) != 0:
                        ok = False
    print("  R_{abcd} = -(g_ac g_bd - g_ad g_bc):", ok)
    ric = ricci(g, coords4)
    print("  Ricci == -3 g:", all(sp.simplify(ric[i, j] + 3 * g[i, j]) == 0
                                  for i in range(4) for j in range(4)))

    print("== AdS-Schwarzschild t=0 slice, F = 1 + r^2 - 2M/r ==")
    F = 1 + r**2 - 2 * M / r
    gs = slice_metric(F)
    ric3 = ricci(gs, coords3)
    mixed = sp.simplify(gs.inv() * ric3)
    print("  Ric^i_j diag:", [sp.simplify(mixed[i, i]) for i in range(3)])
    print("  scalar:", sp.simplify(sum(mixed[i, i] for i in range(3))))

    print("== CKY identity for Q = r dr^t, generic F(r) ==")
    Fgen = sp.Function("F", positive=True)(r)
    g = sp.diag(-Fgen, 1 / Fgen, r**2, r**2 * sp.sin(th)**2)
    coords = coords4
    Gamma = christoffel(g, coords)
    Q = sp.zeros(4, 4)
    Q[1, 0] = r
    Q[0, 1] = -r
    # nabla_m Q_{np}
    DQ = [[[sp.simplify(sp.diff(Q[nn, p], coords[m])
                        - sum(Gamma[l][m][nn] * Q[l, p] for l in range(4))
                        - sum(Gamma[l][m][p] * Q[nn, l] for l in range(4)))
            for p in range(4)] for nn in range(4)] for m in range(4)]
    ginv = g.inv()
    # xi^n = g^{ma} g^{nb} DQ[m][a][b]
    xi = [sp.simplify(sum(ginv[m, a] * ginv[nn, b] * DQ[m][a][b]
                          for m in range(4) for a in range(4) for b in range(4)))
          for nn in range(4)]
    print("  div Q components (expect -3,0,0,0):", xi)
    xi_down = [sp.simplify(sum(g[nn, m] * xi[m] for m in range(4)))
               for nn in range(4)]
    ok = True
    for X in range(4):
        for Y in range(4):
            for Z in range(4):
                lhs = DQ[X][Y][Z] + DQ[Y][X][Z]
                rhs = sp.Rational(1, 3) * (2 * g[X, Y] * xi_down[Z]
                                           - g[X, Z] * xi_down[Y]
                                           - g[Y, Z] * xi_down[X])
                if sp.simplify(lhs - rhs) != 0:
                    ok = False
    print("  CKY defining equation holds identically:", ok)


if __name__ == "__main__":
    main()
