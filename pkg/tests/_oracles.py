"""Independent brute-force oracles used by the tests.

Everything here recomputes dimensions from first principles with sympy's
rational linear algebra, touching only the raw operator tables and the
digroup products, so agreement with the package is a genuine cross-check
rather than the same code run twice.
"""

from fractions import Fraction

import sympy


def _sym(x):
    return sympy.Rational(x.numerator, x.denominator)


def sympy_nullity(rows, ncols):
    """Nullity of a rational constraint matrix given as list-of-lists."""
    if not rows:
        return ncols
    m = sympy.Matrix([[_sym(Fraction(x)) for x in row] for row in rows])
    return ncols - m.rank()


def sympy_nullspace(rows, ncols):
    if not rows:
        return [[Fraction(1 if i == j else 0) for i in range(ncols)]
                for j in range(ncols)]
    m = sympy.Matrix([[_sym(Fraction(x)) for x in row] for row in rows])
    return [[Fraction(int(v.p), int(v.q)) for v in vec] for vec in m.nullspace()]


def full_cocycle_rows(q, w):
    """All 3|D|^2 cocycle constraints on the full theta vector, explicitly.

    The unknown is the concatenation of the dim W x dim Q blocks theta_x
    in the element order of the digroup; no reduction or substitution.
    """
    d = q.digroup
    elems = d.elements
    idx = {x: i for i, x in enumerate(elems)}
    dw, dq = w.dim, q.dim
    blk = dw * dq
    nunk = len(elems) * blk

    def u(x, i, j):
        return idx[x] * blk + i * dq + j

    rows = []
    for x in elems:
        for y in elems:
            xy_d = d.dashv(x, y)
            xy_v = d.vdash(x, y)
            for i in range(dw):
                for j in range(dq):
                    row = [Fraction(0)] * nunk
                    row[u(xy_d, i, j)] += 1
                    for k in range(dw):
                        row[u(y, k, j)] -= Fraction(w.lam[x][i, k])
                    for k in range(dq):
                        row[u(x, i, k)] -= Fraction(q.lam[y][k, j])
                    rows.append(row)
                    row = [Fraction(0)] * nunk
                    row[u(xy_v, i, j)] += 1
                    for k in range(dw):
                        row[u(y, k, j)] -= Fraction(w.rho[x][i, k])
                    rows.append(row)
                    row = [Fraction(0)] * nunk
                    row[u(xy_d, i, j)] += 1
                    for k in range(dq):
                        row[u(x, i, k)] -= Fraction(q.rho[y][k, j])
                    rows.append(row)
    return rows, nunk


def cocycle_dim_oracle(q, w):
    rows, nunk = full_cocycle_rows(q, w)
    return sympy_nullity(rows, nunk)


def hom_rho_oracle(q, w):
    """Nullspace of the rho-intertwiner constraints, solved with sympy."""
    d = q.digroup
    dw, dq = w.dim, q.dim
    nunk = dw * dq
    rows = []
    for g in range(d.group.order):
        aw, aq = w.rho[(g, 0)], q.rho[(g, 0)]
        for i in range(dw):
            for j in range(dq):
                row = [Fraction(0)] * nunk
                for k in range(dq):
                    row[i * dq + k] += Fraction(aq[k, j])
                for k in range(dw):
                    row[k * dq + j] -= Fraction(aw[i, k])
                rows.append(row)
    return sympy_nullspace(rows, nunk)


def ext1_dim_oracle(q, w):
    """dim Z - dim B computed entirely with sympy on the full systems."""
    d = q.digroup
    elems = d.elements
    dw, dq = w.dim, q.dim
    blk = dw * dq
    if blk == 0:
        return 0
    zrows, nunk = full_cocycle_rows(q, w)
    zdim = sympy_nullity(zrows, nunk)
    bvecs = []
    for t_flat in hom_rho_oracle(q, w):
        t = [[t_flat[i * dq + j] for j in range(dq)] for i in range(dw)]
        vec = []
        for x in elems:
            for i in range(dw):
                for j in range(dq):
                    val = Fraction(0)
                    for k in range(dw):
                        val += Fraction(w.lam[x][i, k]) * t[k][j]
                    for k in range(dq):
                        val -= t[i][k] * Fraction(q.lam[x][k, j])
                    vec.append(val)
        bvecs.append(vec)
    if bvecs:
        bdim = sympy.Matrix([[_sym(v) for v in vec] for vec in bvecs]).rank()
    else:
        bdim = 0
    return zdim - bdim


def matrix_rank_oracle(mat_lists):
    return sympy.Matrix([[_sym(Fraction(x)) for x in row]
                         for row in mat_lists]).rank()
