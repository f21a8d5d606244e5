"""Exact rational primal simplex for covering LPs.

Solves ``min 1.w  s.t.  A w >= 1, w >= 0`` where column ``j`` of ``A`` is the
0/1 indicator of ``columns[j]`` (a set of row indices). The n singleton
columns are appended so the identity basis (every row covered by its own
singleton) is feasible from the start; at the end any weight left on a
singleton is moved onto a given column containing that row, which keeps the
solution feasible and optimal.

Two anti-cycling rules are available:

``"lex"`` (default)
    most negative reduced cost enters; ratio ties are broken by the
    lexicographic rule on rows of ``B^-1``.
``"bland"``
    smallest-index rule for both entering and leaving variables.

Both terminate. On the heavily degenerate Kneser instances Bland's rule needs
tens of thousands of pivots where the lexicographic rule needs hundreds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import CertificateInvalid, Infeasible

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class CoveringSolution:
    value: Fraction
    weights: tuple[Fraction, ...]  # one per input column
    duals: tuple[Fraction, ...]  # one per row; a fractional packing
    pivots: int


def _common(values: Sequence[Fraction]) -> tuple[list[int], int]:
    """Integer numerators over one common denominator."""
    den = lcm(*(v.denominator for v in values)) if values else 1
    return [v.numerator * (den // v.denominator) for v in values], den


def solve_covering_lp(n_rows: int, columns: Sequence[Sequence[int]], rule: str = "lex") -> CoveringSolution:
    if rule not in ("lex", "bland"):
        raise ValueError(f"unknown pivot rule {rule!r}")
    given = [tuple(sorted(set(c))) for c in columns]
    home = {}
    for j, col in enumerate(given):
        for i in col:
            home.setdefault(i, j)
    if len(home) != n_rows or any(not 0 <= i < n_rows for i in home):
        raise Infeasible("some row is not covered by any column")

    m = len(given)
    # structural columns: given ones, then singletons; surplus s_i is var m + n + i
    cols = given + [(i,) for i in range(n_rows)]
    total = len(cols)
    basis = [m + i for i in range(n_rows)]
    binv = [[ONE if i == j else ZERO for j in range(n_rows)] for i in range(n_rows)]
    x_b = [ONE] * n_rows
    pivots = 0

    while True:
        y = [ZERO] * n_rows
        for i, var in enumerate(basis):
            if var < total:
                row = binv[i]
                for j in range(n_rows):
                    if row[j]:
                        y[j] += row[j]
        y_num, y_den = _common(y)
        in_basis = set(basis)
        enter, best = None, 0
        for var in range(total + n_rows):
            if var in in_basis:
                continue
            if var < total:
                red = y_den
                for i in cols[var]:
                    red -= y_num[i]
            else:
                red = y_num[var - total]
            if red < best:
                enter, best = var, red
                if rule == "bland":
                    break
        if enter is None:
            break

        if enter < total:
            u = [sum((binv[i][j] for j in cols[enter]), ZERO) for i in range(n_rows)]
        else:
            u = [-binv[i][enter - total] for i in range(n_rows)]
        leave, key = None, None
        for i in range(n_rows):
            if u[i] <= 0:
                continue
            if rule == "bland":
                cand = (x_b[i] / u[i], basis[i])
            else:
                cand = (x_b[i] / u[i], [v / u[i] for v in binv[i]])
            if key is None or cand < key:
                leave, key = i, cand
        if leave is None:
            raise Infeasible("covering LP is unbounded, which cannot happen with unit costs")

        piv = u[leave]
        theta = x_b[leave] / piv
        pivot_row = [v / piv for v in binv[leave]]
        for i in range(n_rows):
            if i == leave or not u[i]:
                continue
            f = u[i]
            row = binv[i]
            binv[i] = [row[j] - f * pivot_row[j] if pivot_row[j] else row[j] for j in range(n_rows)]
            x_b[i] -= f * theta
        binv[leave] = pivot_row
        x_b[leave] = theta
        basis[leave] = enter
        pivots += 1

    weights = [ZERO] * m
    for i, var in enumerate(basis):
        if var < m:
            weights[var] += x_b[i]
        elif var < total and x_b[i]:
            weights[home[var - m]] += x_b[i]
    duals = [ZERO] * n_rows
    for i, var in enumerate(basis):
        if var < total:
            for j in range(n_rows):
                duals[j] += binv[i][j]
    sol = CoveringSolution(sum(weights, ZERO), tuple(weights), tuple(duals), pivots)
    verify_covering_certificate(n_rows, given, sol)
    return sol


def verify_covering_certificate(n_rows: int, columns: Sequence[Sequence[int]], sol: CoveringSolution) -> None:
    """Check primal and dual feasibility and equal objectives; raise otherwise.

    By weak duality this proves ``sol.value`` optimal without trusting the
    pivoting.
    """
    if len(sol.weights) != len(columns) or len(sol.duals) != n_rows:
        raise CertificateInvalid("certificate has the wrong shape")
    if any(w < 0 for w in sol.weights) or any(y < 0 for y in sol.duals):
        raise CertificateInvalid("negative entry in certificate")
    cover = [ZERO] * n_rows
    for w, col in zip(sol.weights, columns):
        if w:
            for i in col:
                cover[i] += w
    if any(c < 1 for c in cover):
        raise CertificateInvalid("primal weights do not cover every row")
    for col in columns:
        if sum((sol.duals[i] for i in col), ZERO) > 1:
            raise CertificateInvalid("dual packing overloads a column")
    if any(y > 1 for y in sol.duals):
        raise CertificateInvalid("dual packing overloads a singleton")
    if sum(sol.weights, ZERO) != sol.value or sum(sol.duals, ZERO) != sol.value:
        raise CertificateInvalid("primal and dual objectives differ")
