"""Exact LP feasibility by two-phase simplex over the rationals.

Only feasibility is decided; there is no user objective.  Variables may be
free, nonnegative, or strictly positive.  Strict positivity is reduced to a
bounded optimization: every strict variable is written ``x = s + y`` with a
shared margin ``0 <= s <= 1`` and ``y >= 0``, and ``s`` is maximized in
phase two.  The system is strictly feasible iff the optimum margin is
positive.

Bland's rule (lowest-index entering column, lowest-index basic variable on
ratio ties) guarantees termination without any tolerance.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import ONE, ZERO, Vector, dot, to_rational


@dataclass(frozen=True)
class LPProblem:
    """Equality system ``rows`` over ``n_vars`` variables with sign flags."""

    n_vars: int
    rows: tuple  # tuple[(coeffs, rhs), ...]
    nonneg: tuple
    strict: tuple

    def __init__(self, n_vars: int, rows: Sequence, nonneg: Sequence[bool] | None = None,
                 strict: Sequence[bool] | None = None):
        if n_vars < 0:
            raise ValueError("negative variable count")
        clean = []
        for coeffs, rhs in rows:
            coeffs = tuple(to_rational(a) for a in coeffs)
            if len(coeffs) != n_vars:
                raise ValueError(f"row has {len(coeffs)} coefficients, expected {n_vars}")
            clean.append((coeffs, to_rational(rhs)))
        nonneg = tuple(bool(x) for x in (nonneg if nonneg is not None else [False] * n_vars))
        strict = tuple(bool(x) for x in (strict if strict is not None else [False] * n_vars))
        if len(nonneg) != n_vars or len(strict) != n_vars:
            raise ValueError("flag vectors must have one entry per variable")
        if any(s and not nn for s, nn in zip(strict, nonneg)):
            raise ValueError("strict positivity requires the nonnegativity flag")
        object.__setattr__(self, "n_vars", n_vars)
        object.__setattr__(self, "rows", tuple(clean))
        object.__setattr__(self, "nonneg", nonneg)
        object.__setattr__(self, "strict", strict)

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        """Exact substitution check of every constraint."""
        if len(x) != self.n_vars:
            return False
        for coeffs, rhs in self.rows:
            if dot(coeffs, x) != rhs:
                return False
        for xi, nn, st in zip(x, self.nonneg, self.strict):
            if st and not xi > 0:
                return False
            if nn and xi < 0:
                return False
        return True


class _Tableau:
    """Dense simplex tableau; last column is the right-hand side."""

    def __init__(self, rows: list[list[Fraction]], basis: list[int]):
        self.rows = rows
        self.basis = basis

    def pivot(self, r: int, c: int) -> None:
        prow = self.rows[r]
        piv = prow[c]
        if piv != 1:
            inv = 1 / piv
            prow = [a * inv for a in prow]
            self.rows[r] = prow
        for i, row in enumerate(self.rows):
            if i != r:
                f = row[c]
                if f:
                    self.rows[i] = [a - f * b if b else a for a, b in zip(row, prow)]
        self.basis[r] = c

    def reduced_costs(self, cost: list[Fraction]) -> list[Fraction]:
        ncols = len(self.rows[0]) - 1 if self.rows else len(cost)
        red = list(cost) + [ZERO]
        for r, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[r]
                red = [a - cb * x if x else a for a, x in zip(red, row)]
        return red[: ncols + 1]

    def minimize(self, cost: list[Fraction], allowed: list[bool]) -> Fraction:
        """Run Bland-rule simplex for ``min cost.x``; returns the optimum.

        Callers guarantee boundedness (phase one is bounded below by 0 and the
        margin objective is capped by an explicit row).
        """
        red = self.reduced_costs(cost)
        while True:
            enter = next((j for j, rc in enumerate(red[:-1]) if rc < 0 and allowed[j]), None)
            if enter is None:
                return -red[-1]
            leave = None
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = row[-1] / a
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leave]):
                        best, leave = ratio, i
            if leave is None:
                raise ArithmeticError("unbounded direction in a bounded LP")
            self.pivot(leave, enter)
            f = red[enter]
            prow = self.rows[leave]
            red = [a - f * b if b else a for a, b in zip(red, prow)]

    def values(self, ncols: int) -> list[Fraction]:
        x = [ZERO] * ncols
        for r, b in enumerate(self.basis):
            x[b] = self.rows[r][-1]
        return x


def lp_feasible(problem: LPProblem) -> Vector | None:
    """Exact feasible point of ``problem`` or ``None`` when infeasible.

    The returned point satisfies every equality exactly, every nonnegativity
    flag, and every strict flag strictly.
    """
    n = problem.n_vars
    # column layout: one column per nonneg var, two per free var, shared margin
    cols_of: list[tuple[int, ...]] = []
    ncol = 0
    for i in range(n):
        if problem.nonneg[i]:
            cols_of.append((ncol,))
            ncol += 1
        else:
            cols_of.append((ncol, ncol + 1))
            ncol += 2
    has_strict = any(problem.strict)
    margin = None
    if has_strict:
        margin = ncol
        ncol += 1
        cap_slack = ncol
        ncol += 1

    eq_rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for coeffs, b in problem.rows:
        row = [ZERO] * ncol
        for i, a in enumerate(coeffs):
            if not a:
                continue
            cs = cols_of[i]
            row[cs[0]] += a
            if len(cs) == 2:
                row[cs[1]] -= a
            if problem.strict[i]:
                row[margin] += a
        eq_rows.append(row)
        rhs.append(b)
    if has_strict:
        row = [ZERO] * ncol
        row[margin] = ONE
        row[cap_slack] = ONE
        eq_rows.append(row)
        rhs.append(ONE)

    m = len(eq_rows)
    total = ncol + m
    rows = []
    for i, (row, b) in enumerate(zip(eq_rows, rhs)):
        if b < 0:
            row = [-a for a in row]
            b = -b
        art = [ZERO] * m
        art[i] = ONE
        rows.append(row + art + [b])
    tab = _Tableau(rows, [ncol + i for i in range(m)])

    phase1 = [ZERO] * ncol + [ONE] * m
    if tab.minimize(phase1, [True] * total) != 0:
        return None

    # pivot zero-level artificials out of the basis; drop redundant rows
    r = 0
    while r < len(tab.rows):
        if tab.basis[r] >= ncol:
            c = next((j for j in range(ncol) if tab.rows[r][j]), None)
            if c is None:
                del tab.rows[r]
                del tab.basis[r]
                continue
            tab.pivot(r, c)
        r += 1

    allowed = [True] * ncol + [False] * m
    if has_strict:
        cost = [ZERO] * total
        cost[margin] = -ONE
        best = -tab.minimize(cost, allowed)
        if best <= 0:
            return None

    xs = tab.values(total)
    s = xs[margin] if has_strict else ZERO
    out = []
    for i in range(n):
        cs = cols_of[i]
        v = xs[cs[0]] - (xs[cs[1]] if len(cs) == 2 else ZERO)
        if problem.strict[i]:
            v += s
        out.append(v)
    out = tuple(out)
    if not problem.satisfied_by(out):
        raise ArithmeticError("simplex produced a point that fails exact substitution")
    return out
