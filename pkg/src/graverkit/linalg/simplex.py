"""Exact rational linear feasibility by the two-phase simplex method.

Only phase I is needed: every caller asks whether a system of linear
equations and ">=" inequalities in free variables has a rational solution,
and wants one if it does. Arithmetic is over Fraction, pivoting follows
Bland's rule so the method cannot cycle.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

logger = logging.getLogger(__name__)

Row = Sequence[int | Fraction]


@dataclass
class LinearSystem:
    """Constraints over free rational variables x_0 .. x_{n-1}."""

    num_vars: int
    equalities: list[tuple[Row, Fraction]] = field(default_factory=list)
    inequalities: list[tuple[Row, Fraction]] = field(default_factory=list)

    def add_equality(self, coeffs: Row, rhs: int | Fraction) -> None:
        """Add the constraint coeffs * x == rhs."""
        self._check(coeffs)
        self.equalities.append((coeffs, Fraction(rhs)))

    def add_inequality(self, coeffs: Row, rhs: int | Fraction) -> None:
        """Add the constraint coeffs * x >= rhs."""
        self._check(coeffs)
        self.inequalities.append((coeffs, Fraction(rhs)))

    def _check(self, coeffs: Row) -> None:
        if len(coeffs) != self.num_vars:
            raise ValueError(f"row of length {len(coeffs)} for {self.num_vars} variables")


class _Tableau:
    """Phase I tableau: rows of [coefficients | rhs], basis by column index."""

    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int]) -> None:
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.width = len(rows[0]) if rows else 0

    def pivot(self, r: int, c: int) -> None:
        prow = self.rows[r]
        piv = prow[c]
        if piv != 1:
            self.rows[r] = prow = [v / piv for v in prow]
            self.rhs[r] /= piv
        for k, row in enumerate(self.rows):
            if k == r:
                continue
            f = row[c]
            if f == 0:
                continue
            self.rows[k] = [u - f * v for u, v in zip(row, prow, strict=True)]
            self.rhs[k] -= f * self.rhs[r]
        self.basis[r] = c

    def minimize(self, cost: list[Fraction]) -> Fraction:
        """Run Bland-rule simplex on the given cost; return the optimal value.

        The phase I objective is bounded below by zero, so no unbounded exit.
        """
        iterations = 0
        while True:
            reduced = list(cost)
            for r, b in enumerate(self.basis):
                cb = cost[b]
                if cb == 0:
                    continue
                for j, v in enumerate(self.rows[r]):
                    if v:
                        reduced[j] -= cb * v
            entering = next((j for j in range(self.width) if reduced[j] < 0), None)
            if entering is None:
                return sum((cost[b] * self.rhs[r] for r, b in enumerate(self.basis)), Fraction(0))
            best: tuple[Fraction, int, int] | None = None
            for r, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    key = (self.rhs[r] / a, self.basis[r], r)
                    if best is None or key < best:
                        best = key
            if best is None:
                raise ArithmeticError("phase I objective unbounded, tableau is corrupt")
            self.pivot(best[2], entering)
            iterations += 1
            if iterations % 500 == 0:
                logger.debug("simplex: %d pivots", iterations)


def find_feasible_point(system: LinearSystem) -> tuple[Fraction, ...] | None:
    """Return a rational point satisfying the system, or None if infeasible."""
    n = system.num_vars
    m_ineq = len(system.inequalities)
    constraints: list[tuple[list[Fraction], Fraction]] = []
    # columns: x+ (n), x- (n), surplus (m_ineq), artificial (m)
    for coeffs, rhs in system.equalities:
        row = [Fraction(a) for a in coeffs] + [Fraction(-a) for a in coeffs] + [Fraction(0)] * m_ineq
        constraints.append((row, rhs))
    for k, (coeffs, rhs) in enumerate(system.inequalities):
        surplus = [Fraction(0)] * m_ineq
        surplus[k] = Fraction(-1)
        row = [Fraction(a) for a in coeffs] + [Fraction(-a) for a in coeffs] + surplus
        constraints.append((row, rhs))

    m = len(constraints)
    if m == 0:
        return tuple(Fraction(0) for _ in range(n))

    structural = 2 * n + m_ineq
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i, (row, b) in enumerate(constraints):
        if b < 0:
            row = [-v for v in row]
            b = -b
        artificial = [Fraction(0)] * m
        artificial[i] = Fraction(1)
        rows.append(row + artificial)
        rhs.append(b)

    tableau = _Tableau(rows, rhs, [structural + i for i in range(m)])
    cost = [Fraction(0)] * structural + [Fraction(1)] * m
    value = tableau.minimize(cost)
    if value > 0:
        return None

    solution = [Fraction(0)] * (structural + m)
    for r, b in enumerate(tableau.basis):
        solution[b] = tableau.rhs[r]
    return tuple(solution[j] - solution[n + j] for j in range(n))
