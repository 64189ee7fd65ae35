"""Small exact linear programming: dense two-phase simplex over ``Fraction``.

Bland's rule picks both the entering and the leaving variable, so the method
terminates without cycling and the optimal vertex returned is deterministic.
All variables are implicitly non-negative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Mapping

__all__ = ["Constraint", "LPProblem", "LPResult", "UnboundedError", "IncrementalLP", "solve_lp_exact"]


class UnboundedError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Constraint:
    coeffs: Mapping[int, Fraction]
    sense: str  # "<=", ">=" or "=="
    rhs: Fraction

    def __post_init__(self) -> None:
        if self.sense not in ("<=", ">=", "=="):
            raise ValueError(f"bad constraint sense {self.sense!r}")

    def holds(self, x) -> bool:
        lhs = sum((Fraction(c) * x[i] for i, c in self.coeffs.items()), Fraction(0))
        return {"<=": lhs <= self.rhs, ">=": lhs >= self.rhs, "==": lhs == self.rhs}[self.sense]


@dataclass
class LPProblem:
    num_vars: int
    constraints: list[Constraint] = field(default_factory=list)
    objective: Mapping[int, Fraction] = field(default_factory=dict)
    maximize: bool = False
    # minimized over the optimal face of ``objective`` (lexicographic second stage)
    tiebreak: Mapping[int, Fraction] | None = None

    def add(self, coeffs: Mapping[int, Fraction], sense: str, rhs) -> None:
        for i in coeffs:
            if not 0 <= i < self.num_vars:
                raise ValueError(f"constraint references variable {i} outside 0..{self.num_vars - 1}")
        self.constraints.append(Constraint(dict(coeffs), sense, Fraction(rhs)))


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" or "infeasible"
    x: tuple[Fraction, ...] = ()
    value: Fraction | None = None

    @property
    def feasible(self) -> bool:
        return self.status == "optimal"


def _int_row(values: list[Fraction]) -> tuple[list[int], int]:
    den = 1
    for v in values:
        den = den * v.denominator // gcd(den, v.denominator)
    return [v.numerator * (den // v.denominator) for v in values], den


def _normalize(row: list[int], den: int) -> tuple[list[int], int]:
    g = gcd(*row, den)
    if g > 1:
        row = [v // g for v in row]
        den //= g
    return row, den


class _Tableau:
    """Rows are integer numerators (right-hand side last) over one positive denominator."""

    def __init__(self, rows: list[list[int]], dens: list[int], basis: list[int]):
        self.rows = rows
        self.dens = dens
        self.basis = basis
        self.obj: list[int] | None = None
        self.obj_den = 1

    def rhs(self, r: int) -> Fraction:
        return Fraction(self.rows[r][-1], self.dens[r])

    def _eliminate(self, other: list[int], den: int, row: list[int], p: int, c: int,
                   nz: list[int]) -> tuple[list[int], int]:
        f = other[c]
        new = [v * p for v in other]
        for j in nz:
            new[j] -= f * row[j]
        return _normalize(new, den * p)

    def pivot(self, r: int, c: int) -> None:
        row = self.rows[r]
        p = row[c]
        if p < 0:
            row, p = [-v for v in row], -p
        nz = [j for j, v in enumerate(row) if v]
        for k, other in enumerate(self.rows):
            if k != r and other[c]:
                self.rows[k], self.dens[k] = self._eliminate(other, self.dens[k], row, p, c, nz)
        if self.obj is not None and self.obj[c]:
            self.obj, self.obj_den = self._eliminate(self.obj, self.obj_den, row, p, c, nz)
        self.rows[r], self.dens[r] = _normalize(row, p)
        self.basis[r] = c

    def minimize(self, cost: list[Fraction], allowed: int, barred: frozenset[int] = frozenset()) -> list[int]:
        """Optimize over columns ``< allowed`` not in ``barred``; returns the final reduced-cost numerators.

        Raises UnboundedError.
        """
        width = len(self.rows[0]) - 1 if self.rows else len(cost)
        obj, den = _int_row(list(cost[:width]) + [Fraction(0)])
        for r, b in enumerate(self.basis):
            if obj[b]:
                row = self.rows[r]
                obj, den = self._eliminate(obj, den, row, row[b], b, [j for j, v in enumerate(row) if v])
        self.obj, self.obj_den = obj, den
        try:
            while True:
                enter = next((j for j in range(allowed) if self.obj[j] < 0 and j not in barred), None)
                if enter is None:
                    return self.obj
                best = None
                for r, row in enumerate(self.rows):
                    a = row[enter]
                    if a > 0:
                        key = (Fraction(row[-1], a), self.basis[r])
                        if best is None or key < best[0]:
                            best = (key, r)
                if best is None:
                    raise UnboundedError("objective is unbounded")
                self.pivot(best[1], enter)
        finally:
            self.obj = None


def solve_lp_exact(lp: LPProblem) -> LPResult:
    n = lp.num_vars
    norm = []
    for con in lp.constraints:
        a = [Fraction(0)] * n
        for i, c in con.coeffs.items():
            a[i] += Fraction(c)
        b, sense = Fraction(con.rhs), con.sense
        if b < 0:
            a, b = [-v for v in a], -b
            sense = {"<=": ">=", ">=": "<=", "==": "=="}[sense]
        norm.append((a, sense, b))
    n_slack = sum(1 for _, s, _ in norm if s != "==")
    n_art = sum(1 for _, s, _ in norm if s != "<=")
    width = n + n_slack + n_art
    rows, dens, basis = [], [], []
    si, ai = n, n + n_slack
    zero, one = Fraction(0), Fraction(1)
    for a, sense, b in norm:
        row = a + [zero] * (n_slack + n_art) + [b]
        if sense == "<=":
            row[si] = one
            basis.append(si)
            si += 1
        else:
            if sense == ">=":
                row[si] = -one
                si += 1
            row[ai] = one
            basis.append(ai)
            ai += 1
        ints, den = _int_row(row)
        rows.append(ints)
        dens.append(den)
    tab = _Tableau(rows, dens, basis)
    first_art = n + n_slack
    if n_art:
        tab.minimize([zero] * first_art + [one] * n_art, width)
        if any(b >= first_art and tab.rows[r][-1] for r, b in enumerate(tab.basis)):
            return LPResult("infeasible")
        # drive zero-level artificials out of the basis, dropping redundant rows
        r = 0
        while r < len(tab.rows):
            if tab.basis[r] >= first_art:
                col = next((j for j in range(first_art) if tab.rows[r][j] != 0), None)
                if col is None:
                    del tab.rows[r], tab.dens[r], tab.basis[r]
                    continue
                tab.pivot(r, col)
            r += 1
        tab.rows = [row[:first_art] + row[-1:] for row in tab.rows]
    sign = -one if lp.maximize else one
    cost = [zero] * width
    for i, c in lp.objective.items():
        cost[i] += sign * Fraction(c)
    red = tab.minimize(cost, first_art)
    if lp.tiebreak is not None:
        # stay on the optimal face: columns with positive reduced cost must stay nonbasic at zero
        barred = frozenset(j for j in range(first_art) if red[j] > 0)
        second = [zero] * first_art
        for i, c in lp.tiebreak.items():
            second[i] += Fraction(c)
        tab.minimize(second, first_art, barred)
    x = [zero] * n
    for r, b in enumerate(tab.basis):
        if b < n:
            x[b] = tab.rhs(r)
    value = sum((Fraction(c) * x[i] for i, c in lp.objective.items()), zero)
    return LPResult("optimal", tuple(x), value)


class IncrementalLP:
    """Lexicographic minimization that accepts new ``>=`` rows between solves.

    Starts from ``<=`` rows with non-negative right-hand sides, so the slack
    basis is feasible.  Each added row is restored with dual simplex steps from
    the previous optimal basis.  Objectives are compared lexicographically in
    the order given.  Bland-style smallest-index rules keep every step
    deterministic and cycle-free.
    """

    def __init__(self, num_vars: int, rows: list[tuple[Mapping[int, Fraction], Fraction]],
                 objectives: list[Mapping[int, Fraction]]):
        self.n = num_vars
        width = num_vars + len(rows)
        ints, dens, basis = [], [], []
        for k, (coeffs, rhs) in enumerate(rows):
            if Fraction(rhs) < 0:
                raise ValueError("initial rows need non-negative right-hand sides")
            row = [Fraction(0)] * (width + 1)
            for i, c in coeffs.items():
                row[i] += Fraction(c)
            row[num_vars + k] = Fraction(1)
            row[-1] = Fraction(rhs)
            r, d = _int_row(row)
            ints.append(r)
            dens.append(d)
            basis.append(num_vars + k)
        self.tab = _Tableau(ints, dens, basis)
        self.width = width
        self.objs: list[tuple[list[int], int]] = []
        for obj in objectives:
            row = [Fraction(0)] * (width + 1)
            for i, c in obj.items():
                row[i] += Fraction(c)
            self.objs.append(_int_row(row))  # slack basis: costs are already reduced
        self.solve()  # later rows rely on a dual feasible basis

    def _pivot(self, r: int, c: int) -> None:
        tab = self.tab
        row, p = tab.rows[r], tab.rows[r][c]
        if p < 0:
            row, p = [-v for v in row], -p
        nz = [j for j, v in enumerate(row) if v]
        self.objs = [tab._eliminate(o, d, row, p, c, nz) if o[c] else (o, d) for o, d in self.objs]
        tab.pivot(r, c)

    def _reduced(self, j: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(o[j], d) for o, d in self.objs)

    def add_ge(self, coeffs: Mapping[int, Fraction], rhs) -> None:
        tab = self.tab
        for k in range(len(tab.rows)):
            tab.rows[k].insert(-1, 0)
        self.objs = [(o[:-1] + [0, o[-1]], d) for o, d in self.objs]
        row = [Fraction(0)] * (self.width + 2)
        for i, c in coeffs.items():
            row[i] -= Fraction(c)
        row[self.width] = Fraction(1)
        row[-1] = -Fraction(rhs)
        new, den = _int_row(row)
        for r, b in enumerate(tab.basis):
            if new[b]:
                src = tab.rows[r]
                new, den = tab._eliminate(new, den, src, src[b], b, [j for j, v in enumerate(src) if v])
        tab.rows.append(new)
        tab.dens.append(den)
        tab.basis.append(self.width)
        self.width += 1

    def solve(self) -> str:
        """Returns ``"optimal"`` or ``"infeasible"``; raises UnboundedError."""
        tab = self.tab
        while True:
            bad = [r for r, row in enumerate(tab.rows) if row[-1] < 0]
            if bad:
                r = min(bad, key=lambda r: tab.basis[r])
                row = tab.rows[r]
                best = None
                for j in range(self.width):
                    a = row[j]
                    if a < 0:
                        key = tuple(Fraction(o[j], d * -a) for o, d in self.objs)
                        if best is None or key < best[0]:
                            best = (key, j)
                if best is None:
                    return "infeasible"
                self._pivot(r, best[1])
                continue
            zero = (Fraction(0),) * len(self.objs)
            enter = next((j for j in range(self.width) if self._reduced(j) < zero), None)
            if enter is None:
                return "optimal"
            best = None
            for r, row in enumerate(tab.rows):
                a = row[enter]
                if a > 0:
                    key = (Fraction(row[-1], a), tab.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                raise UnboundedError("objective is unbounded")
            self._pivot(best[1], enter)

    def x(self) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * self.n
        for r, b in enumerate(self.tab.basis):
            if b < self.n:
                out[b] = self.tab.rhs(r)
        return tuple(out)
