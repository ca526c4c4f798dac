"""Admissible and quadratic lattices between the root and weight lattices.

A sublattice Q <= L <= P is admissible when its dominant monoid L+ is
finitely generated and free; it is quadratic when additionally every
dominant element below a sum of two basis elements has basis-height at
most two.  Freeness is certified only up to an enumeration height bound
(recorded in the reports); the height criterion hgt(alpha) >= 0 on simple
roots is checked alongside and the two verdicts are asserted to agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .cartan import (FinTypeLabel, WeightVec, build_cartan, dominant_leq,
                     quadratic_basis, root_rows)

Q = Fraction


def _hnf(rows: list[list[int]]) -> list[list[int]]:
    """Row Hermite normal form; returns the nonzero rows (a Z-basis)."""
    mat = [list(r) for r in rows]
    m = len(mat)
    n = len(mat[0]) if m else 0
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if mat[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        # gcd out the column below the pivot
        changed = True
        while changed:
            changed = False
            for i in range(r + 1, m):
                if mat[i][c] != 0:
                    q = mat[i][c] // mat[r][c]
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[r])]
                    if mat[i][c] != 0:
                        mat[r], mat[i] = mat[i], mat[r]
                        changed = True
        if mat[r][c] < 0:
            mat[r] = [-a for a in mat[r]]
        for i in range(r):
            q = mat[i][c] // mat[r][c]
            if q:
                mat[i] = [a - q * b for a, b in zip(mat[i], mat[r])]
        r += 1
        if r == m:
            break
    return [row for row in mat[:r]]


@dataclass
class SubLattice:
    """Finite-index sublattice of the weight lattice containing the roots."""

    ambient: FinTypeLabel
    generators: list[WeightVec]

    def __post_init__(self):
        self.gcm = build_cartan(self.ambient)
        n = self.gcm.n
        if len(self.generators) != n:
            raise ValueError("generators must form a Z-basis (rank many)")
        rows = [[int(c) for c in g.coords] for g in self.generators]
        if any(c.denominator != 1 for g in self.generators for c in g.coords):
            raise ValueError("generators must be integral weights")
        if linalg.rank([[Q(x) for x in r] for r in rows]) != n:
            raise ValueError("generators are not Z-linearly independent")
        for root in root_rows(self.gcm):
            if self.coefficients(WeightVec(self.basis_id, tuple(root))) is None:
                raise ValueError("sublattice does not contain the root lattice")

    @property
    def basis_id(self) -> str:
        return self.generators[0].basis_id

    def coefficients(self, lam: WeightVec) -> tuple[int, ...] | None:
        """Integer coordinates of lam over the generators; None if outside."""
        n = self.gcm.n
        cols = [[self.generators[i].coords[j] for i in range(n)] for j in range(n)]
        sol = linalg.solve(cols, list(lam.coords))
        if sol is None or any(c.denominator != 1 for c in sol):
            return None
        return tuple(int(c) for c in sol)

    def contains(self, lam: WeightVec) -> bool:
        return lam.is_integral() and self.coefficients(lam) is not None


def full_weight_lattice(label: FinTypeLabel) -> SubLattice:
    gcm = build_cartan(label)
    bid = str(label)
    gens = [WeightVec(bid, tuple(Q(1) if j == i else Q(0) for j in range(gcm.n)))
            for i in range(gcm.n)]
    return SubLattice(label, gens)


def root_lattice(label: FinTypeLabel) -> SubLattice:
    gcm = build_cartan(label)
    bid = str(label)
    rows = root_rows(gcm)
    ints = [[int(x) for x in row] for row in rows]
    if any(Q(x) != y for row, qrow in zip(ints, rows) for x, y in zip(row, qrow)):
        raise AssertionError("root coordinates must be integral")
    basis = _hnf(ints)
    gens = [WeightVec(bid, tuple(Q(x) for x in row)) for row in basis]
    return SubLattice(label, gens)


def hgt(lam: WeightVec, basis: list[WeightVec]) -> Fraction:
    """Sum of the expansion coefficients of lam over the given basis."""
    n = len(lam.coords)
    cols = [[b.coords[j] for b in basis] for j in range(n)]
    sol = linalg.solve(cols, list(lam.coords))
    if sol is None:
        raise ValueError("weight not in the span of the basis")
    return sum(sol, Q(0))


def _dominant_points(lat: SubLattice, bound: int):
    """Nonzero dominant lattice points with coordinate sum <= bound."""
    n = lat.gcm.n

    def rec(prefix, budget):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for c in range(budget + 1):
            yield from rec(prefix + [c], budget - c)

    for coords in rec([], bound):
        if all(c == 0 for c in coords):
            continue
        v = WeightVec(lat.basis_id, tuple(Q(c) for c in coords))
        if lat.contains(v):
            yield v


def monoid_basis(lat: SubLattice, height_bound: int) -> list[WeightVec] | None:
    """Irreducibles of the dominant monoid, iff expansion over them is unique.

    The verdict is certified only for elements of coordinate height up to
    the bound; None means the bounded test found non-freeness.
    """
    points = sorted(_dominant_points(lat, height_bound),
                    key=lambda v: (sum(v.coords), v.coords))
    point_set = {v.coords for v in points}
    irred: list[WeightVec] = []
    for v in points:
        # any decomposition contains an irreducible summand of smaller height
        decomposable = any(
            all(w.coords[j] <= v.coords[j] for j in range(len(v.coords)))
            and w.coords != v.coords
            and tuple(v.coords[j] - w.coords[j] for j in range(len(v.coords))) in point_set
            for w in irred)
        if not decomposable:
            irred.append(v)

    # unique factorization over the irreducibles, within the bound
    memo: dict[tuple, int] = {}

    def expansions(coords, start):
        if all(c == 0 for c in coords):
            return 1
        key = (coords, start)
        if key not in memo:
            total = 0
            for k in range(start, len(irred)):
                w = irred[k].coords
                if all(w[j] <= coords[j] for j in range(len(coords))):
                    total += expansions(tuple(c - d for c, d in zip(coords, w)), k)
                    if total > 1:
                        break
            memo[key] = total
        return memo[key]

    for v in points:
        if expansions(v.coords, 0) != 1:
            return None
    return sorted(irred, key=lambda v: v.coords, reverse=True)


def is_quadratic(lat: SubLattice, bound: int | None = None) -> tuple[bool, dict]:
    """Quadratic verdict with certificate.

    Checks the height criterion hgt(alpha) >= 0 on every simple root and
    the direct condition (every dominant lattice element below a sum of
    two basis elements has height <= 2); the two must agree.
    """
    n = lat.gcm.n
    bound = bound if bound is not None else 6 * n
    basis = monoid_basis(lat, bound)
    if basis is None:
        raise ValueError("monoid basis unavailable (not free within bound)")
    report: dict = {"bound": bound, "basis": [list(map(str, b.coords)) for b in basis]}
    if len(basis) != n:
        report["certificate"] = "monoid basis size differs from rank"
        return False, report

    by_height = True
    for i, root in enumerate(root_rows(lat.gcm)):
        h = hgt(WeightVec(lat.basis_id, tuple(root)), basis)
        if h < 0:
            by_height = False
            report["certificate"] = {"simple_root": i, "hgt": str(h)}
            break

    by_direct = True
    for e, f in itertools.combinations_with_replacement(basis, 2):
        for lam in _dominant_below(lat, e + f):
            if lat.contains(lam) and hgt(lam, basis) > 2:
                by_direct = False
                report.setdefault("certificate",
                                  {"below": [str(c) for c in (e + f).coords],
                                   "weight": [str(c) for c in lam.coords]})
                break
        if not by_direct:
            break

    assert by_height == by_direct, "height and direct criteria disagree"
    return by_height, report


def _dominant_below(lat: SubLattice, top: WeightVec):
    """Dominant integral weights <= top in the dominance order."""
    gcm = lat.gcm
    rows = root_rows(gcm)
    n = gcm.n
    cols = [[rows[i][j] for i in range(n)] for j in range(n)]
    top_rc = linalg.solve(cols, list(top.coords))
    assert top_rc is not None and all(c >= 0 for c in top_rc)
    boxes = [range(int(c) + 1) for c in top_rc]
    for combo in itertools.product(*boxes):
        coords = [top.coords[j] - sum(Q(combo[i]) * rows[i][j] for i in range(n))
                  for j in range(n)]
        if all(c >= 0 and c.denominator == 1 for c in coords):
            yield WeightVec(lat.basis_id, tuple(coords))


def _intermediate_lattices(label: FinTypeLabel):
    """All lattices Q <= L <= P, via the finite quotient P/Q.

    Classes are fractional root-coordinate vectors; subgroups are found by
    brute-force closure (the quotient has order at most 5 here).
    """
    gcm = build_cartan(label)
    n = gcm.n
    rows = root_rows(gcm)
    cols = [[rows[i][j] for i in range(n)] for j in range(n)]

    def cls(coords):
        sol = linalg.solve(cols, list(coords))
        return tuple(c - int(c) if c >= 0 else c - (int(c) - 1) for c in sol)

    zero = tuple(Q(0) for _ in range(n))
    reps = {zero: tuple(Q(0) for _ in range(n))}
    frontier = [reps[zero]]
    while frontier:
        nxt = []
        for rep in frontier:
            for i in range(n):
                cand = tuple(rep[j] + (1 if j == i else 0) for j in range(n))
                key = cls(cand)
                if key not in reps:
                    reps[key] = cand
                    nxt.append(cand)
        frontier = nxt

    classes = sorted(reps)
    nonzero = [c for c in classes if c != zero]
    add = {(a, b): cls(tuple(x + y for x, y in zip(reps[a], reps[b])))
           for a in classes for b in classes}
    out = []
    for k in range(len(nonzero) + 1):
        for subset in itertools.combinations(nonzero, k):
            group = {zero, *subset}
            if all(add[(a, b)] in group for a in group for b in group):
                out.append(sorted(group))
    root_rows_int = [[int(x * 1) if x.denominator == 1 else None for x in row]
                     for row in rows]
    assert all(x is not None for row in root_rows_int for x in row)
    lattices = []
    for group in out:
        gen_rows = [list(map(int, row)) for row in root_rows_int]
        for c in group:
            if c != zero:
                gen_rows.append([int(x) for x in reps[c]])
        basis = _hnf(gen_rows)
        gens = [WeightVec(str(label), tuple(Q(x) for x in row)) for row in basis]
        lattices.append((len(group), SubLattice(label, gens)))
    return lattices


def classify_quadratic(label: FinTypeLabel, bound: int | None = None):
    """(description, verdict, report) for every lattice between Q and P."""
    out = []
    lattices = _intermediate_lattices(label)
    full_order = max(order for order, _ in lattices)
    for order, lat in sorted(lattices, key=lambda t: -t[0]):
        if order == full_order:
            name = "P" if full_order > 1 else "P=Q"
        elif order == 1:
            name = "Q"
        else:
            name = f"index-{full_order // order}"
        try:
            verdict, report = is_quadratic(lat, bound)
        except ValueError:
            b = bound if bound is not None else 6 * lat.gcm.n
            verdict, report = False, {"bound": b,
                                      "certificate": "monoid not free within bound"}
        out.append((name, verdict, report))
    return out


def check_lemma7(label: FinTypeLabel) -> dict:
    """Chain facts for the quadratic basis: eps_i <= eps_1 + eps_{i-1}, the
    uniqueness of that decomposition, and the dominant down-sets of eps_i."""
    fam = label.family
    if fam not in ("A", "B", "C", "BC"):
        raise ValueError("quadratic basis families only")
    gcm = build_cartan(label)
    eps = quadratic_basis(label)
    zero = WeightVec(str(label), (Q(0),) * gcm.n)
    lat = root_lattice(label) if (fam == "B" and label.rank >= 2) else full_weight_lattice(label)
    report = {"label": str(label), "part_i": True, "part_ii": True,
              "downsets": {}, "counterexample": None}
    for i in range(1, gcm.n + 1):
        e_i = eps[i - 1]
        e_prev = eps[i - 2] if i >= 2 else zero
        if not dominant_leq(e_i, eps[0] + e_prev, gcm):
            report["part_i"] = False
        down = [v for v in _dominant_below(lat, e_i) if lat.contains(v)]
        report["downsets"][i] = sorted(tuple(map(int, v.coords)) for v in down)
        for mu in _dominant_below(lat, eps[0]):
            for lam in _dominant_below(lat, e_prev):
                if dominant_leq(e_i, lam + mu, gcm):
                    if not (mu == eps[0] and lam == e_prev):
                        report["part_ii"] = False
                        report["counterexample"] = (list(map(str, lam.coords)),
                                                    list(map(str, mu.coords)))
    return report
