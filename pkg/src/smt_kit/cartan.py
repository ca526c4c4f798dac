"""Generalized Cartan matrices and exact weight arithmetic.

The conventions used throughout the package:

* A GCM is stored with ``entries[i][j] = <alpha_i, alpha_j^vee>``, so the
  i-th *row* is the fundamental-weight expansion of the simple root
  alpha_i.  Finite types follow Bourbaki numbering shifted to 0-based
  array indices (array index k is Bourbaki's alpha_{k+1}); matrices of
  affine shape put the distinguished node first (index 0).
* A nonreduced system of type BC_l is stored as the B_l-shaped matrix with
  the end node marked in ``nonreduced_nodes``; its fundamental weights obey
  <omega_l, alpha_l^vee> = 2, so coordinates over them are the same data
  as for B_l and only lattice-level consumers look at the marker.
* Weights are exact-rational coordinate vectors over the fundamental
  weights of a declared GCM, plus one extra delta coordinate that pairs to
  zero with every simple coroot.  In an affine realization the simple root
  at the distinguished node carries a +delta (or +2 delta) correction.

No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg

Q = Fraction

FAMILIES = ("A", "B", "C", "D", "E", "F", "G", "BC")

FINITE = "finite"
AFFINE = "affine"
INDEFINITE = "indefinite"


def is_gcm(entries) -> bool:
    """True iff the integer matrix satisfies the GCM axioms."""
    n = len(entries)
    if any(len(row) != n for row in entries):
        return False
    for i in range(n):
        for j in range(n):
            x = entries[i][j]
            if x != int(x):
                return False
            if i == j and x != 2:
                return False
            if i != j:
                if x > 0:
                    return False
                if (x == 0) != (entries[j][i] == 0):
                    return False
    return True


@dataclass(frozen=True)
class GCM:
    """Square integer generalized Cartan matrix with optional BC marker."""

    entries: tuple[tuple[int, ...], ...]
    nonreduced_nodes: frozenset[int] = frozenset()

    def __post_init__(self):
        ent = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", ent)
        object.__setattr__(self, "nonreduced_nodes", frozenset(self.nonreduced_nodes))
        if not is_gcm(ent):
            raise ValueError("not a generalized Cartan matrix")
        if any(not 0 <= i < self.n for i in self.nonreduced_nodes):
            raise ValueError("nonreduced node out of range")

    @property
    def n(self) -> int:
        return len(self.entries)

    def submatrix(self, nodes: tuple[int, ...]) -> "GCM":
        ent = tuple(tuple(self.entries[i][j] for j in nodes) for i in nodes)
        marked = frozenset(nodes.index(i) for i in self.nonreduced_nodes if i in nodes)
        return GCM(ent, marked)

    def block_sum(self, other: "GCM") -> "GCM":
        n, m = self.n, other.n
        ent = [[0] * (n + m) for _ in range(n + m)]
        for i in range(n):
            for j in range(n):
                ent[i][j] = self.entries[i][j]
        for i in range(m):
            for j in range(m):
                ent[n + i][n + j] = other.entries[i][j]
        marked = self.nonreduced_nodes | {n + i for i in other.nonreduced_nodes}
        return GCM(tuple(tuple(r) for r in ent), frozenset(marked))

    def to_json(self) -> dict:
        return {
            "rank": self.n,
            "entries": [list(r) for r in self.entries],
            "nonreduced": sorted(self.nonreduced_nodes),
        }

    @classmethod
    def from_json(cls, data: dict) -> "GCM":
        return cls(tuple(tuple(r) for r in data["entries"]),
                   frozenset(data.get("nonreduced", ())))


@dataclass(frozen=True)
class FinTypeLabel:
    """Finite family label; rank validity per family (B, BC from rank 1)."""

    family: str
    rank: int

    def __post_init__(self):
        fam, rk = self.family, self.rank
        if fam not in FAMILIES:
            raise ValueError(f"unknown family {fam!r}")
        legal = {
            "A": rk >= 1, "B": rk >= 1, "C": rk >= 2, "BC": rk >= 1,
            "D": rk >= 2, "E": rk in (6, 7, 8), "F": rk == 4, "G": rk == 2,
        }[fam]
        if not legal:
            raise ValueError(f"illegal rank {rk} for family {fam}")

    @classmethod
    def parse(cls, text: str) -> "FinTypeLabel":
        text = text.strip().replace("_", "")
        fam = "BC" if text.startswith("BC") else text[0]
        return cls(fam, int(text[len(fam):]))

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class WeightVec:
    """Exact weight: fundamental-weight coordinates plus a delta coordinate.

    coords[i] is the pairing with the i-th simple coroot; delta pairs to
    zero with every simple coroot.
    """

    basis_id: str
    coords: tuple[Fraction, ...]
    delta: Fraction = Q(0)

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Q(c) for c in self.coords))
        object.__setattr__(self, "delta", Q(self.delta))

    def _check(self, other: "WeightVec"):
        if self.basis_id != other.basis_id:
            raise ValueError(f"basis mismatch: {self.basis_id} vs {other.basis_id}")

    def __add__(self, other: "WeightVec") -> "WeightVec":
        self._check(other)
        return WeightVec(self.basis_id,
                         tuple(a + b for a, b in zip(self.coords, other.coords)),
                         self.delta + other.delta)

    def __sub__(self, other: "WeightVec") -> "WeightVec":
        return self + (-other)

    def __neg__(self) -> "WeightVec":
        return self.scale(-1)

    def scale(self, c) -> "WeightVec":
        c = Q(c)
        return WeightVec(self.basis_id, tuple(c * x for x in self.coords), c * self.delta)

    def pairing(self, i: int) -> Fraction:
        """Pairing with the i-th simple coroot."""
        return self.coords[i]

    def is_zero(self) -> bool:
        return self.delta == 0 and all(c == 0 for c in self.coords)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def to_json(self) -> dict:
        return {"basis": self.basis_id,
                "coords": [str(c) for c in self.coords],
                "delta": str(self.delta)}

    @classmethod
    def from_json(cls, data: dict) -> "WeightVec":
        return cls(data["basis"], tuple(Q(c) for c in data["coords"]), Q(data.get("delta", 0)))


# ---------------------------------------------------------------------------
# Cartan matrix tables


def build_cartan(label: FinTypeLabel) -> GCM:
    """Bourbaki-numbered Cartan matrix of a finite family (BC: B-shaped + marker)."""
    fam, n = label.family, label.rank
    ent = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, a=-1, b=-1):
        ent[i][j] = a
        ent[j][i] = b

    if fam in ("A",) or (fam in ("B", "C", "BC") and n == 1):
        for i in range(n - 1):
            bond(i, i + 1)
    elif fam in ("B", "BC"):
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, -2, -1)          # alpha_{n-1} long next to short alpha_n
    elif fam == "C":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, -1, -2)          # alpha_n long
    elif fam == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        if n >= 3:
            bond(n - 3, n - 1)             # branch node e_{n-1}+e_n attaches to alpha_{n-2}
    elif fam == "E":
        # chain 1-3-4-5-6(-7-8), node 2 attached to node 4 (Bourbaki)
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(1, 3)
    elif fam == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)                 # alpha_2 long, alpha_3 short
        bond(2, 3)
    elif fam == "G":
        bond(0, 1, -1, -3)                 # alpha_1 short, alpha_2 long
    marked = frozenset({n - 1}) if fam == "BC" else frozenset()
    return GCM(tuple(tuple(r) for r in ent), marked)


def _affine_entries(kind: str, n: int) -> list[list[int]]:
    """Literal affine matrices, node 0 first, <alpha_i, alpha_0^vee> in {0,-1}."""
    if kind == "C1":                        # C_n^(1), n >= 2
        base = build_cartan(FinTypeLabel("C", n)).entries
    elif kind == "A2even":                  # A_{2n}^(2)
        if n == 1:
            return [[2, -4], [-1, 2]]
        base = build_cartan(FinTypeLabel("B", n)).entries
    elif kind == "A2odd":                   # A_{2n-1}^(2), n >= 2
        if n == 2:
            return [[2, -2, -2], [-1, 2, 0], [-1, 0, 2]]
        base = build_cartan(FinTypeLabel("D", n)).entries
    else:
        raise ValueError(f"unknown affine kind {kind!r}")
    ent = [[2] + [0] * n] + [[0] + list(row) for row in base]
    ent[0][1] = -2
    ent[1][0] = -1
    return ent


def build_affine_cartan(name: str) -> GCM:
    """Standard affine GCM for C_n^(1), A_{2n}^(2) or A_{2n-1}^(2).

    Accepts e.g. "C2^(1)", "A4^(2)", "A5^(2)" (underscores and braces
    tolerated).  Node 0 is the distinguished node, oriented so that
    <alpha_i, alpha_0^vee> is 0 or -1 for i != 0.
    """
    text = name.replace("_", "").replace("{", "").replace("}", "").strip()
    fam = text[0]
    body, _, tw = text[1:].partition("^")
    N = int(body)
    twist = tw.strip("()")
    if fam == "C" and twist == "1" and N >= 2:
        return GCM(tuple(tuple(r) for r in _affine_entries("C1", N)))
    if fam == "A" and twist == "2" and N >= 2:
        if N % 2 == 0:
            return GCM(tuple(tuple(r) for r in _affine_entries("A2even", N // 2)))
        if N >= 3:
            return GCM(tuple(tuple(r) for r in _affine_entries("A2odd", (N + 1) // 2)))
    raise ValueError(f"unknown affine label {name!r}")


# ---------------------------------------------------------------------------
# Symmetrizer and sign classification


def symmetrizer(m: GCM) -> list[Fraction] | None:
    """Positive rationals d with d_i a_ij = d_j a_ji, min d_i = 1; None if none."""
    n = m.n
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Q(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if m.entries[i][j] == 0 or i == j:
                    continue
                want = d[i] * m.entries[i][j] / m.entries[j][i]
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    return None
    assert all(x is not None for x in d)
    lo = min(d)
    return [x / lo for x in d]


def classify(m: GCM) -> str:
    """Sign class of the symmetrized form: finite / affine / indefinite.

    Raises ValueError on non-symmetrizable input.  finite = positive
    definite, affine = positive semidefinite with 1-dim kernel.
    """
    d = symmetrizer(m)
    if d is None:
        raise ValueError("non-symmetrizable GCM")
    b = [[d[i] * m.entries[i][j] for j in range(m.n)] for i in range(m.n)]
    pos, zero, neg = linalg.real_rooted_sign_counts(linalg.char_poly(b))
    if neg > 0:
        return INDEFINITE
    if zero == 0:
        return FINITE
    if zero == 1:
        return AFFINE
    return INDEFINITE


# ---------------------------------------------------------------------------
# Realization: weight coordinates plus delta bookkeeping


class Realization:
    """Weight coordinates of a GCM: fundamental weights plus a delta slot.

    ``delta_coeff`` is the delta-coefficient carried by the simple root at
    ``delta_node`` (1 for a standard affine matrix, 2 for a restricted tier
    whose node-0 root is twice an ambient root, None/0 for finite type).
    """

    def __init__(self, gcm: GCM, basis_id: str, delta_node: int | None = None,
                 delta_coeff=Q(1)):
        self.gcm = gcm
        self.basis_id = basis_id
        self.delta_node = delta_node
        self.delta_coeff = Q(delta_coeff) if delta_node is not None else Q(0)
        n = gcm.n
        self._roots = tuple(
            WeightVec(basis_id, tuple(Q(x) for x in gcm.entries[i]),
                      self.delta_coeff if i == delta_node else Q(0))
            for i in range(n)
        )
        self._expand_cache: dict[tuple, tuple[Fraction, ...] | None] = {}

    @classmethod
    def standard(cls, gcm: GCM, basis_id: str) -> "Realization":
        kind = classify(gcm)
        return cls(gcm, basis_id, delta_node=0 if kind == AFFINE else None)

    @property
    def n(self) -> int:
        return self.gcm.n

    def zero(self) -> WeightVec:
        return WeightVec(self.basis_id, (Q(0),) * self.n)

    def weight(self, coords, delta=0) -> WeightVec:
        return WeightVec(self.basis_id, tuple(Q(c) for c in coords), Q(delta))

    def fundamental(self, i: int) -> WeightVec:
        return WeightVec(self.basis_id,
                         tuple(Q(1) if j == i else Q(0) for j in range(self.n)))

    def delta(self) -> WeightVec:
        return WeightVec(self.basis_id, (Q(0),) * self.n, Q(1))

    def rho(self) -> WeightVec:
        return WeightVec(self.basis_id, (Q(1),) * self.n)

    def simple_root(self, i: int) -> WeightVec:
        return self._roots[i]

    def reflect(self, i: int, v: WeightVec) -> WeightVec:
        c = v.coords[i]
        return v if c == 0 else v - self._roots[i].scale(c)

    def act_letters(self, letters, v: WeightVec) -> WeightVec:
        # group element s_{l_1} ... s_{l_k} acts with s_{l_k} first
        for i in reversed(letters):
            v = self.reflect(i, v)
        return v

    def root_coords(self, v: WeightVec) -> tuple[Fraction, ...] | None:
        """Expansion of v over the simple roots (delta included); None if not in span."""
        key = (v.coords, v.delta)
        if key not in self._expand_cache:
            rows = [[self._roots[i].coords[j] for i in range(self.n)] for j in range(self.n)]
            rows.append([self._roots[i].delta for i in range(self.n)])
            rhs = list(v.coords) + [v.delta]
            sol = linalg.solve(rows, rhs)
            self._expand_cache[key] = tuple(sol) if sol is not None else None
        return self._expand_cache[key]

    def is_negative_root_vec(self, v: WeightVec) -> bool:
        c = self.root_coords(v)
        return c is not None and all(x <= 0 for x in c) and any(x < 0 for x in c)

    def dominant_conjugate(self, v: WeightVec) -> tuple[WeightVec, list[int]]:
        """(dominant representative, letters l with s_{l_1}...s_{l_k} v dominant).

        Terminates for weights in the Tits cone (all weights handled here
        are of positive or zero level).
        """
        letters: list[int] = []
        while True:
            i = next((j for j in range(self.n) if v.coords[j] < 0), None)
            if i is None:
                return v, letters
            v = self.reflect(i, v)
            letters.append(i)

    def is_real_root(self, v: WeightVec) -> bool:
        """True iff v is a real root (W-conjugate of a simple root)."""
        c = self.root_coords(v)
        if c is None or all(x == 0 for x in c):
            return False
        if all(x <= 0 for x in c):
            return self.is_real_root(-v)
        if any(x < 0 for x in c):
            return False
        # height descent: positive real roots reach a simple root
        guard = int(sum(c)) * 2 + 4
        while guard > 0:
            guard -= 1
            c = self.root_coords(v)
            if c is None or any(x < 0 for x in c):
                return False
            support = [i for i, x in enumerate(c) if x != 0]
            if len(support) == 1 and c[support[0]] == 1:
                return True
            i = next((j for j in range(self.n) if v.coords[j] > 0), None)
            if i is None:
                return False
            v = self.reflect(i, v)
        return False


# ---------------------------------------------------------------------------
# Dominance order


def root_rows(m: GCM) -> list[list[Fraction]]:
    """Fundamental-weight coordinates of the simple roots.

    A marked (BC) node has <omega_j, alpha_j^vee> = 2, so its column is
    halved relative to the raw matrix entries.
    """
    return [[Q(m.entries[i][j], 2 if j in m.nonreduced_nodes else 1)
             for j in range(m.n)] for i in range(m.n)]


def dominant_leq(lam: WeightVec, mu: WeightVec, m: GCM, use_delta: bool = True) -> bool:
    """True iff lam <= mu: mu - lam is a nonnegative-integer sum of simple roots."""
    lam._check(mu)
    kind = classify(m)
    if kind == AFFINE:
        if not use_delta:
            raise ValueError("need delta coordinate")
        real = Realization.standard(m, lam.basis_id)
        coords = real.root_coords(mu - lam)
    else:
        diff = mu - lam
        if diff.delta != 0:
            return False
        rows = root_rows(m)
        cols = [[rows[i][j] for i in range(m.n)] for j in range(m.n)]
        sol = linalg.solve(cols, list(diff.coords))
        coords = tuple(sol) if sol is not None else None
    if coords is None:
        return False
    return all(c >= 0 and c.denominator == 1 for c in coords)


# ---------------------------------------------------------------------------
# Finite root systems and the Weyl dimension formula


def finite_roots(m: GCM) -> list[tuple[tuple[Fraction, ...], tuple[Fraction, ...]]]:
    """Positive roots of a finite-type GCM as (root, coroot) coordinate pairs.

    Roots are in simple-root coordinates, coroots in simple-coroot
    coordinates; generated as the Weyl closure of the simple pairs.
    """
    if classify(m) != FINITE:
        raise ValueError("finite-type GCM required")
    n = m.n
    a = m.entries

    def reflect(pair, i):
        root, co = pair
        pr = sum(root[j] * a[j][i] for j in range(n))       # <root, alpha_i^vee>
        pc = sum(co[j] * a[i][j] for j in range(n))         # <alpha_i, coroot>
        new_root = tuple(root[j] - (pr if j == i else 0) for j in range(n))
        new_co = tuple(co[j] - (pc if j == i else 0) for j in range(n))
        return (new_root, new_co)

    seen = set()
    frontier = []
    for i in range(n):
        root = tuple(Q(1) if j == i else Q(0) for j in range(n))
        co = tuple(Q(1) if j == i else Q(0) for j in range(n))
        seen.add((root, co))
        frontier.append((root, co))
    while frontier:
        nxt = []
        for pair in frontier:
            for i in range(n):
                img = reflect(pair, i)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return [p for p in seen if all(x >= 0 for x in p[0])]


def weyl_dim(m: GCM | FinTypeLabel, lam: WeightVec) -> int:
    """dim V_lam by the Weyl dimension formula, evaluated exactly.

    Requires a reduced finite type (BC rejected) and dominant integral lam.
    """
    if isinstance(m, FinTypeLabel):
        m = build_cartan(m)
    if m.nonreduced_nodes:
        raise ValueError("nonreduced (BC) type has no Weyl dimension formula here")
    if not (lam.is_dominant() and lam.is_integral()):
        raise ValueError("dominant integral weight required")
    dim = Q(1)
    for _, co in finite_roots(m):
        num = sum((lam.coords[j] + 1) * co[j] for j in range(m.n))
        den = sum(co[j] for j in range(m.n))
        dim *= Q(num, den)
    assert dim.denominator == 1
    return int(dim)


def quadratic_basis(label: FinTypeLabel) -> list[WeightVec]:
    """The quadratic basis eps_1..eps_l (A/C/BC: omega_i; B: omega_i, 2 omega_l)."""
    fam, n = label.family, label.rank
    if fam not in ("A", "B", "C", "BC"):
        raise ValueError("quadratic basis exists for A, B, C, BC only")
    basis_id = str(label)
    out = []
    for i in range(n):
        coords = [Q(0)] * n
        coords[i] = Q(2) if (fam == "B" and i == n - 1) else Q(1)
        out.append(WeightVec(basis_id, tuple(coords)))
    return out


# ---------------------------------------------------------------------------
# Label identification up to simultaneous permutation


def _perm_match(a: GCM, b: GCM) -> bool:
    """True iff b equals a after a simultaneous row/column permutation."""
    if a.n != b.n:
        return False
    n = a.n

    def profile(m, i):
        return (m.entries[i][i], tuple(sorted((m.entries[i][j], m.entries[j][i])
                                              for j in range(n) if j != i)))

    pa = [profile(a, i) for i in range(n)]
    pb = [profile(b, i) for i in range(n)]
    if sorted(pa) != sorted(pb):
        return False

    assignment: list[int | None] = [None] * n
    used = [False] * n

    def ok(i, j):
        if pa[i] != pb[j]:
            return False
        for k in range(n):
            t = assignment[k]
            if t is None:
                continue
            if a.entries[i][k] != b.entries[j][t] or a.entries[k][i] != b.entries[t][j]:
                return False
        return True

    def backtrack(i):
        if i == n:
            return True
        for j in range(n):
            if not used[j] and ok(i, j):
                assignment[i] = j
                used[j] = True
                if backtrack(i + 1):
                    return True
                assignment[i] = None
                used[j] = False
        return False

    return backtrack(0)


def _finite_candidates(n: int):
    for fam, lo in (("A", 1), ("C", 2), ("B", 2), ("D", 3),
                    ("E", 6), ("F", 4), ("G", 2)):
        if fam == "E":
            if n in (6, 7, 8):
                yield FinTypeLabel("E", n)
        elif fam == "F":
            if n == 4:
                yield FinTypeLabel("F", 4)
        elif fam == "G":
            if n == 2:
                yield FinTypeLabel("G", 2)
        elif n >= lo:
            yield FinTypeLabel(fam, n)


def identify_label(m: GCM) -> str:
    """Name of m among the stored finite/affine tables, up to node permutation.

    Returns e.g. "C3", "C2^(1)", "A4^(2)"; unmatched symmetrizable input
    falls through to its sign class ("indefinite" et al.).
    """
    kind = classify(m)
    if kind == FINITE:
        for label in _finite_candidates(m.n):
            if _perm_match(build_cartan(label), m):
                return str(label)
        return "finite (unrecognized)"
    if kind == AFFINE:
        k = m.n - 1
        names = []
        if k >= 2:
            names.append(f"C{k}^(1)")
        names.append(f"A{2 * k}^(2)")
        if k >= 2:
            names.append(f"A{2 * k - 1}^(2)")
        for name in names:
            if _perm_match(build_affine_cartan(name), m):
                return name
        return "affine (unrecognized)"
    return INDEFINITE


def gcm_equiv(a: GCM, b: GCM) -> bool:
    """Equality up to a simultaneous row/column permutation."""
    return _perm_match(a, b)
