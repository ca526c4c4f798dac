"""Extended Cartan data for a diagram plus a spherical weight.

Attaching a node 0 to a Cartan matrix A by a dominant weight eps gives the
extended matrix with row 0 equal to -<eps, alpha_j^vee> and column 0 in
{0,-1}.  Done to a finite restricted system of type A/B/C/D/BC with eps the
first quadratic-basis weight, the result is the finite or affine matrix of
the classical table (A_l -> C_{l+1}, B_l/BC_l -> A_{2l}^(2), C_l ->
C_l^(1), D_l -> A_{2l-1}^(2)).

The restricted tier realization carries the node-0 root with a +2 delta
correction (it is twice an ambient root); the split normal form of a tier
weight over (e_eps_1..e_eps_l, gamma, delta) feeds the two gradings egr and
gr.  gamma is half the node-0 fundamental weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import (AFFINE, FINITE, GCM, FinTypeLabel, Realization, WeightVec,
                     build_cartan, classify, identify_label)
from . import linalg

Q = Fraction

__all__ = [
    "ExtendedDatum", "SplitWeight", "extend_ambient", "extend_restricted",
    "identify_label", "egr", "gr", "n0", "split_normal_form",
]


@dataclass(frozen=True)
class SplitWeight:
    """Normal form a_0..a_l over e_eps_0..e_eps_l plus gamma and delta parts."""

    eps_coords: tuple[Fraction, ...]
    gamma: Fraction
    delta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "eps_coords", tuple(Q(c) for c in self.eps_coords))
        object.__setattr__(self, "gamma", Q(self.gamma))
        object.__setattr__(self, "delta", Q(self.delta))


class ExtendedDatum:
    """An extension step: base matrix, attaching weight, extended matrix.

    For restricted extensions the tier realization, the e_eps weights and
    the quadratic-basis label are attached as well.
    """

    def __init__(self, base: GCM, epsilon: WeightVec, extended: GCM,
                 kind: str, label: FinTypeLabel | None = None,
                 basis_id: str | None = None):
        self.base = base
        self.epsilon = epsilon
        self.extended = extended
        self.kind = kind                      # "ambient" or "restricted"
        self.label = label
        self.classification = classify(extended)
        bid = basis_id or f"ext({epsilon.basis_id})"
        if self.classification == AFFINE:
            coeff = Q(2) if kind == "restricted" else Q(1)
            self.real = Realization(extended, bid, delta_node=0, delta_coeff=coeff)
        else:
            self.real = Realization(extended, bid)
        self._check_extension_rules()

    def _check_extension_rules(self):
        n = self.base.n
        ext = self.extended.entries
        assert all(ext[i + 1][j + 1] == self.base.entries[i][j]
                   for i in range(n) for j in range(n))
        scale = 2 if self.kind == "restricted" else 1
        for j in range(n):
            pairing = self.epsilon.coords[j]
            assert ext[0][j + 1] == -scale * pairing
            assert ext[j + 1][0] == (-1 if pairing != 0 else 0)

    @property
    def rank(self) -> int:
        return self.base.n

    def is_affine(self) -> bool:
        return self.classification == AFFINE

    def e_omega0(self) -> WeightVec:
        """Fundamental weight of node 0; halved in the restricted tier."""
        w = self.real.fundamental(0)
        return w.scale(Q(1, 2)) if self.kind == "restricted" else w

    def gamma(self) -> WeightVec:
        return self.real.fundamental(0).scale(Q(1, 2)) if self.kind == "restricted" \
            else self.real.fundamental(0)

    def e_eps(self, i: int) -> WeightVec:
        """The split basis weight e_eps_i in tier coordinates (restricted only).

        Coordinates are pairings with the standard tier coroots, so the
        last basis weight of both B and BC reads 2*omega_l here (for BC the
        doubled value comes from the nonreduced coroot convention).
        """
        if self.kind != "restricted":
            raise ValueError("e_eps lives on the restricted tier")
        if i == 0:
            return self.real.fundamental(0)
        if self.label is None or self.label.family not in ("A", "B", "C", "BC"):
            raise ValueError("no quadratic basis for this label")
        l = self.rank
        coords = [Q(0)] * (l + 1)
        coords[i] = Q(2) if (self.label.family in ("B", "BC") and i == l) else Q(1)
        return self.real.weight(coords)

    def pairing_D(self, v: WeightVec) -> Fraction:
        """<v, D> for the grading element D normalized by <alpha_0, D> = 1.

        Affine: the fundamental weights are D-normalized to zero, so the
        pairing is the delta coordinate.  Finite: D kills the base weights
        and the value is twice the node-0 coefficient of the root expansion
        (node-0 root = twice an ambient root in the restricted tier).
        """
        if self.is_affine():
            return v.delta
        coords = self.real.root_coords(v)
        if coords is None:
            raise ValueError("weight outside the root span")
        scale = 2 if self.kind == "restricted" else 1
        return scale * coords[0]


def extend_ambient(base: GCM, eps: WeightVec, basis_id: str | None = None) -> ExtendedDatum:
    """Attach node 0 to `base` by a dominant integral weight eps."""
    if not (eps.is_dominant() and eps.is_integral()):
        raise ValueError("dominant integral weight required")
    n = base.n
    ent = [[2] + [-int(eps.coords[j]) for j in range(n)]]
    for i in range(n):
        ent.append([-1 if eps.coords[i] != 0 else 0] + list(base.entries[i]))
    ext = GCM(tuple(tuple(r) for r in ent))
    return ExtendedDatum(base, eps, ext, kind="ambient", basis_id=basis_id)


def _restricted_pairings(label: FinTypeLabel) -> list[int]:
    """<eps, alpha_i^vee> for the canonical attaching weight of the table."""
    fam, n = label.family, label.rank
    if fam in ("B", "BC") and n == 1:
        return [2]                      # eps = 2*omega_1 (B_1) / omega_1 with doubled pairing (BC_1)
    if fam == "D" and n == 2:
        return [1, 1]                   # e_1 continues as omega_1 + omega_2
    return [1] + [0] * (n - 1)          # eps = omega_1


def extend_restricted(label: FinTypeLabel | str, rank: int | None = None) -> ExtendedDatum:
    """Extended matrix of a restricted system of type A/B/C/D/BC.

    Row 0 is -2<eps, alpha_i^vee>, column 0 is 0/-1; eps is the first
    quadratic-basis weight (2*omega_1 for B_1).
    """
    if isinstance(label, str):
        label = FinTypeLabel(label, rank) if rank is not None else FinTypeLabel.parse(label)
    if label.family not in ("A", "B", "C", "D", "BC"):
        raise ValueError(f"unsupported restricted family {label.family}")
    base = build_cartan(label)
    pair = _restricted_pairings(label)
    n = base.n
    ent = [[2] + [-2 * p for p in pair]]
    for i in range(n):
        ent.append([-1 if pair[i] != 0 else 0] + list(base.entries[i]))
    ext = GCM(tuple(tuple(r) for r in ent))
    eps = WeightVec(str(label), tuple(Q(p) for p in pair))
    return ExtendedDatum(base, eps, ext, kind="restricted", label=label,
                         basis_id=f"tier({label})")


def split_normal_form(datum: ExtendedDatum, v: WeightVec) -> SplitWeight:
    """Expand a tier weight as sum(a_i e_eps_i) + g*gamma + b*delta, a_0 = 0."""
    if datum.kind != "restricted":
        raise ValueError("split normal form lives on the restricted tier")
    l = datum.rank
    eps = [datum.e_eps(i) for i in range(1, l + 1)]
    rows = [[eps[i].coords[j + 1] for i in range(l)] for j in range(l)]
    sol = linalg.solve(rows, [v.coords[j + 1] for j in range(l)])
    assert sol is not None
    a = [Q(0)] + list(sol)
    gamma = 2 * v.coords[0]             # gamma = half the node-0 fundamental weight
    return SplitWeight(tuple(a), gamma, v.delta)


def egr(datum: ExtendedDatum, x: SplitWeight | WeightVec) -> Fraction:
    """Grading sum(i * a_i) + <v, D> of a split weight.

    Anchors: egr(e_omega_0) = n_0, egr of the first l tier simple roots is
    0, egr of the last one is positive.
    """
    if isinstance(x, WeightVec):
        split = split_normal_form(datum, x)
        vec = x
    else:
        split = x
        vec = _split_to_vec(datum, x)
    s = sum((Q(i) * split.eps_coords[i] for i in range(len(split.eps_coords))), Q(0))
    return s + datum.pairing_D(vec)


def gr(split: SplitWeight) -> Fraction:
    """sum(i * a_i) over the eps coordinates (weights of the spherical lattice)."""
    return sum((Q(i) * split.eps_coords[i] for i in range(len(split.eps_coords))), Q(0))


def _split_to_vec(datum: ExtendedDatum, s: SplitWeight) -> WeightVec:
    v = datum.gamma().scale(s.gamma) + datum.real.delta().scale(s.delta)
    for i, a in enumerate(s.eps_coords):
        if a:
            v = v + datum.e_eps(i).scale(a)
    return v


def n0(datum: ExtendedDatum) -> Fraction:
    """<e_omega_0, D>: zero in affine type, (l+1)/2 in finite type."""
    if datum.classification not in (FINITE, AFFINE):
        raise ValueError("indefinite extension has no D normalization here")
    return datum.pairing_D(datum.e_omega0())
