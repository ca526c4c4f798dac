"""Straightening systems, minuscule posets, graded counts."""

import itertools
import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from smt_kit import cartan as C, involutions as I, smt as S


def diamond_system():
    """Poset a < b, c < d with b, c incomparable; one relation bc = ad."""
    order = {("a", "b"), ("a", "c"), ("a", "d"), ("b", "d"), ("c", "d")}
    leq = lambda x, y: x == y or (x, y) in order
    grade = {"a": 0, "b": 1, "c": 1, "d": 2}
    relations = {frozenset(("b", "c")): [(Q(1), ("a", "d"))]}
    return S.StraighteningSystem("abcd", leq, grade, relations)


def test_straighten_diamond():
    sys_ = diamond_system()
    assert S.straighten(("a", "d"), sys_) == {("a", "d"): Q(1)}
    assert S.straighten(("b", "c"), sys_) == {("a", "d"): Q(1)}
    # degree three, two rewrites needed
    nf = S.straighten(("b", "c", "b"), sys_)
    assert nf == {("a", "b", "d"): Q(1)}
    # brute-force check in the quotient space: monomials of degree 2 modulo
    # the single relation have the standard monomials as a basis
    deg2 = list(itertools.combinations_with_replacement("abcd", 2))
    standard = [m for m in deg2 if sys_.is_standard(m)]
    assert len(standard) == len(deg2) - 1


def test_straighten_missing_relation():
    order = {("a", "b")}
    leq = lambda x, y: x == y or (x, y) in order
    sys_ = S.StraighteningSystem("abc", leq, {"a": 0, "b": 1, "c": 1}, {})
    with pytest.raises(ValueError):
        S.straighten(("b", "c"), sys_)


def test_system_rejects_nondecreasing_relation():
    order = {("a", "b"), ("a", "c"), ("a", "d"), ("b", "d"), ("c", "d")}
    leq = lambda x, y: x == y or (x, y) in order
    grade = {"a": 0, "b": 1, "c": 1, "d": 2}
    with pytest.raises(ValueError):
        S.StraighteningSystem("abcd", leq, grade,
                              {frozenset(("b", "c")): [(Q(1), ("d", "d"))]})


def test_confluence_random_orders():
    # rewriting in arbitrary pair order reaches the same normal form
    sys_ = diamond_system()
    rng = random.Random(5)

    def straighten_random(mono):
        work = {sys_.sort_mono(mono): Q(1)}
        while True:
            bad = [m for m in work if not sys_.is_standard(m)]
            if not bad:
                return work
            target = rng.choice(bad)
            coef = work.pop(target)
            pairs = [p for p in itertools.combinations(target, 2)
                     if not sys_.comparable(*p)]
            a, b = rng.choice(pairs)
            rest = list(target)
            rest.remove(a)
            rest.remove(b)
            for c, mono2 in sys_.relations[frozenset((a, b))]:
                key = sys_.sort_mono(tuple(rest) + tuple(mono2))
                work[key] = work.get(key, Q(0)) + coef * c
                if not work[key]:
                    del work[key]

    for mono in [("b", "c"), ("c", "b", "b"), ("b", "c", "c", "b")]:
        expected = S.straighten(mono, sys_)
        for _ in range(5):
            assert straighten_random(mono) == expected


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=1, max_size=4),
       st.lists(st.integers(0, 5), min_size=1, max_size=4),
       st.lists(st.integers(0, 5), min_size=0, max_size=3))
def test_monomial_order_axioms(m1, m2, m):
    # multiplicativity and positivity of the monomial order key
    leq = lambda x, y: x == y
    grade = {i: i % 3 for i in range(6)}
    sys_ = S.StraighteningSystem(range(6), leq, grade, {})
    k = sys_.monomial_key
    if k(tuple(m1)) < k(tuple(m2)):
        assert k(tuple(m1) + tuple(m)) < k(tuple(m2) + tuple(m))
    assert k(()) < k(tuple(m1))


def test_minuscule_poset_examples():
    p = S.minuscule_poset(C.FinTypeLabel("A", 2), 0)
    assert len(p) == 3
    assert all(p.leq(i, j) for i in range(3) for j in range(3) if i <= j)
    c3 = S.minuscule_poset(C.FinTypeLabel("C", 3), 0)
    assert len(c3) == 6
    assert S.count_standard_pairs(c3) == (21, 0)
    # 21 = dim S^2 V = dim V_{2 omega_1} for the symplectic vector module
    real = C.Realization(C.build_cartan(C.FinTypeLabel("C", 3)), "C3")
    assert C.weyl_dim(C.FinTypeLabel("C", 3), real.fundamental(0).scale(2)) == 21
    with pytest.raises(ValueError):
        S.minuscule_poset(C.FinTypeLabel("C", 3), 1)  # not minuscule


def test_three_chain_pairs():
    p = S.minuscule_poset(C.FinTypeLabel("A", 2), 0)
    assert S.count_standard_pairs(p) == (6, 0)


def test_e7_counts():
    p = S.e7_minuscule()
    assert len(p) == 56
    assert S.count_standard_pairs(p) == (1463, 133)


def test_e7_grading_split():
    # degrees (1, 27, 27, 1): top line, two 27-dimensional middle layers,
    # bottom line -- the codimension-one picture for the exceptional row
    from collections import Counter
    p = S.e7_minuscule()
    grades = Counter(p.d_degree(i) for i in range(len(p)))
    assert dict(grades) == {0: 1, 1: 27, 2: 27, 3: 1}
    e6 = C.build_cartan(C.FinTypeLabel("E", 6))
    r6 = C.Realization(e6, "E6")
    assert C.weyl_dim(e6, r6.fundamental(0)) == 27
    # |F| - |F_0| = 2 with the two extreme lines removed
    assert len(p) - (grades[1] + grades[2]) == 2


def test_e7_straighten():
    sys_, xs, ys = S.e7_system()
    nf = S.straighten((xs[5], ys[5]), sys_)
    want = {sys_.sort_mono((xs[k], ys[k])): Q((-1) ** k) for k in range(5)}
    assert nf == want
    assert S.straighten((xs[0], ys[0]), sys_) == {sys_.sort_mono((xs[0], ys[0])): Q(1)}
    # grades follow the distinguished-root coefficient
    assert [sys_.grade[i] for i in xs] == [0, 1, 1, 1, 1, 1]
    assert [sys_.grade[i] for i in ys] == [2, 1, 1, 1, 1, 1]


def test_graded_counts_small():
    case = I.AmbientCase("flip-sl2")
    gc = S.GradedCounts(case, 1)
    assert gc.count(1, "S") == S.expected(case, 1, 1, "S") == 5
    assert gc.count(1, "R") == S.expected(case, 1, 1, "R") == 4
    assert gc.count(2, "S") == S.expected(case, 1, 2, "S") == 14
    assert gc.count(2, "R") == S.expected(case, 1, 2, "R") == 9
    assert gc.count(3, "S") == S.expected(case, 1, 3, "S") == 30
    assert gc.count(3, "R") == S.expected(case, 1, 3, "R") == 16
    assert gc.count(0, "R") == 1


def test_graded_counts_sp4_m1():
    case = I.AmbientCase("flip-sp4")
    gc = S.GradedCounts(case, 1)
    assert gc.degree_split() == {0: 1, 1: case.dim_eps_sum([1])}


def test_two_basis_counts_quadrics():
    # the non-minuscule tier: the zero-weight path has an interior cut and
    # still lifts compatibly
    case = I.AmbientCase("sym-quadrics2")
    for deg, want in ((2, 5), (3, 7)):
        rep = S.two_basis_counts(case, deg)
        assert rep["ok"] and rep["below_total"] == want


def test_proctor_agreement_small():
    # weight-side order equals word-side Bruhat order on a minuscule quotient
    from smt_kit import weyl as W
    case = I.AmbientCase("flip-sl3")
    p = S.MinusculePoset(case.amb.real, 0)
    J = case.grassmann_parabolic()
    reps = [W.coset_from_weight(case.amb.real, J, p.highest, w) for w in p.weights]
    for i, j in itertools.product(range(len(p)), repeat=2):
        assert p.leq(i, j) == W.bruhat_leq(reps[i], reps[j])


def test_finite_case_structure_rejects_non_a():
    case = I.AmbientCase("flip-sp4")
    with pytest.raises(ValueError):
        S.finite_case_structure(case)


def test_remark48():
    for name in ("C2", "B2", "BC2"):
        rep = S.remark48_report(C.FinTypeLabel.parse(name))
        assert rep["agrees_mod_delta"]
