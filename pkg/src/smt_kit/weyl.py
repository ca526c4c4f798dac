"""Weyl groups of symmetrizable GCMs: words, Bruhat order, Demazure characters.

Elements are words in simple reflections acting on the delta-extended
weight coordinates of a Realization; that action is faithful, so element
identity, reduction and descents are all certified by it.  Minimal coset
representatives, interval enumeration below an element, the special
telescoping words built from the distinguished node, and the
divided-difference character of a Schubert cell are provided.
"""

from __future__ import annotations

from fractions import Fraction

from .cartan import Realization, WeightVec

Q = Fraction


class WeylWord:
    """A word in simple reflections of one realization.

    Two words are equal iff their actions on the fundamental weights (and
    delta) agree; reduce() peels left descents against that action.
    """

    def __init__(self, real: Realization, letters):
        self.real = real
        self.letters = tuple(int(i) for i in letters)
        self._key = None
        self._reduced: tuple[int, ...] | None = None

    def _images(self):
        real = self.real
        return tuple(real.act_letters(self.letters, real.fundamental(j))
                     for j in range(real.n))

    @property
    def key(self):
        if self._key is None:
            self._key = tuple((im.coords, im.delta) for im in self._images())
        return self._key

    def __eq__(self, other):
        return isinstance(other, WeylWord) and self.real is other.real and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"WeylWord({list(self.letters)})"

    def act(self, v: WeightVec) -> WeightVec:
        return self.real.act_letters(self.letters, v)

    def inverse(self) -> "WeylWord":
        return WeylWord(self.real, tuple(reversed(self.letters)))

    def __mul__(self, other: "WeylWord") -> "WeylWord":
        if self.real is not other.real:
            raise ValueError("mixed realizations")
        return WeylWord(self.real, self.letters + other.letters)

    def is_identity(self) -> bool:
        real = self.real
        return all(self.act(real.fundamental(j)) == real.fundamental(j)
                   for j in range(real.n))

    def left_descent(self) -> int | None:
        """Smallest i with length(s_i w) < length(w); None for the identity."""
        real = self.real
        inv = tuple(reversed(self.letters))
        for i in range(real.n):
            if real.is_negative_root_vec(real.act_letters(inv, real.simple_root(i))):
                return i
        return None

    def right_descent_in(self, nodes) -> int | None:
        real = self.real
        for j in sorted(nodes):
            if real.is_negative_root_vec(self.act(real.simple_root(j))):
                return j
        return None

    def reduce(self) -> tuple[int, ...]:
        """A reduced word for the same element (deterministic, idempotent)."""
        if self._reduced is None:
            cache = _reduce_cache.setdefault(id(self.real), {})
            key = self.key
            if key not in cache:
                out: list[int] = []
                cur = self
                while True:
                    i = cur.left_descent()
                    if i is None:
                        if not cur.is_identity():
                            raise AssertionError("descent-free non-identity element")
                        break
                    out.append(i)
                    cur = WeylWord(self.real, (i,) + cur.letters)
                cache[key] = tuple(out)
            self._reduced = cache[key]
        return self._reduced

    def length(self) -> int:
        return len(self.reduce())


_reduce_cache: dict[int, dict] = {}


def act(w: WeylWord, v: WeightVec) -> WeightVec:
    return w.act(v)


def longest_parabolic(real: Realization, nodes, cap: int = 4096) -> WeylWord:
    """Longest element of the (finite) parabolic generated by the given nodes."""
    w = WeylWord(real, ())
    for _ in range(cap):
        j = next((j for j in sorted(nodes)
                  if not real.is_negative_root_vec(w.act(real.simple_root(j)))), None)
        if j is None:
            return WeylWord(real, w.reduce())
        w = WeylWord(real, w.letters + (j,))
    raise ValueError("parabolic not finite within cap")


class CosetRep:
    """Minimal-length representative of w W_J for a parabolic J."""

    def __init__(self, word: WeylWord, parabolic):
        self.parabolic = frozenset(parabolic)
        w = WeylWord(word.real, word.reduce())
        while True:
            j = w.right_descent_in(self.parabolic)
            if j is None:
                break
            w = WeylWord(word.real, WeylWord(word.real, w.letters + (j,)).reduce())
        self.word = w
        self.real = word.real

    @property
    def key(self):
        return (self.word.key, self.parabolic)

    def __eq__(self, other):
        return isinstance(other, CosetRep) and self.real is other.real and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"CosetRep({list(self.word.letters)}, J={sorted(self.parabolic)})"

    def length(self) -> int:
        return len(self.word.letters)


def coset_from_weight(real: Realization, parabolic, dominant: WeightVec,
                      target: WeightVec) -> CosetRep:
    """The coset whose minimal representative sends `dominant` to `target`."""
    v = target
    letters: list[int] = []
    guard = 10000
    while v != dominant and guard:
        guard -= 1
        i = next(j for j in range(real.n) if v.coords[j] < 0)
        v = real.reflect(i, v)
        letters.append(i)
    if v != dominant:
        raise ValueError("target not in the orbit of the dominant weight")
    return CosetRep(WeylWord(real, tuple(letters)), parabolic)


def bruhat_leq(u, v) -> bool:
    """Bruhat order; on CosetReps compares minimal representatives (subword rule)."""
    if isinstance(u, CosetRep):
        if not isinstance(v, CosetRep) or u.parabolic != v.parabolic:
            raise ValueError("mismatched parabolic")
        u, v = u.word, v.word
    uw, vw = u.reduce(), v.reduce()
    real = u.real
    memo: dict[tuple, bool] = {}

    def leq(u_elem: WeylWord, pos: int) -> bool:
        ul = u_elem.reduce()
        if not ul:
            return True
        if len(ul) > len(vw) - pos:
            return False
        key = (u_elem.key, pos)
        if key not in memo:
            s = vw[pos]
            su = WeylWord(real, (s,) + ul)
            if len(su.reduce()) < len(ul):
                memo[key] = leq(su, pos + 1)
            else:
                memo[key] = leq(u_elem, pos + 1)
        return memo[key]

    return leq(WeylWord(real, uw), 0)


class CosetPoset:
    """The interval {eta <= top} in W/W_J with covering relations."""

    def __init__(self, elements: list[CosetRep], top: CosetRep):
        self.top = top
        self.elements = sorted(elements, key=lambda c: (c.length(), c.word.letters))
        self._leq_cache: dict[tuple, bool] = {}

    def leq(self, a: CosetRep, b: CosetRep) -> bool:
        key = (a.key, b.key)
        if key not in self._leq_cache:
            self._leq_cache[key] = bruhat_leq(a, b)
        return self._leq_cache[key]

    def covers(self) -> list[tuple[CosetRep, CosetRep]]:
        """(lower, upper) pairs with length difference one (W/W_J is graded)."""
        out = []
        for b in self.elements:
            lb = b.length()
            for a in self.elements:
                if a.length() == lb - 1 and self.leq(a, b):
                    out.append((a, b))
        return out

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def coset_interval(v: CosetRep, cap: int = 10 ** 6) -> CosetPoset:
    """All cosets <= v, by closing minimal representatives under letter drops."""
    seen = {v.key: v}
    frontier = [v]
    while frontier:
        nxt = []
        for c in frontier:
            word = c.word.letters
            for p in range(len(word)):
                sub = CosetRep(WeylWord(c.real, word[:p] + word[p + 1:]), c.parabolic)
                if sub.key not in seen:
                    if len(seen) >= cap:
                        raise ValueError("coset interval cap exceeded")
                    seen[sub.key] = sub
                    nxt.append(sub)
        frontier = nxt
    return CosetPoset(list(seen.values()), v)


def demazure_character(w: WeylWord, lam: WeightVec) -> dict[tuple, int]:
    """Weight multiplicities of the Demazure module generated from e^lam.

    Applies D_i f = (f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}) along a
    reduced word of w, rightmost letter first.  Keys are (coords, delta)
    tuples; lam must pair integrally with every simple coroot.
    """
    real = w.real
    if not all(c.denominator == 1 for c in lam.coords):
        raise ValueError("integral weight required for divided differences")
    char: dict[tuple, int] = {(lam.coords, lam.delta): 1}
    for i in reversed(w.reduce()):
        alpha = real.simple_root(i)
        nxt: dict[tuple, int] = {}

        def add(v: WeightVec, mult: int):
            k = (v.coords, v.delta)
            nxt[k] = nxt.get(k, 0) + mult
            if nxt[k] == 0:
                del nxt[k]

        for (coords, delta), mult in char.items():
            mu = WeightVec(lam.basis_id, coords, delta)
            k = mu.coords[i]
            assert k.denominator == 1
            k = int(k)
            if k >= 0:
                for t in range(k + 1):
                    add(mu - alpha.scale(t), mult)
            else:
                for t in range(1, -k):
                    add(mu + alpha.scale(t), -mult)
        char = nxt
    return char


def demazure_dim(w: WeylWord, lam: WeightVec) -> int:
    return sum(demazure_character(w, lam).values())


def tau_hat(m: int, datum) -> WeylWord:
    """Telescoping word tau_hat_m on the restricted tier.

    tau_hat_0 = id and tau_hat_{m+1} = s_0 s_1 ... s_m tau_hat_m; the
    number of node-0 letters is m.
    """
    if not 0 <= m <= datum.rank:
        raise ValueError("m out of range")
    letters: tuple[int, ...] = ()
    for k in range(m):
        letters = tuple(range(k + 1)) + letters
    return WeylWord(datum.real, letters)


def tau_full(m: int, datum) -> WeylWord:
    """tau_m = w_Delta tau_hat_m, with w_Delta the longest element of the
    finite parabolic on the non-distinguished nodes."""
    w_delta = longest_parabolic(datum.real, range(1, datum.rank + 1))
    return w_delta * tau_hat(m, datum)


def dominant_orbit_reps(datum) -> list[WeightVec]:
    """The l+1 weights tau_hat_m(e_omega_0), each dominant for the base nodes."""
    omega = datum.e_omega0()
    out = []
    for m in range(datum.rank + 1):
        v = tau_hat(m, datum).act(omega)
        assert all(v.coords[j] >= 0 for j in range(1, datum.rank + 1))
        out.append(v)
    return out


def lift_restricted_reflection(i: int, case) -> WeylWord:
    """Ambient word acting on split weights as the i-th tier reflection.

    The word is the longest element of the parabolic on the nodes whose
    restricted root is the i-th one (plus the sigma-fixed nodes); the
    action identity is asserted against the tier.
    """
    w = longest_parabolic(case.amb.real, case.sigma_class_nodes(i))
    tier = case.tier.real
    for j in range(case.amb.real.n):
        v = case.amb.real.fundamental(j)
        lhs = case.split_to_tier(w.act(v))
        rhs = tier.reflect(i, case.split_to_tier(v))
        if lhs != rhs:
            raise AssertionError("lifted reflection does not restrict correctly")
    return w


def orbit_bfs(real: Realization, gens, start: WeightVec, delta_cap: Fraction | None = None,
              cap: int = 200000) -> set:
    """Orbit of `start` under the listed simple reflections.

    delta_cap bounds |delta coordinate| to keep affine orbits finite.
    """
    seen = {(start.coords, start.delta)}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for i in gens:
                im = real.reflect(i, v)
                if delta_cap is not None and abs(im.delta) > delta_cap:
                    continue
                k = (im.coords, im.delta)
                if k not in seen:
                    if len(seen) >= cap:
                        raise ValueError("orbit cap exceeded")
                    seen.add(k)
                    nxt.append(im)
        frontier = nxt
    return seen
