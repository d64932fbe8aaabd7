"""Finite-support permutations, the Grassmannian-Bruhat order and the k-Bruhat order.

Permutations act on the positive integers and are stored as a table of moved
points.  Composition follows function notation: ``(p * q)(x) == p(q(x))``.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple, Optional, Sequence


class Transposition(NamedTuple):
    """The transposition exchanging ``a < b``; its label is ``b``."""

    a: int
    b: int

    @classmethod
    def of(cls, a: int, b: int) -> "Transposition":
        if a == b or a < 1 or b < 1:
            raise ValueError(f"not a transposition: ({a},{b})")
        return cls(min(a, b), max(a, b))

    @property
    def label(self) -> int:
        return self.b

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


class Permutation:
    """A bijection of {1, 2, ...} moving finitely many points."""

    __slots__ = ("_map", "_items", "_hash")

    def __init__(self, mapping: Optional[dict] = None):
        table = {}
        if mapping:
            for i, j in mapping.items():
                if i < 1 or j < 1:
                    raise ValueError("permutations act on positive integers")
                if i != j:
                    table[i] = j
        if sorted(table) != sorted(table.values()):
            raise ValueError(f"not a bijection: {mapping}")
        self._map = table
        self._items = tuple(sorted(table.items()))
        self._hash = hash(self._items)

    # construction -------------------------------------------------------

    @classmethod
    def identity(cls) -> "Permutation":
        return cls()

    @classmethod
    def transposition(cls, a: int, b: int) -> "Permutation":
        return cls({a: b, b: a})

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> "Permutation":
        table: dict[int, int] = {}
        for cyc in cycles:
            cyc = list(cyc)
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"repeated point in cycle {cyc}")
            for k, x in enumerate(cyc):
                if x in table:
                    raise ValueError(f"point {x} appears in two cycles")
                table[x] = cyc[(k + 1) % len(cyc)]
        return cls(table)

    @classmethod
    def from_one_line(cls, word: Sequence[int]) -> "Permutation":
        word = list(word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a one-line permutation: {word}")
        return cls({i + 1: w for i, w in enumerate(word)})

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse cycle notation ``(1,4,5,3,2,6)``, ``(1326)(45)``, ``e``, or one-line ``142635``."""
        text = text.strip()
        if text in ("", "e", "()"):
            return cls()
        if text.startswith("("):
            cycles = re.findall(r"\(([^()]*)\)", text)
            if "".join(f"({c})" for c in cycles) != text.replace(" ", ""):
                raise ValueError(f"malformed cycle notation: {text!r}")
            parsed = []
            for body in cycles:
                body = body.replace(" ", "")
                if "," in body:
                    parsed.append([int(x) for x in body.split(",")])
                else:
                    parsed.append([int(ch) for ch in body])
            return cls.from_cycles(parsed)
        if text.isdigit():
            return cls.from_one_line([int(ch) for ch in text])
        if "," in text:
            return cls.from_one_line([int(x) for x in text.split(",")])
        raise ValueError(f"cannot parse permutation {text!r}")

    # basic protocol -----------------------------------------------------

    def __call__(self, x: int) -> int:
        return self._map.get(x, x)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()})"

    def __str__(self) -> str:
        return self.cycle_string()

    @property
    def support(self) -> frozenset:
        return frozenset(self._map)

    @property
    def max_point(self) -> int:
        return self._items[-1][0] if self._items else 0

    def items(self) -> tuple:
        return self._items

    def inverse(self) -> "Permutation":
        return Permutation({j: i for i, j in self._map.items()})

    def is_identity(self) -> bool:
        return not self._map

    def as_transposition(self) -> Optional[Transposition]:
        if len(self._map) == 2:
            a, b = sorted(self._map)
            if self._map[a] == b:
                return Transposition(a, b)
        return None

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start, _ in self._items:
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self._map[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self._map[x]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        if not self._map:
            return "e"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles())

    def one_line(self, m: Optional[int] = None) -> tuple[int, ...]:
        m = self.max_point if m is None else m
        if m < self.max_point:
            raise ValueError(f"ambient {m} smaller than support")
        return tuple(self(i) for i in range(1, m + 1))

    def one_line_string(self, m: Optional[int] = None) -> str:
        word = self.one_line(m)
        sep = "" if all(x < 10 for x in word) else ","
        return sep.join(map(str, word))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p o q``, i.e. ``x -> p(q(x))``."""
    points = p.support | q.support
    return Permutation({x: p(q(x)) for x in points})


def transposition(a: int, b: int) -> Permutation:
    return Permutation.transposition(a, b)


def inversion_length(p: Permutation) -> int:
    word = p.one_line()
    return sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])


def up_down_sets(z: Permutation) -> tuple[frozenset, frozenset]:
    up = frozenset(a for a, za in z.items() if a < za)
    dw = frozenset(b for b, zb in z.items() if b > zb)
    return up, dw


def gb_leq(eta: Permutation, zeta: Permutation) -> bool:
    """Grassmannian-Bruhat comparison ``eta <= zeta``.

    Besides the three monotonicity conditions on up(zeta) and dw(zeta) we
    require that ``eta`` fixes every point fixed by ``zeta``; without it the
    relation is not antisymmetric (``t_12 <= e`` would hold).
    """
    if not eta.support <= zeta.support:
        return False
    up, dw = up_down_sets(zeta)
    for a in up:
        if not a <= eta(a) <= zeta(a):
            return False
    for b in dw:
        if not b >= eta(b) >= zeta(b):
            return False
    for side in (sorted(up), sorted(dw)):
        for i, a in enumerate(side):
            for b in side[i + 1:]:
                if zeta(a) < zeta(b) and not eta(a) < eta(b):
                    return False
    return True


def gb_cover(eta: Permutation, zeta: Permutation) -> Optional[int]:
    """Label of the cover ``eta < zeta`` in the GB order, or None."""
    t = compose(zeta, eta.inverse()).as_transposition()
    if t is None or not gb_leq(eta, zeta):
        return None
    return t.b


def cover_ok(eta: Sequence[int], inv: Sequence[int], a: int, b: int) -> bool:
    """Fast test that ``t_ab * eta`` covers ``eta``.

    ``eta`` and ``inv`` are one-line tables (index 0 unused) that must
    contain ``a`` and ``b``.  Equivalent to ``gb_cover`` being present.
    """
    x = inv[a]
    y = inv[b]
    if x > a or y < b:
        return False
    for p in range(1, len(eta)):
        q = eta[p]
        if a < q < b:
            if q > p and p < x:
                return False
            if q < p and p > y:
                return False
    return True


def gb_rank(zeta: Permutation) -> Optional[int]:
    """Length of a saturated chain from e to ``zeta``, or None if e is not below ``zeta``."""
    if not gb_leq(Permutation(), zeta):
        return None
    points = sorted(zeta.support)
    seen: dict[Permutation, Optional[int]] = {}

    def depth(eta: Permutation) -> Optional[int]:
        if eta == zeta:
            return 0
        if eta in seen:
            return seen[eta]
        seen[eta] = None
        for i, a in enumerate(points):
            for b in points[i + 1:]:
                nxt = compose(Permutation.transposition(a, b), eta)
                if gb_leq(nxt, zeta) and gb_cover(eta, nxt) is not None:
                    d = depth(nxt)
                    if d is not None:
                        seen[eta] = d + 1
                        return d + 1
        return None

    return depth(Permutation())


def k_bruhat_cover(u: Permutation, w: Permutation, k: int) -> Optional[int]:
    """Label ``b`` of the k-Bruhat cover ``u -> w`` (``w u^-1 = t_ab``), or None."""
    right = compose(u.inverse(), w).as_transposition()
    if right is None or not right.a <= k < right.b:
        return None
    if inversion_length(w) != inversion_length(u) + 1:
        return None
    return compose(w, u.inverse()).as_transposition().b


def relabel(p: Permutation, index_set: Sequence[int]) -> Permutation:
    """The embedding iota_I: the point ``i_k`` goes to ``i_{p(k)}``."""
    idx = sorted(index_set)
    if len(set(idx)) != len(idx) or (idx and idx[0] < 1):
        raise ValueError("index set must be distinct positive integers")
    if p.max_point > len(idx):
        raise ValueError(f"index set of size {len(idx)} too small for support up to {p.max_point}")
    return Permutation({idx[k - 1]: idx[pk - 1] for k, pk in p.items()})


def right_multiply(u: Permutation, i: int, j: int) -> Permutation:
    """``u * t_ij``: swap the values in positions i and j."""
    return compose(u, Permutation.transposition(i, j))
