"""Saturated chains from the identity in the Grassmannian-Bruhat order.

A chain of length n is a sequence of transpositions ``(t_1, ..., t_n)`` whose
partial products ``t_i ... t_1`` climb one cover at a time.  Bulk routines
(canonical enumeration, census) work on *flat* tuples
``(a_1, b_1, ..., a_n, b_n)``; :class:`Chain` wraps one for the public API.
"""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .perm import (
    Permutation,
    Transposition,
    compose,
    cover_ok,
    gb_leq,
)


class NotACover(ValueError):
    """Raised when step ``index`` (1-based) of a sequence is not a GB cover."""

    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(message or f"step {index} is not a cover")


class PatternMismatch(ValueError):
    pass


@dataclass(frozen=True, order=True)
class DescentSet:
    n: int
    positions: frozenset

    def __post_init__(self):
        if any(not 1 <= p <= self.n - 1 for p in self.positions):
            raise ValueError(f"descent positions {sorted(self.positions)} outside [1,{self.n - 1}]")

    @classmethod
    def of(cls, n: int, positions: Iterable[int]) -> "DescentSet":
        return cls(n, frozenset(positions))

    @classmethod
    def from_word(cls, word: Sequence[int]) -> "DescentSet":
        return cls(len(word), frozenset(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1]))

    def __contains__(self, i: int) -> bool:
        return i in self.positions

    def __iter__(self):
        return iter(sorted(self.positions))

    def __len__(self) -> int:
        return len(self.positions)

    @property
    def mask(self) -> int:
        return sum(1 << (p - 1) for p in self.positions)

    def omega(self) -> "DescentSet":
        return DescentSet(self.n, frozenset(range(1, self.n)) - self.positions)

    def rho(self) -> "DescentSet":
        return DescentSet(self.n, frozenset(self.n - p for p in self.positions))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, sorted(self.positions))) + "}"


@dataclass(frozen=True)
class SubstitutionKind:
    """A substitution rule ``tag`` in {"I", "II", "III"} applied at ``position`` (1-based start)."""

    tag: str
    position: int

    def __post_init__(self):
        if self.tag not in ("I", "II", "III"):
            raise ValueError(f"unknown substitution {self.tag!r}")

    @property
    def width(self) -> int:
        return 2 if self.tag == "III" else 3


@dataclass(frozen=True)
class Chain:
    transpositions: tuple

    @classmethod
    def from_flat(cls, flat: Sequence[int]) -> "Chain":
        return cls(tuple(Transposition(flat[k], flat[k + 1]) for k in range(0, len(flat), 2)))

    @classmethod
    def parse(cls, text: str) -> "Chain":
        """Parse ``(a1,b1)(a2,b2)...`` and validate it."""
        import re

        pairs = re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", text)
        if not pairs or "".join(f"({a},{b})" for a, b in pairs) != text.replace(" ", "").strip():
            raise ValueError(f"malformed chain {text!r}")
        return validate_chain([Transposition.of(int(a), int(b)) for a, b in pairs])

    def __len__(self) -> int:
        return len(self.transpositions)

    @property
    def n(self) -> int:
        return len(self.transpositions)

    @cached_property
    def flat(self) -> tuple[int, ...]:
        return tuple(x for t in self.transpositions for x in t)

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(t.b for t in self.transpositions)

    @cached_property
    def endpoint(self) -> Permutation:
        eta = Permutation()
        for t in self.transpositions:
            eta = compose(Permutation.transposition(t.a, t.b), eta)
        return eta

    @property
    def descents(self) -> DescentSet:
        return DescentSet.from_word(self.labels)

    @property
    def support(self) -> frozenset:
        return frozenset(x for t in self.transpositions for x in t)

    def sort_key(self):
        return (self.labels, self.flat)

    def __str__(self) -> str:
        return "".join(str(t) for t in self.transpositions)


# ---------------------------------------------------------------------------
# validation, descents, reversal


def validate_chain(seq: Sequence) -> Chain:
    ts = tuple(Transposition.of(*t) for t in seq)
    m = max((t.b for t in ts), default=0)
    eta = list(range(m + 1))
    inv = list(range(m + 1))
    for i, (a, b) in enumerate(ts, start=1):
        if not cover_ok(eta, inv, a, b):
            raise NotACover(i, f"step {i} ({a},{b}) is not a cover")
        _left_apply(eta, inv, a, b)
    return Chain(ts)


def _left_apply(eta: list, inv: list, a: int, b: int) -> None:
    """In place ``eta <- t_ab * eta`` on one-line tables."""
    x, y = inv[a], inv[b]
    eta[x], eta[y] = b, a
    inv[a], inv[b] = y, x


def is_chain_flat(flat: Sequence[int]) -> bool:
    m = max(flat, default=0)
    eta = list(range(m + 1))
    inv = list(range(m + 1))
    for k in range(0, len(flat), 2):
        a, b = flat[k], flat[k + 1]
        if not a < b or not cover_ok(eta, inv, a, b):
            return False
        _left_apply(eta, inv, a, b)
    return True


def descent_set(c: Chain) -> DescentSet:
    return c.descents


def reverse_chain(c: Chain) -> Chain:
    return Chain(tuple(reversed(c.transpositions)))


def relabel_chain(c: Chain, index_set: Sequence[int]) -> Chain:
    idx = sorted(index_set)
    if max(c.support, default=0) > len(idx):
        raise ValueError("index set too small")
    return Chain(tuple(Transposition(idx[t.a - 1], idx[t.b - 1]) for t in c.transpositions))


def canonicalize(c: Chain) -> Chain:
    """Relabel the support of ``c`` onto an initial segment {1..m}."""
    pos = {x: i + 1 for i, x in enumerate(sorted(c.support))}
    return Chain(tuple(Transposition(pos[t.a], pos[t.b]) for t in c.transpositions))


# ---------------------------------------------------------------------------
# substitutions (i)-(iii) and prohibited factors (iv), (v)


def disjoint(s, t) -> bool:
    """Noncrossing and sharing no point: the condition of substitution (iii)."""
    (a, b), (c, d) = s, t
    return b < c or d < a or a < c < d < b or c < a < b < d


def _partner(tag: str, ts: Sequence) -> Optional[tuple]:
    if tag == "III":
        s, t = ts
        return (t, s) if disjoint(s, t) else None
    t1, t2, t3 = ts
    if tag == "I":
        # (bg, gd, ag) <-> (bd, ab, bg)
        if t1.b == t2.a == t3.b and t3.a < t1.a:
            al, be, ga, de = t3.a, t1.a, t1.b, t2.b
            return (Transposition(be, de), Transposition(al, be), Transposition(be, ga))
        if t1.a == t2.b == t3.a and t2.a < t1.a and t3.b < t1.b:
            al, be, ga, de = t2.a, t1.a, t3.b, t1.b
            return (Transposition(be, ga), Transposition(ga, de), Transposition(al, ga))
        return None
    if tag == "II":
        # (ag, gd, bg) <-> (bg, ab, bd)
        if t1.b == t2.a == t3.b and t1.a < t3.a:
            al, be, ga, de = t1.a, t3.a, t1.b, t2.b
            return (Transposition(be, ga), Transposition(al, be), Transposition(be, de))
        if t1.a == t2.b == t3.a and t2.a < t1.a and t1.b < t3.b:
            al, be, ga, de = t2.a, t1.a, t1.b, t3.b
            return (Transposition(al, ga), Transposition(ga, de), Transposition(be, ga))
        return None
    raise ValueError(tag)


def apply_substitution(c: Chain, kind: SubstitutionKind) -> Chain:
    p = kind.position - 1
    window = c.transpositions[p:p + kind.width]
    if p < 0 or len(window) != kind.width:
        raise PatternMismatch(f"position {kind.position} out of range for {kind.tag}")
    repl = _partner(kind.tag, window)
    if repl is None:
        raise PatternMismatch(f"{kind.tag} does not match {window}")
    return Chain(c.transpositions[:p] + tuple(repl) + c.transpositions[p + kind.width:])


def _prohibited_pair(s, t) -> bool:
    for x, y in ((s, t), (t, s)):
        if x[0] <= y[0] < x[1] <= y[1]:
            return True
    return False


def _prohibited_triple(t1, t2, t3) -> bool:
    if t1 != t3:
        return False
    return t2[1] == t1[0] or t2[0] == t1[1]


def prohibited(ts: Sequence) -> bool:
    ts = [tuple(t) for t in ts]
    if len(ts) == 2:
        return _prohibited_pair(*ts)
    if len(ts) == 3:
        return _prohibited_triple(*ts)
    raise ValueError("prohibited() takes 2 or 3 transpositions")


def _has_prohibited_factor(ts: Sequence) -> bool:
    for k in range(len(ts) - 1):
        if _prohibited_pair(ts[k], ts[k + 1]):
            return True
    for k in range(len(ts) - 2):
        if _prohibited_triple(ts[k], ts[k + 1], ts[k + 2]):
            return True
    return False


def _neighbours(ts: tuple) -> Iterator[tuple[SubstitutionKind, tuple]]:
    for tag, width in (("I", 3), ("II", 3), ("III", 2)):
        for p in range(len(ts) - width + 1):
            repl = _partner(tag, ts[p:p + width])
            if repl is not None:
                yield SubstitutionKind(tag, p + 1), ts[:p] + tuple(repl) + ts[p + width:]


def is_chain_by_substitutions(seq: Sequence) -> bool:
    """Chain test via the substitution closure: no reachable word has a factor (iv) or (v)."""
    start = tuple(Transposition.of(*t) for t in seq)
    seen = {start}
    queue = deque([start])
    while queue:
        ts = queue.popleft()
        if _has_prohibited_factor(ts):
            return False
        for _, nxt in _neighbours(ts):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return True


def substitution_graph(c: Chain) -> tuple[set, list]:
    """Closure of ``c`` under substitutions, with edges ``(chain, chain, tag)``."""
    seen = {c.transpositions}
    queue = deque([c.transpositions])
    edges: dict[tuple, str] = {}
    while queue:
        ts = queue.popleft()
        for kind, nxt in _neighbours(ts):
            u, v = sorted((Chain(ts), Chain(nxt)), key=Chain.sort_key)
            edges[(u, v)] = kind.tag
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    out = sorted(((u, v, tag) for (u, v), tag in edges.items()),
                 key=lambda e: (e[0].sort_key(), e[1].sort_key(), e[2]))
    return {Chain(ts) for ts in seen}, out


def substitution_orbit(c: Chain) -> set:
    return substitution_graph(c)[0]


def is_disjoint_chain(c: Chain) -> bool:
    ts = c.transpositions
    return all(disjoint(ts[i], ts[j]) for i in range(len(ts)) for j in range(i + 1, len(ts)))


def is_disjoint_flat(flat: Sequence[int]) -> bool:
    pairs = [(flat[k], flat[k + 1]) for k in range(0, len(flat), 2)]
    return all(disjoint(pairs[i], pairs[j]) for i in range(len(pairs)) for j in range(i + 1, len(pairs)))


# ---------------------------------------------------------------------------
# enumeration


def enumerate_interval_chains(zeta: Permutation) -> list[Chain]:
    """All saturated chains of ``[e, zeta]``, sorted by label word then transpositions."""
    if not gb_leq(Permutation(), zeta):
        raise ValueError(f"{zeta} is not above the identity")
    points = sorted(zeta.support)
    m = max(points, default=0)
    target = zeta.one_line(m) if m else ()
    out = []

    def extend(eta: list, inv: list, prefix: list):
        if tuple(eta[1:]) == target:
            out.append(Chain(tuple(prefix)))
            return
        for i, a in enumerate(points):
            for b in points[i + 1:]:
                if not cover_ok(eta, inv, a, b):
                    continue
                _left_apply(eta, inv, a, b)
                if gb_leq(Permutation({x: eta[x] for x in points}), zeta):
                    prefix.append(Transposition(a, b))
                    extend(eta, inv, prefix)
                    prefix.pop()
                _left_apply(eta, inv, a, b)

    extend(list(range(m + 1)), list(range(m + 1)), [])
    out.sort(key=Chain.sort_key)
    return out


def _extensions(flat: tuple, eta: tuple):
    """Canonical one-step extensions of a canonical chain ``flat`` with endpoint ``eta``.

    New points may be inserted into any gap between existing points; the
    result is relabelled onto {1..m'}.  Coordinates are scaled by 4 so that an
    existing point p sits at 4p and new points in gap g (between g and g+1)
    sit at 4g+2, or at 4g+1 < 4g+3 when both new points share the gap.
    """
    m = len(eta) - 1
    inv = [0] * (m + 1)
    for i in range(1, m + 1):
        inv[eta[i]] = i
    moved = [(p, eta[p]) for p in range(1, m + 1) if eta[p] != p]
    slots = [4 * p for p in range(1, m + 1)] + [4 * g + 2 for g in range(m + 1)]
    slots.sort()
    candidates = []
    for k, A in enumerate(slots):
        for B in slots[k + 1:]:
            candidates.append((A, B))
    for g in range(m + 1):
        candidates.append((4 * g + 1, 4 * g + 3))

    for A, B in candidates:
        if A % 4 == 0:
            a = A // 4
            if inv[a] > a:
                continue
            xr = 4 * inv[a]
        else:
            xr = A
        if B % 4 == 0:
            b = B // 4
            if inv[b] < b:
                continue
            yr = 4 * inv[b]
        else:
            yr = B
        ok = True
        for p, q in moved:
            if A < 4 * q < B:
                if (q > p and 4 * p < xr) or (q < p and 4 * p > yr):
                    ok = False
                    break
        if not ok:
            continue
        yield _relabel_extension(flat, eta, A, B)


def _relabel_extension(flat: tuple, eta: tuple, A: int, B: int) -> tuple[tuple, tuple]:
    m = len(eta) - 1
    coords = [4 * p for p in range(1, m + 1)]
    if A % 4:
        coords.append(A)
    if B % 4:
        coords.append(B)
    coords.sort()
    rank = {c: i + 1 for i, c in enumerate(coords)}
    mp = [0] + [rank[4 * p] for p in range(1, m + 1)]
    a, b = rank[A], rank[B]
    new_flat = tuple(mp[x] for x in flat) + (a, b)
    size = len(coords)
    z = list(range(size + 1))
    for p in range(1, m + 1):
        z[mp[p]] = mp[eta[p]]
    for i in range(1, size + 1):
        if z[i] == a:
            z[i] = b
        elif z[i] == b:
            z[i] = a
    return new_flat, tuple(z)


def _grow(level: list, steps: int) -> list:
    for _ in range(steps):
        level = [ext for flat, eta in level for ext in _extensions(flat, eta)]
    return level


def _grow_worker(args):
    seed, steps = args
    return [flat for flat, _ in _grow([seed], steps)]


def _flat_key(flat: tuple):
    return (flat[1::2], flat)


def canonical_flat_chains(n: int, jobs: int = 1) -> list[tuple]:
    """Flat canonical chains of length ``n``: one per relabelling class, deterministic order.

    With ``jobs > 1`` the search is split by the canonical prefix of length two
    and the pieces are merged in sorted order.
    """
    if n < 1:
        raise ValueError("n must be positive")
    root = [((), (0,))]
    if jobs <= 1 or n <= 3:
        out = [flat for flat, _ in _grow(root, n)]
    else:
        seeds = _grow(root, 2)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_grow_worker, [(s, n - 2) for s in seeds])
            out = [flat for part in parts for flat in part]
    out.sort(key=_flat_key)
    return out


def enumerate_canonical_chains(n: int, jobs: int = 1) -> Iterator[Chain]:
    for flat in canonical_flat_chains(n, jobs):
        yield Chain.from_flat(flat)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("GBDQ_JOBS", "1")))
    except ValueError:
        return 1
