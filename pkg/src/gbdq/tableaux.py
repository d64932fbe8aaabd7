"""Partitions, standard Young tableaux (French convention) and Haiman's dual equivalence.

Rows are stored bottom-up: ``rows[0]`` is the longest row.  An entry i+1 that
sits in a higher row than i makes i a descent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterator, Sequence


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"partition parts must weakly decrease: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        """Build from parts, dropping trailing zeros."""
        if len(parts) == 1 and not isinstance(parts[0], int):
            parts = tuple(parts[0])
        return cls(tuple(p for p in parts if p != 0))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().lstrip("s").strip("[]() ")
        if not text:
            return cls(())
        return cls.of(*(int(x) for x in text.split(",")))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0])))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    for parts in gen(n, n if max_part is None else max_part):
        yield Partition(parts)


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = [len(r) for r in rows]
        Partition(tuple(shape))
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError(f"entries must be 1..n: {rows}")
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if c and row[c - 1] >= x:
                    raise ValueError(f"row {r} not increasing: {rows}")
                if r and rows[r - 1][c] >= x:
                    raise ValueError(f"column {c} not increasing upward: {rows}")

    @classmethod
    def parse(cls, text: str) -> "StandardTableau":
        """``"1,2,5/3,4"``: rows separated by '/', bottom row first."""
        return cls(tuple(tuple(int(x) for x in row.split(",")) for row in text.split("/")))

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def position(self, x: int) -> tuple[int, int]:
        for r, row in enumerate(self.rows):
            if x in row:
                return r, row.index(x)
        raise KeyError(x)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in reversed(self.rows) for x in row)

    def swap(self, x: int, y: int) -> "StandardTableau":
        perm = {x: y, y: x}
        return StandardTableau(tuple(tuple(perm.get(v, v) for v in row) for row in self.rows))

    def __str__(self) -> str:
        return "/".join(",".join(map(str, row)) for row in self.rows)


def enumerate_syt(lam: Partition) -> list[StandardTableau]:
    """All standard tableaux of shape ``lam``, sorted by reading word."""
    shape = list(lam.parts)
    n = sum(shape)
    out = []

    def place(rows: list, k: int):
        if k > n:
            out.append(StandardTableau(tuple(tuple(r) for r in rows)))
            return
        for r in range(len(shape)):
            c = len(rows[r])
            if c < shape[r] and (r == 0 or len(rows[r - 1]) > c):
                rows[r].append(k)
                place(rows, k + 1)
                rows[r].pop()

    place([[] for _ in shape], 1)
    out.sort(key=lambda t: t.reading_word())
    return out


def syt_descents(T: StandardTableau):
    from .chains import DescentSet

    n = T.size
    row = {x: r for r, rw in enumerate(T.rows) for x in rw}
    return DescentSet(n, frozenset(i for i in range(1, n) if row[i + 1] > row[i]))


def tableau_chain_labels(T: StandardTableau) -> tuple[int, ...]:
    """Content labels ``column - row`` of the boxes in the order 1..n."""
    pos = {x: (r, c) for r, rw in enumerate(T.rows) for c, x in enumerate(rw)}
    return tuple(pos[m][1] - pos[m][0] for m in range(1, T.size + 1))


def haiman_phi(T: StandardTableau, i: int) -> StandardTableau:
    """Elementary dual equivalence on i-1, i, i+1."""
    n = T.size
    if not 2 <= i <= n - 1:
        raise ValueError(f"phi_{i} undefined for n={n}")
    word = T.reading_word()
    order = sorted((i - 1, i, i + 1), key=word.index)
    middle = order[1]
    if middle == i:
        return T
    if middle == i - 1:
        return T.swap(i, i + 1)
    return T.swap(i - 1, i)


@lru_cache(maxsize=None)
def f_lambda(lam: Partition) -> int:
    """Number of standard tableaux (hook length formula)."""
    n = lam.size
    conj = conjugate(lam)
    prod = 1
    for r, p in enumerate(lam.parts):
        for c in range(p):
            prod *= (p - c - 1) + (conj.parts[c] - r - 1) + 1
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    return fact // prod


def semistandard_tableaux(lam: Partition, m: int) -> Iterator[tuple]:
    """Semistandard fillings of ``lam`` with entries 1..m, as tuples of rows (bottom first)."""
    shape = list(lam.parts)
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    rows = [[0] * p for p in shape]

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(r) for r in rows)
            return
        r, c = cells[k]
        lo = 1
        if c:
            lo = max(lo, rows[r][c - 1])
        if r:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, m + 1):
            rows[r][c] = v
            yield from fill(k + 1)
        rows[r][c] = 0

    yield from fill(0)


def schur_polynomial(lam: Partition, m: int) -> dict:
    """s_lam(x_1..x_m) as a map exponent-vector -> coefficient, via semistandard tableaux."""
    poly: dict = {}
    for T in semistandard_tableaux(lam, m):
        exp = [0] * m
        for row in T:
            for v in row:
                exp[v - 1] += 1
        key = tuple(exp)
        poly[key] = poly.get(key, 0) + 1
    return poly


def complete_homogeneous(m: int, k: int) -> dict:
    """h_m(x_1..x_k)."""
    poly = {}
    for combo in combinations_with_replacement(range(k), m):
        exp = [0] * k
        for v in combo:
            exp[v] += 1
        poly[tuple(exp)] = 1
    return poly


def partitions_up_to(n: int) -> Iterator[Partition]:
    for size in range(n + 1):
        yield from partitions(size)


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(parts[k] >= parts[k + 1] for k in range(len(parts) - 1))
