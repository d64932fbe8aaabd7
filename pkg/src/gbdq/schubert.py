"""Schubert polynomials by divided differences, and the Schubert-vs-Schur constants.

This module is the independent side of the cross-check: nothing here touches
chains or dual equivalences.  Polynomials are dicts from exponent tuples (with
trailing zeros stripped) to integers, wrapped by ``SparsePolynomial``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .perm import Permutation, compose, inversion_length
from .tableaux import Partition, schur_polynomial


class TooManyParts(ValueError):
    pass


class NonIntegral(ArithmeticError):
    pass


def _trim(e) -> tuple:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _add_into(acc: dict, e: tuple, c: int) -> None:
    v = acc.get(e, 0) + c
    if v:
        acc[e] = v
    else:
        acc.pop(e, None)


def poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e, a in p.items():
        for f, b in q.items():
            n = max(len(e), len(f))
            g = tuple((e[k] if k < len(e) else 0) + (f[k] if k < len(f) else 0) for k in range(n))
            _add_into(out, g, a * b)
    return out


def divided_difference(p: dict, i: int) -> dict:
    """(f - s_i f) / (z_i - z_{i+1})."""
    out: dict = {}
    for e, c in p.items():
        a = e[i - 1] if i - 1 < len(e) else 0
        b = e[i] if i < len(e) else 0
        if a == b:
            continue
        base = list(e) + [0] * max(0, i + 1 - len(e))
        lo, hi, sign = (b, a, 1) if a > b else (a, b, -1)
        for t in range(hi - lo):
            base[i - 1] = hi - 1 - t
            base[i] = lo + t
            _add_into(out, _trim(base), sign * c)
    return out


def n_variables(p: dict) -> int:
    return max((len(e) for e in p), default=0)


@dataclass(frozen=True)
class SparsePolynomial:
    terms: tuple  # sorted ((exponent, coefficient), ...)

    @classmethod
    def from_dict(cls, d: dict) -> "SparsePolynomial":
        clean: dict = {}
        for e, c in d.items():
            if any(x < 0 for x in e):
                raise ValueError("negative exponent")
            _add_into(clean, _trim(e), c)
        return cls(tuple(sorted(clean.items())))

    @classmethod
    def variable(cls, i: int) -> "SparsePolynomial":
        return cls.from_dict({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def constant(cls, c: int) -> "SparsePolynomial":
        return cls.from_dict({(): c})

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        acc = self.as_dict()
        for e, c in other.terms:
            _add_into(acc, e, c)
        return SparsePolynomial.from_dict(acc)

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return SparsePolynomial.from_dict(poly_mul(self.as_dict(), other.as_dict()))

    def scale(self, k: int) -> "SparsePolynomial":
        return SparsePolynomial.from_dict({e: k * c for e, c in self.terms})

    def divided_difference(self, i: int) -> "SparsePolynomial":
        return SparsePolynomial.from_dict(divided_difference(self.as_dict(), i))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*z^{list(e)}" for e, c in self.terms)


# permutations ------------------------------------------------------------


def lehmer_code(w: Permutation) -> tuple:
    word = w.one_line()
    return _trim(sum(1 for j in range(i + 1, len(word)) if word[j] < word[i]) for i in range(len(word)))


def from_code(code: Iterable[int]) -> Permutation:
    code = list(code)
    size = max((k + c + 1 for k, c in enumerate(code)), default=0)
    remaining = list(range(1, size + 1))
    word = [remaining.pop(c) for c in code]
    word.extend(remaining)
    return Permutation.from_one_line(word)


def longest_element(m: int) -> Permutation:
    return Permutation.from_one_line(range(m, 0, -1))


def simple(i: int) -> Permutation:
    return Permutation.transposition(i, i + 1)


def grassmannian_perm(lam: Partition, k: int) -> Permutation:
    """v(lam, k): unique descent at k, values i + lam_{k+1-i} for i <= k."""
    parts = list(lam.parts)
    if len(parts) > k:
        raise TooManyParts(f"{lam} has more than {k} parts")
    parts += [0] * (k - len(parts))
    head = [i + parts[k - i] for i in range(1, k + 1)]
    size = max(head + [k])
    tail = [x for x in range(1, size + 1) if x not in head]
    return Permutation.from_one_line(head + tail)


# Schubert polynomials ----------------------------------------------------


@lru_cache(maxsize=None)
def _schubert(word: tuple) -> tuple:
    m = len(word)
    if all(word[i] > word[i + 1] for i in range(m - 1)):
        return (((tuple(range(m - 1, -1, -1)))[:m - 1], 1),) if m > 1 else (((), 1),)
    i = next(k for k in range(m - 1) if word[k] < word[k + 1])
    up = list(word)
    up[i], up[i + 1] = up[i + 1], up[i]
    return tuple(sorted(divided_difference(dict(_schubert(tuple(up))), i + 1).items()))


def schubert_poly(w: Permutation, m: Optional[int] = None) -> SparsePolynomial:
    """S_w, from the staircase monomial of the longest element of S_m.

    The result does not depend on ``m`` (any m with w in S_m).
    """
    m = max(w.max_point, 1) if m is None else m
    return SparsePolynomial(tuple(sorted((_trim(e), c) for e, c in _schubert(w.one_line(m)))))


def _revlex_key(e: tuple) -> tuple:
    return (len(e),) + tuple(reversed(e))


def expand_in_schubert(p) -> dict:
    """Coefficients a_w with p = sum a_w S_w.

    Repeatedly take the monomial that is largest in reverse lexicographic order;
    it is the Lehmer code of the next Schubert polynomial to subtract.
    """
    rest = p.as_dict() if isinstance(p, SparsePolynomial) else {_trim(e): c for e, c in p.items() if c}
    out: dict = {}
    while rest:
        lead = max(rest, key=_revlex_key)
        c = rest[lead]
        w = from_code(lead)
        sw = schubert_poly(w).as_dict()
        if max(sw, key=_revlex_key) != lead or sw[lead] != 1:
            raise NonIntegral(f"leading term of S_{w.one_line_string()} is not z^{list(lead)}")
        out[w] = out.get(w, 0) + c
        for e, a in sw.items():
            _add_into(rest, e, -c * a)
    return {w: c for w, c in out.items() if c}


def schur_in_variables(lam: Partition, k: int) -> dict:
    return {_trim(e): c for e, c in schur_polynomial(lam, k).items()}


def coeff_oracle(u: Permutation, lam: Partition, k: int) -> dict:
    """All nonzero c^w_{u, v(lam, k)} from S_u * s_lam(z_1..z_k).

    Schubert polynomials are stable under S_m -> S_{m+1}, so the expansion is
    exact without choosing an ambient group.
    """
    if len(lam.parts) > k:
        return {}
    product = poly_mul(schubert_poly(u).as_dict(), schur_in_variables(lam, k))
    return expand_in_schubert(product)


# k-Bruhat order -----------------------------------------------------------


def k_bruhat_up(u: Permutation, k: int) -> list[tuple[Permutation, int]]:
    """Covers u -> u t_ij (i <= k < j) with their labels."""
    word = list(u.one_line(max(u.max_point, k) + 1))
    out = []
    for i in range(1, k + 1):
        for j in range(k + 1, len(word) + 1):
            ui, uj = word[i - 1], word[j - 1]
            if ui > uj:
                continue
            if any(ui < word[c - 1] < uj for c in range(i + 1, j)):
                continue
            w = compose(u, Permutation.transposition(i, j))
            out.append((w, max(ui, uj)))
    return out


@dataclass(frozen=True)
class KChain:
    """A saturated chain in the k-Bruhat order: permutations and cover labels."""

    perms: tuple
    labels: tuple

    def left_transpositions(self) -> tuple:
        """t_ab with w_j = t_ab w_{j-1}, as (a, b) pairs."""
        out = []
        for x, y in zip(self.perms, self.perms[1:]):
            t = compose(y, x.inverse()).as_transposition()
            out.append((t.a, t.b))
        return tuple(out)


def enumerate_k_bruhat_interval(u: Permutation, w: Permutation, k: int) -> list[KChain]:
    rank = inversion_length(w) - inversion_length(u)
    if rank < 0:
        return []
    reach: dict = {}

    def reaches(x: Permutation, left: int) -> bool:
        if left == 0:
            return x == w
        key = (x, left)
        if key not in reach:
            reach[key] = any(reaches(y, left - 1) for y, _ in k_bruhat_up(x, k))
        return reach[key]

    out = []

    def walk(x, left, perms, labels):
        if left == 0:
            if x == w:
                out.append(KChain(tuple(perms), tuple(labels)))
            return
        for y, b in k_bruhat_up(x, k):
            if reaches(y, left - 1):
                walk(y, left - 1, perms + [y], labels + [b])

    walk(u, rank, [u], [])
    return sorted(out, key=lambda c: (c.labels, [p.one_line(12) for p in c.perms]))


def k_bruhat_leq(u: Permutation, w: Permutation, k: int) -> bool:
    return bool(enumerate_k_bruhat_interval(u, w, k))


def k_bruhat_above(u: Permutation, k: int, rank: int) -> set:
    level = {u}
    for _ in range(rank):
        level = {y for x in level for y, _ in k_bruhat_up(x, k)}
    return level


def monk_check(u: Permutation, k: int) -> bool:
    product = poly_mul(schubert_poly(u).as_dict(), schubert_poly(simple(k)).as_dict())
    expected = {w: 1 for w, _ in k_bruhat_up(u, k)}
    return expand_in_schubert(product) == expected


def pieri_check(u: Permutation, k: int, m: int) -> bool:
    product = poly_mul(schubert_poly(u).as_dict(), schur_in_variables(Partition.of(m), k))
    expected: dict = {}

    def walk(x, last, left):
        if left == 0:
            expected[x] = expected.get(x, 0) + 1
            return
        for y, b in k_bruhat_up(x, k):
            if b > last:
                walk(y, b, left - 1)

    walk(u, 0, m)
    return expand_in_schubert(product) == expected


def all_permutations(m: int) -> list[Permutation]:
    from itertools import permutations

    return [Permutation.from_one_line(p) for p in permutations(range(1, m + 1))]


def interval_schur_side(u: Permutation, w: Permutation, k: int):
    """Schur expansion of the chain generating function of [u, w]_k."""
    from .chains import DescentSet
    from .qsym import QSymFunction, expand_in_schur

    chains = enumerate_k_bruhat_interval(u, w, k)
    n = inversion_length(w) - inversion_length(u)
    f = QSymFunction.from_descents(n, (DescentSet.from_word(c.labels).mask for c in chains))
    return expand_in_schur(f), len(chains)
