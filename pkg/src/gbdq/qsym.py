"""Fundamental quasisymmetric functions and exact Schur expansion.

A quasisymmetric function of degree n is stored as integer coefficients on
descent masks: bit ``p - 1`` set means ``p`` is in the subset of {1..n-1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Union

from .chains import DescentSet
from .tableaux import Partition, enumerate_syt, partitions, syt_descents


def _mask_of(d) -> int:
    if isinstance(d, int):
        return d
    if isinstance(d, DescentSet):
        return d.mask
    return sum(1 << (p - 1) for p in d)


def _positions(mask: int) -> tuple[int, ...]:
    out = []
    p = 1
    while mask:
        if mask & 1:
            out.append(p)
        mask >>= 1
        p += 1
    return tuple(out)


@dataclass(frozen=True)
class QSymFunction:
    degree: int
    coeffs: tuple = field(default=())  # sorted ((mask, coefficient), ...), no zeros

    @classmethod
    def from_counts(cls, degree: int, counts: dict) -> "QSymFunction":
        full = (1 << max(degree - 1, 0)) - 1
        clean = {}
        for d, c in counts.items():
            m = _mask_of(d)
            if m & ~full:
                raise ValueError(f"descent set {_positions(m)} outside [1,{degree - 1}]")
            if c:
                clean[m] = clean.get(m, 0) + c
        return cls(degree, tuple(sorted((m, c) for m, c in clean.items() if c)))

    @classmethod
    def from_descents(cls, degree: int, descents: Iterable) -> "QSymFunction":
        counts: dict = {}
        for d in descents:
            m = _mask_of(d)
            counts[m] = counts.get(m, 0) + 1
        return cls.from_counts(degree, counts)

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def coefficient(self, d) -> int:
        return self.as_dict().get(_mask_of(d), 0)

    def terms(self) -> list[tuple[DescentSet, int]]:
        return [(DescentSet(self.degree, frozenset(_positions(m))), c) for m, c in self.coeffs]

    def __add__(self, other: "QSymFunction") -> "QSymFunction":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        acc = self.as_dict()
        for m, c in other.coeffs:
            acc[m] = acc.get(m, 0) + c
        return QSymFunction.from_counts(self.degree, acc)

    def __sub__(self, other: "QSymFunction") -> "QSymFunction":
        return self + other.scale(-1)

    def scale(self, k: int) -> "QSymFunction":
        return QSymFunction.from_counts(self.degree, {m: k * c for m, c in self.coeffs})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for m, c in self.coeffs:
            body = "Q{" + ",".join(map(str, _positions(m))) + "}"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def omega_q(f: QSymFunction) -> QSymFunction:
    full = (1 << max(f.degree - 1, 0)) - 1
    return QSymFunction.from_counts(f.degree, {full ^ m: c for m, c in f.coeffs})


def rho_mask(mask: int, n: int) -> int:
    return sum(1 << (n - p - 1) for p in _positions(mask))


def rho_q(f: QSymFunction) -> QSymFunction:
    return QSymFunction.from_counts(f.degree, {rho_mask(m, f.degree): c for m, c in f.coeffs})


@dataclass(frozen=True)
class SchurExpansion:
    degree: int
    coeffs: tuple  # sorted ((Partition, int), ...), no zeros, largest partition first

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def is_schur_positive(self) -> bool:
        return all(c > 0 for _, c in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for lam, c in self.coeffs:
            body = "s" + str(lam)
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class NotSymmetric:
    """Returned when no integer Schur expansion exists."""

    degree: int
    residual: QSymFunction

    def is_schur_positive(self) -> bool:
        return False

    def __str__(self) -> str:
        return f"not symmetric (residual {self.residual})"


@lru_cache(maxsize=None)
def schur_in_q(lam: Partition) -> QSymFunction:
    n = lam.size
    return QSymFunction.from_descents(n, (syt_descents(T).mask for T in enumerate_syt(lam)))


def k_of(descents: Iterable, degree: int) -> QSymFunction:
    """K_G: one fundamental term per vertex descent set."""
    return QSymFunction.from_descents(degree, descents)


@lru_cache(maxsize=None)
def _solver(n: int):
    lams = list(partitions(n))
    rows = [schur_in_q(lam).as_dict() for lam in lams]
    masks = sorted({m for r in rows for m in r})
    # pick independent columns greedily, keeping an echelon basis
    pivots: list[int] = []
    basis: list[tuple[int, list]] = []
    for m in masks:
        vec = [Fraction(r.get(m, 0)) for r in rows]
        for piv, bvec in basis:
            if vec[piv]:
                f = vec[piv] / bvec[piv]
                vec = [x - f * y for x, y in zip(vec, bvec)]
        nz = next((k for k, x in enumerate(vec) if x), None)
        if nz is not None:
            basis.append((nz, vec))
            pivots.append(m)
        if len(pivots) == len(lams):
            break
    # invert the square matrix S[k][j] = K_{lam_k}[pivot_j]
    size = len(lams)
    S = [[Fraction(rows[k].get(pivots[j], 0)) for j in range(size)] for k in range(size)]
    inv = [[Fraction(int(r == c)) for c in range(size)] for r in range(size)]
    # solve a * S = f  <=>  S^T a^T = f^T
    A = [[S[k][j] for k in range(size)] for j in range(size)]
    for col in range(size):
        piv = next(r for r in range(col, size) if A[r][col])
        A[col], A[piv] = A[piv], A[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        inv[col] = [x / p for x in inv[col]]
        for r in range(size):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return lams, rows, pivots, inv


def expand_in_schur(f: QSymFunction) -> Union[SchurExpansion, NotSymmetric]:
    """Exact expansion ``f = sum a_lam s_lam`` with integer a_lam, if it exists."""
    n = f.degree
    if n == 0:
        total = sum(c for _, c in f.coeffs)
        return SchurExpansion(0, ((Partition(()), total),) if total else ())
    lams, rows, pivots, inv = _solver(n)
    fd = f.as_dict()
    rhs = [fd.get(m, 0) for m in pivots]
    coeffs = [sum(inv[k][j] * rhs[j] for j in range(len(rhs))) for k in range(len(lams))]
    residual = dict(fd)
    for lam_row, a in zip(rows, coeffs):
        if a:
            for m, c in lam_row.items():
                residual[m] = residual.get(m, 0) - a * c
    if any(residual.values()) or any(a.denominator != 1 for a in coeffs):
        # report the integer remainder after subtracting the rounded solution
        rem = dict(fd)
        for lam_row, a in zip(rows, coeffs):
            k = round(a)
            for m, c in lam_row.items():
                rem[m] = rem.get(m, 0) - k * c
        return NotSymmetric(n, QSymFunction.from_counts(n, rem))
    terms = tuple((lam, int(a)) for lam, a in zip(lams, coeffs) if a)
    return SchurExpansion(n, terms)


def schur_to_q(expansion: SchurExpansion) -> QSymFunction:
    total = QSymFunction(expansion.degree)
    for lam, c in expansion.coeffs:
        total = total + schur_in_q(lam).scale(c)
    return total


def fundamental_monomials(mask: int, n: int, m: int) -> dict:
    """Q_D(x_1..x_m): sum over i_1 <= ... <= i_n with strict steps at D."""
    desc = set(_positions(mask))
    poly: dict = {}

    def walk(pos, lo, exp):
        if pos > n:
            key = tuple(exp)
            poly[key] = poly.get(key, 0) + 1
            return
        for v in range(lo, m + 1):
            exp[v - 1] += 1
            walk(pos + 1, v + 1 if pos in desc else v, exp)
            exp[v - 1] -= 1

    walk(1, 1, [0] * m)
    return poly


def expand_monomials(f: QSymFunction, m: int) -> dict:
    """Polynomial in x_1..x_m as a map exponent -> coefficient."""
    poly: dict = {}
    for mask, c in f.coeffs:
        for e, k in fundamental_monomials(mask, f.degree, m).items():
            poly[e] = poly.get(e, 0) + c * k
    return {e: c for e, c in poly.items() if c}


def is_symmetric_polynomial(poly: dict) -> bool:
    for e, c in poly.items():
        for i, j in combinations(range(len(e)), 2):
            swapped = list(e)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            if poly.get(tuple(swapped), 0) != c:
                return False
    return True
