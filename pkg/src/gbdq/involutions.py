"""The involutions phi_i on GB chains, built from rules A, B and C on length-three windows."""

from __future__ import annotations

import enum
from typing import Sequence

from .chains import Chain, disjoint, reverse_chain


class RuleTag(str, enum.Enum):
    FIXED = "Fixed"
    A = "A"
    B = "B"
    C = "C"

    def __str__(self) -> str:
        return self.value


class NoRuleApplies(RuntimeError):
    """No rule matched a window with exactly one descent; the chain was not valid."""


def _rule_a(a1, b1, a2, b2, a3, b3):
    # (bg, ab, bd) <-> (ag, gd, bg) and (bd, ab, bg) <-> (bg, gd, ag), a<b<g<d
    if a1 == b2 == a3 and a2 < a1:
        be, al = a1, a2
        if b1 < b3:
            ga, de = b1, b3
            return (al, ga, ga, de, be, ga)
        ga, de = b3, b1
        return (be, ga, ga, de, al, ga)
    if b1 == a2 == b3:
        ga, de = b1, b2
        if a1 < a3:
            al, be = a1, a3
            return (be, ga, al, be, be, de)
        al, be = a3, a1
        return (be, de, al, be, be, ga)
    return None


def _rule_c(a1, b1, a2, b2, a3, b3):
    # (pq, ab, bg) <-> (ab, bg, pq) and (bg, ab, pq) <-> (pq, bg, ab), a<b<p<q<g
    if b2 == a3 and b2 < a1 and b1 < b3:
        return (a2, b2, a3, b3, a1, b1)
    if b1 == a2 and b1 < a3 and b3 < b2:
        return (a3, b3, a1, b1, a2, b2)
    if a1 == b2 and a1 < a3 and b3 < b1:
        return (a3, b3, a1, b1, a2, b2)
    if a2 == b3 and a2 < a1 and b1 < b2:
        return (a2, b2, a3, b3, a1, b1)
    return None


def _rule_b(a1, b1, a2, b2, a3, b3):
    # Knuth moves on the labels, swapping an adjacent disjoint pair
    if b1 > b2:
        swap_first = b3 < b1  # (g, a, b) -> (a, g, b); else (b, a, g) -> (b, g, a)
    else:
        swap_first = b3 > b1  # (a, g, b) -> (g, a, b); else (b, g, a) -> (b, a, g)
    if swap_first:
        if disjoint((a1, b1), (a2, b2)):
            return (a2, b2, a1, b1, a3, b3)
    elif disjoint((a2, b2), (a3, b3)):
        return (a1, b1, a3, b3, a2, b2)
    return None


def phi_window(window: Sequence[int]) -> tuple[tuple, RuleTag]:
    """phi_2 on a flat length-three chain ``(a1, b1, a2, b2, a3, b3)``."""
    b1, b2, b3 = window[1], window[3], window[5]
    if (b1 > b2) == (b2 > b3):
        return tuple(window), RuleTag.FIXED
    for rule, tag in ((_rule_a, RuleTag.A), (_rule_c, RuleTag.C), (_rule_b, RuleTag.B)):
        out = rule(*window)
        if out is not None:
            return out, tag
    raise NoRuleApplies(f"no rule for window {tuple(window)}")


def phi_flat(flat: tuple, i: int) -> tuple[tuple, RuleTag]:
    """phi_i on a flat chain; acts on positions i-1, i, i+1 (1-based)."""
    n = len(flat) // 2
    if not 2 <= i <= n - 1:
        raise ValueError(f"phi_{i} undefined for chains of length {n}")
    lo = 2 * (i - 2)
    window, tag = phi_window(flat[lo:lo + 6])
    if tag is RuleTag.FIXED:
        return flat, tag
    return flat[:lo] + window + flat[lo + 6:], tag


def phi(c: Chain, i: int) -> tuple[Chain, RuleTag]:
    flat, tag = phi_flat(c.flat, i)
    if tag is RuleTag.FIXED:
        return c, tag
    return Chain.from_flat(flat), tag


def phi_reversal_check(c: Chain, i: int) -> bool:
    """Reversal intertwines phi_i with phi_{n+1-i}."""
    img, _ = phi(c, i)
    rev, _ = phi(reverse_chain(c), c.n + 1 - i)
    return reverse_chain(img) == rev
