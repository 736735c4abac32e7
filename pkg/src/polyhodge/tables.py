"""Equivariant Hodge tables and their spectral-pair encoding.

A table stores multiplicities ``(lambda, p, q) -> m`` for a mixed Hodge
structure with semisimple monodromy eigenvalue ``lambda`` acting on an ambient
cohomological degree ``level``.  Two kinds exist:

* ``full`` tables: the equivariant Hodge numbers ``h^{p,q}_lambda``;
* ``primitive`` tables: dimensions ``p^{p,q}_lambda`` of the primitive spaces
  of the monodromy weight filtration.

The weight filtration is centered at ``center_base`` for eigenvalues != 1 and
at ``center_base + 1`` for eigenvalue 1; this one-step shift at eigenvalue 1
is the most error-prone convention in the subject, so the center rule is
carried on the table itself rather than recomputed by callers.

Encoding conventions between a full table at level ``N`` and spectral pairs:
a unit of ``h^{p,q}_lambda`` with ``lambda = e(-beta)`` maps to the pair

* ``alpha = N - p``,            ``omega = p + q - 1``   if ``beta = 0``,
* ``alpha = N - p - 1 + beta``, ``omega = p + q``       otherwise,

and :func:`table_from_pairs` is the exact two-sided inverse.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import floor
from typing import Iterable, Mapping, Tuple

from .errors import NegativeMultiplicity, NotWeightMonotone
from .roots import RootLabel
from .spectra import SppSet, SpectralPair

TableKey = Tuple[RootLabel, int, int]

FULL = "full"
PRIMITIVE = "primitive"


class HodgeTable:
    """Immutable map ``(eigenvalue, p, q) -> multiplicity >= 0``."""

    __slots__ = ("kind", "level", "center_base", "_entries")

    def __init__(
        self,
        kind: str,
        level: int,
        entries: Mapping[TableKey, int] | Iterable[tuple[TableKey, int]] = (),
        center_base: int | None = None,
    ):
        if kind not in (FULL, PRIMITIVE):
            raise ValueError(f"table kind must be 'full' or 'primitive', got {kind!r}")
        self.kind = kind
        self.level = level
        self.center_base = level if center_base is None else center_base
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict[TableKey, int] = {}
        for (lam, p, q), mult in items:
            if not isinstance(mult, int):
                raise TypeError(f"multiplicity must be an integer, got {mult!r}")
            if mult == 0:
                continue
            if mult < 0:
                raise NegativeMultiplicity(
                    f"negative multiplicity {mult} at (lambda={lam}, p={p}, q={q})"
                )
            key = (lam, p, q)
            acc[key] = acc.get(key, 0) + mult
        if kind == PRIMITIVE:
            for (lam, p, q), mult in acc.items():
                c = self.center_base + (1 if lam.is_one else 0)
                if p + q < c:
                    raise ValueError(
                        f"primitive entry at (lambda={lam}, p={p}, q={q}) lies below "
                        f"the weight center {c}"
                    )
        self._entries = acc

    # -- queries --------------------------------------------------------------

    def center(self, lam: RootLabel) -> int:
        return self.center_base + (1 if lam.is_one else 0)

    def entry(self, lam: RootLabel, p: int, q: int) -> int:
        return self._entries.get((lam, p, q), 0)

    def items(self) -> list[tuple[TableKey, int]]:
        return sorted(self._entries.items())

    def total(self) -> int:
        return sum(self._entries.values())

    def eigenvalues(self) -> list[RootLabel]:
        return sorted({lam for (lam, _, _) in self._entries})

    def restrict(self, lam: RootLabel) -> dict[tuple[int, int], int]:
        return {
            (p, q): m for (l, p, q), m in sorted(self._entries.items()) if l == lam
        }

    def hodge_grading(self) -> dict[int, int]:
        """Dimensions of the Hodge graded pieces: first index -> total count."""
        acc: Counter = Counter()
        for (_, p, _), m in self._entries.items():
            acc[p] += m
        return dict(sorted(acc.items()))

    def is_conjugation_symmetric(self) -> bool:
        """Whether ``h^{p,q}_lambda = h^{q,p}_{conj(lambda)}`` throughout."""
        return all(
            m == self.entry(lam.conjugate(), q, p)
            for (lam, p, q), m in self._entries.items()
        )

    # -- plumbing --------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HodgeTable):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.level == other.level
            and self.center_base == other.center_base
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.level, self.center_base, tuple(self.items())))

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __repr__(self) -> str:
        inner = ", ".join(
            f"({lam}, {p}, {q}): {m}" for (lam, p, q), m in self.items()
        )
        return (
            f"HodgeTable({self.kind}, level={self.level}, "
            f"center_base={self.center_base}, {{{inner}}})"
        )


def pairs_from_table(table: HodgeTable) -> SppSet:
    """Encode a full table as spectral pairs (one pair per unit of multiplicity)."""
    if table.kind != FULL:
        raise ValueError("only full tables encode to spectral pairs")
    acc: Counter = Counter()
    n = table.level
    for (lam, p, q), m in table.items():
        beta = lam.neg_exponent
        if beta == 0:
            alpha = Fraction(n - p)
            omega = p + q - 1
        else:
            alpha = n - p - 1 + beta
            omega = p + q
        acc[SpectralPair(alpha, omega)] += m
    return SppSet(acc)


def table_from_pairs(spp: SppSet, level: int, center_base: int | None = None) -> HodgeTable:
    """Decode a final multiset of spectral pairs into a full table at ``level``."""
    spp.require_final("spectral pairs to decode")
    acc: Counter = Counter()
    for pair, m in spp.items():
        lam = RootLabel.from_exponent(-pair.alpha)
        s_alpha = 1 if pair.alpha.denominator == 1 else 0
        fl = floor(-pair.alpha)
        p = level + fl
        q = pair.omega + s_alpha - level - fl
        acc[(lam, p, q)] += m
    return HodgeTable(FULL, level, acc, center_base=center_base)


def full_from_primitive(prim: HodgeTable) -> HodgeTable:
    """Expand primitive multiplicities into the full equivariant Hodge table.

    Above the center each primitive ``p^{a,b}`` spreads down its weight string
    ``h^{a-l, b-l}``; below the center entries are the reflection
    ``h^{a,b} = h^{c-b, c-a}`` at the center ``c`` of its eigenvalue.
    """
    if prim.kind != PRIMITIVE:
        raise ValueError("expected a primitive table")
    acc: Counter = Counter()
    for (lam, a, b), m in prim.items():
        c = prim.center(lam)
        # weights >= c along the string
        for step in range((a + b - c) // 2 + 1):
            acc[(lam, a - step, b - step)] += m
    full: Counter = Counter(acc)
    for (lam, u, v), m in acc.items():
        c = prim.center(lam)
        if u + v > c:
            full[(lam, c - v, c - u)] += m
    return HodgeTable(FULL, prim.level, full, center_base=prim.center_base)


def primitive_from_full(full: HodgeTable) -> HodgeTable:
    """Extract primitive multiplicities: ``p^{a,b} = h^{a,b} - h^{a+1,b+1}``.

    Only entries on or above the weight center are primitive.  A negative
    difference means the table cannot come from a monodromy weight filtration.
    """
    if full.kind != FULL:
        raise ValueError("expected a full table")
    acc: dict[TableKey, int] = {}
    keys = set(full._entries)
    candidates = set(keys)
    candidates.update((lam, p - 1, q - 1) for (lam, p, q) in keys)
    for lam, a, b in sorted(candidates):
        if a + b < full.center(lam):
            continue
        diff = full.entry(lam, a, b) - full.entry(lam, a + 1, b + 1)
        if diff < 0:
            raise NotWeightMonotone(
                f"h^{{{a},{b}}} < h^{{{a + 1},{b + 1}}} at eigenvalue {lam}: "
                "not monotone along the weight string"
            )
        if diff:
            acc[(lam, a, b)] = diff
    return HodgeTable(PRIMITIVE, full.level, acc, center_base=full.center_base)
