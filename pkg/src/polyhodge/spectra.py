"""Spectral pairs and their exact multiset calculus.

A spectral pair ``(alpha, omega)`` packs one Hodge class of a mixed Hodge
structure with finite-order semisimple monodromy: the eigenvalue is
``e(-alpha)``, the Hodge index is read off the integer part of ``alpha`` and
``omega`` records the weight.  Collections of pairs form elements of the free
abelian group on ``Q x N``, i.e. multisets with (possibly signed) integer
multiplicities.  Signed values appear only in intermediate formula evaluation;
every externally visible multiset must be *final*, meaning all multiplicities
are nonnegative.

Two operations generate the whole calculus:

* the join ``(a, w) * (a', w') = (a + a' + 1, w + w' + 1)``, extended
  bilinearly, which governs sums of singularities in disjoint variables, and
* the shift ``T(a, b)`` sending ``(alpha, omega)`` to
  ``(alpha + a, omega + a + b)`` for integral ``a``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Tuple, Union

from .errors import DegreeTooSmall, NegativeMultiplicity, NonIntegralShift

RationalLike = Union[Fraction, int, str]


@dataclass(frozen=True, order=True)
class SpectralPair:
    """One spectral pair ``(alpha, omega)`` with ``omega >= 0``."""

    alpha: Fraction
    omega: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if not isinstance(self.omega, int) or self.omega < 0:
            raise ValueError(f"weight must be a nonnegative integer, got {self.omega}")

    def __str__(self) -> str:
        return f"({self.alpha}, {self.omega})"


PairLike = Union[SpectralPair, Tuple[RationalLike, int]]


def _as_pair(p: PairLike) -> SpectralPair:
    if isinstance(p, SpectralPair):
        return p
    alpha, omega = p
    return SpectralPair(Fraction(alpha), omega)


class SppSet:
    """A signed integer multiset of spectral pairs.

    Instances are immutable; all operations return new sets.  Equality and
    hashing are by content, with zero multiplicities normalised away.
    """

    __slots__ = ("_counts",)

    def __init__(self, counts: Mapping[SpectralPair, int] | Iterable = ()):
        acc: Counter = Counter()
        if isinstance(counts, Mapping):
            items = counts.items()
        else:
            items = ((p, 1) for p in counts)
        for pair, mult in items:
            if not isinstance(mult, int):
                raise TypeError(f"multiplicity must be an integer, got {mult!r}")
            if mult:
                acc[_as_pair(pair)] += mult
        object.__setattr__(self, "_counts", {p: m for p, m in acc.items() if m})

    @classmethod
    def from_pairs(cls, pairs: Iterable) -> "SppSet":
        """Build from ``(alpha, omega)`` or ``(alpha, omega, mult)`` tuples."""
        acc: Counter = Counter()
        for entry in pairs:
            if isinstance(entry, SpectralPair):
                acc[entry] += 1
                continue
            if len(entry) == 2:
                alpha, omega = entry
                mult = 1
            else:
                alpha, omega, mult = entry
            acc[SpectralPair(Fraction(alpha), omega)] += mult
        return cls(acc)

    # -- basic queries ------------------------------------------------------

    def items(self) -> list[tuple[SpectralPair, int]]:
        """Entries with nonzero multiplicity, in a deterministic order."""
        return sorted(self._counts.items())

    def multiplicity(self, alpha: RationalLike, omega: int) -> int:
        return self._counts.get(SpectralPair(Fraction(alpha), omega), 0)

    def total(self) -> int:
        """Sum of multiplicities (signed)."""
        return sum(self._counts.values())

    @property
    def is_final(self) -> bool:
        return all(m >= 0 for m in self._counts.values())

    def require_final(self, what: str = "spectral-pair multiset") -> "SppSet":
        if not self.is_final:
            bad = sorted(p for p, m in self._counts.items() if m < 0)
            raise NegativeMultiplicity(f"{what} has negative multiplicity at {bad[0]}")
        return self

    def spectrum(self) -> dict[Fraction, int]:
        """First projection: spectral numbers with multiplicity."""
        acc: Counter = Counter()
        for pair, mult in self._counts.items():
            acc[pair.alpha] += mult
        return {a: m for a, m in sorted(acc.items()) if m}

    # -- algebra -------------------------------------------------------------

    def __add__(self, other: "SppSet") -> "SppSet":
        acc = Counter(self._counts)
        for p, m in other._counts.items():
            acc[p] += m
        return SppSet(acc)

    def __sub__(self, other: "SppSet") -> "SppSet":
        acc = Counter(self._counts)
        for p, m in other._counts.items():
            acc[p] -= m
        return SppSet(acc)

    def join(self, other: "SppSet") -> "SppSet":
        """Bilinear extension of ``(a, w) * (a', w') = (a + a' + 1, w + w' + 1)``."""
        acc: Counter = Counter()
        for p, m in self._counts.items():
            for p2, m2 in other._counts.items():
                acc[SpectralPair(p.alpha + p2.alpha + 1, p.omega + p2.omega + 1)] += m * m2
        return SppSet(acc)

    __mul__ = join

    def shift(self, a: RationalLike, b: int) -> "SppSet":
        """The transformation ``T(a, b)``: ``(alpha, omega) -> (alpha + a, omega + a + b)``.

        ``a`` must be an integer so the shifted weight stays integral.
        """
        a = Fraction(a)
        if a.denominator != 1:
            raise NonIntegralShift(f"shift offset must be integral, got {a}")
        a_int = int(a)
        acc: Counter = Counter()
        for p, m in self._counts.items():
            acc[SpectralPair(p.alpha + a_int, p.omega + a_int + b)] += m
        return SppSet(acc)

    # -- dunder plumbing ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SppSet):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __bool__(self) -> bool:
        return bool(self._counts)

    def __iter__(self) -> Iterator[tuple[SpectralPair, int]]:
        return iter(self.items())

    def __repr__(self) -> str:
        inner = ", ".join(f"{p}: {m}" for p, m in self.items())
        return f"SppSet({{{inner}}})"


EMPTY = SppSet()


def suspension_pairs(d: int) -> SppSet:
    """The multiset ``{(-s/d, 0) : 0 < s < d}`` joined in by a degree-d suspension.

    These are also the spectral pairs of the one-variable power germ of
    degree ``d``, since ``{-s/d} = {s/d - 1}`` as multisets.
    """
    if d < 2:
        raise DegreeTooSmall(f"suspension degree must be >= 2, got {d}")
    return SppSet.from_pairs((Fraction(-s, d), 0) for s in range(1, d))
