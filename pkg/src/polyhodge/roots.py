"""Exact labels for roots of unity.

All eigenvalues handled by this package (monodromy operators, Galois actions
on cyclic covers) are roots of unity.  A root is stored by its exponent: the
label ``q`` with ``0 <= q < 1`` stands for ``e(q) = exp(2*pi*i*q)``.

The literature on singularity spectra freely mixes the positive convention
``e(q)`` with the negative one ``e(-beta)``.  We keep a single storage
convention and convert through :attr:`RootLabel.neg_exponent` at the point of
use; this is the cheapest way to avoid sign drift across formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class RootLabel:
    """The unit root ``e(q)`` with exponent ``q`` in ``[0, 1)``."""

    q: Fraction

    def __post_init__(self) -> None:
        q = Fraction(self.q)
        if not 0 <= q < 1:
            raise ValueError(f"root exponent must lie in [0, 1), got {q}")
        object.__setattr__(self, "q", q)

    @classmethod
    def from_exponent(cls, r: Fraction | int | str) -> "RootLabel":
        """Label of ``e(r)`` for an arbitrary rational ``r`` (reduced mod 1)."""
        return cls(Fraction(r) % 1)

    @property
    def is_one(self) -> bool:
        return self.q == 0

    @property
    def neg_exponent(self) -> Fraction:
        """The ``beta`` with this root equal to ``e(-beta)``; 0 iff the root is 1."""
        return (-self.q) % 1

    def conjugate(self) -> "RootLabel":
        return RootLabel.from_exponent(-self.q)

    def inverse(self) -> "RootLabel":
        # on the unit circle the inverse is the conjugate
        return self.conjugate()

    def power(self, k: int) -> "RootLabel":
        return RootLabel.from_exponent(k * self.q)

    def power_is_one(self, k: int) -> bool:
        """Whether this root is a k-th root of unity."""
        return (k * self.q) % 1 == 0

    def __str__(self) -> str:
        return "1" if self.is_one else f"e({self.q})"

    def neg_str(self) -> str:
        """The same root written in the negative convention ``e(-beta)``."""
        return "1" if self.is_one else f"e(-{self.neg_exponent})"

    def __repr__(self) -> str:
        return f"RootLabel({self.q!r})"


ONE = RootLabel(Fraction(0))


def root(r: Fraction | int | str) -> RootLabel:
    """Shorthand for ``RootLabel.from_exponent``; accepts ``"1/6"`` strings."""
    return RootLabel.from_exponent(Fraction(r))
