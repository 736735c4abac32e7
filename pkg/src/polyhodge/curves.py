"""Closed forms for polynomial maps of the plane.

For ``n = 1`` the top form factors as a product of powers of distinct linear
forms, ``l_1^{a_1} ... l_m^{a_m}``, and the primitive equivariant Hodge
numbers at infinity are elementary expressions in the multiplicities: counts
of integrality events ``delta(x) = [x is an integer]`` together with floor and
ceiling sums.  The general projective solvers are not used here (the
hypersurface at infinity degenerates to a multiplicity divisor on the line);
everything downstream of the primitive table is shared with the ``n >= 2``
pipeline.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd

from .errors import NegativeFormula, ValidationError
from .roots import ONE, RootLabel
from .tables import HodgeTable, PRIMITIVE


def _delta(x: Fraction) -> int:
    return 1 if x.denominator == 1 else 0


@dataclass(frozen=True)
class CurveSpec:
    """Multiplicities of the distinct linear factors of a binary top form."""

    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        mults = tuple(self.multiplicities)
        if not mults:
            raise ValidationError("need at least one linear factor")
        for a in mults:
            if not isinstance(a, int) or a < 1:
                raise ValidationError(f"multiplicities must be integers >= 1, got {a}")
        if sum(mults) < 2:
            raise ValidationError("total degree must be at least 2")
        object.__setattr__(self, "multiplicities", mults)

    @property
    def n(self) -> int:
        return 1

    @property
    def d(self) -> int:
        return sum(self.multiplicities)

    @property
    def factor_count(self) -> int:
        return len(self.multiplicities)

    @property
    def multiplicity_gcd(self) -> int:
        g = 0
        for a in self.multiplicities:
            g = gcd(g, a)
        return g

    def primitive_table(self) -> HodgeTable:
        return curve_primitives(self)


def curve_primitives(spec: CurveSpec) -> HodgeTable:
    """Primitive equivariant Hodge numbers at infinity of a plane-curve map.

    Level 1, weight center 1 (2 at eigenvalue 1).  Eigenvalue 1 carries
    ``m - 1`` classes of type (1, 1).  A nontrivial d-th root ``e(-s/d)``
    carries types (1, 1), (0, 1) and (1, 0) counted by integrality of
    ``s a_j / d`` and by ceiling/floor sums.  Eigenvalues that are not d-th
    roots contribute one class of type (0, 1) or (1, 0) per linear factor
    whose multiplicity kills the (d-1)-st power of the eigenvalue, the side
    decided by the fractional data of the exponent.
    """
    mults = spec.multiplicities
    d = spec.d
    m = spec.factor_count
    a_gcd = spec.multiplicity_gcd
    acc: Counter = Counter()

    if m - 1:
        acc[(ONE, 1, 1)] = m - 1

    for s in range(1, d):
        lam = RootLabel.from_exponent(Fraction(-s, d))
        sa = Fraction(s * a_gcd, d)
        p11 = -_delta(sa) + sum(_delta(Fraction(s * a, d)) for a in mults)
        p01 = -s - 1 + _delta(sa) + sum(ceil(Fraction(s * a, d)) for a in mults)
        p10 = s - 1 + _delta(sa) - sum(floor(Fraction(s * a, d)) for a in mults)
        for value, p, q in ((p11, 1, 1), (p01, 0, 1), (p10, 1, 0)):
            if value < 0:
                raise NegativeFormula(
                    f"closed form for p^{{{p},{q}}} at e(-{s}/{d}) gave {value}"
                )
            if value:
                acc[(lam, p, q)] += value

    # eigenvalues beyond the d-th roots: beta runs over fractions with
    # (d-1) * a_j * beta integral for some factor j
    seen: set[Fraction] = set()
    for a in mults:
        order = (d - 1) * a
        for l in range(1, order):
            beta = Fraction(l, order)
            if beta in seen:
                continue
            seen.add(beta)
            if (d * beta) % 1 == 0:
                continue  # a d-th root of unity
            if ((d - 1) * beta) % 1 == 0:
                continue  # these eigenvalues carry nothing
            count = sum(1 for aj in mults if ((d - 1) * aj * beta) % 1 == 0)
            if not count:
                continue
            gamma = ((d - 1) * beta) % 1
            lam = RootLabel.from_exponent(-beta)
            if beta + gamma < 1:
                acc[(lam, 0, 1)] += count
            else:
                acc[(lam, 1, 0)] += count

    return HodgeTable(PRIMITIVE, 1, acc)


def curve_cover_h11(spec: CurveSpec, s: int) -> int:
    """Above-middle Hodge number of cover sector ``s`` for a plane-curve map.

    Equals 1 exactly when ``s * gcd(a_1..a_m) / d`` is an integer; this is the
    only nonzero above-middle entry in the curve case.
    """
    if not 0 < s < spec.d:
        raise ValidationError(f"sector must satisfy 0 < s < {spec.d}, got {s}")
    return _delta(Fraction(s * spec.multiplicity_gcd, spec.d))
