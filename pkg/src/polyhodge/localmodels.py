"""Isolated hypersurface-singularity germs and their suspension operators.

A local model describes one isolated singular point of the hypersurface cut
out by the top-degree form.  Supported models:

* :class:`BrieskornPham` -- a sum of pure powers, one exponent per variable;
* :class:`Quasihomogeneous` -- arbitrary weights in (0, 1) with finite Milnor
  number (spectrum read off the weighted Hilbert series of the Milnor
  algebra);
* :class:`ExplicitPairs` -- spectral pairs supplied directly;
* :class:`Join` -- sum of two germs in disjoint variables.

Three suspension operators act on a germ ``g`` of Milnor number ``mu``:

* :func:`galois_suspension` grades the vanishing cohomology of ``g + x^d`` by
  the order-``d`` Galois action on the new variable; sector ``s`` is the join
  of the spectrum with the single pair ``(s/d - 1, 0)``.
* :func:`twisted_suspension` computes the eigenvalue-!=-1 Hodge numbers of the
  one-parameter smoothing twisted by a degree-``d`` fold of the base disc; the
  per-eigenvector case analysis depends on whether the input eigenvalue is 1,
  a nontrivial d-th root of unity, or neither.
* :func:`double_suspension_primitives` assembles the sector primitives of
  ``g + x^d + y^d`` from those of ``g + x^d`` and of ``g`` by integer-part
  bookkeeping; it serves as a cross-check against the direct join route.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd
from typing import Union

from .errors import NonIsolated, ValidationError
from .roots import ONE, RootLabel
from .spectra import SppSet, SpectralPair
from .tables import (
    FULL,
    HodgeTable,
    PRIMITIVE,
    primitive_from_full,
    table_from_pairs,
)


@dataclass(frozen=True)
class BrieskornPham:
    """Sum of pure powers ``x_1^{a_1} + ... + x_k^{a_k}`` with all ``a_i >= 2``."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(self.exponents)
        if not exps:
            raise ValidationError("a power-sum germ needs at least one exponent")
        for a in exps:
            if not isinstance(a, int) or a < 2:
                raise ValidationError(f"power-sum exponents must be integers >= 2, got {a}")
        object.__setattr__(self, "exponents", exps)

    @property
    def variables(self) -> int:
        return len(self.exponents)


@dataclass(frozen=True)
class Quasihomogeneous:
    """Quasihomogeneous germ given by its weights, each in (0, 1)."""

    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        ws = tuple(Fraction(w) for w in self.weights)
        if not ws:
            raise ValidationError("a quasihomogeneous germ needs at least one weight")
        for w in ws:
            if not 0 < w < 1:
                raise ValidationError(f"weights must lie strictly between 0 and 1, got {w}")
        object.__setattr__(self, "weights", ws)

    @property
    def variables(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class ExplicitPairs:
    """A germ known only through its (final) spectral pairs."""

    pairs: SppSet
    variables: int

    def __post_init__(self) -> None:
        if not isinstance(self.variables, int) or self.variables < 1:
            raise ValidationError(f"variable count must be a positive integer, got {self.variables}")
        self.pairs.require_final("explicit local spectral pairs")
        for pair, _ in self.pairs.items():
            if pair.omega > self.variables:
                raise ValidationError(
                    f"weight {pair.omega} exceeds the variable count {self.variables}"
                )


@dataclass(frozen=True)
class Join:
    """Sum of two germs in disjoint sets of variables."""

    left: "LocalModel"
    right: "LocalModel"


LocalModel = Union[BrieskornPham, Quasihomogeneous, ExplicitPairs, Join]


def model_variables(model: LocalModel) -> int:
    if isinstance(model, Join):
        return model_variables(model.left) + model_variables(model.right)
    return model.variables


@dataclass(frozen=True)
class LocalSpectrum:
    """Spectral pairs of the vanishing cohomology of a germ in ``variables`` variables."""

    pairs: SppSet
    variables: int
    milnor_number: int


def _power_pairs(a: int) -> SppSet:
    # one-variable power germ: mu = a - 1 pairs of weight 0
    return SppSet.from_pairs((Fraction(s, a) - 1, 0) for s in range(1, a))


def _poly_mul(p: dict[int, int], q: dict[int, int]) -> dict[int, int]:
    out: Counter = Counter()
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] += c1 * c2
    return {e: c for e, c in out.items() if c}


def _poly_divide_exact(num: dict[int, int], den: dict[int, int]) -> dict[int, int] | None:
    """Exact division of sparse integer polynomials; None when not divisible."""
    num = dict(num)
    den_deg = max(den)
    den_lead = den[den_deg]
    quot: dict[int, int] = {}
    while num:
        deg = max(num)
        if deg < den_deg:
            return None
        coeff, rem = divmod(num[deg], den_lead)
        if rem:
            return None
        shift = deg - den_deg
        quot[shift] = coeff
        for e, c in den.items():
            cur = num.get(e + shift, 0) - c * coeff
            if cur:
                num[e + shift] = cur
            else:
                num.pop(e + shift, None)
    return quot


def _quasihomogeneous_pairs(weights: tuple[Fraction, ...]) -> SppSet:
    """Spectrum of a quasihomogeneous germ from its weighted Hilbert series.

    With all weights written as ``a_i / D`` over a common denominator, the
    Milnor algebra has Hilbert series ``prod (1 - t^(D - a_i)) / (1 - t^a_i)``
    in the weighted grading; a monomial of weighted degree ``e`` contributes
    the spectral number ``(e + sum a_i) / D - 1``.  The division failing to be
    exact, or a negative coefficient, means the germ is not isolated.
    """
    denom = 1
    for w in weights:
        denom = denom * w.denominator // gcd(denom, w.denominator)
    a = [int(w * denom) for w in weights]
    poly: dict[int, int] = {0: 1}
    for ai in a:
        poly = _poly_mul(poly, {0: 1, denom - ai: -1})
    for ai in a:
        divided = _poly_divide_exact(poly, {0: 1, ai: -1})
        if divided is None:
            raise NonIsolated(f"weights {weights} do not define an isolated germ")
        poly = divided
    if any(c < 0 for c in poly.values()):
        raise NonIsolated(f"weights {weights} do not define an isolated germ")
    mu_expected = Fraction(1)
    for w in weights:
        mu_expected *= 1 / w - 1
    if mu_expected.denominator != 1 or sum(poly.values()) != mu_expected:
        raise NonIsolated(
            f"weights {weights}: Milnor number {sum(poly.values())} does not match "
            f"the product formula {mu_expected}"
        )
    k = len(weights)
    shift = Fraction(sum(a), denom) - 1
    return SppSet.from_pairs(
        (Fraction(e, denom) + shift, k - 1, c) for e, c in sorted(poly.items())
    )


def local_spectral_pairs(model: LocalModel) -> LocalSpectrum:
    """Spectral pairs of the vanishing cohomology of a local model."""
    if isinstance(model, BrieskornPham):
        pairs = _power_pairs(model.exponents[0])
        for a in model.exponents[1:]:
            pairs = pairs.join(_power_pairs(a))
        k = model.variables
    elif isinstance(model, Quasihomogeneous):
        pairs = _quasihomogeneous_pairs(model.weights)
        k = model.variables
    elif isinstance(model, ExplicitPairs):
        pairs = model.pairs
        k = model.variables
    elif isinstance(model, Join):
        left = local_spectral_pairs(model.left)
        right = local_spectral_pairs(model.right)
        pairs = left.pairs.join(right.pairs)
        k = left.variables + right.variables
    else:
        raise TypeError(f"unknown local model {model!r}")
    mu = pairs.total()
    if mu <= 0:
        raise NonIsolated(f"model {model!r} has no vanishing cohomology")
    for pair, _ in pairs.items():
        if not -1 < pair.alpha < k - 1:
            raise NonIsolated(
                f"spectral number {pair.alpha} outside (-1, {k - 1}) for a germ "
                f"in {k} variables"
            )
    return LocalSpectrum(pairs=pairs, variables=k, milnor_number=mu)


def galois_suspension(spec: LocalSpectrum, d: int) -> dict[int, SppSet]:
    """Galois-graded spectral pairs of the degree-``d`` suspension of a germ.

    Sector ``s`` (the character ``e(s/d)`` on the new variable) is the join of
    the input spectrum with the single pair ``(s/d - 1, 0)``.  The union over
    the ``d - 1`` sectors is the full spectrum of the suspension.
    """
    if d < 2:
        raise ValidationError(f"suspension degree must be >= 2, got {d}")
    return {
        s: spec.pairs.join(SppSet.from_pairs([(Fraction(s, d) - 1, 0)]))
        for s in range(1, d)
    }


def local_full_table(spec: LocalSpectrum) -> HodgeTable:
    """Full equivariant Hodge table of the vanishing cohomology (level k - 1)."""
    return table_from_pairs(spec.pairs, spec.variables - 1)


def local_primitive_table(spec: LocalSpectrum) -> HodgeTable:
    """Primitive table with the local center rule (center k-1, shifted at 1)."""
    return primitive_from_full(local_full_table(spec))


def twisted_suspension(spec: LocalSpectrum, d: int) -> HodgeTable:
    """Eigenvalue-!=-1 Hodge numbers of the twisted degree-``d`` suspension.

    The input is a germ ``g`` in ``n`` variables; the output is the full table
    (level ``n``) of the vanishing cohomology of the smoothing whose monodromy
    is the ``d``-fold twist, restricted to eigenvalues != 1.  Each unit of the
    input full table of type ``(p, q)`` at eigenvalue ``lambda`` produces:

    * ``lambda = 1``: ``d - 2`` units of type ``(p, q)`` at ``e(k/(d-1))``,
      ``1 <= k <= d - 2``;
    * ``lambda = e(i/d)``, ``0 < i < d``: for ``k = 0..d-2`` except
      ``k = d-1-i``, a unit at ``e((k+i)/(d-1))`` of type
      ``(p + [(k+i)/(d-1)], q + 1 - [(k+i)/(d-1)])``;
    * ``lambda = e(g)`` with ``d*g`` not integral: for ``k = 0..d-2`` a unit
      at ``e(g + (k+g)/(d-1))`` of type shifted by ``[g + (k+g)/(d-1)]``.
    """
    n = spec.variables
    full = local_full_table(spec)
    acc: Counter = Counter()
    for (lam, p, q), m in full.items():
        if lam.is_one:
            for k in range(1, d - 1):
                acc[(RootLabel.from_exponent(Fraction(k, d - 1)), p, q)] += m
        elif lam.power_is_one(d):
            i = lam.q * d
            assert i.denominator == 1
            i = int(i)
            for k in range(d - 1):
                if k == d - 1 - i:
                    continue
                e = Fraction(k + i, d - 1)
                jump = floor(e)
                acc[(RootLabel.from_exponent(e), p + jump, q + 1 - jump)] += m
        else:
            g = lam.q
            for k in range(d - 1):
                e = g + Fraction(k + g, d - 1)
                jump = floor(e)
                acc[(RootLabel.from_exponent(e), p + jump, q + 1 - jump)] += m
    return HodgeTable(FULL, n, acc)


def double_suspension_primitives(
    base_primitives: HodgeTable,
    suspension_sectors: dict[int, SppSet],
    d: int,
) -> dict[int, HodgeTable]:
    """Sector primitives of ``g + x^d + y^d`` assembled by integer-part shifts.

    ``base_primitives`` is the primitive table of the germ ``g`` itself and
    ``suspension_sectors`` the Galois grading of ``g + x^d``; both must come
    from the same germ.  Sector ``s`` of the output collects, over
    ``0 < t < d`` with ``t + s != d``, the sector ``(t + s) mod d`` primitives
    of the single suspension with the Hodge type stepping by the integer part
    of ``(t + s)/d``, plus a copy of the base primitives shifted by (1, 1).
    """
    if base_primitives.kind != PRIMITIVE:
        raise ValueError("expected the base germ's primitive table")
    k = base_primitives.level + 1
    sector_prims = {
        t: primitive_from_full(table_from_pairs(pairs, k))
        for t, pairs in suspension_sectors.items()
    }
    out: dict[int, HodgeTable] = {}
    for s in range(1, d):
        acc: Counter = Counter()
        for t in range(1, d):
            if t + s == d:
                continue
            u = (t + s) % d
            stepped = t + s > d
            for (lam, a, b), m in sector_prims[u].items():
                if stepped:
                    acc[(lam, a, b + 1)] += m
                else:
                    acc[(lam, a + 1, b)] += m
        for (lam, p, q), m in base_primitives.items():
            acc[(lam, p + 1, q + 1)] += m
        out[s] = HodgeTable(PRIMITIVE, k + 1, acc)
    return out
