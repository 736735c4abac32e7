"""The equivariant mixed Hodge structure at infinity of a polynomial map.

Input: the combinatorics of the top-degree form of a polynomial in ``n + 1``
variables whose generic fibers have nonsingular projective closure — namely,
the degree ``d``, the isolated singularities of the hypersurface at infinity,
and the position-dependent global Hodge input.  Two polynomials with the same
top form share all invariants computed here, so lower-order terms never enter.

Output: the primitive equivariant Hodge numbers of the limit mixed Hodge
structure on the middle cohomology of the generic fiber, assembled per
monodromy eigenvalue:

* eigenvalue 1 (weight filtration centered at ``n + 1``): reflection of the
  middle table of the hypersurface at infinity;
* nontrivial d-th roots of unity (centered at ``n``): reflection of the
  matching Galois sector of the cyclic cover;
* all other eigenvalues: sums of local primitive numbers with an integer-part
  type shift, driven by which local monodromy eigenvalues occur.

Downstream of the primitive table everything is formal: full table, Jordan
block structure of the monodromy, spectral pairs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import ValidationError
from .globalhodge import (
    GlobalPositionData,
    hodge_cover_sectors,
    hodge_infinity_hypersurface,
)
from .localmodels import (
    LocalModel,
    LocalSpectrum,
    local_primitive_table,
    local_spectral_pairs,
    model_variables,
    twisted_suspension,
)
from .roots import ONE, RootLabel
from .spectra import SppSet
from .tables import (
    FULL,
    HodgeTable,
    PRIMITIVE,
    full_from_primitive,
    pairs_from_table,
)


@dataclass(frozen=True)
class StarPolynomialSpec:
    """Top-degree data of a polynomial map with tame behaviour at infinity.

    ``locals`` lists one model per singular point of the hypersurface cut out
    by the top form; each germ lives in ``n`` variables.  ``global_data``
    carries the position-dependent Hodge input.  The plane-curve case
    ``n = 1`` has its own closed forms and is described by
    :class:`polyhodge.curves.CurveSpec` instead.
    """

    n: int
    d: int
    locals: tuple[LocalModel, ...] = ()
    global_data: GlobalPositionData | None = None

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValidationError(
                f"need n >= 2 (use the curve pipeline for n = 1), got n={self.n}"
            )
        if self.d < 2:
            raise ValidationError(f"need degree d >= 2, got d={self.d}")
        object.__setattr__(self, "locals", tuple(self.locals))
        for idx, model in enumerate(self.locals):
            k = model_variables(model)
            if k != self.n:
                raise ValidationError(
                    f"locals[{idx}] is a germ in {k} variables; expected {self.n}"
                )
        g = self.global_data
        if g is None:
            g = GlobalPositionData.create(self.n, self.d)
            object.__setattr__(self, "global_data", g)
        if g.n != self.n or g.d != self.d:
            raise ValidationError(
                f"global data is for (n={g.n}, d={g.d}), spec is (n={self.n}, d={self.d})"
            )

    def local_spectra(self) -> tuple[LocalSpectrum, ...]:
        return tuple(local_spectral_pairs(m) for m in self.locals)


def primitives_at_infinity(spec: StarPolynomialSpec) -> HodgeTable:
    """Primitive equivariant Hodge numbers of the limit structure at infinity."""
    n, d = spec.n, spec.d
    specs = spec.local_spectra()
    acc: Counter = Counter()

    # eigenvalue 1: reflect the middle table of the hypersurface at infinity
    for (i, j), m in hodge_infinity_hypersurface(specs, spec.global_data, n, d).items():
        acc[(ONE, n - j, n - i)] += m

    # nontrivial d-th roots: reflect the matching Galois sector of the cover
    for s, table in hodge_cover_sectors(specs, spec.global_data, n, d).items():
        lam = RootLabel.from_exponent(Fraction(s, d))
        for (i, j), m in table.items():
            acc[(lam, n - j, n - i)] += m

    # remaining eigenvalues: local contributions with an integer-part shift.
    # An eigenvalue xi = e(-beta) contributes only when e((d-1)*beta) is an
    # eigenvalue of some local monodromy, so the candidates are enumerated
    # from the local tables; gamma below is exactly that local exponent.
    local_prims = [local_primitive_table(s) for s in specs]
    local_eigs = sorted({lam for tab in local_prims for lam in tab.eigenvalues()})
    candidates: set[RootLabel] = set()
    for lam_loc in local_eigs:
        for k in range(d - 1):
            beta = Fraction(lam_loc.q + k, d - 1)
            if beta == 0:
                continue
            if (d * beta) % 1 == 0:
                continue  # a d-th root of unity, already handled above
            candidates.add(RootLabel.from_exponent(-beta))
    for xi in sorted(candidates):
        beta = xi.neg_exponent
        gamma = ((d - 1) * beta) % 1
        delta = 0 if gamma == 0 else 1
        jump = floor(beta + gamma)
        lam_loc = RootLabel(gamma)
        for tab in local_prims:
            for (a, b), m in tab.restrict(lam_loc).items():
                acc[(xi, a + jump, b + delta - jump)] += m

    return HodgeTable(PRIMITIVE, n, acc)


def full_at_infinity(prim: HodgeTable) -> HodgeTable:
    """Full equivariant Hodge table from the primitive one (global center rule)."""
    return full_from_primitive(prim)


def jordan_structure(prim: HodgeTable) -> dict[tuple[RootLabel, int], int]:
    """Jordan block counts of the monodromy at infinity.

    A primitive entry ``p^{a,b}_lambda`` contributes that many blocks of size
    ``a + b - center + 1`` at eigenvalue ``lambda``.
    """
    acc: Counter = Counter()
    for (lam, a, b), m in prim.items():
        size = a + b - prim.center(lam) + 1
        acc[(lam, size)] += m
    return {key: m for key, m in sorted(acc.items()) if m}


def spectral_pairs_at_infinity(full: HodgeTable) -> SppSet:
    """Spectral pairs of the structure at infinity (encoded at level n)."""
    if full.kind != FULL:
        raise ValueError("expected the full table at infinity")
    return pairs_from_table(full)


@dataclass(frozen=True)
class InfinityHodge:
    """Bundle of the invariants at infinity of one polynomial class."""

    primitive: HodgeTable
    full: HodgeTable
    jordan: tuple[tuple[tuple[RootLabel, int], int], ...]
    rank: int

    @classmethod
    def compute(cls, spec) -> "InfinityHodge":
        """Accepts a :class:`StarPolynomialSpec` or anything with ``primitive_table()``."""
        prim = (
            primitives_at_infinity(spec)
            if isinstance(spec, StarPolynomialSpec)
            else spec.primitive_table()
        )
        return cls.from_primitive(prim)

    @classmethod
    def from_primitive(cls, prim: HodgeTable) -> "InfinityHodge":
        full = full_from_primitive(prim)
        jordan = tuple(sorted(jordan_structure(prim).items()))
        return cls(primitive=prim, full=full, jordan=jordan, rank=full.total())

    @property
    def spectral_pairs(self) -> SppSet:
        return spectral_pairs_at_infinity(self.full)

    def max_jordan_size(self) -> int:
        return max((size for (_, size), _ in self.jordan), default=0)


def twist_aggregate_check(
    spec: StarPolynomialSpec, full: HodgeTable | None = None
) -> tuple[bool, list[tuple[RootLabel, int, int, int, int]]]:
    """Aggregate consistency between the d-th-power grouping and local twists.

    For each eigenvalue ``eta != 1`` of the d-th power of the monodromy and
    each type ``(p, q)``, the total multiplicity over eigenvalues ``xi`` with
    ``xi^d = eta`` must equal the multiplicity of ``(p, q)`` at ``eta^{-1}``
    in the sum of the twisted suspensions of the local germs.  Returns the
    verdict plus rows ``(eta, p, q, lhs, rhs)`` for every mismatch candidate.
    """
    if full is None:
        full = full_at_infinity(primitives_at_infinity(spec))
    lhs: Counter = Counter()
    for (lam, p, q), m in full.items():
        eta = lam.power(spec.d)
        if not eta.is_one:
            lhs[(eta, p, q)] += m
    rhs: Counter = Counter()
    for s in spec.local_spectra():
        for (lam, p, q), m in twisted_suspension(s, spec.d).items():
            rhs[(lam.inverse(), p, q)] += m
    rows = []
    ok = True
    for key in sorted(set(lhs) | set(rhs)):
        left, right = lhs[key], rhs[key]
        rows.append((*key, left, right))
        if left != right:
            ok = False
    return ok, rows
