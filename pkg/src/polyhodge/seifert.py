"""Seifert-form decomposition, signatures, and spectral-pair identities.

The real Seifert form of the fibration at infinity decomposes into
indecomposable variation structures ``W^k_lambda(sign)`` (eigenvalue, Jordan
size, sign); the decomposition is read off the primitive table: each
``p^{a,b}_lambda`` contributes blocks of size ``a + b - center + 1`` with sign
``(-1)^b``.  The equivariant signature admits two independent routes — the
closed alternating sum over the primitive table, and a per-block contribution
rule — which the self-checks compare.

This module also houses the mod-2 projection of the spectral pairs and its
inverse up to the Seifert decomposition, the two involutive symmetries of the
pair multiset, the degree-d suspension identity for the whole pipeline, and
deformation semicontinuity reports over half-open intervals.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Iterable, Mapping

from .errors import AmbiguousResidue, ValidationError
from .globalhodge import GlobalPositionData, lift_cover_sectors
from .infinity import InfinityHodge, StarPolynomialSpec, primitives_at_infinity
from .localmodels import BrieskornPham, Join
from .roots import ONE, RootLabel
from .spectra import SppSet, SpectralPair, suspension_pairs
from .tables import HodgeTable, PRIMITIVE


@dataclass(frozen=True, order=True)
class VariationBlock:
    """One indecomposable variation structure ``W^size_eigenvalue(sign)``."""

    eigenvalue: RootLabel
    size: int
    sign: int

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError(f"block size must be >= 1, got {self.size}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def __str__(self) -> str:
        sgn = "+1" if self.sign == 1 else "-1"
        return f"W^{self.size}_{self.eigenvalue}({sgn})"


class SeifertDecomposition:
    """Multiset of variation blocks with nonnegative counts."""

    __slots__ = ("_counts",)

    def __init__(self, counts: Mapping[VariationBlock, int] | Iterable[VariationBlock] = ()):
        acc: Counter = Counter()
        items = counts.items() if isinstance(counts, Mapping) else ((b, 1) for b in counts)
        for block, count in items:
            if count < 0:
                raise ValueError(f"negative block count {count} for {block}")
            if count:
                acc[block] += count
        self._counts = dict(acc)

    def items(self) -> list[tuple[VariationBlock, int]]:
        return sorted(self._counts.items())

    def count(self, block: VariationBlock) -> int:
        return self._counts.get(block, 0)

    def total_rank(self) -> int:
        """Total dimension: sum of size times count."""
        return sum(b.size * c for b, c in self._counts.items())

    def signature(self) -> dict[RootLabel, int]:
        """Equivariant signature from the block data.

        A block ``W^k_lambda(sign)`` contributes ``sign`` when ``k`` is odd
        and ``lambda != 1``, or when ``k`` is even and ``lambda = 1`` (the
        odd-size blocks at eigenvalue 1 pair a one-dimensional radical with
        hyperbolic planes, so they drop out).
        """
        acc: Counter = Counter()
        for block, count in self._counts.items():
            s = 1 if block.eigenvalue.is_one else 0
            if (block.size + s) % 2 == 1:
                acc[block.eigenvalue] += block.sign * count
        return {lam: v for lam, v in sorted(acc.items()) if v}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeifertDecomposition):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __bool__(self) -> bool:
        return bool(self._counts)

    def __repr__(self) -> str:
        inner = " + ".join(f"{c}*{b}" for b, c in self.items())
        return f"SeifertDecomposition({inner or '0'})"


def seifert_decomposition(prim: HodgeTable) -> SeifertDecomposition:
    """Decompose the variation structure at infinity from the primitive table."""
    if prim.kind != PRIMITIVE:
        raise ValueError("expected a primitive table")
    acc: Counter = Counter()
    for (lam, a, b), m in prim.items():
        size = a + b - prim.center(lam) + 1
        sign = 1 if b % 2 == 0 else -1
        acc[VariationBlock(lam, size, sign)] += m
    return SeifertDecomposition(acc)


def equivariant_signature(prim: HodgeTable) -> dict[RootLabel, int]:
    """Signature of the intersection form per monodromy eigenvalue.

    Closed form over the primitive table: entries with ``a + b - center``
    even contribute ``(-1)^b`` times their multiplicity; odd strings carry
    hyperbolic pieces only.
    """
    if prim.kind != PRIMITIVE:
        raise ValueError("expected a primitive table")
    n = prim.level
    acc: Counter = Counter()
    for (lam, a, b), m in prim.items():
        if a + b > 2 * n:
            continue
        if (a + b - n) % 2 == 0:
            acc[lam] += (-1) ** b * m
    return {lam: v for lam, v in sorted(acc.items()) if v}


# -- mod-2 projection ---------------------------------------------------------


class SppMod2:
    """Multiset of spectral pairs with the first entry reduced mod 2."""

    __slots__ = ("_counts",)

    def __init__(self, counts: Mapping[tuple[Fraction, int], int] = ()):
        acc: Counter = Counter()
        items = counts.items() if isinstance(counts, Mapping) else counts
        for (residue, omega), m in items:
            residue = Fraction(residue) % 2
            if m < 0:
                raise ValueError("mod-2 multiset must be final")
            if m:
                acc[(residue, omega)] += m
        self._counts = dict(acc)

    def items(self) -> list[tuple[tuple[Fraction, int], int]]:
        return sorted(self._counts.items())

    def total(self) -> int:
        return sum(self._counts.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SppMod2):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"({r}, {w}): {m}" for (r, w), m in self.items())
        return f"SppMod2({{{inner}}})"


def spp_mod2(spp: SppSet) -> SppMod2:
    """Project spectral pairs to residues mod 2 (weights kept exact)."""
    spp.require_final("spectral pairs to project")
    acc: Counter = Counter()
    for pair, m in spp.items():
        acc[(pair.alpha % 2, pair.omega)] += m
    return SppMod2(acc)


def seifert_from_mod2(m2: SppMod2, n: int) -> SeifertDecomposition:
    """Recover the Seifert decomposition from the mod-2 spectral pairs.

    Derivation of the decoding: a pair with residue ``rho in [0, 2)`` and
    weight entry ``omega`` determines

    * the eigenvalue exactly (``e(-frac(rho))``, eigenvalue 1 iff the residue
      is integral),
    * the weight ``p + q`` of the underlying Hodge class exactly
      (``omega + 1`` at eigenvalue 1, else ``omega``), and
    * the parity of the Hodge index ``p`` (from the integer part of the
      residue).

    For a fixed eigenvalue the units of one size-``r+1`` block occupy weights
    ``c + r, c + r - 2, ..., c - r`` with alternating ``p``-parity, so peeling
    from the top weight downwards is triangular: every unit at the current
    top weight opens a block whose sign is ``(-1)^q`` with
    ``q = weight - p``.  A negative or leftover residual means the multiset
    is not the projection of any weight-filtered structure.
    """
    units: Counter = Counter()
    labels: set[RootLabel] = set()
    for (rho, omega), m in m2.items():
        beta = rho % 1
        lam = RootLabel.from_exponent(-beta)
        labels.add(lam)
        int_part = int(rho - beta)  # 0 or 1
        if beta == 0:
            weight = omega + 1
            p_parity = (n - int_part) % 2
        else:
            weight = omega
            p_parity = (n - 1 - int_part) % 2
        units[(lam, weight, p_parity)] += m

    blocks: Counter = Counter()
    for lam in sorted(labels):
        c = n + (1 if lam.is_one else 0)
        remaining = {
            (w, par): m for (l, w, par), m in units.items() if l == lam and m
        }
        if not remaining:
            continue
        top = max(w for (w, _) in remaining)
        for w in range(top, c - 1, -1):
            for par in (0, 1):
                count = remaining.pop((w, par), 0)
                if count < 0:
                    raise AmbiguousResidue(
                        f"negative residual at eigenvalue {lam}, weight {w}"
                    )
                if not count:
                    continue
                size = w - c + 1
                q_parity = (w - par) % 2
                sign = 1 if q_parity == 0 else -1
                blocks[VariationBlock(lam, size, sign)] += count
                for step in range(1, size):
                    key = (w - 2 * step, (par - step) % 2)
                    remaining[key] = remaining.get(key, 0) - count
        if any(remaining.values()):
            raise AmbiguousResidue(
                f"unmatched below-center units at eigenvalue {lam}: {remaining}"
            )
    return SeifertDecomposition(blocks)


# -- symmetries ---------------------------------------------------------------


@dataclass(frozen=True)
class SymmetryReport:
    """Results of the two pair involutions and the spectrum reflection."""

    weight_involution: bool
    conjugate_involution: bool
    spectrum_symmetric: bool

    @property
    def all_hold(self) -> bool:
        return self.weight_involution and self.conjugate_involution and self.spectrum_symmetric


def check_spp_symmetry(spp: SppSet, n: int) -> SymmetryReport:
    """Check invariance of a final pair multiset under both involutions.

    First involution: ``(alpha, n + k) <-> (alpha + k, n - k)``.  Second:
    ``(alpha, n + k) <-> (n - 1 - alpha, n - k)``.  The spectrum itself must
    be symmetric about ``(n - 1) / 2``.
    """
    spp.require_final()
    image1: Counter = Counter()
    image2: Counter = Counter()
    for pair, m in spp.items():
        k = pair.omega - n
        if n - k < 0:
            # image weight would be negative; the involution cannot fix the set
            image1[None] += m
            image2[None] += m
            continue
        image1[SpectralPair(pair.alpha + k, n - k)] += m
        image2[SpectralPair(n - 1 - pair.alpha, n - k)] += m
    original = Counter(dict(spp.items()))
    spectrum = spp.spectrum()
    reflected = {n - 1 - a: m for a, m in spectrum.items()}
    return SymmetryReport(
        weight_involution=image1 == original,
        conjugate_involution=image2 == original,
        spectrum_symmetric=reflected == spectrum,
    )


# -- suspension identity -------------------------------------------------------


def suspended_spec(spec: StarPolynomialSpec) -> StarPolynomialSpec:
    """Top-form data of ``f + x^d`` in one more variable.

    The hypersurface at infinity of the suspension is the cyclic cover of the
    input, so its above-middle Hodge input is the sector sum of the input's
    cover data, and the new cover data is the double-cover lift of the input
    tables.
    """
    n, d = spec.n, spec.d
    new_locals = tuple(Join(m, BrieskornPham((d,))) for m in spec.locals)
    g = spec.global_data
    xinf_new: Counter = Counter()
    for _, sector in g.pn1_cover:
        for p, m in sector:
            xinf_new[p] += m
    lifted = lift_cover_sectors(g.xinf_as_pq(), g.cover_as_pq(), d)
    cover_new = {
        s: {p: m for (p, _), m in table.items()} for s, table in lifted.items() if table
    }
    return StarPolynomialSpec(
        n=n + 1,
        d=d,
        locals=new_locals,
        global_data=GlobalPositionData.create(n + 1, d, dict(xinf_new), cover_new),
    )


@dataclass(frozen=True)
class SuspensionCheck:
    """Both sides of the degree-d suspension identity for spectral pairs."""

    lhs: SppSet
    rhs: SppSet

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def suspension_identity_check(spec: StarPolynomialSpec) -> SuspensionCheck:
    """Verify that suspending the polynomial joins the pair multiset.

    The left side runs the whole pipeline on the suspended data; the right
    side joins the input's pairs with the degree-d suspension multiset.  For
    consistent input the two must agree exactly.
    """
    lhs = InfinityHodge.from_primitive(primitives_at_infinity(suspended_spec(spec))).spectral_pairs
    rhs = InfinityHodge.from_primitive(primitives_at_infinity(spec)).spectral_pairs.join(
        suspension_pairs(spec.d)
    )
    return SuspensionCheck(lhs=lhs, rhs=rhs)


# -- semicontinuity -------------------------------------------------------------


@dataclass(frozen=True)
class IntervalRow:
    """One interval of a semicontinuity report.

    ``kind`` is ``"degree-grid"`` for the guaranteed intervals
    ``(k/d, k/d + 1]``, or ``"open-closed"`` / ``"closed-open"`` for the
    informational sweeps over arbitrary endpoints.
    """

    kind: str
    lower: Fraction
    count_special: int
    count_deformed: int
    informational: bool

    @property
    def ok(self) -> bool:
        return self.count_deformed >= self.count_special


def _count_open_closed(spectrum: Mapping[Fraction, int], t: Fraction) -> int:
    return sum(m for a, m in spectrum.items() if t < a <= t + 1)


def _count_closed_open(spectrum: Mapping[Fraction, int], t: Fraction) -> int:
    return sum(m for a, m in spectrum.items() if t <= a < t + 1)


def semicontinuity_report(
    spp_special: SppSet, spp_deformed: SppSet, d: int
) -> list[IntervalRow]:
    """Compare spectral frequencies of a map against a fixed-degree deformation.

    For every integer ``k`` whose interval ``(k/d, k/d + 1]`` meets the
    supports, the deformed count must be at least the special one.  Rows for
    arbitrary real endpoints (both half-open conventions) are appended as
    informational: the counting functions are step functions whose values are
    all attained at the spectral numbers and their translates by -1, so those
    finitely many endpoints are exhaustive.
    """
    spp_special.require_final("special-fiber pairs")
    spp_deformed.require_final("deformation pairs")
    spec_f = spp_special.spectrum()
    spec_g = spp_deformed.spectrum()
    support = sorted(set(spec_f) | set(spec_g))
    rows: list[IntervalRow] = []
    if not support:
        return rows
    lo, hi = support[0], support[-1]
    for k in range(floor((lo - 1) * d), ceil(hi * d) + 1):
        t = Fraction(k, d)
        if t >= hi or t + 1 < lo:
            continue
        rows.append(
            IntervalRow(
                kind="degree-grid",
                lower=t,
                count_special=_count_open_closed(spec_f, t),
                count_deformed=_count_open_closed(spec_g, t),
                informational=False,
            )
        )
    breakpoints = sorted({a for a in support} | {a - 1 for a in support})
    for t in breakpoints:
        rows.append(
            IntervalRow(
                kind="open-closed",
                lower=t,
                count_special=_count_open_closed(spec_f, t),
                count_deformed=_count_open_closed(spec_g, t),
                informational=True,
            )
        )
        rows.append(
            IntervalRow(
                kind="closed-open",
                lower=t,
                count_special=_count_closed_open(spec_f, t),
                count_deformed=_count_closed_open(spec_g, t),
                informational=True,
            )
        )
    return rows
