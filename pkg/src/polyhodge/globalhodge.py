"""Hodge numbers of the hypersurface at infinity and of its cyclic cover.

The middle primitive cohomology of the hypersurface at infinity (degree ``d``
in projective ``n``-space, isolated singularities) and the Galois eigenspaces
of the degree-``d`` cyclic cover of projective space branched along it are
determined by

* the local spectral data of the singular points,
* the Jacobian-ring dimensions of a smooth hypersurface of the same degree,
* and two position-dependent inputs which cannot be derived from local data:
  the pure Hodge numbers of the cohomology one degree above the middle, for
  the hypersurface itself and for each Galois sector of the cover.

Both solvers run the same three-step cascade over weights: (a) weights at
most ``middle - 2`` come from eigenvalue-1 local primitives alone, (b) weight
``middle - 1`` subtracts the position-dependent input, (c) the top weight
balances the Jacobian dimension against the local Hodge grading.  A negative
entry anywhere means the supplied position data is impossible for the given
singularities.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InconsistentGlobalData, ValidationError
from .jconstants import jacobian_graded_dim
from .localmodels import (
    LocalSpectrum,
    galois_suspension,
    local_full_table,
    local_primitive_table,
)
from .roots import ONE
from .tables import HodgeTable, primitive_from_full, table_from_pairs

PQTable = dict[tuple[int, int], int]


def _normalize_counts(data: Mapping[int, int] | None, what: str) -> tuple[tuple[int, int], ...]:
    out = []
    for key, mult in sorted((data or {}).items()):
        if not isinstance(key, int) or not isinstance(mult, int):
            raise ValidationError(f"{what}: keys and multiplicities must be integers")
        if mult < 0:
            raise ValidationError(f"{what}: negative multiplicity {mult} at p={key}")
        if mult:
            out.append((key, mult))
    return tuple(out)


@dataclass(frozen=True)
class GlobalPositionData:
    """Position-dependent Hodge input for degree ``d`` in ``n``-space.

    ``pn_xinf`` lists ``p -> h^{p, n-p}`` of the primitive cohomology of the
    hypersurface at infinity one degree above the middle (pure of weight
    ``n``); ``pn1_cover`` does the same per Galois sector ``s`` for the cover,
    pure of weight ``n + 1``.  Purity is built into the representation;
    conjugation symmetry is validated: the reflection ``p -> n - p`` must fix
    ``pn_xinf`` and swap sector ``s`` with sector ``d - s``.
    """

    n: int
    d: int
    pn_xinf: tuple[tuple[int, int], ...] = ()
    pn1_cover: tuple[tuple[int, tuple[tuple[int, int], ...]], ...] = ()

    @classmethod
    def create(
        cls,
        n: int,
        d: int,
        pn_xinf: Mapping[int, int] | None = None,
        pn1_cover: Mapping[int, Mapping[int, int]] | None = None,
    ) -> "GlobalPositionData":
        xinf = _normalize_counts(pn_xinf, "pn_xinf")
        cover = tuple(
            (s, _normalize_counts(sector, f"pn1_cover[{s}]"))
            for s, sector in sorted((pn1_cover or {}).items())
            if sector
        )
        data = cls(n=n, d=d, pn_xinf=xinf, pn1_cover=cover)
        data._validate()
        return data

    def _validate(self) -> None:
        if self.n < 1 or self.d < 2:
            raise ValidationError(f"need n >= 1 and d >= 2, got n={self.n}, d={self.d}")
        xinf = dict(self.pn_xinf)
        for p, m in xinf.items():
            if xinf.get(self.n - p, 0) != m:
                raise ValidationError(
                    f"pn_xinf breaks conjugation symmetry at p={p} (p <-> {self.n - p})"
                )
        cover = {s: dict(sector) for s, sector in self.pn1_cover}
        for s, sector in cover.items():
            if not 0 < s < self.d:
                raise ValidationError(f"pn1_cover sector {s} outside 1..{self.d - 1}")
            mirror = cover.get(self.d - s, {})
            for p, m in sector.items():
                if mirror.get(self.n + 1 - p, 0) != m:
                    raise ValidationError(
                        f"pn1_cover breaks conjugation symmetry: sector {s} at p={p} "
                        f"vs sector {self.d - s} at p={self.n + 1 - p}"
                    )

    def xinf_h(self, p: int, q: int) -> int:
        """``h^{p,q}`` of the above-middle cohomology at infinity (pure weight n)."""
        if p + q != self.n:
            return 0
        return dict(self.pn_xinf).get(p, 0)

    def cover_h(self, s: int, p: int, q: int) -> int:
        """``h^{p,q}`` of cover sector ``s`` one degree above the middle."""
        if p + q != self.n + 1:
            return 0
        return dict(dict(self.pn1_cover).get(s, ())).get(p, 0)

    def xinf_as_pq(self) -> PQTable:
        return {(p, self.n - p): m for p, m in self.pn_xinf}

    def cover_as_pq(self) -> dict[int, PQTable]:
        return {
            s: {(p, self.n + 1 - p): m for p, m in sector}
            for s, sector in self.pn1_cover
        }

    @property
    def is_zero(self) -> bool:
        return not self.pn_xinf and not self.pn1_cover


def _set_entry(table: PQTable, i: int, j: int, value: int, context: str) -> None:
    if value < 0:
        raise InconsistentGlobalData(f"{context}: h^{{{i},{j}}} = {value} < 0")
    if value:
        table[(i, j)] = value


def hodge_infinity_hypersurface(
    local_specs: Sequence[LocalSpectrum],
    g: GlobalPositionData,
    n: int,
    d: int,
) -> PQTable:
    """Hodge numbers of the middle primitive cohomology at infinity.

    All weights are at most ``n - 1``; entries are returned as a sparse
    ``(i, j) -> h^{i,j}`` map.  Every germ must live in ``n`` variables.
    """
    if n < 2:
        raise ValidationError(f"the projective solvers need n >= 2, got n={n}")
    p1: Counter = Counter()
    grading: Counter = Counter()
    for spec in local_specs:
        if spec.variables != n:
            raise ValidationError(
                f"local germ in {spec.variables} variables; expected {n}"
            )
        for (lam, a, b), m in local_primitive_table(spec).items():
            if lam.is_one:
                p1[(a, b)] += m
        for idx, dim in local_full_table(spec).hodge_grading().items():
            grading[idx] += dim
    out: PQTable = {}
    # (a) weights n-k for k >= 3: pure local contribution
    for k in range(3, n + 1):
        for i in range(0, n - k + 1):
            _set_entry(out, i, n - k - i, p1[(k + i - 1, n - 1 - i)],
                       "infinity hypersurface, low-weight step (a)")
    # (b) weight n-2: local minus the above-middle position input
    for i in range(0, n - 1):
        v = p1[(i + 1, n - 1 - i)] - g.xinf_h(i + 1, n - 1 - i)
        _set_entry(out, i, n - 2 - i, v, "infinity hypersurface, sub-middle step (b)")
    # (c) top weight n-1: Jacobian dimension balanced against local data
    for i in range(0, n):
        v = (
            jacobian_graded_dim(n, d, i, 0)
            - grading[i]
            - sum(m for (a, b), m in p1.items() if b == n - 1 - i and a > i)
            + g.xinf_h(i, n - i)
            + g.xinf_h(i + 1, n - 1 - i)
        )
        _set_entry(out, i, n - 1 - i, v, "infinity hypersurface, top-weight step (c)")
    return out


def hodge_cover_sectors(
    local_specs: Sequence[LocalSpectrum],
    g: GlobalPositionData,
    n: int,
    d: int,
) -> dict[int, PQTable]:
    """Per-sector Hodge numbers of the middle cohomology of the cyclic cover.

    Sector ``s`` carries the Galois character ``e(s/d)``; its local terms come
    from sector ``s`` of the suspended germs (now in ``n + 1`` variables).
    """
    if n < 2:
        raise ValidationError(f"the projective solvers need n >= 2, got n={n}")
    sector_p1: dict[int, Counter] = {s: Counter() for s in range(1, d)}
    sector_grading: dict[int, Counter] = {s: Counter() for s in range(1, d)}
    for spec in local_specs:
        if spec.variables != n:
            raise ValidationError(
                f"local germ in {spec.variables} variables; expected {n}"
            )
        for s, pairs in galois_suspension(spec, d).items():
            full = table_from_pairs(pairs, n)
            for (lam, a, b), m in primitive_from_full(full).items():
                if lam.is_one:
                    sector_p1[s][(a, b)] += m
            for idx, dim in full.hodge_grading().items():
                sector_grading[s][idx] += dim
    out: dict[int, PQTable] = {}
    for s in range(1, d):
        p1 = sector_p1[s]
        grading = sector_grading[s]
        table: PQTable = {}
        for k in range(3, n + 2):
            for i in range(0, n + 1 - k + 1):
                _set_entry(table, i, n + 1 - k - i, p1[(k + i - 1, n - i)],
                           f"cover sector {s}, low-weight step (a)")
        for i in range(0, n):
            v = p1[(i + 1, n - i)] - g.cover_h(s, i + 1, n - i)
            _set_entry(table, i, n - 1 - i, v, f"cover sector {s}, sub-middle step (b)")
        for i in range(0, n + 1):
            v = (
                jacobian_graded_dim(n, d, n - i, s)
                - grading[i]
                - sum(m for (a, b), m in p1.items() if b == n - i and a > i)
                + g.cover_h(s, i, n + 1 - i)
                + g.cover_h(s, i + 1, n - i)
            )
            _set_entry(table, i, n - i, v, f"cover sector {s}, top-weight step (c)")
        out[s] = table
    return out


def lift_cover_sectors(
    base: Mapping[tuple[int, int], int],
    cover: Mapping[int, Mapping[tuple[int, int], int]],
    d: int,
) -> dict[int, PQTable]:
    """Hodge numbers of the next cyclic cover from the current level.

    Implements the double-cover lift: sector ``s`` of the new cover at
    ``(p+1, q+1)`` collects the base table at ``(p, q)`` plus, over
    ``0 < t < d`` with ``t + s != d``, sector ``(s + t) mod d`` of the current
    cover with the Hodge type stepped by the integer part of ``(s + t)/d``.
    Works at any cohomological level (pure or mixed inputs).
    """
    out: dict[int, PQTable] = {}
    for s in range(1, d):
        acc: Counter = Counter()
        for (p, q), m in base.items():
            acc[(p + 1, q + 1)] += m
        for t in range(1, d):
            if t + s == d:
                continue
            u = (s + t) % d
            stepped = s + t > d
            for (p, q), m in cover.get(u, {}).items():
                if stepped:
                    acc[(p, q + 1)] += m
                else:
                    acc[(p + 1, q)] += m
        out[s] = {k: v for k, v in sorted(acc.items()) if v}
    return out
