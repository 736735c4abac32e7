"""End-to-end analysis reports and the self-check property suite.

:func:`analyze` runs the full pipeline on a parsed spec and returns a
:class:`ReportDocument` that renders both as aligned text and as JSON.  The
JSON form is lossless: parsing it back yields an equal document, and the
row ordering is deterministic (eigenvalues ascending by their exponent in
[0, 1), then Hodge types lexicographically).

:func:`selfcheck` evaluates every internal consistency property the theory
guarantees for valid input — pair symmetries, conjugation, the suspension
identity, the twisted-suspension aggregate, the mod-2 Seifert round trip, the
two signature routes, and rank bookkeeping — and reports pass/fail per
property with counterexample data on failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curves import CurveSpec
from .errors import InconsistentGlobalData
from .infinity import InfinityHodge, StarPolynomialSpec, twist_aggregate_check
from .roots import RootLabel
from .seifert import (
    SeifertDecomposition,
    SymmetryReport,
    VariationBlock,
    check_spp_symmetry,
    equivariant_signature,
    seifert_decomposition,
    seifert_from_mod2,
    spp_mod2,
    suspension_identity_check,
)
from .spectra import SppSet
from .specio import AnySpec
from .tables import FULL, HodgeTable, PRIMITIVE


def _frac_str(x: Fraction) -> str:
    return str(x)


def _label_json(lam: RootLabel) -> dict:
    return {
        "label": _frac_str(lam.q),
        "value": str(lam),
        "negative_form": lam.neg_str(),
    }


def _table_rows(table: HodgeTable) -> list[dict]:
    return [
        {**_label_json(lam), "p": p, "q": q, "mult": m}
        for (lam, p, q), m in table.items()
    ]


def _table_from_rows(kind: str, level: int, rows: list[dict]) -> HodgeTable:
    entries = {}
    for row in rows:
        key = (RootLabel(Fraction(row["label"])), row["p"], row["q"])
        entries[key] = entries.get(key, 0) + row["mult"]
    return HodgeTable(kind, level, entries)


@dataclass(frozen=True)
class ReportDocument:
    """All invariants of one top form, ready for rendering."""

    input_kind: str  # "curve" or "projective"
    n: int
    d: int
    invariants: InfinityHodge
    spectral_pairs: SppSet
    seifert: SeifertDecomposition
    signatures: tuple[tuple[RootLabel, int], ...]
    symmetry: SymmetryReport

    # -- construction -----------------------------------------------------------

    @classmethod
    def from_spec(cls, spec: AnySpec) -> "ReportDocument":
        inv = InfinityHodge.compute(spec)
        spp = inv.spectral_pairs
        return cls(
            input_kind="curve" if isinstance(spec, CurveSpec) else "projective",
            n=spec.n,
            d=spec.d,
            invariants=inv,
            spectral_pairs=spp,
            seifert=seifert_decomposition(inv.primitive),
            signatures=tuple(sorted(equivariant_signature(inv.primitive).items())),
            symmetry=check_spp_symmetry(spp, spec.n),
        )

    # -- JSON round trip ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "input_kind": self.input_kind,
            "n": self.n,
            "d": self.d,
            "rank": self.invariants.rank,
            "max_jordan_size": self.invariants.max_jordan_size(),
            "primitive": _table_rows(self.invariants.primitive),
            "full": _table_rows(self.invariants.full),
            "jordan": [
                {**_label_json(lam), "size": size, "count": count}
                for (lam, size), count in self.invariants.jordan
            ],
            "spectral_pairs": [
                [_frac_str(pair.alpha), pair.omega, m]
                for pair, m in self.spectral_pairs.items()
            ],
            "spectrum": [
                [_frac_str(alpha), m]
                for alpha, m in self.spectral_pairs.spectrum().items()
            ],
            "seifert": [
                {**_label_json(b.eigenvalue), "size": b.size, "sign": b.sign, "count": c}
                for b, c in self.seifert.items()
            ],
            "signatures": [
                {**_label_json(lam), "sigma": v} for lam, v in self.signatures
            ],
            "symmetry": {
                "weight_involution": self.symmetry.weight_involution,
                "conjugate_involution": self.symmetry.conjugate_involution,
                "spectrum_symmetric": self.symmetry.spectrum_symmetric,
            },
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "ReportDocument":
        n = doc["n"]
        prim = _table_from_rows(PRIMITIVE, n, doc["primitive"])
        full = _table_from_rows(FULL, n, doc["full"])
        jordan = tuple(
            ((RootLabel(Fraction(row["label"])), row["size"]), row["count"])
            for row in doc["jordan"]
        )
        spp = SppSet.from_pairs(
            (Fraction(alpha), omega, m) for alpha, omega, m in doc["spectral_pairs"]
        )
        seifert = SeifertDecomposition(
            {
                VariationBlock(RootLabel(Fraction(row["label"])), row["size"], row["sign"]):
                row["count"]
                for row in doc["seifert"]
            }
        )
        signatures = tuple(
            (RootLabel(Fraction(row["label"])), row["sigma"]) for row in doc["signatures"]
        )
        sym = SymmetryReport(**doc["symmetry"])
        return cls(
            input_kind=doc["input_kind"],
            n=n,
            d=doc["d"],
            invariants=InfinityHodge(
                primitive=prim, full=full, jordan=jordan, rank=doc["rank"]
            ),
            spectral_pairs=spp,
            seifert=seifert,
            signatures=signatures,
            symmetry=sym,
        )

    # -- text rendering -----------------------------------------------------------

    def render_text(self) -> str:
        out: list[str] = []
        inv = self.invariants
        out.append(
            f"invariants at infinity  (kind={self.input_kind}, n={self.n}, "
            f"d={self.d}, rank={inv.rank})"
        )

        def table_section(title: str, table: HodgeTable) -> None:
            out.append("")
            out.append(f"-- {title} --")
            if not table:
                out.append("  (empty)")
                return
            rows = [
                (f"{lam} = {lam.neg_str()}" if not lam.is_one else "1", f"({p},{q})", str(m))
                for (lam, p, q), m in table.items()
            ]
            w0 = max(len(r[0]) for r in rows)
            w1 = max(len(r[1]) for r in rows)
            out.append(f"  {'eigenvalue':<{w0}}  {'type':<{w1}}  mult")
            for r in rows:
                out.append(f"  {r[0]:<{w0}}  {r[1]:<{w1}}  {r[2]}")

        table_section("primitive equivariant Hodge numbers", inv.primitive)
        table_section("full equivariant Hodge numbers", inv.full)

        out.append("")
        out.append(f"-- Jordan blocks of the monodromy (max size {inv.max_jordan_size()}) --")
        if not inv.jordan:
            out.append("  (empty)")
        for (lam, size), count in inv.jordan:
            out.append(f"  {count} block(s) of size {size} at {lam}")

        out.append("")
        out.append("-- spectral pairs --")
        for pair, m in self.spectral_pairs.items():
            out.append(f"  {pair} x {m}")
        spectrum = ", ".join(
            f"{alpha} x {m}" for alpha, m in self.spectral_pairs.spectrum().items()
        )
        out.append(f"  spectrum: {spectrum or '(empty)'}")

        out.append("")
        out.append("-- Seifert decomposition --")
        if not self.seifert:
            out.append("  (empty)")
        for block, count in self.seifert.items():
            out.append(f"  {count} x {block}")

        out.append("")
        out.append("-- equivariant signatures --")
        if not self.signatures:
            out.append("  (all zero)")
        for lam, v in self.signatures:
            out.append(f"  sigma({lam}) = {v:+d}")

        out.append("")
        out.append("-- symmetry checks --")
        out.append(f"  weight involution:    {self.symmetry.weight_involution}")
        out.append(f"  conjugate involution: {self.symmetry.conjugate_involution}")
        out.append(f"  spectrum reflection:  {self.symmetry.spectrum_symmetric}")
        return "\n".join(out) + "\n"


def analyze(spec: AnySpec) -> ReportDocument:
    """Run the whole pipeline on a validated spec."""
    return ReportDocument.from_spec(spec)


@dataclass(frozen=True)
class CheckRow:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.status == "fail"


def _verdict(name: str, ok: bool, detail_on_fail: str = "") -> CheckRow:
    return CheckRow(name, "pass" if ok else "fail", "" if ok else detail_on_fail)


def selfcheck(spec: AnySpec) -> list[CheckRow]:
    """Evaluate every guaranteed consistency property of one spec."""
    rows: list[CheckRow] = []
    try:
        inv = InfinityHodge.compute(spec)
    except InconsistentGlobalData as exc:
        return [CheckRow("pipeline consistency", "fail", str(exc))]
    rows.append(CheckRow("pipeline consistency", "pass"))
    spp = inv.spectral_pairs
    n = spec.n

    sym = check_spp_symmetry(spp, n)
    rows.append(
        _verdict(
            "spectral-pair symmetries",
            sym.all_hold,
            f"weight={sym.weight_involution} conjugate={sym.conjugate_involution} "
            f"spectrum={sym.spectrum_symmetric}",
        )
    )
    rows.append(
        _verdict(
            "conjugation symmetry of the full table",
            inv.full.is_conjugation_symmetric(),
            "h^{p,q} at some eigenvalue differs from h^{q,p} at its conjugate",
        )
    )

    if isinstance(spec, StarPolynomialSpec):
        check = suspension_identity_check(spec)
        rows.append(
            _verdict(
                "degree-d suspension identity",
                check.equal,
                f"difference: {(check.lhs - check.rhs).items()}",
            )
        )
        ok, mism = twist_aggregate_check(spec, inv.full)
        bad = [row for row in mism if row[3] != row[4]]
        rows.append(
            _verdict(
                "twisted-suspension aggregate",
                ok,
                f"mismatches (eigenvalue, p, q, grouped, twisted): {bad[:5]}",
            )
        )
    else:
        rows.append(CheckRow("degree-d suspension identity", "skipped", "not applicable for n = 1"))
        rows.append(CheckRow("twisted-suspension aggregate", "skipped", "not applicable for n = 1"))

    dec = seifert_decomposition(inv.primitive)
    roundtrip = seifert_from_mod2(spp_mod2(spp), n)
    rows.append(
        _verdict(
            "mod-2 Seifert round trip",
            roundtrip == dec,
            f"decoded {roundtrip!r} vs direct {dec!r}",
        )
    )
    sig_blocks = dec.signature()
    sig_closed = equivariant_signature(inv.primitive)
    rows.append(
        _verdict(
            "signature route consistency",
            sig_blocks == sig_closed,
            f"block route {sig_blocks} vs closed form {sig_closed}",
        )
    )

    if isinstance(spec, CurveSpec):
        mu_total = sum(a - 1 for a in spec.multiplicities)
    else:
        mu_total = sum(s.milnor_number for s in spec.local_spectra())
    expected = (spec.d - 1) ** (n + 1) - mu_total
    books_ok = (
        inv.rank == spp.total()
        and inv.rank == sum(size * count for (_, size), count in inv.jordan)
        and inv.rank == dec.total_rank()
        and inv.rank == expected
    )
    rows.append(
        _verdict(
            "rank bookkeeping",
            books_ok,
            f"rank={inv.rank} pairs={spp.total()} "
            f"jordan={sum(size * c for (_, size), c in inv.jordan)} "
            f"seifert={dec.total_rank()} degree-law={expected}",
        )
    )
    return rows


def render_selfcheck(rows: list[CheckRow]) -> str:
    width = max(len(r.name) for r in rows)
    lines = []
    for r in rows:
        line = f"  {r.name:<{width}}  {r.status.upper()}"
        if r.detail and r.status != "pass":
            line += f"  ({r.detail})"
        lines.append(line)
    verdict = "FAIL" if any(r.failed for r in rows) else "OK"
    return "\n".join(lines + [f"overall: {verdict}"]) + "\n"
