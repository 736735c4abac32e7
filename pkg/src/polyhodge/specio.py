"""Input documents: JSON schema, validation, and the shipped fixture corpus.

A document describes the top-degree form of one polynomial map.  Rationals
are written as strings ``"num/den"`` (or plain integers) so no value ever
passes through floating point.

Projective case (``n >= 2``)::

    {
      "n": 2, "d": 6,
      "singularities": [
        {"model": "brieskorn-pham", "exponents": [2, 3]},
        {"model": "quasihomogeneous", "weights": ["1/2", "1/3"]},
        {"model": "spectral-pairs", "variables": 2,
         "pairs": [["-1/6", 1, 1], ["1/6", 1, 1]]},
        {"model": "join", "left": {...}, "right": {...}}
      ],
      "global": {
        "pn_xinf": [[p, mult], ...],
        "pn1_cover": {"1": [[p, mult], ...], ...}
      }
    }

Plane-curve case (``n = 1``)::

    {"n": 1, "multiplicities": [2, 2]}
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib.resources import files
from pathlib import Path
from typing import Any, Union

from .curves import CurveSpec
from .errors import ParseError, PolyhodgeError, ValidationError
from .globalhodge import GlobalPositionData
from .infinity import StarPolynomialSpec
from .localmodels import BrieskornPham, ExplicitPairs, Join, LocalModel, Quasihomogeneous
from .spectra import SppSet

AnySpec = Union[CurveSpec, StarPolynomialSpec]

FIXTURE_NAMES = (
    "curve_example",
    "smooth_curve_d4",
    "single_line",
    "smooth_n2_d3",
    "zariski_i",
    "zariski_ii",
)


def _fail(path: str, message: str) -> ValidationError:
    return ValidationError(f"{path}: {message}")


def _parse_rational(value: Any, path: str) -> Fraction:
    if isinstance(value, bool):
        raise _fail(path, "expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise _fail(path, f"bad rational {value!r}: {exc}") from None
    raise _fail(path, f"expected a rational written as 'num/den', got {value!r}")


def _parse_int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise _fail(path, f"expected an integer, got {value!r}")
    return value


def _parse_model(obj: Any, path: str) -> LocalModel:
    if not isinstance(obj, dict):
        raise _fail(path, "expected an object with a 'model' field")
    kind = obj.get("model")
    try:
        if kind == "brieskorn-pham":
            exps = obj.get("exponents")
            if not isinstance(exps, list):
                raise _fail(f"{path}.exponents", "expected a list")
            return BrieskornPham(
                tuple(_parse_int(a, f"{path}.exponents[{i}]") for i, a in enumerate(exps))
            )
        if kind == "quasihomogeneous":
            ws = obj.get("weights")
            if not isinstance(ws, list):
                raise _fail(f"{path}.weights", "expected a list")
            return Quasihomogeneous(
                tuple(_parse_rational(w, f"{path}.weights[{i}]") for i, w in enumerate(ws))
            )
        if kind == "spectral-pairs":
            raw = obj.get("pairs")
            if not isinstance(raw, list):
                raise _fail(f"{path}.pairs", "expected a list")
            triples = []
            for i, entry in enumerate(raw):
                where = f"{path}.pairs[{i}]"
                if not isinstance(entry, list) or len(entry) not in (2, 3):
                    raise _fail(where, "expected [alpha, omega] or [alpha, omega, mult]")
                alpha = _parse_rational(entry[0], where)
                omega = _parse_int(entry[1], where)
                mult = _parse_int(entry[2], where) if len(entry) == 3 else 1
                triples.append((alpha, omega, mult))
            return ExplicitPairs(
                pairs=SppSet.from_pairs(triples),
                variables=_parse_int(obj.get("variables"), f"{path}.variables"),
            )
        if kind == "join":
            return Join(
                left=_parse_model(obj.get("left"), f"{path}.left"),
                right=_parse_model(obj.get("right"), f"{path}.right"),
            )
    except (ValueError, TypeError) as exc:
        raise _fail(path, str(exc)) from None
    raise _fail(f"{path}.model", f"unknown model kind {kind!r}")


def _parse_counts(raw: Any, path: str) -> dict[int, int]:
    if raw is None:
        return {}
    if not isinstance(raw, list):
        raise _fail(path, "expected a list of [p, mult] entries")
    out: dict[int, int] = {}
    for i, entry in enumerate(raw):
        where = f"{path}[{i}]"
        if not isinstance(entry, list) or len(entry) != 2:
            raise _fail(where, "expected [p, mult]")
        p = _parse_int(entry[0], where)
        mult = _parse_int(entry[1], where)
        if mult < 0:
            raise _fail(where, f"negative multiplicity {mult}")
        out[p] = out.get(p, 0) + mult
    return out


def parse_document(doc: Any) -> AnySpec:
    """Validate a parsed JSON document into a spec object."""
    if not isinstance(doc, dict):
        raise ValidationError("document root must be a JSON object")
    n = _parse_int(doc.get("n", 1), "n")
    if "multiplicities" in doc:
        if n != 1:
            raise _fail("multiplicities", "only valid with n = 1")
        raw = doc["multiplicities"]
        if not isinstance(raw, list):
            raise _fail("multiplicities", "expected a list of integers")
        mults = tuple(
            _parse_int(a, f"multiplicities[{i}]") for i, a in enumerate(raw)
        )
        spec = CurveSpec(mults)
        if "d" in doc and _parse_int(doc["d"], "d") != spec.d:
            raise _fail("d", f"degree {doc['d']} contradicts the multiplicity sum {spec.d}")
        return spec
    if n == 1:
        raise _fail("n", "n = 1 documents must supply 'multiplicities'")
    d = _parse_int(doc.get("d"), "d")
    raw_sings = doc.get("singularities", [])
    if not isinstance(raw_sings, list):
        raise _fail("singularities", "expected a list")
    models = tuple(
        _parse_model(obj, f"singularities[{i}]") for i, obj in enumerate(raw_sings)
    )
    raw_global = doc.get("global", {}) or {}
    if not isinstance(raw_global, dict):
        raise _fail("global", "expected an object")
    xinf = _parse_counts(raw_global.get("pn_xinf"), "global.pn_xinf")
    raw_cover = raw_global.get("pn1_cover", {}) or {}
    if not isinstance(raw_cover, dict):
        raise _fail("global.pn1_cover", "expected an object keyed by sector")
    cover: dict[int, dict[int, int]] = {}
    for key, value in raw_cover.items():
        try:
            s = int(key)
        except (TypeError, ValueError):
            raise _fail(f"global.pn1_cover.{key}", "sector keys must be integers") from None
        cover[s] = _parse_counts(value, f"global.pn1_cover.{key}")
    g = GlobalPositionData.create(n, d, xinf, cover)
    return StarPolynomialSpec(n=n, d=d, locals=models, global_data=g)


def load_document(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None


def parse_file(path: str | Path) -> AnySpec:
    return parse_document(load_document(path))


def fixture_path(name: str) -> Path:
    """Filesystem path of a shipped fixture (name without extension)."""
    if name not in FIXTURE_NAMES:
        raise PolyhodgeError(f"unknown fixture {name!r}; have {FIXTURE_NAMES}")
    return Path(str(files("polyhodge").joinpath("fixtures", f"{name}.json")))


def load_fixture(name: str) -> AnySpec:
    return parse_file(fixture_path(name))
