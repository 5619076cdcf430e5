"""Instance files and machine-readable report documents.

An instance file is a small JSON document with keys ``n``, ``A`` and
optionally ``B`` (nested arrays of numbers, row-major). A missing ``B``
means the identity matrix. Matrices must be square of size n and
symmetric within 1e-9 relative; anything else is rejected at parse
time.

Report documents are plain JSON built exclusively from JSON-native
types. Reals are emitted in Python's shortest round-trip decimal form
(at most 17 significant digits), so ``parse_report(serialize_report(d))
== d`` holds exactly.
"""

from __future__ import annotations

import json

import numpy as np

from .certify import ClassCertificate
from .errors import DimensionError, ParseError
from .intervals import Interval, IntervalUnion
from .linalg import as_symmetric
from .localize import LocalizationReport
from .spectrum import Spectrum, SpectrumReport

__all__ = [
    "load_instance",
    "save_instance",
    "parse_report",
    "serialize_report",
    "certificate_obj",
    "interval_obj",
    "union_obj",
    "localization_obj",
    "spectrum_obj",
    "spectrum_report_obj",
]


def load_instance(path) -> tuple[np.ndarray, np.ndarray | None]:
    """Read (A, B) from an instance file; B is None when omitted."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read instance file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"instance file {path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("instance document must be a JSON object")
    if "n" not in doc or "A" not in doc:
        raise ParseError("instance document needs keys 'n' and 'A'")
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError(f"'n' must be a positive integer, got {n!r}")
    a = _matrix_from_doc(doc["A"], n, "A")
    b = None
    if doc.get("B") is not None:
        b = _matrix_from_doc(doc["B"], n, "B")
    return a, b


def _matrix_from_doc(rows, n: int, name: str) -> np.ndarray:
    try:
        arr = np.array(rows, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"matrix '{name}' is not a numeric array: {exc}") from exc
    if arr.shape != (n, n):
        raise DimensionError(f"matrix '{name}' must be {n}x{n}, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ParseError(f"matrix '{name}' has non-finite entries")
    try:
        return as_symmetric(arr, rtol=1e-9)
    except ValueError as exc:
        raise ParseError(f"matrix '{name}': {exc}") from exc


def save_instance(path, a, b=None) -> None:
    """Write an instance file; pass b=None for the identity default."""
    a = np.asarray(a, dtype=float)
    doc = {"n": int(a.shape[0]), "A": a.tolist()}
    if b is not None:
        doc["B"] = np.asarray(b, dtype=float).tolist()
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def serialize_report(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def parse_report(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"report is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("report document must be a JSON object")
    return doc


def interval_obj(iv: Interval | None):
    if iv is None:
        return None
    return [float(iv.lo), float(iv.hi)]


def union_obj(union: IntervalUnion | None):
    if union is None:
        return None
    return {
        "normalized": bool(union.normalized),
        "intervals": [interval_obj(iv) for iv in union.intervals],
    }


def certificate_obj(cert: ClassCertificate) -> dict:
    cop = cert.copositivity
    return {
        "is_sdd": bool(cert.is_sdd),
        "is_dd": bool(cert.is_dd),
        "is_pd": bool(cert.is_pd),
        "copositive": bool(cop.copositive),
        "copositivity_method": cop.method,
        "simplex_minimum": None if cop.minimum is None else float(cop.minimum),
        "witness": None if cop.witness is None else [float(v) for v in cop.witness],
    }


def localization_obj(loc: LocalizationReport) -> dict:
    return {
        "assumptions": {
            "b_pd": loc.assumptions.b_pd,
            "b_sdd": loc.assumptions.b_sdd,
            "a_copositive": loc.assumptions.a_copositive,
        },
        "k1_rows": [interval_obj(iv) for iv in loc.k1_rows],
        "k1": union_obj(loc.k1),
        "hull_k1": interval_obj(loc.hull_k1),
        "k1_cop_rows": None if loc.k1_cop_rows is None
        else [interval_obj(iv) for iv in loc.k1_cop_rows],
        "k1_cop": union_obj(loc.k1_cop),
        "k2_pairs": None if loc.k2_pairs is None
        else [[int(i), int(j)] for i, j in loc.k2_pairs],
        "k2_pair_intervals": None if loc.k2_pair_intervals is None
        else [interval_obj(iv) for iv in loc.k2_pair_intervals],
        "k2": union_obj(loc.k2),
        "hull_k2": interval_obj(loc.hull_k2),
        "gamma": interval_obj(loc.gamma),
    }


def spectrum_obj(spec: Spectrum) -> dict:
    return {
        "values": [float(v) for v in spec.values],
        "count": len(spec.values),
        "solutions": [
            {
                "lambda": float(sol.lam),
                "support": [int(i) for i in sol.support],
                "x": [float(v) for v in sol.x],
                "w": [float(v) for v in sol.w],
            }
            for sol in spec.solutions
        ],
        "degenerate_supports": [
            [int(i) for i in sup] for sup in spec.degenerate_supports
        ],
    }


def spectrum_report_obj(rep: SpectrumReport) -> dict:
    return {
        "localization": localization_obj(rep.localization),
        "spectrum": spectrum_obj(rep.spectrum),
        "verdicts": rep.all_verdicts(),
    }
