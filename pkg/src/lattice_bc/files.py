"""Problem files: JSON vectors/spectral data, CSV fields/matrices.

JSON documents have the shape {"kind": ..., "values": ..., "meta": {...}}
with kind one of "potential", "control", "kernel", "spectral".  Vector
kinds store a flat list of numbers; spectral files store pairs
[lambda_k, rho_k].  Floats are emitted with 17 significant digits so
every double round-trips exactly and identical runs produce identical
bytes.  On load the payload is validated against the invariants of the
corresponding domain type.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field

import numpy as np

from .core import as_float_array
from .spectral import SpectralData

KINDS = ("potential", "control", "kernel", "spectral")

# slack for the unit-mass invariant of spectral files; file data is
# trusted only up to serialization noise, not recomputed
MASS_TOL = 1e-8


@dataclass(frozen=True)
class ProblemFile:
    """Parsed problem document: kind tag, payload array, metadata."""

    kind: str
    values: np.ndarray
    meta: dict = field(default_factory=dict)


def _format_float(x):
    if not np.isfinite(x):
        raise ValueError("cannot serialize non-finite number")
    return format(float(x), ".17g")


def dumps_json(obj, indent=0):
    """Deterministic JSON with 17-significant-digit floats.

    Handles the dict/list/str/number/bool/None subset these documents
    use; dict insertion order is preserved, nothing is sorted or
    localized, so equal inputs give byte-equal output.
    """
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        parts = [f"{inner}{json.dumps(str(k))}: {dumps_json(v, indent + 1)}"
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(parts) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        seq = list(obj)
        if not seq:
            return "[]"
        flat = all(isinstance(v, (bool, int, float, np.integer, np.floating))
                   for v in seq)
        rendered = [dumps_json(v, indent + 1) for v in seq]
        if flat:
            return "[" + ", ".join(rendered) + "]"
        return ("[\n" + ",\n".join(inner + s for s in rendered)
                + "\n" + pad + "]")
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if obj is None:
        return "null"
    raise ValueError(f"cannot serialize object of type {type(obj).__name__}")


def _validate_payload(kind, values):
    if kind == "spectral":
        arr = np.asarray(values, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] < 1:
            raise ValueError("spectral values must be [lambda, rho] pairs")
        if not np.all(np.isfinite(arr)):
            raise ValueError("spectral values contain non-finite entries")
        lam, rho = arr[:, 0], arr[:, 1]
        if np.any(np.diff(lam) <= 0.0):
            raise ValueError("eigenvalues must be strictly increasing")
        if np.any(rho <= 0.0):
            raise ValueError("norming constants must be positive")
        mass = float(np.sum(1.0 / rho))
        if abs(mass - 1.0) > MASS_TOL:
            raise ValueError(
                f"spectral weights must have unit mass (got {mass!r})")
        return arr
    arr = as_float_array(values, f"{kind} values")
    if arr.size < 1:
        raise ValueError(f"{kind} values must be nonempty")
    if kind == "kernel" and arr[0] != 1.0:
        raise ValueError("kernel must start with r_0 = 1")
    return arr


def parse_problem(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValueError("problem document must be a JSON object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if "values" not in doc:
        raise ValueError("problem document missing values")
    meta = doc.get("meta", {})
    if not isinstance(meta, dict):
        raise ValueError("meta must be an object")
    values = _validate_payload(kind, doc["values"])
    return ProblemFile(kind=kind, values=values, meta=meta)


def load_problem(path):
    """Read a problem document from a path, or stdin when path is '-'."""
    if path == "-":
        return parse_problem(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_problem(fh.read())


def problem_document(kind, values, meta=None):
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    return {"kind": kind, "values": values, "meta": dict(meta or {})}


def spectral_problem(sd, meta=None):
    """Problem document for SpectralData: values are [lambda, rho] pairs."""
    if not isinstance(sd, SpectralData):
        raise ValueError("sd must be SpectralData")
    pairs = [[float(l), float(r)]
             for l, r in zip(sd.eigenvalues, sd.norming)]
    base = {"size": sd.size}
    base.update(meta or {})
    return problem_document("spectral", pairs, base)


def spectral_from_problem(pf):
    if pf.kind != "spectral":
        raise ValueError("problem document is not spectral data")
    return SpectralData(eigenvalues=pf.values[:, 0], norming=pf.values[:, 1])


def write_text(text, path=None):
    """Write to a path, or stdout when path is None or '-'."""
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
        if not text.endswith("\n"):
            fh.write("\n")


def field_csv(values, label="n"):
    """CSV for a 2-D table: header of time indices, one row per site."""
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 2:
        raise ValueError("field table must be 2-D")
    lines = [",".join([label] + [str(t) for t in range(arr.shape[1])])]
    for n in range(arr.shape[0]):
        lines.append(",".join([str(n)]
                              + [_format_float(x) for x in arr[n]]))
    return "\n".join(lines) + "\n"


def matrix_csv(values):
    """CSV for a connecting matrix: 1-based row/column labels."""
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 2:
        raise ValueError("matrix must be 2-D")
    lines = [",".join(["i"] + [str(j + 1) for j in range(arr.shape[1])])]
    for i in range(arr.shape[0]):
        lines.append(",".join([str(i + 1)]
                              + [_format_float(x) for x in arr[i]]))
    return "\n".join(lines) + "\n"
