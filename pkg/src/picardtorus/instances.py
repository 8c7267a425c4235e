"""JSON instance files and report documents.

Instance layout::

    {
      "label": "optional text",
      "field": {"minpoly": [a_0, ..., a_n], "root": {"re": "0", "im": "1"}},
      "g": 2,
      "tau": [[["0", "1"], ["0", "0"]], [["0", "0"], ["0", "1"]]]
    }

Each tau entry is the coordinate vector of the entry in the power basis of
the root of ``minpoly`` given by the hint; rationals are "p/q" strings.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from . import __version__, families
from .errors import InputError, ParseError
from .numberfield import DEFAULT_MAX_PRECISION, NumberField, field_new
from .torus import PeriodMatrix, period_matrix_new


@dataclass(frozen=True)
class InstanceFile:
    minpoly: tuple[int, ...]
    root: tuple[str, str]
    g: int
    tau: tuple[tuple[tuple[str, ...], ...], ...]
    label: str | None = None

    def to_json(self) -> dict:
        doc: dict[str, Any] = {}
        if self.label is not None:
            doc["label"] = self.label
        doc["field"] = {"minpoly": list(self.minpoly), "root": {"re": self.root[0], "im": self.root[1]}}
        doc["g"] = self.g
        doc["tau"] = [[list(e) for e in row] for row in self.tau]
        return doc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    def build(self, precision: int = 64, max_precision: int = DEFAULT_MAX_PRECISION) -> tuple[NumberField, PeriodMatrix]:
        K = field_new(list(self.minpoly), self.root, max_precision=max_precision)
        tau = [[K.from_input_coords(Fraction(c) for c in e) for e in row] for row in self.tau]
        return K, period_matrix_new(K, tau, precision, max_precision)


def _fraction_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def instance_from_period_matrix(P: PeriodMatrix, label: str | None = None) -> InstanceFile:
    K = P.field
    tau = tuple(
        tuple(tuple(_fraction_str(c) for c in K.to_input_coords(x)) for x in row) for row in P.tau
    )
    return InstanceFile(tuple(K.input_poly), K.root_hint, P.g, tau, label)


# --- parsing ----------------------------------------------------------------------

def _expect(cond: bool, msg: str, path: str) -> None:
    if not cond:
        raise ParseError(msg, path)


def _rational(x, path: str) -> str:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ParseError("rational must be a 'p/q' string or an integer", path)
    try:
        Fraction(str(x).strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not an exact rational: {x!r}", path) from None
    return str(x).strip()


def load_instance(text: str) -> InstanceFile:
    """Shape-check a JSON document into an InstanceFile (no field construction)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    _expect(isinstance(doc, dict), "document must be a JSON object", "$")
    label = doc.get("label")
    _expect(label is None or isinstance(label, str), "label must be a string", "$.label")
    fld = doc.get("field")
    _expect(isinstance(fld, dict), "missing field block", "$.field")
    poly = fld.get("minpoly")
    _expect(
        isinstance(poly, list) and len(poly) >= 2 and all(isinstance(a, int) and not isinstance(a, bool) for a in poly),
        "minpoly must be a list of at least two integers",
        "$.field.minpoly",
    )
    _expect(poly[-1] != 0, "leading coefficient must be nonzero", "$.field.minpoly")
    degree = len(poly) - 1
    root = fld.get("root")
    _expect(isinstance(root, dict) and "re" in root and "im" in root, "root needs re and im", "$.field.root")
    re_, im_ = (str(root[k]) for k in ("re", "im"))
    for k, v in (("re", re_), ("im", im_)):
        try:
            Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a decimal: {v!r}", f"$.field.root.{k}") from None
    g = doc.get("g")
    _expect(isinstance(g, int) and not isinstance(g, bool) and g >= 1, "g must be a positive integer", "$.g")
    tau = doc.get("tau")
    _expect(isinstance(tau, list) and len(tau) == g, f"tau must have {g} rows", "$.tau")
    rows = []
    for i, row in enumerate(tau):
        _expect(isinstance(row, list) and len(row) == g, f"row must have {g} entries", f"$.tau[{i}]")
        entries = []
        for j, e in enumerate(row):
            path = f"$.tau[{i}][{j}]"
            _expect(isinstance(e, list), "entry must be a coordinate list", path)
            _expect(len(e) == degree, f"entry has {len(e)} coordinates, field degree is {degree}", path)
            entries.append(tuple(_rational(c, f"{path}[{k}]") for k, c in enumerate(e)))
        rows.append(tuple(entries))
    return InstanceFile(tuple(poly), (re_, im_), g, tuple(rows), label)


def parse_instance(
    text: str, precision: int = 64, max_precision: int = DEFAULT_MAX_PRECISION
) -> tuple[NumberField, PeriodMatrix]:
    return load_instance(text).build(precision, max_precision)


# --- generators ---------------------------------------------------------------------

def generate_instance(kind: str, seed: int = 0, **params) -> InstanceFile:
    """Instance of a named family; deterministic for fixed parameters and seed.

    kinds: cm_power (d, g), noncm_cubic_power (g), cm_pair, rho_zero,
    random (field, g), transformed (base: InstanceFile).
    """
    kind = kind.replace("-", "_")
    if kind == "cm_power":
        d, g = int(params.get("d", -1)), int(params.get("g", 2))
        return instance_from_period_matrix(families.cm_power(d, g), f"cm_power(d={d}, g={g})")
    if kind == "noncm_cubic_power":
        g = int(params.get("g", 2))
        return instance_from_period_matrix(families.noncm_cubic_power(g), f"noncm_cubic_power(g={g})")
    if kind == "cm_pair":
        return instance_from_period_matrix(families.cm_pair(), "cm_pair")
    if kind == "rho_zero":
        return instance_from_period_matrix(families.rho_zero(), "rho_zero")
    if kind == "random":
        name, g = params.get("field", "gaussian"), int(params.get("g", 2))
        P = families.random_period_matrix(families.preset_field(name), g, seed)
        return instance_from_period_matrix(P, f"random(field={name}, g={g}, seed={seed})")
    if kind == "transformed":
        base = params.get("base")
        if base is None:
            raise InputError("transformed needs a base instance")
        _, P = base.build()
        Q, _ = families.transformed(P, seed)
        return instance_from_period_matrix(Q, f"transformed({base.label or 'base'}, seed={seed})")
    raise InputError(f"unknown instance kind {kind!r}")


# --- report documents -----------------------------------------------------------------

def report_document(payload: dict, input_text: str, precision: int) -> dict:
    return {
        "report": payload,
        "provenance": {
            "input_sha256": hashlib.sha256(input_text.encode()).hexdigest(),
            "tool_version": __version__,
            "precision_bits": precision,
        },
    }


def dumps_report(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
