"""Rendering of report records as an aligned table, JSON, or CSV.

Table and CSV print floats with 9 significant digits.  JSON keeps full
double precision so that it re-parses to the exact report values.
"""
from __future__ import annotations

import csv
import enum
import io
import json
from typing import Mapping, Sequence

FORMATS = ("table", "json", "csv")

# energies are in units of 2 m c^2 (m = 1/2, c = 1); momenta in units of 2 m c
UNITS = {
    "alpha": "1", "beta": "1", "a": "1", "Z": "e", "lambda": "2mc", "n": "1",
    "coefficient": "(beta Z)^2", "alpha_max": "1", "c_n": "1", "c_n_sq": "1",
}
ENERGY_KEYS = {
    "leading", "thm1_upper", "err_envelope", "secular_value", "kinetic_apriori",
    "field_apriori", "e0", "p_phi_sq", "e_n", "rc_approx", "rc_spectral",
    "binding_gain_upper", "radiative_correction", "margin", "error",
    "e_field_closed", "e_field_quad", "dd_commutator_closed", "dd_commutator_quad",
    "cancellation", "leading_per_alpha",
}


def unit_of(key: str) -> str:
    if key in UNITS:
        return UNITS[key]
    if key in ENERGY_KEYS:
        return "2mc^2"
    return "1"


def fmt_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, enum.Enum):
        return str(value.value)
    if isinstance(value, float):
        return f"{value:.9g}"
    return str(value)


def _jsonable(value):
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, Mapping):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def render(payload: Mapping | Sequence[Mapping], fmt: str = "table") -> str:
    """Render one record (mapping) or a list of records with identical keys."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if fmt == "json":
        return json.dumps(_jsonable(payload), indent=2, allow_nan=False) + "\n"
    rows = [payload] if isinstance(payload, Mapping) else list(payload)
    if not rows:
        return ""
    keys = list(rows[0].keys())
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([f"{k} [{unit_of(k)}]" for k in keys])
        for row in rows:
            writer.writerow([fmt_value(row[k]) for k in keys])
        return buf.getvalue()
    if isinstance(payload, Mapping):
        width = max(len(k) for k in keys)
        return "".join(f"{k:<{width}}  {fmt_value(payload[k]) or '-'}\n" for k in keys)
    cells = [[fmt_value(row[k]) or "-" for k in keys] for row in rows]
    widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
    lines = ["  ".join(k.rjust(w) for k, w in zip(keys, widths)),
             "  ".join("-" * w for w in widths)]
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"
