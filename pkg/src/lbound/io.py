"""Zero tables, descriptor files, and report serialization."""
from dataclasses import dataclass
import json
import math
from pathlib import Path

import numpy as np

from .errors import DescriptorError, IncompleteDataError, ParseError
from .lfunc import (
    CoefficientBounds,
    GammaFactor,
    SelbergDescriptor,
    TableOracle,
    ZetaOracle,
    builtin_descriptor,
    DirichletCharacter,
    DirichletOracle,
)


@dataclass(frozen=True)
class ZeroDataset:
    """Positive ordinates γ of zeros ½ + iγ, ascending; conjugates implied."""

    ordinates: np.ndarray
    height_max: float
    complete_to: float
    source_label: str = ""

    def __post_init__(self):
        g = np.asarray(self.ordinates, dtype=float)
        g.setflags(write=False)
        object.__setattr__(self, "ordinates", g)
        if g.size and (g[0] <= 0 or np.any(np.diff(g) <= 0)):
            raise ParseError("ordinates must be positive and strictly ascending")
        if self.complete_to > self.height_max:
            raise ParseError("complete_to exceeds the largest ordinate")

    def __len__(self):
        return int(self.ordinates.size)

    def up_to(self, T):
        """Dataset truncated to ordinates ≤ T (complete to min(T, complete_to))."""
        g = self.ordinates[self.ordinates <= T]
        top = float(g[-1]) if g.size else 0.0
        return ZeroDataset(g, top, min(self.complete_to, top), self.source_label)

    def require(self, height):
        if height > self.complete_to:
            raise IncompleteDataError(
                f"zero data complete only to {self.complete_to}, need {height}"
            )


def parse_zeros(lines, source_label="<memory>"):
    ords = []
    complete_to = None
    prev = -math.inf
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("complete_to="):
                try:
                    complete_to = float(body.split("=", 1)[1])
                except ValueError as exc:
                    raise ParseError("bad complete_to header", lineno) from exc
            continue
        try:
            g = float(line.split()[0])
        except ValueError as exc:
            raise ParseError(f"not a number: {line!r}", lineno) from exc
        if not math.isfinite(g) or g <= 0:
            raise ParseError(f"ordinate must be positive and finite: {line!r}", lineno)
        if g <= prev:
            raise ParseError(f"ordinates not ascending ({g} after {prev})", lineno)
        ords.append(g)
        prev = g
    if not ords:
        raise ParseError(f"no ordinates found in {source_label}")
    height_max = ords[-1]
    if complete_to is None:
        complete_to = height_max
    complete_to = min(complete_to, height_max)
    return ZeroDataset(np.array(ords), height_max, complete_to, source_label)


def load_zeros(path):
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        return parse_zeros(fh, str(path))


# ---------------------------------------------------------------------------
# descriptors


def _oracle_from_spec(spec, base_dir):
    if spec == "zeta":
        return ZetaOracle()
    if spec.startswith("dirichlet:"):
        _, q, k = spec.split(":")
        return DirichletOracle(DirichletCharacter(int(q), int(k)))
    if spec.startswith("table:"):
        p = Path(spec[len("table:"):])
        if not p.is_absolute():
            p = Path(base_dir) / p
        entries = {}
        with p.open(encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                parts = line.split()
                try:
                    n = int(parts[0])
                    re_ = float(parts[1])
                    im = float(parts[2]) if len(parts) > 2 else 0.0
                except (ValueError, IndexError) as exc:
                    raise ParseError(f"expected 'n re [im]', got {line!r}", lineno) from exc
                entries[n] = complex(re_, im)
        return TableOracle(entries, label=spec)
    raise DescriptorError(f"unknown oracle {spec!r}")


def descriptor_from_dict(data, base_dir="."):
    try:
        gammas = tuple(
            GammaFactor(g["lambda"], complex(g.get("mu_re", 0.0), g.get("mu_im", 0.0)))
            for g in data["gamma_factors"]
        )
        cb = data.get("coeff_bounds", {})
        return SelbergDescriptor(
            gamma_factors=gammas,
            Q=float(data["Q"]),
            omega=complex(data.get("omega_re", 1.0), data.get("omega_im", 0.0)),
            pole_order=int(data.get("pole_order", 0)),
            euler_order=data.get("euler_order"),
            oracle=_oracle_from_spec(data.get("oracle", "zeta"), base_dir),
            coeff_bounds=CoefficientBounds(
                C_E=float(cb.get("C_E", 1.0)), theta=float(cb.get("theta", 0.0))
            ),
            name=data.get("name", "L"),
        )
    except KeyError as exc:
        raise DescriptorError(f"missing descriptor key {exc}") from exc


def load_descriptor(path_or_name):
    """A builtin name ("zeta", "dirichlet:q:k") or a JSON descriptor file."""
    p = Path(path_or_name)
    if p.suffix == ".json" or p.exists():
        with p.open(encoding="utf-8") as fh:
            data = json.load(fh)
        return descriptor_from_dict(data, base_dir=p.parent)
    return builtin_descriptor(str(path_or_name))


DESCRIPTOR_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "L-function descriptor",
    "type": "object",
    "required": ["gamma_factors", "Q"],
    "properties": {
        "name": {"type": "string"},
        "gamma_factors": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["lambda"],
                "properties": {
                    "lambda": {"type": "number", "exclusiveMinimum": 0},
                    "mu_re": {"type": "number", "minimum": 0},
                    "mu_im": {"type": "number"},
                },
            },
        },
        "Q": {"type": "number", "exclusiveMinimum": 0},
        "omega_re": {"type": "number"},
        "omega_im": {"type": "number"},
        "pole_order": {"type": "integer", "minimum": 0},
        "euler_order": {"type": ["integer", "null"], "minimum": 1},
        "coeff_bounds": {
            "type": "object",
            "properties": {
                "C_E": {"type": "number", "exclusiveMinimum": 0},
                "theta": {"type": "number", "minimum": 0, "exclusiveMaximum": 0.5},
            },
        },
        "oracle": {"type": "string", "pattern": "^(zeta|dirichlet:[0-9]+:[0-9]+|table:.+)$"},
    },
}


# ---------------------------------------------------------------------------
# serialization


def _fmt(x):
    if isinstance(x, float):
        if math.isnan(x) or math.isinf(x):
            return str(x)
        return float(f"{x:.17g}")
    return x


def _normalize(obj):
    if isinstance(obj, dict):
        return {k: _normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_normalize(v) for v in obj]
    if isinstance(obj, (np.floating,)):
        return _fmt(float(obj))
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, complex):
        return {"re": _fmt(obj.real), "im": _fmt(obj.imag)}
    return _fmt(obj)


def dumps(obj):
    """Deterministic JSON: sorted keys, 17 significant digits."""
    return json.dumps(_normalize(obj), indent=2, sort_keys=True, allow_nan=True)


def write_csv(rows, fh):
    """Write a list of flat dicts as CSV with a header from the first row."""
    import csv

    if not rows:
        return
    writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: repr(float(v)) if isinstance(v, (float, np.floating)) else v for k, v in r.items()})


def read_csv(fh):
    import csv

    out = []
    for r in csv.DictReader(fh):
        row = {}
        for k, v in r.items():
            try:
                row[k] = float(v)
            except ValueError:
                row[k] = v
        out.append(row)
    return out
