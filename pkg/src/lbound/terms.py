"""Labelled additive terms shared by the prime-sum and bound assemblers.

Every O(·) of an asymptotic statement is carried as constant × shape with the
constant defaulting to 1.  Exact and envelope terms are never mixed in a
total without the caller asking for it.
"""
from dataclasses import dataclass, field
import math

EXACT = "exact"
ENVELOPE = "envelope"


@dataclass(frozen=True)
class Term:
    label: str
    ref: str
    value: float
    kind: str = EXACT
    shape: float = math.nan
    constant: float = 1.0

    def to_dict(self):
        out = {"label": self.label, "ref": self.ref, "value": self.value, "kind": self.kind}
        if self.kind == ENVELOPE:
            out["shape"] = self.shape
            out["constant"] = self.constant
        return out


def exact(label, ref, value):
    return Term(label, ref, float(value), EXACT)


def envelope(label, ref, shape, constants=None):
    """Envelope term; constants maps label → multiplier (default 1)."""
    c = 1.0 if constants is None else float(constants.get(label, constants.get("*", 1.0)))
    shape = float(shape)
    return Term(label, ref, c * shape, ENVELOPE, shape, c)


@dataclass(frozen=True)
class BoundTerm:
    """A bound of the form main + Σ exact terms + Σ envelopes."""

    main: float
    terms: tuple = ()
    case: str = ""
    notes: tuple = field(default_factory=tuple)

    @property
    def exact_total(self):
        return math.fsum([self.main] + [t.value for t in self.terms if t.kind == EXACT])

    @property
    def envelope_total(self):
        return math.fsum(t.value for t in self.terms if t.kind == ENVELOPE)

    @property
    def total(self):
        return self.exact_total + self.envelope_total

    def term(self, label):
        for t in self.terms:
            if t.label == label:
                return t
        raise KeyError(label)

    def to_dict(self):
        return {
            "main": self.main,
            "terms": [t.to_dict() for t in self.terms],
            "case": self.case,
            "exact_total": self.exact_total,
            "envelope_total": self.envelope_total,
            "total": self.total,
            "notes": list(self.notes),
        }
