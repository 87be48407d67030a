"""Gabriel-Roiter measures as a totally ordered set.

A measure is a finite strictly increasing sequence of positive integers.  Two
different sets ``I`` and ``J`` compare as ``I < J`` when the smallest element of
their symmetric difference lies in ``J``.  For sorted sequences this means:
scan both until they first differ; the sequence holding the *smaller* entry at
that position is the *larger* measure, and a proper prefix is smaller than any
of its extensions.
"""

from __future__ import annotations

import enum
import functools
from typing import Iterable

from .errors import PreconditionError, SchemaError


class Order(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@functools.total_ordering
class GrMeasure:
    """Immutable strictly increasing tuple of positive ints, in the GR order."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[int] = ()):
        ent = tuple(int(x) for x in entries)
        prev = 0
        for x in ent:
            if x <= prev:
                raise PreconditionError(f"measure entries must be positive and strictly increasing: {ent}")
            prev = x
        object.__setattr__(self, "entries", ent)

    def __setattr__(self, name, value):
        raise AttributeError("GrMeasure is immutable")

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, idx):
        return self.entries[idx]

    def __hash__(self):
        return hash(self.entries)

    def __eq__(self, other):
        if not isinstance(other, GrMeasure):
            return NotImplemented
        return self.entries == other.entries

    def __lt__(self, other):
        if not isinstance(other, GrMeasure):
            return NotImplemented
        return compare(self, other) is Order.LESS

    def __repr__(self):
        return f"GrMeasure({self})"

    def __str__(self):
        return "{" + ",".join(str(x) for x in self.entries) + "}"

    @property
    def top(self) -> int:
        """Largest entry (0 for the empty measure)."""
        return self.entries[-1] if self.entries else 0

    def to_json(self) -> list[str]:
        return [str(x) for x in self.entries]

    @classmethod
    def from_json(cls, data) -> "GrMeasure":
        if not isinstance(data, list) or not all(isinstance(x, str) for x in data):
            raise SchemaError("measure JSON must be an array of decimal strings")
        try:
            return cls(int(x, 10) for x in data)
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc

    @classmethod
    def parse(cls, text: str) -> "GrMeasure":
        """Parse the brace form ``{1,4,7}``; rejects non-increasing input."""
        s = text.strip()
        if not (s.startswith("{") and s.endswith("}")):
            raise SchemaError(f"not a measure: {text!r}")
        body = s[1:-1].strip()
        if not body:
            return cls()
        try:
            return cls(int(part.strip(), 10) for part in body.split(","))
        except ValueError as exc:
            raise SchemaError(f"not a measure: {text!r}") from exc


def measure(*entries: int) -> GrMeasure:
    return GrMeasure(entries)


def compare(a: GrMeasure, b: GrMeasure) -> Order:
    for x, y in zip(a.entries, b.entries):
        if x != y:
            # the smaller entry is absent from the other sequence and is the
            # minimum of the symmetric difference
            return Order.GREATER if x < y else Order.LESS
    if len(a) == len(b):
        return Order.EQUAL
    return Order.LESS if len(a) < len(b) else Order.GREATER


def starts_with(whole: GrMeasure, head: GrMeasure) -> bool:
    """True iff ``head`` equals ``whole`` cut at ``max(head)``."""
    # entries are strictly increasing, so an equal prefix is exactly whole ∩ [1, max(head)]
    return whole.entries[: len(head)] == head.entries


def extend(base: GrMeasure, m: int) -> GrMeasure:
    if m <= base.top:
        raise PreconditionError(f"cannot extend {base} by {m}: must exceed {base.top}")
    return GrMeasure(base.entries + (m,))


def max_of(measures: Iterable[GrMeasure]) -> GrMeasure:
    best = None
    for m in measures:
        if best is None or best < m:
            best = m
    if best is None:
        raise PreconditionError("max_of needs at least one measure")
    return best
