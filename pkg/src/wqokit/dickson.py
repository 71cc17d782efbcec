"""Componentwise order on vectors of natural numbers.

Vectors are plain tuples of non-negative ints; the tuple length is the
dimension. Operations on two vectors require equal dimensions.
"""

from __future__ import annotations

NatVec = tuple[int, ...]
IntVec = tuple[int, ...]


class DimensionMismatch(ValueError):
    """Raised when two vectors of different dimensions are combined."""


def _require_same_dim(a, b) -> None:
    if len(a) != len(b):
        raise DimensionMismatch(
            f"dimension mismatch: {format_vec(a)} is {len(a)}-dimensional, "
            f"{format_vec(b)} is {len(b)}-dimensional"
        )


def leq(a: NatVec, b: NatVec) -> bool:
    """True iff every component of a is <= the matching component of b."""
    _require_same_dim(a, b)
    return all(x <= y for x, y in zip(a, b))


def join(a: NatVec, b: NatVec) -> NatVec:
    """Componentwise maximum: the least vector above both a and b."""
    _require_same_dim(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def monus(a: NatVec, d: IntVec) -> NatVec:
    """Truncated subtraction max(a - d, 0), componentwise; d may be signed."""
    _require_same_dim(a, d)
    return tuple(max(x - y, 0) for x, y in zip(a, d))


def parse_vec(text: str) -> NatVec:
    """Parse "(1,2,0)" into a vector of naturals."""
    stripped = text.strip()
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise ValueError(f"expected a parenthesized vector, got {text!r}")
    body = stripped[1:-1].strip()
    if not body:
        raise ValueError("a vector needs at least one component")
    parts = body.split(",")
    components = []
    for part in parts:
        item = part.strip()
        if not item.isdigit():
            raise ValueError(f"bad vector component {item!r} in {text!r}")
        components.append(int(item))
    return tuple(components)


def format_vec(v: NatVec) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"
