"""Backward coverability for vector addition systems.

Markings are vectors of token counts, one per place; a transition fires
from any marking that dominates its consume vector and moves the marking
by produce - consume. backward_cover saturates the upward closed set of
markings that can reach a covering of the target, walking predecessor
steps from the target upward. The saturation always terminates: the
iterates form an ascending chain of upward closed sets of vectors, and
no such chain is strictly increasing forever.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

from .dickson import DimensionMismatch, NatVec, format_vec
from .dickson import leq as vec_leq
from .dickson import monus, join, parse_vec
from .upset import UpSet, dickson_upset


class SaturationLimit(RuntimeError):
    """Safety valve tripped; indicates a bug rather than a large input."""


class NetParseError(ValueError):
    """Malformed net file; carries the 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self) -> str:
        if self.line:
            return f"line {self.line}, column {self.column}: {self.message}"
        return self.message


@dataclass(frozen=True)
class Transition:
    name: str
    consume: NatVec
    produce: NatVec

    def __post_init__(self):
        if len(self.consume) != len(self.produce):
            raise DimensionMismatch(
                f"transition {self.name}: consume {format_vec(self.consume)} "
                f"and produce {format_vec(self.produce)} differ in dimension"
            )


@dataclass(frozen=True)
class Vas:
    places: int
    transitions: tuple[Transition, ...] = ()

    def __post_init__(self):
        if self.places < 1:
            raise ValueError("a net needs at least one place")
        object.__setattr__(self, "transitions", tuple(self.transitions))
        for t in self.transitions:
            if len(t.consume) != self.places:
                raise DimensionMismatch(
                    f"transition {t.name} has dimension {len(t.consume)}, "
                    f"net has {self.places} places"
                )


@dataclass(frozen=True)
class CoverQuery:
    net: Vas
    initial: NatVec
    target: NatVec

    def __post_init__(self):
        for label, v in (("initial", self.initial), ("target", self.target)):
            if len(v) != self.net.places:
                raise DimensionMismatch(
                    f"{label} marking {format_vec(v)} has dimension {len(v)}, "
                    f"net has {self.net.places} places"
                )


class CoverResult(NamedTuple):
    coverable: bool
    basis: UpSet
    iterations: int


def pre_step(x: UpSet, t: Transition) -> UpSet:
    """Minimal markings from which firing t lands in x.

    Firing t from v requires v >= consume and yields v + produce - consume.
    The least v whose successor dominates a generator g is
    join(monus(g, produce - consume), consume): monus undoes the firing
    effect without going negative, join restores enabledness.
    """
    delta = tuple(p - c for c, p in zip(t.consume, t.produce))
    return dickson_upset(join(monus(g, delta), t.consume) for g in x.gens)


def backward_cover(
    q: CoverQuery,
    max_iterations: int | None = None,
    max_basis: int = 1_000_000,
) -> CoverResult:
    """Decide whether the initial marking can cover the target.

    Saturates X0 = up(target), X_{k+1} = X_k joined with pre_step(X_k, t)
    for every transition, until the canonical representation stops
    changing. Returns as soon as the initial marking becomes a member;
    iterations counts the rounds that added something.
    """
    current = dickson_upset([q.target])
    iterations = 0
    while True:
        if current.member(q.initial):
            return CoverResult(True, current, iterations)
        if max_iterations is not None and iterations >= max_iterations:
            raise SaturationLimit(
                f"no fixpoint within {max_iterations} iterations"
            )
        nxt = current
        for t in q.net.transitions:
            nxt = nxt.union(pre_step(current, t))
        if len(nxt.gens) > max_basis:
            raise SaturationLimit(
                f"basis exceeded {max_basis} generators; "
                f"this should be unreachable and signals a bug"
            )
        if nxt == current:
            return CoverResult(False, current, iterations)
        current = nxt
        iterations += 1


def forward_cover_oracle(q: CoverQuery, bound: NatVec) -> bool:
    """BFS over markings dominated by bound; true iff one covers the target.

    Sound when it answers true (the witnessed path is real). A false
    answer is only conclusive relative to the bound: covering runs that
    leave the box are never seen.
    """
    if not vec_leq(q.initial, bound):
        raise ValueError(
            f"initial marking {format_vec(q.initial)} exceeds "
            f"oracle bound {format_vec(bound)}"
        )
    seen = {q.initial}
    frontier = [q.initial]
    while frontier:
        fresh: list[NatVec] = []
        for m in frontier:
            if vec_leq(q.target, m):
                return True
            for t in q.net.transitions:
                if not vec_leq(t.consume, m):
                    continue
                succ = tuple(
                    v - c + p for v, c, p in zip(m, t.consume, t.produce)
                )
                if vec_leq(succ, bound) and succ not in seen:
                    seen.add(succ)
                    fresh.append(succ)
        frontier = fresh
    return False


def _parse_vec_at(token: str, line: int, column: int) -> NatVec:
    try:
        return parse_vec(token)
    except ValueError as exc:
        raise NetParseError(str(exc), line, column) from None


def parse_net(text: str) -> CoverQuery:
    """Parse the line-oriented net format.

        places 2
        transition t1 consume (1,0) produce (0,1)
        initial (2,0)
        target (0,2)

    Blank lines and # comments are skipped. The places line must come
    first; transition lines may repeat; initial and target are required.
    """
    places: int | None = None
    transitions: list[Transition] = []
    initial: NatVec | None = None
    target: NatVec | None = None

    def check_dim(v: NatVec, line: int, column: int) -> NatVec:
        if places is not None and len(v) != places:
            raise NetParseError(
                f"vector {format_vec(v)} has dimension {len(v)}, "
                f"net has {places} places",
                line,
                column,
            )
        return v

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if not toks:
            continue
        head, head_col = toks[0]
        if head == "places":
            if places is not None:
                raise NetParseError("duplicate places line", lineno, head_col)
            if len(toks) != 2 or not toks[1][0].isdigit():
                raise NetParseError(
                    "expected: places <count>", lineno, head_col
                )
            places = int(toks[1][0])
            if places < 1:
                raise NetParseError(
                    "a net needs at least one place", lineno, toks[1][1]
                )
        elif head == "transition":
            if places is None:
                raise NetParseError(
                    "places must be declared before transitions",
                    lineno,
                    head_col,
                )
            if (
                len(toks) != 6
                or toks[2][0] != "consume"
                or toks[4][0] != "produce"
            ):
                raise NetParseError(
                    "expected: transition <name> consume <vec> produce <vec>",
                    lineno,
                    head_col,
                )
            consume = check_dim(
                _parse_vec_at(toks[3][0], lineno, toks[3][1]),
                lineno,
                toks[3][1],
            )
            produce = check_dim(
                _parse_vec_at(toks[5][0], lineno, toks[5][1]),
                lineno,
                toks[5][1],
            )
            transitions.append(Transition(toks[1][0], consume, produce))
        elif head in ("initial", "target"):
            if len(toks) != 2:
                raise NetParseError(
                    f"expected: {head} <vec>", lineno, head_col
                )
            v = check_dim(
                _parse_vec_at(toks[1][0], lineno, toks[1][1]),
                lineno,
                toks[1][1],
            )
            if head == "initial":
                if initial is not None:
                    raise NetParseError(
                        "duplicate initial line", lineno, head_col
                    )
                initial = v
            else:
                if target is not None:
                    raise NetParseError(
                        "duplicate target line", lineno, head_col
                    )
                target = v
        else:
            raise NetParseError(
                f"unknown directive {head!r}", lineno, head_col
            )

    if places is None:
        raise NetParseError("missing places line")
    if initial is None:
        raise NetParseError("missing initial line")
    if target is None:
        raise NetParseError("missing target line")
    return CoverQuery(Vas(places, tuple(transitions)), initial, target)
