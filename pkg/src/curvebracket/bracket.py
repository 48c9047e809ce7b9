"""The Kauffman bracket state sum for oriented linear chord diagrams.

A state assigns a splice type A or B to every chord.  Each chord then
contributes a pair of transpositions on the letters {0, ..., 2d}; the
number of orbits Gamma_s of the group they generate equals the number of
connected components of the graph with those pairs as edges, which is what
we compute (pairs of the form (x, x) are identities and contribute no
edge).  The state term is A^(|A-splices| - |B-splices|) * delta^(Gamma_s - 1)
with delta = -A^2 - A^-2, and the bracket is the sum over all 2^d states.
"""

from __future__ import annotations

import math
from typing import Iterator, Literal

from . import _statesum
from .diagram import ChordDiagram
from .laurent import LaurentPoly, delta_pow

#: Hard cap on the number of chords for full state sums: the state count is
#: 2^d and 64-bit coefficients are only guaranteed up to here.
MAX_BRACKET_CHORDS = 20

Choice = Literal["A", "B"]
Engine = Literal["auto", "python", "compiled"]


class DiagramTooLargeError(ValueError):
    def __init__(self, d: int):
        super().__init__(
            f"diagram has {d} chords; full state sums are capped at "
            f"{MAX_BRACKET_CHORDS}"
        )


class UnionFind:
    """Disjoint sets over range(n), tracking the component count."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.components = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        self.components -= 1
        return True


class State:
    """A splice choice per chord, packed as a bitmask over the canonical
    chord order; a set bit means a B-splice."""

    __slots__ = ("mask", "length")

    def __init__(self, mask: int, length: int):
        if length < 0:
            raise ValueError("state length must be nonnegative")
        if not 0 <= mask < (1 << length):
            raise ValueError(f"mask {mask} does not fit in {length} bits")
        self.mask = mask
        self.length = length

    @classmethod
    def from_choices(cls, choices: str) -> State:
        mask = 0
        for k, letter in enumerate(choices):
            if letter == "B":
                mask |= 1 << k
            elif letter != "A":
                raise ValueError(f"bad splice letter {letter!r}")
        return cls(mask, len(choices))

    @classmethod
    def all_states(cls, length: int) -> Iterator[State]:
        for mask in range(1 << length):
            yield cls(mask, length)

    def choice(self, k: int) -> Choice:
        return "B" if (self.mask >> k) & 1 else "A"

    def count_b(self) -> int:
        return bin(self.mask).count("1")

    def count_a(self) -> int:
        return self.length - self.count_b()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, State):
            return NotImplemented
        return (self.mask, self.length) == (other.mask, other.length)

    def __hash__(self) -> int:
        return hash((self.mask, self.length))

    def __repr__(self) -> str:
        letters = "".join(self.choice(k) for k in range(self.length))
        return f"State({letters!r})"


def splice_pairs(
    chord: tuple[int, int], choice: Choice
) -> tuple[tuple[int, int], tuple[int, int]]:
    """The two unordered letter pairs a spliced chord contributes.

    A pair (x, x) is a fixed point and carries no edge.
    """
    i, j = chord
    positive = i < j
    if (choice == "A") == positive:
        return (i, j - 1), (i - 1, j)
    return (i, j), (i - 1, j - 1)


def _check_state(diagram: ChordDiagram, state: State) -> None:
    if state.length != diagram.d:
        raise ValueError(
            f"state of length {state.length} for a {diagram.d}-chord diagram"
        )


def gamma(diagram: ChordDiagram, state: State) -> int:
    """Number of orbits of the splice pairs acting on {0, ..., 2d}."""
    _check_state(diagram, state)
    uf = UnionFind(2 * diagram.d + 1)
    for k, chord in enumerate(diagram.chords):
        for u, v in splice_pairs(chord, state.choice(k)):
            if u != v:
                uf.union(u, v)
    return uf.components


def state_term(diagram: ChordDiagram, state: State) -> LaurentPoly:
    """A^(a-b) * delta^(Gamma_s - 1) for a single state."""
    _check_state(diagram, state)
    exponent = state.count_a() - state.count_b()
    return LaurentPoly.monomial(1, exponent) * delta_pow(gamma(diagram, state) - 1)


def bracket(diagram: ChordDiagram, engine: Engine = "auto") -> LaurentPoly:
    """The Kauffman bracket: the sum of state terms over all 2^d states.

    `engine="python"` forces the definitional per-state sum;
    `engine="compiled"` requires the numba kernel.  The default uses the
    kernel when available.  Both produce identical polynomials.
    """
    d = diagram.d
    if d > MAX_BRACKET_CHORDS:
        raise DiagramTooLargeError(d)
    if engine not in ("auto", "python", "compiled"):
        raise ValueError(f"unknown engine {engine!r}")
    if d == 0:
        return LaurentPoly.one()
    if engine == "compiled" and not _statesum.HAVE_NUMBA:
        raise RuntimeError("compiled engine requested but numba is unavailable")
    if engine != "python" and _statesum.HAVE_NUMBA:
        return LaurentPoly(_statesum.bracket_terms(diagram.chords))
    total = LaurentPoly.zero()
    for state in State.all_states(d):
        total = total + state_term(diagram, state)
    return total


def kauffman_jones(diagram: ChordDiagram, engine: Engine = "auto") -> LaurentPoly:
    """(-A)^(-3w) times the bracket, with w the writhe."""
    w = diagram.writhe()
    sign = -1 if w % 2 else 1
    return LaurentPoly.monomial(sign, -3 * w) * bracket(diagram, engine)


def mu_extremes(diagram: ChordDiagram) -> tuple[int, int]:
    """(Gamma of the all-A state, Gamma of the all-B state).

    Two union-find passes; never enumerates states, so it stays cheap for
    the census pruning filter.
    """
    d = diagram.d
    return (
        gamma(diagram, State(0, d)),
        gamma(diagram, State((1 << d) - 1, d)),
    )


def bracket_span(diagram: ChordDiagram, engine: Engine = "auto") -> int | None:
    """Span of the bracket; None when the bracket is zero."""
    return bracket(diagram, engine).span()


def min_self_intersection_lower_bound(diagram: ChordDiagram) -> int:
    """ceil(span/4): a lower bound for the minimum self-intersection number
    of any curve realizing the diagram, within its homotopy class."""
    span = bracket_span(diagram)
    if span is None:
        return 0
    return math.ceil(span / 4)
