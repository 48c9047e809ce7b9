"""Named diagrams, the two maximal-span families, and span realization.

The closed-form bracket formulas here are written straight from the
telescoping recursions they satisfy and share no code with the state-sum
engine, so they double as independent oracles for it.
"""

from __future__ import annotations

from .bracket import bracket_span
from .diagram import ChordDiagram
from .laurent import LaurentPoly

#: Small diagrams quoted throughout: C1 is the single loop, C2/C3 realize
#: spans 6 and 10, C4/C4prime realize 8 and 14 at d=4, and remark44 is the
#: example with mu-sum d+2 but span 12 < 16.
_NAMED: dict[str, tuple[tuple[int, int], ...]] = {
    "C1": ((1, 2),),
    "C2": ((1, 3), (2, 4)),
    "C3": ((1, 5), (2, 4), (6, 3)),
    "C4": ((1, 4), (2, 7), (3, 5), (6, 8)),
    "C4prime": ((1, 5), (2, 4), (3, 7), (6, 8)),
    "remark44": ((1, 8), (2, 5), (3, 6), (4, 7)),
}


def named_diagram(name: str) -> ChordDiagram:
    try:
        pairs = _NAMED[name]
    except KeyError:
        raise ValueError(
            f"unknown diagram {name!r}; choose from {sorted(_NAMED)}"
        ) from None
    return ChordDiagram(pairs)


def named_diagrams() -> dict[str, ChordDiagram]:
    return {name: ChordDiagram(pairs) for name, pairs in _NAMED.items()}


def family_odd(d: int) -> ChordDiagram:
    """The d-chord family {(i, i+d)}: all chords positive, span 4d for d >= 3."""
    if d < 1 or d % 2 == 0:
        raise ValueError(f"odd family needs odd d >= 1, got {d}")
    return ChordDiagram([(i, i + d) for i in range(1, d + 1)])


def family_even(d: int) -> ChordDiagram:
    """The d-chord family {(1,d),(d+1,2d)} + {(2d-i, i+1)}: span 4d."""
    if d < 4 or d % 2 == 1:
        raise ValueError(f"even family needs even d >= 4, got {d}")
    chords = [(1, d), (d + 1, 2 * d)]
    chords += [(2 * d - i, i + 1) for i in range(1, d - 1)]
    return ChordDiagram(chords)


def family_odd_bracket(d: int) -> LaurentPoly:
    """Closed form: sum_{i=1}^{d-1} (-1)^(i-1) A^(-3d-2+4i) - A^(d+2)."""
    if d < 1 or d % 2 == 0:
        raise ValueError(f"odd family needs odd d >= 1, got {d}")
    terms = {d + 2: -1}
    for i in range(1, d):
        terms[-3 * d - 2 + 4 * i] = 1 if i % 2 else -1
    return LaurentPoly(terms)


def family_even_bracket(d: int) -> LaurentPoly:
    """Closed form: A^(-3d+4) - A^(-3d+8)
    + 2 sum_{i=1}^{d-4} (-1)^(i-1) A^(-3d+8+4i) + A^(d-4) - A^d + A^(d+4)."""
    if d < 4 or d % 2 == 1:
        raise ValueError(f"even family needs even d >= 4, got {d}")
    terms = {
        -3 * d + 4: 1,
        -3 * d + 8: -1,
        d - 4: 1,
        d: -1,
        d + 4: 1,
    }
    for i in range(1, d - 3):
        terms[-3 * d + 8 + 4 * i] = 2 if i % 2 else -2
    return LaurentPoly(terms)


def _max_span_family(d: int) -> ChordDiagram:
    return family_odd(d) if d % 2 else family_even(d)


def realize_span(d: int, span: int) -> ChordDiagram | None:
    """A d-chord diagram of the requested bracket span, or None.

    Construction: stackings of C1 pad any smaller realization up to chord
    count; the families cover span 4d; C2 stacked on the (d-2)-family gives
    4d-2; the explicit d <= 4 diagrams cover the small cases.  None is
    returned for spans with no known realization: 2 and 4 (open in
    general), 8 at d <= 3, everything odd-indexed out of {0, 6, 8, ..., 4d}.
    """
    if d < 1:
        raise ValueError(f"chord count must be >= 1, got {d}")
    if span % 2:
        raise ValueError(f"bracket spans are even, got {span}")
    result = _realize(d, span)
    if result is None:
        return None
    actual = bracket_span(result)
    if actual != span or result.d != d:
        raise RuntimeError(
            f"realization for (d={d}, span={span}) produced d={result.d}, "
            f"span={actual}"
        )
    return result


def _realize(d: int, span: int) -> ChordDiagram | None:
    if span < 0 or span > 4 * d or span in (2, 4):
        return None
    if span == 0:
        out = named_diagram("C1")
        for _ in range(d - 1):
            out = out.stack(named_diagram("C1"))
        return out
    if d <= 3:
        table = {
            (2, 6): named_diagram("C2"),
            (3, 6): named_diagram("C1").stack(named_diagram("C2")),
            (3, 10): named_diagram("C3"),
            (3, 12): family_odd(3),
        }
        return table.get((d, span))
    if d == 4:
        if span == 8:
            return named_diagram("C4")
        if span == 14:
            return named_diagram("C4prime")
        if span == 16:
            return family_even(4)
        smaller = _realize(3, span)
        return None if smaller is None else named_diagram("C1").stack(smaller)
    if span == 4 * d:
        return _max_span_family(d)
    if span == 4 * d - 2:
        return named_diagram("C2").stack(_max_span_family(d - 2))
    smaller = _realize(d - 1, span)
    return None if smaller is None else named_diagram("C1").stack(smaller)
