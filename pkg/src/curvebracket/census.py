"""Censuses of oriented linear chord diagrams by bracket span.

Enumeration is generator-based and deterministic: each chord is placed on
the smallest unused label, with the positive orientations (partners
ascending) before the negative ones, which yields the diagrams in
lexicographic order of their canonical forms.  Census operations fan the
enumeration out over the choices for the first chord and merge per-worker
counters by addition, so results do not depend on the worker count.

The pruned max-span pipeline stacks the two necessary conditions for
span 4d in cost order: generate only diagrams where every chord joins an
odd label to an even one (d! * 2^d candidates instead of (2d)!/d!), drop
those with mu(s_A) + mu(s_B) != d + 2 (two union-find passes), and run the
full state sum only on the survivors.  Full mode computes the span of
every diagram with no filters, which is what makes the full/pruned
agreement a real check of both pruning steps.
"""

from __future__ import annotations

import json
import multiprocessing
import os
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping

import numpy as np

from . import _statesum
from .bracket import bracket, mu_extremes
from .diagram import ChordDiagram

#: Enumeration and census caps.  Growth: (2d)!/d! diagrams for the full
#: enumeration, d! * 2^d for the parity-restricted one.
FULL_ENUM_MAX_D = 7
PARITY_ENUM_MAX_D = 12
SPAN_CENSUS_MAX_D = 7
MAX_SPAN_FULL_MAX_D = 6
MAX_SPAN_PRUNED_MAX_D = 9

_BATCH = 4096

Chords = tuple[tuple[int, int], ...]


def _complete_matchings(free: tuple[int, ...]) -> Iterator[Chords]:
    """All oriented matchings of the sorted label tuple `free`, in
    lexicographic order of the resulting chord tuples (positive chords on
    the smallest label sort before negative ones, so that block comes
    first)."""
    if not free:
        yield ()
        return
    m = free[0]
    firsts = [(m, p) for p in free[1:]] + [(p, m) for p in free[1:]]
    for first in firsts:
        rest = tuple(x for x in free[1:] if x != first[0] and x != first[1])
        for tail in _complete_matchings(rest):
            yield (first,) + tail


def _parity_matchings(odds: tuple[int, ...], evens: tuple[int, ...]) -> Iterator[Chords]:
    """All oriented matchings pairing each odd label with an even label."""
    if not odds:
        yield ()
        return
    m = odds[0]
    firsts = [(m, p) for p in evens] + [(p, m) for p in evens]
    for first in firsts:
        rest = tuple(x for x in evens if x != first[0] and x != first[1])
        for tail in _parity_matchings(odds[1:], rest):
            yield (first,) + tail


def enumerate_all(d: int) -> Iterator[ChordDiagram]:
    """Every d-chord diagram exactly once ((2d)!/d! of them)."""
    if not 0 <= d <= FULL_ENUM_MAX_D:
        raise ValueError(
            f"full enumeration supports 0 <= d <= {FULL_ENUM_MAX_D}, got {d}"
        )
    for chords in _complete_matchings(tuple(range(1, 2 * d + 1))):
        # The smallest free label anchors each chord, so the output is
        # already in canonical order.
        yield ChordDiagram._from_canonical(chords)


def enumerate_parity(d: int) -> Iterator[ChordDiagram]:
    """The d! * 2^d diagrams pairing odd labels with even labels."""
    if not 1 <= d <= PARITY_ENUM_MAX_D:
        raise ValueError(
            f"parity enumeration supports 1 <= d <= {PARITY_ENUM_MAX_D}, got {d}"
        )
    odds = tuple(range(1, 2 * d, 2))
    evens = tuple(range(2, 2 * d + 1, 2))
    for chords in _parity_matchings(odds, evens):
        yield ChordDiagram._from_canonical(tuple(sorted(chords, key=min)))


@dataclass(frozen=True)
class SpanCensus:
    chord_count: int
    #: span -> diagram count; the None key is the zero-bracket bucket.
    counts: Mapping[int | None, int]
    total: int
    mode: str = "full"

    def __post_init__(self) -> None:
        if sum(self.counts.values()) != self.total:
            raise ValueError("census counts do not sum to the stated total")

    def realizable_spans(self) -> set[int]:
        return {s for s in self.counts if s is not None}

    def undefined_count(self) -> int:
        return self.counts.get(None, 0)

    def to_json(self) -> str:
        ordered: dict[str, int] = {}
        for span in sorted(s for s in self.counts if s is not None):
            ordered[str(span)] = self.counts[span]
        if None in self.counts:
            ordered["undefined"] = self.counts[None]
        return json.dumps(
            {
                "d": self.chord_count,
                "total": self.total,
                "counts": ordered,
                "mode": self.mode,
            }
        )

    def to_text(self) -> str:
        lines = [f"d={self.chord_count} mode={self.mode} total={self.total}"]
        for span in sorted(s for s in self.counts if s is not None):
            lines.append(f"span {span}: {self.counts[span]}")
        if None in self.counts:
            lines.append(f"span undefined: {self.counts[None]}")
        return "\n".join(lines)


def _spans_of_chunk(chunk: list[Chords], d: int, require_mu_sum: int) -> np.ndarray:
    """Spans for a chunk of raw chord tuples; -1 marks a zero bracket and
    -2 a diagram dropped by the mu-sum filter."""
    if _statesum.HAVE_NUMBA:
        batch = np.array(chunk, np.int64)
        return _statesum.spans_for_batch(batch, len(chunk), d, require_mu_sum)
    out = np.empty(len(chunk), np.int64)
    for pos, chords in enumerate(chunk):
        diagram = ChordDiagram._from_canonical(chords)
        if require_mu_sum >= 0 and sum(mu_extremes(diagram)) != require_mu_sum:
            out[pos] = -2
            continue
        span = bracket(diagram, engine="python").span()
        out[pos] = -1 if span is None else span
    return out


def _verify_max_span_conditions(chords: Chords, d: int) -> None:
    # Re-check the two necessary conditions on every diagram that is about
    # to be counted as maximal; uses the pure-Python path, so it also
    # cross-checks the compiled kernel.
    diagram = ChordDiagram(chords)
    if not diagram.parity_condition():
        raise RuntimeError(
            f"max-span diagram {chords} violates the odd/even parity condition"
        )
    if sum(mu_extremes(diagram)) != d + 2:
        raise RuntimeError(
            f"max-span diagram {chords} violates mu(s_A)+mu(s_B) = d+2"
        )


def _census_task(args: tuple) -> Counter:
    kind, d, first, require_mu_sum, verify_max = args
    if kind == "full":
        free = tuple(x for x in range(1, 2 * d + 1) if x not in first)
        gen = _complete_matchings(free)
    else:
        odds = tuple(x for x in range(3, 2 * d, 2))
        evens = tuple(x for x in range(2, 2 * d + 1, 2) if x not in first)
        gen = _parity_matchings(odds, evens)
    counter: Counter = Counter()
    chunk: list[Chords] = []

    def flush() -> None:
        spans = _spans_of_chunk(chunk, d, require_mu_sum)
        values, repeats = np.unique(spans, return_counts=True)
        for value, repeat in zip(values, repeats):
            counter[int(value)] += int(repeat)
        if verify_max:
            for pos in np.nonzero(spans == 4 * d)[0]:
                _verify_max_span_conditions(chunk[pos], d)
        chunk.clear()

    for tail in gen:
        chunk.append((first,) + tail)
        if len(chunk) >= _BATCH:
            flush()
    if chunk:
        flush()
    return counter


def _first_chord_tasks(d: int, kind: str) -> list[tuple[int, int]]:
    partners = range(2, 2 * d + 1) if kind == "full" else range(2, 2 * d + 1, 2)
    tasks = []
    for partner in partners:
        tasks.append((1, partner))
        tasks.append((partner, 1))
    return tasks


def _resolve_workers(threads: int | None) -> int:
    if threads is None:
        return os.cpu_count() or 1
    if threads < 1:
        raise ValueError(f"thread count must be >= 1, got {threads}")
    return threads


def _merged_counts(
    d: int, kind: str, require_mu_sum: int, verify_max: bool, threads: int | None
) -> Counter:
    workers = _resolve_workers(threads)
    tasks = [
        (kind, d, first, require_mu_sum, verify_max)
        for first in _first_chord_tasks(d, kind)
    ]
    total: Counter = Counter()
    if workers == 1 or len(tasks) <= 1:
        for task in tasks:
            total.update(_census_task(task))
        return total
    _statesum.warm_up()
    methods = multiprocessing.get_all_start_methods()
    ctx = multiprocessing.get_context("fork" if "fork" in methods else None)
    with ctx.Pool(min(workers, len(tasks))) as pool:
        for result in pool.imap_unordered(_census_task, tasks):
            total.update(result)
    return total


def span_census(d: int, threads: int | None = None) -> SpanCensus:
    """Bracket-span histogram over every d-chord diagram."""
    if not 1 <= d <= SPAN_CENSUS_MAX_D:
        raise ValueError(
            f"span census supports 1 <= d <= {SPAN_CENSUS_MAX_D}, got {d}"
        )
    raw = _merged_counts(d, "full", -1, False, threads)
    counts: dict[int | None, int] = {}
    for key in sorted(raw):
        counts[None if key == -1 else key] = raw[key]
    return SpanCensus(d, counts, sum(raw.values()))


def realizable_spans(d: int, threads: int | None = None) -> set[int]:
    """The even integers attained as bracket spans by d-chord diagrams."""
    return span_census(d, threads).realizable_spans()


def count_max_span(d: int, mode: str = "full", threads: int | None = None) -> int:
    """Number of d-chord diagrams whose bracket span is exactly 4d."""
    if mode == "full":
        if not 2 <= d <= MAX_SPAN_FULL_MAX_D:
            raise ValueError(
                f"full max-span count supports 2 <= d <= {MAX_SPAN_FULL_MAX_D}, "
                f"got {d}"
            )
        counter = _merged_counts(d, "full", -1, True, threads)
    elif mode == "pruned":
        if not 2 <= d <= MAX_SPAN_PRUNED_MAX_D:
            raise ValueError(
                f"pruned max-span count supports 2 <= d <= "
                f"{MAX_SPAN_PRUNED_MAX_D}, got {d}"
            )
        counter = _merged_counts(d, "parity", d + 2, True, threads)
    else:
        raise ValueError(f"mode must be 'full' or 'pruned', got {mode!r}")
    return counter[4 * d]
