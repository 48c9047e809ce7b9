"""Oriented linear chord diagrams.

A diagram with d chords is a set of d ordered pairs (i, j) whose entries
partition {1, ..., 2d}.  A chord (i, j) is positive when i < j and negative
otherwise.  Chords are stored sorted by their smaller endpoint, which gives
a canonical form: two diagrams are equal exactly when they have the same
chord set with the same orientations.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Iterator


class DiagramError(ValueError):
    """Invalid chord diagram data."""


class DuplicateLabel(DiagramError):
    def __init__(self, label: int, pair: tuple[int, int]):
        self.label = label
        self.pair = pair
        super().__init__(f"label {label} used more than once (in chord {pair})")


class LabelOutOfRange(DiagramError):
    def __init__(self, label: int, pair: tuple[int, int], limit: int):
        self.label = label
        self.pair = pair
        super().__init__(
            f"label {label} in chord {pair} outside 1..{limit}"
        )


class SelfPairedChord(DiagramError):
    def __init__(self, pair: tuple[int, int]):
        self.pair = pair
        super().__init__(f"chord {pair} pairs a label with itself")


class GaussWordError(DiagramError):
    """Malformed Gauss word."""


_GAUSS_TOKEN = re.compile(r"([+-]?)(\w+)$")
_PAIR_TEXT = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


class ChordDiagram:
    __slots__ = ("_chords",)

    def __init__(self, pairs: Iterable[tuple[int, int]] = ()):
        pairs = [(int(i), int(j)) for i, j in pairs]
        limit = 2 * len(pairs)
        seen: set[int] = set()
        for pair in pairs:
            i, j = pair
            if i == j:
                raise SelfPairedChord(pair)
            for label in pair:
                if not 1 <= label <= limit:
                    raise LabelOutOfRange(label, pair, limit)
                if label in seen:
                    raise DuplicateLabel(label, pair)
                seen.add(label)
        self._chords = tuple(sorted(pairs, key=min))

    @classmethod
    def _from_canonical(cls, chords: tuple[tuple[int, int], ...]) -> ChordDiagram:
        # Trusted fast path for enumeration; skips validation and sorting.
        obj = cls.__new__(cls)
        obj._chords = chords
        return obj

    @property
    def chords(self) -> tuple[tuple[int, int], ...]:
        return self._chords

    @property
    def d(self) -> int:
        """Number of chords."""
        return len(self._chords)

    def __len__(self) -> int:
        return len(self._chords)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._chords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChordDiagram):
            return NotImplemented
        return self._chords == other._chords

    def __hash__(self) -> int:
        return hash(self._chords)

    def __repr__(self) -> str:
        return f"ChordDiagram({list(self._chords)!r})"

    def writhe(self) -> int:
        """Positive chords minus negative chords."""
        pos = sum(1 for i, j in self._chords if i < j)
        return 2 * pos - len(self._chords)

    def stack(self, other: ChordDiagram) -> ChordDiagram:
        """Concatenate: this diagram followed by `other` shifted past it."""
        shift = 2 * self.d
        shifted = [(i + shift, j + shift) for i, j in other._chords]
        return ChordDiagram(list(self._chords) + shifted)

    def reverse(self) -> ChordDiagram:
        """Swap the orientation of every chord."""
        return ChordDiagram([(j, i) for i, j in self._chords])

    def insert_monogon(self, ell: int, positive: bool = True) -> ChordDiagram:
        """Insert a small loop chord on fresh labels after position ell.

        Labels <= ell are kept, labels > ell shift up by 2, and the new
        chord occupies (ell+1, ell+2), reversed when negative.
        """
        if not 0 <= ell <= 2 * self.d:
            raise DiagramError(f"insertion position {ell} outside 0..{2 * self.d}")
        shifted = [
            (i if i <= ell else i + 2, j if j <= ell else j + 2)
            for i, j in self._chords
        ]
        loop = (ell + 1, ell + 2) if positive else (ell + 2, ell + 1)
        return ChordDiagram(shifted + [loop])

    def insert_monogon_wrap(self, positive: bool = True) -> ChordDiagram:
        """Insert a loop chord spanning the whole diagram."""
        n = 2 * self.d + 2
        shifted = [(i + 1, j + 1) for i, j in self._chords]
        loop = (1, n) if positive else (n, 1)
        return ChordDiagram(shifted + [loop])

    def parity_condition(self) -> bool:
        """True when every chord joins an odd label to an even label."""
        return all((i + j) % 2 == 1 for i, j in self._chords)

    # -- text / JSON / Gauss-word formats ---------------------------------

    def to_text(self) -> str:
        if not self._chords:
            return "empty"
        return "".join(f"({i},{j})" for i, j in self._chords)

    @classmethod
    def from_text(cls, text: str) -> ChordDiagram:
        stripped = text.strip()
        if stripped == "empty" or stripped == "":
            return cls()
        pairs = [(int(i), int(j)) for i, j in _PAIR_TEXT.findall(stripped)]
        # Reject garbage between pairs.
        leftover = _PAIR_TEXT.sub("", stripped).replace(",", "").strip()
        if leftover or not pairs:
            raise DiagramError(f"cannot parse diagram text {text!r}")
        return cls(pairs)

    def to_json(self) -> str:
        return json.dumps({"chords": [[i, j] for i, j in self._chords]})

    @classmethod
    def from_json(cls, text: str) -> ChordDiagram:
        try:
            obj = json.loads(text)
            pairs = obj["chords"]
        except (json.JSONDecodeError, TypeError, KeyError) as exc:
            raise DiagramError(f"cannot parse diagram JSON: {exc}") from None
        return cls((int(i), int(j)) for i, j in pairs)

    @classmethod
    def from_gauss(cls, word: str | Iterable[str]) -> ChordDiagram:
        """Parse a Gauss word: each label twice, exactly one occurrence signed.

        A label seen at positions u < v yields chord (u, v) when its sign is
        '+' and (v, u) when '-'.  The sign may sit on either occurrence.
        """
        tokens = word.split() if isinstance(word, str) else list(word)
        if not tokens:
            return cls()
        occurrences: dict[str, list[int]] = {}
        signs: dict[str, str] = {}
        for pos, token in enumerate(tokens, start=1):
            m = _GAUSS_TOKEN.match(token)
            if not m:
                raise GaussWordError(f"bad token {token!r}")
            sign, label = m.groups()
            occurrences.setdefault(label, []).append(pos)
            if sign:
                if label in signs:
                    raise GaussWordError(f"label {label!r} signed twice")
                signs[label] = sign
        pairs = []
        for label, positions in occurrences.items():
            if len(positions) != 2:
                raise GaussWordError(
                    f"label {label!r} appears {len(positions)} times, expected 2"
                )
            if label not in signs:
                raise GaussWordError(f"label {label!r} has no sign")
            u, v = positions
            pairs.append((u, v) if signs[label] == "+" else (v, u))
        return cls(pairs)


EMPTY = ChordDiagram()
