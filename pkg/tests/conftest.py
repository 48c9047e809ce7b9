from __future__ import annotations

import random

import pytest

from curvebracket.bracket import State, splice_pairs
from curvebracket.diagram import ChordDiagram


def pytest_addoption(parser):
    parser.addoption(
        "--run-extended",
        action="store_true",
        default=False,
        help="run the long extended census checks (d=8, d=9)",
    )


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "extended: long-running census checks, off by default"
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-extended"):
        return
    skip = pytest.mark.skip(reason="needs --run-extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def random_diagram(rng: random.Random, d: int) -> ChordDiagram:
    """Uniformly random pairing of {1, ..., 2d} with random orientations."""
    labels = list(range(1, 2 * d + 1))
    rng.shuffle(labels)
    pairs = []
    for k in range(d):
        i, j = labels[2 * k], labels[2 * k + 1]
        pairs.append((i, j))
    return ChordDiagram(pairs)


def random_state(rng: random.Random, d: int) -> State:
    return State(rng.randrange(1 << d), d)


def dfs_component_count(diagram: ChordDiagram, state: State) -> int:
    """Independent orbit-count oracle: explicit depth-first search over the
    splice-pair graph, sharing no code with the union-find path."""
    n = 2 * diagram.d + 1
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for k, chord in enumerate(diagram.chords):
        for u, v in splice_pairs(chord, state.choice(k)):
            if u != v:
                adjacency[u].append(v)
                adjacency[v].append(u)
    seen = [False] * n
    components = 0
    for start in range(n):
        if seen[start]:
            continue
        components += 1
        stack = [start]
        seen[start] = True
        while stack:
            node = stack.pop()
            for neighbor in adjacency[node]:
                if not seen[neighbor]:
                    seen[neighbor] = True
                    stack.append(neighbor)
    return components
