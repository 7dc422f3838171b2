"""Shared helpers for building tiny instances and graphs in tests."""

from __future__ import annotations

import itertools
import random

import pytest

from gfmatch.core import Instance, make_instance
from gfmatch.reductions import MulticoloredGraph


def inst(
    text: str,
    pattern: str,
    kind: str = "gfm",
    empty: bool = False,
    L: int | None = None,
    W: int | None = None,
    q: int = 0,
) -> Instance:
    return make_instance(
        text,
        pattern,
        kind=kind,
        empty_wildcards=empty,
        max_letter_len=L,
        max_wildcard_len=W,
        wildcards=q,
    )


def canonical_strings(max_len: int, alphabet: tuple[str, ...]) -> list[tuple[str, ...]]:
    """All strings up to max_len in first-occurrence normal form over the alphabet.

    Solvers treat letters as opaque tokens, so one representative per renaming
    class covers every behaviour.
    """
    out: list[tuple[str, ...]] = []

    def grow(prefix: list[str], distinct: int) -> None:
        if prefix:
            out.append(tuple(prefix))
        if len(prefix) == max_len:
            return
        for idx in range(min(distinct + 1, len(alphabet))):
            prefix.append(alphabet[idx])
            grow(prefix, max(distinct, idx + 1))
            prefix.pop()

    grow([], 0)
    return out


def random_graph(rng: random.Random, k: int, n: int, density: float = 0.5) -> MulticoloredGraph:
    parts = tuple(
        tuple(f"v{i}_{l}" for l in range(1, n + 1)) for i in range(1, k + 1)
    )
    edges = []
    for i, j in itertools.combinations(range(k), 2):
        for u in parts[i]:
            for w in parts[j]:
                if rng.random() < density:
                    edges.append((u, w))
    return MulticoloredGraph(parts, tuple(edges))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
