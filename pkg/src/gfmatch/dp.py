"""Fixed-substitution dynamic program: Hamming similarity table and witness traceback.

Given an instance and a (possibly partial) substitution ``f``, ``g[i][j]`` is
the maximum number of non-wildcarded pattern positions over all ways of mapping
the first ``i`` pattern letters onto the first ``j`` text letters: the match
branch consumes exactly ``len(f[p_i])`` letters and requires the consumed
segment to equal the image, and the wildcard branch consumes any admissible
wildcard length.  Cells that admit no tiling hold ``None``.

Base cases: ``g[0][0] = 0`` and ``g[0][j] = None`` for ``j > 0`` (an empty
pattern cannot cover non-empty text); ``g[i][0]`` is feasible only when empty
wildcard images are allowed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import GPM, Instance, MatchWitness, TokenStr


@dataclass
class SimilarityTable:
    """(m+1) x (n+1) table of feasible similarity values (None marks infeasible cells)."""

    g: list[list[int | None]]
    m: int
    n: int
    ops: int  # elementary comparisons performed (wildcard scan steps + token compares)


def _wildcard_min(instance: Instance) -> int:
    return 0 if instance.variant.empty_wildcards_allowed else 1


def similarity(instance: Instance, f: Mapping[str, TokenStr]) -> SimilarityTable:
    """Fill the similarity table for substitution ``f`` (letters absent from ``f`` must be wildcarded)."""
    t, p = instance.text, instance.pattern
    m, n = len(p), len(t)
    lo = _wildcard_min(instance)
    W = instance.bounds.max_wildcard_image_len
    g: list[list[int | None]] = [[None] * (n + 1) for _ in range(m + 1)]
    g[0][0] = 0
    ops = 0
    for i in range(1, m + 1):
        image = f.get(p[i - 1])
        li = len(image) if image is not None else 0
        prev_row = g[i - 1]
        row = g[i]
        for j in range(n + 1):
            best: int | None = None
            if image is not None and 0 < li <= j:
                base = prev_row[j - li]
                if base is not None:
                    ops += li
                    if t[j - li : j] == image:
                        best = base + 1
            hi = j if W is None else min(W, j)
            for k in range(lo, hi + 1):
                ops += 1
                base = prev_row[j - k]
                if base is not None and (best is None or base > best):
                    best = base
            row[j] = best
    return SimilarityTable(g, m, n, ops)


def _injective(f: Mapping[str, TokenStr]) -> bool:
    images = list(f.values())
    return len(set(images)) == len(images)


def decide_with_function(
    instance: Instance, f: Mapping[str, TokenStr]
) -> tuple[int | None, MatchWitness | None]:
    """Minimum wildcards needed to match using ``f``, with a traceback witness.

    Returns ``(None, None)`` when no tiling exists, or — for the injective
    variant — when ``f`` itself is not injective (the query is rejected without
    running the table).  The decision at budget ``q`` is ``min_wildcards <= q``.
    The witness substitution is restricted to letters with at least one
    surviving (non-wildcarded) occurrence.
    """
    if instance.variant.kind == GPM and not _injective(f):
        return None, None
    table = similarity(instance, f)
    value = table.g[table.m][table.n]
    if value is None:
        return None, None
    witness = _traceback(instance, f, table)
    return table.m - value, witness


def _traceback(instance: Instance, f: Mapping[str, TokenStr], table: SimilarityTable) -> MatchWitness:
    # Ties prefer the match branch; among wildcard branches the smallest length.
    t, p = instance.text, instance.pattern
    lo = _wildcard_min(instance)
    W = instance.bounds.max_wildcard_image_len
    g = table.g
    wildcards: dict[int, TokenStr] = {}
    i, j = table.m, table.n
    while i > 0:
        value = g[i][j]
        image = f.get(p[i - 1])
        if image is not None and len(image) <= j:
            base = g[i - 1][j - len(image)]
            if base is not None and base + 1 == value and t[j - len(image) : j] == image:
                i, j = i - 1, j - len(image)
                continue
        hi = j if W is None else min(W, j)
        for k in range(lo, hi + 1):
            if g[i - 1][j - k] == value:
                wildcards[i] = t[j - k : j]
                i, j = i - 1, j - k
                break
        else:  # pragma: no cover - table construction guarantees a predecessor
            raise AssertionError("traceback failed to find a feasible predecessor")
    surviving = {
        p[pos - 1] for pos in range(1, table.m + 1) if pos not in wildcards
    }
    substitution = {c: f[c] for c in surviving}
    return MatchWitness(substitution, wildcards)
