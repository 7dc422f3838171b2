"""Independent reference implementations used to freeze expected values.

These deliberately reimplement the checked behaviour with a different
algorithm shape (top-down memoized recursion over suffixes) so they can serve
as oracles for the production table-based and search-based code paths.
"""

from __future__ import annotations

from functools import lru_cache

from gfmatch.core import Instance, TokenStr


def min_wildcards_with_function(instance: Instance, f: dict[str, TokenStr]) -> int | None:
    """Fewest wildcards needed to map the pattern onto the text using ``f``.

    Exhaustive top-down recursion; ``None`` when impossible, and for the
    injective variant when ``f`` itself repeats an image.
    """
    if instance.variant.injective:
        images = list(f.values())
        if len(set(images)) != len(images):
            return None
    t, p = instance.text, instance.pattern
    n, m = len(t), len(p)
    wlo = 0 if instance.variant.empty_wildcards_allowed else 1
    W = instance.bounds.max_wildcard_image_len

    @lru_cache(maxsize=None)
    def go(i: int, j: int) -> float:
        if i == m:
            return 0 if j == n else float("inf")
        best = float("inf")
        image = f.get(p[i])
        if image is not None and t[j : j + len(image)] == image and j + len(image) <= n:
            best = go(i + 1, j + len(image))
        hi = n - j if W is None else min(W, n - j)
        for wl in range(wlo, hi + 1):
            best = min(best, 1 + go(i + 1, j + wl))
        return best

    value = go(0, 0)
    return None if value == float("inf") else int(value)


def paper_style_similarity(instance: Instance, f: dict[str, TokenStr]) -> list[list[int | None]]:
    """Similarity table with the corrected base case and an unbounded wildcard scan.

    Used to cross-check the production table when the wildcard image length is
    unbounded and empty wildcard images are disallowed.
    """
    t, p = instance.text, instance.pattern
    n, m = len(t), len(p)
    g: list[list[int | None]] = [[None] * (n + 1) for _ in range(m + 1)]
    g[0][0] = 0
    for i in range(1, m + 1):
        image = f.get(p[i - 1])
        for j in range(n + 1):
            best = None
            for k in range(1, j + 1):
                prev = g[i - 1][j - k]
                if prev is None:
                    continue
                gain = 1 if image is not None and t[j - k : j] == image else 0
                cand = prev + gain
                if best is None or cand > best:
                    best = cand
            g[i][j] = best
    return g
