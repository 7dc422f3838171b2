"""Complete solvers: brute-force search, substitution enumeration, anchored candidates, dispatch.

All solvers share one result convention: ``min_wildcards`` is the smallest
wildcard count over witnesses respecting the declared budget (``None`` when no
such witness exists) and ``matched`` is equivalent to ``min_wildcards`` being
present.  ``min_wildcards()`` lifts the budget to the pattern length, the
largest count any witness can use, and reports the unconstrained optimum.
"""

from __future__ import annotations

import itertools
from bisect import bisect_right
from collections import Counter, deque
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Iterator, Mapping

from . import dp
from .core import (
    GfmError,
    GPM,
    Instance,
    MatchWitness,
    TokenStr,
    measure_parameters,
)

DEFAULT_NODE_BUDGET = 50_000_000
DEFAULT_SUBSTITUTION_BUDGET = 5_000_000


class ResourceLimitError(GfmError):
    """The configured node/substitution budget was exhausted before an answer."""


class NotApplicableError(GfmError):
    """The chosen algorithm's preconditions do not hold for this instance."""


@dataclass
class SolveStats:
    algorithm: str = ""
    substitutions_tried: int = 0
    dp_calls: int = 0
    nodes: int = 0


@dataclass
class SolveResult:
    matched: bool
    witness: MatchWitness | None
    min_wildcards: int | None
    stats: SolveStats = field(default_factory=SolveStats)


def _pattern_letters(pattern: TokenStr) -> list[str]:
    seen: dict[str, None] = {}
    for tok in pattern:
        seen.setdefault(tok)
    return list(seen)


# ---------------------------------------------------------------------------
# brute force


def solve_bruteforce(instance: Instance, *, node_budget: int = DEFAULT_NODE_BUDGET) -> SolveResult:
    """Exhaustive backtracking over pattern positions; the reference oracle.

    At each position either the current image of the letter is checked against
    the next text segment (assigning a fresh image of every admissible length
    when the letter has none), or, budget permitting, the position is
    wildcarded with every admissible segment length.  The exploration runs as
    a shortest-path search over its states (position, text offset, images of
    letters still occurring, used images for the injective variant): wildcard
    steps cost one, other steps cost zero, so states are expanded in order of
    wildcards spent, every consistent assignment within the budget is reached,
    and nothing beyond the budget is ever expanded.  Runs of consecutive
    wildcards are searched in canonical form when no wildcard-length bound
    applies (the first absorbs the slack, followers take the minimum length);
    every witness normalizes to this form at equal cost.
    """
    t, p = instance.text, instance.pattern
    n, m = len(t), len(p)
    b = instance.bounds
    q = b.wildcard_budget
    L, W = b.max_letter_image_len, b.max_wildcard_image_len
    empty_ok = instance.variant.empty_wildcards_allowed
    injective = instance.variant.injective
    wlo = 0 if empty_ok else 1
    per_pos_min = 0 if (empty_ok and q > 0) else 1
    if L is None or (q > 0 and W is None):
        per_pos_max = None
    else:
        per_pos_max = max(L, W if q > 0 else 0)
    INF = float("inf")

    letters = _pattern_letters(p)
    last_occ = {c: i for i, c in enumerate(p)}
    # letters still occurring at or after position i, in first-occurrence order
    future: list[tuple[str, ...]] = [
        tuple(c for c in letters if last_occ[c] >= i) for i in range(m + 1)
    ]
    positions_of: dict[str, list[int]] = {c: [] for c in letters}
    for i, c in enumerate(p):
        positions_of[c].append(i)

    start_cache: dict[TokenStr, list[int]] = {}

    def starts_of(image: TokenStr) -> list[int]:
        cached = start_cache.get(image)
        if cached is None:
            li = len(image)
            cached = [a for a in range(n - li + 1) if t[a : a + li] == image]
            start_cache[image] = cached
        return cached

    def last_start(image: TokenStr) -> int:
        starts = starts_of(image)
        return starts[-1] if starts else -1

    def supported(letter: str, image: TokenStr, i: int, j: int) -> bool:
        # remaining occurrences beyond the wildcard budget must find the image
        # at fresh (non-overlapping) starts in the rest of the text
        remaining = len(positions_of[letter]) - bisect_right(positions_of[letter], i) - q
        if remaining <= 0:
            return True
        li = len(image)
        cur = j
        found = 0
        for a in starts_of(image):
            if a >= cur:
                found += 1
                if found >= remaining:
                    return True
                cur = a + li
        return False

    # admissible suffix bound: wildcards needed from (i, j) under the current
    # assignment context, with unassigned letters free to match any segment of
    # length 1..L independently per occurrence.  Tables are cached per context
    # restricted to letters occurring more than once (singles stay free, which
    # only relaxes further); relaxing never exceeds the cost of any real
    # completion, so the bound is admissible.
    multi = frozenset(c for c in letters if len(positions_of[c]) > 1)
    bound_tables: dict[tuple, list[list[float]]] = {}

    def bound_table(cur: Mapping[str, TokenStr]) -> list[list[float]]:
        ctx = tuple(sorted((c, img) for c, img in cur.items() if img is not None and c in multi))
        table = bound_tables.get(ctx)
        if table is not None:
            return table
        table = _suffix_bound_table(dict(ctx))
        if len(bound_tables) < 4096:
            bound_tables[ctx] = table
        return table

    def _suffix_bound_table(cur: Mapping[str, TokenStr]) -> list[list[float]]:
        table = [[0.0] * (n + 1) for _ in range(m + 1)]
        row = table[m]
        for j in range(n):
            row[j] = INF
        for i in range(m - 1, -1, -1):
            row = table[i]
            nxt = table[i + 1]
            suffix_min = [INF] * (n + 2)
            for j in range(n, -1, -1):
                suffix_min[j] = min(nxt[j], suffix_min[j + 1])
            image = cur.get(p[i])
            for j in range(n + 1):
                best = INF
                if image is not None:
                    li = len(image)
                    if j + li <= n and t[j : j + li] == image:
                        best = nxt[j + li]
                else:
                    hi = n - j if L is None else min(L, n - j)
                    for ln in range(1, hi + 1):
                        if nxt[j + ln] < best:
                            best = nxt[j + ln]
                if q > 0:
                    if W is None:
                        wild = suffix_min[j + wlo] + 1 if j + wlo <= n else INF
                    else:
                        wild = INF
                        for wl in range(wlo, min(W, n - j) + 1):
                            if nxt[j + wl] + 1 < wild:
                                wild = nxt[j + wl] + 1
                    if wild < best:
                        best = wild
                row[j] = best
        return table

    rels: list[tuple] = []
    rel_ids: dict[tuple, int] = {}
    lives: list[frozenset] = []
    live_ids: dict[frozenset, int] = {}

    def rel_id(rel: tuple) -> int:
        rid = rel_ids.get(rel)
        if rid is None:
            rid = len(rels)
            rel_ids[rel] = rid
            rels.append(rel)
        return rid

    def live_id(live: frozenset) -> int:
        lid = live_ids.get(live)
        if lid is None:
            lid = len(lives)
            live_ids[live] = lid
            lives.append(live)
        return lid

    start_rel = tuple(None for _ in future[0])
    start_key = (0, rel_id(start_rel), live_id(frozenset()) if injective else 0, False)
    dist: dict[tuple, int] = {start_key: 0}
    pred: dict[tuple, tuple | None] = {start_key: None}
    done: set[tuple] = set()
    queue: deque[tuple] = deque([start_key])
    nodes = 0
    goal: tuple | None = None

    def push(parent: tuple, d: int, i2: int, j2: int, cur: dict, live: frozenset,
             pw: bool, cost: int, tag: tuple, bt: list[list[float]]) -> None:
        nd = d + cost
        if nd + bt[i2][j2] > q:
            return
        if n - j2 < (m - i2) * per_pos_min:
            return
        if per_pos_max is not None and n - j2 > (m - i2) * per_pos_max:
            return
        rel = tuple(cur.get(c) for c in future[i2])
        if injective:
            live2 = frozenset(x for x in live if last_start(x) >= j2)
            key = (i2 * (n + 1) + j2, rel_id(rel), live_id(live2), pw)
        else:
            key = (i2 * (n + 1) + j2, rel_id(rel), 0, pw)
        old = dist.get(key)
        if old is not None and old <= nd:
            return
        dist[key] = nd
        pred[key] = (parent, tag)
        if cost == 0:
            queue.appendleft(key)
        else:
            queue.append(key)

    while queue:
        key = queue.popleft()
        if key in done:
            continue
        done.add(key)
        d = dist[key]
        if d > q:
            break
        cell, rid, lid, pw = key
        i, j = divmod(cell, n + 1)
        if i == m:
            if j == n:
                goal = key
                break
            continue
        nodes += 1
        if nodes > node_budget:
            raise ResourceLimitError(f"node budget of {node_budget} exhausted")
        rel = rels[rid]
        cur = dict(zip(future[i], rel))
        live = lives[lid] if injective else frozenset()
        bt = bound_table(cur)
        if d + bt[i][j] > q:
            continue
        if q == 0:
            lo = hi2 = 0.0
            for idx in range(i, m):
                image = cur.get(p[idx])
                if image is not None:
                    lo += len(image)
                    hi2 += len(image)
                else:
                    lo += 1
                    hi2 += L if L is not None else INF
            if j + lo > n or j + hi2 < n:
                continue
        letter = p[i]
        image = cur.get(letter)
        cap = (n - j) - (m - i - 1) * per_pos_min
        if image is not None:
            li = len(image)
            if li <= cap and t[j : j + li] == image:
                push(key, d, i + 1, j + li, cur, live, False, 0, ("match",), bt)
        elif cap >= 1:
            hi = cap if L is None else min(L, cap)
            for ln in range(1, hi + 1):
                cand = t[j : j + ln]
                if injective and cand in live:
                    continue
                if not supported(letter, cand, i, j + ln):
                    continue
                cur[letter] = cand
                push(key, d, i + 1, j + ln, cur, live | {cand} if injective else live,
                     False, 0, ("assign", letter, cand), bt)
                del cur[letter]
        if q > 0:
            if W is None:
                hi = wlo if pw else cap
            else:
                hi = min(W, cap)
            for wl in range(wlo, hi + 1):
                # a wildcard reproducing an available match is dominated by the match
                if image is not None and wl == len(image) and t[j : j + wl] == image:
                    continue
                push(key, d, i + 1, j + wl, cur, live, True, 1, ("wild", t[j : j + wl]), bt)

    stats = SolveStats(algorithm="brute", nodes=nodes)
    if goal is None:
        return SolveResult(False, None, None, stats)
    substitution: dict[str, TokenStr] = {}
    wildcards: dict[int, TokenStr] = {}
    key = goal
    while pred[key] is not None:
        parent, tag = pred[key]
        parent_i = parent[0] // (n + 1)
        if tag[0] == "assign":
            substitution[tag[1]] = tag[2]
        elif tag[0] == "wild":
            wildcards[parent_i + 1] = tag[1]
        key = parent
    witness = MatchWitness(substitution, wildcards)
    return SolveResult(True, witness, dist[goal], stats)


# ---------------------------------------------------------------------------
# relaxed lower bound shared by the substitution searches


def relaxed_min_wildcards(
    instance: Instance,
    assigned: Mapping[str, TokenStr],
    dropped: frozenset[str] = frozenset(),
) -> float:
    """Lower bound on wildcards over all completions of a partial substitution.

    Letters outside ``assigned`` and ``dropped`` are relaxed to match any
    segment of length 1..L independently per occurrence; dropped letters can
    only be wildcarded.  Relaxing only ever removes constraints, so the value
    never exceeds the true minimum of any completion.
    """
    t, p = instance.text, instance.pattern
    n, m = len(t), len(p)
    b = instance.bounds
    L, W = b.max_letter_image_len, b.max_wildcard_image_len
    wlo = 0 if instance.variant.empty_wildcards_allowed else 1
    INF = float("inf")
    prev: list[float] = [0.0] + [INF] * n
    for i in range(1, m + 1):
        letter = p[i - 1]
        image = assigned.get(letter)
        free = image is None and letter not in dropped
        row: list[float] = [INF] * (n + 1)
        running = INF  # min of prev[0..j-wlo], for the unbounded wildcard scan
        for j in range(n + 1):
            if W is None:
                if j - wlo >= 0 and prev[j - wlo] < running:
                    running = prev[j - wlo]
                best = running + 1
            else:
                best = INF
                for k in range(wlo, min(W, j) + 1):
                    v = prev[j - k] + 1
                    if v < best:
                        best = v
            if image is not None:
                li = len(image)
                if 0 < li <= j and prev[j - li] < best and t[j - li : j] == image:
                    best = prev[j - li]
            elif free:
                hi = j if L is None else min(L, j)
                for ln in range(1, hi + 1):
                    if prev[j - ln] < best:
                        best = prev[j - ln]
            row[j] = best
        prev = row
    return prev[n]


# ---------------------------------------------------------------------------
# substitution enumeration


def _all_images(instance: Instance) -> list[TokenStr]:
    # Length-then-lexicographic in declared alphabet order.
    L = instance.bounds.max_letter_image_len
    toks = instance.sigma_t.tokens
    images: list[TokenStr] = []
    for ln in range(1, (L or 0) + 1):
        images.extend(itertools.product(toks, repeat=ln))
    return images


def _droppable_domains(letters: list[str], pattern: TokenStr, q: int) -> Iterator[list[str]]:
    """Domains obtained by dropping letters whose every occurrence fits in the budget.

    A dropped letter receives no image; all its occurrences must be wildcarded.
    The full domain comes first, then drops in increasing subset size.
    """
    occ = Counter(pattern)
    droppable = [c for c in letters if occ[c] <= q]
    for size in range(len(droppable) + 1):
        for subset in itertools.combinations(droppable, size):
            if sum(occ[c] for c in subset) > q:
                continue
            dropped = set(subset)
            yield [c for c in letters if c not in dropped]


def solve_enum(
    instance: Instance,
    *,
    substitution_budget: int = DEFAULT_SUBSTITUTION_BUDGET,
    bound_prune: bool = True,
) -> SolveResult:
    """Try every substitution over the letters occurring in the pattern.

    Images range over all strings of length 1..max_letter_len over the text
    alphabet.  For the injective variant non-injective substitutions are
    skipped, and letters whose occurrences all fit in the wildcard budget may
    be dropped from the domain instead of receiving an image.  Partial
    assignments whose relaxed lower bound already exceeds the budget are
    pruned; the relaxation never cuts a substitution that could still match.
    """
    b = instance.bounds
    if b.max_letter_image_len is None:
        raise NotApplicableError("enumeration requires a bound on letter image length")
    letters = _pattern_letters(instance.pattern)
    images = _all_images(instance)
    q = b.wildcard_budget
    stats = SolveStats(algorithm="enum")
    best: tuple[int, MatchWitness] | None = None

    if instance.variant.injective:
        domains: Iterable[list[str]] = _droppable_domains(letters, instance.pattern, q)
    else:
        domains = [letters]

    for domain in domains:
        assignment: dict[str, TokenStr] = {}
        used: set[TokenStr] = set()
        dropped = frozenset(c for c in letters if c not in domain)
        if bound_prune and dropped and relaxed_min_wildcards(instance, {}, dropped) > q:
            continue

        def assign(idx: int) -> bool:
            nonlocal best
            if idx == len(domain):
                stats.substitutions_tried += 1
                if stats.substitutions_tried > substitution_budget:
                    raise ResourceLimitError(
                        f"substitution budget of {substitution_budget} exhausted"
                    )
                stats.dp_calls += 1
                count, witness = dp.decide_with_function(instance, assignment)
                if count is not None and count <= q and (best is None or count < best[0]):
                    best = (count, witness)
                return best is not None and best[0] == 0
            letter = domain[idx]
            for image in images:
                if instance.variant.injective and image in used:
                    continue
                assignment[letter] = image
                used.add(image)
                prune = (
                    bound_prune
                    and idx + 1 < len(domain)
                    and relaxed_min_wildcards(instance, assignment, dropped) > q
                )
                stop = False if prune else assign(idx + 1)
                del assignment[letter]
                used.discard(image)
                if stop:
                    return True
            return False

        if assign(0):
            break

    if best is None:
        return SolveResult(False, None, None, stats)
    return SolveResult(True, best[1], best[0], stats)


# ---------------------------------------------------------------------------
# anchored candidate generation


@dataclass(frozen=True)
class CandidateSet:
    """Over-approximation of the (start, length) images a letter can take in any match."""

    letter: str
    candidates: frozenset[tuple[int, int]]


def candidate_substrings(instance: Instance, letter: str) -> CandidateSet:
    """Candidate images for ``letter`` by counting consumption before its first surviving occurrence.

    For each choice of the first non-wildcarded occurrence (among the first
    q+1), every letter occurring before it contributes per-occurrence image
    lengths in 1..L, minus wildcarded occurrences recorded in a per-letter
    deletion vector; wildcards contribute any total length in the admissible
    range.  Every reachable start offset is paired with every length 1..L.
    The (deletions, surviving-consumption) combinations are folded letter by
    letter, capping offsets at the text length, which keeps the enumeration
    polynomial in the text while emitting the same candidate set.
    """
    b = instance.bounds
    L, W, q = b.max_letter_image_len, b.max_wildcard_image_len, b.wildcard_budget
    if L is None:
        raise NotApplicableError("candidate generation requires a bound on letter image length")
    if W is None and q > 0:
        raise NotApplicableError("candidate generation requires a bound on wildcard image length")
    p, n = instance.pattern, len(instance.text)
    wlo = 0 if instance.variant.empty_wildcards_allowed else 1
    positions = [i for i, tok in enumerate(p) if tok == letter]
    starts: set[int] = set()
    for o in range(min(q, len(positions) - 1) + 1) if positions else range(0):
        prefix = p[: positions[o]]
        counts = Counter(prefix)
        # (wildcarded occurrences, surviving consumption) pairs reachable over
        # the prefix letters; the anchor letter's own deletion count is forced
        # to o, and bases beyond the text cannot yield in-range starts.
        reachable: set[tuple[int, int]] = {(0, 0)}
        for c, cnt in counts.items():
            if c == letter:
                reachable = {(d + o, base) for d, base in reachable if d + o <= q}
                continue
            step: set[tuple[int, int]] = set()
            for d, base in reachable:
                for dc in range(0, min(q - d, cnt) + 1):
                    rest = cnt - dc
                    if rest == 0:
                        step.add((d + dc, base))
                        continue
                    for lb in range(1, L + 1):
                        nb = base + rest * lb
                        if nb <= n:
                            step.add((d + dc, nb))
            reachable = step
        for d, base in reachable:
            hi = base + d * (W or 0)
            for s in range(base + d * wlo, min(hi, n) + 1):
                starts.add(s)
    cands = frozenset(
        (s, ln) for s in starts for ln in range(1, L + 1) if 0 <= s and s + ln <= n
    )
    return CandidateSet(letter, cands)


_DROP = object()


def solve_anchored(
    instance: Instance,
    *,
    substitution_budget: int = DEFAULT_SUBSTITUTION_BUDGET,
    bound_prune: bool = True,
) -> SolveResult:
    """Iterate the Cartesian product of per-letter candidate images, verifying each by the table.

    For the injective variant, letters whose occurrences all fit in the budget
    additionally get a "drop" branch (no image, every occurrence wildcarded),
    and combinations with repeated images are skipped.  Partial combinations
    are pruned by the relaxed lower bound, which never cuts a viable one.
    """
    b = instance.bounds
    q = b.wildcard_budget
    letters = _pattern_letters(instance.pattern)
    occ = Counter(instance.pattern)
    t = instance.text
    sets = {c: candidate_substrings(instance, c) for c in letters}

    def image_key(img: TokenStr) -> tuple[int, tuple[int, ...]]:
        return len(img), tuple(instance.sigma_t.id_of(tok) for tok in img)

    options: dict[str, list] = {}
    for c in letters:
        imgs = {t[s : s + ln] for s, ln in sets[c].candidates}
        opts: list = sorted(imgs, key=image_key)
        if instance.variant.injective and occ[c] <= q:
            opts.append(_DROP)
        options[c] = opts

    stats = SolveStats(algorithm="anchored")
    best: tuple[int, MatchWitness] | None = None
    assignment: dict[str, TokenStr] = {}
    dropped: set[str] = set()
    used: set[TokenStr] = set()

    def assign(idx: int, dropped_occ: int) -> bool:
        nonlocal best
        if idx == len(letters):
            stats.substitutions_tried += 1
            if stats.substitutions_tried > substitution_budget:
                raise ResourceLimitError(f"substitution budget of {substitution_budget} exhausted")
            stats.dp_calls += 1
            count, witness = dp.decide_with_function(instance, assignment)
            if count is not None and count <= q and (best is None or count < best[0]):
                best = (count, witness)
            return best is not None and best[0] == 0
        letter = letters[idx]
        for opt in options[letter]:
            if opt is _DROP:
                if dropped_occ + occ[letter] > q:
                    continue
                dropped.add(letter)
                prune = bound_prune and relaxed_min_wildcards(
                    instance, assignment, frozenset(dropped)
                ) > q
                stop = False if prune else assign(idx + 1, dropped_occ + occ[letter])
                dropped.discard(letter)
                if stop:
                    return True
                continue
            if instance.variant.injective and opt in used:
                continue
            assignment[letter] = opt
            used.add(opt)
            prune = (
                bound_prune
                and idx + 1 < len(letters)
                and relaxed_min_wildcards(instance, assignment, frozenset(dropped)) > q
            )
            stop = False if prune else assign(idx + 1, dropped_occ)
            del assignment[letter]
            used.discard(opt)
            if stop:
                return True
        return False

    assign(0, 0)
    if best is None:
        return SolveResult(False, None, None, stats)
    return SolveResult(True, best[1], best[0], stats)


# ---------------------------------------------------------------------------
# optimization and dispatch


_ALGORITHMS: dict[str, Callable[..., SolveResult]] = {}


def min_wildcards(instance: Instance, algo: str = "auto", **kwargs) -> SolveResult:
    """Smallest wildcard count over all witnesses, ignoring the declared budget.

    No witness wildcards more than ``len(pattern)`` positions, so the budget is
    lifted to that (within the bound via pattern occurrences times pattern
    alphabet size).  ``matched`` still reports the decision at the declared
    budget; ``min_wildcards`` and the witness describe the optimum.
    """
    lifted = replace(
        instance, bounds=replace(instance.bounds, wildcard_budget=len(instance.pattern))
    )
    result = _ALGORITHMS[algo](lifted, **kwargs)
    matched = (
        result.min_wildcards is not None
        and result.min_wildcards <= instance.bounds.wildcard_budget
    )
    return SolveResult(matched, result.witness, result.min_wildcards, result.stats)


def _enum_cost(instance: Instance) -> int | None:
    L = instance.bounds.max_letter_image_len
    if L is None:
        return None
    base = sum(len(instance.sigma_t) ** ln for ln in range(1, L + 1))
    return base ** len(_pattern_letters(instance.pattern))


def _anchored_ceiling(instance: Instance) -> int | None:
    b = instance.bounds
    L, W, q = b.max_letter_image_len, b.max_wildcard_image_len, b.wildcard_budget
    if L is None or (W is None and q > 0):
        return None
    nletters = len(_pattern_letters(instance.pattern))
    per_letter = (q + 1) * (L**nletters) * ((q + 1) ** nletters) * (q * (W or 0) + 1) * L
    return (per_letter + 1) ** nletters


def solve_auto(
    instance: Instance,
    *,
    enum_cost_limit: int = 500_000,
    anchored_cost_limit: int = 500_000,
    brute_text_limit: int = 14,
    node_budget: int = DEFAULT_NODE_BUDGET,
    substitution_budget: int = DEFAULT_SUBSTITUTION_BUDGET,
) -> SolveResult:
    """Measure parameters and dispatch to the cheapest applicable solver.

    Enumeration runs when the text alphabet and letter-image bound keep the
    substitution space small; the anchored solver when image, wildcard, and
    budget bounds keep candidate products small; brute force as a fallback for
    short texts (in particular whenever occurrence times size of the text
    alphabet is small, since that bounds the text length).
    """
    params = measure_parameters(instance)
    blockers: list[str] = []

    cost = _enum_cost(instance)
    if cost is None:
        blockers.append("enum: max letter image length is unbounded")
    elif cost > enum_cost_limit:
        blockers.append(f"enum: substitution space ~{cost} exceeds {enum_cost_limit}")
    else:
        return solve_enum(instance, substitution_budget=substitution_budget)

    ceiling = _anchored_ceiling(instance)
    if ceiling is None:
        blockers.append("anchored: letter or wildcard image length is unbounded")
    elif ceiling > anchored_cost_limit:
        blockers.append(f"anchored: candidate ceiling ~{ceiling} exceeds {anchored_cost_limit}")
    else:
        return solve_anchored(instance, substitution_budget=substitution_budget)

    if len(instance.text) <= brute_text_limit:
        return solve_bruteforce(instance, node_budget=node_budget)
    blockers.append(
        f"brute: text length {len(instance.text)} exceeds {brute_text_limit}"
        f" (occ_t*size_t = {params.occ_t * params.size_t})"
    )
    raise NotApplicableError("; ".join(blockers))


_ALGORITHMS.update(
    {
        "auto": solve_auto,
        "enum": solve_enum,
        "anchored": solve_anchored,
        "brute": solve_bruteforce,
    }
)


def solver(name: str) -> Callable[..., SolveResult]:
    try:
        return _ALGORITHMS[name]
    except KeyError:
        raise GfmError(f"unknown algorithm {name!r}") from None
