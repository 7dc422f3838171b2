"""Multicolored-clique graphs, padding normalization, and the five instance generators.

Each generator maps a normalized k-partite graph to a matching instance whose
budget/bounds/variant are chosen so that the instance matches exactly when the
graph has a clique with one vertex per part.  ``forward_witness`` builds the
canonical witness from a given clique; ``extract_clique`` reads a clique back
out of a witness in canonical form.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import dp
from .core import (
    Alphabet,
    Bounds,
    GFM,
    GfmError,
    Instance,
    MatchWitness,
    ParseError,
    ProblemVariant,
    TokenStr,
)

REDUCTION_KINDS = ("qmark", "mobile2", "occtmax", "qmarksize", "mobile1")


class DecodeFailure(GfmError):
    """Witness images are not in the canonical single-letter form the decoder reads."""


@dataclass(frozen=True)
class MulticoloredGraph:
    """k-partite graph: vertex names per part plus cross-part edges in input order."""

    parts: tuple[tuple[str, ...], ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        seen: dict[str, int] = {}
        for i, part in enumerate(self.parts, start=1):
            for name in part:
                if name in seen:
                    raise GfmError(f"duplicate vertex name {name!r}")
                seen[name] = i
        edge_keys = set()
        for u, v in self.edges:
            if u not in seen or v not in seen:
                raise GfmError(f"edge ({u!r}, {v!r}) uses an undeclared vertex")
            if seen[u] == seen[v]:
                raise GfmError(f"edge ({u!r}, {v!r}) lies inside part {seen[u]}")
            key = frozenset((u, v))
            if key in edge_keys:
                raise GfmError(f"duplicate edge ({u!r}, {v!r})")
            edge_keys.add(key)

    @property
    def k(self) -> int:
        return len(self.parts)

    def part_of(self, name: str) -> int:
        for i, part in enumerate(self.parts, start=1):
            if name in part:
                return i
        raise GfmError(f"unknown vertex {name!r}")

    def slot_of(self, name: str) -> int:
        return self.parts[self.part_of(name) - 1].index(name) + 1

    def pair_edges(self, i: int, j: int) -> list[tuple[str, str]]:
        """Edges between parts i < j, endpoints ordered (part i, part j), in input order."""
        out = []
        for u, v in self.edges:
            pu, pv = self.part_of(u), self.part_of(v)
            if (pu, pv) == (i, j):
                out.append((u, v))
            elif (pu, pv) == (j, i):
                out.append((v, u))
        return out

    def is_normalized(self) -> bool:
        sizes = {len(part) for part in self.parts}
        if len(sizes) > 1:
            return False
        counts = {len(self.pair_edges(i, j)) for i, j in _pairs(self.k)}
        return len(counts) <= 1

    @property
    def n(self) -> int:
        return max((len(part) for part in self.parts), default=0)

    @property
    def m(self) -> int:
        return max((len(self.pair_edges(i, j)) for i, j in _pairs(self.k)), default=0)


def _pairs(k: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)]


def parse_graph(source) -> MulticoloredGraph:
    text = source.read() if hasattr(source, "read") else source
    k: int | None = None
    parts: dict[int, list[str]] = {}
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        key = fields[0]
        if key == "k":
            if k is not None:
                raise ParseError("duplicate k line", lineno)
            if len(fields) != 2 or not fields[1].isdigit():
                raise ParseError("k expects a positive integer", lineno)
            k = int(fields[1])
            if k < 1:
                raise ParseError("k must be at least 1", lineno)
        elif key == "part":
            if k is None:
                raise ParseError("part before k", lineno)
            if len(fields) < 2 or not fields[1].isdigit():
                raise ParseError("part expects an index", lineno)
            idx = int(fields[1])
            if not 1 <= idx <= k:
                raise ParseError(f"part index {idx} outside 1..{k}", lineno)
            if idx in parts:
                raise ParseError(f"duplicate part {idx}", lineno)
            parts[idx] = fields[2:]
        elif key == "edge":
            if len(fields) != 3:
                raise ParseError("edge expects two vertex names", lineno)
            edges.append((fields[1], fields[2]))
        else:
            raise ParseError(f"unknown key {key!r}", lineno)
    if k is None:
        raise ParseError("missing k line", 1)
    try:
        return MulticoloredGraph(
            tuple(tuple(parts.get(i, [])) for i in range(1, k + 1)), tuple(edges)
        )
    except GfmError as exc:
        raise ParseError(str(exc)) from None


def serialize_graph(g: MulticoloredGraph) -> str:
    lines = [f"k {g.k}"]
    for i, part in enumerate(g.parts, start=1):
        lines.append(f"part {i}" + ("" if not part else " " + " ".join(part)))
    for u, v in g.edges:
        lines.append(f"edge {u} {v}")
    return "\n".join(lines) + "\n"


def normalize_graph(
    g: MulticoloredGraph, *, n: int | None = None, m: int | None = None
) -> MulticoloredGraph:
    """Pad to uniform part sizes and pair edge counts; clique existence is preserved.

    New edges connect fresh vertices only (degree one, so they join no clique
    for k >= 3; for k = 2 a single pair means no edge padding ever happens
    unless a larger target is forced explicitly).  Fresh isolated vertices
    fill the parts afterwards.
    """
    if g.k < 2:
        raise GfmError("normalization requires at least two parts")
    target_m = g.m if m is None else m
    target_n = g.n if n is None else n
    if target_m < g.m or target_n < g.n:
        raise GfmError("targets must not shrink the graph")
    parts = [list(part) for part in g.parts]
    edges = list(g.edges)
    existing = {name for part in parts for name in part}
    counter = itertools.count(1)

    def fresh() -> str:
        while True:
            name = f"_pad{next(counter)}"
            if name not in existing:
                existing.add(name)
                return name

    for i, j in _pairs(g.k):
        need = target_m - len(g.pair_edges(i, j))
        for _ in range(need):
            u, v = fresh(), fresh()
            parts[i - 1].append(u)
            parts[j - 1].append(v)
            edges.append((u, v))
    width = max([target_n] + [len(p) for p in parts])
    for part in parts:
        while len(part) < width:
            part.append(fresh())
    return MulticoloredGraph(tuple(tuple(p) for p in parts), tuple(edges))


def is_square_free(s: Sequence[str]) -> bool:
    """True iff no non-empty w makes ww a contiguous substring; naive cubic scan."""
    seq = tuple(s)
    n = len(seq)
    for start in range(n):
        for half in range(1, (n - start) // 2 + 1):
            if seq[start : start + half] == seq[start + half : start + 2 * half]:
                return False
    return True


def find_clique_bruteforce(
    g: MulticoloredGraph, *, node_budget: int = 10**6
) -> tuple[str, ...] | None:
    """First clique (one vertex per part) in part-order lexicographic order, or None."""
    from .solvers import ResourceLimitError

    edge_set = {frozenset(e) for e in g.edges}
    nodes = 0

    def extend(i: int, chosen: list[str]) -> tuple[str, ...] | None:
        nonlocal nodes
        if i == g.k:
            return tuple(chosen)
        for v in g.parts[i]:
            nodes += 1
            if nodes > node_budget:
                raise ResourceLimitError(f"clique search budget of {node_budget} exhausted")
            if all(frozenset((u, v)) in edge_set for u in chosen):
                result = extend(i + 1, chosen + [v])
                if result is not None:
                    return result
        return None

    if any(not part for part in g.parts):
        return None
    return extend(0, [])


# ---------------------------------------------------------------------------
# token builders shared by the generators


def _vtok(g: MulticoloredGraph, name: str) -> str:
    return f"v_{g.slot_of(name)}^{g.part_of(name)}"


def _hashtok(i: int, slot: int) -> str:
    # Vertex-block delimiters are namespaced per part: the flanking letters of
    # two different parts' blocks must admit pairwise-distinct images under
    # injective matching, which a shared delimiter letter would forbid
    # whenever two parts select the same slot.
    return f"#_{slot}^{i}"


def _pairtok(base: str, i: int, j: int) -> str:
    return f"{base}_{{{i},{j}}}"


def _atok(i: int, j: int, h: int) -> str:
    return f"a_{h}^{{{i},{j}}}"


def _etok(i: int, j: int, h: int) -> str:
    return f"e_{h}^{{{i},{j}}}"


def _rp(tok: str, count: int) -> list[str]:
    return [tok] * max(0, count)


def _enu(base: str, count: int) -> list[str]:
    return [f"{base}_{x}" for x in range(1, max(0, count) + 1)]


@dataclass(frozen=True)
class ReductionOutput:
    """Generated instance plus the construction's budget, bounds, and decoding data."""

    kind: str
    instance: Instance
    budget: int
    expected_bounds: Bounds
    decode_hints: dict = field(default_factory=dict)


def _require_normalized(g: MulticoloredGraph) -> None:
    if g.k < 2:
        raise GfmError("reductions require at least two parts")
    if not g.is_normalized():
        raise GfmError("graph must be normalized first (uniform part sizes and edge counts)")


def _edge_index(g: MulticoloredGraph) -> dict[tuple[int, int], list[tuple[str, str]]]:
    return {(i, j): g.pair_edges(i, j) for i, j in _pairs(g.k)}


def _instance(
    t: list[str],
    p: list[str],
    sigma_t: Iterable[str],
    kind: str,
    empty: bool,
    bounds: Bounds,
) -> Instance:
    sigma_p: dict[str, None] = {}
    for tok in p:
        sigma_p.setdefault(tok)
    return Instance(
        tuple(t),
        tuple(p),
        Alphabet(sigma_t),
        Alphabet(sigma_p),
        ProblemVariant(kind, empty),
        bounds,
    )


def _first_occurrence(seq: Iterable[str]) -> list[str]:
    seen: dict[str, None] = {}
    for tok in seq:
        seen.setdefault(tok)
    return list(seen)


# ---------------------------------------------------------------------------
# qmark: box-padded blocks, empty wildcards allowed, bounds L=1 W=2


BOX = "[]"


def reduce_questionmark(g: MulticoloredGraph, kind: str = GFM) -> ReductionOutput:
    """Blocks of box wildcard slots around one vertex-pair slot per part pair.

    Budget C(k,2)*8(m-1); the variant allows empty wildcard images; letter
    images are single tokens and wildcard images at most two.
    """
    _require_normalized(g)
    k, n, m = g.k, g.n, g.m
    edges = _edge_index(g)
    r = max(0, (k * (k - 1) // 2) * 8 * (m - 1))
    pad = max(0, 4 * (m - 1))

    def vt(e: tuple[str, str]) -> list[str]:
        return [_vtok(g, e[0]), "-", _vtok(g, e[1])]

    t_rest: list[str] = []
    p_rest: list[str] = []
    for i, j in _pairs(k):
        t_rest += ["#", ";"]
        for e in edges[(i, j)]:
            t_rest += vt(e) + [";"]
        p_rest += ["#"] + _rp(BOX, pad) + [";", f"V_{i}", "-", f"V_{j}", ";"] + _rp(BOX, pad)
    t_rest += ["#"]
    p_rest += ["#"]

    prefix = _rp(BOX, 2 * r + 1) + _rp(";", 2 * r + 1) + _rp("-", 2 * r + 1) + _rp("#", 2 * r + 1)
    t = prefix + t_rest
    p = prefix + p_rest
    sigma_t = [";", "-", "#", BOX] + [
        f"v_{l}^{i}" for i in range(1, k + 1) for l in range(1, n + 1)
    ]
    bounds = Bounds(max_letter_image_len=1, max_wildcard_image_len=2, wildcard_budget=r)
    inst = _instance(t, p, sigma_t, kind, empty=True, bounds=bounds)
    hints = {
        "vertex_letters": {f"V_{i}": i for i in range(1, k + 1)},
        "segments": {"prefix": (0, len(prefix)), "t_prime": (len(prefix), len(t))},
    }
    return ReductionOutput("qmark", inst, r, bounds, hints)


# ---------------------------------------------------------------------------
# qmarksize: a single mobile letter D, budget 2*C(k,2), L=1


def reduce_questionmarksize(g: MulticoloredGraph, kind: str = GFM) -> ReductionOutput:
    """One D slot on each side of every vertex-pair slot; a plus-run pins D.

    Budget 2*C(k,2); single-token letter images; wildcard images unbounded and
    non-empty.
    """
    _require_normalized(g)
    k, n, m = g.k, g.n, g.m
    edges = _edge_index(g)
    kprime = 2 * (k * (k - 1) // 2)
    run = 2 * (kprime + 1)

    def vt(e: tuple[str, str]) -> list[str]:
        return [_vtok(g, e[0]), "-", _vtok(g, e[1])]

    t_rest: list[str] = []
    p_rest: list[str] = []
    for i, j in _pairs(k):
        t_rest += ["#", _pairtok("l", i, j), ";"]
        for e in edges[(i, j)]:
            t_rest += vt(e) + [";"]
        t_rest += [_pairtok("r", i, j)]
        p_rest += ["#", "D", ";", f"V_{i}", "-", f"V_{j}", ";", "D"]
    t_rest += ["#"]
    p_rest += ["#"]

    t_head = ["#", ";", "-"] + _rp("+", run)
    p_head = ["#", ";", "-"] + _rp("D", run)
    t = t_head + t_rest
    p = p_head + p_rest
    sigma_t = (
        [";", "-", "#", "+"]
        + [_pairtok(b, i, j) for i, j in _pairs(k) for b in ("l", "r")]
        + [f"v_{l}^{i}" for i in range(1, k + 1) for l in range(1, n + 1)]
    )
    bounds = Bounds(max_letter_image_len=1, max_wildcard_image_len=None, wildcard_budget=kprime)
    inst = _instance(t, p, sigma_t, kind, empty=False, bounds=bounds)
    hints = {
        "vertex_letters": {f"V_{i}": i for i in range(1, k + 1)},
        "segments": {"prefix": (0, len(t_head)), "t_prime": (len(t_head), len(t))},
    }
    return ReductionOutput("qmarksize", inst, kprime, bounds, hints)


# ---------------------------------------------------------------------------
# shared edge-block builders (mobile1, mobile2)


def _edge_letter_map(g: MulticoloredGraph) -> dict[tuple[str, str], str]:
    out: dict[tuple[str, str], str] = {}
    for i, j in _pairs(g.k):
        for h, e in enumerate(g.pair_edges(i, j), start=1):
            out[e] = _atok(i, j, h)
    return out


def _incident(g: MulticoloredGraph, v: str, j: int) -> list[tuple[str, str]]:
    """Edges at v whose other endpoint lies in part j, canonical endpoint order."""
    i = g.part_of(v)
    out = []
    for e in g.edges:
        if v not in e:
            continue
        other = e[1] if e[0] == v else e[0]
        if g.part_of(other) == j:
            lo, hi = (v, other) if i < j else (other, v)
            out.append((lo, hi))
    return out


def _dtok(g: MulticoloredGraph, e: tuple[str, str], v: str) -> str:
    i, j = g.part_of(e[0]), g.part_of(e[1])
    h = g.pair_edges(i, j).index(e) + 1
    return f"d_{{{_etok(i, j, h)}}}^{{{_vtok(g, v)}}}"


def _dvtok(g: MulticoloredGraph, v: str) -> str:
    return f"d^{{{_vtok(g, v)}}}"


def _edge_block(g: MulticoloredGraph, v: str, amap: dict[tuple[str, str], str]) -> list[str]:
    """Per-vertex block: the vertex's edge letters grouped by the other part, dummies between."""
    out: list[str] = []
    for j in range(1, g.k + 1):
        for e in _incident(g, v, j):
            out += [_dtok(g, e, v), amap[e]]
    out.append(_dvtok(g, v))
    return out


def _t1_edges(g: MulticoloredGraph, amap: dict[tuple[str, str], str]) -> list[str]:
    out: list[str] = []
    for i, j in _pairs(g.k):
        out += ["#", _pairtok("l", i, j)]
        out += [amap[e] for e in g.pair_edges(i, j)]
        out += [_pairtok("r", i, j)]
    return out


def _t2_vertices(g: MulticoloredGraph, amap: dict[tuple[str, str], str]) -> list[str]:
    out: list[str] = []
    for i in range(1, g.k + 1):
        out += ["#", f"l_{i}"]
        for slot, v in enumerate(g.parts[i - 1], start=1):
            out += [_hashtok(i, slot)] + _edge_block(g, v, amap) + [_hashtok(i, slot)]
        out += [f"r_{i}"]
    out += ["#"]
    return out


def _interleaved(i: int, k: int, d_name) -> list[str]:
    """A_i (D I)* D A_i with one I slot per other part in increasing order."""
    out = [f"A_{i}"]
    for j in range(1, k + 1):
        if j == i:
            continue
        out += [d_name(i, j), _pairtok("E", min(i, j), max(i, j))]
    out += [d_name(i, k + 1), f"A_{i}"]
    return out


def _mobile_sigma_t(g: MulticoloredGraph, amap, with_plus: bool) -> list[str]:
    toks = ["#"] + (["+"] if with_plus else [])
    toks += [amap[e] for e in amap]
    toks += [_hashtok(i, slot) for i in range(1, g.k + 1) for slot in range(1, g.n + 1)]
    toks += [_pairtok(b, i, j) for i, j in _pairs(g.k) for b in ("l", "r")]
    toks += [f"{b}_{i}" for i in range(1, g.k + 1) for b in ("l", "r")]
    for v in (v for part in g.parts for v in part):
        for j in range(1, g.k + 1):
            for e in _incident(g, v, j):
                toks.append(_dtok(g, e, v))
        toks.append(_dvtok(g, v))
    return _first_occurrence(toks)


# ---------------------------------------------------------------------------
# mobile2: mobile wildcards replacing D/L_i/R_i slots, L=1


def reduce_mobile2(g: MulticoloredGraph, kind: str = GFM) -> ReductionOutput:
    """Wildcard slots (D, L_i, R_i) roam over edge lists and vertex blocks; plus-run pins D.

    Budget 2*C(k,2) + k(k+2); single-token letter images; wildcard images
    unbounded and non-empty.
    """
    _require_normalized(g)
    k = g.k
    amap = _edge_letter_map(g)
    kprime = 2 * (k * (k - 1) // 2) + k * (k + 2)
    run = 2 * (kprime + 1)

    t0 = ["#"] + _rp("+", run)
    p0 = ["#"] + _rp("D", run)
    t1 = _t1_edges(g, amap)
    t2 = _t2_vertices(g, amap)
    p1: list[str] = []
    for i, j in _pairs(k):
        p1 += ["#", "D", _pairtok("E", i, j), "D"]
    p2: list[str] = []
    for i in range(1, k + 1):
        p2 += ["#", f"L_{i}"] + _interleaved(i, k, lambda *_: "D") + [f"R_{i}"]
    p2 += ["#"]

    t = t0 + t1 + t2
    p = p0 + p1 + p2
    bounds = Bounds(max_letter_image_len=1, max_wildcard_image_len=None, wildcard_budget=kprime)
    inst = _instance(t, p, _mobile_sigma_t(g, amap, with_plus=True), kind, empty=False, bounds=bounds)
    hints = {
        "edge_by_token": {tok: e for e, tok in amap.items()},
        "pair_letters": {_pairtok("E", i, j): (i, j) for i, j in _pairs(k)},
        "segments": {
            "t0": (0, len(t0)),
            "t1": (len(t0), len(t0) + len(t1)),
            "t2": (len(t0) + len(t1), len(t)),
        },
    }
    return ReductionOutput("mobile2", inst, kprime, bounds, hints)


# ---------------------------------------------------------------------------
# mobile1: exact matching, unbounded letter images, dummies for injectivity


def reduce_mobile1(g: MulticoloredGraph, kind: str = GFM) -> ReductionOutput:
    """Exact matching (no wildcards); dedicated slot letters take the roaming images."""
    _require_normalized(g)
    k = g.k
    amap = _edge_letter_map(g)

    t0 = ["#", "#"]
    p0 = ["#", "#"]
    t1 = _t1_edges(g, amap)
    t2 = _t2_vertices(g, amap)
    p1: list[str] = []
    for i, j in _pairs(k):
        p1 += ["#", _pairtok("L", i, j), _pairtok("E", i, j), _pairtok("R", i, j)]
    p2: list[str] = []
    for i in range(1, k + 1):
        p2 += ["#", f"L_{i}"] + _interleaved(i, k, lambda a, b: _pairtok("D", a, b)) + [f"R_{i}"]
    p2 += ["#"]

    t = t0 + t1 + t2
    p = p0 + p1 + p2
    bounds = Bounds(max_letter_image_len=None, max_wildcard_image_len=None, wildcard_budget=0)
    inst = _instance(t, p, _mobile_sigma_t(g, amap, with_plus=False), kind, empty=False, bounds=bounds)
    hints = {
        "edge_by_token": {tok: e for e, tok in amap.items()},
        "pair_letters": {_pairtok("E", i, j): (i, j) for i, j in _pairs(k)},
        "segments": {
            "t0": (0, len(t0)),
            "t1": (len(t0), len(t0) + len(t1)),
            "t2": (len(t0) + len(t1), len(t)),
        },
    }
    return ReductionOutput("mobile1", inst, 0, bounds, hints)


# ---------------------------------------------------------------------------
# occtmax: exact matching with length-2 images over enumerated slot runs


def reduce_occt_max(g: MulticoloredGraph, kind: str = GFM) -> ReductionOutput:
    """Enumerated left/right slot runs absorb offsets at image length two; q = 0, L = 2."""
    _require_normalized(g)
    k, n, m = g.k, g.n, g.m
    edges = _edge_index(g)
    r = 2 * k * n * (n - 1) + 2 * n + (k - 1) * m - 1

    def pairrun(base: str, i: int, j: int, count: int) -> list[str]:
        return [f"{base}_{x}^{{{i},{j}}}" for x in range(1, max(0, count) + 1)]

    def vrun(base: str, v: str, j: int, count: int) -> list[str]:
        return [f"{base}_{x}^{{{_vtok(g, v)},{j}}}" for x in range(1, max(0, count) + 1)]

    def partrun(base: str, i: int, count: int) -> list[str]:
        return [f"{base}_{x}^{i}" for x in range(1, max(0, count) + 1)]

    t0 = ["#", "#"]
    p0 = ["#", "#"]

    t1: list[str] = []
    p1: list[str] = []
    for i, j in _pairs(k):
        t1 += ["#"] + pairrun("l", i, j, m - 1)
        t1 += [_etok(i, j, h) for h in range(1, m + 1)]
        t1 += pairrun("r", i, j, m - 1)
        p1 += ["#"] + pairrun("L", i, j, m - 1) + [_pairtok("E", i, j)] + pairrun("R", i, j, m - 1)
    t1 += ["#"]
    p1 += ["#"]

    def vertex_section(v: str) -> list[str]:
        out: list[str] = []
        for j in range(1, g.k + 1):
            if j == g.part_of(v):
                continue
            inc = _incident(g, v, j)
            out += vrun("l", v, j, n - 1)
            for e in inc:
                i2, j2 = g.part_of(e[0]), g.part_of(e[1])
                out.append(_etok(i2, j2, g.pair_edges(i2, j2).index(e) + 1))
            out += vrun("r", v, j, n - 1)
        return out

    t2: list[str] = []
    p2: list[str] = []
    for i in range(1, k + 1):
        if i > 1:
            t2 += ["#"]
            p2 += ["#"]
        t2 += partrun("l", i, r)
        for slot, v in enumerate(g.parts[i - 1], start=1):
            t2 += [_hashtok(i, slot)] + vertex_section(v) + [_hashtok(i, slot)]
        t2 += partrun("r", i, r)
        p2 += partrun("L", i, r) + [f"A_{i}"]
        for j in range(1, k + 1):
            if j == i:
                continue
            p2 += (
                vrunname("LL", i, j, n - 1)
                + [_pairtok("E", min(i, j), max(i, j))]
                + vrunname("RR", i, j, n - 1)
            )
        p2 += [f"A_{i}"] + partrun("R", i, r)

    t = t0 + t1 + t2
    p = p0 + p1 + p2
    sigma_t = _first_occurrence(t)
    bounds = Bounds(max_letter_image_len=2, max_wildcard_image_len=None, wildcard_budget=0)
    inst = _instance(t, p, sigma_t, kind, empty=False, bounds=bounds)
    edge_by_token = {
        _etok(i, j, h): e
        for i, j in _pairs(k)
        for h, e in enumerate(edges[(i, j)], start=1)
    }
    hints = {
        "edge_by_token": edge_by_token,
        "pair_letters": {_pairtok("E", i, j): (i, j) for i, j in _pairs(k)},
        "segments": {
            "t0": (0, len(t0)),
            "t1": (len(t0), len(t0) + len(t1)),
            "t2": (len(t0) + len(t1), len(t)),
        },
        "run_length": r,
    }
    return ReductionOutput("occtmax", inst, 0, bounds, hints)


def vrunname(base: str, i: int, j: int, count: int) -> list[str]:
    return [f"{base}_{x}^{{{i},{j}}}" for x in range(1, max(0, count) + 1)]


_GENERATORS = {
    "qmark": reduce_questionmark,
    "mobile2": reduce_mobile2,
    "occtmax": reduce_occt_max,
    "qmarksize": reduce_questionmarksize,
    "mobile1": reduce_mobile1,
}


def generate(kind: str, g: MulticoloredGraph, variant: str = GFM) -> ReductionOutput:
    try:
        gen = _GENERATORS[kind]
    except KeyError:
        raise GfmError(f"unknown reduction {kind!r}") from None
    return gen(g, variant)


# ---------------------------------------------------------------------------
# forward witnesses (clique -> canonical witness)


def _clique_data(g: MulticoloredGraph, clique: Sequence[str]):
    if len(clique) != g.k:
        raise GfmError("clique must pick one vertex per part")
    slots: dict[int, int] = {}
    for v in clique:
        i = g.part_of(v)
        if i in slots:
            raise GfmError("clique must pick one vertex per part")
        slots[i] = g.slot_of(v)
    edge_set = {frozenset(e) for e in g.edges}
    chosen: dict[tuple[int, int], tuple[str, str]] = {}
    by_part = {g.part_of(v): v for v in clique}
    for i, j in _pairs(g.k):
        e = (by_part[i], by_part[j])
        if frozenset(e) not in edge_set:
            raise GfmError(f"clique is missing the edge between parts {i} and {j}")
        chosen[(i, j)] = e
    return slots, chosen


def forward_witness(output: ReductionOutput, g: MulticoloredGraph, clique: Sequence[str]) -> MatchWitness:
    """Canonical witness for a clique: the construction's letter images, wildcards by traceback."""
    slots, chosen = _clique_data(g, clique)
    kind = output.kind
    if kind == "qmark":
        f = {BOX: (BOX,), ";": (";",), "-": ("-",), "#": ("#",)}
        for i in range(1, g.k + 1):
            f[f"V_{i}"] = (f"v_{slots[i]}^{i}",)
        return _complete_with_wildcards(output, f)
    if kind == "qmarksize":
        f = {";": (";",), "-": ("-",), "#": ("#",), "D": ("+",)}
        for i in range(1, g.k + 1):
            f[f"V_{i}"] = (f"v_{slots[i]}^{i}",)
        return _complete_with_wildcards(output, f)
    if kind == "mobile2":
        amap = _edge_letter_map(g)
        f = {"#": ("#",), "D": ("+",)}
        for (i, j), e in chosen.items():
            f[_pairtok("E", i, j)] = (amap[e],)
        for i in range(1, g.k + 1):
            f[f"A_{i}"] = (_hashtok(i, slots[i]),)
        return _complete_with_wildcards(output, f)
    if kind == "mobile1":
        return MatchWitness(_mobile1_substitution(g, slots, chosen), {})
    if kind == "occtmax":
        return MatchWitness(_occtmax_substitution(g, slots, chosen, output), {})
    raise GfmError(f"unknown reduction {kind!r}")


def _complete_with_wildcards(output: ReductionOutput, f: dict[str, TokenStr]) -> MatchWitness:
    count, witness = dp.decide_with_function(output.instance, f)
    if count is None or count > output.budget:
        raise GfmError("canonical substitution does not match within the budget")
    return witness


def _mobile1_substitution(g, slots, chosen) -> dict[str, TokenStr]:
    amap = _edge_letter_map(g)
    f: dict[str, TokenStr] = {"#": ("#",)}
    for (i, j), e in chosen.items():
        f[_pairtok("E", i, j)] = (amap[e],)
        pair = g.pair_edges(i, j)
        h = pair.index(e) + 1
        f[_pairtok("L", i, j)] = tuple([_pairtok("l", i, j)] + [amap[x] for x in pair[: h - 1]])
        f[_pairtok("R", i, j)] = tuple([amap[x] for x in pair[h:]] + [_pairtok("r", i, j)])
    for i in range(1, g.k + 1):
        part = g.parts[i - 1]
        h = slots[i]
        f[f"A_{i}"] = (_hashtok(i, h),)
        left: list[str] = [f"l_{i}"]
        for slot in range(1, h):
            left += [_hashtok(i, slot)] + _edge_block(g, part[slot - 1], amap) + [_hashtok(i, slot)]
        f[f"L_{i}"] = tuple(left)
        right: list[str] = []
        for slot in range(h + 1, len(part) + 1):
            right += [_hashtok(i, slot)] + _edge_block(g, part[slot - 1], amap) + [_hashtok(i, slot)]
        right.append(f"r_{i}")
        f[f"R_{i}"] = tuple(right)
        block = _edge_block(g, part[h - 1], amap)
        marks = []
        for j in range(1, g.k + 1):
            if j == i:
                continue
            e = chosen[(min(i, j), max(i, j))]
            marks.append((j, block.index(amap[e])))
        prev = 0
        for j, pos in marks:
            f[_pairtok("D", i, j)] = tuple(block[prev:pos])
            prev = pos + 1
        f[_pairtok("D", i, g.k + 1)] = tuple(block[prev:])
    return f


def _tile(tokens_: list[str], nletters: int, ntwos: int, twos_first: bool) -> list[TokenStr]:
    """Split a token run into nletters images of length 1 or 2 (ntwos of length 2)."""
    assert 0 <= ntwos <= nletters and len(tokens_) == nletters + ntwos
    lengths = [2] * ntwos + [1] * (nletters - ntwos)
    if not twos_first:
        lengths.reverse()
    out: list[TokenStr] = []
    pos = 0
    for ln in lengths:
        out.append(tuple(tokens_[pos : pos + ln]))
        pos += ln
    return out


def _occtmax_substitution(g, slots, chosen, output: ReductionOutput) -> dict[str, TokenStr]:
    k, n, m = g.k, g.n, g.m
    r = output.decode_hints["run_length"]
    f: dict[str, TokenStr] = {"#": ("#",)}

    def pairrun(base, i, j, count):
        return [f"{base}_{x}^{{{i},{j}}}" for x in range(1, max(0, count) + 1)]

    def vrun(base, v, j, count):
        return [f"{base}_{x}^{{{_vtok(g, v)},{j}}}" for x in range(1, max(0, count) + 1)]

    for (i, j), e in chosen.items():
        pair = g.pair_edges(i, j)
        h = pair.index(e) + 1
        f[_pairtok("E", i, j)] = (_etok(i, j, h),)
        left = pairrun("l", i, j, m - 1) + [_etok(i, j, x) for x in range(1, h)]
        for name, img in zip(pairrun("L", i, j, m - 1), _tile(left, m - 1, h - 1, True)):
            f[name] = img
        right = [_etok(i, j, x) for x in range(h + 1, m + 1)] + pairrun("r", i, j, m - 1)
        for name, img in zip(pairrun("R", i, j, m - 1), _tile(right, m - 1, m - h, False)):
            f[name] = img

    for i in range(1, k + 1):
        part = g.parts[i - 1]
        h = slots[i]
        f[f"A_{i}"] = (_hashtok(i, h),)

        def section(v):
            out = []
            for j in range(1, k + 1):
                if j == g.part_of(v):
                    continue
                inc = _incident(g, v, j)
                out += vrun("l", v, j, n - 1)
                out += [
                    _etok(g.part_of(e[0]), g.part_of(e[1]),
                          g.pair_edges(g.part_of(e[0]), g.part_of(e[1])).index(e) + 1)
                    for e in inc
                ]
                out += vrun("r", v, j, n - 1)
            return out

        before: list[str] = []
        for slot in range(1, h):
            before += [_hashtok(i, slot)] + section(part[slot - 1]) + [_hashtok(i, slot)]
        after: list[str] = []
        for slot in range(h + 1, n + 1):
            after += [_hashtok(i, slot)] + section(part[slot - 1]) + [_hashtok(i, slot)]
        lrun = [f"l_{x}^{i}" for x in range(1, r + 1)]
        rrun = [f"r_{x}^{i}" for x in range(1, r + 1)]
        lnames = [f"L_{x}^{i}" for x in range(1, r + 1)]
        rnames = [f"R_{x}^{i}" for x in range(1, r + 1)]
        for name, img in zip(lnames, _tile(lrun + before, r, len(before), True)):
            f[name] = img
        for name, img in zip(rnames, _tile(after + rrun, r, len(after), False)):
            f[name] = img
        v = part[h - 1]
        for j in range(1, k + 1):
            if j == i:
                continue
            inc = _incident(g, v, j)
            e = chosen[(min(i, j), max(i, j))]
            pos = inc.index(e) + 1
            etoks = [
                _etok(g.part_of(x[0]), g.part_of(x[1]),
                      g.pair_edges(g.part_of(x[0]), g.part_of(x[1])).index(x) + 1)
                for x in inc
            ]
            left = vrun("l", v, j, n - 1) + etoks[: pos - 1]
            for name, img in zip(vrunname("LL", i, j, n - 1), _tile(left, n - 1, pos - 1, True)):
                f[name] = img
            right = etoks[pos:] + vrun("r", v, j, n - 1)
            for name, img in zip(vrunname("RR", i, j, n - 1), _tile(right, n - 1, len(etoks) - pos, False)):
                f[name] = img
    return f


# ---------------------------------------------------------------------------
# clique extraction (witness -> clique)


_VERTEX_RE = re.compile(r"^v_(\d+)\^(\d+)$")


def extract_clique(kind: str, witness: MatchWitness, g: MulticoloredGraph) -> tuple[str, ...]:
    """Read the clique out of a canonical witness; DecodeFailure on anything else."""
    if kind in ("qmark", "qmarksize"):
        out = []
        for i in range(1, g.k + 1):
            image = witness.substitution.get(f"V_{i}")
            if image is None or len(image) != 1:
                raise DecodeFailure(f"V_{i} does not map to a single vertex letter")
            match = _VERTEX_RE.match(image[0])
            if not match or int(match.group(2)) != i:
                raise DecodeFailure(f"V_{i} maps to {image[0]!r}, not a part-{i} vertex letter")
            slot = int(match.group(1))
            if not 1 <= slot <= len(g.parts[i - 1]):
                raise DecodeFailure(f"vertex slot {slot} outside part {i}")
            out.append(g.parts[i - 1][slot - 1])
        return tuple(out)
    if kind in ("mobile1", "mobile2", "occtmax"):
        output = generate(kind, g)
        edge_by_token = output.decode_hints["edge_by_token"]
        per_part: dict[int, set[str]] = {i: set() for i in range(1, g.k + 1)}
        for i, j in _pairs(g.k):
            image = witness.substitution.get(_pairtok("E", i, j))
            if image is None or len(image) != 1 or image[0] not in edge_by_token:
                raise DecodeFailure(f"E_{{{i},{j}}} does not map to a single edge letter")
            u, v = edge_by_token[image[0]]
            per_part[g.part_of(u)].add(u)
            per_part[g.part_of(v)].add(v)
        for i, vs in per_part.items():
            if len(vs) != 1:
                raise DecodeFailure(f"edge images disagree on the part-{i} vertex")
        return tuple(per_part[i].pop() for i in range(1, g.k + 1))
    raise GfmError(f"unknown reduction {kind!r}")
