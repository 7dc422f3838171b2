"""Fixed-substitution table: values against an independent oracle, traceback, base cases."""

import random

import pytest

from gfmatch.core import make_instance, tokens, verify_witness
from gfmatch.dp import decide_with_function, similarity
from conftest import inst
from oracles import min_wildcards_with_function, paper_style_similarity


def test_intro_similarity_full_match():
    instance = inst("x y y x", "a b a")
    table = similarity(instance, {"a": ("x",), "b": ("y", "y")})
    assert table.g[3][4] == 3
    assert decide_with_function(instance, {"a": ("x",), "b": ("y", "y")})[0] == 0


def test_single_mismatch_needs_one_wildcard():
    instance = inst("x", "a", q=1)
    table = similarity(instance, {"a": ("y",)})
    assert table.g[1][1] == 0
    count, witness = decide_with_function(instance, {"a": ("y",)})
    assert count == 1 and witness.wildcards == {1: ("x",)}


def test_derived_example_one_wildcard():
    instance = inst("x y y z", "a b a", q=1)
    f = {"a": ("z",), "b": ("y",)}
    assert min_wildcards_with_function(instance, f) == 1  # oracle
    table = similarity(instance, f)
    assert table.g[3][4] == 2
    count, witness = decide_with_function(instance, f)
    assert count == 1
    assert witness.wildcards == {1: ("x", "y")}
    assert verify_witness(instance, witness).ok


def test_no_function_matches_xyyz_exactly():
    instance = inst("x y y z", "a b a")
    for fa in ("x", "y", "z"):
        for fb in ("x", "y", "z"):
            count, _ = decide_with_function(instance, {"a": (fa,), "b": (fb,)})
            assert count is None or count > 0


def test_empty_pattern_prefix_cannot_cover_text():
    # the table must not credit a suffix tiling that leaves leading text uncovered
    instance = inst("x y", "a")
    table = similarity(instance, {"a": ("y",)})
    assert table.g[0][1] is None and table.g[0][2] is None
    count, _ = decide_with_function(instance, {"a": ("y",)})
    assert count == 1  # wildcard the whole pattern, not a free ride on offset 0


def test_gpm_rejects_non_injective_function():
    instance = inst("x x", "a b", kind="gpm", q=2)
    assert decide_with_function(instance, {"a": ("x",), "b": ("x",)}) == (None, None)


def test_partial_function_forces_wildcards():
    instance = inst("x y", "a b", q=1)
    count, witness = decide_with_function(instance, {"a": ("x",)})
    assert count == 1 and witness.wildcards == {2: ("y",)}
    assert "b" not in witness.substitution


def test_empty_wildcards_cover_short_text():
    instance = inst("x", "a b", q=2, empty=True)
    count, witness = decide_with_function(instance, {"a": ("x",)})
    assert count == 1 and witness.wildcards == {2: ()}


def _random_case(rng: random.Random):
    n = rng.randint(1, 8)
    m = rng.randint(1, 6)
    t = " ".join(rng.choice("xyz"[: rng.randint(1, 3)]) for _ in range(n))
    p = " ".join(rng.choice("abc"[: rng.randint(1, 3)]) for _ in range(m))
    kind = rng.choice(["gfm", "gpm"])
    empty = rng.random() < 0.5
    W = rng.choice([None, 1, 2])
    q = rng.randint(0, m)
    instance = make_instance(t, p, kind=kind, empty_wildcards=empty,
                             max_wildcard_len=W, wildcards=q)
    f = {}
    for letter in set(instance.pattern):
        if rng.random() < 0.85:
            ln = rng.randint(1, 2)
            start = rng.randint(0, max(0, len(instance.text) - ln))
            f[letter] = instance.text[start : start + ln]
    return instance, f


def test_min_wildcards_matches_oracle_on_random_cases(rng):
    for _ in range(400):
        instance, f = _random_case(rng)
        expected = min_wildcards_with_function(instance, f)
        got, witness = decide_with_function(instance, f)
        assert got == expected, (instance, f)
        if got is not None:
            produced = verify_witness(
                instance,
                witness if got <= instance.bounds.wildcard_budget
                else type(witness)(witness.substitution, witness.wildcards),
            )
            if got <= instance.bounds.wildcard_budget:
                assert produced.ok, (instance, f, witness)


def test_budget_monotonicity(rng):
    for _ in range(150):
        instance, f = _random_case(rng)
        count, _ = decide_with_function(instance, f)
        if count is None:
            continue
        for q in range(len(instance.pattern) + 1):
            yes = count <= q
            # increasing q never flips yes to no: decision is a threshold on count
            if yes:
                assert count <= q + 1


def test_bounding_wildcard_length_never_increases_similarity(rng):
    for _ in range(150):
        instance, f = _random_case(rng)
        bounded = similarity(instance, f)
        unbounded_instance = make_instance(
            instance.text, instance.pattern, kind=instance.variant.kind,
            empty_wildcards=instance.variant.empty_wildcards_allowed,
            wildcards=instance.bounds.wildcard_budget,
        )
        unbounded = similarity(unbounded_instance, f)
        value_b = bounded.g[bounded.m][bounded.n]
        value_u = unbounded.g[unbounded.m][unbounded.n]
        if value_b is not None:
            assert value_u is not None and value_u >= value_b


def test_unbounded_scan_matches_reference_recursion(rng):
    # with no wildcard-length bound and non-empty images the production table
    # must agree cell-by-cell with the unified reference recursion
    for _ in range(100):
        instance, f = _random_case(rng)
        if instance.variant.empty_wildcards_allowed:
            continue
        instance = make_instance(
            instance.text, instance.pattern, kind=instance.variant.kind,
            wildcards=instance.bounds.wildcard_budget,
        )
        ours = similarity(instance, f)
        reference = paper_style_similarity(instance, f)
        assert ours.g == reference


def test_traceback_prefers_match_then_smallest_wildcard():
    instance = inst("x x x", "a a a", q=3)
    count, witness = decide_with_function(instance, {"a": ("x",)})
    assert count == 0 and not witness.wildcards

    instance2 = inst("x y", "a b", q=2)
    count2, witness2 = decide_with_function(instance2, {"a": ("x",)})
    assert count2 == 1 and witness2.wildcards == {2: ("y",)}


def test_operation_count_scales_with_inner_scan():
    rng = random.Random(7)
    m = 4
    ops = {}
    for n in (20, 40, 80):
        t = " ".join(rng.choice("xy") for _ in range(n))
        instance = make_instance(t, "a b a b", wildcards=m)
        table = similarity(instance, {"a": ("x",), "b": ("y",)})
        ops[n] = table.ops
    assert ops[40] > ops[20] and ops[80] > ops[40]
    # unbounded wildcard scan: quadrupling expected when n doubles, allow slack
    assert ops[80] / ops[40] < 6
