"""Core domain types, file formats, witness verification, parameter measurement."""

import pytest
from hypothesis import given, settings, strategies as st

from gfmatch.core import (
    Alphabet,
    Bounds,
    InvalidInstanceError,
    MatchWitness,
    MissingImageError,
    ParseError,
    apply_witness,
    make_instance,
    measure_parameters,
    parse_instance,
    parse_witness,
    serialize_instance,
    serialize_witness,
    tokens,
    verify_witness,
)
from conftest import inst


class TestAlphabet:
    def test_ids_follow_declaration_order(self):
        alpha = Alphabet(["x", "y", "#_3"])
        assert [l.id for l in alpha] == [0, 1, 2]
        assert alpha.id_of("#_3") == 2
        assert "y" in alpha and "z" not in alpha

    def test_duplicate_and_whitespace_tokens_rejected(self):
        with pytest.raises(InvalidInstanceError):
            Alphabet(["x", "x"])
        with pytest.raises(InvalidInstanceError):
            Alphabet(["a b"])


class TestParseInstance:
    def test_intro_instance(self):
        text = "variant gfm\nwildcards 0\ntext x y y x\npattern a b a\n"
        instance = parse_instance(text)
        assert len(instance.sigma_t) == 2
        assert len(instance.sigma_p) == 2
        assert instance.bounds.wildcard_budget == 0
        assert instance.text == tokens("x y y x")

    def test_smallest_instance_defaults(self):
        instance = parse_instance("text x\npattern a\nwildcards 0\n")
        assert len(instance.text) == len(instance.pattern) == 1
        assert instance.variant.kind == "gfm"
        assert instance.bounds.max_letter_image_len is None

    def test_missing_pattern_is_an_error(self):
        with pytest.raises(ParseError):
            parse_instance("text x y\n")

    def test_unknown_key_names_line(self):
        with pytest.raises(ParseError) as err:
            parse_instance("text x\nbogus 3\npattern a\n")
        assert err.value.line == 2

    def test_negative_budget_rejected(self):
        with pytest.raises(ParseError):
            parse_instance("text x\npattern a\nwildcards -1\n")

    def test_pattern_token_declared_only_in_sigma_t(self):
        source = "text x\npattern a\nsigma_t x a\nsigma_p b\n"
        with pytest.raises(ParseError):
            parse_instance(source)

    def test_comment_lines_skipped_but_hash_tokens_kept(self):
        source = "# a comment\ntext # x #\npattern a #\n"
        instance = parse_instance(source)
        assert instance.text == ("#", "x", "#")
        assert instance.pattern == ("a", "#")

    def test_duplicate_key_rejected(self):
        with pytest.raises(ParseError):
            parse_instance("text x\ntext y\npattern a\n")

    def test_bounds_lines(self):
        source = (
            "variant gpm\nallow_empty_wildcard 1\nwildcards 2\n"
            "max_letter_len 3\nmax_wildcard_len inf\ntext x\npattern a\n"
        )
        instance = parse_instance(source)
        assert instance.variant.injective
        assert instance.variant.empty_wildcards_allowed
        assert instance.bounds.max_letter_image_len == 3
        assert instance.bounds.max_wildcard_image_len is None


class TestApplyWitness:
    def test_intro_substitution(self):
        instance = inst("x y y x", "a b a")
        witness = MatchWitness({"a": ("x",), "b": ("y", "y")})
        assert apply_witness(instance, witness) == tokens("x y y x")

    def test_single_letter(self):
        instance = inst("x", "a")
        assert apply_witness(instance, MatchWitness({"a": ("x",)})) == ("x",)

    def test_wildcard_image_replaces_position(self):
        instance = inst("x y y z", "a b a", q=1)
        witness = MatchWitness({"a": ("z",), "b": ("y",)}, {1: ("x", "y")})
        assert apply_witness(instance, witness) == tokens("x y y z")
        assert verify_witness(instance, witness).ok

    def test_missing_image_raises(self):
        instance = inst("x y", "a b")
        with pytest.raises(MissingImageError):
            apply_witness(instance, MatchWitness({"a": ("x",)}))


class TestVerifyWitness:
    def test_intro_witness_passes(self):
        instance = inst("x y y x", "a b a")
        report = verify_witness(instance, MatchWitness({"a": ("x",), "b": ("y", "y")}))
        assert report.ok

    def test_budget_violation(self):
        instance = inst("x y y z", "a b a", q=0)
        witness = MatchWitness({"a": ("z",), "b": ("y",)}, {1: ("x", "y")})
        report = verify_witness(instance, witness)
        assert not report.ok and report.failure == "budget"

    def test_gpm_injectivity_violation(self):
        instance = inst("x x", "a b", kind="gpm")
        report = verify_witness(instance, MatchWitness({"a": ("x",), "b": ("x",)}))
        assert not report.ok and report.failure == "injectivity"

    def test_concatenation_mismatch_reports_offset(self):
        instance = inst("x y y x", "a b a")
        report = verify_witness(instance, MatchWitness({"a": ("x",), "b": ("y", "x")}))
        assert not report.ok and report.failure == "concatenation"
        assert "text offset 2" in report.detail

    def test_letter_image_length_bound(self):
        instance = inst("x y y x", "a b a", L=1)
        report = verify_witness(instance, MatchWitness({"a": ("x",), "b": ("y", "y")}))
        assert not report.ok and report.failure == "letter-image-length"

    def test_wildcard_image_length_bound(self):
        instance = inst("x y y z", "a b a", q=1, W=1)
        witness = MatchWitness({"a": ("z",), "b": ("y",)}, {1: ("x", "y")})
        report = verify_witness(instance, witness)
        assert not report.ok and report.failure == "wildcard-image-length"

    def test_empty_wildcard_image_depends_on_variant(self):
        witness = MatchWitness({"a": ("x",), "b": ("y",)}, {3: ()})
        forbidden = inst("x y", "a b c", q=1)
        report = verify_witness(forbidden, witness)
        assert not report.ok and report.failure == "empty-image"
        allowed = inst("x y", "a b c", q=1, empty=True)
        assert verify_witness(allowed, witness).ok

    def test_wildcard_images_exempt_from_injectivity_by_default(self):
        instance = inst("x y x", "a b a", kind="gpm", q=1)
        witness = MatchWitness({"a": ("x",), "b": ("y",)}, {3: ("x",)})
        assert verify_witness(instance, witness).ok
        strict = verify_witness(instance, witness, strict_wildcard_injectivity=True)
        assert not strict.ok and strict.failure == "injectivity"

    def test_out_of_range_wildcard_position(self):
        instance = inst("x", "a", q=1)
        report = verify_witness(instance, MatchWitness({"a": ("x",)}, {5: ("x",)}))
        assert not report.ok and report.failure == "wildcard-position"


class TestMeasureParameters:
    def test_intro_counts(self):
        params = measure_parameters(inst("x y y x", "a b a"))
        assert (params.occ_t, params.size_t, params.occ_p, params.size_p) == (2, 2, 2, 2)

    def test_single_letters(self):
        params = measure_parameters(inst("x", "a"))
        assert (params.occ_t, params.size_t, params.occ_p, params.size_p) == (1, 1, 1, 1)

    def test_three_distinct_text_letters(self):
        params = measure_parameters(inst("x y y z", "a b a"))
        assert params.occ_t == 2 and params.size_t == 3

    def test_bounds_copied_through(self):
        params = measure_parameters(inst("x", "a", L=2, W=3, q=1))
        assert params.as_dict() == {
            "occt": 1, "sigt": 1, "occp": 1, "sigp": 1,
            "maxfp": 2, "numq": 1, "maxfq": 3,
        }


# hypothesis strategies for random tiny instances and witnesses

texts = st.lists(st.sampled_from("xyz"), min_size=1, max_size=6)
patterns = st.lists(st.sampled_from("ab"), min_size=1, max_size=4)


@st.composite
def instances(draw):
    t = draw(texts)
    p = draw(patterns)
    kind = draw(st.sampled_from(["gfm", "gpm"]))
    empty = draw(st.booleans())
    L = draw(st.sampled_from([None, 1, 2]))
    W = draw(st.sampled_from([None, 1, 2]))
    q = draw(st.integers(0, 2))
    return make_instance(
        tuple(t), tuple(p), kind=kind, empty_wildcards=empty,
        max_letter_len=L, max_wildcard_len=W, wildcards=q,
    )


@settings(max_examples=200, deadline=None)
@given(instances())
def test_serialize_parse_round_trip(instance):
    assert parse_instance(serialize_instance(instance)) == instance


@settings(max_examples=200, deadline=None)
@given(instances())
def test_occurrence_size_pigeonhole(instance):
    params = measure_parameters(instance)
    assert params.occ_t * params.size_t >= len(instance.text)
    assert params.occ_p * params.size_p >= len(instance.pattern)


@st.composite
def instance_witness_pairs(draw):
    instance = draw(instances())
    n = len(instance.text)
    substitution = {}
    for letter in instance.sigma_p.tokens:
        if draw(st.booleans()):
            start = draw(st.integers(0, n - 1))
            ln = draw(st.integers(1, min(2, n - start)))
            substitution[letter] = instance.text[start : start + ln]
    wildcards = {}
    for pos in range(1, len(instance.pattern) + 1):
        if draw(st.booleans()):
            start = draw(st.integers(0, n - 1))
            ln = draw(st.integers(0, min(2, n - start)))
            wildcards[pos] = instance.text[start : start + ln]
    return instance, MatchWitness(substitution, wildcards)


@settings(max_examples=300, deadline=None)
@given(instance_witness_pairs())
def test_verify_agrees_with_manual_condition_check(pair):
    instance, witness = pair
    report = verify_witness(instance, witness)
    b = instance.bounds
    try:
        concat_ok = apply_witness(instance, witness) == instance.text
    except MissingImageError:
        concat_ok = False
    in_pattern = set(instance.pattern)
    checked = [img for c, img in witness.substitution.items() if c in in_pattern]
    expected = (
        concat_ok
        and witness.wildcard_count <= b.wildcard_budget
        and all(
            b.max_letter_image_len is None or len(img) <= b.max_letter_image_len
            for img in witness.substitution.values()
        )
        and all(
            b.max_wildcard_image_len is None or len(img) <= b.max_wildcard_image_len
            for img in witness.wildcards.values()
        )
        and (not instance.variant.injective or len(set(checked)) == len(checked))
        and all(img for img in witness.substitution.values())
        and (
            instance.variant.empty_wildcards_allowed
            or all(img for img in witness.wildcards.values())
        )
    )
    assert report.ok == expected


@settings(max_examples=150, deadline=None)
@given(instance_witness_pairs())
def test_witness_serialization_round_trip(pair):
    instance, witness = pair
    text = serialize_witness(instance, witness)
    parsed = parse_witness(text)
    if any(not img for img in witness.substitution.values()):
        return  # empty letter images are not representable, and are invalid anyway
    assert parsed is not None
    assert dict(parsed.substitution) == dict(witness.substitution)
    assert dict(parsed.wildcards) == dict(witness.wildcards)


def test_nomatch_witness_round_trip():
    instance = inst("x", "a")
    assert parse_witness(serialize_witness(instance, None)) is None


def test_witness_serialization_is_canonical():
    instance = inst("x y", "a b", q=2, empty=True)
    witness = MatchWitness({"b": ("y",), "a": ("x",)}, {2: (), 1: ("x",)})
    text = serialize_witness(instance, witness)
    assert text.splitlines() == ["MATCH", "map a x", "map b y", "wild 1 x", "wild 2"]
