"""Built-in table rows, classification semantics, 128-subset coverage."""

import dataclasses

import pytest

from gfmatch.classifier import (
    CONFLICT,
    FPT,
    PARANP,
    UNCOVERED,
    W1,
    all_parameter_sets,
    builtin_rows,
    check_completeness,
    classify,
    load_rows,
    parameter_set,
    render_parameter_set,
    serialize_rows,
)
from gfmatch.core import ParseError


class TestBuiltinRows:
    def test_row_count(self):
        assert len(builtin_rows()) == 14

    def test_fpt_occt_sigt_row_present(self):
        assert any(
            r.status == FPT and r.params == parameter_set("occt,sigt") and r.applies_to == "both"
            for r in builtin_rows()
        )

    def test_applicability_annotations(self):
        rows = builtin_rows()
        assert sum(1 for r in rows if r.applies_to == "gpm" and r.status == FPT) == 1
        assert sum(1 for r in rows if r.applies_to == "gpm" and r.status == PARANP) == 1
        # the para-NP row contained in no tractable set is gfm-only; so is the
        # row that would otherwise conflict with the gpm-only tractable row
        assert sum(1 for r in rows if r.applies_to == "gfm" and r.status == PARANP) == 2

    def test_status_split(self):
        rows = builtin_rows()
        assert sum(1 for r in rows if r.status == FPT) == 5
        assert sum(1 for r in rows if r.status == W1) == 6
        assert sum(1 for r in rows if r.status == PARANP) == 3


class TestClassify:
    def test_full_parameter_set_is_fpt(self):
        c = parameter_set(",".join(n for n in ("occt", "sigt", "occp", "sigp", "maxfp", "numq", "maxfq")))
        assert classify(c, "gfm") == FPT

    def test_empty_set_is_paranp_hard(self):
        assert classify(frozenset(), "gfm") == PARANP
        assert classify(frozenset(), "gpm") == PARANP

    def test_sigt_maxfp_split_between_problems(self):
        c = parameter_set("sigt,maxfp")
        assert classify(c, "gpm") == FPT
        assert classify(c, "gfm") in (W1, PARANP)

    def test_strongest_hardness_wins(self):
        c = parameter_set("occp,maxfp")
        assert classify(c, "gpm") == PARANP


class TestCompleteness:
    def test_both_problems_fully_covered(self):
        for problem in ("gfm", "gpm"):
            report = check_completeness(problem)
            assert report.total == 128
            assert report.covered == 128
            assert not report.conflicts
            assert report.summary() == f"{problem}: 128/128 covered"

    def test_removing_occt_sigt_row_uncovers_it(self):
        rows = [r for r in builtin_rows() if r.params != parameter_set("occt,sigt")]
        report = check_completeness("gfm", rows)
        assert parameter_set("occt,sigt") in report.uncovered

    def test_removing_any_single_row_never_conflicts(self):
        rows = builtin_rows()
        for i in range(len(rows)):
            remaining = rows[:i] + rows[i + 1 :]
            for problem in ("gfm", "gpm"):
                report = check_completeness(problem, remaining)
                assert not report.conflicts

    def test_no_fpt_row_inside_a_hardness_row(self):
        rows = builtin_rows()
        for problem in ("gfm", "gpm"):
            fpt_rows = [r for r in rows if r.status == FPT and r.applies(problem)]
            hard_rows = [r for r in rows if r.status != FPT and r.applies(problem)]
            for fr in fpt_rows:
                for hr in hard_rows:
                    assert not fr.params <= hr.params

    def test_monotone_closure(self):
        report = check_completeness("gfm")
        for c, status in report.statuses.items():
            for extra in ("occt", "sigt", "numq"):
                superset = c | {extra}
                if status == FPT:
                    assert report.statuses[superset] == FPT
            if status in (W1, PARANP):
                for name in list(c):
                    subset = c - {name}
                    assert report.statuses[subset] in (W1, PARANP)

    def test_conflict_status_reported(self):
        rows = builtin_rows() + [
            dataclasses.replace(builtin_rows()[0], status=PARANP, params=frozenset({"occt", "sigt", "occp"}))
        ]
        assert classify(parameter_set("occt,sigt"), "gfm", rows) == CONFLICT
        report = check_completeness("gfm", rows)
        assert report.conflicts


class TestRowFiles:
    def test_round_trip(self):
        rows = builtin_rows()
        assert load_rows(serialize_rows(rows)) == rows

    def test_uncovering_edit_detected_via_file(self):
        rows = load_rows(serialize_rows(builtin_rows()))
        rows = [r for r in rows if r.params != parameter_set("sigp,maxfp,numq,maxfq")]
        report = check_completeness("gfm", rows)
        assert not report.complete

    def test_bad_parameter_name_rejected(self):
        with pytest.raises(ParseError):
            load_rows("row fpt both occt,bogus test\n")

    def test_bad_status_rejected(self):
        with pytest.raises(ParseError):
            load_rows("row maybe both occt test\n")


def test_all_parameter_sets_has_128_entries():
    sets = all_parameter_sets()
    assert len(sets) == 128
    assert len(set(sets)) == 128


def test_render_orders_canonically():
    assert render_parameter_set(parameter_set("maxfq,occt")) == "occt,maxfq"
    assert render_parameter_set(frozenset()) == "-"
