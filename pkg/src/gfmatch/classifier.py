"""Parameter-lattice coverage checker over the seven matching parameters.

A tractability row with parameter set C certifies tractability for every
superset of C (extra parameters are ignored); a hardness row with set S
certifies hardness for every subset of S (dropping parameters keeps the
problem hard).  A table is complete for a problem when each of the 128
parameter subsets is covered by at least one applicable row, and consistent
when no subset is covered by rows of both kinds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .core import GFM, GPM, ParseError

PARAM_NAMES = ("occt", "sigt", "occp", "sigp", "maxfp", "numq", "maxfq")

FPT = "fpt"
W1 = "w1"
PARANP = "paranp"
UNCOVERED = "uncovered"
CONFLICT = "conflict"

_STATUSES = (FPT, W1, PARANP)
_APPLIES = ("both", GFM, GPM)


def parameter_set(names: str | tuple[str, ...] | frozenset[str]) -> frozenset[str]:
    """Build a parameter set from a comma-separated string or an iterable of names."""
    if isinstance(names, str):
        parts = [s for s in names.split(",") if s]
    else:
        parts = list(names)
    for name in parts:
        if name not in PARAM_NAMES:
            raise ParseError(f"unknown parameter {name!r}")
    return frozenset(parts)


def render_parameter_set(params: frozenset[str]) -> str:
    return ",".join(p for p in PARAM_NAMES if p in params) or "-"


@dataclass(frozen=True)
class ComplexityRow:
    """One table row: a parameter set with its status, applicability, and source."""

    status: str
    applies_to: str
    params: frozenset[str]
    source: str = ""

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise ParseError(f"unknown status {self.status!r}")
        if self.applies_to not in _APPLIES:
            raise ParseError(f"unknown applicability {self.applies_to!r}")

    def applies(self, problem: str) -> bool:
        return self.applies_to in ("both", problem)


def builtin_rows() -> list[ComplexityRow]:
    """The built-in fourteen-row table for Max-GFM and Max-GPM.

    The para-NP row over {sigt, occp, maxfp, numq, maxfq} is restricted to the
    plain (gfm) problem: its source result concerns plain function matching,
    and for the injective problem it would contradict the gpm-only
    tractability row over {sigt, maxfp}, which it contains.  The qmark row
    lists occt as well: without it no row covers {occt, sigp, maxfp, maxfq},
    and this table is required to cover all 128 subsets for both problems.
    """
    def row(status: str, applies: str, names: str, source: str) -> ComplexityRow:
        return ComplexityRow(status, applies, parameter_set(names), source)

    return [
        row(FPT, "both", "occt,sigt", "text occurrence-size collapse"),
        row(FPT, "both", "sigt,sigp,maxfp", "substitution enumeration"),
        row(FPT, GPM, "sigt,maxfp", "substitution enumeration (injective image-count collapse)"),
        row(FPT, "both", "occp,sigp,maxfp,maxfq", "anchored candidates (budget from pattern occurrences)"),
        row(FPT, "both", "sigp,maxfp,numq,maxfq", "anchored candidates"),
        row(W1, "both", "occt,occp,sigp,maxfp,numq", "reduction mobile2"),
        row(W1, "both", "occt,occp,sigp,numq,maxfq", "reduction mobile1"),
        row(W1, "both", "occt,occp,maxfp,numq,maxfq", "reduction occtmax"),
        row(W1, "both", "sigt,occp,sigp,numq,maxfq", "FSV13 Thm 2"),
        row(W1, "both", "occp,sigp,maxfp,numq", "reduction qmarksize"),
        row(W1, "both", "occt,sigp,maxfp,maxfq", "reduction qmark"),
        row(PARANP, GFM, "sigt,occp,maxfp,numq,maxfq", "AmirN07 Cor 1"),
        row(PARANP, GFM, "sigt,occp,maxfp", "FernauSchmid13"),
        row(PARANP, GPM, "occp,maxfp", "FernauSchmid13"),
    ]


def classify(
    c: frozenset[str], problem: str, rows: list[ComplexityRow] | None = None
) -> str:
    """Status of parameter set ``c``: fpt, w1, paranp, uncovered, or conflict.

    fpt when some applicable tractability row's set is a subset of ``c``; hard
    when some applicable hardness row's set is a superset of ``c`` (the
    strongest applicable hardness wins: paranp over w1); conflict when both.
    """
    if rows is None:
        rows = builtin_rows()
    fpt = any(r.status == FPT and r.applies(problem) and r.params <= c for r in rows)
    hard: str | None = None
    for r in rows:
        if r.status != FPT and r.applies(problem) and c <= r.params:
            if r.status == PARANP:
                hard = PARANP
            elif hard is None:
                hard = W1
    if fpt and hard:
        return CONFLICT
    if fpt:
        return FPT
    if hard:
        return hard
    return UNCOVERED


@dataclass
class ClassificationReport:
    """Per-subset statuses for one problem, with uncovered and conflicting subsets listed."""

    problem: str
    statuses: dict[frozenset[str], str] = field(default_factory=dict)
    uncovered: list[frozenset[str]] = field(default_factory=list)
    conflicts: list[frozenset[str]] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.statuses)

    @property
    def covered(self) -> int:
        return self.total - len(self.uncovered)

    @property
    def complete(self) -> bool:
        return not self.uncovered and not self.conflicts

    def summary(self) -> str:
        line = f"{self.problem}: {self.covered}/{self.total} covered"
        if self.conflicts:
            line += f", {len(self.conflicts)} conflicts"
        return line


def all_parameter_sets() -> list[frozenset[str]]:
    sets: list[frozenset[str]] = []
    for size in range(len(PARAM_NAMES) + 1):
        for combo in combinations(PARAM_NAMES, size):
            sets.append(frozenset(combo))
    return sets


def check_completeness(problem: str, rows: list[ComplexityRow] | None = None) -> ClassificationReport:
    """Classify all 128 parameter subsets for one problem."""
    if rows is None:
        rows = builtin_rows()
    report = ClassificationReport(problem)
    for c in all_parameter_sets():
        status = classify(c, problem, rows)
        report.statuses[c] = status
        if status == UNCOVERED:
            report.uncovered.append(c)
        elif status == CONFLICT:
            report.conflicts.append(c)
    return report


# ---------------------------------------------------------------------------
# row file format: `row <fpt|w1|paranp> <gfm|gpm|both> <param>[,<param>...] <citation>`


def load_rows(source) -> list[ComplexityRow]:
    text = source.read() if hasattr(source, "read") else source
    rows: list[ComplexityRow] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] != "row" or len(fields) < 3:
            raise ParseError("expected `row <status> <problem> <params> <citation>`", lineno)
        status, applies = fields[1], fields[2]
        if len(fields) < 4:
            raise ParseError("row is missing its parameter list", lineno)
        try:
            params = parameter_set(fields[3])
            rows.append(ComplexityRow(status, applies, params, " ".join(fields[4:])))
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
    return rows


def serialize_rows(rows: list[ComplexityRow]) -> str:
    lines = [
        f"row {r.status} {r.applies_to} {render_parameter_set(r.params)} {r.source}".rstrip()
        for r in rows
    ]
    return "\n".join(lines) + "\n"
