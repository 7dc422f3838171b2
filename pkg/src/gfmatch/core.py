"""Domain types, instance/witness file formats, witness checking, parameter measurement.

A match instance pairs a text and a pattern, both sequences of whitespace-free
tokens ("letters").  A witness maps pattern letters to non-empty token strings
and may additionally replace up to ``wildcard_budget`` pattern positions with
per-position wildcard images.  Applying a witness concatenates, position by
position, either the wildcard image or the letter's image; the witness is valid
when the result equals the text and all side conditions (budget, length bounds,
injectivity for the parameterized variant) hold.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

GFM = "gfm"
GPM = "gpm"

TokenStr = tuple[str, ...]


class GfmError(Exception):
    """Base class for errors raised by this package."""


class ParseError(GfmError):
    """Malformed instance, witness, graph, or row file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class MissingImageError(GfmError):
    """A non-wildcarded pattern letter has no image in the substitution."""


class InvalidInstanceError(GfmError):
    """Instance components violate a structural invariant."""


def tokens(s: str) -> TokenStr:
    """Split a whitespace-separated token string into a TokenStr."""
    return tuple(s.split())


@dataclass(frozen=True)
class Letter:
    """One alphabet symbol: a dense id plus its display token."""

    id: int
    display: str


class Alphabet:
    """Ordered set of letters with unique, whitespace-free display tokens."""

    __slots__ = ("letters", "_index")

    def __init__(self, toks: Iterable[str]):
        seq = tuple(toks)
        index: dict[str, int] = {}
        for i, tok in enumerate(seq):
            if not tok or any(ch.isspace() for ch in tok):
                raise InvalidInstanceError(f"invalid letter token {tok!r}")
            if tok in index:
                raise InvalidInstanceError(f"duplicate letter token {tok!r}")
            index[tok] = i
        self.letters: tuple[Letter, ...] = tuple(
            Letter(i, tok) for i, tok in enumerate(seq)
        )
        self._index = index

    @property
    def tokens(self) -> tuple[str, ...]:
        return tuple(l.display for l in self.letters)

    def __contains__(self, tok: object) -> bool:
        return tok in self._index

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def id_of(self, tok: str) -> int:
        try:
            return self._index[tok]
        except KeyError:
            raise GfmError(f"letter {tok!r} not in alphabet") from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self.tokens == other.tokens

    def __hash__(self) -> int:
        return hash(self.tokens)

    def __repr__(self) -> str:
        return f"Alphabet({list(self.tokens)!r})"


@dataclass(frozen=True)
class ProblemVariant:
    """Problem flavour: plain (gfm) or injective (gpm), with or without empty wildcard images."""

    kind: str = GFM
    empty_wildcards_allowed: bool = False

    def __post_init__(self):
        if self.kind not in (GFM, GPM):
            raise InvalidInstanceError(f"unknown variant kind {self.kind!r}")

    @property
    def injective(self) -> bool:
        return self.kind == GPM


@dataclass(frozen=True)
class Bounds:
    """Image-length bounds and the wildcard budget.  ``None`` means unbounded."""

    max_letter_image_len: int | None = None
    max_wildcard_image_len: int | None = None
    wildcard_budget: int = 0

    def __post_init__(self):
        for name in ("max_letter_image_len", "max_wildcard_image_len"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise InvalidInstanceError(f"{name} must be positive or unbounded")
        if self.wildcard_budget < 0:
            raise InvalidInstanceError("wildcard_budget must be non-negative")


@dataclass(frozen=True)
class Instance:
    """A matching instance: text and pattern over their alphabets, plus variant and bounds."""

    text: TokenStr
    pattern: TokenStr
    sigma_t: Alphabet
    sigma_p: Alphabet
    variant: ProblemVariant = ProblemVariant()
    bounds: Bounds = Bounds()

    def __post_init__(self):
        if not self.text:
            raise InvalidInstanceError("text must be non-empty")
        if not self.pattern:
            raise InvalidInstanceError("pattern must be non-empty")
        for tok in self.text:
            if tok not in self.sigma_t:
                raise InvalidInstanceError(f"text letter {tok!r} not in sigma_t")
        for tok in self.pattern:
            if tok not in self.sigma_p:
                raise InvalidInstanceError(f"pattern letter {tok!r} not in sigma_p")


def make_instance(
    text: str | TokenStr,
    pattern: str | TokenStr,
    *,
    kind: str = GFM,
    empty_wildcards: bool = False,
    max_letter_len: int | None = None,
    max_wildcard_len: int | None = None,
    wildcards: int = 0,
    sigma_t: Iterable[str] | None = None,
    sigma_p: Iterable[str] | None = None,
) -> Instance:
    """Convenience constructor; alphabets default to the letters that occur."""
    t = tokens(text) if isinstance(text, str) else tuple(text)
    p = tokens(pattern) if isinstance(pattern, str) else tuple(pattern)
    st = Alphabet(_first_occurrence_order(t) if sigma_t is None else sigma_t)
    sp = Alphabet(_first_occurrence_order(p) if sigma_p is None else sigma_p)
    return Instance(
        t,
        p,
        st,
        sp,
        ProblemVariant(kind, empty_wildcards),
        Bounds(max_letter_len, max_wildcard_len, wildcards),
    )


def _first_occurrence_order(seq: Iterable[str]) -> list[str]:
    seen: dict[str, None] = {}
    for tok in seq:
        seen.setdefault(tok)
    return list(seen)


@dataclass(frozen=True)
class MatchWitness:
    """A substitution plus per-position wildcard images (positions are 1-based)."""

    substitution: Mapping[str, TokenStr] = field(default_factory=dict)
    wildcards: Mapping[int, TokenStr] = field(default_factory=dict)

    @property
    def wildcard_count(self) -> int:
        return len(self.wildcards)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of witness verification; ``failure`` names the first violated constraint."""

    ok: bool
    failure: str | None = None
    detail: str = ""


@dataclass(frozen=True)
class InstanceParameters:
    """The seven measured/declared parameters of an instance."""

    occ_t: int
    size_t: int
    occ_p: int
    size_p: int
    max_letter_image_len: int | None
    wildcard_budget: int
    max_wildcard_image_len: int | None

    def as_dict(self) -> dict[str, int | None]:
        return {
            "occt": self.occ_t,
            "sigt": self.size_t,
            "occp": self.occ_p,
            "sigp": self.size_p,
            "maxfp": self.max_letter_image_len,
            "numq": self.wildcard_budget,
            "maxfq": self.max_wildcard_image_len,
        }


# ---------------------------------------------------------------------------
# instance file format


_INSTANCE_KEYS = (
    "variant",
    "allow_empty_wildcard",
    "wildcards",
    "max_letter_len",
    "max_wildcard_len",
    "text",
    "pattern",
    "sigma_t",
    "sigma_p",
)


def _iter_lines(source) -> Iterator[tuple[int, list[str]]]:
    text = source.read() if hasattr(source, "read") else source
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        # '#' starts a comment only at the head of a line; '#' is an ordinary
        # letter inside token lists such as `text`/`pattern`.
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _parse_len(value: str, lineno: int, key: str) -> int | None:
    if value == "inf":
        return None
    try:
        n = int(value)
    except ValueError:
        raise ParseError(f"{key} expects an integer or 'inf', got {value!r}", lineno)
    if n < 1:
        raise ParseError(f"{key} must be positive or 'inf'", lineno)
    return n


def parse_instance(source) -> Instance:
    """Parse an instance from a string or text stream in the line-based key/value format."""
    seen: dict[str, tuple[int, list[str]]] = {}
    for lineno, fields in _iter_lines(source):
        key, values = fields[0], fields[1:]
        if key not in _INSTANCE_KEYS:
            raise ParseError(f"unknown key {key!r}", lineno)
        if key in seen:
            raise ParseError(f"duplicate key {key!r}", lineno)
        seen[key] = (lineno, values)

    def single(key: str) -> tuple[int, str] | None:
        if key not in seen:
            return None
        lineno, values = seen[key]
        if len(values) != 1:
            raise ParseError(f"{key} expects exactly one value", lineno)
        return lineno, values[0]

    kind = GFM
    if (got := single("variant")) is not None:
        lineno, value = got
        if value not in (GFM, GPM):
            raise ParseError(f"variant must be gfm or gpm, got {value!r}", lineno)
        kind = value

    empty = False
    if (got := single("allow_empty_wildcard")) is not None:
        lineno, value = got
        if value not in ("0", "1"):
            raise ParseError("allow_empty_wildcard must be 0 or 1", lineno)
        empty = value == "1"

    budget = 0
    if (got := single("wildcards")) is not None:
        lineno, value = got
        try:
            budget = int(value)
        except ValueError:
            raise ParseError(f"wildcards expects an integer, got {value!r}", lineno)
        if budget < 0:
            raise ParseError("wildcards must be non-negative", lineno)

    max_letter = None
    if (got := single("max_letter_len")) is not None:
        max_letter = _parse_len(got[1], got[0], "max_letter_len")
    max_wild = None
    if (got := single("max_wildcard_len")) is not None:
        max_wild = _parse_len(got[1], got[0], "max_wildcard_len")

    for key in ("text", "pattern"):
        if key not in seen:
            raise ParseError(f"missing {key!r} line", len(seen) + 1 if seen else 1)
        if not seen[key][1]:
            raise ParseError(f"{key} must list at least one token", seen[key][0])

    t = tuple(seen["text"][1])
    p = tuple(seen["pattern"][1])

    def alphabet(key: str, used: TokenStr, other: str) -> Alphabet:
        if key in seen:
            lineno, toks = seen[key]
            try:
                alpha = Alphabet(toks)
            except InvalidInstanceError as exc:
                raise ParseError(str(exc), lineno) from None
            for tok in used:
                if tok not in alpha:
                    hint = " (declared in the other alphabet only)" if other in seen and tok in seen[other][1] else ""
                    raise ParseError(f"token {tok!r} not declared in {key}{hint}", lineno)
            return alpha
        return Alphabet(_first_occurrence_order(used))

    sigma_t = alphabet("sigma_t", t, "sigma_p")
    sigma_p = alphabet("sigma_p", p, "sigma_t")
    return Instance(t, p, sigma_t, sigma_p, ProblemVariant(kind, empty), Bounds(max_letter, max_wild, budget))


def serialize_instance(instance: Instance) -> str:
    """Render an instance in the file format; ``parse_instance`` inverts this exactly."""
    b = instance.bounds
    lines = [
        f"variant {instance.variant.kind}",
        f"allow_empty_wildcard {1 if instance.variant.empty_wildcards_allowed else 0}",
        f"wildcards {b.wildcard_budget}",
        f"max_letter_len {'inf' if b.max_letter_image_len is None else b.max_letter_image_len}",
        f"max_wildcard_len {'inf' if b.max_wildcard_image_len is None else b.max_wildcard_image_len}",
        "text " + " ".join(instance.text),
        "pattern " + " ".join(instance.pattern),
        "sigma_t " + " ".join(instance.sigma_t.tokens),
        "sigma_p " + " ".join(instance.sigma_p.tokens),
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# witness file format


def parse_witness(source) -> MatchWitness | None:
    """Parse a witness file; returns None for a NOMATCH file."""
    rows = list(_iter_lines(source))
    if not rows:
        raise ParseError("empty witness file", 1)
    lineno, head = rows[0]
    if head == ["NOMATCH"]:
        if len(rows) > 1:
            raise ParseError("NOMATCH must be the only line", rows[1][0])
        return None
    if head != ["MATCH"]:
        raise ParseError("witness must start with MATCH or NOMATCH", lineno)
    substitution: dict[str, TokenStr] = {}
    wildcards: dict[int, TokenStr] = {}
    for lineno, fields in rows[1:]:
        key, values = fields[0], fields[1:]
        if key == "map":
            if len(values) < 2:
                raise ParseError("map expects a letter and a non-empty image", lineno)
            letter = values[0]
            if letter in substitution:
                raise ParseError(f"duplicate map for letter {letter!r}", lineno)
            substitution[letter] = tuple(values[1:])
        elif key == "wild":
            if not values:
                raise ParseError("wild expects a position", lineno)
            try:
                pos = int(values[0])
            except ValueError:
                raise ParseError(f"wild expects an integer position, got {values[0]!r}", lineno)
            if pos in wildcards:
                raise ParseError(f"duplicate wildcard position {pos}", lineno)
            wildcards[pos] = tuple(values[1:])
        else:
            raise ParseError(f"unknown key {key!r}", lineno)
    return MatchWitness(substitution, wildcards)


def serialize_witness(instance: Instance, witness: MatchWitness | None) -> str:
    """Canonical witness rendering: map lines by letter id, wild lines by position."""
    if witness is None:
        return "NOMATCH\n"
    lines = ["MATCH"]
    by_id = sorted(witness.substitution, key=instance.sigma_p.id_of)
    for letter in by_id:
        lines.append(f"map {letter} " + " ".join(witness.substitution[letter]))
    for pos in sorted(witness.wildcards):
        image = witness.wildcards[pos]
        lines.append(f"wild {pos}" + ("" if not image else " " + " ".join(image)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# witness application and verification


def apply_witness(instance: Instance, witness: MatchWitness) -> TokenStr:
    """Concatenate images in pattern order: wildcard images at wildcarded positions, f(p_i) elsewhere."""
    out: list[str] = []
    for pos, letter in enumerate(instance.pattern, start=1):
        if pos in witness.wildcards:
            out.extend(witness.wildcards[pos])
        else:
            image = witness.substitution.get(letter)
            if image is None:
                raise MissingImageError(f"no image for pattern letter {letter!r} at position {pos}")
            out.extend(image)
    return tuple(out)


def _first_mismatch(a: TokenStr, b: TokenStr) -> int:
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i
    return min(len(a), len(b))


def verify_witness(
    instance: Instance,
    witness: MatchWitness,
    *,
    strict_wildcard_injectivity: bool = False,
) -> VerificationReport:
    """Check a witness; on failure report the first violated constraint.

    Checks, in order: concatenation equals the text; wildcard count within
    budget; image length bounds; injectivity (gpm only; extended to wildcard
    images when ``strict_wildcard_injectivity``); no empty image where
    forbidden.  Wildcard images never take part in the default injectivity
    check, which inspects only the letter substitution.
    """
    m = len(instance.pattern)
    for pos in witness.wildcards:
        if not 1 <= pos <= m:
            return VerificationReport(False, "wildcard-position", f"position {pos} outside 1..{m}")
    try:
        produced = apply_witness(instance, witness)
    except MissingImageError as exc:
        return VerificationReport(False, "missing-image", str(exc))
    if produced != instance.text:
        off = _first_mismatch(produced, instance.text)
        return VerificationReport(False, "concatenation", f"concatenation mismatch at text offset {off}")
    b = instance.bounds
    if witness.wildcard_count > b.wildcard_budget:
        return VerificationReport(
            False, "budget", f"{witness.wildcard_count} wildcards used, budget is {b.wildcard_budget}"
        )
    if b.max_letter_image_len is not None:
        for letter, image in witness.substitution.items():
            if len(image) > b.max_letter_image_len:
                return VerificationReport(
                    False, "letter-image-length",
                    f"image of {letter!r} has length {len(image)} > {b.max_letter_image_len}",
                )
    if b.max_wildcard_image_len is not None:
        for pos, image in witness.wildcards.items():
            if len(image) > b.max_wildcard_image_len:
                return VerificationReport(
                    False, "wildcard-image-length",
                    f"wildcard image at position {pos} has length {len(image)} > {b.max_wildcard_image_len}",
                )
    if instance.variant.injective:
        in_pattern = set(instance.pattern)
        images: dict[TokenStr, str] = {}
        for letter in sorted(witness.substitution, key=instance.sigma_p.id_of):
            if letter not in in_pattern:
                continue
            image = witness.substitution[letter]
            if image in images:
                return VerificationReport(
                    False, "injectivity",
                    f"letters {images[image]!r} and {letter!r} share the image {' '.join(image)!r}",
                )
            images[image] = letter
        if strict_wildcard_injectivity:
            for pos in sorted(witness.wildcards):
                image = witness.wildcards[pos]
                if image in images:
                    return VerificationReport(
                        False, "injectivity",
                        f"wildcard at position {pos} shares the image of {images[image]!r}",
                    )
                images[image] = f"?{pos}"
    for letter, image in witness.substitution.items():
        if not image:
            return VerificationReport(False, "empty-image", f"empty image for letter {letter!r}")
    if not instance.variant.empty_wildcards_allowed:
        for pos in sorted(witness.wildcards):
            if not witness.wildcards[pos]:
                return VerificationReport(
                    False, "empty-image",
                    f"empty wildcard image at position {pos} (allow_empty_wildcard is 0)",
                )
    return VerificationReport(True)


def measure_parameters(instance: Instance) -> InstanceParameters:
    """Compute occurrence/size parameters by counting; copy bounds (unbounded stays None)."""
    ct = Counter(instance.text)
    cp = Counter(instance.pattern)
    b = instance.bounds
    return InstanceParameters(
        occ_t=max(ct.values()),
        size_t=len(ct),
        occ_p=max(cp.values()),
        size_p=len(cp),
        max_letter_image_len=b.max_letter_image_len,
        wildcard_budget=b.wildcard_budget,
        max_wildcard_image_len=b.max_wildcard_image_len,
    )
