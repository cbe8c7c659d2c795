"""Partial rankings with ties, participant universes, and their text form.

A ranking is written left to right from most to least expert::

    [8]>[6, 13]>[16]>[14]>[10]

Each rank is either a bare token or a bracketed, comma-separated group of
tied participants. Participants left out of a ranking are simply absent.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

__all__ = [
    "Coverage",
    "ParseError",
    "Ranking",
    "Universe",
    "ValidationError",
    "canonical_order",
    "check_token",
    "coverage",
    "format_ranking",
    "parse_ranking",
    "parse_universe",
    "validate_against_universe",
]

_FORBIDDEN = frozenset(">[],")


class ParseError(ValueError):
    """Malformed ranking or universe text."""

    def __init__(self, message: str, position: int | None = None) -> None:
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ValidationError(ValueError):
    """A ranking refers to participants outside its universe, or is ill-formed."""


def check_token(token: str) -> str:
    if not isinstance(token, str) or not token:
        raise ValidationError(f"participant token must be a non-empty string, got {token!r}")
    if any(ch.isspace() or ch in _FORBIDDEN for ch in token):
        raise ValidationError(f"invalid participant token {token!r}")
    return token


def canonical_order(tokens: Iterable[str]) -> list[str]:
    """Sort tokens numerically when they are all decimal integers, else lexicographically."""
    tokens = list(tokens)
    if tokens and all(t.isdecimal() for t in tokens):
        return sorted(tokens, key=lambda t: (int(t), t))
    return sorted(tokens)


@dataclass(frozen=True)
class Ranking:
    """Ordered rank-sets, index 0 holding the most expert participants."""

    ranks: tuple[frozenset[str], ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, ranks: Iterable[Iterable[str]]) -> None:
        frozen = tuple(frozenset(rank) for rank in ranks)
        if not frozen:
            raise ValidationError("a ranking needs at least one rank")
        index: dict[str, int] = {}
        for i, rank in enumerate(frozen):
            if not rank:
                raise ValidationError(f"rank {i} is empty")
            for token in rank:
                check_token(token)
                if token in index:
                    raise ValidationError(f"participant {token} appears in more than one rank")
                index[token] = i
        object.__setattr__(self, "ranks", frozen)
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.ranks)

    def __iter__(self) -> Iterator[frozenset[str]]:
        return iter(self.ranks)

    def __contains__(self, token: object) -> bool:
        return token in self._index

    def __str__(self) -> str:
        return format_ranking(self)

    @property
    def participants(self) -> frozenset[str]:
        return frozenset(self._index)

    def rank_of(self, token: str) -> int | None:
        """0-based rank index of ``token``, or None when it is not ranked."""
        return self._index.get(token)

    def reversed(self) -> Ranking:
        return Ranking(reversed(self.ranks))


@dataclass(frozen=True)
class Universe:
    """The full participant set a family of rankings ranges over.

    ``members`` is kept in canonical order, which also fixes the orientation
    of every unordered pair drawn from the universe.
    """

    members: tuple[str, ...]

    def __init__(self, members: Iterable[str]) -> None:
        members = list(members)
        if not members:
            raise ValidationError("a universe needs at least one participant")
        seen: set[str] = set()
        for token in members:
            check_token(token)
            if token in seen:
                raise ValidationError(f"duplicate participant {token} in universe")
            seen.add(token)
        object.__setattr__(self, "members", tuple(canonical_order(members)))

    @classmethod
    def from_rankings(cls, rankings: Iterable[Ranking]) -> Universe:
        union: set[str] = set()
        for r in rankings:
            union |= r.participants
        return cls(union)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[str]:
        return iter(self.members)

    def __contains__(self, token: object) -> bool:
        return token in self.members


def _skip_spaces(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _read_token(text: str, pos: int) -> tuple[str, int]:
    start = pos
    while pos < len(text) and not text[pos].isspace() and text[pos] not in _FORBIDDEN:
        pos += 1
    if pos == start:
        found = repr(text[pos]) if pos < len(text) else "end of input"
        raise ParseError(f"expected a participant token, found {found}", start)
    return text[start:pos], pos


def parse_ranking(text: str) -> Ranking:
    """Parse one line of ranking text.

    Raises:
        ParseError: on empty input, comment lines, empty or unbalanced
            brackets, or a participant listed twice.
    """
    line = text.strip("\r\n")
    if not line.strip():
        raise ParseError("empty ranking")
    if line.lstrip().startswith("#"):
        raise ParseError("comment line is not a ranking", line.index("#"))

    ranks: list[list[str]] = []
    seen: dict[str, int] = {}
    pos = 0
    while True:
        pos = _skip_spaces(line, pos)
        rank_start = pos
        rank: list[str] = []
        if pos < len(line) and line[pos] == "[":
            pos = _skip_spaces(line, pos + 1)
            if pos < len(line) and line[pos] == "]":
                raise ParseError("empty rank '[]'", rank_start)
            while True:
                pos = _skip_spaces(line, pos)
                token_pos = pos
                token, pos = _read_token(line, pos)
                if token in seen:
                    raise ParseError(f"duplicate participant {token}", token_pos)
                seen[token] = token_pos
                rank.append(token)
                pos = _skip_spaces(line, pos)
                if pos >= len(line):
                    raise ParseError("unclosed '['", rank_start)
                if line[pos] == ",":
                    pos += 1
                elif line[pos] == "]":
                    pos += 1
                    break
                else:
                    raise ParseError(f"unexpected {line[pos]!r} inside rank", pos)
        else:
            token_pos = pos
            token, pos = _read_token(line, pos)
            if token in seen:
                raise ParseError(f"duplicate participant {token}", token_pos)
            seen[token] = token_pos
            rank.append(token)
        ranks.append(rank)

        pos = _skip_spaces(line, pos)
        if pos >= len(line):
            break
        if line[pos] != ">":
            raise ParseError(f"expected '>' between ranks, found {line[pos]!r}", pos)
        pos += 1
        if _skip_spaces(line, pos) >= len(line):
            raise ParseError("dangling '>' at end of ranking", pos - 1)

    return Ranking(ranks)


def format_ranking(r: Ranking) -> str:
    return ">".join("[" + ", ".join(canonical_order(rank)) + "]" for rank in r.ranks)


def parse_universe(text: str) -> Universe:
    """Read a universe: tokens separated by commas and/or whitespace, ``#`` comments."""
    tokens: list[str] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        for chunk in line.replace(",", " ").split():
            tokens.append(chunk)
    if not tokens:
        raise ParseError("universe lists no participants")
    try:
        return Universe(tokens)
    except ValidationError as err:
        raise ParseError(str(err)) from err


@dataclass(frozen=True)
class Coverage:
    missing: frozenset[str]
    extraneous: frozenset[str]

    @property
    def complete(self) -> bool:
        return not self.missing and not self.extraneous


def coverage(r: Ranking, u: Universe) -> Coverage:
    members = frozenset(u.members)
    return Coverage(missing=members - r.participants, extraneous=r.participants - members)


def validate_against_universe(r: Ranking, u: Universe) -> Coverage:
    """Check that ``r`` only ranks members of ``u``.

    Missing participants are legal and only reported; participants outside
    the universe raise ValidationError.
    """
    cov = coverage(r, u)
    if cov.extraneous:
        outside = ", ".join(canonical_order(cov.extraneous))
        raise ValidationError(f"ranking {format_ranking(r)} has participants outside the universe: {outside}")
    return cov
