"""Cyclic configurations of merged Z-periodic point sets.

A configuration records, within one period of the line, the linear order
of the points of n Z-periodic sets: a cyclic word over {0..n-1} in which
letter i occurs once per point of the i-th set.  Two configurations are
equal when one is a rotation of the other; the canonical representative
is the lexicographically least rotation.

Textual syntax: a string over a-z, e.g. ``xyxy``; the i-th distinct
letter by first appearance is letter i.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidArgument, ParseError

# Display alphabet starts at 'x' so two-letter configs render as x, y.
_ALPHABET = "xyzabcdefghijklmnopqrstuvw"


def _least_rotation(pattern: tuple[int, ...]) -> tuple[int, ...]:
    return min(pattern[k:] + pattern[:k] for k in range(len(pattern)))


@dataclass(frozen=True)
class ZPeriodicConfig:
    """Canonical cyclic word recording one period of merged point sets."""

    pattern: tuple[int, ...]
    arity: int = field(compare=False)

    def __post_init__(self):
        if not self.pattern:
            raise InvalidArgument("configuration must be nonempty")
        if min(self.pattern) < 0 or max(self.pattern) >= self.arity:
            raise InvalidArgument("pattern letter out of range")
        counts = self.counts
        for letter in range(self.arity):
            if counts[letter] == 0:
                raise InvalidArgument(f"letter {letter} does not occur")
        canonical = _least_rotation(self.pattern)
        if canonical != self.pattern:
            object.__setattr__(self, "pattern", canonical)

    @classmethod
    def from_string(cls, text: str) -> "ZPeriodicConfig":
        text = text.strip()
        if not text:
            raise ParseError("empty configuration")
        seen: dict[str, int] = {}
        pattern = []
        for char in text:
            if not ("a" <= char <= "z"):
                raise ParseError(f"bad character {char!r} in configuration {text!r}")
            if char not in seen:
                seen[char] = len(seen)
            pattern.append(seen[char])
        return cls(tuple(pattern), len(seen))

    @property
    def size(self) -> int:
        """Number of points per period, N."""
        return len(self.pattern)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(self.pattern.count(letter) for letter in range(self.arity))

    def positions(self, letter: int) -> tuple[int, ...]:
        """Indices of the given letter inside the fundamental period."""
        if not 0 <= letter < self.arity:
            raise InvalidArgument(f"letter {letter} out of range")
        return tuple(i for i, item in enumerate(self.pattern) if item == letter)

    def __str__(self):
        return "".join(
            _ALPHABET[letter] if letter < 26 else f"<{letter}>" for letter in self.pattern
        )


def _multiset_permutations(counts: list[int]):
    """Yield all distinct sequences using each letter i counts[i] times."""
    total = sum(counts)
    sequence: list[int] = []

    def extend():
        if len(sequence) == total:
            yield tuple(sequence)
            return
        for letter, remaining in enumerate(counts):
            if remaining:
                counts[letter] -= 1
                sequence.append(letter)
                yield from extend()
                sequence.pop()
                counts[letter] += 1

    yield from extend()


def enumerate_configs(*counts: int) -> list[ZPeriodicConfig]:
    """All configurations with the given letter multiplicities.

    Returns canonical representatives of every cyclic word over
    {0..n-1} in which letter i occurs exactly counts[i] times,
    deduplicated by rotation only (reflections are distinct: they
    reverse the circle's orientation) and sorted.
    """
    if not counts:
        raise InvalidArgument("at least one letter is required")
    for q in counts:
        if q < 1:
            raise InvalidArgument("letter multiplicities must be >= 1")
    arity = len(counts)
    # Every canonical rotation starts with letter 0, so pin it and
    # permute the remaining multiset.
    remaining = list(counts)
    remaining[0] -= 1
    patterns = {
        _least_rotation((0,) + tail) for tail in _multiset_permutations(remaining)
    }
    return [ZPeriodicConfig(pattern, arity) for pattern in sorted(patterns)]
