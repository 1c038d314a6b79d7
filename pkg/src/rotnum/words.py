"""Finite words in n letters, with optional formal inverses.

Textual syntax: lowercase letters concatenated, with a trailing apostrophe
marking an inverse, e.g. ``fgffg`` or ``fgf'g'``.  Letter identity is
positional: the i-th distinct letter by first appearance is letter i.
A word is *positive* when no inverse occurs; the monotone-map engine and
the extremal functions only accept positive words.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidArgument, ParseError

# Display alphabet starts at 'f' so two-letter words render as f, g.
_ALPHABET = "fghijklmnopqrstuvwxyzabcde"


@dataclass(frozen=True)
class Word:
    """A nonempty word: a sequence of (letter index, exponent +/-1) pairs."""

    letters: tuple[tuple[int, int], ...]
    arity: int

    def __post_init__(self):
        if not self.letters:
            raise InvalidArgument("word must be nonempty")
        if self.arity < 1:
            raise InvalidArgument("arity must be >= 1")
        for index, exponent in self.letters:
            if not 0 <= index < self.arity:
                raise InvalidArgument(f"letter index {index} out of range")
            if exponent not in (1, -1):
                raise InvalidArgument("exponent must be +1 or -1")

    @classmethod
    def from_string(cls, text: str, arity: int | None = None) -> "Word":
        """Parse ``fgf'g'`` syntax; letters are numbered by first appearance."""
        text = text.strip()
        if not text:
            raise ParseError("empty word")
        seen: dict[str, int] = {}
        letters: list[tuple[int, int]] = []
        i = 0
        while i < len(text):
            char = text[i]
            if not ("a" <= char <= "z"):
                raise ParseError(f"bad character {char!r} in word {text!r}")
            if char not in seen:
                seen[char] = len(seen)
            i += 1
            exponent = 1
            if i < len(text) and text[i] == "'":
                exponent = -1
                i += 1
            letters.append((seen[char], exponent))
        n = arity if arity is not None else len(seen)
        if len(seen) > n:
            raise ParseError(f"word {text!r} uses more than {n} letters")
        return cls(tuple(letters), n)

    @property
    def is_positive(self) -> bool:
        return all(exponent == 1 for _, exponent in self.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        parts = []
        for index, exponent in self.letters:
            parts.append(_ALPHABET[index] if index < 26 else f"<{index}>")
            if exponent == -1:
                parts.append("'")
        return "".join(parts)

    def cycled(self, shift: int) -> "Word":
        """Cyclic permutation moving the first ``shift`` letters to the end."""
        shift %= len(self.letters)
        return Word(self.letters[shift:] + self.letters[:shift], self.arity)

    def repeated(self, n: int) -> "Word":
        if n < 1:
            raise InvalidArgument("repetition count must be >= 1")
        return Word(self.letters * n, self.arity)

    def used_letters(self) -> tuple[int, ...]:
        return tuple(sorted({index for index, _ in self.letters}))
