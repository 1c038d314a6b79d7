"""Maximal monotone maps on combinatorial point configurations.

A Z-periodic set X of cardinality q, together with a target rotation
number p/q, determines the *maximal* monotone map fixing X as a periodic
orbit: each point of the line is sent to the least X-point at or above
it, advanced p further positions along X.  Words in such maps have
rational rotation numbers that can be read off from a finite orbit
computation, and they maximize the rotation number over all monotone
maps (or circle homeomorphisms) with the same periodic data.

Everything here is purely combinatorial: a point is an (index, translate)
pair locating it inside a translated copy of the fundamental period, and
no real coordinates are ever materialized.  ``realize_max_map`` produces
an exact real-coordinate evaluator for cross-checks only.
"""

from __future__ import annotations

import functools
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .configs import ZPeriodicConfig
from .errors import InvalidArgument, InvalidSpec, InverseNotSupported
from .words import Word


@functools.total_ordering
@dataclass(frozen=True)
class LabeledPoint:
    """A configuration point: position ``index`` shifted by ``translate`` periods.

    Points are ordered as on the line: first by translate, then by index.
    """

    index: int
    translate: int

    def __lt__(self, other: "LabeledPoint"):
        return (self.translate, self.index) < (other.translate, other.index)


@dataclass(frozen=True)
class MaxMapSpec:
    """One maximal monotone map: a letter together with its rotation number.

    The rotation number p/q need not be in lowest terms, but q must equal
    the letter's multiplicity in the configuration at hand.  When p/q
    reduces, the orbit of the map automatically decomposes into gcd(p, q)
    disjoint orbits of the reduced rotation number; the index-advance rule
    below realizes this without special casing.
    """

    letter: int
    rot: Fraction

    def advance_on(self, config: ZPeriodicConfig) -> int:
        """The integer p such that rot = p / multiplicity, or InvalidSpec."""
        if not 0 <= self.letter < config.arity:
            raise InvalidSpec(f"letter {self.letter} not in configuration")
        q = config.counts[self.letter]
        p = self.rot * q
        if p.denominator != 1:
            raise InvalidSpec(
                f"rotation number {self.rot} is not a multiple of 1/{q} "
                f"(letter {self.letter} has {q} points per period)"
            )
        return p.numerator


def apply_max_map(
    config: ZPeriodicConfig, spec: MaxMapSpec, point: LabeledPoint
) -> LabeledPoint:
    """Apply the maximal monotone map of ``spec`` to a configuration point.

    Ceiling-then-advance: take the least point of spec.letter at or above
    ``point`` in the linear order, then move p positions along that
    letter's point sequence (wrapping into neighbouring periods).
    """
    p = spec.advance_on(config)
    positions = config.positions(spec.letter)
    q = len(positions)
    # Ceiling of `point` within the letter's sub-sequence, numbered so
    # that occurrence t*q + k is the point (positions[k], t).
    k = bisect_left(positions, point.index)
    if k == q:
        occurrence = (point.translate + 1) * q
    else:
        occurrence = point.translate * q + k
    occurrence += p
    translate, k = divmod(occurrence, q)
    return LabeledPoint(positions[k], translate)


def _specs_by_letter(
    config: ZPeriodicConfig, specs: tuple[MaxMapSpec, ...]
) -> dict[int, MaxMapSpec]:
    table: dict[int, MaxMapSpec] = {}
    for spec in specs:
        if spec.letter in table:
            raise InvalidSpec(f"duplicate spec for letter {spec.letter}")
        spec.advance_on(config)  # validates
        table[spec.letter] = spec
    return table


def evaluate_word(
    config: ZPeriodicConfig,
    specs: tuple[MaxMapSpec, ...],
    word: Word,
    start: LabeledPoint,
) -> LabeledPoint:
    """Apply a positive word of maximal maps, rightmost letter first."""
    if not word.is_positive:
        raise InverseNotSupported("maximal monotone maps cannot be inverted")
    table = _specs_by_letter(config, specs)
    point = start
    for index, _ in reversed(word.letters):
        if index not in table:
            raise InvalidSpec(f"no spec for letter {index}")
        point = apply_max_map(config, table[index], point)
    return point


def rot_of_word(
    config: ZPeriodicConfig,
    specs: tuple[MaxMapSpec, ...],
    word: Word,
    start: LabeledPoint | None = None,
) -> Fraction:
    """Exact rotation number of a positive word of maximal monotone maps.

    Iterates the word from the least-index point of its last letter (the
    first letter applied) until some index of the fundamental period
    repeats; if the index first seen at step s0 with translate t0 recurs
    at step s1 with translate t1, the word satisfies w^(s1-s0)(x) = x +
    (t1-t0), so its rotation number is (t1-t0)/(s1-s0).  The answer is
    independent of the starting point, which may be overridden.
    """
    if not word.is_positive:
        raise InverseNotSupported("maximal monotone maps cannot be inverted")
    table = _specs_by_letter(config, specs)
    for index, _ in word.letters:
        if index not in table:
            raise InvalidSpec(f"no spec for letter {index}")

    if start is None:
        last_letter = word.letters[-1][0]
        start = LabeledPoint(config.positions(last_letter)[0], 0)
    return _rot_from(config, specs, word, start)


def _rot_from(
    config: ZPeriodicConfig,
    specs: tuple[MaxMapSpec, ...],
    word: Word,
    start: LabeledPoint,
) -> Fraction:
    # After one application every orbit point carries the word's leading
    # letter, so an index must repeat within (its multiplicity + 2) steps.
    seen: dict[int, tuple[int, int]] = {}
    point = start
    for step in range(config.size + 3):
        if point.index in seen:
            first_step, first_translate = seen[point.index]
            return Fraction(point.translate - first_translate, step - first_step)
        seen[point.index] = (step, point.translate)
        point = evaluate_word(config, specs, word, point)
    raise AssertionError("orbit failed to close; this is a bug")


def estimate_rot(
    evaluator: Callable[[Fraction], Fraction], iterations: int, base: Fraction
) -> tuple[Fraction, Fraction]:
    """Certified rotation-number interval for an opaque monotone lift.

    For any Z-periodic monotone self-map F of the line, the displacement
    F^n(x) - x differs from n times the rotation number by at most 1, so
    [(F^n(x) - x)/n - 1/n, (F^n(x) - x)/n + 1/n] always contains it.
    """
    if iterations < 1:
        raise InvalidArgument("iteration count must be >= 1")
    x = Fraction(base)
    for _ in range(iterations):
        x = evaluator(x)
    mean = Fraction(x - base, iterations)
    margin = Fraction(1, iterations)
    return (mean - margin, mean + margin)


def coordinate(config: ZPeriodicConfig, point: LabeledPoint) -> Fraction:
    """Real coordinate of a configuration point, spacing points evenly."""
    return Fraction(point.index, config.size) + point.translate


def realize_max_map(
    config: ZPeriodicConfig, spec: MaxMapSpec
) -> Callable[[Fraction], Fraction]:
    """Exact real-coordinate evaluator of the maximal map, for cross-checks.

    Points of the configuration are placed at index/N + translate.  The
    returned function agrees with ``apply_max_map`` on those points and
    extends to the whole line by the ceiling rule.
    """
    p = spec.advance_on(config)
    positions = config.positions(spec.letter)
    q = len(positions)
    size = config.size

    def evaluate(x: Fraction) -> Fraction:
        x = Fraction(x)
        translate = x.numerator // x.denominator
        fractional = x - translate
        scaled = fractional * size  # compare against integer positions
        k = bisect_left(positions, scaled)
        if k == q:
            occurrence = (translate + 1) * q
        else:
            occurrence = translate * q + k
        occurrence += p
        out_translate, out_k = divmod(occurrence, q)
        return Fraction(positions[out_k], size) + out_translate

    return evaluate
