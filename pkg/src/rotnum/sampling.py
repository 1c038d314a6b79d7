"""Seeded random piecewise-linear lifts for reproducible property suites.

Breakpoints and values are drawn from the Farey fractions of denominator
at most 32, so every generated map has small exact data.  All functions
take an explicit `random.Random` so suites are reproducible from a fixed
seed.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .plmaps import PLLift
from .rationals import farey_fractions

_POOL = farey_fractions(32)


def random_lift(rng: Random, max_breakpoints: int = 4) -> PLLift:
    """A generic lift: random Farey breakpoints, shifted Farey values."""
    m = rng.randint(1, max_breakpoints)
    breaks = sorted(rng.sample(_POOL, m))
    values = sorted(rng.sample(_POOL, m))
    shift = rng.choice((-1, 0, 0, 0, 1)) + rng.choice(_POOL)
    return PLLift(breaks, [v + shift for v in values])


def random_rotation_conjugate(
    rng: Random, max_denominator: int = 8
) -> tuple[PLLift, Fraction]:
    """A lift conjugate to a rational rotation, with its rotation number.

    Conjugation preserves rotation number, so the result is guaranteed to
    resolve within a search depth of max_denominator.
    """
    q = rng.randint(1, max_denominator)
    p = rng.randint(-q, 2 * q)
    conjugator = random_lift(rng)
    rotation = PLLift.rotation(Fraction(p, q))
    return conjugator * rotation * conjugator.invert(), Fraction(p, q)


def random_resolvable_lift(rng: Random) -> PLLift:
    """Mix of generic lifts (which usually have periodic points) and
    rotation conjugates (which always resolve)."""
    if rng.random() < 0.5:
        return random_lift(rng)
    return random_rotation_conjugate(rng)[0]


def random_fixed_point_lift(rng: Random, fixed_point: Fraction | None = None) -> PLLift:
    """A lift fixing the given point (so its rotation number is 0)."""
    x0 = Fraction(fixed_point) if fixed_point is not None else rng.choice(_POOL)
    extra = rng.randint(0, 3)
    interior = [p for p in _POOL if 0 < p < 1]
    offsets_b = sorted(rng.sample(interior, extra))
    offsets_v = sorted(rng.sample(interior, extra))
    pairs = [(x0, x0)]
    pairs += [(x0 + b, x0 + v) for b, v in zip(offsets_b, offsets_v)]
    normalized = []
    for b, v in pairs:
        shift = b.numerator // b.denominator
        normalized.append((b - shift, v - shift))
    return PLLift.from_pairs(normalized)


def random_defect_pair(rng: Random) -> tuple[PLLift, PLLift]:
    """A pair of lifts with fixed points whose product translates a point
    by a full period, realizing the extreme additivity defect of +/-1."""
    while True:
        c_f, c_g = sorted(rng.sample(_POOL, 2))
        between = [p for p in _POOL if c_f < p < c_g]
        lower = [p - 1 for p in _POOL if p - 1 > c_g - 1 and p - 1 < c_f]
        if not between or not lower:
            continue
        x0 = rng.choice(between)
        y0 = rng.choice(lower)
        break
    # g fixes c_g and drops x0 below the previous period's image under f;
    # f fixes c_f and completes the drop to x0 - 1, so (fg)(x0) = x0 - 1.
    g = PLLift.from_pairs(_normalized_pairs([(c_g, c_g), (x0, y0)]))
    f = PLLift.from_pairs(_normalized_pairs([(c_f, c_f), (y0, x0 - 1)]))
    if rng.random() < 0.5:
        return f, g  # rot(fg) = -1, defect -1
    return g.invert(), f.invert()  # product is (fg)^-1, defect +1


def _normalized_pairs(pairs):
    normalized = []
    for b, v in pairs:
        shift = b.numerator // b.denominator
        normalized.append((b - shift, v - shift))
    return normalized


def random_resolved_pair(rng: Random) -> tuple[PLLift, PLLift]:
    """A pair (f, g) designed so that f, g and fg all have rational
    rotation numbers of small period: rotation pairs with a common
    conjugator, extreme-defect pairs, pairs with a common fixed point,
    and a sprinkle of unconstrained pairs."""
    flavor = rng.random()
    if flavor < 0.3:
        h = random_lift(rng)
        h_inverse = h.invert()
        q1, q2 = rng.randint(1, 6), rng.randint(1, 6)
        r1 = Fraction(rng.randint(-q1, 2 * q1), q1)
        r2 = Fraction(rng.randint(-q2, 2 * q2), q2)
        return h * PLLift.rotation(r1) * h_inverse, h * PLLift.rotation(r2) * h_inverse
    if flavor < 0.55:
        return random_defect_pair(rng)
    if flavor < 0.75:
        x0 = rng.choice(_POOL)
        return random_fixed_point_lift(rng, x0), random_fixed_point_lift(rng, x0)
    return random_lift(rng), random_lift(rng)


def random_commuting_lift(rng: Random, denominator: int, max_breakpoints: int = 3) -> PLLift:
    """A lift commuting with every translation by a multiple of 1/denominator.

    Built by generating a generic lift and compressing one period into a
    cell of width 1/denominator, replicated across the period; the result
    satisfies f(x + 1/q) = f(x) + 1/q exactly.
    """
    q = denominator
    base = random_lift(rng, max_breakpoints)
    breaks = []
    values = []
    for cell in range(q):
        offset = Fraction(cell, q)
        breaks.extend(b / q + offset for b in base.breakpoints)
        values.extend(v / q + offset for v in base.values)
    return PLLift(breaks, values)
