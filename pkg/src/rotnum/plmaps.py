"""Exact piecewise-linear lifts of circle homeomorphisms.

A lift is a strictly increasing PL self-map F of the line with
F(x + 1) = F(x) + 1, stored by its breakpoints in [0, 1) and their
images.  All data are exact rationals, so composition, inversion and
rational rotation-number detection are exact; maps are canonicalized
(redundant breakpoints removed, translations pinned to breakpoint 0) so
that structural equality coincides with equality of functions.

Textual syntax, one map per line: ``pl: b0→v0, b1→v1, ...`` with exact
fractions (ASCII ``->`` is accepted too), or ``rot: p/q`` for the
translation by p/q.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ComplexityExceeded,
    InvalidArgument,
    InvalidPL,
    NotResolved,
    ParseError,
)
from .rationals import format_fraction, parse_fraction

#: Default search depth for rational rotation-number detection.
DEFAULT_QMAX = 32

#: Default per-call budget on composed breakpoints.
DEFAULT_MAX_BREAKPOINTS = 100_000


class PLLift:
    """A piecewise-linear element of the lifted circle homeomorphism group."""

    __slots__ = ("breakpoints", "values", "slopes")

    def __init__(self, breakpoints, values):
        breaks = tuple(Fraction(b) for b in breakpoints)
        vals = tuple(Fraction(v) for v in values)
        if not breaks or len(breaks) != len(vals):
            raise InvalidPL("need matching, nonempty breakpoints and values")
        if any(not 0 <= b < 1 for b in breaks):
            raise InvalidPL("breakpoints must lie in [0, 1)")
        if any(b2 <= b1 for b1, b2 in zip(breaks, breaks[1:])):
            raise InvalidPL("breakpoints must be strictly increasing")
        if any(v2 <= v1 for v1, v2 in zip(vals, vals[1:])):
            raise InvalidPL("values must be strictly increasing")
        if vals[-1] >= vals[0] + 1:
            raise InvalidPL("values must span less than one period")
        breaks, vals = _canonicalize(breaks, vals)
        extended_b = breaks + (breaks[0] + 1,)
        extended_v = vals + (vals[0] + 1,)
        slopes = tuple(
            (extended_v[j + 1] - extended_v[j]) / (extended_b[j + 1] - extended_b[j])
            for j in range(len(breaks))
        )
        object.__setattr__(self, "breakpoints", breaks)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "slopes", slopes)

    def __setattr__(self, name, value):
        raise AttributeError("PLLift is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def rotation(cls, amount) -> "PLLift":
        """The translation x -> x + amount."""
        return cls((Fraction(0),), (Fraction(amount),))

    @classmethod
    def identity(cls) -> "PLLift":
        return cls.rotation(0)

    @classmethod
    def from_pairs(cls, pairs) -> "PLLift":
        pairs = sorted((Fraction(b), Fraction(v)) for b, v in pairs)
        return cls(tuple(b for b, _ in pairs), tuple(v for _, v in pairs))

    # -- basic structure ----------------------------------------------

    @property
    def is_translation(self) -> bool:
        return len(self.breakpoints) == 1

    @property
    def translation_amount(self) -> Fraction:
        """Defined only for translations (canonical breakpoint is 0)."""
        if not self.is_translation:
            raise InvalidPL("map is not a translation")
        return self.values[0]

    def __eq__(self, other):
        if not isinstance(other, PLLift):
            return NotImplemented
        return self.breakpoints == other.breakpoints and self.values == other.values

    def __hash__(self):
        return hash((self.breakpoints, self.values))

    def __repr__(self):
        return f"PLLift({format_pl(self)!r})"

    # -- evaluation ----------------------------------------------------

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        breaks = self.breakpoints
        period = math.floor(x - breaks[0])
        inside = x - period  # in [b_0, b_0 + 1)
        j = bisect_right(breaks, inside) - 1
        if inside == breaks[j]:
            return self.values[j] + period
        return self.values[j] + (inside - breaks[j]) * self.slopes[j] + period

    # -- group operations -----------------------------------------------

    def __mul__(self, other: "PLLift") -> "PLLift":
        """Function composition: (f * g)(x) = f(g(x))."""
        if not isinstance(other, PLLift):
            return NotImplemented
        return compose(self, other)

    def invert(self) -> "PLLift":
        """Exact inverse: swaps the roles of breakpoints and values."""
        pairs = []
        for b, v in zip(self.breakpoints, self.values):
            shift = math.floor(v)
            pairs.append((v - shift, b - shift))
        pairs.sort()
        return PLLift(tuple(b for b, _ in pairs), tuple(v for _, v in pairs))

    def translate(self, k: int) -> "PLLift":
        """Compose with the integer translation T^k (on either side)."""
        if int(k) != k:
            raise InvalidArgument("translation amount must be an integer")
        return PLLift(self.breakpoints, tuple(v + k for v in self.values))

    def __pow__(self, n: int) -> "PLLift":
        if n == 0:
            return PLLift.identity()
        if n < 0:
            return self.invert() ** (-n)
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def displacements(self) -> list[Fraction]:
        """F(b) - b at every breakpoint; extremes of F(x) - x occur here."""
        return [v - b for b, v in zip(self.breakpoints, self.values)]


def _canonicalize(breaks, vals):
    """Drop breakpoints where no slope change happens; pin translations at 0."""
    m = len(breaks)
    extended_b = breaks + (breaks[0] + 1,)
    extended_v = vals + (vals[0] + 1,)
    slopes = [
        (extended_v[j + 1] - extended_v[j]) / (extended_b[j + 1] - extended_b[j])
        for j in range(m)
    ]
    essential = [j for j in range(m) if slopes[j - 1] != slopes[j]]
    if not essential:
        return (Fraction(0),), (vals[0] - breaks[0],)
    return (
        tuple(breaks[j] for j in essential),
        tuple(vals[j] for j in essential),
    )


def compose(
    outer: PLLift, inner: PLLift, max_breakpoints: int = DEFAULT_MAX_BREAKPOINTS
) -> PLLift:
    """Exact composition outer(inner(x)).

    Slope changes of the composite can only happen at breakpoints of the
    inner map or at inner preimages of the outer map's breakpoints, so
    sampling the composite at those points determines it.
    """
    inner_inverse = inner.invert()
    candidates = set(inner.breakpoints)
    for b in outer.breakpoints:
        pre = inner_inverse(b)
        candidates.add(pre - math.floor(pre))
    if len(candidates) > max_breakpoints:
        raise ComplexityExceeded(
            f"composition would exceed {max_breakpoints} breakpoints"
        )
    breaks = tuple(sorted(candidates))
    return PLLift(breaks, tuple(outer(inner(b)) for b in breaks))


@dataclass(frozen=True)
class RotResult:
    """Outcome of rotation-number detection.

    Exactly one of ``exact`` and ``interval`` is set.  Exact results
    carry a witness (x, q, p) with F^q(x) = x + p; interval results are
    certified to contain the rotation number.
    """

    exact: Fraction | None = None
    interval: tuple[Fraction, Fraction] | None = None
    witness: tuple[Fraction, int, int] | None = None

    @property
    def resolved(self) -> bool:
        return self.exact is not None


def _periodic_point(power: PLLift, p_lo=None, p_hi=None):
    """Leftmost exact solution of F^q(x) = x + p in one period, if any.

    Scans the linear pieces of the iterated map left to right.  On each
    piece the displacement F^q(x) - x is linear, so integer displacement
    values are found by solving a linear equation; a slope-one piece with
    integer displacement is reported by its left endpoint.  The optional
    [p_lo, p_hi] window restricts which integers are tried.
    """
    breaks, vals = power.breakpoints, power.values
    m = len(breaks)
    for j in range(m):
        b_left, v_left = breaks[j], vals[j]
        if j + 1 < m:
            b_right, v_right = breaks[j + 1], vals[j + 1]
        else:
            b_right, v_right = breaks[0] + 1, vals[0] + 1
        d_left = v_left - b_left
        d_right = v_right - b_right
        first = math.ceil(min(d_left, d_right))
        last = math.floor(max(d_left, d_right))
        if p_lo is not None:
            first = max(first, p_lo)
        if p_hi is not None:
            last = min(last, p_hi)
        for p in range(first, last + 1):
            if d_left == d_right:
                if d_left == p:
                    return b_left, p
                continue
            slope = power.slopes[j]
            x = (p + b_left * slope - v_left) / (slope - 1)
            if b_left <= x <= b_right:
                return x, p
    return None


class _Powers:
    """Memoized integer powers of a lift, built by binary doubling."""

    def __init__(self, lift: PLLift):
        self.cache = {1: lift}

    def get(self, n: int) -> PLLift:
        cached = self.cache.get(n)
        if cached is None:
            half = self.get(n // 2)
            cached = half * half if n % 2 == 0 else half * half * self.cache[1]
            self.cache[n] = cached
        return cached


def detect_rational_rot(lift: PLLift, qmax: int = DEFAULT_QMAX) -> RotResult:
    """Exact rotation number if it is p/q with q <= qmax, else an interval.

    Searches periods in increasing order, so the witness uses the
    smallest possible q.  A homeomorphism has rotation number p/q
    exactly when F^q(x) = x + p has a solution, so within the search
    depth this is complete; translations resolve immediately whatever
    the depth.  A certified orbit interval narrows each period's
    translation candidates to at most one before any power of the map
    is formed.  The fallback interval is certified at 64 * qmax
    iterations.
    """
    if qmax < 1:
        raise InvalidArgument("qmax must be >= 1")
    if lift.is_translation:
        amount = lift.translation_amount
        return RotResult(
            exact=amount,
            witness=(Fraction(0), amount.denominator, amount.numerator),
        )
    found = _periodic_point(lift)
    if found is not None:
        x, p = found
        return RotResult(exact=Fraction(p), witness=(x, 1, p))
    orbit_point = Fraction(0)
    steps = 0

    def interval_at(target_steps: int):
        nonlocal orbit_point, steps
        while steps < target_steps:
            orbit_point = lift(orbit_point)
            steps += 1
        mean = orbit_point / steps
        margin = Fraction(1, steps)
        return mean - margin, mean + margin

    if qmax > 1:
        powers = _Powers(lift)
        for q in range(2, qmax + 1):
            # Orbit length 32q keeps the interval width at 1/(16q), so at
            # most one integer candidate survives per period and powers of
            # the map are rarely formed in vain.
            lo, hi = interval_at(32 * q)
            p_lo, p_hi = math.ceil(q * lo), math.floor(q * hi)
            if p_lo > p_hi:
                continue
            found = _periodic_point(powers.get(q), p_lo, p_hi)
            if found is not None:
                x, p = found
                return RotResult(exact=Fraction(p, q), witness=(x, q, p))
    lo, hi = interval_at(64 * qmax)
    return RotResult(interval=(lo, hi))


def canonical_commutator(f: PLLift, g: PLLift) -> PLLift:
    """The commutator f g f^-1 g^-1.

    Its value is unchanged when either argument is composed with an
    integer translation, so it only depends on the underlying circle
    maps: it is the canonical lift of the circle commutator.
    """
    return f * g * f.invert() * g.invert()


def tau(f: PLLift, g: PLLift, qmax: int = DEFAULT_QMAX) -> Fraction:
    """Additivity defect rot(fg) - rot(f) - rot(g); lift-independent.

    All three rotation numbers must resolve rationally within qmax;
    otherwise NotResolved is raised carrying the three partial results.
    """
    results = (
        detect_rational_rot(f, qmax),
        detect_rational_rot(g, qmax),
        detect_rational_rot(f * g, qmax),
    )
    if not all(r.resolved for r in results):
        raise NotResolved(
            "rotation numbers not resolved within qmax", details=results
        )
    rot_f, rot_g, rot_fg = (r.exact for r in results)
    return rot_fg - rot_f - rot_g


# -- text format -------------------------------------------------------


def parse_pl(text: str) -> PLLift:
    """Parse one map: ``rot: p/q`` or ``pl: b0->v0, b1->v1, ...``."""
    text = text.strip()
    if text.startswith("rot:"):
        return PLLift.rotation(parse_fraction(text[len("rot:"):]))
    if text.startswith("pl:"):
        body = text[len("pl:"):].strip()
        if not body:
            raise ParseError("pl: needs at least one breakpoint pair")
        pairs = []
        for chunk in body.split(","):
            norm = chunk.replace("→", "->")
            if "->" not in norm:
                raise ParseError(f"expected b->v in {chunk.strip()!r}")
            left, _, right = norm.partition("->")
            pairs.append((parse_fraction(left), parse_fraction(right)))
        return PLLift.from_pairs(pairs)
    raise ParseError(f"map must start with 'rot:' or 'pl:', got {text!r}")


def format_pl(lift: PLLift) -> str:
    """Canonical one-line rendering; inverse of parse_pl."""
    if lift.is_translation:
        return f"rot: {format_fraction(lift.translation_amount)}"
    pairs = ", ".join(
        f"{format_fraction(b)}→{format_fraction(v)}"
        for b, v in zip(lift.breakpoints, lift.values)
    )
    return f"pl: {pairs}"
