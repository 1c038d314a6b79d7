"""Extremal rotation numbers of positive words and their stairstep grids.

R_w(s_1, ..., s_n) is the largest rotation number a positive word w can
achieve when letter i is constrained to have rotation number s_i.  For
rational constraints it is computed exactly by running the maximal
monotone map engine over every cyclic configuration of the periodic
orbits and taking the maximum.  The two-letter product fg also has a
closed form, kept here alongside the enumeration so each can check the
other.
"""

from __future__ import annotations

import math
import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, TextIO

from .configs import enumerate_configs
from .errors import InvalidArgument, InverseNotSupported, ParseError
from .monotone import MaxMapSpec, rot_of_word
from .rationals import IRRATIONAL, farey_fractions, format_fraction, parse_fraction
from .words import Word


def R_w(word: Word, *rots: Fraction) -> Fraction:
    """Maximum rotation number of a positive word, by configuration search.

    Writes each constraint in lowest terms p_i/q_i and maximizes the
    word's rotation number over all cyclic orderings of the merged
    q_i-point periodic sets.
    """
    if not word.is_positive:
        raise InverseNotSupported("extremal functions require positive words")
    if len(rots) != word.arity:
        raise InvalidArgument(
            f"word has {word.arity} letters but {len(rots)} rotation numbers given"
        )
    try:
        rots = tuple(Fraction(r) for r in rots)
    except (TypeError, ValueError) as exc:
        # irrational constraints are approximated by callers via nearby
        # rationals; the exact engine only accepts exact inputs
        raise InvalidArgument("rotation numbers must be exact rationals") from exc
    counts = tuple(r.denominator for r in rots)
    specs = tuple(MaxMapSpec(i, r) for i, r in enumerate(rots))
    return max(
        rot_of_word(config, specs, word) for config in enumerate_configs(*counts)
    )


def inf_w(word: Word, *rots: Fraction) -> Fraction:
    """Minimum rotation number under the same constraints: -R_w(-s_1, ...)."""
    return -R_w(word, *(-Fraction(r) for r in rots))


def closed_form_Rfg(s: Fraction, t: Fraction) -> Fraction:
    """Exact value of R_fg(s, t) = sup over q of (floor(sq) + floor(tq) + 1)/q.

    The supremum over all q >= 1 is attained for some q <= L where L is
    the least common multiple of the two denominators: sL and tL are
    integers, so the q = L term equals s + t + 1/L, while any q > L gives
    (floor(sq) + floor(tq) + 1)/q <= s + t + 1/q < s + t + 1/L.
    """
    s, t = Fraction(s), Fraction(t)
    limit = math.lcm(s.denominator, t.denominator)
    return max(
        Fraction(math.floor(s * q) + math.floor(t * q) + 1, q)
        for q in range(1, limit + 1)
    )


def commutator_rot_bound(s) -> Fraction:
    """Upper bound for the commutator's rotation number, given rot(f) = s.

    Returns 1/q when s = p/q in lowest terms, and 0 when s is the
    IRRATIONAL marker.
    """
    if s is IRRATIONAL:
        return Fraction(0)
    return Fraction(1, Fraction(s).denominator)


@dataclass(frozen=True)
class MilnorWoodChain:
    """The inductive bound on a product of g commutator lifts.

    ``after_commutators[i-1]`` bounds the rotation number of the first i
    commutators; the final step uses that the full relator product is an
    integer translation, which makes rotation number additive.
    """

    genus: int
    after_commutators: tuple[Fraction, ...]
    bound: Fraction


def milnor_wood_chain(genus: int) -> MilnorWoodChain:
    """Reproduce the bound rot(prod of g commutators) <= 2g - 2.

    Each single commutator is bounded by 1; folding the two-letter closed
    form accumulates 2i - 1 after i commutators; appending the last
    commutator to an integer translation adds its bound of 1.
    """
    if genus < 2:
        raise InvalidArgument("genus must be >= 2")
    stages = [commutator_rot_bound(Fraction(0))]  # = 1, the q = 1 case
    for _ in range(genus - 2):
        stages.append(closed_form_Rfg(stages[-1], Fraction(1)))
    return MilnorWoodChain(genus, tuple(stages), stages[-1] + 1)


@dataclass(frozen=True)
class ZigguratGrid:
    """Values of R_w on the rational grid of denominator <= max_denominator.

    ``values`` is stored in lexicographic order of the argument tuples
    (axis^arity, last coordinate fastest), which for two letters means s
    is the slow coordinate and t the fast one.
    """

    word: Word
    max_denominator: int
    axis: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    def entries(self) -> Iterator[tuple[tuple[Fraction, ...], Fraction]]:
        for coords, value in zip(product(self.axis, repeat=self.word.arity), self.values):
            yield coords, value

    def value_at(self, *coords: Fraction) -> Fraction:
        width = len(self.axis)
        flat = 0
        for c in coords:
            flat = flat * width + self.axis.index(Fraction(c))
        return self.values[flat]


def _grid_cell(task: tuple[Word, tuple[Fraction, ...]]):
    word, coords = task
    return coords, R_w(word, *coords)


def ziggurat_grid(word: Word, max_denominator: int, jobs: int = 1) -> ZigguratGrid:
    """Evaluate R_w on every tuple of grid fractions, deterministically.

    Cells are independent, so they may be evaluated in parallel; results
    are merged by grid key, making the output identical for any number of
    jobs.
    """
    if not word.is_positive:
        raise InverseNotSupported("extremal functions require positive words")
    if max_denominator < 1:
        raise InvalidArgument("max denominator must be >= 1")
    axis = tuple(farey_fractions(max_denominator))
    tasks = [(word, coords) for coords in product(axis, repeat=word.arity)]
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            results = dict(pool.map(_grid_cell, tasks, chunksize=8))
    else:
        results = dict(map(_grid_cell, tasks))
    values = tuple(results[coords] for _, coords in tasks)
    return ZigguratGrid(word, max_denominator, axis, values)


def write_grid_csv(grid: ZigguratGrid, stream: TextIO) -> None:
    """Delimited export: one row per grid cell, exact fraction strings."""
    arity = grid.word.arity
    if arity == 2:
        header = "s,t,R"
    else:
        header = ",".join(f"s{i + 1}" for i in range(arity)) + ",R"
    stream.write(header + "\n")
    for coords, value in grid.entries():
        fields = [format_fraction(c) for c in coords] + [format_fraction(value)]
        stream.write(",".join(fields) + "\n")


def read_grid_csv(stream: TextIO) -> tuple[tuple[str, ...], list[tuple[tuple[Fraction, ...], Fraction]]]:
    """Parse a grid CSV back into exact (coords, value) rows."""
    header = stream.readline().strip()
    if not header.endswith(",R"):
        raise ParseError("grid CSV must end its header with an R column")
    names = tuple(header.split(","))
    rows = []
    for line in stream:
        line = line.strip()
        if not line:
            continue
        fields = line.split(",")
        if len(fields) != len(names):
            raise ParseError(f"row has {len(fields)} fields, expected {len(names)}")
        *coords, value = (parse_fraction(field) for field in fields)
        rows.append((tuple(coords), value))
    return names, rows


def quantize_values(values: tuple[Fraction, ...]) -> list[int]:
    """Map exact values linearly onto 0..255 (round half up, all exact)."""
    lo, hi = min(values), max(values)
    if hi == lo:
        return [0] * len(values)
    span = hi - lo
    return [int((v - lo) * 255 / span + Fraction(1, 2)) for v in values]


def write_grid_pgm(grid: ZigguratGrid, stream) -> None:
    """Binary P5 heightmap: s increases left to right, t top to bottom."""
    if grid.word.arity != 2:
        raise InvalidArgument("heightmaps are only defined for two-letter grids")
    width = len(grid.axis)
    bytes_by_cell = quantize_values(grid.values)
    stream.write(f"P5\n{width} {width}\n255\n".encode("ascii"))
    rows = bytearray()
    for t_index in range(width):
        for s_index in range(width):
            rows.append(bytes_by_cell[s_index * width + t_index])
    stream.write(bytes(rows))
