"""Brute-force reference implementations, independent of the package.

Everything here works on materialized real coordinates and raw
permutation filtering: maps are evaluated by scanning an explicit sorted
list of translated orbit points, configurations are enumerated by
generating every permutation of the multiset and deduplicating rotation
classes, and rotation numbers are read off orbits started from every
point.  Deliberately naive; used to derive and cross-check expected
values for the fast engine.
"""

import math
from fractions import Fraction
from functools import lru_cache


def _next_permutation(items):
    """Lexicographic successor in place; False once the order wraps."""
    i = len(items) - 2
    while i >= 0 and items[i] >= items[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(items) - 1
    while items[j] <= items[i]:
        j -= 1
    items[i], items[j] = items[j], items[i]
    items[i + 1:] = reversed(items[i + 1:])
    return True


def all_configs(counts):
    """Every cyclic arrangement of the multiset, one tuple per rotation class.

    Walks all distinct linear arrangements in lexicographic order and
    keeps the least rotation of each.
    """
    letters = []
    for letter, q in enumerate(counts):
        letters.extend([letter] * q)
    letters.sort()
    classes = set()
    while True:
        arrangement = tuple(letters)
        classes.add(
            min(arrangement[i:] + arrangement[:i] for i in range(len(arrangement)))
        )
        if not _next_permutation(letters):
            break
    return sorted(classes)


@lru_cache(maxsize=None)
def letter_points(pattern, letter):
    """One period of the letter's points, placed at index/N."""
    n = len(pattern)
    return tuple(Fraction(i, n) for i, item in enumerate(pattern) if item == letter)


def apply_maximal(points, advance, x):
    """Send x to the least orbit point at or above it, then advance.

    Materializes enough integer translates of the one-period point list
    that both the ceiling point and its advanced successor can be found
    by a plain scan.  Translate blocks are generated in increasing order,
    so the concatenation is already sorted.
    """
    x = Fraction(x)
    base = math.floor(x)
    spread = abs(advance) // len(points) + 2
    candidates = [
        p + k for k in range(base - spread, base + spread + 1) for p in points
    ]
    ceiling_index = next(i for i, c in enumerate(candidates) if c >= x)
    return candidates[ceiling_index + advance]


def apply_word(pattern, advances, word_letters, x):
    """Apply the word once, rightmost letter first."""
    for letter in reversed(word_letters):
        x = apply_maximal(letter_points(pattern, letter), advances[letter], x)
    return x


def rot_of_word(pattern, advances, word_letters, all_starts=True):
    """Rotation number of the word; optionally checked from every start."""
    n = len(pattern)
    results = set()
    starts = range(n) if all_starts else range(1)
    for start_index in starts:
        x = Fraction(start_index, n)
        seen = {}
        for step in range(n + 3):
            key = x - math.floor(x)
            if key in seen:
                first_step, first_floor = seen[key]
                results.add(
                    Fraction(math.floor(x) - first_floor, step - first_step)
                )
                break
            seen[key] = (step, math.floor(x))
            x = apply_word(pattern, advances, word_letters, x)
        else:
            raise AssertionError("orbit did not close")
    assert len(results) == 1, f"starting points disagree: {results}"
    return results.pop()


def extremal_rot(word_letters, rots, all_starts=True):
    """Maximum rotation number over every configuration (R_w by brute force)."""
    rots = [Fraction(r) for r in rots]
    counts = [r.denominator for r in rots]
    advances = [r.numerator for r in rots]
    return max(
        rot_of_word(pattern, advances, word_letters, all_starts)
        for pattern in all_configs(counts)
    )
