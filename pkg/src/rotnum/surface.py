"""Surface-group representations into the lifted circle homeomorphisms.

A representation of the genus-g surface group is stored as an assignment
of PL lifts to the standard generators a_1, b_1, ..., a_g, b_g.  The
product of the canonical commutator lifts must be an integer translation
T^e; the integer e is the Euler number of the representation.  Bending
and twisting deform a representation without changing e; rotation
numbers of words plus the additivity defect tau give a semi-conjugacy
fingerprint, a necessary condition for two representations to be
semi-conjugate.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, TextIO

from .errors import (
    InconsistentSplitting,
    InvalidArgument,
    InvalidComparison,
    LiftObstruction,
    NotInCentralizer,
    NotResolved,
    ParseError,
    RelatorNotSatisfied,
)
from .plmaps import (
    DEFAULT_QMAX,
    PLLift,
    canonical_commutator,
    detect_rational_rot,
    format_pl,
    parse_pl,
)
from .rationals import format_fraction, mod_one, parse_fraction

SurfaceWord = tuple[tuple[int, int], ...]  # (generator index 0..2g-1, exponent)


def generator_name(index: int) -> str:
    handle, kind = divmod(index, 2)
    return f"{'ab'[kind]}{handle + 1}"


def word_name(word: SurfaceWord) -> str:
    return "".join(
        generator_name(index) + ("'" if exponent < 0 else "")
        for index, exponent in word
    )


_TOKEN = re.compile(r"([ab])(\d+)('?)")


def parse_surface_word(text: str, genus: int) -> SurfaceWord:
    """Parse words like ``a1b1a1'b1'`` (whitespace and ``*`` are ignored)."""
    stripped = text.replace(" ", "").replace("*", "")
    word: list[tuple[int, int]] = []
    position = 0
    for match in _TOKEN.finditer(stripped):
        if match.start() != position:
            raise ParseError(f"bad token in word {text!r}")
        position = match.end()
        kind, handle, prime = match.groups()
        handle = int(handle)
        if not 1 <= handle <= genus:
            raise ParseError(f"generator {kind}{handle} out of range for genus {genus}")
        index = 2 * (handle - 1) + (0 if kind == "a" else 1)
        word.append((index, -1 if prime else 1))
    if position != len(stripped) or not word:
        raise ParseError(f"bad word {text!r}")
    return tuple(word)


@dataclass(frozen=True)
class SurfaceRep:
    """Generator lifts for the standard presentation, ordered a1, b1, ..."""

    genus: int
    generators: tuple[PLLift, ...]

    def __post_init__(self):
        if self.genus < 2:
            raise InvalidArgument("genus must be >= 2")
        if len(self.generators) != 2 * self.genus:
            raise InvalidArgument(
                f"genus {self.genus} needs {2 * self.genus} generators, "
                f"got {len(self.generators)}"
            )

    def generator(self, index: int) -> PLLift:
        return self.generators[index]

    def handle(self, i: int) -> tuple[PLLift, PLLift]:
        """The pair (a_i, b_i), 1-based."""
        return self.generators[2 * (i - 1)], self.generators[2 * (i - 1) + 1]

    def evaluate(self, word: SurfaceWord) -> PLLift:
        """Compose the word's letters, leftmost letter outermost."""
        result = PLLift.identity()
        for index, exponent in word:
            lift = self.generators[index]
            result = result * (lift if exponent > 0 else lift.invert())
        return result


def rotation_rep(genus: int, amounts: Iterable[Fraction]) -> SurfaceRep:
    """The abelian representation sending each generator to a translation."""
    return SurfaceRep(genus, tuple(PLLift.rotation(a) for a in amounts))


def trivial_rep(genus: int) -> SurfaceRep:
    return rotation_rep(genus, [Fraction(0)] * (2 * genus))


def relator_product(rep: SurfaceRep) -> PLLift:
    product_map = PLLift.identity()
    for i in range(1, rep.genus + 1):
        a, b = rep.handle(i)
        product_map = product_map * canonical_commutator(a, b)
    return product_map


def validate_relator(rep: SurfaceRep) -> int:
    """Euler number e if the relator product is T^e, else RelatorNotSatisfied."""
    product_map = relator_product(rep)
    if product_map.is_translation:
        amount = product_map.translation_amount
        if amount.denominator == 1:
            return amount.numerator
    raise RelatorNotSatisfied(
        "relator product is not an integer translation: " + format_pl(product_map),
        offending_map=product_map,
    )


def euler_number(rep: SurfaceRep) -> int:
    """Rotation number of the relator product of canonical commutator lifts."""
    e = validate_relator(rep)
    assert abs(e) <= 2 * rep.genus - 2, "Milnor-Wood violated: engine bug"
    return e


def _check_commutes(f: PLLift, target: PLLift, label: str) -> None:
    if f * target != target * f:
        raise NotInCentralizer(f"map does not commute with {label}")


def bend(
    rep: SurfaceRep,
    side_assignment: Iterable[str],
    curve: SurfaceWord,
    f: PLLift,
) -> SurfaceRep:
    """Conjugate the B side of a separating-curve splitting by f.

    The tags list assigns 'A' or 'B' to each generator; both generators
    of a handle must sit on the same side.  f must commute exactly with
    the image of the curve word.
    """
    tags = [str(t).upper() for t in side_assignment]
    if len(tags) != 2 * rep.genus or any(t not in ("A", "B") for t in tags):
        raise InconsistentSplitting("need one A/B tag per generator")
    for i in range(rep.genus):
        if tags[2 * i] != tags[2 * i + 1]:
            raise InconsistentSplitting(
                f"handle {i + 1} is split between the two sides"
            )
    _check_commutes(f, rep.evaluate(curve), "the separating curve's image")
    f_inverse = f.invert()
    deformed = tuple(
        gen if tag == "A" else f * gen * f_inverse
        for gen, tag in zip(rep.generators, tags)
    )
    result = SurfaceRep(rep.genus, deformed)
    try:
        validate_relator(result)
    except RelatorNotSatisfied as exc:
        raise InconsistentSplitting(
            "bending along this curve does not preserve the relator"
        ) from exc
    return result


def twist(rep: SurfaceRep, handle: int, f: PLLift) -> SurfaceRep:
    """Replace b_i by b_i f, where f commutes exactly with a_i.

    Since f commutes with a_i, the commutator [a_i, b_i f] equals
    [a_i, b_i], so the relator and the Euler number are untouched.
    """
    if not 1 <= handle <= rep.genus:
        raise InvalidArgument(f"handle must be in 1..{rep.genus}")
    a, b = rep.handle(handle)
    _check_commutes(f, a, generator_name(2 * (handle - 1)))
    generators = list(rep.generators)
    generators[2 * (handle - 1) + 1] = b * f
    return SurfaceRep(rep.genus, tuple(generators))


# -- fingerprints ------------------------------------------------------


@dataclass(frozen=True)
class Fingerprint:
    """Semi-conjugacy invariants: generator rotation numbers mod 1, and
    the additivity defect on all ordered pairs of short reduced words."""

    genus: int
    radius: int
    generator_rots: tuple[Fraction, ...]
    taus: tuple[tuple[str, str, Fraction], ...]


@dataclass(frozen=True)
class ComparisonResult:
    distinguished: bool
    witness: str | None = None

    def __str__(self):
        return f"distinguished {self.witness}" if self.distinguished else "inconclusive"


def reduced_words(genus: int, radius: int) -> list[SurfaceWord]:
    """All nonempty freely reduced words of length <= radius.

    Deterministic order: by length, then lexicographically with
    a1 < a1' < b1 < b1' < a2 < ...
    """
    if radius < 1:
        raise InvalidArgument("radius must be >= 1")
    symbols = [
        (index, exponent) for index in range(2 * genus) for exponent in (1, -1)
    ]
    words: list[SurfaceWord] = []
    layer: list[SurfaceWord] = [()]
    for _ in range(radius):
        next_layer = []
        for word in layer:
            for symbol in symbols:
                if word and word[-1] == (symbol[0], -symbol[1]):
                    continue
                next_layer.append(word + (symbol,))
        words.extend(next_layer)
        layer = next_layer
    return words


def fingerprint(rep: SurfaceRep, radius: int, qmax: int = DEFAULT_QMAX) -> Fingerprint:
    """Generator rotation numbers plus tau on all pairs of short words."""
    words = reduced_words(rep.genus, radius)
    lifts = {word: rep.evaluate(word) for word in words}
    rots: dict[SurfaceWord, Fraction] = {}
    unresolved: list[str] = []
    pair_lift_cache: dict[SurfaceWord, Fraction] = {}

    def resolve(word: SurfaceWord, lift: PLLift) -> Fraction | None:
        result = detect_rational_rot(lift, qmax)
        if not result.resolved:
            unresolved.append(word_name(word))
            return None
        return result.exact

    for word in words:
        rot = resolve(word, lifts[word])
        if rot is not None:
            rots[word] = rot
    taus = []
    for w1, w2 in product(words, repeat=2):
        if w1 not in rots or w2 not in rots:
            continue
        # keyed by unreduced concatenation: pairs sharing it compose to
        # the same lift, so sharing the cached rotation number is safe
        key = w1 + w2
        if key not in pair_lift_cache:
            rot = resolve(key, lifts[w1] * lifts[w2])
            if rot is None:
                continue
            pair_lift_cache[key] = rot
        taus.append(
            (word_name(w1), word_name(w2), pair_lift_cache[key] - rots[w1] - rots[w2])
        )
    if unresolved:
        raise NotResolved(
            "could not resolve rotation numbers for: " + ", ".join(sorted(set(unresolved))),
            details=tuple(sorted(set(unresolved))),
        )
    generator_rots = tuple(
        mod_one(rots[((index, 1),)]) for index in range(2 * rep.genus)
    )
    return Fingerprint(rep.genus, radius, generator_rots, tuple(taus))


def compare_fingerprints(first: Fingerprint, second: Fingerprint) -> ComparisonResult:
    """Distinguished means provably not semi-conjugate; otherwise no claim."""
    if first.genus != second.genus or first.radius != second.radius:
        raise InvalidComparison("fingerprints have different genus or radius")
    for index, (r1, r2) in enumerate(zip(first.generator_rots, second.generator_rots)):
        if r1 != r2:
            return ComparisonResult(True, generator_name(index))
    for (w1, w2, t1), (_, _, t2) in zip(first.taus, second.taus):
        if t1 != t2:
            return ComparisonResult(True, f"tau({w1},{w2})")
    return ComparisonResult(False)


# -- lift census -------------------------------------------------------


@dataclass(frozen=True)
class LiftCensus:
    """Generator rotation-number vectors of the k^(2g) lifted geometric
    representations with Euler number (2g-2)/k."""

    genus: int
    k: int
    euler: Fraction
    vectors: tuple[tuple[Fraction, ...], ...]


def lift_census(genus: int, k: int) -> LiftCensus:
    """All k^(2g) lift choices, as semi-conjugacy-separating rot vectors.

    Lifting a geometric representation to the k-fold cover requires k to
    divide 2g - 2; each standard generator then admits k lifts differing
    by rotation j/k, and distinct choices are distinguished by generator
    rotation numbers alone.
    """
    if genus < 2:
        raise InvalidArgument("genus must be >= 2")
    if k < 1:
        raise InvalidArgument("k must be >= 1")
    if (2 * genus - 2) % k != 0:
        raise LiftObstruction("k must divide 2g-2")
    vectors = tuple(
        tuple(Fraction(j, k) for j in choice)
        for choice in product(range(k), repeat=2 * genus)
    )
    return LiftCensus(genus, k, Fraction(2 * genus - 2, k), vectors)


# -- file formats ------------------------------------------------------


def parse_rep_file(stream: TextIO) -> SurfaceRep:
    """Read ``genus: g`` followed by 2g labeled map lines (a1:, b1:, ...)."""
    lines = [
        line.strip()
        for line in stream
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines or not lines[0].startswith("genus:"):
        raise ParseError("representation file must start with 'genus: g'")
    try:
        genus = int(lines[0][len("genus:"):].strip())
    except ValueError as exc:
        raise ParseError("bad genus line") from exc
    if genus < 2:
        raise ParseError("genus must be >= 2")
    labeled: dict[str, PLLift] = {}
    for line in lines[1:]:
        label, _, rest = line.partition(":")
        match = re.fullmatch(r"([ab])(\d+)", label.strip())
        if not match:
            raise ParseError(f"bad generator label {label.strip()!r}")
        name = match.group(0)
        if name in labeled:
            raise ParseError(f"duplicate generator {name}")
        labeled[name] = parse_pl(rest.strip())
    expected = [generator_name(i) for i in range(2 * genus)]
    missing = [name for name in expected if name not in labeled]
    if missing:
        raise ParseError("missing generators: " + ", ".join(missing))
    extra = sorted(set(labeled) - set(expected))
    if extra:
        raise ParseError("unexpected generators: " + ", ".join(extra))
    return SurfaceRep(genus, tuple(labeled[name] for name in expected))


def write_rep_file(rep: SurfaceRep, stream: TextIO) -> None:
    stream.write(f"genus: {rep.genus}\n")
    for index, lift in enumerate(rep.generators):
        stream.write(f"{generator_name(index)}: {format_pl(lift)}\n")


def write_fingerprint_csv(fp: Fingerprint, stream: TextIO) -> None:
    """Metadata block, then ``gen,rot`` block, then ``word1,word2,tau``."""
    stream.write("genus,radius\n")
    stream.write(f"{fp.genus},{fp.radius}\n")
    stream.write("gen,rot\n")
    for index, rot in enumerate(fp.generator_rots):
        stream.write(f"{generator_name(index)},{format_fraction(rot)}\n")
    stream.write("word1,word2,tau\n")
    for w1, w2, value in fp.taus:
        stream.write(f"{w1},{w2},{format_fraction(value)}\n")


def parse_fingerprint_csv(stream: TextIO) -> Fingerprint:
    lines = [line.strip() for line in stream if line.strip()]
    if len(lines) < 3 or lines[0] != "genus,radius":
        raise ParseError("fingerprint file must start with a genus,radius block")
    try:
        genus_text, radius_text = lines[1].split(",")
        genus, radius = int(genus_text), int(radius_text)
    except ValueError as exc:
        raise ParseError("bad genus,radius row") from exc
    if lines[2] != "gen,rot":
        raise ParseError("expected gen,rot block")
    rots = []
    cursor = 3
    while cursor < len(lines) and lines[cursor] != "word1,word2,tau":
        name, _, value = lines[cursor].partition(",")
        expected = generator_name(len(rots))
        if name != expected:
            raise ParseError(f"expected generator {expected}, got {name!r}")
        rots.append(parse_fraction(value))
        cursor += 1
    if len(rots) != 2 * genus:
        raise ParseError("wrong number of generator rotation numbers")
    if cursor == len(lines):
        raise ParseError("missing word1,word2,tau block")
    taus = []
    for line in lines[cursor + 1:]:
        fields = line.split(",")
        if len(fields) != 3:
            raise ParseError(f"bad tau row {line!r}")
        taus.append((fields[0], fields[1], parse_fraction(fields[2])))
    return Fingerprint(genus, radius, tuple(rots), tuple(taus))
