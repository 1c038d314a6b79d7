from fractions import Fraction as F
from random import Random

import pytest

import oracles
from rotnum import (
    InvalidArgument,
    InvalidSpec,
    InverseNotSupported,
    LabeledPoint,
    MaxMapSpec,
    Word,
    ZPeriodicConfig,
    apply_max_map,
    estimate_rot,
    evaluate_word,
    realize_max_map,
    rot_of_word,
)
from rotnum.monotone import coordinate

XYXY = ZPeriodicConfig.from_string("xyxy")
XXYY = ZPeriodicConfig.from_string("xxyy")
HALF_SPECS = (MaxMapSpec(0, F(1, 2)), MaxMapSpec(1, F(1, 2)))
FG = Word.from_string("fg")


def random_case(rng, max_count=4, max_word=5):
    """A random configuration, compatible specs, and a positive word."""
    arity = rng.randint(1, 3)
    counts = [rng.randint(1, max_count) for _ in range(arity)]
    pattern = [letter for letter, q in enumerate(counts) for _ in range(q)]
    rng.shuffle(pattern)
    config = ZPeriodicConfig(tuple(pattern), arity)
    specs = tuple(
        MaxMapSpec(i, F(rng.randint(-q, 2 * q), q)) for i, q in enumerate(counts)
    )
    letters = tuple(
        (rng.randrange(arity), 1) for _ in range(rng.randint(1, max_word))
    )
    return config, specs, Word(letters, arity)


def test_apply_follows_ceiling_then_advance():
    # g sends x_1 past y_1 to y_2
    out = apply_max_map(XYXY, MaxMapSpec(1, F(1, 2)), LabeledPoint(0, 0))
    assert out == LabeledPoint(3, 0)
    # f on xxyy sends y_2 into the next period
    out = apply_max_map(XXYY, MaxMapSpec(0, F(1, 2)), LabeledPoint(3, 0))
    assert out == LabeledPoint(1, 1)


def test_apply_zero_rotation_fixes_orbit_points():
    for config in (XYXY, XXYY):
        for letter in range(2):
            spec = MaxMapSpec(letter, F(0))
            for index in config.positions(letter):
                point = LabeledPoint(index, 0)
                assert apply_max_map(config, spec, point) == point


def test_apply_matches_real_coordinate_simulation():
    rng = Random(42)
    for _ in range(50):
        config, specs, _ = random_case(rng)
        spec = rng.choice(specs)
        oracle_points = oracles.letter_points(config.pattern, spec.letter)
        advance = spec.advance_on(config)
        index = rng.randrange(config.size)
        translate = rng.randint(-2, 2)
        got = apply_max_map(config, spec, LabeledPoint(index, translate))
        expected = oracles.apply_maximal(
            oracle_points, advance, F(index, config.size) + translate
        )
        assert coordinate(config, got) == expected


def test_apply_rejects_inconsistent_spec():
    with pytest.raises(InvalidSpec):
        apply_max_map(XYXY, MaxMapSpec(0, F(1, 3)), LabeledPoint(0, 0))
    with pytest.raises(InvalidSpec):
        apply_max_map(XYXY, MaxMapSpec(5, F(1, 2)), LabeledPoint(0, 0))


def test_evaluate_word_composes_right_to_left():
    assert evaluate_word(XYXY, HALF_SPECS, FG, LabeledPoint(0, 0)) == LabeledPoint(2, 1)
    assert evaluate_word(XXYY, HALF_SPECS, FG, LabeledPoint(0, 0)) == LabeledPoint(1, 1)


def test_evaluate_single_letter_equals_apply():
    word = Word.from_string("f", arity=2)
    point = LabeledPoint(1, 0)
    assert evaluate_word(XYXY, HALF_SPECS, word, point) == apply_max_map(
        XYXY, HALF_SPECS[0], point
    )


def test_evaluate_rejects_inverses():
    with pytest.raises(InverseNotSupported):
        evaluate_word(XYXY, HALF_SPECS, Word.from_string("fg'"), LabeledPoint(0, 0))
    with pytest.raises(InverseNotSupported):
        rot_of_word(XYXY, HALF_SPECS, Word.from_string("f'g"))


def test_rot_of_word_reproduces_known_values():
    assert rot_of_word(XYXY, HALF_SPECS, FG) == F(3, 2)
    assert rot_of_word(XXYY, HALF_SPECS, FG) == 1


def test_alternating_config_lower_bound():
    for p, k, q in [(1, 1, 2), (1, 1, 3), (2, 1, 3)]:
        config = ZPeriodicConfig(tuple([0, 1] * q), 2)
        specs = (MaxMapSpec(0, F(p, q)), MaxMapSpec(1, F(k, q)))
        assert rot_of_word(config, specs, FG) == F(p + k + 1, q)


def test_single_letter_rot_is_its_own():
    rng = Random(7)
    for _ in range(30):
        config, specs, _ = random_case(rng)
        letter = rng.randrange(config.arity)
        word = Word(((letter, 1),), config.arity)
        assert rot_of_word(config, specs, word) == specs[letter].rot


def test_non_lowest_terms_orbit_decomposition():
    # a 2/4 spec acts as two disjoint 1/2 orbits and still wins rot 1/2
    config = ZPeriodicConfig.from_string("xxxx")
    spec = (MaxMapSpec(0, F(2, 4)),)
    assert rot_of_word(config, spec, Word.from_string("f")) == F(1, 2)


def test_rot_matches_brute_force_simulation():
    rng = Random(11)
    for _ in range(60):
        config, specs, word = random_case(rng)
        advances = [spec.advance_on(config) for spec in specs]
        letters = [i for i, _ in word.letters]
        expected = oracles.rot_of_word(config.pattern, advances, letters)
        assert rot_of_word(config, specs, word) == expected


def test_rot_deterministic_over_all_starts():
    rng = Random(13)
    for _ in range(100):
        config, specs, word = random_case(rng)
        reference = rot_of_word(config, specs, word)
        last_letter = word.letters[-1][0]
        for index in config.positions(last_letter):
            start = LabeledPoint(index, 0)
            assert rot_of_word(config, specs, word, start=start) == reference


def test_rot_cyclic_invariance():
    rng = Random(17)
    for _ in range(100):
        config, specs, word = random_case(rng)
        reference = rot_of_word(config, specs, word)
        for shift in range(1, len(word.letters)):
            assert rot_of_word(config, specs, word.cycled(shift)) == reference


def test_rot_homogeneity():
    rng = Random(19)
    for _ in range(100):
        config, specs, word = random_case(rng, max_count=3, max_word=3)
        reference = rot_of_word(config, specs, word)
        for n in (2, 3):
            assert rot_of_word(config, specs, word.repeated(n)) == n * reference


def test_rot_denominator_bound():
    rng = Random(23)
    for _ in range(100):
        config, specs, word = random_case(rng)
        rot = rot_of_word(config, specs, word)
        counts = config.counts
        assert rot.denominator <= min(counts[i] for i in word.used_letters())


def test_points_are_ordered_like_the_line():
    assert LabeledPoint(3, 0) < LabeledPoint(0, 1)
    assert LabeledPoint(0, 1) < LabeledPoint(1, 1)
    assert sorted([LabeledPoint(0, 1), LabeledPoint(3, 0)])[0] == LabeledPoint(3, 0)


# -- dominance ---------------------------------------------------------


def _interpolated_orbit_map(points, advance):
    """The PL map through (x_i, x_{i+p}); monotone, same orbit, <= maximal."""

    def evaluate(x):
        x = F(x)
        import math

        base = math.floor(x)
        spread = abs(advance) // len(points) + 2
        grid = [p + k for k in range(base - spread, base + spread + 1) for p in points]
        hi = next(i for i, c in enumerate(grid) if c >= x)
        if grid[hi] == x:
            return grid[hi + advance]
        x0, x1 = grid[hi - 1], grid[hi]
        y0, y1 = grid[hi - 1 + advance], grid[hi + advance]
        return y0 + (x - x0) * (y1 - y0) / (x1 - x0)

    return evaluate


def _floor_orbit_map(points, advance):
    """Sends [x_i, x_{i+1}) to x_{i+p}; monotone, same orbit, <= maximal."""

    def evaluate(x):
        x = F(x)
        import math

        base = math.floor(x)
        spread = abs(advance) // len(points) + 2
        grid = [p + k for k in range(base - spread, base + spread + 1) for p in points]
        floor_index = max(i for i, c in enumerate(grid) if c <= x)
        return grid[floor_index + advance]

    return evaluate


def test_pointwise_dominance_of_maximal_map():
    rng = Random(29)
    for _ in range(40):
        config, specs, _ = random_case(rng)
        spec = rng.choice(specs)
        maximal = realize_max_map(config, spec)
        points = oracles.letter_points(config.pattern, spec.letter)
        advance = spec.advance_on(config)
        for dominated in (
            _floor_orbit_map(points, advance),
            _interpolated_orbit_map(points, advance),
        ):
            for _ in range(10):
                x = F(rng.randint(-40, 40), rng.randint(1, 20))
                assert dominated(x) <= maximal(x)


def test_word_level_dominance():
    rng = Random(31)
    for _ in range(20):
        config, specs, word = random_case(rng, max_count=3, max_word=3)
        exact = rot_of_word(config, specs, word)
        maps = {}
        for spec in specs:
            points = oracles.letter_points(config.pattern, spec.letter)
            advance = spec.advance_on(config)
            builder = rng.choice((_floor_orbit_map, _interpolated_orbit_map))
            maps[spec.letter] = builder(points, advance)

        def word_map(x):
            for index, _ in reversed(word.letters):
                x = maps[index](x)
            return x

        n = 24
        lo, _hi = estimate_rot(word_map, n, F(0))
        assert exact >= lo


# -- certified intervals -------------------------------------------------


def test_estimate_rot_translation():
    evaluator = lambda x: x + F(1, 3)
    for n in (1, 5, 12):
        lo, hi = estimate_rot(evaluator, n, F(0))
        assert lo <= F(1, 3) <= hi
        assert hi - lo == F(2, n)


def test_estimate_rot_fixed_point():
    config = ZPeriodicConfig.from_string("xy")
    evaluator = realize_max_map(config, MaxMapSpec(0, F(0)))
    lo, hi = estimate_rot(evaluator, 10, F(0))
    assert lo <= 0 <= hi


def test_estimate_rot_brackets_exact_rot():
    rng = Random(37)
    for _ in range(30):
        config, specs, word = random_case(rng, max_count=3, max_word=3)
        exact = rot_of_word(config, specs, word)
        realized = {spec.letter: realize_max_map(config, spec) for spec in specs}

        def word_map(x):
            for index, _ in reversed(word.letters):
                x = realized[index](x)
            return x

        q_last = config.counts[word.letters[-1][0]]
        start = F(config.positions(word.letters[-1][0])[0], config.size)
        lo, hi = estimate_rot(word_map, 2 * q_last, start)
        assert lo <= exact <= hi


def test_estimate_rot_rejects_bad_iteration_count():
    with pytest.raises(InvalidArgument):
        estimate_rot(lambda x: x, 0, F(0))
