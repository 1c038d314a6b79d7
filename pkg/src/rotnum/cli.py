"""Command-line front end.

Every subcommand prints exact fractions; nothing is ever rounded except
inside image exports.  Exit codes: 0 success, 1 syntax/parse problems,
2 semantic validation problems, 3 unresolved rotation numbers,
4 relator or lift obstructions.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .configs import ZPeriodicConfig
from .errors import (
    InconsistentSplitting,
    InvalidArgument,
    InvalidComparison,
    InvalidPL,
    InvalidSpec,
    InverseNotSupported,
    LiftObstruction,
    NotInCentralizer,
    NotResolved,
    ParseError,
    RelatorNotSatisfied,
)
from .monotone import MaxMapSpec, rot_of_word
from .rationals import format_fraction, parse_fraction
from .surface import (
    compare_fingerprints,
    euler_number,
    fingerprint,
    lift_census,
    parse_fingerprint_csv,
    parse_rep_file,
    write_fingerprint_csv,
)
from .words import Word
from .ziggurat import (
    R_w,
    closed_form_Rfg,
    inf_w,
    milnor_wood_chain,
    read_grid_csv,
    write_grid_csv,
    write_grid_pgm,
    ziggurat_grid,
)

_EXIT_PARSE = 1
_EXIT_VALIDATION = 2
_EXIT_NOT_RESOLVED = 3
_EXIT_OBSTRUCTION = 4


class _Parser(argparse.ArgumentParser):
    """argparse with the package's exit-code contract (parse errors -> 1)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(_EXIT_PARSE)


def _parse_rots(text: str) -> tuple[Fraction, ...]:
    return tuple(parse_fraction(part) for part in text.split(","))


def _cmd_rot_word(args) -> int:
    config = ZPeriodicConfig.from_string(args.config)
    rots = _parse_rots(args.rots)
    if len(rots) != config.arity:
        raise InvalidArgument(
            f"configuration has {config.arity} letters but {len(rots)} "
            "rotation numbers were given"
        )
    word = Word.from_string(args.word, arity=config.arity)
    specs = tuple(MaxMapSpec(i, rot) for i, rot in enumerate(rots))
    print(format_fraction(rot_of_word(config, specs, word)))
    return 0


def _cmd_rw(args) -> int:
    word = Word.from_string(args.word)
    rots = _parse_rots(args.rots)
    value = inf_w(word, *rots) if args.inf else R_w(word, *rots)
    print(format_fraction(value))
    return 0


def _cmd_rfg(args) -> int:
    print(format_fraction(closed_form_Rfg(parse_fraction(args.s), parse_fraction(args.t))))
    return 0


def _cmd_ziggurat(args) -> int:
    word = Word.from_string(args.word)
    if word.arity != 2 and (args.pgm or args.png):
        raise InvalidArgument("heightmaps and figures need a two-letter word")
    grid = ziggurat_grid(word, args.max_den, jobs=args.jobs)
    with open(args.csv, "w", newline="") as stream:
        write_grid_csv(grid, stream)
    if args.pgm:
        with open(args.pgm, "wb") as stream:
            write_grid_pgm(grid, stream)
    if args.png:
        from .report import render_heatmap

        render_heatmap(
            grid.axis,
            grid.values,
            args.png,
            title=f"R_{word}(s, t), denominators <= {args.max_den}",
        )
    return 0


def _cmd_plot(args) -> int:
    with open(args.grid, "rb") as probe:
        is_pgm = probe.read(2) == b"P5"
    if is_pgm:
        from .report import render_pgm_png

        render_pgm_png(args.grid, args.out, title=args.title)
        return 0
    with open(args.grid) as stream:
        names, rows = read_grid_csv(stream)
    if len(names) != 3:
        raise InvalidArgument("only two-letter grids can be plotted")
    axis = tuple(sorted({coords[0] for coords, _ in rows}))
    expected = {(s, t) for s in axis for t in axis}
    if {coords for coords, _ in rows} != expected:
        raise InvalidArgument("grid CSV does not cover a full square grid")
    by_key = dict(rows)
    values = tuple(by_key[(s, t)] for s in axis for t in axis)
    from .report import render_heatmap

    render_heatmap(axis, values, args.out, title=args.title)
    return 0


def _cmd_euler(args) -> int:
    with open(args.rep) as stream:
        rep = parse_rep_file(stream)
    print(euler_number(rep))
    return 0


def _cmd_fingerprint(args) -> int:
    if args.compare:
        first_path, second_path = args.compare
        with open(first_path) as stream:
            first = parse_fingerprint_csv(stream)
        with open(second_path) as stream:
            second = parse_fingerprint_csv(stream)
        print(compare_fingerprints(first, second))
        return 0
    if not args.rep:
        raise ParseError("fingerprint needs --rep FILE (or --compare A B)")
    with open(args.rep) as stream:
        rep = parse_rep_file(stream)
    fp = fingerprint(rep, args.radius, qmax=args.qmax)
    if args.out:
        with open(args.out, "w", newline="") as stream:
            write_fingerprint_csv(fp, stream)
    else:
        write_fingerprint_csv(fp, sys.stdout)
    return 0


def _cmd_census(args) -> int:
    census = lift_census(args.genus, args.k)
    print(f"euler: {format_fraction(census.euler)}")
    for vector in census.vectors:
        print(",".join(format_fraction(value) for value in vector))
    return 0


def _cmd_mw_bound(args) -> int:
    chain = milnor_wood_chain(args.genus)
    if args.chain:
        for i, value in enumerate(chain.after_commutators, start=1):
            print(f"after {i} commutators: {format_fraction(value)}")
    print(format_fraction(chain.bound))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="rotnum",
        description="Exact rotation-number calculus for circle maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "rot-word",
        help="rotation number of a positive word of maximal monotone maps",
        description=(
            "Evaluate a positive word in maximal monotone maps on a point "
            "configuration.  Configuration: a string over a-z, one letter per "
            "point, e.g. 'xyxy'.  Rotation numbers: comma-separated fractions, "
            "one per letter, e.g. '1/2,1/2'.  Word: letters by first "
            "appearance, e.g. 'fg' (f acts on the configuration's first "
            "letter).  Example: rot-word --config xyxy --rots 1/2,1/2 "
            "--word fg  prints 3/2."
        ),
    )
    p.add_argument("--config", required=True, help="cyclic configuration, e.g. xyxy")
    p.add_argument("--rots", required=True, help="comma-separated fractions, e.g. 1/2,1/2")
    p.add_argument("--word", required=True, help="positive word, e.g. fg")
    p.set_defaults(func=_cmd_rot_word)

    p = sub.add_parser(
        "rw",
        help="extremal rotation number R_w over all configurations",
        description=(
            "Maximum rotation number of a positive word given the rotation "
            "number of each letter, maximizing over all cyclic configurations. "
            "Example: rw --word fg --rots 1/2,1/2  prints 3/2; add --inf for "
            "the minimum instead."
        ),
    )
    p.add_argument("--word", required=True, help="positive word, e.g. fgffg")
    p.add_argument("--rots", required=True, help="comma-separated fractions")
    p.add_argument("--inf", action="store_true", help="compute the infimum instead")
    p.set_defaults(func=_cmd_rw)

    p = sub.add_parser(
        "rfg",
        help="closed form of R_fg(s, t)",
        description="Closed form for the two-letter product. Example: rfg 1/2 1/2  prints 3/2.",
    )
    p.add_argument("s", help="fraction, e.g. 1/2")
    p.add_argument("t", help="fraction, e.g. 1/2")
    p.set_defaults(func=_cmd_rfg)

    p = sub.add_parser(
        "ziggurat",
        help="tabulate R_w on a rational grid; CSV plus optional images",
        description=(
            "Evaluate R_w at every pair of fractions in [0,1) with denominator "
            "<= MAX_DEN and write 's,t,R' rows of exact fractions. Optional "
            "exports: --pgm heightmap (binary P5, s left-to-right, t top-to-"
            "bottom, values scaled to 0..255) and --png heatmap figure. "
            "Example: ziggurat --word fgffg --max-den 3 --csv zig.csv"
        ),
    )
    p.add_argument("--word", required=True, help="positive word, e.g. fgffg")
    p.add_argument("--max-den", type=int, required=True, help="denominator bound")
    p.add_argument("--csv", required=True, help="output CSV path")
    p.add_argument("--pgm", help="optional PGM heightmap path")
    p.add_argument("--png", help="optional PNG heatmap path")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers (same output)")
    p.set_defaults(func=_cmd_ziggurat)

    p = sub.add_parser(
        "plot",
        help="render a previously exported grid (CSV or PGM) as a PNG",
        description=(
            "Re-read a ziggurat export and render it: exact heatmap from a "
            "CSV ('s,t,R' rows), grayscale preview from a P5 heightmap. "
            "Example: plot zig.csv --out zig.png"
        ),
    )
    p.add_argument("grid", help="CSV or PGM produced by the ziggurat subcommand")
    p.add_argument("--out", required=True, help="PNG output path")
    p.add_argument("--title", default="R(s, t)", help="figure title")
    p.set_defaults(func=_cmd_plot)

    p = sub.add_parser(
        "euler",
        help="Euler number of a representation file",
        description=(
            "Representation file: 'genus: g' then one line per generator, "
            "'a1: rot: 1/2' or 'b1: pl: 0→0, 1/2→3/4' (ASCII -> works too). "
            "Prints the integer Euler number."
        ),
    )
    p.add_argument("rep", help="representation file path")
    p.set_defaults(func=_cmd_euler)

    p = sub.add_parser(
        "fingerprint",
        help="semi-conjugacy fingerprint of a representation, or compare two",
        description=(
            "Writes a CSV: a genus,radius block, a gen,rot block, then "
            "word1,word2,tau rows. With --compare A B, re-reads two exported "
            "fingerprints and prints 'distinguished <witness>' or "
            "'inconclusive'. Example: fingerprint --rep torus.rep --radius 1"
        ),
    )
    p.add_argument("--rep", help="representation file path")
    p.add_argument("--radius", type=int, default=1, help="max word length")
    p.add_argument("--qmax", type=int, default=32, help="rotation detection depth")
    p.add_argument("--out", help="output CSV path (default: stdout)")
    p.add_argument("--compare", nargs=2, metavar=("FP1", "FP2"), help="compare two exports")
    p.set_defaults(func=_cmd_fingerprint)

    p = sub.add_parser(
        "census",
        help="rotation-number vectors of the k^(2g) lifted geometric reps",
        description=(
            "Prints the common Euler number (2g-2)/k and one comma-separated "
            "rotation vector per line. Example: census --genus 2 --k 2"
        ),
    )
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser(
        "mw-bound",
        help="Milnor-Wood bound 2g-2 via the commutator chain",
        description=(
            "Reproduces the inductive bound on g commutators; --chain also "
            "prints the intermediate bound after each commutator. "
            "Example: mw-bound --genus 2  prints 2."
        ),
    )
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--chain", action="store_true", help="print intermediate bounds")
    p.set_defaults(func=_cmd_mw_bound)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_PARSE
    except (
        InvalidArgument,
        InvalidSpec,
        InverseNotSupported,
        InvalidPL,
        NotInCentralizer,
        InconsistentSplitting,
        InvalidComparison,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_VALIDATION
    except NotResolved as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_NOT_RESOLVED
    except (RelatorNotSatisfied, LiftObstruction) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_OBSTRUCTION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
