"""Command-line interface: volume, verify, sweep, mixed-volume, normalize.

Exit codes: 0 success, 1 verification found a property violation, 2 bad
input (bounds, files, arguments), 3 internal disagreement between
computation methods. Code 3 marks a bug in this package, never a user
error, so CI can tell the two apart.

All values are exact rationals printed as "p/q" strings; JSON output
adds a companion ``*_decimal`` field per rational, rounded to 12
significant digits, as a convenience only.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from fractions import Fraction
from itertools import product
from typing import Sequence

from . import trilinear
from .errors import InternalDisagreement, InvalidBounds, TrivolError
from .geometry import support
from .mixed_volume import volume_cubic
from .oracle import hull_volume_4d
from .rational import format_rational, parse_rational
from .trilinear import (
    Box3Bounds,
    closed_form_volume,
    extreme_points,
    mixed_volumes_QR,
    omega_check,
    omega_dprime_check,
    omega_normalize,
    omega_prime_check,
    ordering_values,
    pipeline_volume,
    q_facet_directions,
    q_vertex_points,
    r_facet_directions,
    r_vertex_points,
)

__all__ = ["main", "run"]


def _decimal(x: Fraction) -> float:
    """Round to 12 significant digits, as a display convenience."""
    return float(f"{float(x):.12g}")


def _emit_rational(out: dict, name: str, value: Fraction) -> None:
    out[name] = format_rational(value)
    out[name + "_decimal"] = _decimal(value)


def _parse_bounds_text(text: str) -> Box3Bounds:
    """Bounds from the interleaved form a1,b1,a2,b2,a3,b3."""
    parts = [p for p in text.split(",")]
    if len(parts) != 6:
        raise InvalidBounds(f"--bounds needs 6 comma-separated values, got {len(parts)}")
    try:
        vals = [parse_rational(p) for p in parts]
    except ValueError as exc:
        raise InvalidBounds(str(exc)) from exc
    return Box3Bounds((vals[0], vals[2], vals[4]), (vals[1], vals[3], vals[5]))


def _load_json(path: str) -> object:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidBounds(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidBounds(f"{path} is not valid JSON: {exc}") from exc


def _box_from_file(path: str) -> Box3Bounds:
    doc = _load_json(path)
    if not isinstance(doc, dict) or "a" not in doc or "b" not in doc:
        raise InvalidBounds(f'{path} must be a JSON object with "a" and "b" lists')
    a, b = doc["a"], doc["b"]
    if not isinstance(a, list) or not isinstance(b, list) or len(a) != 3 or len(b) != 3:
        raise InvalidBounds('"a" and "b" must be lists of three rationals')
    try:
        return Box3Bounds(
            tuple(parse_rational(v) for v in a), tuple(parse_rational(v) for v in b)
        )
    except ValueError as exc:
        raise InvalidBounds(str(exc)) from exc


def _box_from_args(args: argparse.Namespace) -> Box3Bounds:
    if args.bounds is not None:
        return _parse_bounds_text(args.bounds)
    return _box_from_file(args.file)


def _add_box_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--bounds",
        metavar="a1,b1,a2,b2,a3,b3",
        help="bounds interleaved per axis; entries are integers, decimals or p/q",
    )
    group.add_argument(
        "--file",
        metavar="BOX.json",
        help='JSON file {"a": [r,r,r], "b": [r,r,r]}',
    )


def cmd_volume(args: argparse.Namespace) -> int:
    box = _box_from_args(args)
    methods = ("formula", "pipeline", "oracle") if args.method == "all" else (args.method,)
    out: dict = {
        "a": [format_rational(x) for x in box.a],
        "b": [format_rational(x) for x in box.b],
    }
    volumes = []
    if "formula" in methods:
        v = closed_form_volume(box)
        _emit_rational(out, "vol_formula", v)
        volumes.append(v)
    if "pipeline" in methods:
        report = pipeline_volume(box)
        _emit_rational(out, "vol_pipeline", report.vol_pipeline)
        inter: dict = {}
        _emit_rational(inter, "vol_q", report.intermediates.vol_q)
        _emit_rational(inter, "vol_r", report.intermediates.vol_r)
        _emit_rational(inter, "v_qqr", report.intermediates.v_qqr)
        _emit_rational(inter, "v_qrr", report.intermediates.v_qrr)
        out["intermediates"] = inter
        volumes.append(report.vol_pipeline)
    if "oracle" in methods:
        v = hull_volume_4d(list(extreme_points(box)))
        _emit_rational(out, "vol_oracle", v)
        volumes.append(v)
    agree = True
    if len(volumes) >= 2:
        agree = all(v == volumes[0] for v in volumes)
        out["agree"] = agree
    print(json.dumps(out, indent=2))
    return 0 if agree else 3


def _random_box(rng: random.Random, max_bound: int) -> Box3Bounds:
    a = []
    b = []
    for _ in range(3):
        lo = rng.randint(0, max_bound - 1)
        hi = rng.randint(lo + 1, max_bound)
        a.append(Fraction(lo))
        b.append(Fraction(hi))
    return Box3Bounds((a[0], a[1], a[2]), (b[0], b[1], b[2]))


def _fmt_box(box: Box3Bounds) -> str:
    a = ",".join(format_rational(x) for x in box.a)
    b = ",".join(format_rational(x) for x in box.b)
    return f"a=({a}) b=({b})"


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_bound < 1:
        print("error: --max-bound must be at least 1", file=sys.stderr)
        return 2
    rng = random.Random(args.seed)
    trials = args.trials

    cases = 0
    for _ in range(trials):
        norm = omega_normalize(_random_box(rng, args.max_bound))
        nb = norm.bounds
        q_dirs = q_facet_directions(nb)
        r_dirs = r_facet_directions(nb)
        r_pts = r_vertex_points(nb)
        q_pts = q_vertex_points(nb)
        for i in range(1, 9):
            closed = trilinear.support_max_z(i, norm)
            if i <= 4:
                generic = support(r_pts, q_dirs[i - 1])
            else:
                generic = support(q_pts, r_dirs[i - 5])
            if closed != generic:
                print(
                    f"FAIL support-max closed forms: index {i} at {_fmt_box(nb)}: "
                    f"closed form {closed} != generic max {generic}"
                )
                return 1
            cases += 1
    print(f"ok support-max closed forms ({cases} cases)")

    cases = 0
    for _ in range(trials):
        box = _random_box(rng, args.max_bound)
        flags = (omega_check(box), omega_prime_check(box), omega_dprime_check(box))
        if len(set(flags)) != 1:
            print(
                f"FAIL ordering-condition equivalence at {_fmt_box(box)}: "
                f"key form {flags[0]}, ratio form {flags[1]}, difference form {flags[2]}"
            )
            return 1
        cases += 1
    print(f"ok ordering-condition equivalence ({cases} cases)")

    cases = 0
    for _ in range(trials):
        norm = omega_normalize(_random_box(rng, args.max_bound))
        if norm.bounds.a[2] == 0:
            continue
        v_qqr, v_qrr = mixed_volumes_QR(norm)
        if v_qqr != v_qrr:
            print(
                f"FAIL mixed-volume symmetry at {_fmt_box(norm.bounds)}: "
                f"{v_qqr} != {v_qrr}"
            )
            return 1
        cases += 1
    print(f"ok mixed-volume symmetry ({cases} cases)")

    cases = 0
    for _ in range(trials):
        box = _random_box(rng, args.max_bound)
        try:
            formula = closed_form_volume(box)
            pipeline = pipeline_volume(box).vol_pipeline
            oracle = hull_volume_4d(list(extreme_points(box)))
        except InternalDisagreement as exc:
            print(f"FAIL three-way agreement at {_fmt_box(box)}: {exc}")
            return 1
        if not (formula == pipeline == oracle):
            print(
                f"FAIL three-way agreement at {_fmt_box(box)}: "
                f"formula {formula}, pipeline {pipeline}, oracle {oracle}"
            )
            return 1
        cases += 1
    print(f"ok three-way agreement ({cases} cases)")

    print(f"all checks passed ({trials} trials, seed {args.seed})")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    doc = _load_json(args.file)
    if not isinstance(doc, dict):
        raise InvalidBounds(f"{args.file} must be a JSON object")
    keys = ("a1", "b1", "a2", "b2", "a3", "b3")
    grids = []
    for key in keys:
        values = doc.get(key)
        if not isinstance(values, list) or not values:
            raise InvalidBounds(f'sweep grid "{key}" must be a non-empty list')
        try:
            grids.append([parse_rational(v) for v in values])
        except ValueError as exc:
            raise InvalidBounds(f'sweep grid "{key}": {exc}') from exc
    drop_invalid = doc.get("filter") == "valid"

    def fmt(x: Fraction) -> str:
        return repr(float(x)) if args.float else format_rational(x)

    rows = []
    skipped = 0
    for a1, b1, a2, b2, a3, b3 in product(*grids):
        try:
            box = Box3Bounds((a1, a2, a3), (b1, b2, b3))
        except InvalidBounds:
            if drop_invalid:
                skipped += 1
                continue
            raise
        volume = closed_form_volume(box)
        perm = "".join(str(d) for d in omega_normalize(box).perm)
        rows.append([fmt(v) for v in (a1, b1, a2, b2, a3, b3, volume)] + [perm])

    sink = open(args.out, "w", encoding="utf-8", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(["a1", "b1", "a2", "b2", "a3", "b3", "volume", "perm"])
        writer.writerows(rows)
        if skipped:
            sink.write(f"# skipped: {skipped}\n")
    finally:
        if args.out:
            sink.close()
    return 0


def cmd_mixed_volume(args: argparse.Namespace) -> int:
    doc = _load_json(args.file)
    if not isinstance(doc, dict) or "k" not in doc or "l" not in doc:
        raise InvalidBounds(f'{args.file} must be a JSON object with "k" and "l" vertex lists')

    def body(name: str) -> list:
        raw = doc[name]
        if not isinstance(raw, list) or not raw:
            raise InvalidBounds(f'body "{name}" must be a non-empty list of points')
        pts = []
        for entry in raw:
            if not isinstance(entry, list) or len(entry) != 3:
                raise InvalidBounds(f'body "{name}" points must be 3-coordinate lists')
            try:
                pts.append(tuple(parse_rational(c) for c in entry))
            except ValueError as exc:
                raise InvalidBounds(f'body "{name}": {exc}') from exc
        return pts

    cubic = volume_cubic(body("k"), body("l"))
    out: dict = {}
    _emit_rational(out, "c0", cubic.c0)
    _emit_rational(out, "c1", cubic.c1)
    _emit_rational(out, "c2", cubic.c2)
    _emit_rational(out, "c3", cubic.c3)
    _emit_rational(out, "V_KKL", cubic.v_kkl)
    _emit_rational(out, "V_KLL", cubic.v_kll)
    print(json.dumps(out, indent=2))
    return 0


def cmd_normalize(args: argparse.Namespace) -> int:
    box = _box_from_args(args)
    norm = omega_normalize(box)
    out = {
        "ordering_values": [format_rational(v) for v in ordering_values(box)],
        "perm": list(norm.perm),
        "normalized": {
            "a": [format_rational(x) for x in norm.bounds.a],
            "b": [format_rational(x) for x in norm.bounds.b],
        },
    }
    print(json.dumps(out, indent=2))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trivol",
        description=(
            "Exact volume of the convex hull of the graph of y = x1*x2*x3 "
            "over a box, by three independent methods."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_volume = sub.add_parser("volume", help="volume of one box, as JSON")
    _add_box_source(p_volume)
    p_volume.add_argument(
        "--method",
        choices=("formula", "pipeline", "oracle", "all"),
        default="all",
        help="which computation(s) to run (default: all, cross-checked)",
    )
    p_volume.set_defaults(handler=cmd_volume)

    p_verify = sub.add_parser("verify", help="run the property suites on random boxes")
    p_verify.add_argument("--trials", type=int, default=200, help="boxes per suite")
    p_verify.add_argument(
        "--seed",
        type=int,
        default=int(os.environ.get("TRIVOL_SEED", "0")),
        help="RNG seed (default: $TRIVOL_SEED or 0)",
    )
    p_verify.add_argument(
        "--max-bound", type=int, default=10, help="bounds drawn from integers 0..M"
    )
    p_verify.set_defaults(handler=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="CSV of volumes over a parameter grid")
    p_sweep.add_argument("--file", required=True, metavar="SWEEP.json")
    p_sweep.add_argument(
        "--float", action="store_true", help="emit floats instead of p/q rationals"
    )
    p_sweep.add_argument("--out", metavar="OUT.csv", help="write CSV here instead of stdout")
    p_sweep.set_defaults(handler=cmd_sweep)

    p_mixed = sub.add_parser(
        "mixed-volume", help="volume polynomial of Minkowski combinations of two bodies"
    )
    p_mixed.add_argument("--file", required=True, metavar="BODIES.json")
    p_mixed.set_defaults(handler=cmd_mixed_volume)

    p_norm = sub.add_parser("normalize", help="axis ordering keys and permutation")
    _add_box_source(p_norm)
    p_norm.set_defaults(handler=cmd_normalize)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.handler(args)
    except InternalDisagreement as exc:
        print(f"internal disagreement (this is a bug): {exc}", file=sys.stderr)
        return 3
    except TrivolError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
