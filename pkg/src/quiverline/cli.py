"""Command-line front end.

One positional argument: a JSON (or TOML) config whose "command" field
selects the operation; the remaining fields are that command's payload.
The JSON report goes to stdout (or --out FILE) with sorted keys and
canonical rational formatting, so identical configs produce identical
bytes.  --pretty adds a human rendering on stderr.  Exit codes: 0 on
success, 2 for schema problems, 3 for mathematical preconditions
(NotTransverse, NotReduced, UnsupportedPresentation, ...), 4 for internal
consistency failures.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path as FsPath
from typing import Callable

from .errors import (
    InternalError,
    PreconditionError,
    QuiverlineError,
    SchemaError,
)
from .exactalg import ProjPoint, divisor_to_mapping
from .homology import certify_hd, resolve
from .orbifold import (
    OrbifoldData,
    PicElement,
    build_ay,
    format_matrix_presentation,
    matrix_presentation,
    pic_normal_form,
    s_dim,
    verify_exceptional_collection,
)
from .path_algebra import (
    GradedIndex,
    LabeledQuiver,
    algebra_rank,
    graded_hom_dim,
    hom_paths,
    is_reduced_labeling,
    path_label,
    require_transverse,
)
from .quiver import (
    enumerate_simple_cycles,
    has_transverse_cycles,
    id_key,
    path_source,
    path_target,
)
from .random_quivers import random_reduced_transverse
from .stability import stability_report
from .errors import InvalidInput, NotReduced


def _load_config(path: str) -> dict:
    text = FsPath(path).read_bytes()
    if path.endswith(".toml"):
        try:
            import tomllib
        except ImportError:  # py3.10
            import tomli as tomllib
        try:
            data = tomllib.loads(text.decode("utf-8"))
        except Exception as exc:
            raise InvalidInput(f"config is not valid TOML: {exc}") from exc
    else:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"config is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InvalidInput("config must be a JSON object")
    return data


def _need(config: dict, key: str):
    if key not in config:
        raise InvalidInput(f"config is missing the {key!r} field")
    return config[key]


def _quiver_arg(config: dict) -> LabeledQuiver:
    raw = _need(config, "quiver")
    if not isinstance(raw, dict):
        raise InvalidInput("'quiver' must be an object")
    return LabeledQuiver.from_json(raw)


def _orbifold_arg(config: dict) -> OrbifoldData:
    return OrbifoldData.from_json(
        {"r": _need(config, "r"), "lambda": _need(config, "lambda")})


def _point_arg(text) -> ProjPoint:
    if not isinstance(text, str):
        raise InvalidInput("points must be strings like '1/2' or 'inf'")
    return ProjPoint.parse(text)


def _cmd_quiver_check(config: dict, args) -> tuple[dict, str]:
    lq = _quiver_arg(config)
    transverse = has_transverse_cycles(lq.quiver)
    reduced = transverse and is_reduced_labeling(lq)
    cycles = enumerate_simple_cycles(lq.quiver)
    report = {
        "vertices": len(lq.quiver.vertices),
        "arrows": len(lq.quiver.arrows),
        "transverse": transverse,
        "reduced": reduced,
        "simple_cycles": len(cycles),
        "rank": algebra_rank(lq),
    }
    pretty = (
        f"{report['vertices']} vertices, {report['arrows']} arrows, "
        f"{report['simple_cycles']} simple cycles\n"
        f"transverse: {transverse}, reduced labeling: {reduced}\n"
        f"rank over the line: {report['rank']}\n"
    )
    return report, pretty


def _cmd_basis(config: dict, args) -> tuple[dict, str]:
    lq = _quiver_arg(config)
    require_transverse(lq)
    if not is_reduced_labeling(lq):
        raise NotReduced("the labeling is not reduced")
    paths = []
    lines = []
    for v in lq.quiver.vertices:
        for w in lq.quiver.vertices:
            for p in hom_paths(lq, v, w):
                paths.append({
                    "source": w,
                    "target": v,
                    "arrows": list(p.arrows),
                    "label": divisor_to_mapping(path_label(lq, p)),
                })
                lines.append(f"{w} -> {v}: {list(p.arrows)}")
    report = {"rank": algebra_rank(lq), "paths": paths}
    return report, "\n".join(lines) + f"\nrank {report['rank']}\n"


def _cmd_matrix(config: dict, args) -> tuple[dict, str]:
    lq = _quiver_arg(config)
    grid = matrix_presentation(lq)
    text = format_matrix_presentation(lq)
    report = {
        "vertices": list(lq.quiver.vertices),
        "matrix": [
            [[divisor_to_mapping(d) for d in entry] for entry in row]
            for row in grid
        ],
        "text": text,
    }
    return report, text


def _cmd_hom_table(config: dict, args) -> tuple[dict, str]:
    lq = _quiver_arg(config)
    require_transverse(lq)
    max_twist = args.max_twist
    entries = []
    lines = []
    verts = sorted(lq.quiver.vertices, key=id_key)
    for v in verts:
        for w in verts:
            for d in range(-max_twist, max_twist + 1):
                dim = graded_hom_dim(
                    lq, GradedIndex(v, 0), GradedIndex(w, d))
                entries.append({"from": v, "to": w, "twist": d, "dim": dim})
                if dim:
                    lines.append(f"({v}, 0) -> ({w}, {d}): {dim}")
    return ({"max_twist": max_twist, "entries": entries},
            "\n".join(lines) + "\n")


def _cmd_resolve(config: dict, args) -> tuple[dict, str]:
    lq = _quiver_arg(config)
    vertex = _need(config, "vertex")
    point = _point_arg(_need(config, "point"))
    known = {str(v): v for v in lq.quiver.vertices}
    if vertex not in set(lq.quiver.vertices):
        vertex = known.get(str(vertex))
        if vertex is None:
            raise InvalidInput(f"no vertex {config['vertex']!r}")
    report = resolve(lq, vertex, point)
    doc = report.to_json()
    lines = [f"pd of the simple at {vertex!r} over {point}: {report.pd}"]
    for k, diff in enumerate(doc["differentials"], start=1):
        lines.append(f"d{k}: {diff}")
    return doc, "\n".join(lines) + "\n"


def _cmd_certify_hd(config: dict, args) -> tuple[dict, str]:
    if "quiver" in config:
        report = certify_hd(_quiver_arg(config)).to_json()
        lines = [
            f"{row['vertex']!r} @ {row['point']}: pd {row['pd']}"
            for row in report["table"]
        ]
        lines.append(f"max pd {report['max_pd']}; "
                     f"bound holds: {report['theorem_hdOQ_satisfied']}")
        return report, "\n".join(lines) + "\n"
    raw = _need(config, "random")
    if not isinstance(raw, dict):
        raise InvalidInput("'random' must be an object")
    count = raw.get("count", 10)
    if not isinstance(count, int) or count < 1:
        raise InvalidInput("'random.count' must be a positive integer")
    rng = random.Random(args.seed)
    reports = []
    max_pd = 0
    for _ in range(count):
        lq = random_reduced_transverse(
            rng,
            max_vertices=raw.get("max_vertices", 6),
            max_label_degree=raw.get("max_label_degree", 3),
        )
        cert = certify_hd(lq)
        max_pd = max(max_pd, cert.max_pd)
        reports.append(cert.to_json())
    doc = {
        "count": count,
        "seed": args.seed,
        "max_pd": max_pd,
        "theorem_hdOQ_satisfied": max_pd <= 2,
        "reports": reports,
    }
    pretty = (f"{count} random quivers (seed {args.seed}): "
              f"max pd {max_pd}, bound holds: {max_pd <= 2}\n")
    return doc, pretty


def _cmd_sdim(config: dict, args) -> tuple[dict, str]:
    data = _orbifold_arg(config)
    raw_deg = _need(config, "degree")
    if not isinstance(raw_deg, dict):
        raise InvalidInput("'degree' must be an object with 'm' and 'a'")
    m, coeffs = PicElement.from_json(raw_deg)
    deg = pic_normal_form(data, m, coeffs)
    dim = s_dim(data, deg)
    return ({"dim": dim},
            f"dim of degree (m={deg.m}; a={list(deg.a)}): {dim}\n")


def _cmd_exccol(config: dict, args) -> tuple[dict, str]:
    data = _orbifold_arg(config)
    report = verify_exceptional_collection(data)
    doc = report.to_json()
    pretty = (
        f"window: {', '.join(report.window)}\n"
        f"total dimension {report.total_dimension}; "
        f"dims equal: {report.dims_equal}; Ext1 = 0: {report.ext1_zero}\n"
    )
    return doc, pretty


def _cmd_stability(config: dict, args) -> tuple[dict, str]:
    chi = _need(config, "chi")
    if (not isinstance(chi, list)
            or not all(isinstance(c, int) and not isinstance(c, bool) for c in chi)):
        raise InvalidInput("'chi' must be a list of integers")
    lam = _need(config, "lambda")
    if not isinstance(lam, list):
        raise InvalidInput("'lambda' must be a list of point strings")
    points = [_point_arg(p) for p in lam]
    if len(chi) != len(points):
        from .errors import DimError
        raise DimError("'chi' and 'lambda' must have equal length")
    report = stability_report(chi, points)
    pretty = (
        f"semistable: {report['semistable']}, stable: {report['stable']}, "
        f"generic: {report['generic']}\nclasses: {report['classes']}\n"
    )
    return report, pretty


_COMMANDS: dict[str, Callable] = {
    "quiver-check": _cmd_quiver_check,
    "basis": _cmd_basis,
    "matrix": _cmd_matrix,
    "hom-table": _cmd_hom_table,
    "resolve": _cmd_resolve,
    "certify-hd": _cmd_certify_hd,
    "sdim": _cmd_sdim,
    "exccol": _cmd_exccol,
    "stability": _cmd_stability,
}


def _emit(doc: dict, args) -> None:
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if args.out:
        FsPath(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="quiverline",
        description="Path algebras of labeled quivers over the projective line.",
    )
    parser.add_argument("config", help="JSON or TOML job file with a 'command' field")
    parser.add_argument("--pretty", action="store_true",
                        help="also print a human-readable report to stderr")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized suites (certify-hd random mode)")
    parser.add_argument("--max-twist", type=int, default=3,
                        help="twist range for hom-table")
    parser.add_argument("--out", default=None,
                        help="write the JSON report to a file instead of stdout")
    args = parser.parse_args(argv)

    try:
        config = _load_config(args.config)
        command = _need(config, "command")
        handler = _COMMANDS.get(command)
        if handler is None:
            raise InvalidInput(
                f"unknown command {command!r}; expected one of "
                + ", ".join(sorted(_COMMANDS)))
        doc, pretty = handler(config, args)
    except OSError as exc:
        _emit({"error": {"name": "ConfigError", "message": str(exc)}}, args)
        return 2
    except SchemaError as exc:
        _emit({"error": {"name": type(exc).__name__, "message": str(exc)}}, args)
        return 2
    except PreconditionError as exc:
        _emit({"error": {"name": type(exc).__name__, "message": str(exc)}}, args)
        return 3
    except InternalError as exc:
        _emit({"error": {"name": type(exc).__name__, "message": str(exc)}}, args)
        return 4
    except QuiverlineError as exc:
        _emit({"error": {"name": type(exc).__name__, "message": str(exc)}}, args)
        return 2
    _emit(doc, args)
    if args.pretty:
        sys.stderr.write(pretty)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
