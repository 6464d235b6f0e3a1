"""Command-line front end.

Every verb builds a JSON-ready payload and a list of text lines; ``--format``
picks which one is printed.  Exit status is 0 on success, 2 for bad input
and 3 when an internal consistency check fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from . import geometry as geo
from . import lattice as lat
from .configs import parse_config
from .errors import InputError, InvariantViolation
from .exact import as_rational
from .io import load_cubic, load_line, parse_point
from .schemes import SCHEME_TYPES, hilbert_values
from .surface import (
    FIRST,
    SECOND,
    SkewCountReport,
    build_model,
    line_orbits,
    root_census,
    skew_hilbert_count,
    table1_rows,
    uniform_line_types,
)
from .weyl import embed_subsystems, generate_weyl, set_stabilizer_order

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INVARIANT = 3

VERBS = (
    "roots", "lines", "double-sixes", "tritangents", "six-ways", "weyl-order",
    "orbits", "table1", "line-orbits", "skew-count", "classify-line",
    "singularity", "cone", "eckardt", "quadric", "hilbert-poly", "conjugate",
)


@dataclass
class Report:
    payload: object
    text: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.payload, indent=2, ensure_ascii=False)
        return "\n".join(self.text)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # one-line diagnostic, exit 2
        raise InputError(message)


def _vec(v: lat.LatticeVector) -> list[int]:
    return list(v.coords)


def _require(value, flag: str):
    if value is None:
        raise InputError(f"{flag} is required for this command")
    return value


# ---------------------------------------------------------------------------
# lattice verbs
# ---------------------------------------------------------------------------

def _roots(args) -> Report:
    roots = lat.enumerate_roots()
    return Report({"count": len(roots), "roots": [_vec(r) for r in roots]},
                  [f"{len(roots)} roots"] + [str(r) for r in roots])


def _lines(args) -> Report:
    lines = lat.enumerate_lines()
    return Report({"count": len(lines), "lines": [_vec(b) for b in lines]},
                  [f"{len(lines)} line classes"] + [str(b) for b in lines])


def _double_sixes(args) -> Report:
    ds = lat.double_sixes()
    payload = {
        "sextuple_count": len(lat.sextuples()),
        "count": len(ds),
        "double_sixes": [
            {"root": _vec(d.root), "first": [_vec(b) for b in d.first], "second": [_vec(b) for b in d.second]}
            for d in ds
        ],
    }
    text = [f"{payload['sextuple_count']} sextuples, {len(ds)} double-sixes"]
    for d in ds:
        text.append(f"{d.root}: {{{', '.join(map(str, d.first))}}} | {{{', '.join(map(str, d.second))}}}")
    return Report(payload, text)


def _tritangents(args) -> Report:
    trios = lat.tritangent_trios()
    return Report({"count": len(trios), "trios": [[_vec(b) for b in t] for t in trios]},
                  [f"{len(trios)} tritangent trios"] + [", ".join(map(str, t)) for t in trios])


def _six_ways(args) -> Report:
    root = lat.LatticeVector.parse(_require(args.root, "--root"))
    pairs = lat.six_ways(root)
    payload = {"root": _vec(root), "count": len(pairs), "pairs": [[_vec(a), _vec(b)] for a, b in pairs]}
    text = [f"{root} = b1 - b2 in {len(pairs)} ways"] + [f"({a}) - ({b})" for a, b in pairs]
    return Report(payload, text)


def _weyl_order(args) -> Report:
    w = generate_weyl()
    w.check()
    orbit_sizes = [len(o) for o in w.root_orbits()]
    sextuple = [lat.line_index()[lat.E[i]] for i in range(1, 7)]
    stab = set_stabilizer_order(w, sextuple)
    payload = {"order": len(w), "root_orbits": orbit_sizes, "sextuple_stabilizer": stab}
    text = [f"order {len(w)}", f"root orbit sizes {orbit_sizes}", f"stabilizer of {{e1..e6}}: {stab}"]
    return Report(payload, text)


# ---------------------------------------------------------------------------
# singular surface verbs
# ---------------------------------------------------------------------------

def _config(args):
    return parse_config(_require(args.config, "--config"))


def _orbits(args) -> Report:
    config = _config(args)
    classes = embed_subsystems(config)
    indices = range(len(classes)) if args.all_embeddings else [None]
    entries = []
    for idx in indices:
        model = build_model(config, idx)
        census = root_census(model)
        entries.append({
            "class": idx if idx is not None else classes.index(model.embedding_class),
            "geometric": model.geometric,
            "simple_roots": [[_vec(r) for r in block] for block in model.embedding.simple_roots],
            "orbit_count": census.orbit_count,
            "orbit_sizes": census.sizes(),
            "subgroup_order": census.subgroup_order,
            "fundamental_cycles": [
                {"summand": o.summand, "maximal_root": _vec(o.maximal_root)}
                for o in census.orbits if o.contained_in_re
            ],
        })
    payload = {"config": config.label, "embedding_classes": len(classes), "classes": entries}
    text = [f"{config.label}: {len(classes)} embedding class(es)"]
    for e in entries:
        flag = " (geometric)" if e["geometric"] else ""
        text.append(f"class {e['class']}{flag}: {e['orbit_count']} orbits, group order {e['subgroup_order']}")
    return Report(payload, text)


def _table1(args) -> Report:
    rows = table1_rows()
    payload = [{"config": r.config.label, "type": r.roman, "count": r.count} for r in rows]
    text = [f"{r.config.label:<8} {r.roman:<6} {r.count}" for r in rows]
    return Report(payload, text)


def _line_orbits(args) -> Report:
    model = build_model(_config(args))
    orbits = line_orbits(model)
    payload = {
        "config": model.config.label,
        "count": len(orbits),
        "orbits": [
            {"index": o.index, "rep": _vec(o.representative), "multiplicity": o.multiplicity,
             "through": list(o.through)}
            for o in orbits
        ],
    }
    text = [f"{model.config.label}: {len(orbits)} lines"]
    for o in orbits:
        text.append(f"{o.index}: {o.representative} multiplicity {o.multiplicity} through {list(o.through)}")
    return Report(payload, text)


def _parse_line_types(model, specs: Sequence[str]) -> dict[int, str]:
    types: dict[int, str] = {}
    for entry in specs:
        for item in entry.split(","):
            left, sep, right = item.strip().partition(":")
            if not sep:
                raise InputError(f"line type {item!r} is not of the form index:type")
            if right == "all" and left in (FIRST, SECOND):
                types.update(uniform_line_types(model, left))
            else:
                try:
                    types[int(left)] = right
                except ValueError:
                    raise InputError(f"bad orbit index in {item!r}") from None
    return types


def _skew_count(args) -> Report:
    if args.surface is not None:
        f = load_cubic(args.surface)
        vertex = geo.cone_vertex(f)
        if vertex is None or geo.detect_cone(f, vertex) != geo.CONE_SMOOTH:
            raise InputError("explicit surfaces are only counted when they are cones over smooth cubics")
        report = SkewCountReport.elliptic_cone()
        label = "cone over smooth cubic"
    else:
        model = build_model(_config(args))
        report = skew_hilbert_count(model, _parse_line_types(model, args.line_types or []))
        label = model.config.label
    payload = {"config": label, **report.to_json()}
    text = [f"{label}: I={report.type_i} II={report.type_ii} III={report.type_iii} "
            f"IV={report.type_iv} total={report.total}"]
    return Report(payload, text)


# ---------------------------------------------------------------------------
# symbolic verbs
# ---------------------------------------------------------------------------

def _surface(args):
    return load_cubic(_require(args.surface, "--surface"))


def _line(args):
    return load_line(_require(args.line, "--line"))


def _point(args):
    return parse_point(_require(args.point, "--point"))


def _classify_line(args) -> Report:
    f, line = _surface(args), _line(args)
    kind = geo.classify_line(f, line)
    data = geo.dual_map_data(f, line)
    locus = geo.singular_points_on_line(f, line)
    payload = {
        "type": kind,
        "dual_map": [str(q) for q in data.forms],
        "singular_gcd": str(locus.gcd),
        "singular_points": [{"point": p.to_json(), "multiplicity": m} for p, m in locus.points],
    }
    return Report(payload, [kind])


def _singularity(args) -> Report:
    report = geo.classify_singular_point(_surface(args), _point(args), args.jet_bound)
    label = report.ade_label or report.note or "unclassified"
    text = [f"{label}: multiplicity {report.multiplicity}, corank {report.hessian_corank}, "
            f"milnor {report.milnor_number}, cubic part {report.cubic_part_pattern}"]
    return Report(report.to_json(), text)


def _cone(args) -> Report:
    result = geo.detect_cone(_surface(args), _point(args))
    return Report({"result": result}, [result])


def _eckardt(args) -> Report:
    result = geo.eckardt_check(_surface(args), _point(args))
    return Report({"eckardt": result}, ["true" if result else "false"])


def _quadric(args) -> Report:
    a = as_rational(_require(args.a, "--a"))
    b = as_rational(_require(args.b, "--b"))
    h, q = geo.tangent_quadric(a, b)
    tangent = geo.verify_tangent(geo.threefold_normal_form(), q, h, geo.normal_form_line())
    payload = {"a": str(a), "b": str(b), "H": str(h), "Q": str(q), "tangent": tangent,
               "H_terms": h.to_json(), "Q_terms": q.to_json()}
    return Report(payload, [f"H: {h} = 0", f"Q: {q} = 0", f"tangent along L: {tangent}"])


def _hilbert_poly(args) -> Report:
    kinds = [args.ideal] if args.ideal else list(SCHEME_TYPES)
    degrees = list(range(1, args.max_degree + 1))
    payload, text = [], []
    for kind in kinds:
        values = hilbert_values(kind, degrees)
        matches = all(v == 2 * n + 2 for n, v in zip(degrees, values))
        payload.append({"type": kind, "degrees": degrees, "values": values, "equals_2n_plus_2": matches})
        text.append(f"{kind}: {values} {'= 2n+2' if matches else '!= 2n+2'}")
    return Report(payload, text)


def _conjugate(args) -> Report:
    q = geo.conjugate_point(_surface(args), _line(args), _point(args))
    return Report({"point": q.to_json()}, [str(q)])


HANDLERS: dict[str, Callable] = {
    "roots": _roots, "lines": _lines, "double-sixes": _double_sixes,
    "tritangents": _tritangents, "six-ways": _six_ways, "weyl-order": _weyl_order,
    "orbits": _orbits, "table1": _table1, "line-orbits": _line_orbits,
    "skew-count": _skew_count, "classify-line": _classify_line,
    "singularity": _singularity, "cone": _cone, "eckardt": _eckardt,
    "quadric": _quadric, "hilbert-poly": _hilbert_poly, "conjugate": _conjugate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cubic-e6", description="Root, orbit and line combinatorics of cubic surfaces.")
    parser.add_argument("verb", choices=VERBS, metavar="verb", help=" | ".join(VERBS))
    parser.add_argument("--format", choices=("json", "text"), default="text")
    parser.add_argument("--config", help="singularity configuration such as 2A1+A2")
    parser.add_argument("--root", help="root as comma-separated e-basis integers")
    parser.add_argument("--surface", help="cubic form JSON file")
    parser.add_argument("--line", help="line JSON file")
    parser.add_argument("--point", help="point as comma-separated rationals")
    parser.add_argument("--a", help="rational parameter a")
    parser.add_argument("--b", help="rational parameter b")
    parser.add_argument("--jet-bound", type=int, default=geo.DEFAULT_JET_BOUND)
    parser.add_argument("--all-embeddings", action="store_true", help="report every conjugacy class")
    parser.add_argument("--line-types", action="append", help="index:first|second, or first:all / second:all")
    parser.add_argument("--ideal", choices=SCHEME_TYPES, help="one scheme type for hilbert-poly")
    parser.add_argument("--max-degree", type=int, default=6)
    return parser


def run(argv: Sequence[str]) -> tuple[Report, str]:
    """Execute one command; return its report and the requested format."""
    args = build_parser().parse_args(list(argv))
    return HANDLERS[args.verb](args), args.format


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        report, fmt = run(argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    print(report.render(fmt))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
