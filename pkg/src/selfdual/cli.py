"""Command line front end.

    selfdual run  --input problem.json [--output out.json] [--threads N] [--config cfg.json]
    selfdual scan --input problem.json [--grid "x=-2:2:1/2,s=1:8:1"] [--output out.csv]

Exit codes: 0 success, 2 a named invariant failed, 3 the input does not
match its schema (or is not JSON). Results go to stdout or ``--output``;
the wall time goes to stderr so that result files are byte-reproducible.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Any, Callable

import jsonschema

from . import enumeration, fixtures, k3, nilpotent, reduction, schemas
from .errors import SelfDualError
from .exact import Gauss, Matrix, format_fraction, to_fraction
from .hodge import load_weil
from .lattice import PolarizedLattice

EXIT_OK = 0
EXIT_INVARIANT = 2
EXIT_SCHEMA = 3


class SchemaError(Exception):
    def __init__(self, message: str, location: str = "$"):
        super().__init__(message)
        self.location = location


# encoding -----------------------------------------------------------------


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return format_fraction(obj)
    if isinstance(obj, Gauss):
        return obj.to_json()
    if isinstance(obj, Matrix):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2) + "\n"


def input_digest(problem: dict) -> str:
    canonical = json.dumps(problem, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


# loading ------------------------------------------------------------------


def _location(error: jsonschema.ValidationError) -> str:
    return "$" + "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in error.absolute_path)


def _validate(data: Any, schema: dict) -> None:
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(data), key=lambda e: (len(e.absolute_path), list(map(str, e.absolute_path))))
    if errors:
        best = jsonschema.exceptions.best_match(errors)
        raise SchemaError(best.message, _location(best))


def load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from None


def load_problem(path: str) -> dict:
    data = load_json(path)
    _validate(data, schemas.PROBLEM)
    _validate(data, schemas.PROBLEMS[data["kind"]])
    return data


def load_config(path: str | None) -> dict:
    if path is None:
        return {}
    data = load_json(path)
    _validate(data, schemas.CONFIG)
    return data


_HODGE_PRESETS = {
    "elliptic-curve": fixtures.elliptic_curve,
    "elliptic-sym2": fixtures.elliptic_sym2,
    "hyperbolic-swap": fixtures.hyperbolic_swap,
}
_ORBIT_PRESETS = {
    "sym2": fixtures.sym2_orbit_input,
    "sym2-type": fixtures.sym2_type_orbit_input,
    "trivial": fixtures.trivial_orbit_input,
}


def _structure(problem: dict, default: str | None = None):
    if "preset" in problem or ("lattice" not in problem and default):
        return _HODGE_PRESETS[problem.get("preset", default)]()
    lattice = PolarizedLattice.from_json(problem["lattice"])
    return lattice, load_weil(lattice, problem["hodge"])


def _orbit(problem: dict) -> nilpotent.SL2OrbitData:
    if "preset" in problem:
        data = _ORBIT_PRESETS[problem["preset"]]()
        return nilpotent.validate_sl2(data["lattice"], data["N"], data["Y"], data["F"])
    return nilpotent.orbit_from_json(problem["orbit"])


# handlers -----------------------------------------------------------------


def _enumerate(fn):
    def handler(problem: dict, threads: int, config: dict) -> dict:
        lattice, c = _structure(problem)
        return fn(lattice, c, problem["q"], threads=threads).to_json()

    return handler


def _orbit_classify(problem: dict, threads: int, config: dict) -> dict:
    orbit = _orbit(problem)
    component = nilpotent.classify_locus(orbit, problem["vector"])
    out = component.to_json()
    if component.note:
        out["note"] = component.note
    return out


def _orbit_scan(problem: dict, threads: int, config: dict) -> dict:
    orbit = _orbit(problem)
    xs, ss = parse_grid(problem.get("grid"))
    rows = scan_rows(orbit, problem["vector"], xs, ss, threads=threads)
    return {
        "component": nilpotent.classify_locus(orbit, problem["vector"]).to_json(),
        "grid": [{"x": x, "s": s, "selfdual": flag} for x, s, flag in rows],
    }


def _check_reduced(problem: dict, threads: int, config: dict) -> dict:
    params = reduction.ReductionParams.from_config(problem["t"], config)
    g = Matrix(problem["gram"])
    return reduction.is_t_reduced(g, [[to_fraction(a) for a in v] for v in problem["basis"]], params).to_json()


def _siegel_member(problem: dict, threads: int, config: dict) -> dict:
    lattice, c = _structure(problem)
    params = reduction.ReductionParams.from_config(problem["t"], config)
    basis = [[to_fraction(a) for a in v] for v in problem["basis"]]
    return reduction.siegel_membership(lattice, basis, params, c).to_json()


def _k3_locus(problem: dict, threads: int, config: dict) -> dict:
    lattice = PolarizedLattice.from_json(problem["lattice"])
    if not k3.is_period_point(lattice, problem["sigma"]):
        return {"period_point": False}
    period = k3.k3_period(lattice, problem["sigma"])
    rank, label = k3.transcendental_rank(period)
    return {
        "period_point": True,
        "transcendental_rank": rank,
        "label": label,
        "locus_basis": k3.locus_basis(period),
        "membership": [
            {"vector": v, "contains": k3.antiselfdual_locus_contains(period, v)} for v in problem.get("vectors", [])
        ],
    }


def _tadpole(problem: dict, threads: int, config: dict) -> dict:
    lattice, c = _structure(problem, default="elliptic-curve")
    result = enumeration.enumerate_pairs(lattice, c, problem["ell"], threads=threads)
    n = lattice.rank
    return {
        "ell": problem["ell"],
        "count": result.count,
        "flux_pairs": [{"F": list(x[:n]), "H": list(x[n:])} for x in result.vectors],
    }


HANDLERS: dict[str, Callable[[dict, int, dict], dict]] = {
    "enumerate-selfdual": _enumerate(enumeration.enumerate_selfdual),
    "enumerate-antiselfdual": _enumerate(enumeration.enumerate_antiselfdual),
    "enumerate-pairs": _enumerate(enumeration.enumerate_pairs),
    "orbit-classify": _orbit_classify,
    "orbit-scan": _orbit_scan,
    "check-reduced": _check_reduced,
    "siegel-member": _siegel_member,
    "k3-locus": _k3_locus,
    "tadpole-demo": _tadpole,
}


def run_problem(problem: dict, threads: int = 1, config: dict | None = None) -> dict:
    result = HANDLERS[problem["kind"]](problem, threads, config or {})
    return {"kind": problem["kind"], "input_digest": input_digest(problem), "result": result}


# grids --------------------------------------------------------------------


def _axis(text: str) -> list[Fraction]:
    try:
        lo, hi, step = (to_fraction(p.strip()) for p in text.split(":"))
    except (ValueError, TypeError, ZeroDivisionError):
        raise SchemaError(f"bad grid axis {text!r}; expected a:b:step") from None
    if step <= 0 or hi < lo:
        raise SchemaError(f"bad grid axis {text!r}; need step > 0 and a <= b")
    out, x = [], lo
    while x <= hi:
        out.append(x)
        x += step
    return out


def parse_grid(text: str | None) -> tuple[list[Fraction], list[Fraction]]:
    xs, ss = nilpotent.default_grid()
    if not text:
        return xs, ss
    seen = set()
    for part in text.split(","):
        name, _, axis = part.partition("=")
        name = name.strip()
        if name not in ("x", "s") or name in seen:
            raise SchemaError(f"bad grid component {part!r}", "$.grid")
        seen.add(name)
        if name == "x":
            xs = _axis(axis)
        else:
            ss = _axis(axis)
    if ss[0] <= 0:
        raise SchemaError("grid values of s = sqrt(y) must be positive", "$.grid")
    return xs, ss


def scan_rows(orbit, vector, xs, ss, threads: int = 1) -> list[tuple[Fraction, Fraction, int]]:
    nodes = [(x, s) for x in xs for s in ss]

    def node(point):
        return (*point, int(nilpotent.is_selfdual_at(orbit, vector, *point)))

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(node, nodes))
    else:
        rows = [node(p) for p in nodes]
    return sorted(rows)


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x", "s", "selfdual"])
    for x, s, flag in rows:
        writer.writerow([format_fraction(x), format_fraction(s), flag])
    return buf.getvalue()


# entry point --------------------------------------------------------------


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="selfdual", description="Exact self-dual class enumeration and loci.")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="solve a JSON problem file")
    run.add_argument("--input", required=True)
    run.add_argument("--output")
    run.add_argument("--threads", type=int, default=1)
    run.add_argument("--config")
    scan = sub.add_parser("scan", help="evaluate the self-duality predicate on an (x, s) grid")
    scan.add_argument("--input", required=True)
    scan.add_argument("--output")
    scan.add_argument("--grid")
    scan.add_argument("--threads", type=int, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    problem: dict = {}
    try:
        if args.threads < 1:
            raise SchemaError("--threads must be >= 1", "--threads")
        problem = load_problem(args.input)
        if args.command == "run":
            report = run_problem(problem, args.threads, load_config(args.config))
            _write(dumps(report), args.output)
        else:
            if problem["kind"] not in ("orbit-scan", "orbit-classify"):
                raise SchemaError(f"scan needs an orbit problem, got {problem['kind']!r}", "$.kind")
            xs, ss = parse_grid(args.grid or problem.get("grid"))
            rows = scan_rows(_orbit(problem), problem["vector"], xs, ss, threads=args.threads)
            _write(rows_to_csv(rows), args.output)
    except SchemaError as exc:
        print(f"selfdual: schema error at {exc.location}: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except SelfDualError as exc:
        name = getattr(exc, "invariant", type(exc).__name__)
        location = getattr(exc, "location", None) or problem.get("kind", "$")
        print(f"selfdual: invariant '{name}' failed at {location}: {getattr(exc, 'message', exc)}", file=sys.stderr)
        return EXIT_INVARIANT
    except OSError as exc:
        print(f"selfdual: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    print(f"selfdual: {args.command} finished in {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
