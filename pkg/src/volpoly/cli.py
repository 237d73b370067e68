"""Command-line front end: one subcommand per operation family, JSON in, JSON out.

Exit codes: 0 when the checked condition holds (or the command just computes
something), 1 when it fails (the report carries a witness), 2 on input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from typing import Callable

from .discrete import (
    MConvexSet,
    PolymatroidRank,
    PrimeFieldMatrix,
    SimpleGraph,
    bases_from_rank,
    basis_generating_poly,
    dual_mconvex,
    duality_vector,
    graphic_matroid,
    is_mconvex,
    is_polymatroid_rank,
    linear_matroid,
    matroid_status,
    rank_from_bases,
)
from .errors import CapError, VolpolyError
from .lorentzian import jsonable, falsify_definition, inertia, is_lorentzian
from .operators import MonomialOperator, kt_scan, rkt_scan, symbol
from .poly import HomogeneousPoly
from .polytope import BodyCollection, RationalPolytope, hull_volume, mixed_volume, project, volume_polynomial
from .rational import format_fraction
from .realizability import (
    PairVector,
    pair_matrix,
    principal_4x4_violations,
    projection_pair_vector,
    t2_plucker_violations,
    triangle_condition,
)
from .special import YoungDiagram, fano_matrix, fano_poly, kostka, normalized_schur

MAX_VOLUME_VERTICES = 60


class InputError(Exception):
    pass


def _require(data, key):
    if not isinstance(data, dict) or key not in data:
        raise InputError(f"missing field {key!r}")
    return data[key]


def _vertex_cap(bodies):
    total = sum(len(P) for P in bodies)
    if total > MAX_VOLUME_VERTICES:
        raise CapError("vertices", MAX_VOLUME_VERTICES, total)


# ------------------------------------------------------------- commands
# each returns (holds, result dict)


def cmd_check_lorentzian(data, args):
    f = HomogeneousPoly.from_json(data)
    verdict = is_lorentzian(f)
    return verdict.accepted, verdict.to_json()


def cmd_falsify(data, args):
    f = HomogeneousPoly.from_json(data)
    w = falsify_definition(f, args.samples, args.seed)
    return w is None, {"samples": args.samples, "seed": args.seed, "witness": w.to_json() if w else None}


def cmd_check_mconvex(data, args):
    J = MConvexSet.from_json(data)
    v = is_mconvex(J)
    wit = None if v else {"alpha": list(v.witness[0]), "beta": list(v.witness[1]), "i": v.witness[2]}
    return v.ok, {"mconvex": v.ok, "matroid": matroid_status(J), "witness": wit}


def cmd_rank_bases(data, args):
    J = MConvexSet.from_json(data)
    v = is_mconvex(J)
    if not J.points:
        raise InputError("rank-bases needs a nonempty set")
    if not v:
        wit = {"alpha": list(v.witness[0]), "beta": list(v.witness[1]), "i": v.witness[2]}
        return False, {"rank": None, "witness": wit}
    return True, {"rank": rank_from_bases(J).to_json()}


def cmd_bases_rank(data, args):
    h = PolymatroidRank.from_json(data)
    v = is_polymatroid_rank(h)
    if not v:
        return False, {"axiom": v.axiom, "witness": [list(s) for s in v.witness], "bases": None}
    return True, {"bases": bases_from_rank(h).to_json(), "is_matroid": v.is_matroid}


def cmd_dual(data, args):
    J = MConvexSet.from_json(data)
    mu = data.get("mu") or (list(duality_vector(J)) if J.points else None)
    if mu is None:
        raise InputError("dual of the empty set needs an explicit mu")
    return True, {"mu": list(mu), "dual": dual_mconvex(J, mu).to_json()}


def cmd_graphic(data, args):
    G = SimpleGraph.from_json(data)
    J = graphic_matroid(G)
    return True, {"bases": J.to_json(), "count": len(J), "polynomial": basis_generating_poly(J).to_json()}


def cmd_linear_matroid(data, args):
    M = PrimeFieldMatrix.from_json(data)
    J = linear_matroid(M)
    return True, {"bases": J.to_json(), "count": len(J), "matroid": matroid_status(J)}


def cmd_basis_poly(data, args):
    J = MConvexSet.from_json(data)
    return True, {"polynomial": basis_generating_poly(J).to_json()}


def cmd_volume_poly(data, args):
    C = BodyCollection.from_json(data)
    _vertex_cap(C.bodies)
    f = volume_polynomial(C)
    return True, {"polynomial": f.to_json()}


def cmd_mixed_volume(data, args):
    C = BodyCollection.from_json(data)
    _vertex_cap(C.bodies)
    alpha = _require(data, "alpha")
    return True, {"alpha": list(alpha), "mixed_volume": format_fraction(mixed_volume(C, alpha))}


def cmd_project(data, args):
    P = RationalPolytope.from_json(_require(data, "polytope"))
    _vertex_cap([P])
    mode = data.get("mode", "keep")
    if data.get("pairs"):
        pv = projection_pair_vector(P, mode)
        return True, {"mode": mode, "pairs": pv.to_json()}
    Q = project(P, _require(data, "coords"), mode).reduced()
    return True, {"mode": mode, "polytope": Q.to_json(), "volume": format_fraction(hull_volume(Q))}


def cmd_realizable4(data, args):
    p = PairVector.from_json(data)
    verdict = triangle_condition(p)
    return verdict != "fail", {"condition": "triangle", "verdict": verdict}


CONDITIONS = ("one-positive", "principal-4x4", "t2-plucker")


def cmd_condition_n5(data, args):
    p = PairVector.from_json(data)
    chosen = CONDITIONS if args.condition == "all" else (args.condition,)
    out = {}
    for name in chosen:
        if name == "one-positive":
            sig = inertia(pair_matrix(p))
            out[name] = {"holds": sig[0] <= 1, "inertia": list(sig)}
        elif name == "principal-4x4":
            bad = principal_4x4_violations(p)
            out[name] = {"holds": not bad, "witness": [list(s) for s in bad[:1]] or None}
        else:
            bad = t2_plucker_violations(p)
            out[name] = {"holds": not bad, "witness": [list(s) for s in bad[:1]] or None}
    return all(v["holds"] for v in out.values()), {"conditions": out}


def cmd_schur(data, args):
    lam = YoungDiagram.from_json(data)
    n = int(_require(data, "n"))
    return True, {"polynomial": normalized_schur(lam, n).to_json()}


def cmd_kostka(data, args):
    lam = YoungDiagram.from_json(data)
    return True, {"kostka": kostka(lam, _require(data, "mu"))}


def cmd_fano(data, args):
    f = fano_poly()
    return True, {"matrix": fano_matrix().to_json(), "terms": len(f), "polynomial": f.to_json()}


def cmd_minors(data, args):
    f = HomogeneousPoly.from_json(_require(data, "poly"))
    steps = []
    for op in _require(data, "ops"):
        kind, j = op
        if kind == "delete":
            f = f.delete(int(j))
        elif kind == "contract":
            f = f.contract(int(j))
        else:
            raise InputError(f"unknown minor operation {kind!r}")
        steps.append([kind, int(j)])
    return True, {"ops": steps, "polynomial": f.to_json()}


def cmd_symbol(data, args):
    T = MonomialOperator.from_json(data)
    return True, {"symbol": symbol(T).to_json()}


def cmd_rkt_scan(data, args):
    v = rkt_scan(HomogeneousPoly.from_json(data))
    return not v, {"violations": [x.to_json() for x in v]}


def cmd_kt_scan(data, args):
    v = kt_scan(HomogeneousPoly.from_json(data))
    return not v, {"violations": [x.to_json() for x in v]}


COMMANDS: dict[str, tuple[Callable, str]] = {
    "check-lorentzian": (cmd_check_lorentzian, "certify or reject a polynomial"),
    "falsify": (cmd_falsify, "random search for a violated directional inequality"),
    "check-mconvex": (cmd_check_mconvex, "symmetric exchange test on a point set"),
    "rank-bases": (cmd_rank_bases, "rank function of an M-convex set"),
    "bases-rank": (cmd_bases_rank, "M-convex set of a rank function"),
    "dual": (cmd_dual, "dual set mu - J"),
    "graphic": (cmd_graphic, "spanning-tree matroid of a graph"),
    "linear-matroid": (cmd_linear_matroid, "column matroid over Q or GF(p)"),
    "basis-poly": (cmd_basis_poly, "basis generating polynomial"),
    "volume-poly": (cmd_volume_poly, "volume polynomial of polytopes"),
    "mixed-volume": (cmd_mixed_volume, "one mixed volume"),
    "project": (cmd_project, "coordinate projection and its volume"),
    "realizable4": (cmd_realizable4, "triangle condition on four indices"),
    "condition-n5": (cmd_condition_n5, "matrix conditions on pair vectors"),
    "schur": (cmd_schur, "normalized Schur polynomial"),
    "kostka": (cmd_kostka, "Kostka number"),
    "fano": (cmd_fano, "Fano basis polynomial"),
    "minors": (cmd_minors, "delete/contract chain"),
    "symbol": (cmd_symbol, "symbol of an operator"),
    "rkt-scan": (cmd_rkt_scan, "reverse Khovanskii-Teissier scan"),
    "kt-scan": (cmd_kt_scan, "Khovanskii-Teissier scan"),
}

NO_INPUT = {"fano"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="volpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--input", "-i", help="JSON input file (default: stdin)")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--samples", type=int, default=1000)
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--timing", action="store_true", help="include wall time (breaks byte-determinism)")
        if name == "condition-n5":
            sp.add_argument("--condition", choices=CONDITIONS + ("all",), default="all")
    return parser


def _read_input(args) -> bytes:
    if args.command in NO_INPUT and args.input is None:
        return b""
    if args.input:
        with open(args.input, "rb") as fh:
            return fh.read()
    return sys.stdin.buffer.read()


def _render_text(report: dict) -> str:
    lines = []

    def walk(prefix, v):
        if isinstance(v, dict) and v:
            for k in v:
                walk(f"{prefix}.{k}" if prefix else k, v[k])
        else:
            lines.append(f"{prefix}: {json.dumps(v, sort_keys=True)}")

    walk("", report)
    return "\n".join(lines) + "\n"


def _emit(report: dict, fmt: str):
    if fmt == "text":
        sys.stdout.write(_render_text(report))
    else:
        sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    func, _ = COMMANDS[args.command]
    raw = b""
    try:
        raw = _read_input(args)
        data = json.loads(raw) if raw.strip() else {}
        start = time.perf_counter()
        holds, result = func(data, args)
        elapsed = time.perf_counter() - start
    except json.JSONDecodeError as exc:
        err = {"kind": "json", "message": exc.msg, "line": exc.lineno, "column": exc.colno, "position": exc.pos}
        return _fail_input(args, raw, err)
    except CapError as exc:
        return _fail_input(args, raw, {"kind": "cap", "cap": exc.cap, "limit": exc.limit, "value": exc.value})
    except (VolpolyError, InputError, KeyError, TypeError, ValueError, OSError) as exc:
        return _fail_input(args, raw, {"kind": "input", "message": str(exc)})
    report = {
        "command": args.command,
        "input_sha256": hashlib.sha256(raw).hexdigest(),
        "holds": holds,
        "result": jsonable(result),
    }
    if args.timing:
        report["timing_s"] = round(elapsed, 6)
    _emit(report, args.format)
    return 0 if holds else 1


def _fail_input(args, raw: bytes, err: dict) -> int:
    report = {"command": args.command, "input_sha256": hashlib.sha256(raw).hexdigest(), "error": err}
    _emit(report, args.format)
    return 2


def main() -> None:
    sys.exit(run())
