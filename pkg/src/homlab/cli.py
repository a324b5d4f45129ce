"""Command-line front end.

Exit codes: 0 verdict computed, 1 failing verdict (FAIL / VIOLATION /
COUNTEREXAMPLE / failed selftest), 2 usage or parse error, 3 resource
bound exceeded.  ``--json`` switches every subcommand to one JSON object
per line with fields {command, verdict, certificate?, values?}.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .acceptance import run_all
from .classes import (
    cancellation_admits,
    cancellation_probe,
    hd_closed_check,
    homind_decide,
    in_closure,
    parse_class_spec,
    witness_pair,
)
from .errors import (
    FormulaParseError,
    GraphParseError,
    ProbeSearchError,
    SizeBoundError,
)
from .expansions import (
    IDENTITY_NAMES,
    expand_identity,
    identity_sides,
    identity_takes_pair,
)
from .fo import (
    check_self_complementarity,
    complement_formula,
    default_corpus,
    format_formula,
    parse_formula,
)
from .graphs import parse_graph, render_graph
from .homcount import hom

OK, VERDICT_FAIL, USAGE, BOUND = 0, 1, 2, 3


class _Output:
    def __init__(self, command: str, as_json: bool):
        self.command = command
        self.as_json = as_json

    def emit(self, verdict: str, certificate=None, values=None, lines=()):
        if self.as_json:
            obj = {"command": self.command, "verdict": verdict}
            if certificate is not None:
                obj["certificate"] = certificate
            if values is not None:
                obj["values"] = values
            print(json.dumps(obj, sort_keys=True))
        else:
            print(f"RESULT {verdict}")
            for line in lines:
                print(line)

    def raw(self, text: str, verdict: str = "OK", values=None):
        if self.as_json:
            obj = {"command": self.command, "verdict": verdict}
            if values is not None:
                obj["values"] = values
            print(json.dumps(obj, sort_keys=True))
        else:
            print(text)


def _read_graph(path: str):
    return parse_graph(Path(path).read_text())


def _read_class(path: str):
    return parse_class_spec(Path(path).read_text())


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="homlab")
    top = parser.add_subparsers(dest="cmd", required=True)

    p_hom = top.add_parser("hom").add_subparsers(dest="sub", required=True)
    p = p_hom.add_parser("count", parents=[common])
    p.add_argument("f_file")
    p.add_argument("g_file")

    p_id = top.add_parser("identity").add_subparsers(dest="sub", required=True)
    p = p_id.add_parser("expand", parents=[common])
    p.add_argument("name", choices=IDENTITY_NAMES)
    p.add_argument("f_file")
    p.add_argument("--group", action="store_true")
    p = p_id.add_parser("verify", parents=[common])
    p.add_argument("name", choices=IDENTITY_NAMES)
    p.add_argument("f_file")
    p.add_argument("g_file")
    p.add_argument("h_file", nargs="?")

    p_cl = top.add_parser("closure").add_subparsers(dest="sub", required=True)
    p = p_cl.add_parser("member", parents=[common])
    p.add_argument("class_file")
    p.add_argument("k_file")
    p = p_cl.add_parser("hd-check", parents=[common])
    p.add_argument("class_file")
    p.add_argument("--bound", type=int, required=True)
    p = p_cl.add_parser("witness", parents=[common])
    p.add_argument("class_file")
    p.add_argument("k_file")
    p.add_argument("--seed", type=int, required=True)

    p_hi = top.add_parser("homind").add_subparsers(dest="sub", required=True)
    p = p_hi.add_parser("decide", parents=[common])
    p.add_argument("class_file")
    p.add_argument("g_file")
    p.add_argument("h_file")

    p_ca = top.add_parser("cancel").add_subparsers(dest="sub", required=True)
    p = p_ca.add_parser("check", parents=[common])
    p.add_argument("class_file")
    p.add_argument("k_file")
    p.add_argument("--trials", type=int)
    p.add_argument("--max-n", type=int, default=5, dest="max_n")
    p.add_argument("--seed", type=int)

    p_fo = top.add_parser("fo").add_subparsers(dest="sub", required=True)
    p = p_fo.add_parser("complement", parents=[common])
    p.add_argument("formula")
    p = p_fo.add_parser("check", parents=[common])
    p.add_argument("--corpus")
    p.add_argument("--max-n", type=int, default=4, dest="max_n")

    top.add_parser("selftest", parents=[common])
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    try:
        return _dispatch(args)
    except (GraphParseError, FormulaParseError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (SizeBoundError, ProbeSearchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BOUND


def _dispatch(args) -> int:
    cmd = args.cmd
    if cmd == "selftest":
        return _cmd_selftest(args)
    sub = args.sub
    if cmd == "hom":
        return _cmd_hom_count(args)
    if cmd == "identity":
        return _cmd_identity_expand(args) if sub == "expand" else _cmd_identity_verify(args)
    if cmd == "closure":
        if sub == "member":
            return _cmd_closure_member(args)
        if sub == "hd-check":
            return _cmd_closure_hd(args)
        return _cmd_closure_witness(args)
    if cmd == "homind":
        return _cmd_homind(args)
    if cmd == "cancel":
        return _cmd_cancel(args)
    if cmd == "fo":
        return _cmd_fo_complement(args) if sub == "complement" else _cmd_fo_check(args)
    raise AssertionError(f"unhandled command {cmd}")


def _cmd_hom_count(args) -> int:
    out = _Output("hom count", args.json)
    count = hom(_read_graph(args.f_file), _read_graph(args.g_file))
    out.raw(str(count), values={"count": str(count)})
    return OK


def _cmd_identity_expand(args) -> int:
    out = _Output("identity expand", args.json)
    expansion = expand_identity(args.name, _read_graph(args.f_file))
    if args.group:
        expansion = expansion.grouped()
    if identity_takes_pair(args.name):
        rows = [
            (str(c), render_graph(l), render_graph(r)) for l, r, c in expansion.terms
        ]
    else:
        rows = [(str(c), render_graph(t)) for t, c in expansion.terms]
    if args.json:
        out.emit("OK", values={"terms": [list(r) for r in rows]})
    else:
        for row in rows:
            print("\t".join(row))
    return OK


def _cmd_identity_verify(args) -> int:
    out = _Output("identity verify", args.json)
    f = _read_graph(args.f_file)
    g = _read_graph(args.g_file)
    h = _read_graph(args.h_file) if args.h_file else None
    lhs, rhs = identity_sides(args.name, f, g, h)
    verdict = "OK" if lhs == rhs else "FAIL"
    if args.json:
        out.emit(verdict, values={"lhs": str(lhs), "rhs": str(rhs)})
    else:
        print(f"{verdict} lhs={lhs} rhs={rhs}")
    return OK if verdict == "OK" else VERDICT_FAIL


def _cmd_closure_member(args) -> int:
    out = _Output("closure member", args.json)
    decision = in_closure(_read_class(args.class_file), _read_graph(args.k_file))
    basis_texts = [render_graph(c) for c in decision.basis]
    gen_texts = [render_graph(g) for g in decision.restricted.generators]
    if decision.member:
        coeffs = [str(c) for c in decision.certificate.coefficients]
        cert = {"basis": basis_texts, "generators": gen_texts, "coefficients": coeffs}
        lines = [f"BASIS\t{b}" for b in basis_texts] + [
            f"COEFF\t{c}\t{g}" for c, g in zip(coeffs, gen_texts)
        ]
        out.emit("IN", certificate=cert, lines=lines)
    else:
        z = list(decision.certificate.separator)
        cert = {"basis": basis_texts, "z": z}
        lines = [f"BASIS\t{b}" for b in basis_texts] + [
            "Z\t" + "\t".join(str(x) for x in z)
        ]
        out.emit("OUT", certificate=cert, lines=lines)
    return OK


def _cmd_closure_hd(args) -> int:
    out = _Output("closure hd-check", args.json)
    verdict = hd_closed_check(_read_class(args.class_file), args.bound)
    if verdict.status == "closed":
        out.emit("CLOSED", values={"bound": verdict.bound})
        return OK
    if verdict.status == "violation":
        text = render_graph(verdict.witness)
        out.emit("VIOLATION", certificate={"witness": text}, lines=[f"WITNESS\t{text}"])
        return VERDICT_FAIL
    out.emit(
        f"NO-VIOLATION-UP-TO {verdict.bound}",
        values={"bound": verdict.bound},
    )
    return OK


def _cmd_closure_witness(args) -> int:
    out = _Output("closure witness", args.json)
    spec = _read_class(args.class_file)
    k = _read_graph(args.k_file)
    pair = witness_pair(spec, k, seed=args.seed)
    h_text, hp_text = render_graph(pair.h), render_graph(pair.h_prime)
    values = {
        "h": h_text,
        "h_prime": hp_text,
        "t": str(pair.t),
        "scale": pair.scale,
        "hom_k": [str(hom(k, pair.h)), str(hom(k, pair.h_prime))],
    }
    out.emit(
        "WITNESS",
        values=values,
        lines=[
            f"H\t{h_text}",
            f"HPRIME\t{hp_text}",
            f"T\t{pair.t}",
            f"HOMK\t{hom(k, pair.h)}\t{hom(k, pair.h_prime)}",
        ],
    )
    return OK


def _cmd_homind(args) -> int:
    out = _Output("homind decide", args.json)
    decision = homind_decide(
        _read_class(args.class_file), _read_graph(args.g_file), _read_graph(args.h_file)
    )
    if decision.equivalent:
        out.emit("EQUIVALENT")
    else:
        text = render_graph(decision.distinguisher)
        cg, ch = decision.counts
        out.emit(
            "DISTINGUISHER",
            certificate={"f": text, "counts": [str(cg), str(ch)]},
            lines=[f"F\t{text}", f"COUNTS\t{cg}\t{ch}"],
        )
    return OK


def _cmd_cancel(args) -> int:
    out = _Output("cancel check", args.json)
    spec = _read_class(args.class_file)
    k = _read_graph(args.k_file)
    admits = cancellation_admits(spec, k)
    lines = []
    values = {}
    code = OK
    if args.trials is not None:
        if args.seed is None:
            print("error: --trials requires --seed", file=sys.stderr)
            return USAGE
        report = cancellation_probe(spec, k, args.trials, args.max_n, seed=args.seed)
        if report.passed:
            lines.append(f"PROBE\tpass\t{report.passes}")
            values["probe"] = {"passes": report.passes}
        else:
            g, h = report.counterexample
            lines.append(f"PROBE\tcounterexample\t{render_graph(g)}\t{render_graph(h)}")
            values["probe"] = {
                "counterexample": [render_graph(g), render_graph(h)],
            }
            code = VERDICT_FAIL
    out.emit("ADMITS" if admits else "REFUSES", values=values or None, lines=lines)
    return code


def _cmd_fo_complement(args) -> int:
    out = _Output("fo complement", args.json)
    phi = parse_formula(args.formula)
    text = format_formula(complement_formula(phi))
    out.raw(text, values={"formula": text})
    return OK


def _cmd_fo_check(args) -> int:
    out = _Output("fo check", args.json)
    if args.corpus:
        corpus = [
            parse_formula(line)
            for line in Path(args.corpus).read_text().splitlines()
            if line.strip() and not line.strip().startswith("#")
        ]
    else:
        corpus = default_corpus()
    report = check_self_complementarity(corpus, max_n=args.max_n)
    if report.passed:
        out.emit(
            "OK",
            values={"formulas": report.formulas, "checks": report.checks},
            lines=[f"CHECKED\t{report.checks}"],
        )
        return OK
    phi, g, assignment = report.counterexample
    out.emit(
        "COUNTEREXAMPLE",
        certificate={
            "formula": format_formula(phi),
            "graph": render_graph(g),
            "assignment": dict(assignment),
        },
        lines=[
            f"FORMULA\t{format_formula(phi)}",
            f"GRAPH\t{render_graph(g)}",
            "ASSIGNMENT\t" + " ".join(f"{v}={x}" for v, x in assignment),
        ],
    )
    return VERDICT_FAIL


def _cmd_selftest(args) -> int:
    out = _Output("selftest", args.json)
    results = run_all()
    failed = [r for r in results if not r.passed]
    if args.json:
        out.emit(
            "OK" if not failed else "FAIL",
            values={
                "criteria": [
                    {
                        "number": r.number,
                        "name": r.name,
                        "passed": r.passed,
                        "seconds": round(r.seconds, 2),
                        "detail": r.detail,
                    }
                    for r in results
                ]
            },
        )
    else:
        for r in results:
            mark = "PASS" if r.passed else "FAIL"
            print(f"{mark}  criterion {r.number}: {r.name} ({r.seconds:.1f}s) - {r.detail}")
        print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return OK if not failed else VERDICT_FAIL


if __name__ == "__main__":
    sys.exit(main())
