"""Command-line front end.

Exit codes: 0 success or all checks pass, 1 a verification check failed,
2 invalid input.  Output goes to stdout (or ``--out``) as JSON or text;
the default format comes from ``$WALLCROSS_FORMAT`` and falls back to JSON.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .cohomology import P1QuantumRing, TargetDescriptor
from .givental import ifunction, mirror_transform
from .localization.engine import Insertion, gw_invariant, omega_from_localization
from .localization.graphs import ScopeError
from .report import VerificationReport
from .series import Series, SeriesError
from .tft import irrationality_witness, omega_closed, verify_tft_system
from .verify import SUITES, VerifyConfig, run_suite, verify_all

FORMAT_ENV = "WALLCROSS_FORMAT"

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 1/3, got {text!r}")
    return value


def _tokens(text: str) -> List[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    default_fmt = os.environ.get(FORMAT_ENV, "json")
    if default_fmt not in ("json", "text"):
        default_fmt = "json"
    common.add_argument("--format", choices=("json", "text"), default=default_fmt)
    common.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")

    p = argparse.ArgumentParser(prog="wallcross", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    target = argparse.ArgumentParser(add_help=False)
    target.add_argument("--ambient", type=int, required=True, help="N of the ambient P^N")
    target.add_argument("--degrees", type=_int_list, default=[], help="hypersurface degrees, e.g. 5 or 2,3")
    target.add_argument("--qmax", type=int, default=3)
    target.add_argument("--twisted", action="store_true", help="include the Π(λ - H + az) twist")

    sub.add_parser("ifun", parents=[common, target], help="I-function coefficients")
    mm = sub.add_parser("mirror-map", parents=[common, target], help="mirror transformation μ^ε")
    mm.add_argument("--epsilon", type=_rational, required=True)

    tft = sub.add_parser("tft", parents=[common], help="P^1 TFT quantities")
    mode = tft.add_mutually_exclusive_group(required=True)
    mode.add_argument("--check-lemma", action="store_true")
    mode.add_argument("--omega", nargs=2, type=int, metavar=("G", "N"))
    mode.add_argument("--irrationality", action="store_true")
    tft.add_argument("--insertions", type=_tokens, default=None)
    tft.add_argument("--yorder", type=int, default=4)
    tft.add_argument("--kmax", type=int, default=10)

    loc = sub.add_parser("localize", parents=[common], help="graph sums on M̄_{g,n}(P^1, d)")
    loc.add_argument("--target", choices=("p1",), default="p1")
    loc.add_argument("--omega", action="store_true", help="ω_{g,n} as a y-series instead of one invariant")
    loc.add_argument("--genus", type=int, required=True)
    loc.add_argument("--marks", type=int, required=True)
    loc.add_argument("--degree", type=int, default=1)
    loc.add_argument("--ymax", type=int, default=3)
    loc.add_argument("--insertions", type=_tokens, default=None)
    loc.add_argument("--psi", type=_int_list, default=None)

    ver = sub.add_parser("verify", parents=[common], help="run verification suites")
    ver.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    ver.add_argument("--qmax", type=int, default=VerifyConfig.qmax)
    ver.add_argument("--yorder", type=int, default=VerifyConfig.yorder)
    ver.add_argument("--kmax", type=int, default=VerifyConfig.kmax)
    ver.add_argument("--ymax", type=int, default=VerifyConfig.ymax)
    ver.add_argument("--cases", type=int, default=VerifyConfig.series_cases)
    ver.add_argument("--seed", type=int, default=VerifyConfig.seed)
    ver.add_argument("--ambient", type=int, default=None)
    ver.add_argument("--degrees", type=_int_list, default=[])
    ver.add_argument("--beta", type=int, default=None)
    ver.add_argument("--edge-degree", type=int, default=None)
    return p


# ---------------------------------------------------------------------------
# command bodies return (payload, exit code); payload is a report or a dict


def _target(args) -> TargetDescriptor:
    return TargetDescriptor(args.ambient, tuple(args.degrees))


def _target_dict(t: TargetDescriptor) -> dict:
    return {"N": t.N, "degrees": list(t.degrees)}


def cmd_ifun(args):
    t = _target(args)
    I = ifunction(t, args.qmax, args.twisted)
    return {"command": "ifun", "target": _target_dict(t), "qmax": args.qmax,
            "twisted": args.twisted, "series": I.data}, EXIT_OK


def cmd_mirror(args):
    t = _target(args)
    if args.epsilon <= 0:
        raise InputError("--epsilon must be positive")
    mu = mirror_transform(t, args.epsilon, args.twisted, args.qmax)
    return {"command": "mirror-map", "target": _target_dict(t), "epsilon": args.epsilon,
            "qmax": args.qmax, "twisted": args.twisted,
            "mu": {str(b): s for b, s in mu.components.items()}}, EXIT_OK


def _insertions(ring: P1QuantumRing, tokens: Optional[Sequence[str]], n: int) -> List[Series]:
    tokens = list(tokens) if tokens is not None else ["H"] * n
    if len(tokens) != n:
        raise InputError(f"{n} marks but {len(tokens)} insertions")
    return [ring.parse_class(k) for k in tokens]


def cmd_tft(args):
    if args.check_lemma:
        rep = verify_tft_system(args.yorder)
        return rep, EXIT_OK if rep.passed else EXIT_FAIL
    if args.irrationality:
        rep = irrationality_witness(args.kmax)
        return rep, EXIT_OK if rep.passed else EXIT_FAIL
    g, n = args.omega
    if g < 0 or n < 0:
        raise InputError("genus and number of insertions must be non-negative")
    ring = P1QuantumRing(args.yorder)
    ins = _insertions(ring, args.insertions, n)
    return {"command": "tft", "genus": g, "marks": n, "yorder": args.yorder,
            "insertions": args.insertions or ["H"] * n,
            "omega": omega_closed(g, ins, ring)}, EXIT_OK


def cmd_localize(args):
    g, n = args.genus, args.marks
    if args.omega:
        ring = P1QuantumRing(args.ymax)
        ins = _insertions(ring, args.insertions, n)
        total, per_degree, contribs = omega_from_localization(g, ins, args.ymax, detail=True)
        return {"command": "localize", "mode": "omega", "genus": g, "marks": n, "ymax": args.ymax,
                "insertions": args.insertions or ["H"] * n, "omega": total,
                "per_degree": {str(d): s for d, s in per_degree.items()},
                "contributions": {str(d): [c.as_dict() for c in cs] for d, cs in contribs.items()}}, EXIT_OK
    if args.degree < 0:
        raise InputError("--degree must be non-negative")
    ring = P1QuantumRing(0, lam_window=8 * max(args.degree, 3) + 24)
    classes = _insertions(ring, args.insertions, n)
    psi = args.psi if args.psi is not None else [0] * n
    if len(psi) != n or any(a < 0 for a in psi):
        raise InputError("--psi needs one non-negative exponent per mark")
    ins = [Insertion(c, a) for c, a in zip(classes, psi)]
    total, parts = gw_invariant(g, args.degree, ins, ring.trunc, detail=True)
    negative = [m.lam for m in total.terms if m.lam < 0]
    return {"command": "localize", "mode": "invariant", "genus": g, "marks": n, "degree": args.degree,
            "insertions": args.insertions or ["H"] * n, "psi": psi, "value": total,
            "laurent_polynomial": not negative,
            "contributions": [c.as_dict() for c in parts]}, EXIT_OK


def cmd_verify(args):
    cfg = VerifyConfig(qmax=args.qmax, yorder=args.yorder, kmax=args.kmax, ymax=args.ymax,
                       series_cases=args.cases, seed=args.seed, ambient=args.ambient,
                       degrees=tuple(args.degrees), beta=args.beta, edge_degree=args.edge_degree)
    rep = verify_all(cfg) if args.suite == "all" else run_suite(args.suite, cfg)
    return rep, EXIT_OK if rep.passed else EXIT_FAIL


COMMANDS = {"ifun": cmd_ifun, "mirror-map": cmd_mirror, "tft": cmd_tft,
            "localize": cmd_localize, "verify": cmd_verify}


def _plain(x):
    if isinstance(x, Series):
        return x.to_list()
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


def _text(x, indent: str = "") -> str:
    lines = []
    for k, v in x.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.append(_text(v, indent + "  "))
        elif isinstance(v, Series):
            lines.append(f"{indent}{k}: {v}")
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{indent}{k}: {len(v)} entries")
        else:
            lines.append(f"{indent}{k}: {_plain(v)}")
    return "\n".join(lines)


def render(payload, fmt: str) -> str:
    if isinstance(payload, VerificationReport):
        return payload.to_json() if fmt == "json" else payload.to_text()
    if fmt == "json":
        return json.dumps(_plain(payload), ensure_ascii=False, indent=2)
    return _text(payload)


def run_command(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return int(exc.code or 0)
    try:
        payload, code = COMMANDS[args.command](args)
    except (InputError, ScopeError, SeriesError, ValueError) as exc:
        print(f"wallcross {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = render(payload, args.format) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
