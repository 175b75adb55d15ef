"""Command-line front end.  Every subcommand prints one JSON report to stdout.

Exit codes: 0 success, 2 input error, 3 not representable, 4 internal
assertion (for instance a failed uniqueness check).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import mckay
from .cyclotomic import CycNumber, Parameter
from .quiver import Quiver, QuiverError
from .repcheck import check_preprojective, matrix_to_json, moment_map, representation_from_json
from .roots import classified_roots_upto
from .sigma import NotRepresentable, alpha_norm, canonical_decomposition, decompositions, sigma_lambda_upto
from .strata import is_smooth, stratum_report

SCHEMA_VERSION = 1

EXIT_INPUT = 2
EXIT_NOT_REPRESENTABLE = 3
EXIT_INTERNAL = 4


class InputError(ValueError):
    pass


def split_values(text: str) -> list[str]:
    """Split on commas that are not inside ``[...]``."""
    out, depth, current = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    out.append("".join(current).strip())
    return [x for x in out if x]


def parse_numbers(text: str) -> list[CycNumber]:
    try:
        return [CycNumber.parse(x) for x in split_values(text)]
    except ValueError as exc:
        raise InputError(str(exc)) from None


def parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def load_json(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        line = text.splitlines()[exc.lineno - 1] if exc.lineno - 1 < len(text.splitlines()) else ""
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}\n    {line}") from None


def load_quiver(path: str) -> Quiver:
    return Quiver.from_json(load_json(path))


def resolve_problem(args) -> tuple[Quiver, Parameter, tuple[int, ...] | None, dict]:
    """Quiver, parameter, target vector and an echo of the inputs."""
    if (args.quiver is None) == (args.group is None):
        raise InputError("give exactly one of a quiver file or --group")
    if (args.lam is None) == (args.c is None):
        raise InputError("give exactly one of --lambda or --c")
    inputs: dict = {}
    alpha = parse_ints(args.alpha) if args.alpha else None
    if args.quiver is not None:
        if args.c is not None:
            raise InputError("--c is only meaningful with --group")
        q = load_quiver(args.quiver)
        lam = Parameter(tuple(parse_numbers(args.lam)))
        if args.n is not None:
            raise InputError("--n is only meaningful with --group")
        inputs.update(quiver=q.to_json())
    else:
        g = mckay.gamma_data(args.group)
        q, builder = mckay.frame(g)
        inputs.update(group=g.kind)
        if args.n is not None:
            if args.n < 1:
                raise InputError("--n must be a positive integer")
            alpha = builder(args.n) if alpha is None else alpha
            inputs.update(n=args.n)
        if args.c is not None:
            if args.n is None:
                raise InputError("--c needs --n to build lambda'")
            c = parse_numbers(args.c)
            lam = mckay.lambda_prime(g, mckay.lambda_of_c(g, c), args.n)
            inputs.update(c=[str(x) for x in c])
        else:
            values = parse_numbers(args.lam)
            if len(values) == len(g.delta):
                if args.n is None:
                    raise InputError("a lambda on the unframed quiver needs --n to build lambda'")
                lam = mckay.lambda_prime(g, values, args.n)
            else:
                lam = Parameter(tuple(values))
    if len(lam) != len(q.vertices):
        raise InputError(f"lambda has {len(lam)} entries but the quiver has {len(q.vertices)} vertices")
    if alpha is not None and len(alpha) != len(q.vertices):
        raise InputError(f"alpha has {len(alpha)} entries but the quiver has {len(q.vertices)} vertices")
    inputs.update(**{"lambda": lam.to_json()})
    if alpha is not None:
        inputs.update(alpha=list(alpha))
    return q, lam, alpha, inputs


def _need_alpha(alpha):
    if alpha is None:
        raise InputError("this command needs --alpha (or --n with --group)")
    return alpha


def cmd_roots(args) -> dict:
    q = load_quiver(args.quiver)
    bound = parse_ints(args.bound)
    if len(bound) != len(q.vertices):
        raise InputError(f"bound has {len(bound)} entries but the quiver has {len(q.vertices)} vertices")
    roots = classified_roots_upto(q, bound)
    return {
        "inputs": {"quiver": q.to_json(), "bound": list(bound)},
        "roots": [{"vector": list(v), "class": c.value} for v, c in roots],
        "count": len(roots),
    }


def cmd_sigma(args) -> dict:
    q, lam, alpha, inputs = resolve_problem(args)
    bound = parse_ints(args.bound) if args.bound else _need_alpha(alpha)
    inputs["bound"] = list(bound)
    found = sigma_lambda_upto(q, lam, bound)
    return {"inputs": inputs, "sigma": [list(v) for v in found], "count": len(found)}


def cmd_decompose(args) -> dict:
    q, lam, alpha, inputs = resolve_problem(args)
    alpha = _need_alpha(alpha)
    found = decompositions(q, lam, alpha)
    if not found:
        raise NotRepresentable(f"{alpha!r} is not a sum of elements of Sigma_lambda")
    canonical = canonical_decomposition(q, lam, alpha)
    return {
        "inputs": inputs,
        "decompositions": [{"parts": d.to_json(), "p_sum": d.p_sum(q)} for d in found],
        "alpha_norm": alpha_norm(q, lam, alpha),
        "canonical": canonical.to_json(),
    }


def cmd_smooth(args) -> dict:
    q, lam, alpha, inputs = resolve_problem(args)
    alpha = _need_alpha(alpha)
    smooth, witness = is_smooth(q, lam, alpha)
    if witness is None:
        shown = None
    elif isinstance(witness, tuple):
        shown = {"part": list(witness[0]), "multiplicity": witness[1]}
    else:
        shown = {"decomposition": witness.to_json()}
    return {"inputs": inputs, "smooth": smooth, "witness": shown}


def cmd_leaves(args) -> dict:
    q, lam, alpha, inputs = resolve_problem(args)
    alpha = _need_alpha(alpha)
    report = {"inputs": inputs}
    report.update(stratum_report(q, lam, alpha))
    return report


def cmd_mckay_info(args) -> dict:
    g = mckay.gamma_data(args.group)
    info = mckay.mckay_info(g)
    info["framing_lemma"] = {str(n): mckay.check_framing_lemma(g, n) for n in range(1, 6)}
    return {"inputs": {"group": g.kind}, **info}


def cmd_check_rep(args) -> dict:
    data = load_json(args.rep)
    r = representation_from_json(data)
    lam = Parameter(tuple(parse_numbers(args.lam)))
    if len(lam) != len(r.alpha):
        raise InputError(f"lambda has {len(lam)} entries but alpha has {len(r.alpha)}")
    mu = moment_map(r)
    verdict, reason = check_preprojective(r, lam)
    return {
        "inputs": {"alpha": list(r.alpha), "lambda": lam.to_json()},
        "moment_map": [matrix_to_json(m) for m in mu],
        "preprojective": verdict,
        "reason": reason,
    }


def _add_problem_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("quiver", nargs="?", help="quiver JSON file")
    p.add_argument("--group", help="cyclic:l, bindihedral:l, bintetra, binocta or binicosa (framed McKay quiver)")
    p.add_argument("--lambda", dest="lam", help="comma-separated parameter, rationals p/q or [c0,...]@N")
    p.add_argument("--c", help="c1 followed by one value per nontrivial conjugacy class (needs --group)")
    p.add_argument("--alpha", help="comma-separated dimension vector")
    p.add_argument("--n", type=int, help="use alpha = e_inf + n delta (needs --group)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quiverleaves", description=__doc__.splitlines()[0])
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    parser.add_argument("--timing", action="store_true", help="add wall-clock seconds to the report")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="positive roots below a bound", parents=[common])
    p.add_argument("quiver")
    p.add_argument("--bound", required=True)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("sigma", help="elements of Sigma_lambda below a bound", parents=[common])
    _add_problem_args(p)
    p.add_argument("--bound", help="defaults to alpha")
    p.set_defaults(func=cmd_sigma)

    for name, func, text in (
        ("decompose", cmd_decompose, "decompositions, |alpha|_lambda and the canonical decomposition"),
        ("smooth", cmd_smooth, "smoothness of N(lambda, alpha) with a witness"),
        ("leaves", cmd_leaves, "symplectic leaves with dimensions"),
    ):
        p = sub.add_parser(name, help=text, parents=[common])
        _add_problem_args(p)
        p.set_defaults(func=func)

    p = sub.add_parser("mckay-info", help="McKay quiver, delta and character table", parents=[common])
    p.add_argument("--group", required=True)
    p.set_defaults(func=cmd_mckay_info)

    p = sub.add_parser("check-rep", help="moment map and preprojective relation on explicit matrices", parents=[common])
    p.add_argument("rep", help="representation JSON file")
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=cmd_check_rep)
    return parser


VALUE_OPTIONS = ("--lambda", "--c", "--alpha", "--bound")


def glue_values(argv: list[str]) -> list[str]:
    """Attach option values such as ``--lambda -2,2`` so argparse does not read them as flags."""
    out = []
    it = iter(argv)
    for token in it:
        if token in VALUE_OPTIONS:
            value = next(it, None)
            out.append(token if value is None else f"{token}={value}")
        else:
            out.append(token)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(glue_values(list(sys.argv[1:] if argv is None else argv)))
    start = time.perf_counter()
    try:
        body = args.func(args)
    except NotRepresentable as exc:
        print(f"quiverleaves: not representable: {exc}", file=sys.stderr)
        return EXIT_NOT_REPRESENTABLE
    except (InputError, QuiverError, mckay.GroupError, ValueError) as exc:
        print(f"quiverleaves: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"quiverleaves: internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    report = {"command": args.command, **body}
    report["schema_version"] = SCHEMA_VERSION
    if args.timing:
        report["seconds"] = round(time.perf_counter() - start, 6)
    print(json.dumps(report, indent=2 if args.pretty else None, ensure_ascii=False))
    return 0


if __name__ == "__main__":
    sys.exit(main())
