"""Command line entry point: ``derivscope {info,derive,phi,verify,catalog}``.

Exit codes: 0 all checks pass, 1 a check failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from . import algebra as alg
from . import catalog as cat
from . import verifier as ver
from .algfile import AlgebraFileError, dump, load, parse_rational, serialize
from .derivations import DerivationParams, derivation_space, omega_space, phi
from .linalg import intersect

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def jsonable(x):
    """Exact JSON: Fractions become strings, never floats."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    raise TypeError(f"cannot serialise {type(x).__name__} exactly")


def document(subject: str, command: str, params: dict, results: list, passed: bool) -> dict:
    return {
        "tool_version": __version__,
        "subject": subject,
        "command": command,
        "params": jsonable(params),
        "results": jsonable(results),
        "pass": passed,
    }


def report_to_dict(r: ver.CheckReport) -> dict:
    return {
        "check_name": r.check_name,
        "subject": r.subject,
        "parameters": jsonable(list(r.parameters)),
        "status": r.status,
        "passed": r.passed,
        "witness": r.witness,
        "note": r.note,
    }


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _rational_list(text: str) -> tuple:
    return tuple(_rational(t) for t in text.split(",") if t.strip())


def _load(path: str) -> alg.Algebra:
    try:
        a = load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    except AlgebraFileError as exc:
        raise UsageError(f"{path}: {exc}")
    problems = a.validate()
    if problems:
        raise UsageError(f"{path}: " + "; ".join(problems))
    return a


def invariants(a: alg.Algebra) -> dict:
    g2 = alg.derived_algebra(a)
    z = alg.center(a)
    return {
        "n": a.dim,
        "is_lie": alg.is_lie(a),
        "is_perfect": alg.is_perfect(a),
        "derived": g2.dim,
        "center": z.dim,
        "center_cap_derived": intersect(z, g2).dim,
        "lower_central_2": alg.lower_central_second(a).dim,
        "omega": omega_space(a).dim,
    }


def cmd_info(args) -> tuple[dict, int]:
    a = _load(args.file)
    return document(a.label(), "info", {"file": args.file}, [invariants(a)], True), EXIT_OK


def cmd_derive(args) -> tuple[dict, int]:
    a = _load(args.file)
    p = DerivationParams(args.alpha, args.beta, args.gamma)
    space = derivation_space(a, p)
    result = {"dimension": space.dim, "basis": [[list(r) for r in d.entries] for d in space.basis]}
    params = {"alpha": p.alpha, "beta": p.beta, "gamma": p.gamma}
    return document(a.label(), "derive", params, [result], True), EXIT_OK


def cmd_phi(args) -> tuple[dict, int]:
    a = _load(args.file)
    results = [{"t": t, "phi": phi(a, t)} for t in args.t_set]
    passed = True
    if args.t_set and alg.is_lie(a) and all(t not in (0, 1) for t in args.t_set):
        values = {r["phi"] for r in results}
        passed = len(values) == 1
        results.append({"assertion": "constancy", "holds": passed,
                        "note": "Lie algebra: phi is the same for every t != 0, 1"})
    return document(a.label(), "phi", {"t_set": list(args.t_set)}, results, passed), \
        (EXIT_OK if passed else EXIT_FAIL)


def cmd_verify(args) -> tuple[dict, int]:
    config = ver.VerifyConfig(t_set=args.t_set, s_samples=args.s_samples)
    if args.catalog:
        subject = "catalog"
        reports = ver.run_all(config)
    else:
        if not args.file:
            raise UsageError("verify needs a file or --catalog")
        a = _load(args.file)
        subject = a.label()
        reports = ver.execute(ver.algebra_tasks(a, config))
    passed = ver.overall_pass(reports)
    params = {"t_set": list(config.t_set), "s_samples": list(config.s_samples),
              "catalog": bool(args.catalog)}
    return (document(subject, "verify", params, [report_to_dict(r) for r in reports], passed),
            EXIT_OK if passed else EXIT_FAIL)


def cmd_catalog(args) -> tuple[str, int]:
    if args.name == "list":
        kinds = {int: "<int>", Fraction: "<rational>"}
        lines = [f"{name} {' '.join(kinds[p] for p in parsers)}".rstrip()
                 for name, (_, parsers) in cat.BUILDERS.items()]
        return "\n".join(lines) + "\n", EXIT_OK
    try:
        a = cat.build(args.name, *args.params, abelian_factor=args.abelian_factor)
    except (KeyError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc.args[0]) if exc.args else str(exc))
    if args.output:
        dump(a, args.output)
        return "", EXIT_OK
    return serialize(a), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="derivscope",
                                     description="(alpha,beta,gamma)-derivations of anti-commutative algebras")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="structural invariants of an algebra file")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("derive", help="basis of D(alpha,beta,gamma)")
    p.add_argument("file")
    p.add_argument("--alpha", type=_rational, required=True)
    p.add_argument("--beta", type=_rational, required=True)
    p.add_argument("--gamma", type=_rational, required=True)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("phi", help="dimensions of D(t,1,0) over a set of t")
    p.add_argument("file")
    p.add_argument("--t-set", type=_rational_list, default=cat.DEFAULT_T_SET)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("verify", help="run the verifier on a file or the built-in catalog")
    p.add_argument("file", nargs="?")
    p.add_argument("--catalog", action="store_true")
    p.add_argument("--t-set", type=_rational_list, default=cat.DEFAULT_T_SET)
    p.add_argument("--s-samples", type=_rational_list, default=(1, 2, 3))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="write a built-in algebra ('catalog list' for names)")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("-m", "--abelian-factor", type=int, default=0,
                   help="append an abelian factor K^m")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = args.func(args)
    except UsageError as exc:
        print(f"derivscope: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(out, dict):
        json.dump(out, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
