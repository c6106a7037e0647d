"""
``groth-kit`` command line.

Exit codes: 0 success, 1 parse or internal error, 2 domain refusal,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance, bpd, groth, zeroone
from .perm import Permutation
from .poly import to_json, to_latex, to_text
from .scan import ALL_CHECKS, run_scan

EXIT_OK, EXIT_ERROR, EXIT_REFUSED, EXIT_FAILED = 0, 1, 2, 3


def _emit(obj):
    print(json.dumps(obj, indent=2))


def cmd_compute(args) -> int:
    w = Permutation.parse(args.perm)
    if args.kind == "schubert":
        if args.engine == "bpd":
            f = groth.schubert_bpd(w, args.variant)
        else:
            f = groth.schubert_dd(w, args.variant)
    elif args.engine == "bpd":
        f = groth.grothendieck_bpd(w, args.variant)
    else:
        f = groth.grothendieck_dd(w, args.variant)
    if args.format == "json":
        print(json.dumps(to_json(f)))
    elif args.format == "latex":
        print(to_latex(f))
    else:
        print(to_text(f))
    return EXIT_OK


def cmd_classify(args) -> int:
    w = Permutation.parse(args.perm)
    g = zeroone.classify_groth(w, strict=False)
    s = zeroone.classify_schubert(w, strict=False)
    out = {"perm": str(w)}
    for name, v in (("grothendieck", g), ("schubert", s)):
        c = v.by_coefficients
        out[name] = {
            "patterns": v.by_patterns,
            "coefficients": c.zero_one,
            "witness": None if c.witness is None else {"alpha": list(c.witness), "coeff": str(c.coefficient)},
        }
    _emit(out)
    return EXIT_OK if g.agree and s.agree else EXIT_FAILED


def cmd_factor(args) -> int:
    w = Permutation.parse(args.perm)
    rep = zeroone.factorize_double_schubert(w) if args.variant == "double" else zeroone.factorize(w)
    _emit(rep.to_json())
    return EXIT_OK


def cmd_bpds(args) -> int:
    w = Permutation.parse(args.perm)
    found = sorted(bpd.enumerate_bpds(w))
    if args.count or not args.render:
        print(len(found))
    if args.render:
        print("\n\n".join(P.render() for P in found))
    return EXIT_OK


def cmd_scan(args) -> int:
    checks = ALL_CHECKS if not args.checks else tuple(c.strip() for c in args.checks.split(",") if c.strip())
    summary, _ = run_scan(args.n, checks, args.out, args.workers, args.resume, args.timing)
    print(summary.line())
    for perm, what in summary.failures:
        print(f"  {perm}: {', '.join(what)}")
    return EXIT_OK if summary.ok else EXIT_FAILED


def cmd_verify(args) -> int:
    results = acceptance.run_all(quick=args.quick, echo=print)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return EXIT_OK if not failed else EXIT_FAILED


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors are parse errors (1); argparse would use 2, which means refusal here
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="groth-kit", description="Schubert and Grothendieck polynomial toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="print a Schubert or Grothendieck polynomial")
    c.add_argument("perm")
    c.add_argument("--kind", choices=["schubert", "groth"], default="groth")
    c.add_argument("--variant", choices=[groth.SINGLE, groth.DOUBLE], default=groth.SINGLE)
    c.add_argument("--engine", choices=["dd", "bpd"], default="dd")
    c.add_argument("--format", choices=["text", "json", "latex"], default="text")
    c.set_defaults(func=cmd_compute)

    c = sub.add_parser("classify", help="pattern and coefficient verdicts")
    c.add_argument("perm")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("factor", help="verified factorization of a zero-one permutation")
    c.add_argument("perm")
    c.add_argument("--variant", choices=[groth.SINGLE, groth.DOUBLE], default=groth.SINGLE)
    c.set_defaults(func=cmd_factor)

    c = sub.add_parser("bpds", help="bumpless pipe dreams of a permutation")
    c.add_argument("perm")
    c.add_argument("--render", action="store_true")
    c.add_argument("--count", action="store_true")
    c.set_defaults(func=cmd_bpds)

    c = sub.add_parser("scan", help="sweep S_n and write one JSON line per permutation")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--checks", default="", help="comma list from " + ",".join(ALL_CHECKS))
    c.add_argument("--out")
    c.add_argument("--workers", type=int)
    c.add_argument("--resume", action="store_true")
    c.add_argument("--timing", action="store_true", help="fill wall_time_ms (output is then not reproducible)")
    c.set_defaults(func=cmd_scan)

    c = sub.add_parser("verify", help="run the acceptance criteria")
    c.add_argument("--quick", action="store_true")
    c.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except zeroone.NotZeroOne as exc:
        print(f"NotZeroOne: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except groth.EngineBoundExceeded as exc:
        print(f"EngineBoundExceeded: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (zeroone.TheoremViolation, zeroone.FactorizationMismatch) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except Exception as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
