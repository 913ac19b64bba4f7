"""Command line entry point: ``skeingram {params,lens,pairing,gram,verify}``.

Exit codes are 0 on success, 1 when a verification or convention check
fails and 2 for usage errors (bad flags, p < 5, unsupported input).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .cyclotomic import CycNumber, dumps, embed_root, to_complex
from .gram import TheoremViolation, pairing, singularity_scan
from .skein import ConventionError, ParameterError, construct_params, make_params
from .surgery import (
    TorusElement,
    UnsupportedFamilyError,
    hopf_link_presentation,
    lens_invariant,
)
from .verify import run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _p_range(text: str) -> list[int]:
    """``7``, ``5-13`` or ``5,7,11``."""
    out: list[int] = []
    try:
        for part in text.split(","):
            if "-" in part:
                lo, hi = part.split("-", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad p range {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError("empty p range")
    return sorted(set(out))


def _rate(text: str) -> float:
    value = float(text)
    if not 0 < value <= 1:
        raise argparse.ArgumentTypeError("subsample rate must lie in (0, 1]")
    return value


def _value_record(x: CycNumber) -> dict:
    z = to_complex(x)
    return {"exact": x.to_json(), "approx": [z.real, z.imag]}


def _describe_mu_power(params, x: CycNumber) -> Optional[str]:
    for k, label in ((0, "1"), (1, "mu"), (-1, "mu^-1")):
        if x == embed_root(params.mu_root ** k):
            return label
    if x == params.eta:
        return "eta"
    return None


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------


def cmd_params(args) -> int:
    choices = range(6) if args.kappa_choice == "all" else [int(args.kappa_choice)]
    reports = []
    all_ok = True
    for choice in choices:
        params = construct_params(args.p, choice)
        all_ok &= params.ok
        reports.append(params)

    if args.format == "json":
        payload = [
            {
                "p": pr.p,
                "kappa_choice": pr.kappa_choice,
                "n_order": pr.n_order,
                "a_exponent": pr.a_root.exponent,
                "kappa_exponent": pr.kappa_root.exponent,
                "mu_exponent": pr.mu_root.exponent,
                "eta": _value_record(pr.eta),
                "checks": [{"name": n, "passed": ok} for n, ok in pr.checks],
                "ok": pr.ok,
            }
            for pr in reports
        ]
        _emit(dumps(payload if len(payload) > 1 else payload[0], indent=2), args.out)
    else:
        blocks = []
        for pr in reports:
            n = pr.n_order
            lines = [
                f"p = {pr.p}, kappa choice {pr.kappa_choice}, N = {n}",
                f"A     = zeta^{pr.a_root.exponent}",
                f"kappa = zeta^{pr.kappa_root.exponent}",
                f"mu    = zeta^{pr.mu_root.exponent}  (order {pr.mu_root.order})",
                f"eta   = {pr.eta}",
                f"      ~ {to_complex(pr.eta):.12g}",
            ]
            lines += [f"  [{'PASS' if ok else 'FAIL'}] {name}" for name, ok in pr.checks]
            blocks.append("\n".join(lines))
        _emit("\n\n".join(blocks), args.out)
    return EXIT_OK if all_ok else EXIT_FAIL


def cmd_lens(args) -> int:
    params = make_params(args.p, int(args.kappa_choice))
    value = lens_invariant(params, args.n)
    label = _describe_mu_power(params, value)
    convention = "<L(2ps,1)>' = mu^-sign(s), <L(0,1)>' = 1, <L(1,1)>' = eta"
    if args.format == "json":
        rec = {"p": args.p, "n": args.n, **_value_record(value), "equals": label,
               "convention": convention}
        _emit(dumps(rec, indent=2), args.out)
    else:
        lines = [f"<L({args.n},1)>'_{args.p} = {value}"]
        if label:
            lines.append(f"  = {label}")
        lines.append(f"  ~ {to_complex(value):.12g}")
        lines.append(f"convention: {convention}")
        _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_pairing(args) -> int:
    params = make_params(args.p, int(args.kappa_choice))
    if args.k is None or args.l is None:
        raise UsageError("pairing needs --k and --l")
    if args.k < 1 or args.l < 1:
        raise UsageError("--k and --l must be positive")
    p = args.p
    x, y = TorusElement.w(2 * p * args.k), TorusElement.z(2 * p * args.l)
    value = pairing(params, x, y, method=args.method)
    pres = hopf_link_presentation(params, args.k, args.l) if args.method == "direct" else None
    label = _describe_mu_power(params, value)
    if args.format == "json":
        rec = {"p": p, "k": args.k, "l": args.l, "method": args.method,
               **_value_record(value), "equals": label}
        if pres is not None:
            rec["linking_matrix"] = [list(r) for r in pres.linking]
            rec["signature"] = pres.signature()
        _emit(dumps(rec, indent=2), args.out)
    else:
        lines = [f"B(w_{2 * p * args.k}, z_{2 * p * args.l}) [{args.method}] = {value}"]
        if label:
            lines.append(f"  = {label}")
        lines.append(f"  ~ {to_complex(value):.12g}")
        if pres is not None:
            lines.append(f"linking matrix ({pres.size} x {pres.size}), signature {pres.signature()}:")
            lines.append(pres.format_matrix())
        _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_gram(args) -> int:
    params = make_params(args.p, int(args.kappa_choice))
    n_max = args.n_max
    if n_max < 1:
        raise UsageError("--n-max must be positive")
    report = singularity_scan(params, max(n_max, 2), subsample=args.subsample, seed=args.p)
    if n_max == 1:
        report.n_max = 1
        report.determinants = report.determinants[:1]
        report.singular_sizes = [n for n in report.singular_sizes if n <= 1]
        report.checked_sizes = [n for n in report.checked_sizes if n <= 1]
        report.rank_lower_bound = 1
    text = {"json": report.to_json, "csv": report.to_csv, "text": report.to_text}[args.format]()
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    ps = args.p_range
    if ps is not None and min(ps) < 5:
        raise ParameterError("p must be >= 5")
    results = run_all(ps=ps, n_max=args.n_max)
    results.sort(key=lambda r: int(r.name.split()[0]))
    summary = {
        "passed": all(r.passed for r in results),
        "total_seconds": round(sum(r.seconds for r in results), 4),
        "checks": [r.to_dict() for r in results],
    }
    if args.format == "json":
        _emit(dumps(summary, indent=2), args.out)
    else:
        _emit("\n".join(r.line() for r in results), args.out)
    return EXIT_OK if summary["passed"] else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skeingram",
        description="Exact skein-theoretic invariants and torus Gram-matrix certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, formats=("text", "json"), need_p=True):
        if need_p:
            sp.add_argument("--p", type=int, required=True, help="odd or even integer p >= 5")
        sp.add_argument("--kappa-choice", default="0", help="root choice 0..5 for kappa")
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--out", help="write the report to this file instead of stdout")

    sp = sub.add_parser("params", help="pinned constants and construction checks")
    common(sp)
    sp.set_defaults(func=cmd_params)

    sp = sub.add_parser("lens", help="invariant of the lens space L(n,1)")
    common(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_lens)

    sp = sub.add_parser("pairing", help="B(w_2pk, z_2pl)")
    common(sp)
    sp.add_argument("--k", type=int)
    sp.add_argument("--l", type=int)
    sp.add_argument("--method", choices=("direct", "reduced"), default="reduced")
    sp.set_defaults(func=cmd_pairing)

    sp = sub.add_parser("gram", help="determinant scan and rank certificate")
    common(sp, formats=("text", "json", "csv"))
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--subsample", type=_rate, default=0.1)
    sp.set_defaults(func=cmd_gram)

    sp = sub.add_parser("verify", help="run every acceptance check")
    sp.add_argument("--p", dest="p_range", type=_p_range, default=None,
                    help="restrict to these p, e.g. 5-9 or 5,7")
    sp.add_argument("--n-max", type=int, default=None)
    sp.add_argument("--format", choices=("text", "json"), default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    kc = getattr(args, "kappa_choice", "0")
    if kc != "all" and not kc.lstrip("-").isdigit():
        print(f"error: --kappa-choice must be 0..5 or 'all', got {kc!r}", file=sys.stderr)
        return EXIT_USAGE
    if kc == "all" and args.command != "params":
        print("error: --kappa-choice all is only accepted by 'params'", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (ParameterError, UnsupportedFamilyError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConventionError, TheoremViolation) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
