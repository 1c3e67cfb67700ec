"""Command-line front end.

Subcommands: expand, metadata, sturm, verify, suite, cache.  Reports are
JSON; coefficient dumps are the qseries text format or CSV.  Exit codes:
0 pass, 1 claim failure, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import diamond
from .eta import EtaQuotient, eta_quotient_metadata, eta_quotient_series
from .forms import FORM_NAMES, resolve_form
from .operators import apply_operator
from .qseries import write_dump
from .store import default_cache
from .sturm import ClaimReport, sturm_bound

_FULL = diamond.SuiteConfig.full()


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcong",
        description="exact q-series expansions and congruence verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="expand a named form or eta quotient")
    src = p_expand.add_mutually_exclusive_group(required=True)
    src.add_argument("--form", help=f"named form, one of: {', '.join(FORM_NAMES)}")
    src.add_argument("--eta", help='eta quotient text, e.g. "3^4 6^6"')
    p_expand.add_argument("--T", type=int, required=True, help="truncation")
    p_expand.add_argument("--mod", type=int, help="reduce coefficients mod m")
    p_expand.add_argument(
        "--format", choices=("qseries", "csv"), default="qseries", dest="fmt"
    )
    p_expand.add_argument("--out", help="write to this file instead of stdout")
    p_expand.add_argument(
        "--apply",
        help="comma-separated operator pipeline, e.g. U_7,twist_7 (T_p also "
        "needs --weight and --chi)",
    )
    p_expand.add_argument("--weight", type=int, help="weight for T_p in --apply")
    p_expand.add_argument("--chi", type=int, help="character discriminant for T_p")

    p_meta = sub.add_parser("metadata", help="weight/level/character of a quotient")
    p_meta.add_argument("eta", help='eta quotient text, e.g. "3^4 6^6"')

    p_sturm = sub.add_parser("sturm", help="Sturm bound for (weight, level)")
    p_sturm.add_argument("--k", type=int, required=True)
    p_sturm.add_argument("--N", type=int, required=True)

    p_verify = sub.add_parser("verify", help="verify one claim")
    p_verify.add_argument(
        "claim",
        help="claim ID: eq-1.2, thm-1.1, sec-2-chain, eq-1.4, thm-1.2[:p=P], "
        "thm-3.1, remark[:p=P]",
    )
    p_verify.add_argument("--T", type=int, help="depth override")
    p_verify.add_argument("--n-max", type=int, help="progression depth override")
    p_verify.add_argument("--p", type=int, help="prime for thm-1.2 / remark")
    p_verify.add_argument("--no-cache", action="store_true")

    p_suite = sub.add_parser("suite", help="run every claim")
    depth = p_suite.add_mutually_exclusive_group(required=True)
    depth.add_argument("--quick", action="store_true")
    depth.add_argument("--full", action="store_true")
    p_suite.add_argument("--no-cache", action="store_true")

    p_cache = sub.add_parser("cache", help="cache maintenance")
    p_cache.add_argument("action", choices=("clear",))
    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _format_exponent(offset24: int, index: int) -> str:
    e = Fraction(offset24, 24) + index
    return str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"


def _cmd_expand(args) -> int:
    if args.eta is not None:
        series = eta_quotient_series(EtaQuotient.parse(args.eta), args.T, args.mod)
    else:
        series = resolve_form(args.form, args.T, args.mod)
    if args.apply:
        for op in args.apply.split(","):
            series = apply_operator(series.to_offset_zero(), op, args.weight, args.chi)
    if args.fmt == "csv":
        lines = ["n,coefficient"]
        fmt = series.ring.format_elem
        for j, c in enumerate(series.coeffs):
            lines.append(f"{_format_exponent(series.offset24, j)},{fmt(c)}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        import io

        buf = io.StringIO()
        write_dump(series, buf)
        _emit(buf.getvalue(), args.out)
    return 0


def _cmd_metadata(args) -> int:
    meta = eta_quotient_metadata(EtaQuotient.parse(args.eta))
    payload = {
        "weight": meta.tag.weight,
        "level": meta.tag.level,
        "character": meta.tag.character,
        "sum_dr_divisible": meta.sum_dr_divisible,
        "sum_inv_divisible": meta.sum_inv_divisible,
    }
    print(json.dumps(payload))
    return 0


def _parse_claim(claim: str, p_flag: int | None) -> tuple[str, int | None]:
    base, _, suffix = claim.partition(":")
    p = p_flag
    if suffix:
        if not suffix.startswith("p="):
            raise ValueError(f"bad claim suffix {suffix!r}; expected p=<prime>")
        p = int(suffix[2:]) if p_flag is None else p_flag
    return base, p


def _cmd_verify(args) -> int:
    base, p = _parse_claim(args.claim, args.p)
    cache = None if args.no_cache else default_cache()
    T = args.T
    if base == "eq-1.2":
        reports = [diamond.verify_eq_1_2(T or _FULL.eq_1_2_T, cache=cache)]
    elif base == "thm-1.1":
        reports = [
            diamond.verify_theorem_1_1(args.n_max or _FULL.thm_1_1_n_max, cache=cache)
        ]
    elif base == "sec-2-chain":
        reports = diamond.verify_section_2_chain(T or _FULL.chain_T_final, cache=cache)
    elif base == "eq-1.4":
        reports = [diamond.verify_eq_1_4(T or _FULL.eq_1_4_T, cache=cache)]
    elif base == "thm-1.2":
        if p is None:
            raise ValueError("thm-1.2 needs a prime: use --p or thm-1.2:p=<p>")
        _, rep = diamond.verify_theorem_1_2(p, T or _FULL.thm_1_2_T, cache=cache)
        reports = [rep]
    elif base == "thm-3.1":
        reports = diamond.verify_theorem_3_1(
            T or _FULL.thm_3_1_T, _FULL.thm_3_1_prime_max
        )
    elif base == "remark":
        if p is None:
            raise ValueError("remark needs a prime: use --p or remark:p=<p>")
        default_T = dict(_FULL.remark_cases).get(p, 50)
        reports = [diamond.verify_remark(p, T or default_T, cache=cache)]
    else:
        raise ValueError(f"unknown claim {args.claim!r}")
    _print_reports(reports)
    return 0 if all(r.passed for r in reports) else 1


def _print_reports(reports: list[ClaimReport]) -> None:
    if len(reports) == 1:
        print(reports[0].to_json())
    else:
        print(json.dumps([r.to_dict() for r in reports]))


def _cmd_suite(args) -> int:
    config = diamond.SuiteConfig.quick() if args.quick else diamond.SuiteConfig.full()
    cache = None if args.no_cache else default_cache()
    reports = diamond.run_suite(config, cache=cache)
    passed = all(r.passed for r in reports)
    print(
        json.dumps(
            {"pass": passed, "claims": [r.to_dict() for r in reports]}
        )
    )
    if not passed:
        failing = [r.claim for r in reports if not r.passed]
        print(f"failing claims: {', '.join(failing)}", file=sys.stderr)
    return 0 if passed else 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "expand":
            return _cmd_expand(args)
        if args.command == "metadata":
            return _cmd_metadata(args)
        if args.command == "sturm":
            print(sturm_bound(args.k, args.N))
            return 0
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "suite":
            return _cmd_suite(args)
        if args.command == "cache":
            removed = default_cache().clear()
            print(json.dumps({"removed": removed}))
            return 0
        raise AssertionError(f"unhandled command {args.command}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
