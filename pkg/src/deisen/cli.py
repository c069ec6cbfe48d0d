"""Command line interface.

Exit codes: 0 every check passed (or was skipped), 1 some check failed,
2 usage or domain error, 3 precision or reconstruction failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from mpmath import mp, nstr

from . import deisenstein as de
from .exact import format_rat
from .lfunc import DEFAULT_PREC, ReconstructionFailed, kz_check, ratio_table
from .modforms import SUPPORTED_WEIGHTS, UnsupportedWeight, delta, eigenform, eisenstein
from .mzv import hp_dzeta, hp_dzeta_tilde
from .verify import (
    DEFAULT_ORDER,
    DEFAULT_TOLERANCE,
    ConfigurationError,
    decompose,
    verify_congruence,
    verify_corollary,
    verify_double_shuffle,
    verify_gkz_theorem3,
    verify_independence,
    verify_kz,
    verify_popa,
    verify_theorem_main,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECISION = 0, 1, 2, 3

SERIES = {
    "eisenstein": lambda a: eisenstein(_need(a, "r", a.weight), a.order),
    "delta": lambda a: delta(a.order),
    "eigenform": lambda a: eigenform(_need(a, "weight"), a.order),
    "g": lambda a: de.g(_need(a, "r"), a.order),
    "gstar": lambda a: de.gstar(_need(a, "r"), a.order),
    "gdouble": lambda a: de.gdouble(_need(a, "r"), _need(a, "s"), a.order),
    "epsilon": lambda a: de.epsilon(_need(a, "r"), _need(a, "s"), a.order),
    "double_eisenstein": lambda a: de.double_eisenstein(_need(a, "r"), _need(a, "s"), a.order),
    "g_half": lambda a: de.g_half(_need(a, "r"), _need(a, "s"), a.order),
    "p_series": lambda a: de.p_series(_need(a, "r"), _need(a, "s"), a.order),
}

CHECKS = ["theorem", "doubleshuffle", "gkz3", "popa", "kz", "corollary", "congruence", "independence"]


def _need(args, name, fallback=None):
    val = getattr(args, name, None)
    if val is None:
        val = fallback
    if val is None:
        flag = "--weight" if name == "weight" else f"--{name}"
        raise ValueError(f"this series needs {flag}")
    return val


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--weight", "-k", type=int, help="weight k")
    p.add_argument("--order", "-N", type=int, default=DEFAULT_ORDER, help="q-series truncation order")
    p.add_argument("--prec", type=int, default=DEFAULT_PREC, help="decimal digits for numerics")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE, help="numeric residual tolerance")
    p.add_argument("--json", action="store_true", help="emit JSON lines")
    p.add_argument("--cache-dir", help="L-value cache directory (overrides $DEISEN_CACHE)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="deisen", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("decompose", parents=[common], help="eigenform as a combination of G^{1/2}_{r,s}")
    sub.add_parser("lvalues", parents=[common], help="ratio table L*(s)/L*(k-1) and the KZ check")

    ps = sub.add_parser("series", parents=[common], help="dump a q-series")
    ps.add_argument("name", choices=sorted(SERIES))
    ps.add_argument("--r", type=int)
    ps.add_argument("--s", type=int)

    pm = sub.add_parser("mzv", parents=[common], help="numeric double zeta value")
    pm.add_argument("--r", type=int, required=True)
    pm.add_argument("--s", type=int, required=True)

    pv = sub.add_parser("verify", parents=[common], help="run identity checks")
    pv.add_argument("check", choices=CHECKS + ["all"])
    return parser


def _run_check(name: str, k: int, a) -> object:
    if name == "theorem":
        return verify_theorem_main(k, a.order, a.prec, a.tolerance, cache_dir=a.cache_dir)
    if name == "doubleshuffle":
        return verify_double_shuffle(k, a.order, a.prec, a.tolerance)
    if name == "gkz3":
        return verify_gkz_theorem3(k, a.order, a.prec, a.tolerance, cache_dir=a.cache_dir)
    if name == "popa":
        return verify_popa(k, a.order, a.prec, a.tolerance, cache_dir=a.cache_dir)
    if name == "kz":
        return verify_kz(k, a.prec, cache_dir=a.cache_dir)
    if name == "corollary":
        return verify_corollary(k, a.prec, a.tolerance, cache_dir=a.cache_dir)
    if name == "congruence":
        return verify_congruence(k, a.prec, cache_dir=a.cache_dir)
    if name == "independence":
        return verify_independence(k, a.order)
    raise ValueError(name)


def _weights_for(check: str, weight: Optional[int]) -> List[int]:
    if weight is not None:
        return [weight]
    if check == "doubleshuffle":
        return list(range(4, 27, 2))
    return list(SUPPORTED_WEIGHTS)


def cmd_verify(a, out) -> int:
    checks = CHECKS if a.check == "all" else [a.check]
    failed = False
    for name in checks:
        for k in _weights_for(name, a.weight):
            rep = _run_check(name, k, a)
            print(rep.to_json() if a.json else rep.to_text(), file=out)
            failed |= rep.verdict == "FAIL"
    return EXIT_FAIL if failed else EXIT_OK


def cmd_decompose(a, out) -> int:
    ks = [a.weight] if a.weight is not None else list(SUPPORTED_WEIGHTS)
    for k in ks:
        d = decompose(k, a.prec, cache_dir=a.cache_dir)
        if a.json:
            for line in d.json_records():
                print(line, file=out)
        else:
            print(d.to_text(), file=out)
    return EXIT_OK


def cmd_lvalues(a, out) -> int:
    k = _need(a, "weight")
    table = ratio_table(k, a.prec, cache_dir=a.cache_dir)
    kz = kz_check(k, table)
    if a.json:
        rec = {
            "weight": k,
            "prec": table.precision_used,
            "ratios": {str(s): format_rat(v) for s, v in sorted(table.ratios.items())},
            "residuals": {str(s): table.residuals.get(s, 0.0) for s in sorted(table.ratios)},
            "kz_check": format_rat(kz),
        }
        print(json.dumps(rec), file=out)
    else:
        out.write(table.to_text())
        print(f"kz_check\t{format_rat(kz)}", file=out)
    return EXIT_OK


def cmd_series(a, out) -> int:
    out.write(SERIES[a.name](a).dump())
    return EXIT_OK


def cmd_mzv(a, out) -> int:
    r, s = a.r, a.s
    with mp.workdps(a.prec):
        z = hp_dzeta(r, s, a.prec) if s >= 2 else None
        zt = hp_dzeta_tilde(r, s, a.prec)
        digits = a.prec
        if a.json:
            rec = {
                "r": r,
                "s": s,
                "prec": a.prec,
                "zeta": None if z is None else nstr(z, digits),
                "zeta_tilde": {"re": nstr(zt.real, digits), "im": nstr(zt.imag, digits)},
            }
            print(json.dumps(rec), file=out)
        else:
            print(f"zeta({r},{s})\t{'regularized' if z is None else nstr(z, digits)}", file=out)
            print(f"zeta~({r},{s}).re\t{nstr(zt.real, digits)}", file=out)
            print(f"zeta~({r},{s}).im\t{nstr(zt.imag, digits)}", file=out)
    return EXIT_OK


COMMANDS = {
    "verify": cmd_verify,
    "decompose": cmd_decompose,
    "lvalues": cmd_lvalues,
    "series": cmd_series,
    "mzv": cmd_mzv,
}


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (ReconstructionFailed, ConfigurationError) as e:
        print(f"deisen: {e}", file=sys.stderr)
        return EXIT_PRECISION
    except (UnsupportedWeight, ValueError) as e:
        print(f"deisen: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
