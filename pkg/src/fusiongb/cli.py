"""Command line front end: ``fusiongb <command> --lambda L --mu M [--a A]``.

Exit status is 0 when every requested check passes, 1 on a mathematical
check failure and 2 on a usage error.  JSON output is compact with a fixed
field order, so identical invocations give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import fusion, repmod
from .current import sl2_truncated
from .groebner import graded_dimensions, leading_term_ideal, staircase

log = logging.getLogger(__name__)

COMMANDS = ("gb", "verify", "fusion-dims", "lt-ideal", "oracle", "identities")
THREADS_ENV = "FUSIONGB_THREADS"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class CliConfig:
    command: str
    lam: Optional[int] = None
    mu: Optional[int] = None
    a: Optional[Fraction] = None        # None keeps a as an indeterminate
    format: str = "text"
    range: Optional[int] = None
    st_max: int = 8
    printed: bool = False

    @property
    def a_label(self) -> str:
        return "param" if self.a is None else str(self.a)


def parse_a(text: str) -> Optional[Fraction]:
    if text == "param":
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected 'param' or a rational, got {text!r}")


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError("weights must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fusiongb",
        description="Gröbner bases of sl2 fusion ideals in U(sl2 ⊗ Q(a)[t]/(t^2 - a t)).")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)
    help_ = {
        "gb": "reduced left Gröbner basis of I_a(lambda, mu)",
        "verify": "Gröbner basis theorem, flatness, a = 0 endpoint and bracket identities",
        "fusion-dims": "staircase dimension and t-graded dimensions",
        "lt-ideal": "minimal generators of the leading-term ideal",
        "oracle": "compare with the evaluation tensor module",
        "identities": "bracket identities for the F_i",
    }
    for name in COMMANDS:
        s = sub.add_parser(name, help=help_[name])
        s.add_argument("--lambda", dest="lam", type=_nonneg)
        s.add_argument("--mu", type=_nonneg)
        s.add_argument("--a", type=parse_a, default=None, metavar="param|RAT",
                       help="'param' (default) or a rational value for a")
        s.add_argument("--format", choices=("text", "json"), default="text")
        if name == "verify":
            s.add_argument("--range", type=_nonneg, metavar="L",
                           help="all pairs 0 <= mu <= lambda <= L")
        if name in ("verify", "identities"):
            s.add_argument("--st-max", type=_nonneg, default=8,
                           help="bound on s, t in the f1^s f0^t identities")
            s.add_argument("--printed", action="store_true",
                           help="require the bracket identities exactly as printed, "
                                "without the known corrections")
    return p


def config_from_args(args: argparse.Namespace, parser: argparse.ArgumentParser) -> CliConfig:
    batch = getattr(args, "range", None)
    if batch is None:
        if args.lam is None or args.mu is None:
            parser.error("--lambda and --mu are required")
        if args.lam < args.mu:
            parser.error(f"need lambda >= mu, got lambda={args.lam}, mu={args.mu}")
    if args.command == "oracle" and args.a == 0:
        parser.error("oracle needs a != 0")
    return CliConfig(args.command, args.lam, args.mu, args.a, args.format, batch,
                     getattr(args, "st_max", 8), getattr(args, "printed", False))


# --------------------------------------------------------------------------
# commands; each returns (passed, report dict)
# --------------------------------------------------------------------------

def _pair(cfg: CliConfig) -> fusion.WeightPair:
    return fusion.WeightPair(cfg.lam, cfg.mu)


def _header(cfg: CliConfig) -> dict:
    return {"lambda": cfg.lam, "mu": cfg.mu, "a": cfg.a_label}


def cmd_gb(cfg: CliConfig) -> Tuple[bool, dict]:
    gb = fusion.reduced_basis(_pair(cfg), cfg.a)
    return True, {**_header(cfg), "basis": gb.strings()}


def cmd_lt_ideal(cfg: CliConfig) -> Tuple[bool, dict]:
    lt = leading_term_ideal(fusion.reduced_basis(_pair(cfg), cfg.a))
    return True, {**_header(cfg), "generators": lt.monomial_strings()}


def cmd_fusion_dims(cfg: CliConfig) -> Tuple[bool, dict]:
    lt = leading_term_ideal(fusion.reduced_basis(_pair(cfg), cfg.a))
    st = staircase(lt)
    graded = graded_dimensions(lt, fusion.T_WEIGHTS) if st.finite else {}
    return True, {"dimension": st.count, "graded": {str(k): v for k, v in graded.items()}}


def _identities(w, cfg: CliConfig) -> dict:
    rep = fusion.verify_commutators(w, st_max=cfg.st_max)
    out = rep.to_dict()
    out["passed"] = rep.printed_ok if cfg.printed else rep.ok
    return out


def cmd_identities(cfg: CliConfig) -> Tuple[bool, dict]:
    out = _identities(_pair(cfg), cfg)
    return out["passed"], out


def _verify_one(args) -> dict:
    lam, mu, cfg = args
    w = fusion.WeightPair(lam, mu)
    samples = (1, -2, Fraction(5, 3), 0) if cfg.a is None else (cfg.a,)
    thm = fusion.verify_theorem(w, samples).to_dict()
    ids = _identities(w, cfg)
    return {"lambda": lam, "mu": mu, "ok": thm["ok"] and ids["passed"],
            "theorem": thm, "identities": ids}


def _threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        log.warning("ignoring %s=%r", THREADS_ENV, raw)
        return 1


def cmd_verify(cfg: CliConfig) -> Tuple[bool, dict]:
    if cfg.range is None:
        rep = _verify_one((cfg.lam, cfg.mu, cfg))
        return rep["ok"], {"a": cfg.a_label, **rep}
    jobs = [(lam, mu, cfg) for lam in range(cfg.range + 1) for mu in range(lam + 1)]
    n = _threads()
    if n > 1:
        with ProcessPoolExecutor(max_workers=n) as ex:
            results = list(ex.map(_verify_one, jobs))
    else:
        results = [_verify_one(j) for j in jobs]
    summary = [{"lambda": r["lambda"], "mu": r["mu"], "ok": r["ok"],
                "dimension": r["theorem"]["dimension"], "graded": r["theorem"]["graded"]}
               for r in results]
    return all(r["ok"] for r in results), {
        "range": cfg.range, "a": cfg.a_label, "ok": all(r["ok"] for r in results),
        "summary": summary, "pairs": results}


def cmd_oracle(cfg: CliConfig) -> Tuple[bool, dict]:
    w = _pair(cfg)
    a0 = Fraction(1) if cfg.a is None else cfg.a
    M = repmod.evaluation_tensor_module(w.lam, w.mu, a0)
    cyc = repmod.cyclic_dimension(M)
    oracle = repmod.fusion_graded_dims_oracle(w.lam, w.mu, a0).to_json_map()
    lt = leading_term_ideal(fusion.reduced_basis(w))
    gb_graded = {str(k): v for k, v in graded_dimensions(lt, fusion.T_WEIGHTS).items()}
    indep = repmod.f_independence(w.lam, w.mu, a0)
    checks = {
        "cyclic_dimension": cyc == M.dim,
        "annihilates": repmod.annihilates(fusion.ideal_Ia(w, a0), M),
        "graded_match": oracle == gb_graded,
        "f_independence": all(c.ok for c in indep),
    }
    return all(checks.values()), {
        "lambda": w.lam, "mu": w.mu, "a": str(a0), "ok": all(checks.values()),
        "checks": checks, "cyclic_dimension": cyc, "oracle_graded": oracle,
        "gb_graded": gb_graded}


HANDLERS = {
    "gb": cmd_gb,
    "verify": cmd_verify,
    "fusion-dims": cmd_fusion_dims,
    "lt-ideal": cmd_lt_ideal,
    "oracle": cmd_oracle,
    "identities": cmd_identities,
}


def run(cfg: CliConfig) -> Tuple[int, dict]:
    passed, report = HANDLERS[cfg.command](cfg)
    return (EXIT_OK if passed else EXIT_FAIL), report


# --------------------------------------------------------------------------
# rendering
# --------------------------------------------------------------------------

def dumps(report: dict) -> str:
    return json.dumps(report, separators=(",", ":"), ensure_ascii=False)


def render_text(cfg: CliConfig, report: dict) -> str:
    lines: List[str] = []
    if cfg.command in ("gb", "lt-ideal"):
        lines.append(f"lambda={cfg.lam} mu={cfg.mu} a={cfg.a_label}")
        key = "basis" if cfg.command == "gb" else "generators"
        lines.extend("  " + s for s in report[key])
    elif cfg.command == "fusion-dims":
        lines.append(f"dimension {report['dimension']}")
        lines.extend(f"  t^{k}: {v}" for k, v in report["graded"].items())
    elif cfg.command == "verify" and cfg.range is not None:
        lines.append(f"{'lambda':>6} {'mu':>3} {'dim':>5}  graded  status")
        for r in report["summary"]:
            g = ",".join(f"{k}:{v}" for k, v in r["graded"].items())
            lines.append(f"{r['lambda']:>6} {r['mu']:>3} {r['dimension']:>5}  {g}  "
                         f"{'ok' if r['ok'] else 'FAIL'}")
    elif cfg.command == "verify":
        thm = report["theorem"]
        for name, ok in thm["checks"].items():
            lines.append(f"{name:<20} {'ok' if ok else 'FAIL'}")
        ids = report["identities"]
        lines.append(f"{'identities':<20} {'ok' if ids['passed'] else 'FAIL'} "
                     f"({ids['count']} checked, {len(ids['errata'])} corrected)")
        lines.append(f"dimension {thm['dimension']}, graded {thm['graded']}")
    elif cfg.command == "identities":
        lines.append(f"{report['count']} identities, "
                     f"{'all hold' if report['passed'] else 'failures present'}")
        for name in report["failed"]:
            lines.append(f"  FAIL {name}")
        for e in report["errata"]:
            lines.append(f"  printed form fails: {e['name']}; corrected: {e['corrected_rhs']}")
    elif cfg.command == "oracle":
        for name, ok in report["checks"].items():
            lines.append(f"{name:<18} {'ok' if ok else 'FAIL'}")
        lines.append(f"module graded {report['oracle_graded']}, basis graded {report['gb_graded']}")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    cfg = config_from_args(args, parser)
    try:
        status, report = run(cfg)
    except ValueError as exc:
        print(f"fusiongb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = dumps(report) if cfg.format == "json" else render_text(cfg, report)
    print(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
