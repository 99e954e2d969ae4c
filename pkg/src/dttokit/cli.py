"""Command-line front end: single computations, sweeps, verification.

Exit codes: 0 success, 1 verification failure, 2 malformed input,
3 unsupported symbol class.  The environment variable MINMOD_THREADS
caps the internal parallelism of convergence sweeps.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import List, Optional

from .fourier import (
    BlaschkeProduct,
    SymbolClassError,
    SymbolExpr,
    as_blaschke_quotient,
    blaschke_from_json,
    constant_value,
    is_analytic,
    is_unimodular,
    symbol_from_json,
)
from .minmod import (
    MinModReport,
    galerkin_sweep,
    min_modulus_corner,
    min_modulus_toeplitz_hankel,
    min_modulus_unimodular,
)
from .oracle import (
    is_normal_sufficient_form,
    normal_dtto_bounds,
    oracle_constant_symbol,
    oracle_m_dual_shift,
)

DEFAULT_TOL = 1e-9
DEFAULT_SCHEDULE = (8, 16, 32, 64)


@dataclass
class JobConfig:
    command: str
    inner: Optional[BlaschkeProduct] = None
    symbol: Optional[SymbolExpr] = None
    tol: float = DEFAULT_TOL
    truncations: List[int] = field(default_factory=list)
    output: Optional[str] = None
    format: str = "json"
    force_method: Optional[str] = None
    perturb_oracle: float = 0.0

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.truncations and any(
            b <= a for a, b in zip(self.truncations, self.truncations[1:])
        ):
            raise ValueError("truncations must be strictly increasing")


def _threads() -> int:
    raw = os.environ.get("MINMOD_THREADS", "")
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ValueError("MINMOD_THREADS must be an integer") from None
    return max(1, n)


def _load_json_arg(text: str) -> dict:
    text = text.strip()
    if text.startswith("{"):
        return json.loads(text)
    path = text[1:] if text.startswith("@") else text
    if os.path.exists(path):
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    raise ValueError(f"not inline JSON and not a readable file: {text!r}")


# ---------------------------------------------------------------------------
# dispatch


def _symbol_is_plain_shift(phi: SymbolExpr) -> bool:
    quot = as_blaschke_quotient(phi)
    return quot is not None and quot.z_power == 1 and not quot.zeros


def _oracle_for(u: Optional[BlaschkeProduct], phi: SymbolExpr) -> Optional[float]:
    v = oracle_constant_symbol(phi)
    if v is not None:
        return v
    c = constant_value(phi)
    if c is not None:
        return abs(c)
    if u is not None and _symbol_is_plain_shift(phi):
        return oracle_m_dual_shift(u)
    if u is not None:
        quot = as_blaschke_quotient(phi)
        if quot is not None and quot.z_power >= 0:
            from .minmod import _divides

            if _divides(u, quot):
                return 0.0
    return None


def _report_dict(rep: MinModReport, quantity: str, oracle: Optional[float]) -> dict:
    d = rep.to_dict()
    if oracle is not None:
        d["oracle"] = oracle
        d["discrepancy"] = abs(rep.value - oracle)
    d["quantity"] = quantity
    return d


def dispatch_minmod(
    u: Optional[BlaschkeProduct],
    phi: SymbolExpr,
    tol: float = DEFAULT_TOL,
    force_method: Optional[str] = None,
    truncations=DEFAULT_SCHEDULE,
) -> dict:
    """Route a minimum-modulus job to the most specific applicable method.

    Order: constant symbols resolve exactly; unimodular symbols use the
    finite model-space reduction (cross-checked against the corner-Gram
    route); analytic non-unimodular symbols fall back to the corner
    operator (the reported quantity is then m(B_phi)); symbols of the
    normal sufficient form get essential-range bounds.
    """
    oracle = _oracle_for(u, phi)

    if force_method == "galerkin_sweep":
        if u is None:
            raise ValueError("a sweep needs an inner function")
        reps = galerkin_sweep(u, phi, list(truncations), tol, threads=_threads())
        return _report_dict(reps[-1], "m(D_phi)", oracle)

    c = constant_value(phi)
    if c is not None and force_method != "finite_exact":
        rep = MinModReport(abs(c), "oracle", None, 0.0, oracle)
        return _report_dict(rep, "m(D_phi)", oracle)

    if force_method == "oracle":
        if is_normal_sufficient_form(phi):
            lower, upper, exact = normal_dtto_bounds(phi)
            rep = MinModReport(exact if exact is not None else lower, "oracle", None, 0.0, oracle)
            d = _report_dict(rep, "m(D_phi)", oracle)
            d["bounds"] = {"lower": lower, "upper": upper, "exact": exact}
            return d
        if oracle is None:
            raise SymbolClassError("no closed-form oracle applies to this symbol")
        rep = MinModReport(oracle, "oracle", None, 0.0, oracle)
        return _report_dict(rep, "m(D_phi)", oracle)

    if is_unimodular(phi):
        if u is None:
            raise ValueError("this symbol class needs an inner function")
        rep = min_modulus_unimodular(u, phi, tol)
        cross = min_modulus_toeplitz_hankel(u, phi, tol)
        # compare on squares: the sqrt amplifies entry noise near zero
        gap = abs(rep.value**2 - cross.value**2)
        budget = 1e-7 + rep.entry_error_bound + cross.entry_error_bound
        if gap > budget:
            raise RuntimeError(
                f"dual-route disagreement: {rep.value} vs {cross.value} (gap {gap:.3g})"
            )
        return _report_dict(rep, "m(D_phi)", oracle)

    if is_analytic(phi):
        rep = min_modulus_corner(u, phi, tol) if u is not None else None
        if rep is None:
            raise ValueError("this symbol class needs an inner function")
        return _report_dict(rep, "m(B_phi)", oracle)

    if is_normal_sufficient_form(phi):
        lower, upper, exact = normal_dtto_bounds(phi)
        value = exact if exact is not None else lower
        rep = MinModReport(value, "oracle", None, 0.0, oracle)
        d = _report_dict(rep, "m(D_phi)", oracle)
        d["bounds"] = {"lower": lower, "upper": upper, "exact": exact}
        return d

    raise SymbolClassError(
        "no applicable method; supported classes: constant, unimodular "
        "(Blaschke quotients, conjugates, unimodular piecewise), analytic, "
        "real-valued plus constant"
    )


# ---------------------------------------------------------------------------
# commands


def _write_output(text: str, path: Optional[str]):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def cmd_minmod(cfg: JobConfig) -> int:
    if cfg.symbol is None:
        raise ValueError("--symbol is required")
    report = dispatch_minmod(
        cfg.inner, cfg.symbol, cfg.tol, cfg.force_method, cfg.truncations or DEFAULT_SCHEDULE
    )
    if cfg.format == "csv":
        head = "value,method,truncation,oracle,discrepancy,entry_error"
        row = ",".join(
            _fmt(report.get(k)) for k in ("value", "method", "truncation", "oracle", "discrepancy", "entry_error")
        )
        _write_output(head + "\n" + row + "\n", cfg.output)
    else:
        _write_output(json.dumps(report, indent=2), cfg.output)
    return 0


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def cmd_sweep(cfg: JobConfig) -> int:
    if cfg.symbol is None:
        raise ValueError("--symbol is required")
    if cfg.inner is None:
        raise ValueError("--inner is required")
    if not cfg.truncations:
        raise ValueError("--truncations is required for a sweep")
    reps = galerkin_sweep(cfg.inner, cfg.symbol, cfg.truncations, cfg.tol, threads=_threads())
    if cfg.format == "json":
        _write_output(json.dumps([r.to_dict() for r in reps], indent=2), cfg.output)
        return 0
    lines = ["N,value,entry_error"]
    for r in reps:
        lines.append(f"{r.truncation},{r.value:.12g},{r.entry_error_bound:.12g}")
    for prev, cur in zip(reps, reps[1:]):
        if cur.value > prev.value + 2.0 * cfg.tol:
            lines.append(
                f"# monotonicity violation at N={cur.truncation}: "
                f"+{cur.value - prev.value:.3g} over N={prev.truncation}"
            )
    _write_output("\n".join(lines) + "\n", cfg.output)
    return 0


def cmd_verify(cfg: JobConfig) -> int:
    from .verify import run_catalog

    failures = run_catalog(perturb_oracle=cfg.perturb_oracle)
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dttokit",
        description="Minimum moduli of truncated and dual truncated Toeplitz operators.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--inner", help="inner function as inline JSON or a file path")
        sp.add_argument("--symbol", help="symbol as inline JSON or a file path")
        sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
        sp.add_argument("--truncations", help="comma-separated increasing sizes, e.g. 8,16,32")
        sp.add_argument("--out", dest="output", help="output path (default: stdout)")
        sp.add_argument("--format", choices=("json", "csv"), default=None)
        sp.add_argument(
            "--force-method",
            choices=("finite_exact", "galerkin_sweep", "oracle"),
            help="override the method dispatch",
        )

    common(sub.add_parser("minmod", help="compute one minimum modulus"))
    common(sub.add_parser("sweep", help="Galerkin convergence sweep (CSV)"))
    v = sub.add_parser("verify", help="run the closed-form verification catalog")
    v.add_argument(
        "--perturb-oracle",
        type=float,
        default=0.0,
        help="shift every expected value (negative control; nonzero must fail)",
    )
    return p


def _config_from_args(args) -> JobConfig:
    inner = blaschke_from_json(_load_json_arg(args.inner)) if getattr(args, "inner", None) else None
    symbol = symbol_from_json(_load_json_arg(args.symbol)) if getattr(args, "symbol", None) else None
    truncs: List[int] = []
    if getattr(args, "truncations", None):
        truncs = [int(t) for t in str(args.truncations).split(",") if t.strip()]
    fmt = getattr(args, "format", None) or ("csv" if args.command == "sweep" else "json")
    return JobConfig(
        command=args.command,
        inner=inner,
        symbol=symbol,
        tol=getattr(args, "tol", DEFAULT_TOL),
        truncations=truncs,
        output=getattr(args, "output", None),
        format=fmt,
        force_method=getattr(args, "force_method", None),
        perturb_oracle=getattr(args, "perturb_oracle", 0.0),
    )


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    try:
        if cfg.command == "minmod":
            return cmd_minmod(cfg)
        if cfg.command == "sweep":
            return cmd_sweep(cfg)
        return cmd_verify(cfg)
    except SymbolClassError as exc:
        print(f"unsupported symbol class: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
