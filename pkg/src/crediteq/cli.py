"""Config-driven batch front end.

Subcommands ``curves``, ``solve``, ``maxdebt`` and ``compare`` load a
scenario (file or preset, plus overrides), run the engine and write CSV
curves, a JSON report and a run manifest into the output directory.
Reruns with the same manifest reproduce byte-identical files.

Exit codes: 0 success (a no-equilibrium verdict is still success),
2 invalid configuration, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from .config import (
    PRESETS,
    ScenarioConfig,
    apply_overrides,
    load_config,
    load_preset,
)
from .engine import (
    compare_scenarios,
    compare_to_dict,
    max_debt_to_dict,
    report_to_dict,
    run_manifest,
    solve_max_debt,
    solve_scenario,
)
from .errors import CreditEqError, InvalidConfigError
from .fcf import build_ensemble

OUTPUT_DIR_ENV = "CREDITEQ_OUTPUT_DIR"

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INTERNAL = 3


def _fmt(x: float) -> str:
    """Pinned CSV number format: 10 significant digits."""
    return format(float(x), ".10g")


def write_curves_csv(path: Path, rates, pd, tau, rbar) -> None:
    lines = ["r,pd,tau,rbar"]
    for k in range(len(rates)):
        lines.append(
            f"{_fmt(rates[k])},{_fmt(pd[k])},{_fmt(tau[k])},{_fmt(rbar[k])}"
        )
    path.write_text("\n".join(lines) + "\n")


def write_ensemble_csv(path: Path, f_matrix: np.ndarray) -> None:
    horizon = f_matrix.shape[1]
    lines = [",".join(f"t{t}" for t in range(1, horizon + 1))]
    for row in f_matrix:
        lines.append(",".join(_fmt(v) for v in row))
    path.write_text("\n".join(lines) + "\n")


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _load_scenario(args: argparse.Namespace) -> ScenarioConfig:
    if args.config and args.preset:
        raise InvalidConfigError("pass either --config or --preset, not both")
    if args.config:
        cfg = load_config(args.config)
    elif args.preset:
        cfg = load_preset(args.preset)
    else:
        raise InvalidConfigError("one of --config or --preset is required")
    return apply_overrides(
        cfg,
        seed=args.seed,
        samples=args.samples,
        mode=args.mode,
        maturity=getattr(args, "maturity", None),
        lgd=getattr(args, "lgd", None),
        debt=getattr(args, "debt", None),
    )


def _out_dir(args: argparse.Namespace) -> Path:
    out = args.out or os.environ.get(OUTPUT_DIR_ENV) or "."
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _write_manifest(out: Path, cfg: ScenarioConfig, command: str) -> None:
    manifest = run_manifest(cfg)
    manifest["command"] = command
    _write_json(out / "manifest.json", manifest)


def cmd_curves(args: argparse.Namespace) -> int:
    cfg = _load_scenario(args)
    out = _out_dir(args)
    report = solve_scenario(cfg)
    c, rc = report.pd_curve, report.return_curve
    write_curves_csv(out / "curves.csv", c.rates, c.pd, c.tau, rc.rbar)
    if args.dump_fcf:
        ensemble = build_ensemble(cfg.plan, cfg.sim.n, cfg.horizon, cfg.sim.seed)
        write_ensemble_csv(out / "fcf_paths.csv", ensemble.f_matrix)
    _write_manifest(out, cfg, "curves")
    print(f"wrote {out / 'curves.csv'}")
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    cfg = _load_scenario(args)
    out = _out_dir(args)
    report = solve_scenario(cfg)
    payload = report_to_dict(report)
    payload["manifest"]["command"] = "solve"
    _write_json(out / "report.json", payload)
    c, rc = report.pd_curve, report.return_curve
    write_curves_csv(out / "curves.csv", c.rates, c.pd, c.tau, rc.rbar)
    _write_manifest(out, cfg, "solve")
    def show(v):
        return "n/a" if v is None else f"{v:.6f}"
    print(f"verdict: {report.verdict}")
    print(f"r_min = {show(report.r_min)}")
    print(f"r_fix = {show(report.r_fix)}")
    print(f"r_max = {show(report.r_max)}")
    print(f"pd(r_min) = {show(report.pd_at_r_min)}")
    return EXIT_OK


def cmd_maxdebt(args: argparse.Namespace) -> int:
    cfg = _load_scenario(args)
    out = _out_dir(args)
    result = solve_max_debt(cfg)
    payload = max_debt_to_dict(result, cfg)
    payload["manifest"]["command"] = "maxdebt"
    _write_json(out / "maxdebt.json", payload)
    _write_manifest(out, cfg, "maxdebt")
    bound = "" if result.bounded else " (search cap: unbounded below cap)"
    tang = "n/a" if result.tangency_rate is None else f"{result.tangency_rate:.6f}"
    print(f"max sustainable initial debt = {result.debt:.2f}{bound}")
    print(f"tangency rate = {tang}")
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    base = _load_scenario(args)
    if args.variant:
        variant = load_config(args.variant)
    else:
        variant = apply_overrides(
            base,
            maturity=args.to_maturity,
            lgd=args.to_lgd,
            debt=args.to_debt,
        )
        if variant == base:
            raise InvalidConfigError(
                "variant equals base: pass --variant or a --to-* override"
            )
    out = _out_dir(args)
    report = compare_scenarios(base, variant)
    payload = compare_to_dict(report)
    _write_json(out / "compare.json", payload)
    _write_manifest(out, base, "compare")
    deltas = report.deltas()
    for key in ("r_min", "r_fix", "r_max"):
        d = deltas[key]
        print(f"delta {key}: {'n/a' if d is None else f'{d:+.6f}'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crediteq",
        description="Monte Carlo credit-equilibrium engine",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, overrides: bool = True) -> None:
        p.add_argument("--config", help="scenario YAML/JSON file (or a run manifest)")
        p.add_argument("--preset", choices=PRESETS, help="built-in scenario")
        p.add_argument("--seed", type=int, help="override sim.seed")
        p.add_argument("--samples", type=int, help="override sim.n")
        p.add_argument("--mode", choices=["literal", "one-step"],
                       help="default detection mode")
        p.add_argument("--out", help=f"output directory (default ${OUTPUT_DIR_ENV} or .)")
        if overrides:
            p.add_argument("--maturity", type=int,
                           help="override every loan's installment count")
            p.add_argument("--lgd", type=float, help="override policy LGD")
            p.add_argument("--debt", type=float, help="override initial STNFP")

    p_curves = sub.add_parser("curves", help="emit pd/tau/return curves as CSV")
    common(p_curves)
    p_curves.add_argument("--dump-fcf", action="store_true",
                          help="also dump the simulated FCF paths")
    p_curves.set_defaults(func=cmd_curves)

    p_solve = sub.add_parser("solve", help="solve equilibrium rates")
    common(p_solve)
    p_solve.set_defaults(func=cmd_solve)

    p_max = sub.add_parser("maxdebt", help="maximum sustainable initial debt")
    common(p_max)
    p_max.set_defaults(func=cmd_maxdebt)

    p_cmp = sub.add_parser("compare", help="base-vs-variant what-if")
    common(p_cmp)
    p_cmp.add_argument("--variant", help="variant scenario file")
    p_cmp.add_argument("--to-maturity", type=int, help="variant maturity override")
    p_cmp.add_argument("--to-lgd", type=float, help="variant LGD override")
    p_cmp.add_argument("--to-debt", type=float, help="variant initial STNFP override")
    p_cmp.set_defaults(func=cmd_compare)
    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CreditEqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
