"""Command-line front end: ``otto-lab sweep | figure | verify | point``.

Machine-readable output only: CSV (sweeps, figures) and JSON (single
points) go to stdout unless ``--out`` is given; diagnostics go to stderr.
Numbers are printed with 12 significant digits, locale-independent.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import engine, fridge, tables, verification
from .cycle import ASYMMETRIC_REGIMES, Device, Regime
from .errors import DomainError, InfeasibleDeviceError

__all__ = ["main", "run"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3

_REGIME_NAMES = tuple(r.value for r in Regime)
_DEVICE_NAMES = tuple(d.value for d in Device)


def _fmt(x: float) -> str:
    return format(x, ".12g")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit_csv(header: list[str], rows, out: str | None) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join("" if v is None else _fmt(v) for v in row))
    text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="ascii", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_sweep(args: argparse.Namespace) -> int:
    device = Device(args.device)
    expected_axis = "eta_c" if device is Device.ENGINE else "zeta_c"
    if args.axis and args.axis != expected_axis:
        print(
            f"otto-lab sweep: error: axis {args.axis!r} does not match device "
            f"{device.value!r} (expected {expected_axis!r})",
            file=sys.stderr,
        )
        return EXIT_USAGE
    spec = tables.SweepSpec(
        device=device,
        regimes=tuple(Regime(r) for r in (args.regime or _REGIME_NAMES)),
        start=args.start,
        stop=args.stop,
        steps=args.steps,
        quantities=tuple(args.quantity or ()),
    )
    try:
        header, rows = tables.sweep_table(spec)
    except ValueError as exc:
        print(f"otto-lab sweep: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit_csv(header, rows, args.out)
    return EXIT_OK


def _cmd_figure(args: argparse.Namespace) -> int:
    try:
        header, rows = tables.figure_table(args.id, args.steps)
    except ValueError as exc:
        print(f"otto-lab figure: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit_csv(header, rows, args.out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    results = verification.run_all(tol_omega=args.tol_omega, tol_mw=args.tol_mw)
    for result in results:
        print(result.line())
    failed = sum(1 for r in results if not r.passed)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


def _engine_payload(regime: Regime, eta_c: float, z: float | None) -> dict:
    tau = 1.0 - eta_c
    traced = engine.eta_at_max_omega(regime, eta_c)
    payload: dict = {
        "device": "engine",
        "regime": regime.value,
        "eta_c": eta_c,
        "tau": tau,
        "eta_omega": traced.value,
        "r_omega": engine.fractional_loss(traced.value, eta_c),
        "z_star_omega": traced.trace["z_opt"],
    }
    if regime in ASYMMETRIC_REGIMES:
        payload["eta_mw"] = engine.eta_max_work(regime, eta_c)
        payload["eta_max"] = engine.eta_max(regime, tau).value
        payload["r_mw"] = engine.fractional_loss_max_work(regime, eta_c)
        payload["z_star_mw"] = tau ** (1.0 / 3.0)
        payload["z_star_max_eta"] = engine.z_star_max_eta(regime, tau).value
        payload["omega_value"] = engine.omega_objective(
            regime, traced.trace["z_opt"], tau
        )
    payload.update({f"trace_{k}": v for k, v in traced.trace.items()})
    if z is not None:
        point = engine.point_at(regime, z, tau)
        payload.update(
            z=point.z, eta=point.eta, w=point.w, q_h=point.q_h,
            omega_at_z=point.omega_value,
        )
    return payload


def _fridge_payload(regime: Regime, zeta_c: float, z: float | None) -> dict:
    tau = zeta_c / (1.0 + zeta_c)
    traced = fridge.cop_at_max_omega(regime, zeta_c)
    payload: dict = {
        "device": "fridge",
        "regime": regime.value,
        "zeta_c": zeta_c,
        "tau": tau,
        "cop_omega": traced.value,
        "z_star_omega": traced.trace["z_opt"],
    }
    if regime in ASYMMETRIC_REGIMES:
        payload["cop_max"] = fridge.cop_max(regime, zeta_c).value
        payload["z_star_max_cop"] = fridge.z_star_max_cop(regime, zeta_c).value
        payload["omega_value"] = fridge.omega_objective(
            regime, traced.trace["z_opt"], tau
        )
    payload.update({f"trace_{k}": v for k, v in traced.trace.items()})
    if z is not None:
        point = fridge.point_at(regime, z, tau)
        payload.update(
            z=point.z, cop=point.zeta, q_c=point.q_c, w_in=point.w_in,
            omega_at_z=point.omega_value,
        )
    return payload


def _cmd_point(args: argparse.Namespace) -> int:
    device = Device(args.device)
    regime = Regime(args.regime)
    try:
        if device is Device.ENGINE:
            payload = _engine_payload(regime, args.value, args.z)
        else:
            payload = _fridge_payload(regime, args.value, args.z)
    except InfeasibleDeviceError as exc:
        print(json.dumps({"error": "infeasible_device", "message": str(exc)}))
        return EXIT_DOMAIN
    except DomainError as exc:
        print(json.dumps({"error": "domain", "message": str(exc)}))
        return EXIT_DOMAIN
    print(json.dumps(payload))
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(
        prog="otto-lab",
        description="Closed-form Otto engine/refrigerator analytics with "
        "numeric-oracle verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="CSV parameter sweep over eta_c or zeta_c")
    sweep.add_argument("--device", required=True, choices=_DEVICE_NAMES)
    sweep.add_argument(
        "--regime", action="append", choices=_REGIME_NAMES,
        help="repeatable; default: all regimes a quantity supports",
    )
    sweep.add_argument("--axis", choices=("eta_c", "zeta_c"))
    sweep.add_argument("--start", type=float, required=True)
    sweep.add_argument("--stop", type=float, required=True)
    sweep.add_argument("--steps", type=int, required=True)
    sweep.add_argument(
        "--quantity", action="append",
        help="repeatable; engine: eta_omega eta_mw eta_max r_omega r_mw delta; "
        "fridge: cop_omega cop_max",
    )
    sweep.add_argument("--out", help="write CSV here instead of stdout")
    sweep.set_defaults(func=_cmd_sweep)

    figure = sub.add_parser("figure", help="emit one canonical figure data set as CSV")
    figure.add_argument("--id", required=True, choices=tables.FIGURE_IDS)
    figure.add_argument("--steps", type=int, default=181)
    figure.add_argument("--out", help="write CSV here instead of stdout")
    figure.set_defaults(func=_cmd_figure)

    verify = sub.add_parser(
        "verify", help="run the closed-form vs oracle verification suite"
    )
    verify.add_argument("--tol-omega", type=float, default=1e-6,
                        help="tolerance for Omega-optimum agreements")
    verify.add_argument("--tol-mw", type=float, default=1e-8,
                        help="tolerance for work/efficiency-optimum agreements")
    verify.set_defaults(func=_cmd_verify)

    point = sub.add_parser("point", help="all quantities at one axis value, as JSON")
    point.add_argument("device", choices=_DEVICE_NAMES)
    point.add_argument("regime", choices=_REGIME_NAMES)
    point.add_argument("value", type=float, help="eta_c (engine) or zeta_c (fridge)")
    point.add_argument("--z", type=float, help="also evaluate this compression ratio")
    point.set_defaults(func=_cmd_point)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"otto-lab: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
