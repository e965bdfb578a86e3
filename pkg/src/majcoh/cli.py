"""Command-line front end with file-based JSON I/O.

Exit codes: 0 on success, 2 on a domain refusal (transformation forbidden
by majorization, no catalyst found), 1 on malformed input or bad flags.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import serialize
from .absorption import IncoherentTarget, absorb_channel
from .catalysis import CatalysisQuery, catalysis_necessary, search_catalyst
from .channels import apply, completeness_residual, is_incoherent
from .majorization import compare
from .measures import Observable, c_l, check_monotone_violation, skew_information
from .synthesis import NotMajorizedError, plan_synthesis
from .tolerances import DEFAULT_TOL, ToleranceConfig

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_REFUSED = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the contract here
    # reserves 2 for domain refusals, so remap flag errors to 1.
    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_BAD_INPUT)


def _read_json(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ValueError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from exc


def _emit(obj, pretty: bool) -> None:
    print(serialize.dumps(obj, pretty=pretty))


def _tolerances(args) -> ToleranceConfig:
    overrides = {}
    for field in dataclasses.fields(ToleranceConfig):
        name = field.name  # e.g. norm_tol -> --tol-norm
        value = getattr(args, f"tol_{name.removesuffix('_tol')}", None)
        if value is not None:
            overrides[name] = value
    return DEFAULT_TOL.replace(**overrides) if overrides else DEFAULT_TOL


def _cmd_check(args, tol: ToleranceConfig) -> int:
    x = serialize.load_state_or_profile(_read_json(args.x), tol)
    y = serialize.load_state_or_profile(_read_json(args.y), tol)
    print(compare(x, y, tol).value)
    return EXIT_OK


def _cmd_synth(args, tol: ToleranceConfig) -> int:
    psi = serialize.state_from_json(_read_json(args.psi), tol)
    phi = serialize.state_from_json(_read_json(args.phi), tol)
    try:
        plan = plan_synthesis(psi, phi, tol)
    except NotMajorizedError as exc:
        print(f"NotMajorized: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    channel_doc = serialize.channel_to_json(plan.to_channel(tol))
    if args.output:
        out = Path(args.output)
        out.write_text(serialize.dumps(channel_doc, pretty=args.pretty) + "\n")
        sidecar = out.with_suffix(".plan.json")
        sidecar.write_text(serialize.dumps(serialize.plan_to_json(plan), pretty=args.pretty) + "\n")
    else:
        _emit(channel_doc, args.pretty)
    return EXIT_OK


def _cmd_apply(args, tol: ToleranceConfig) -> int:
    ch = serialize.channel_from_json(_read_json(args.channel), tol)
    rho = serialize.load_density_or_state(_read_json(args.state), tol)
    _emit(serialize.density_to_json(apply(ch, rho, tol)), args.pretty)
    return EXIT_OK


def _cmd_verify(args, tol: ToleranceConfig) -> int:
    kraus = serialize.kraus_from_json(_read_json(args.channel))
    residual = completeness_residual(kraus)
    _emit(
        {
            "incoherent": is_incoherent(kraus, tol),
            "complete": residual <= tol.complete_tol,
            "completeness_residual": residual,
        },
        args.pretty,
    )
    return EXIT_OK


def _cmd_catalyze(args, tol: ToleranceConfig) -> int:
    x = serialize.load_state_or_profile(_read_json(args.psi), tol)
    y = serialize.load_state_or_profile(_read_json(args.phi), tol)
    query = CatalysisQuery(source=x, target=y, catalyst_dim=args.dim, grid_step=args.grid)
    found = search_catalyst(query, tol)
    if found is not None:
        _emit(serialize.profile_to_json(found), args.pretty)
        return EXIT_OK
    if not catalysis_necessary(x, y, tol):
        print("no catalyst exists: endpoint condition violated", file=sys.stderr)
    else:
        print("none found at this resolution", file=sys.stderr)
    return EXIT_REFUSED


def _cmd_measure(args, tol: ToleranceConfig) -> int:
    data = _read_json(args.state)
    if args.measure == "cl":
        if args.l is None:
            raise ValueError("--l: required for the cl measure")
        state = serialize.state_from_json(data, tol)
        value = c_l(state, args.l)
    else:
        if args.observable is None:
            raise ValueError("--observable: required for the skew measure")
        k = Observable(serialize.observable_matrix_from_json(_read_json(args.observable)), tol)
        rho = serialize.load_density_or_state(data, tol)
        value = skew_information(rho, k, tol)
    _emit(value, args.pretty)
    return EXIT_OK


def _cmd_counterexample(args, tol: ToleranceConfig) -> int:
    _emit(check_monotone_violation(tol).to_dict(), args.pretty)
    return EXIT_OK


def _cmd_absorb(args, tol: ToleranceConfig) -> int:
    rho = serialize.load_density_or_state(_read_json(args.rho), tol)
    sigma_doc = _read_json(args.sigma)
    if isinstance(sigma_doc, list):
        target = IncoherentTarget(serialize.profile_from_json(sigma_doc, tol))
    else:
        target = IncoherentTarget.from_density_matrix(
            serialize.density_from_json(sigma_doc, tol), tol
        )
    if target.dim != rho.dim:
        raise ValueError(f"sigma: target has dim {target.dim}, state has dim {rho.dim}")
    ch = absorb_channel(target, rho.dim, tol)
    _emit(
        {
            "channel": serialize.channel_to_json(ch),
            "output": serialize.density_to_json(apply(ch, rho, tol)),
        },
        args.pretty,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent JSON output")
    for name in ("norm", "herm", "psd", "complete", "major", "purity", "nonneg"):
        common.add_argument(f"--tol-{name}", type=float, default=None, metavar="X",
                            help=f"override {name}_tol")

    parser = _Parser(prog="majcoh",
                     description="Decide, build, and verify pure-state coherence "
                                 "transformations under incoherent operations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common],
                       help="compare two profiles (or states) under majorization")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("synth", parents=[common],
                       help="synthesize an incoherent channel mapping psi to phi")
    p.add_argument("psi")
    p.add_argument("phi")
    p.add_argument("-o", "--output", default=None,
                   help="write channel JSON here (plan sidecar at <output>.plan.json)")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("apply", parents=[common], help="apply a channel to a state")
    p.add_argument("channel")
    p.add_argument("state")
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("verify", parents=[common],
                       help="report incoherence and completeness of a stored channel")
    p.add_argument("channel")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("catalyze", parents=[common],
                       help="grid-search for a coherent catalyst")
    p.add_argument("psi")
    p.add_argument("phi")
    p.add_argument("--dim", type=int, default=2, help="catalyst dimension (default 2)")
    p.add_argument("--grid", type=float, default=0.01, help="grid step (default 0.01)")
    p.set_defaults(func=_cmd_catalyze)

    p = sub.add_parser("measure", parents=[common], help="evaluate a coherence measure")
    p.add_argument("--measure", choices=("cl", "skew"), required=True)
    p.add_argument("--l", type=int, default=None, help="tail index for the cl measure")
    p.add_argument("--observable", default=None, help="observable JSON for the skew measure")
    p.add_argument("state")
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("counterexample", parents=[common],
                       help="run the fixed skew-information monotonicity check")
    p.set_defaults(func=_cmd_counterexample)

    p = sub.add_parser("absorb", parents=[common],
                       help="build the channel absorbing any state into a diagonal target")
    p.add_argument("rho")
    p.add_argument("sigma")
    p.set_defaults(func=_cmd_absorb)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        tol = _tolerances(args)
        return args.func(args, tol)
    except NotMajorizedError as exc:
        print(f"NotMajorized: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
