"""Command line front end: ``qmass-lab <scenario> --config file [options]``.

Exit codes: 0 all metrics pass, 1 metric failure, 2 usage/config error,
3 runtime/physics error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InvalidConfigError, QmassError
from .scenarios import SCENARIOS, run


def _parse_override(text: str) -> tuple[str, object]:
    if "=" not in text:
        raise InvalidConfigError(f"--set expects key=value, got {text!r}")
    key, raw = text.split("=", 1)
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return key, value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmass-lab",
        description="Wave-interference mass laboratory: run a scenario and "
        "export CSV data plus a JSON verification summary.",
    )
    parser.add_argument("scenario", choices=SCENARIOS)
    parser.add_argument("--config", help="JSON file with scenario parameters")
    parser.add_argument("--out", default=".", help="output directory (default: cwd)")
    parser.add_argument(
        "--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE",
        help="override a single parameter; flags win over the config file",
    )
    parser.add_argument(
        "--seed", type=int, default=None,
        help="reserved; current scenarios are deterministic",
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    params: dict = {}
    try:
        if args.config:
            with open(args.config) as fh:
                params.update(json.load(fh))
        for item in args.overrides:
            key, value = _parse_override(item)
            params[key] = value
        summary = run(args.scenario, params, args.out)
    except (InvalidConfigError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"qmass-lab: config error: {exc}", file=sys.stderr)
        return 2
    except QmassError as exc:
        print(f"qmass-lab: {args.scenario}: {exc}", file=sys.stderr)
        return 3
    for m in summary.metrics:
        status = "PASS" if m.passed else "FAIL"
        print(
            f"{status} {m.name}: predicted={m.predicted:.9g} "
            f"measured={m.measured:.9g} rel_error={m.rel_error:.3g} "
            f"tol={m.tolerance:.3g} [{m.source}]"
        )
    print(f"{'PASS' if summary.passed else 'FAIL'} {summary.kind} "
          f"({summary.duration_s:.2f}s, files: {', '.join(summary.files) or 'none'})")
    return 0 if summary.passed else 1


if __name__ == "__main__":
    sys.exit(main())
