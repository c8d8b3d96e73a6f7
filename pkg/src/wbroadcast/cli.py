"""Command-line entry point.

Four subcommands, all driven by a JSON config (a file path, or "-" for
stdin) and writing to stdout or --out:

  run       simulate one protocol instance and report every branch
  verify    check the transcribed fixtures against the simulation
  fixtures  dump the fixtures themselves at the given parameters
  sweep     CSV of summary metrics over parameter grids

Exit codes: 0 on success, 2 for configuration or usage errors, 3 when
the computation itself reports a failure. No environment variables are
consulted.
"""

import argparse
import json
import sys

from wbroadcast import reports
from wbroadcast.errors import ConfigError, WBroadcastError


def _read_config(path):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as e:
        raise ConfigError("cannot read config %r: %s" % (path, e)) from e
    try:
        return json.loads(text)
    except ValueError as e:
        raise ConfigError("config is not valid JSON: %s" % (e,)) from e


def _write_output(text, out_path):
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _dump(payload):
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="wbroadcast",
        description="W-type broadcasting simulator and claim checker",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, outcome=False):
        sp.add_argument(
            "--config",
            required=True,
            help="path to JSON config, or - for stdin",
        )
        sp.add_argument("--out", default=None, help="output path (default stdout)")
        sp.add_argument(
            "--tol",
            type=float,
            default=None,
            help="override the config tolerance",
        )
        if outcome:
            sp.add_argument(
                "--outcome",
                default=None,
                help="restrict analyses to one flag pattern, e.g. UUD",
            )

    common(sub.add_parser("run", help="simulate one protocol instance"), outcome=True)
    common(sub.add_parser("verify", help="check fixtures against the simulation"))
    common(sub.add_parser("fixtures", help="dump the fixtures"))
    common(sub.add_parser("sweep", help="CSV metrics over parameter grids"))
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        mapping = _read_config(args.config)
        if args.command == "sweep":
            spec = reports.SweepSpec.from_mapping(mapping, tol_override=args.tol)
            text, skipped = reports.cmd_sweep(spec)
            if skipped:
                print("skipped %d grid points" % (skipped,), file=sys.stderr)
            _write_output(text, args.out)
        else:
            outcome = getattr(args, "outcome", None)
            config = reports.ProtocolConfig.from_mapping(
                mapping, tol_override=args.tol, outcome_override=outcome
            )
            if args.command == "run":
                payload = reports.cmd_run(config)
            elif args.command == "verify":
                payload = reports.cmd_verify(config)
            else:
                payload = reports.cmd_fixtures(config)
            _write_output(_dump(payload), args.out)
    except ConfigError as e:
        print("error: %s" % (e,), file=sys.stderr)
        return 2
    except WBroadcastError as e:
        print("error: %s" % (e,), file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
