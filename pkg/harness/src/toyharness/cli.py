"""Command line for the toy harness: single runs and the full sweep."""

import argparse
import json
import sys

from .experiment import report, run_experiment, sweep
from .train import DivergedError


def main(argv=None):
    p = argparse.ArgumentParser(prog="toyharness")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="one scratch-vs-warm-start comparison")
    r.add_argument("--direction", required=True, choices=("s2l", "l2s"))
    r.add_argument("--padding", default="zero",
                   choices=("zero", "gaussian", "uniform"))
    r.add_argument("--seed", type=int, default=1)
    r.add_argument("--workdir", default="runs")

    s = sub.add_parser("sweep", help="both directions and the padding matrix")
    s.add_argument("--workdir", default="runs")
    s.add_argument("--seeds", type=int, nargs="+", default=[1, 2, 3])

    args = p.parse_args(argv)
    try:
        if args.command == "run":
            result = run_experiment(args.direction, args.padding, args.seed,
                                    args.workdir)
            print(json.dumps(result, indent=2))
        else:
            results = sweep(args.workdir, tuple(args.seeds))
            print(report(results))
    except DivergedError as e:
        print(f"experiment failed: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
