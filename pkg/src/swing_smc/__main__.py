# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Command Line Interface
===============================

    swing_smc simulate --config job.yaml --seed 3 --out path.csv
    swing_smc online   --config job.yaml --seed 3 --out run.csv
    swing_smc iffit    --config job.yaml --seed 3 --passes 50
    swing_smc optimize --config job.yaml --seed 3 --particles 1000

Command-line values take precedence over the job file. Failures print one
JSON line on stderr and exit with status 1.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import argparse
import json
import logging
import sys
from typing import List, Optional

# Import | Local Modules
import swing_smc
from swing_smc.conf import get_smc_config
from swing_smc.errors import SmcError
from swing_smc.harness import KINDS, load_config, run_job


# =============================================================================
# Functions
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swing_smc",
        description="Self-organized particle filters and iterated filtering.",
    )
    parser.add_argument("--version", action="version", version=swing_smc.__version__)
    subparsers = parser.add_subparsers(dest="kind", required=True)
    for kind in KINDS:
        sub = subparsers.add_parser(kind, help=f"run a {kind} job")
        sub.add_argument("--config", required=True, help="YAML job file")
        sub.add_argument("--seed", type=int, help="master seed, overrides the job file")
        sub.add_argument("--out", dest="output", help="output CSV path")
        sub.add_argument("--input", help="observation CSV path")
        sub.add_argument("--particles", dest="n_particles", type=int, help="number of particles N")
        sub.add_argument("--passes", type=int, help="pass budget of iterated filtering")
        sub.add_argument("--log-level", dest="log_level", help="logging level")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=(args.log_level or get_smc_config("logging", "level")).upper(),
        format=get_smc_config("logging", "format"),
    )
    try:
        config = load_config(args.config)
        if config.kind != args.kind:
            config = config.with_overrides(kind=args.kind)
        config = config.with_overrides(
            seed=args.seed, output=args.output, input=args.input,
            n_particles=args.n_particles, passes=args.passes,
        )
        run_job(config)
    except SmcError as err:
        print(json.dumps(err.as_dict()), file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(json.dumps(SmcError.to_dict(str(exc), type(exc).__name__, "unexpected")), file=sys.stderr)
        return 1
    return 0


# =============================================================================
# Main
# =============================================================================

if __name__ == "__main__":
    sys.exit(main())
