#!/usr/bin/env python3
"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Logic and implementation for cli.py
"""

"""
TraceSampler SGI-TS - sampling and class-imbalance toolkit for packet traces
Main Command Line Entry Point
"""

import argparse
import logging
import sys

from config import get_config
from commands import analyze, compare, oracle, sample, split, synth
from commands.errors import EXIT_USAGE, exit_code_for
from utils.errors import SamplingError


def create_parser():
    parser = argparse.ArgumentParser(
        prog='sgi-ts',
        description="Sampling, class-imbalance and information-loss analysis of labeled packet traces"
    )
    parser.add_argument('--config', dest='config_name', default=None,
                        choices=['development', 'production', 'testing', 'default'])
    parser.add_argument('--lang', default=None, choices=['en', 'fr'])
    parser.add_argument('-v', '--verbose', action='count', default=0)

    subparsers = parser.add_subparsers(dest='command', required=True)
    synth.register(subparsers)
    analyze.register(subparsers)
    sample.register(subparsers)
    compare.register(subparsers)
    oracle.register(subparsers)
    split.register(subparsers)
    return parser


def configure_logging(cfg, verbose=0):
    level = cfg.LOG_LEVEL
    if verbose == 1:
        level = 'INFO'
    elif verbose > 1:
        level = 'DEBUG'
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
        force=True
    )


def main(argv=None):
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        cfg = get_config(args.config_name)
    except SamplingError as e:
        print(f"Error [{e.code}]: {e}", file=sys.stderr)
        return exit_code_for(e)
    if args.lang:
        cfg.LANGUAGE = args.lang

    configure_logging(cfg, args.verbose)
    return args.func(args, cfg)


if __name__ == '__main__':
    sys.exit(main())
