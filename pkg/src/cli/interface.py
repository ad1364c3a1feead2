#!/usr/bin/env python3
"""
p-group catalog CLI Interface
Argument parsing and dispatch; the command bodies live in commands.py
"""

import argparse
import sys

from src.catalog.errors import CatalogError
from src.utils.logger import log

from .commands import EXIT_INTERNAL, EXIT_USAGE, CatalogCommands


class CliParser(argparse.ArgumentParser):
    """Usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"❌ {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"'{text}' must be positive")
    return value


def build_parser():
    parser = CliParser(prog="pgroups", description='Finite p-group engine and A_3 catalog verifier')
    parser.add_argument('--catalog', default=None, help='Catalog directory (default from config.json)')
    sub = parser.add_subparsers(dest='command', parser_class=CliParser)

    analyze = sub.add_parser('analyze', help='Analyse a presentation file')
    analyze.add_argument('file', help='Entry file with p and params bound')

    fingerprint = sub.add_parser('fingerprint', help='Print the isomorphism fingerprint of a presentation file')
    fingerprint.add_argument('file')

    listing = sub.add_parser('catalog-list', help='List catalog entries')
    listing.add_argument('pattern', nargs='?', default=None, help='Id glob such as "M*" or "A1,B*"')

    verify = sub.add_parser('catalog-verify', help='Verify catalog claims')
    verify.add_argument('pattern', nargs='?', default=None, help='Id glob such as "O*"')
    verify.add_argument('--prime', dest='primes', type=_positive, action='append', default=None,
                        help='Prime to verify at; repeat for several (default: every prime of the envelope)')
    verify.add_argument('--max-order', type=_positive, default=None,
                        help='Largest group order (default: the per-prime envelope in config.json)')
    verify.add_argument('--jobs', type=_positive, default=None, help='Worker processes (default: all cores)')
    verify.add_argument('--output', default=None, help='Report directory (default from config.json)')

    conic = sub.add_parser('fp-conic', help='Count solutions of x^2 + r y^2 = u over F_p')
    conic.add_argument('--p', type=int, required=True)
    conic.add_argument('--r', type=int, required=True)
    conic.add_argument('--u', type=int, required=True)
    return parser


def run(argv=None):
    """Parse ``argv`` and run the command; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    commands = CatalogCommands(catalog_dir=args.catalog)
    log.info(f"Running command {args.command}")
    try:
        if args.command == 'analyze':
            return commands.analyze(args.file)
        if args.command == 'fingerprint':
            return commands.fingerprint(args.file)
        if args.command == 'catalog-list':
            return commands.catalog_list(args.pattern)
        if args.command == 'catalog-verify':
            return commands.catalog_verify(args.primes, args.max_order, args.pattern,
                                           args.jobs, args.output)
        return commands.fp_conic(args.p, args.r, args.u)
    except CatalogError as e:
        print(f"❌ Catalog error: {e}")
        return EXIT_USAGE
    except Exception as e:
        log.error(f"Unexpected failure in {args.command}: {type(e).__name__}: {e}")
        print(f"❌ Internal error: {type(e).__name__}: {e}")
        return EXIT_INTERNAL


def main():
    """Main entry point"""
    sys.exit(run())


if __name__ == "__main__":
    main()
