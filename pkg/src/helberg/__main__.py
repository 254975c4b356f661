#!/usr/bin/env python3.8

"""helberg -- insertion/deletion correcting codes with Helberg-style weights.

Every subcommand is a thin shell over one library operation.  Words are
digit strings when q <= 10 and comma-separated symbols otherwise.
"""

import argparse
import logging
import sys
import traceback
from typing import Callable, List, Optional

from helberg.channel import corrupt, random_plan
from helberg.codebook import (
    CodecError,
    CodeParams,
    build_weights,
    enumerate_codebook,
    export_weights,
    is_codeword,
    moment,
)
from helberg.decoder import DecodeFailure, InvariantViolation, decode
from helberg.deletions import decode_deletions
from helberg.oracle import FullMode, SampledMode, VerifyMode, verify_exhaustive
from helberg.utils import print_memstats
from helberg.validator import ValidationError, validate_weights
from helberg.words import format_word, parse_word

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

logger = logging.getLogger("helberg")


def _params(args: argparse.Namespace) -> CodeParams:
    return CodeParams.create(args.n, args.d, args.q, args.r)


def cmd_weights(args: argparse.Namespace) -> int:
    weights = build_weights(args.q, args.d, args.count)
    if args.check:
        validate_weights(weights, args.q, args.d)
    print(export_weights(weights))
    return EXIT_OK


def cmd_moment(args: argparse.Namespace) -> int:
    word = parse_word(args.word, args.q)
    print(moment(word, build_weights(args.q, args.d, len(word) + 1)))
    return EXIT_OK


def cmd_member(args: argparse.Namespace) -> int:
    params = _params(args)
    if is_codeword(parse_word(args.word, args.q), params):
        print("member")
        return EXIT_OK
    print("non-member")
    return EXIT_NEGATIVE


def cmd_decode(args: argparse.Namespace) -> int:
    params = _params(args)
    y = parse_word(args.word, args.q)
    try:
        result = decode(y, params, tie_break=args.tie_break)
    except DecodeFailure as err:
        if args.trace and err.trace is not None:
            print(err.trace.to_text())
        raise
    print(format_word(result.word, params.q))
    if args.trace:
        print(result.trace.to_text())
    return EXIT_OK if result.verified else EXIT_NEGATIVE


def cmd_decode_deletions(args: argparse.Namespace) -> int:
    y_prime = parse_word(args.word, args.q)
    x_prime = decode_deletions(y_prime, args.n_target, args.moment, args.q, args.d)
    print(format_word(x_prime, args.q))
    return EXIT_OK


def cmd_corrupt(args: argparse.Namespace) -> int:
    x = parse_word(args.word, args.q)
    plan = random_plan(len(x), args.num_ins, args.num_del, args.seed, args.q, d=args.d)
    print(format_word(corrupt(x, plan, args.q), args.q))
    print(plan)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    params = _params(args)
    for x in enumerate_codebook(params):
        print(format_word(x, params.q))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    params = _params(args)
    mode: VerifyMode = FullMode()
    if args.sampled is not None:
        mode = SampledMode(*args.sampled)
    report = verify_exhaustive(
        params,
        mode,
        max_ins=args.max_ins,
        max_del=args.max_del,
        workers=args.workers,
        force=args.force,
    )
    if not args.quiet:
        print(report.to_text(include_time=args.verbose > 0))
    if args.verbose >= 2:
        print_memstats()
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def _add_code_options(parser: argparse.ArgumentParser, *, with_n: bool = True) -> None:
    if with_n:
        parser.add_argument("--n", type=int, required=True, help="Codeword length")
    parser.add_argument("--d", type=int, required=True, help="Number of indels to correct")
    parser.add_argument("--q", type=int, required=True, help="Alphabet size")


argparser = argparse.ArgumentParser(
    prog="helberg", description="Insertion/deletion correcting codes with Helberg-style weights"
)
argparser.add_argument(
    "-v",
    "--verbose",
    action="count",
    default=0,
    help="Show progress; repeat for decoder decisions and memory stats",
)
subparsers = argparser.add_subparsers(dest="command", required=True)

weights_parser = subparsers.add_parser("weights", help="Print the weight table w_0 ...")
weights_parser.add_argument("--q", type=int, required=True, help="Alphabet size")
weights_parser.add_argument("--d", type=int, required=True, help="Number of indels to correct")
weights_parser.add_argument("--count", type=int, required=True, help="Number of weights")
weights_parser.add_argument("--check", action="store_true", help="Validate the table as well")
weights_parser.set_defaults(func=cmd_weights)

moment_parser = subparsers.add_parser("moment", help="Print the moment of a word")
moment_parser.add_argument("word")
_add_code_options(moment_parser, with_n=False)
moment_parser.set_defaults(func=cmd_moment)

member_parser = subparsers.add_parser("member", help="Tell whether a word is a codeword")
member_parser.add_argument("word")
_add_code_options(member_parser)
member_parser.add_argument("--r", type=int, default=0, help="Residue")
member_parser.set_defaults(func=cmd_member)

decode_parser = subparsers.add_parser("decode", help="Decode a corrupted word")
decode_parser.add_argument("word")
_add_code_options(decode_parser)
decode_parser.add_argument("--r", type=int, default=0, help="Residue")
decode_parser.add_argument("--trace", action="store_true", help="Print the decoder decisions")
decode_parser.add_argument(
    "--tie-break",
    type=int,
    choices=(1, 2),
    default=1,
    help="Case explored first when both cases reach equally far",
)
decode_parser.set_defaults(func=cmd_decode)

deletions_parser = subparsers.add_parser(
    "decode-deletions", help="Restore deleted symbols given the exact moment"
)
deletions_parser.add_argument("word")
deletions_parser.add_argument("--n-target", type=int, required=True, help="Length to restore")
deletions_parser.add_argument("--moment", type=int, required=True, help="Exact moment")
_add_code_options(deletions_parser, with_n=False)
deletions_parser.set_defaults(func=cmd_decode_deletions)

corrupt_parser = subparsers.add_parser("corrupt", help="Apply random insertions and deletions")
corrupt_parser.add_argument("word")
corrupt_parser.add_argument("--q", type=int, required=True, help="Alphabet size")
corrupt_parser.add_argument("--ins", dest="num_ins", type=int, default=0, help="Insertions")
corrupt_parser.add_argument("--del", dest="num_del", type=int, default=0, help="Deletions")
corrupt_parser.add_argument("--seed", type=int, default=0, help="Random seed")
corrupt_parser.add_argument("--d", type=int, default=None, help="Refuse more than d edits")
corrupt_parser.set_defaults(func=cmd_corrupt)

enumerate_parser = subparsers.add_parser("enumerate", help="List every codeword")
_add_code_options(enumerate_parser)
enumerate_parser.add_argument("--r", type=int, default=0, help="Residue")
enumerate_parser.set_defaults(func=cmd_enumerate)

verify_parser = subparsers.add_parser("verify", help="Check the decoder against the oracle")
_add_code_options(verify_parser)
verify_parser.add_argument("--r", type=int, default=0, help="Residue")
verify_mode = verify_parser.add_mutually_exclusive_group(required=True)
verify_mode.add_argument("--full", action="store_true", help="Every codeword and every plan")
verify_mode.add_argument(
    "--sampled", nargs=2, type=int, metavar=("SEED", "COUNT"), help="Random plans"
)
verify_parser.add_argument("--workers", type=int, default=1, help="Worker processes")
verify_parser.add_argument("--force", action="store_true", help="Allow very large full runs")
verify_parser.add_argument("--max-ins", type=int, default=None, help="Most insertions per plan")
verify_parser.add_argument("--max-del", type=int, default=None, help="Most deletions per plan")
verify_parser.add_argument("-q", "--quiet", action="store_true", help="Only set the exit status")
verify_parser.set_defaults(func=cmd_verify)


def _log_level(verbose: int) -> int:
    if verbose >= 2:
        return logging.DEBUG
    if verbose == 1:
        return logging.INFO
    return logging.WARNING


def _report(err: Exception, verbose: int) -> None:
    if verbose:
        raise err  # Show traceback
    traceback.print_exception(err.__class__, err, None)
    sys.stderr.write("For full traceback, use -v\n")


def main(argv: Optional[List[str]] = None) -> int:
    args = argparser.parse_args(argv)
    level = _log_level(args.verbose)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    logger.setLevel(level)
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except (InvariantViolation, DecodeFailure, ValidationError) as err:
        _report(err, args.verbose)
        return EXIT_INTERNAL
    except (CodecError, ValueError) as err:
        _report(err, args.verbose)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
