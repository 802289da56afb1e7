"""
Intensity Efficiency - Command Line Interface
enumerate, analyze, verify-existence and counterexample subcommands
"""

import argparse
import json
import logging
import sys
from typing import Callable, Dict, List, Optional

from src.core.constants import MAX_RELATION_SIZE, SETTINGS_FILE, ExitCode
from src.core.logger import get_logger, init_logger
from src.core.settings_manager import SettingsManager
from src.efficiency.dominance import analyze_profile
from src.enumeration.profiles import relation_count
from src.enumeration.relations import check_size, iter_ranking_lines
from src.formats.documents import analysis_to_dict, load_profile, report_to_json
from src.formats.dot import save_dot
from src.verify.counterexample import (
    build_counterexample_profile, completion_space_size, search_completions, verify_counterexample
)
from src.verify.sweep import verify_existence_exhaustive, verify_existence_random


class UsageError(Exception):
    """Bad command line."""


class CliArgumentParser(argparse.ArgumentParser):
    """Raises instead of exiting so usage errors map to exit code 1."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog="intensity",
        description="Intensity-efficient allocations under strict intensity profiles")
    parser.add_argument("--settings", default=SETTINGS_FILE, help="Settings JSON file")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="Console log level (overrides settings)")
    commands = parser.add_subparsers(dest="command", required=True)

    enumerate_cmd = commands.add_parser("enumerate", help="Count strict intensity relations")
    enumerate_cmd.add_argument("--n", type=int, required=True, help="Number of objects")
    enumerate_cmd.add_argument("--list", action="store_true", help="Write every relation as a ranking line")
    enumerate_cmd.add_argument("--out", type=str, help="File for --list output (default stdout)")

    analyze = commands.add_parser("analyze", help="Pareto set, dominance edges and efficient set")
    analyze.add_argument("--input", type=str, required=True, help="Profile JSON file")
    analyze.add_argument("--dot", type=str, help="Write the dominance digraph as DOT")
    analyze.add_argument("--json", action="store_true", help="Print a JSON report")

    existence = commands.add_parser("verify-existence", help="Sweep profiles for non-existence")
    existence.add_argument("--n", type=int, required=True, help="Number of objects")
    how = existence.add_mutually_exclusive_group(required=True)
    how.add_argument("--exhaustive", action="store_true", help="Check every profile")
    how.add_argument("--samples", type=int, help="Number of random profiles")
    existence.add_argument("--seed", type=int, help="Seed for --samples")
    existence.add_argument("--symmetry", action="store_true",
                           help="One profile per orbit of object renaming and agent reordering")
    existence.add_argument("--jobs", type=int, help="Worker processes")
    existence.add_argument("--checkpoint", type=str, help="Resumable progress file")

    counter = commands.add_parser("counterexample", help="Check the five-agent counterexample")
    counter.add_argument("--search-completions", action="store_true",
                         help="Search agent 4/5 completions for one confirming non-existence")
    counter.add_argument("--dot", type=str, help="Write the dominance digraph as DOT")
    return parser


# =============================================================================
# COMMANDS
# =============================================================================
def run_enumerate(args, settings: SettingsManager) -> ExitCode:
    check_size(args.n, MAX_RELATION_SIZE, "enumerate")
    print(relation_count(args.n))
    if args.list:
        lines = (f"{line}\n" for line in iter_ranking_lines(args.n))
        if args.out:
            try:
                with open(args.out, 'w', encoding='utf-8') as f:
                    f.writelines(lines)
            except OSError as e:
                get_logger().error(f"Failed to write {args.out}: {e}", exc_info=True)
                raise
        else:
            sys.stdout.writelines(lines)
    return ExitCode.SUCCESS


def run_analyze(args, settings: SettingsManager) -> ExitCode:
    summary = analyze_profile(load_profile(args.input))
    if args.dot:
        save_dot(summary.digraph, args.dot)

    if args.json:
        print(json.dumps(analysis_to_dict(summary), indent=2))
    else:
        print(f"Pareto-efficient ({len(summary.pareto)}): "
              + " ".join(x.label() for x in summary.pareto))
        print(f"Dominance edges ({len(summary.digraph.edges)}):")
        for x, y in summary.digraph.edges:
            print(f"  {x.label()} -> {y.label()}")
        print(f"Intensity-efficient ({len(summary.efficient)}): "
              + (" ".join(x.label() for x in summary.efficient) or "(none)"))
        print(f"Discarded by the refinement: {summary.discarded_fraction}")
        if summary.cycle:
            print("Dominance cycle: " + " -> ".join(x.label() for x in summary.cycle))
    return ExitCode.SUCCESS if summary.efficient else ExitCode.VIOLATED


def run_verify_existence(args, settings: SettingsManager) -> ExitCode:
    if args.samples is not None and args.seed is None:
        raise UsageError("--samples requires --seed")
    if args.symmetry and not args.exhaustive:
        raise UsageError("--symmetry applies to --exhaustive sweeps only")

    options = dict(
        jobs=args.jobs if args.jobs is not None else settings.get("sweep", "jobs"),
        checkpoint=args.checkpoint,
        chunk_size=settings.get("sweep", "chunk_size"),
        progress=bool(settings.get("sweep", "progress")) and sys.stderr.isatty(),
    )
    if args.exhaustive:
        report = verify_existence_exhaustive(
            args.n, budget=settings.get("sweep", "full_budget"), symmetry=args.symmetry, **options)
    else:
        report = verify_existence_random(args.n, args.samples, args.seed, **options)

    print(report.summary_line())
    if args.symmetry:
        print(f"{report.profiles_covered} profiles covered by orbit representatives")
    if report.holds:
        return ExitCode.SUCCESS
    sys.stdout.write(report_to_json(report))
    return ExitCode.VIOLATED


def run_counterexample(args, settings: SettingsManager) -> ExitCode:
    report = None
    if args.search_completions:
        fours, fives, pairs = completion_space_size()
        print(f"completion space: {fours} x {fives} = {pairs} pairs")
        search = search_completions()
        print(f"pairs tried: {search.pairs_tried}")
        if search.found:
            report = search.report
        else:
            print("no completion pair confirms non-existence")
    if report is None:
        report = verify_counterexample(build_counterexample_profile())

    for line in report.describe():
        print(line)
    if args.dot:
        save_dot(report.digraph, args.dot)
    print("non-existence confirmed" if report.confirmed else "non-existence NOT confirmed")
    return ExitCode.SUCCESS if report.confirmed else ExitCode.VIOLATED


COMMANDS: Dict[str, Callable] = {
    "enumerate": run_enumerate,
    "analyze": run_analyze,
    "verify-existence": run_verify_existence,
    "counterexample": run_counterexample,
}


def cli(argv: Optional[List[str]] = None) -> ExitCode:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return ExitCode.USAGE_ERROR

    settings = SettingsManager(args.settings)
    level_name = args.log_level or settings.get("logging", "level") or "WARNING"
    init_logger(settings.get("logging", "log_dir"), getattr(logging, level_name, logging.WARNING))

    try:
        return COMMANDS[args.command](args, settings)
    except UsageError as e:
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return ExitCode.USAGE_ERROR
    except (ValueError, OSError) as e:
        get_logger().debug(f"{args.command} failed: {e!r}")
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.USAGE_ERROR


def main():
    sys.exit(int(cli()))
