#!/usr/bin/env python3
"""
Coupled Painleve III verification lab.

    python lab.py verify all
    python lab.py verify translations --system d6
    python lab.py integrate --system d6 --params '[...]' --initial '[...]' --t0 1 --t1 4

Every run prints one JSON report (stdout or --out) and a readable table on stderr.
Exit status: 0 all checks passed, 1 a check failed, 2 bad input, 3 internal error.
"""

import argparse
import logging
import sys
import time
from typing import Callable, Dict, List, Optional

sys.path.append('.')

from algebra import LabError, PoleError, StepUnderflow, UsageError, VerificationFailure
from config import CONFLUENCE_CHECKS, NumericConfig, SYSTEM_ALIASES, SYSTEM_TITLES
from confluence import verify_confluence
from holomorphy import chart_ids, chart_round_trip, negative_control, verify_charts
from numeric import export_csv, integrate, symmetry_commute_check, verify_numeric
from reporting import CheckRecord, Report, recorded, timed, verdict
from solutions import verify_integrals, verify_solutions
from systems import (MAIN_SYSTEMS, build_system, erratum, hamiltonian_decomposition_check,
                     phase_degree, scalar_piii_reduction_check, transcription_check)
from utils import (InputValidator, complex_pairs, format_complex, format_seconds, parse_values,
                   resolve_system)
from weyl import (WORDS, verify_conjugations, verify_printed_words, verify_relations,
                  verify_symmetry, verify_translations)

logger = logging.getLogger("lab")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

ALL_SYSTEMS = MAIN_SYSTEMS + ("A1_D7",)
PRINTED = ("D6", "B5", "D52")
CHARTED = ("D6", "B5", "D52")
# full translation maps are composed for these in `verify all`
PHASE_TRANSLATIONS = ("D52",)


def systems_suite(sys_id: str) -> List[CheckRecord]:
    """Transcription, decomposition and degree checks of one system."""
    records = []
    system = build_system(sys_id)
    if sys_id in PRINTED:
        started = time.perf_counter()
        for name, ok in transcription_check(system).items():
            records.append(verdict(f"{sys_id} d{name}/dt matches the displayed system", ok,
                                   started=started))
            if erratum(sys_id, name):
                records.append(recorded(f"{sys_id} d{name}/dt erratum", erratum(sys_id, name)))
        records.append(verdict(f"{sys_id} Hamiltonian decomposition",
                               hamiltonian_decomposition_check(sys_id), started=started))
        records.append(verdict(f"{sys_id} t*H has degree 4 in the phase variables",
                               phase_degree(system) == 4, witness=phase_degree(system)))
    else:
        records.append(recorded(f"{sys_id} degree of t*H", phase_degree(system)))
    if sys_id == "A1_D7":
        records.append(timed("scalar P_III reduction", scalar_piii_reduction_check))
    return records


def relations_suite(sys_id: str) -> List[CheckRecord]:
    return verify_relations(sys_id) + verify_conjugations(sys_id)


def translations_suite(sys_id: str, phase: bool = False) -> List[CheckRecord]:
    if sys_id not in WORDS:
        raise UsageError(f"No translations recorded for system '{sys_id}'")
    return verify_translations(sys_id, phase=phase) + verify_printed_words(sys_id)


def charts_suite(sys_id: str) -> List[CheckRecord]:
    records = verify_charts(sys_id)
    for chart_id in chart_ids(sys_id):
        records.append(verdict(f"{sys_id} chart {chart_id} inverts", chart_round_trip(sys_id,
                                                                                     chart_id)))
    if sys_id == "D6":
        records.append(negative_control())
    return records


def verify_all() -> List[CheckRecord]:
    records: List[CheckRecord] = []
    for sys_id in ALL_SYSTEMS:
        records += systems_suite(sys_id)
        records += relations_suite(sys_id)
        records += verify_symmetry(sys_id)
        if sys_id in WORDS:
            records += translations_suite(sys_id, phase=sys_id in PHASE_TRANSLATIONS)
        if sys_id in CHARTED:
            records += charts_suite(sys_id)
    for which in CONFLUENCE_CHECKS:
        records += verify_confluence(which)
    records += verify_solutions()
    records += verify_integrals()
    records += verify_numeric()
    return records


def _verify(args) -> List[CheckRecord]:
    suites: Dict[str, Callable[[], List[CheckRecord]]] = {
        "systems": lambda: systems_suite(args.system),
        "relations": lambda: relations_suite(args.system),
        "symmetry": lambda: verify_symmetry(args.system, args.map),
        "translations": lambda: translations_suite(args.system, args.phase),
        "charts": lambda: charts_suite(args.system),
        "confluence": lambda: verify_confluence(args.which),
        "solutions": lambda: verify_solutions(args.id),
        "integrals": verify_integrals,
        "numeric": verify_numeric,
        "all": verify_all,
    }
    return suites[args.suite]()


def _numeric_inputs(args):
    params = parse_values(args.params, args.rational)
    initial = parse_values(args.initial, args.rational)
    InputValidator(args.system).require(params, initial, (args.t0, args.t1))
    config = NumericConfig().with_tolerance(args.tol) if args.tol else NumericConfig()
    return params, [complex(v) for v in initial], config


def _integrate(args) -> List[CheckRecord]:
    params, initial, config = _numeric_inputs(args)
    started = time.perf_counter()
    try:
        trajectory = integrate(args.system, params, initial, args.t0, args.t1, config)
    except (PoleError, StepUnderflow) as e:
        return [verdict(f"{args.system} integration to t={args.t1}", False,
                        witness=f"{type(e).__name__} at t={e.t}: {e}", started=started)]
    logger.info(f"Final state: {', '.join(format_complex(z) for z in trajectory.final)}")
    if args.csv:
        export_csv(trajectory, args.csv)
    return [recorded(f"{args.system} state at t={args.t1}", complex_pairs(trajectory.final),
                     started=started, accepted=trajectory.accepted, rejected=trajectory.rejected)]


def _commute(args) -> List[CheckRecord]:
    params, initial, config = _numeric_inputs(args)
    started = time.perf_counter()
    try:
        return [symmetry_commute_check(args.system, args.map, params, initial, args.t0, args.t1,
                                       config)]
    except (PoleError, StepUnderflow) as e:
        return [verdict(f"{args.system} {args.map} commutes with the flow", False,
                        witness=f"{type(e).__name__} at t={e.t}: {e}", started=started)]


def _system_arg(value: str) -> str:
    try:
        return resolve_system(value)
    except UsageError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="Log at DEBUG level.")
    common.add_argument("--out", help="Write the JSON report here instead of stdout.")

    parser = argparse.ArgumentParser(prog="lab.py", description=__doc__.strip().splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", parents=[common],
                                 help="Run exact verification suites.")
    verify.add_argument("suite", choices=["systems", "relations", "symmetry", "translations",
                                          "charts", "confluence", "solutions", "integrals",
                                          "numeric", "all"])
    verify.add_argument("--system", type=_system_arg, default="D6",
                        help=f"One of {', '.join(SYSTEM_ALIASES)} (default d6).")
    verify.add_argument("--map", help="Restrict 'symmetry' to one roster map.")
    verify.add_argument("--which", choices=CONFLUENCE_CHECKS, default="d6-b5")
    verify.add_argument("--id", help="Restrict 'solutions' to one closed-form solution.")
    verify.add_argument("--phase", action="store_true",
                        help="For 'translations', compose the full maps, not only their "
                             "parameter action.")

    for name, help_text in (("integrate", "Integrate a flow numerically."),
                            ("commute", "Compare map-then-flow with flow-then-map.")):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--system", type=_system_arg, required=True)
        sub.add_argument("--params", required=True, help="JSON array of numbers or [re, im].")
        sub.add_argument("--initial", required=True, help="JSON array of numbers or [re, im].")
        sub.add_argument("--t0", type=float, required=True)
        sub.add_argument("--t1", type=float, required=True)
        sub.add_argument("--tol", type=float, help="Relative tolerance (default 1e-10).")
        sub.add_argument("--rational", action="store_true",
                         help="Read values as exact rationals such as \"1/4\".")
        if name == "integrate":
            sub.add_argument("--csv", help="Write the trajectory as CSV.")
        else:
            sub.add_argument("--map", required=True)
    return parser


def _command_echo(argv: List[str]) -> str:
    return " ".join(["lab.py"] + argv)


def run(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    if args.command == "integrate" and args.out and args.out.lower().endswith(".csv"):
        args.csv, args.out = args.out, None
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
                        stream=sys.stderr)

    system = getattr(args, "system", None)
    if args.command == "verify" and args.suite in ("confluence", "solutions", "integrals",
                                                   "numeric", "all"):
        system = None
    report = Report(_command_echo(argv), system)
    if system:
        logger.info(f"{system}: {SYSTEM_TITLES[system]}")

    handlers = {"verify": _verify, "integrate": _integrate, "commute": _commute}
    try:
        report.extend(handlers[args.command](args))
    except UsageError as e:
        logger.error(f"Usage error: {e}")
        return EXIT_USAGE
    except VerificationFailure as e:
        logger.error(f"Verification failed: {e}")
        return EXIT_FAIL
    except LabError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_INTERNAL
    except Exception:
        logger.exception("Internal error")
        return EXIT_INTERNAL

    text = report.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text + "\n")
        logger.info(f"Report written to {args.out}")
    else:
        print(text)

    frame = report.to_frame()
    if not frame.empty:
        frame["seconds"] = frame["seconds"].map(format_seconds)
        print(frame.to_string(index=False), file=sys.stderr)
    print(report.summary(), file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
