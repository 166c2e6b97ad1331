"""
Command line front end
Every subcommand is a thin adapter over one library call; JSON goes to
stdout, status lines and error reports go to stderr.

Usage:
    python bsfan_cli.py pure --degrees 0,2,3,4,6,8 --n 5
    python bsfan_cli.py decompose betti sample:b11
    python bsfan_cli.py facet --degrees -1,0,2,3 --tau 1 --rows -4,2 --method both
"""

import argparse
import json
import logging
import re
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from . import __version__
from .bounds import multiplicity_bounds, slope_bounds, strand_bound, strand_check
from .decompose import decompose_betti, decompose_cohomology, verify_decomposition
from .errors import BSFanError, InvalidArgument, MomentsNonzero
from .exact import parse_rational
from .facets import (
    cohomology_facet,
    diagonal_check,
    facet_from_supernatural,
    lower_facet_equation,
    upper_facet_equation,
)
from .pairing import betti_functional, cohomology_functional, pair, pair_modified
from .pure import construction_generators, hk_pure_table, multiplicity, pure_summary
from .reports import ReportGenerator, encode, parse
from .samples import get_sample
from .settings import OUTPUT_MODES, settings_manager
from .supernatural import monad_table, rank_gcd_bound, rank_summary, supernatural_table
from .tables import (
    BettiTable,
    CohomologyTable,
    DegreeSequence,
    RootSequence,
    validate_betti,
    validate_cohomology,
)

logger = logging.getLogger(__name__)

# Options whose values may start with a minus sign ("--rows -5,2")
LIST_OPTIONS = ('--degrees', '--roots', '--rows', '--window', '--rank', '--cutoff', '--monad-a')
NEGATIVE_VALUE = re.compile(r'^-\d')


class ArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; 2 is reserved for NotInCone here"""

    def error(self, message):
        raise InvalidArgument(f"{self.prog}: {message}")


def attach_negative_values(argv: Sequence[str]) -> List[str]:
    """Rewrite "--rows -5,2" as "--rows=-5,2" so argparse does not read -5,2 as a flag"""
    result: List[str] = []
    tokens = list(argv)
    index = 0
    while index < len(tokens):
        token = tokens[index]
        if token in LIST_OPTIONS and index + 1 < len(tokens) and NEGATIVE_VALUE.match(tokens[index + 1]):
            result.append(f"{token}={tokens[index + 1]}")
            index += 2
            continue
        result.append(token)
        index += 1
    return result


def parse_window(text: Optional[str]) -> Optional[Tuple[int, int]]:
    if text is None:
        return None
    parts = [part for part in text.split(',') if part.strip()]
    if len(parts) != 2:
        raise InvalidArgument(f"expected 'lo,hi', got {text!r}")
    lo, hi = (int(part) for part in parts)
    if lo > hi:
        raise InvalidArgument(f"empty range {text!r}")
    return lo, hi


def load_table(source: str, stdin=None):
    """A file path, '-' for standard input, or 'sample:<name>'"""
    if source.startswith('sample:'):
        return get_sample(source.split(':', 1)[1])
    if source == '-':
        return parse((stdin or sys.stdin).read())
    with open(source, 'r') as f:
        return parse(f.read())


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='bsfan', description="Boij-Soederberg fan toolkit")
    parser.add_argument('--output', '-o', choices=OUTPUT_MODES, default=None,
                        help='json, text or both (default from settings)')
    parser.add_argument('--log-level', default=None, help='DEBUG, INFO, WARNING or ERROR')
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('pure', help='pure table of a degree sequence')
    p.add_argument('--degrees', required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--generators', action='store_true', help='also report the construction beta_0')

    p = sub.add_parser('supernatural', help='supernatural or linear-monad cohomology table')
    p.add_argument('--roots', required=True)
    p.add_argument('--rank', default=None)
    p.add_argument('--window', default=None)
    p.add_argument('--monad-a', type=int, default=None)

    p = sub.add_parser('rank-bounds', help='rank formulas for a root sequence')
    p.add_argument('--roots', required=True)

    p = sub.add_parser('decompose', help='greedy decomposition')
    p.add_argument('kind', choices=('betti', 'cohomology'))
    p.add_argument('input')
    p.add_argument('--strict-window', action='store_true', default=None)

    p = sub.add_parser('pair', help='pair a Betti table with a cohomology table')
    p.add_argument('betti')
    p.add_argument('cohomology')
    p.add_argument('--cutoff', type=int, default=None)
    p.add_argument('--tau', type=int, default=None)

    p = sub.add_parser('functional', help='coefficient table of the pairing')
    p.add_argument('input', nargs='?', help='cohomology table for --side betti')
    p.add_argument('--side', choices=('betti', 'cohomology'), default='betti')
    p.add_argument('--degrees', default=None)
    p.add_argument('--rows', default=None)
    p.add_argument('--window', default=None)
    p.add_argument('--n', type=int, default=None)
    p.add_argument('--cutoff', type=int, default=None)
    p.add_argument('--tau', type=int, default=None)

    p = sub.add_parser('facet', help='facet equation')
    p.add_argument('--side', choices=('betti', 'cohomology'), default='betti')
    p.add_argument('--degrees', default=None)
    p.add_argument('--tau', type=int, default=None)
    p.add_argument('--rows', default=None)
    p.add_argument('--method', choices=('chain', 'supernatural', 'both'), default=None)
    p.add_argument('--lower', action='store_true')
    p.add_argument('--descent', choices=('canonical', 'random'), default='canonical')
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--roots', default=None)
    p.add_argument('--index', type=int, default=None)
    p.add_argument('--window', default=None)

    p = sub.add_parser('bounds', help='multiplicity, strand and slope bounds')
    p.add_argument('kind', choices=('multiplicity', 'slope', 'strand'))
    p.add_argument('input')
    p.add_argument('--codim', type=int, default=None)
    p.add_argument('--normalized', action='store_true')
    p.add_argument('--p', type=int, default=None)
    p.add_argument('--c', type=int, default=None)

    p = sub.add_parser('validate', help='check a table for structural problems')
    p.add_argument('input')

    p = sub.add_parser('settings', help='show or change the saved defaults')
    p.add_argument('--set', dest='assignments', action='append', default=[], metavar='SECTION.KEY=VALUE',
                   help='e.g. output.default_output=json or computation.strict_window=true')
    return parser


def _require(value, name: str):
    if value is None:
        raise InvalidArgument(f"{name} is required here")
    return value


class TableCommandRunner:
    """Runs one subcommand and reports the outcome"""

    def __init__(self, stdout=None, stderr=None, stdin=None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.stdin = stdin
        self.report_generator = ReportGenerator()
        self.commands = {
            'pure': self.run_pure,
            'supernatural': self.run_supernatural,
            'rank-bounds': self.run_rank_bounds,
            'decompose': self.run_decompose,
            'pair': self.run_pair,
            'functional': self.run_functional,
            'facet': self.run_facet,
            'bounds': self.run_bounds,
            'validate': self.run_validate,
            'settings': self.run_settings,
        }

    def status(self, message: str):
        print(message, file=self.stderr)

    def _table(self, source: str, kind=None):
        table = load_table(source, self.stdin)
        if kind is not None and not isinstance(table, kind):
            raise InvalidArgument(f"{source} holds a {type(table).__name__}, expected a {kind.__name__}")
        return table

    def run_pure(self, args) -> Tuple[Dict, str]:
        degrees = DegreeSequence.parse(args.degrees)
        table = hk_pure_table(degrees, args.n)
        payload = pure_summary(degrees, args.n)
        if args.generators:
            payload['generators'] = construction_generators(degrees)
        payload['table'] = table
        return payload, self.report_generator.generate_betti_grid(table)

    def run_supernatural(self, args) -> Tuple[Dict, str]:
        roots = RootSequence.parse(args.roots)
        rank = rank_gcd_bound(roots) if args.rank is None else parse_rational(args.rank)
        window = parse_window(args.window)
        if args.monad_a is None:
            table = supernatural_table(roots, rank, window)
        else:
            table = monad_table(roots, rank, args.monad_a, window)
        return {'roots': roots, 'rank': rank, 'table': table}, \
            self.report_generator.generate_cohomology_grid(table)

    def run_rank_bounds(self, args) -> Tuple[Dict, str]:
        summary = rank_summary(RootSequence.parse(args.roots))
        return summary, self.report_generator.generate_summary(summary)

    def run_decompose(self, args) -> Tuple[Dict, str]:
        if args.kind == 'betti':
            table = self._table(args.input, BettiTable)
            decomposition = decompose_betti(table)
        else:
            table = self._table(args.input, CohomologyTable)
            strict = args.strict_window
            if strict is None:
                strict = settings_manager.computation_settings.strict_window
            decomposition = decompose_cohomology(table, strict_window=strict)
        payload = encode(decomposition)
        payload['verified'] = verify_decomposition(table, decomposition)
        return payload, self.report_generator.generate_decomposition_report(decomposition)

    def run_pair(self, args) -> Tuple[Dict, str]:
        b = self._table(args.betti, BettiTable)
        c = self._table(args.cohomology, CohomologyTable)
        if args.cutoff is None and args.tau is None:
            value = pair(b, c)
        else:
            value = pair_modified(b, c, _require(args.cutoff, '--cutoff'), _require(args.tau, '--tau'))
        payload = {'value': value, 'modified': args.tau is not None}
        return payload, f"pairing = {encode(value)}"

    def run_functional(self, args) -> Tuple[Dict, str]:
        if args.side == 'betti':
            c = self._table(_require(args.input, 'a cohomology table'), CohomologyTable)
            rows = parse_window(_require(args.rows, '--rows'))
            functional = betti_functional(c, args.cutoff, args.tau, rows, n=args.n)
        else:
            degrees = DegreeSequence.parse(_require(args.degrees, '--degrees'))
            functional = cohomology_functional(degrees, args.cutoff, args.tau, parse_window(args.window))
        return encode(functional), self.report_generator.generate_functional_grid(functional)

    def run_facet(self, args) -> Tuple[Dict, str]:
        if args.side == 'cohomology':
            roots = RootSequence.parse(_require(args.roots, '--roots'))
            functional = cohomology_facet(roots, _require(args.index, '--index'), parse_window(args.window))
            return encode(functional), self.report_generator.generate_functional_grid(functional)

        degrees = DegreeSequence.parse(_require(args.degrees, '--degrees'))
        tau = _require(args.tau, '--tau')
        rows = parse_window(_require(args.rows, '--rows'))
        computation = settings_manager.computation_settings
        method = args.method or computation.facet_method
        if args.lower:
            if method != 'chain':
                raise InvalidArgument("--lower is only available with --method chain")
            functional = lower_facet_equation(degrees, tau, rows, args.descent, args.seed)
        elif method == 'chain':
            functional = upper_facet_equation(degrees, tau, rows, args.descent, args.seed)
            if computation.facet_cross_check:
                facet_from_supernatural(degrees, tau, rows, check=True)
        else:
            functional = facet_from_supernatural(degrees, tau, rows, check=(method == 'both'))
            if method == 'both':
                self.status("✅ chain and monad constructions agree")
        payload = encode(functional)
        if not args.lower:
            payload['diagonal_check'] = diagonal_check(functional, degrees)
        return payload, self.report_generator.generate_functional_grid(functional)

    def run_bounds(self, args) -> Tuple[Dict, str]:
        if args.kind == 'slope':
            result = slope_bounds(self._table(args.input, CohomologyTable))
            payload = result.as_dict()
        elif args.kind == 'multiplicity':
            b = self._table(args.input, BettiTable)
            codim = _require(args.codim, '--codim')
            result = multiplicity_bounds(b, codim, args.normalized)
            payload = result.as_dict()
            try:
                payload['multiplicity'] = multiplicity(b, codim)
            except MomentsNonzero:
                self.status(f"⚠️  moments below order {codim} do not vanish; no exact multiplicity")
        else:
            b = self._table(args.input, BettiTable)
            p, c = _require(args.p, '--p'), _require(args.c, '--c')
            payload = {'bound': strand_bound(p, c), 'holds': strand_check(b, p, c)}
        return payload, self.report_generator.generate_summary(payload)

    def run_validate(self, args) -> Tuple[Dict, str]:
        table = self._table(args.input)
        if isinstance(table, BettiTable):
            diagnostics = validate_betti(table)
        elif isinstance(table, CohomologyTable):
            diagnostics = validate_cohomology(table)
        else:
            raise InvalidArgument("validate expects a Betti or cohomology table")
        return diagnostics.as_dict(), "\n".join(diagnostics.issues) or "no issues"

    def run_settings(self, args) -> Tuple[Dict, str]:
        updaters = {
            'display': settings_manager.update_display_settings,
            'output': settings_manager.update_output_settings,
            'computation': settings_manager.update_computation_settings,
            'app': settings_manager.update_app_settings,
        }
        for assignment in args.assignments:
            target, _, raw = assignment.partition('=')
            section, _, key = target.partition('.')
            if section not in updaters or not key or not raw:
                raise InvalidArgument(f"expected SECTION.KEY=VALUE with SECTION in {sorted(updaters)}, got {assignment!r}")
            current = getattr(settings_manager, f"{section}_settings")
            if not hasattr(current, key):
                raise InvalidArgument(f"unknown {section} setting {key!r}")
            try:
                value = json.loads(raw)
            except ValueError:
                value = raw
            if not updaters[section](**{key: value}):
                self.status(f"⚠️  could not save {settings_manager.settings_file}")
            logger.info("set %s.%s = %r", section, key, value)
        summary = settings_manager.get_settings_summary()
        return summary, self.report_generator.generate_summary(summary)

    def report_error(self, error: Exception, exit_code: int):
        report = {'error': type(error).__name__, 'message': str(error), 'exit_code': exit_code}
        evidence = getattr(error, 'evidence', None)
        if evidence:
            report['evidence'] = encode(evidence)
        self.status(f"❌ {type(error).__name__}: {error}")
        print(json.dumps(report), file=self.stderr)

    def emit(self, payload, text: str, mode: str):
        if mode in ('json', 'both'):
            print(self.report_generator.to_json(payload), file=self.stdout)
        if mode == 'text':
            print(text, file=self.stdout)
        elif mode == 'both':
            print(text, file=self.stderr)

    def run(self, argv: Sequence[str]) -> int:
        """Parse argv, run the subcommand, and return the exit code"""
        parser = build_parser()
        try:
            args = parser.parse_args(attach_negative_values(argv))
        except InvalidArgument as e:
            self.report_error(e, 1)
            return 1
        except SystemExit as e:
            return int(e.code or 0)

        level = (args.log_level or settings_manager.app_settings.log_level).upper()
        logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=self.stderr,
                            format='%(levelname)s %(name)s: %(message)s')
        mode = args.output or settings_manager.output_settings.default_output

        try:
            payload, text = self.commands[args.command](args)
        except BSFanError as e:
            self.report_error(e, e.exit_code)
            return e.exit_code
        except (OSError, ValueError) as e:
            self.report_error(e, 1)
            return 1

        self.emit(payload, text, mode)
        if args.command == 'validate' and not payload['valid']:
            self.status("❌ validation found issues")
            return 1
        self.status(f"✅ {args.command} finished")
        return 0


def run(argv: Sequence[str], stdout=None, stderr=None, stdin=None) -> int:
    return TableCommandRunner(stdout, stderr, stdin).run(argv)


def main():
    """Main entry point"""
    sys.exit(run(sys.argv[1:]))
