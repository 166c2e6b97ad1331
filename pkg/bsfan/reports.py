"""
Report generation: JSON codecs and display grids for tables, functionals
and decompositions
"""

import json
import logging
import math
from fractions import Fraction
from typing import Dict, List, Optional

import pandas as pd
from sympy import Poly

from .decompose import ConeMembership, Decomposition, DecompositionPart
from .errors import BSFanError, IncompleteTable, InvalidTable
from .exact import format_rational, poly_coeffs, poly_from_coeffs, to_fraction
from .pairing import Functional
from .tables import BettiTable, CohomologyTable, DegreeSequence, Diagnostics, RootSequence
from .settings import settings_manager

logger = logging.getLogger(__name__)

RENDER_MODES = ('json', 'display', 'text')


def _bound(value):
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


# Keys naming the two indices of a cell, per table kind
BETTI_KEYS = ('col', 'deg')
COHOMOLOGY_KEYS = ('row', 'twist')


def _cell_keys(orientation: str):
    return BETTI_KEYS if orientation == 'betti' else COHOMOLOGY_KEYS


def _cells(mapping: Dict, keys) -> List[Dict]:
    first, second = keys
    return [{first: a, second: b, 'value': format_rational(value)}
            for (a, b), value in sorted(mapping.items())]


def encode_betti(b: BettiTable) -> Dict:
    return {'n': b.n, 'entries': _cells(b.entries, BETTI_KEYS)}


def encode_cohomology(c: CohomologyTable) -> Dict:
    return {
        'm': c.m,
        'window': list(c.window),
        'values': _cells(c.values, COHOMOLOGY_KEYS),
        'tail_high': [format_rational(x) for x in poly_coeffs(c.tail_high)],
        'tail_low': [format_rational(x) for x in poly_coeffs(c.tail_low)],
        'complete': c.complete,
    }


def encode_functional(fn: Functional) -> Dict:
    return {
        'orientation': fn.orientation,
        'window': list(fn.window),
        'columns': fn.columns,
        'coefficients': _cells(fn.coefficients, _cell_keys(fn.orientation)),
    }


def encode_part(part: DecompositionPart) -> Dict:
    return {
        'coeff': format_rational(part.coefficient),
        'skeleton': part.skeleton.as_list(),
        'zeroed': [list(cell) for cell in part.zeroed],
    }


def encode_decomposition(dec: Decomposition) -> Dict:
    return {
        'kind': dec.kind,
        'parts': [encode_part(part) for part in dec.parts],
        'residual_zero': dec.residual is None or dec.residual.is_zero,
    }


def encode(obj):
    """Turn any result into JSON-ready data; rationals become "p/q" strings"""
    if isinstance(obj, BettiTable):
        return encode_betti(obj)
    if isinstance(obj, CohomologyTable):
        return encode_cohomology(obj)
    if isinstance(obj, Functional):
        return encode_functional(obj)
    if isinstance(obj, Decomposition):
        return encode_decomposition(obj)
    if isinstance(obj, ConeMembership):
        data = {'in_cone': obj.in_cone, 'evidence': encode(obj.evidence)}
        if obj.decomposition is not None:
            data['decomposition'] = encode_decomposition(obj.decomposition)
        return data
    if isinstance(obj, Diagnostics):
        return obj.as_dict()
    if isinstance(obj, (DegreeSequence, RootSequence)):
        return obj.as_list()
    if isinstance(obj, Poly):
        return [format_rational(x) for x in poly_coeffs(obj)]
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, float):
        return _bound(obj)
    if hasattr(obj, 'as_dict'):
        return encode(obj.as_dict())
    if isinstance(obj, dict):
        return {str(key): encode(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(value) for value in obj]
    return obj


def _cell_map(cells: List[Dict], keys) -> Dict:
    first, second = keys
    return {(int(cell[first]), int(cell[second])): to_fraction(cell['value']) for cell in cells}


def parse_betti(data: Dict) -> BettiTable:
    """Read {"n", "entries": [{"col", "deg", "value"}, ...]} or the shorthand {"n", "rows": {"l": [v_0, v_1, ...]}}"""
    if 'entries' in data:
        return BettiTable(int(data['n']), _cell_map(data['entries'], BETTI_KEYS))
    if 'rows' in data:
        return BettiTable.from_display(int(data['n']), {int(row): values for row, values in data['rows'].items()})
    raise InvalidTable("a Betti table needs 'entries' or 'rows'")


def parse_cohomology(data: Dict) -> CohomologyTable:
    return CohomologyTable(
        int(data['m']),
        tuple(data['window']),
        _cell_map(data.get('values', []), COHOMOLOGY_KEYS),
        poly_from_coeffs(data.get('tail_high', [])),
        poly_from_coeffs(data.get('tail_low', [])),
        bool(data.get('complete', True)),
    )


def parse_functional(data: Dict) -> Functional:
    orientation = data['orientation']
    return Functional(orientation, _cell_map(data.get('coefficients', []), _cell_keys(orientation)),
                      tuple(data['window']), int(data['columns']))


def parse(data):
    """Dispatch on the schema keys; accepts decoded JSON or its text"""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except ValueError as e:
            raise InvalidTable(f"input is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise InvalidTable("expected a JSON object")
    try:
        if 'orientation' in data:
            return parse_functional(data)
        if 'm' in data:
            return parse_cohomology(data)
        if 'n' in data:
            return parse_betti(data)
    except BSFanError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidTable(f"malformed input: {e}") from e
    raise InvalidTable("input is neither a Betti table, a cohomology table nor a functional")


class ReportGenerator:
    """Render results as display grids or JSON"""

    def __init__(self, zero_symbol: Optional[str] = None, unknown_symbol: Optional[str] = None,
                 json_indent: Optional[int] = None):
        display = settings_manager.display_settings
        self.zero_symbol = display.zero_symbol if zero_symbol is None else zero_symbol
        self.unknown_symbol = display.unknown_symbol if unknown_symbol is None else unknown_symbol
        self.json_indent = settings_manager.output_settings.json_indent if json_indent is None else json_indent
        self.report_types = {
            'betti': self.generate_betti_grid,
            'cohomology': self.generate_cohomology_grid,
            'functional': self.generate_functional_grid,
            'decomposition': self.generate_decomposition_report,
            'membership': self.generate_membership_report,
            'summary': self.generate_summary,
        }

    def generate_report(self, report_type: str, obj) -> str:
        """Generate a report of the specified type"""
        if report_type not in self.report_types:
            raise ValueError(f"Unknown report type: {report_type}")
        return self.report_types[report_type](obj)

    def report_type_for(self, obj) -> str:
        if isinstance(obj, BettiTable):
            return 'betti'
        if isinstance(obj, CohomologyTable):
            return 'cohomology'
        if isinstance(obj, Functional):
            return 'functional'
        if isinstance(obj, Decomposition):
            return 'decomposition'
        if isinstance(obj, ConeMembership):
            return 'membership'
        return 'summary'

    def _format(self, value) -> str:
        if value is None:
            return self.unknown_symbol
        return self.zero_symbol if value == 0 else format_rational(value)

    def _grid(self, rows: List[int], columns: List[int], lookup) -> str:
        data = [[self._format(lookup(row, column)) for column in columns] for row in rows]
        return pd.DataFrame(data, index=rows, columns=columns).to_string()

    def generate_betti_grid(self, b: BettiTable) -> str:
        """beta[i, i + l] at row l, column i"""
        span = b.display_rows()
        if span is None:
            return "(zero table)"
        columns = list(range(max(b.columns()) + 1))
        return self._grid(list(range(span[0], span[1] + 1)), columns,
                          lambda row, i: b.value(i, i + row))

    def generate_cohomology_grid(self, c: CohomologyTable) -> str:
        """gamma[i, D - i] at row i (row m on top), display column D"""
        def lookup(row, column):
            try:
                return c.display_value(row, column)
            except IncompleteTable:
                return None

        return self._grid(list(range(c.m, -1, -1)), list(range(c.lo, c.hi + 1)), lookup)

    def generate_functional_grid(self, fn: Functional) -> str:
        lo, hi = fn.window
        if fn.orientation == 'betti':
            return self._grid(list(range(lo, hi + 1)), list(range(fn.columns + 1)),
                              lambda row, i: fn.value(i, i + row))
        return self._grid(list(range(fn.columns, -1, -1)), list(range(lo, hi + fn.columns + 1)),
                          lambda row, column: fn.value(row, column - row))

    def generate_decomposition_report(self, dec: Decomposition) -> str:
        if not dec.parts:
            return "empty decomposition (zero table)"
        lines = [f"{dec.kind} decomposition into {len(dec.parts)} part(s):"]
        for step, part in enumerate(dec.parts, start=1):
            zeroed = ", ".join(f"({a},{b})" for a, b in part.zeroed) or "none"
            lines.append(f"  {step}. {format_rational(part.coefficient)} x {part.skeleton.as_list()}"
                         f"   zeroed: {zeroed}")
        return "\n".join(lines)

    def generate_membership_report(self, membership: ConeMembership) -> str:
        if membership.in_cone:
            return "in cone\n" + self.generate_decomposition_report(membership.decomposition)
        message = membership.evidence.get('message', 'no certificate')
        return f"not in cone: {message}"

    def generate_summary(self, obj) -> str:
        data = encode(obj)
        if not isinstance(data, dict):
            return str(data)
        return "\n".join(f"{key}: {value}" for key, value in data.items())

    def to_json(self, obj) -> str:
        return json.dumps(encode(obj), indent=self.json_indent)


def render(obj, mode: str = 'display', generator: Optional[ReportGenerator] = None) -> str:
    """Render a table, functional or result; mode is 'json' or 'display' ('text' is an alias)"""
    if mode not in RENDER_MODES:
        raise ValueError(f"Unknown render mode: {mode}")
    generator = generator or ReportGenerator()
    if mode == 'json':
        return generator.to_json(obj)
    return generator.generate_report(generator.report_type_for(obj), obj)
