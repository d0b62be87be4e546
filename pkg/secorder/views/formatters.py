"""
Text rendering of command results.

Every command builds a JSON-ready dict; these helpers turn the same dict
into the text format.
"""

from typing import Any, Dict, List

from secorder.utils.file_utils import dump_json


def _flag(value: bool) -> str:
    return 'true' if value else 'false'


def render(document: Dict[str, Any], fmt: str, text_renderer) -> str:
    """Dispatch on the output format."""
    if fmt == 'json':
        return dump_json(document)
    return text_renderer(document)


def check_text(result: Dict[str, Any]) -> str:
    line = (f"X ⊑ Y: {_flag(result['x_below_y'])}, "
            f"Y ⊑ X: {_flag(result['y_below_x'])}, "
            f"X ≡ Y: {_flag(result['equivalent'])}")
    if result['sigma'] is not None:
        line += f", σ = ({','.join(str(i) for i in result['sigma'])})"
    return line


def sections_text(result: Dict[str, Any]) -> str:
    lines = ['[' + ','.join(section) + ']' for section in result['sections']]
    lines.append(f"count: {result['count']}")
    return '\n'.join(lines)


def table_text(result: Dict[str, Any]) -> str:
    width = result['n']
    inputs = (format(u, f'0{width}b') for u in range(len(result['outputs'])))
    return '\n'.join(f"{u} -> {v}" for u, v in zip(inputs, result['outputs']))


def analysis_text(result: Dict[str, Any]) -> str:
    lines = [f"n: {result['n']}"]
    for key in ('increasing', 'contractive', 'strictly_increasing', 'bijective', 'injective_on_units'):
        lines.append(f"{key.replace('_', ' ')}: {_flag(result[key])}")
    if 'permutation' in result:
        lines.append(f"permutation: {result['permutation'] or 'none'}")
    return '\n'.join(lines)


def refutation_text(result: Dict[str, Any]) -> str:
    lines = [
        f"m: {result['m']}, n: {result['n']}",
        f"pairs checked: {result['pairs_checked']}",
        f"placements checked: {result['checks']}",
        f"failures: {len(result['failures'])}",
    ]
    lines.extend(f"  no differentiating assignment for {key}" for key in result['failures'])
    for key in ('increasing', 'contractive', 'strictly_increasing', 'non_invertible'):
        lines.append(f"{key.replace('_', ' ')}: {_flag(result[key])}")
    lines.append(f"valid: {_flag(result['valid'])}")
    return '\n'.join(lines)


def bench_text(result: Dict[str, Any]) -> str:
    header = f"{'n':>3} {'c':>6} {'trials':>6} {'fast_s':>10} {'naive_s':>10} {'agree':>9} status"
    lines: List[str] = [f"seed: {result['seed']}", header]
    for row in result['rows']:
        agree = f"{row['agreements']}/{row['compared']}"
        lines.append(f"{row['n']:>3} {row['c']:>6} {row['trials']:>6} "
                     f"{row['fast_seconds']:>10.4f} {row['naive_seconds']:>10.4f} {agree:>9} {row['status']}")
    return '\n'.join(lines)
