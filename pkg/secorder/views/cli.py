"""
Command-line front end: JSON ingestion, order queries, sections, witnesses,
function analysis, refutation reports and the benchmark harness.

Exit codes: 0 success or relation holds, 1 relation fails, 2 input or
resource error, 3 oracle disagreement in the benchmark.
"""

import functools
import logging
from dataclasses import dataclass
from typing import Optional

import click

from secorder import create_app
from secorder.errors import SecOrderError
from secorder.services.bench_service import parse_range, run_bench
from secorder.services.boolfn_service import (
    as_permutation, is_bijective, is_contractive, is_increasing,
    is_injective_on_units, is_strictly_increasing, render_permutation
)
from secorder.services.family_service import enumerate_sections, render_section
from secorder.services.order_service import equiv_check, fast_check, witness
from secorder.services.refutation_service import refute_arity
from secorder.services.serialization_service import (
    family_from_dict, pair_from_dict, table_from_dict, table_to_dict
)
from secorder.utils.file_utils import load_json, save_output
from secorder.views import formatters

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_ERROR = 2
EXIT_ALARM = 3


@dataclass
class RunConfig:
    """Options shared by every subcommand."""
    fmt: str = 'text'
    output: Optional[str] = None
    cap: Optional[int] = None
    max_width: Optional[int] = None

    def emit(self, text: str):
        if self.output:
            save_output(text, self.output)
        else:
            click.echo(text)


def reports_errors(command):
    """Turn toolkit errors into a diagnostic on stderr and exit code 2."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except SecOrderError as e:
            logger.debug("Command failed", exc_info=True)
            click.echo(f"error: {e}", err=True)
            raise click.exceptions.Exit(EXIT_ERROR)
    return wrapper


@click.group()
@click.option('--config', 'config_name', default=None,
              help='Configuration: default, development, testing or production.')
@click.option('--format', 'fmt', type=click.Choice(['json', 'text']), default=None,
              help='Output format (default OUTPUT_FORMAT).')
@click.option('--output', type=click.Path(dir_okay=False), default=None,
              help='Write the result to this file instead of standard output.')
@click.option('--cap-product', type=click.IntRange(min=1), default=None,
              help='Largest product of component sizes the section enumeration may visit.')
@click.option('--max-width', type=click.IntRange(min=1), default=None,
              help='Widest truth-table sweep allowed.')
@click.pass_context
@reports_errors
def cli(ctx, config_name, fmt, output, cap_product, max_width):
    """Unordered sections, the section preorder and contractive boolean functions."""
    app = create_app(config_name)
    ctx.obj = RunConfig(
        fmt=fmt or app.config['OUTPUT_FORMAT'],
        output=output,
        cap=cap_product,
        max_width=max_width,
    )


@cli.command()
@click.argument('pair_file', type=click.Path())
@click.pass_obj
@reports_errors
def check(run: RunConfig, pair_file):
    """Decide X ⊑ Y, Y ⊑ X and X ≡ Y for a pair file."""
    x, y = pair_from_dict(load_json(pair_file))
    x_below_y = fast_check(x, y, max_width=run.max_width)
    y_below_x = fast_check(y, x, max_width=run.max_width)
    sigma = equiv_check(x, y)
    result = {
        'x_below_y': x_below_y,
        'y_below_x': y_below_x,
        'equivalent': sigma is not None,
        'sigma': None if sigma is None else [j + 1 for j in sigma],
    }
    run.emit(formatters.render(result, run.fmt, formatters.check_text))
    raise click.exceptions.Exit(EXIT_OK if x_below_y else EXIT_FAILS)


@cli.command()
@click.argument('family_file', type=click.Path())
@click.pass_obj
@reports_errors
def sections(run: RunConfig, family_file):
    """List the unordered sections of a family."""
    family = family_from_dict(load_json(family_file))
    found = sorted(enumerate_sections(family, cap=run.cap))
    ground = family.ground
    result = {
        'sections': [[ground.label_of(a) for a in section] for section in found],
        'count': len(found),
    }
    logger.debug("Listed %s", ', '.join(render_section(s, ground) for s in found[:5]))
    run.emit(formatters.render(result, run.fmt, formatters.sections_text))


@cli.command('witness')
@click.argument('pair_file', type=click.Path())
@click.pass_obj
@reports_errors
def witness_command(run: RunConfig, pair_file):
    """Print an increasing contractive f with X ⊆ lift(f, Y), if X ⊑ Y."""
    x, y = pair_from_dict(load_json(pair_file))
    f = witness(x, y, max_width=run.max_width)
    if f is None:
        run.emit("no witness (X ⋢ Y)")
        raise click.exceptions.Exit(EXIT_FAILS)
    run.emit(formatters.render(table_to_dict(f), run.fmt, formatters.table_text))


@cli.command()
@click.argument('table_file', type=click.Path())
@click.pass_obj
@reports_errors
def analyze(run: RunConfig, table_file):
    """Report the predicates of a truth-table file."""
    f = table_from_dict(load_json(table_file))
    increasing = is_increasing(f, run.max_width)
    contractive = is_contractive(f, run.max_width)
    result = {
        'n': f.width,
        'increasing': increasing,
        'contractive': contractive,
        'strictly_increasing': is_strictly_increasing(f, run.max_width),
        'bijective': is_bijective(f, run.max_width),
        'injective_on_units': is_injective_on_units(f),
    }
    if increasing and contractive:
        tau = as_permutation(f, run.max_width)
        result['permutation'] = None if tau is None else render_permutation(tau)
    run.emit(formatters.render(result, run.fmt, formatters.analysis_text))


@cli.command()
@click.argument('m', type=int)
@click.option('--n', 'n_override', type=int, default=None,
              help='Word width (default 2^(m+1) + 4).')
@click.pass_obj
@reports_errors
def refute(run: RunConfig, m, n_override):
    """Check the counterexample against every arity-m cell placement."""
    report = refute_arity(m, n_override=n_override, max_width=run.max_width)
    run.emit(formatters.render(report.to_dict(), run.fmt, formatters.refutation_text))
    raise click.exceptions.Exit(EXIT_OK if report.is_valid else EXIT_FAILS)


@cli.command()
@click.option('--n', 'n_values', default='3', help="Arity: value, 'a-b' or comma list.")
@click.option('--c', 'c_values', default='3', help="Ground size: value, 'a-b' or comma list.")
@click.option('--trials', type=click.IntRange(min=0), default=100, help='Random pairs per setting.')
@click.option('--seed', type=int, default=None, help='Random seed (default BENCH_SEED).')
@click.pass_obj
@reports_errors
def bench(run: RunConfig, n_values, c_values, trials, seed):
    """Time fast_check against naive_check on seeded random pairs."""
    report = run_bench(parse_range(n_values), parse_range(c_values), trials,
                       seed=seed, cap=run.cap, max_width=run.max_width)
    run.emit(formatters.render(report.to_dict(), run.fmt, formatters.bench_text))
    if report.has_disagreement:
        click.echo("error: fast_check and naive_check disagree", err=True)
        raise click.exceptions.Exit(EXIT_ALARM)
