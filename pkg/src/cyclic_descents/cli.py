"""
Command-line interface

Subcommands: enumerate, ppat, char, verify.
Exit codes: 0 success, 1 failed identity, 2 usage or configuration error,
3 domain precondition failure.
"""

import csv
import json
import logging
import sys
from typing import Dict, Iterator, List, Optional, Tuple

import click

from .cache import ReportCache
from .config import (
    DEFAULT_N_MAX,
    LOG_LEVELS,
    VERSION,
    CliConfig,
    EnumerationSet,
    OutputFormat,
    env_log_level,
)
from .counting import chi
from .errors import (
    ConfigError,
    InvalidCompositionError,
    InvalidWordError,
    NotInNLambdaError,
    UnknownIdentityError,
)
from .necklace import Word, enumerate_N_lambda, pattern, ppat, require_N_lambda
from .perm_core import (
    Composition,
    cycle_to_one_line,
    descent_set,
    descents_outside,
    enumerate_cyclic_lambda_unimodal,
    enumerate_lambda_unimodal,
)
from .report import encode_value, render_table
from .tableaux import Partition, character_table, mn_character, partitions, rho_multiplicities
from .verify import IdentityName, verify_suite

logger = logging.getLogger(__name__)

EXIT_FAILED = 1
EXIT_DOMAIN = 3


def _composition_option(ctx, param, value: Optional[str]) -> Optional[Composition]:
    if value is None:
        return None
    try:
        return Composition.parse(value)
    except InvalidCompositionError as e:
        raise click.BadParameter(str(e)) from e


def _partition_option(ctx, param, value: Optional[str]) -> Optional[Partition]:
    if value is None:
        return None
    try:
        return Partition.parse(value)
    except InvalidCompositionError as e:
        raise click.BadParameter(str(e)) from e


def _config(command: str, **flags) -> CliConfig:
    try:
        return CliConfig.from_env(command, **flags)
    except ConfigError as e:
        raise click.UsageError(str(e)) from e


def _format_choice(*formats: OutputFormat) -> click.Choice:
    return click.Choice([f.value for f in formats])


@click.group()
@click.version_option(version=VERSION, prog_name="cyclic-descents")
@click.option('--log-level', type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None,
              help="Logging level on stderr (default: CYCLIC_DESCENTS_LOG_LEVEL or WARNING).")
def cli(log_level: Optional[str]) -> None:
    """
    Cyclic permutations with unimodal descent sets, necklaces and characters.

    \b
    Quick start:
      python app.py enumerate --lambda 3,6 --set cyclic
      python app.py ppat --lambda 3,6 --word 321132202
      python app.py char --chi --n 4
      python app.py verify --all --n-max 6
    """
    try:
        level = (log_level or env_log_level()).upper()
    except ConfigError as e:
        raise click.UsageError(str(e)) from e
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s", force=True)


def _permutation_rows(lam: Composition, cyclic: bool, m: Optional[int]) -> Iterator[Dict[str, object]]:
    source = enumerate_cyclic_lambda_unimodal(lam) if cyclic else enumerate_lambda_unimodal(lam)
    index = 0
    for p in source:
        D = descent_set(p)
        outside = descents_outside(D, lam)
        if m is not None and outside != m:
            continue
        index += 1
        yield {'index': index, 'object': p.to_text(), 'descent_set': D.to_text(), 'outside': outside}


def _necklace_rows(lam: Composition, m: Optional[int]) -> Iterator[Dict[str, object]]:
    for index, member in enumerate(enumerate_N_lambda(lam, m), start=1):
        image = ppat(member)
        row = {'index': index, 'object': member.word.to_text(), 'descent_set': descent_set(image).to_text()}
        row.update({k: v for k, v in member.to_dict().items() if k in ('primitive', 'o')})
        row['image'] = image.to_text()
        yield row


def _json_row(row: Dict[str, object], config: CliConfig) -> str:
    data = dict(row)
    if config.enumeration_set is EnumerationSet.NECKLACE:
        data['lambda'] = config.lam.to_text()
    return json.dumps(data, ensure_ascii=False)


@cli.command('enumerate')
@click.option('--lambda', 'lam', required=True, callback=_composition_option,
              help="Composition as a comma list, e.g. 3,6.")
@click.option('--set', 'set_name', type=click.Choice([s.value for s in EnumerationSet]), default='cyclic',
              show_default=True, help="cyclic: C(lambda); necklace: N_lambda; unimodal: U(lambda).")
@click.option('--m', type=int, default=None,
              help="Necklaces: odd-letter count. Permutations: descents outside S(lambda).")
@click.option('--format', 'output_format', type=_format_choice(*OutputFormat), default='table', show_default=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None, help="Write to a file instead of stdout.")
def enumerate_command(lam: Composition, set_name: str, m: Optional[int], output_format: str, out: Optional[str]):
    """Stream C(lambda), U(lambda) or N_lambda^(m) in a deterministic order."""
    config = _config('enumerate', lam=lam, m=m, output_format=output_format,
                     enumeration_set=set_name, out=out)

    if config.enumeration_set is EnumerationSet.NECKLACE:
        rows = _necklace_rows(lam, m)
        fieldnames = ['index', 'object', 'descent_set', 'primitive', 'o', 'image']
    else:
        rows = _permutation_rows(lam, config.enumeration_set is EnumerationSet.CYCLIC, m)
        fieldnames = ['index', 'object', 'descent_set', 'outside']

    written = 0
    with click.open_file(config.out or '-', 'w') as stream:
        writer = None
        if config.output_format is OutputFormat.CSV:
            writer = csv.DictWriter(stream, fieldnames=fieldnames, lineterminator='\n')
            writer.writeheader()
        for row in rows:
            if writer is not None:
                writer.writerow(row)
            elif config.output_format is OutputFormat.JSON:
                stream.write(_json_row(row, config) + '\n')
            else:
                stream.write(f"{row['object']}\n")
            written += 1
    logger.info("enumerate %s lambda=%s: %d objects", set_name, lam.to_text(), written)


@cli.command('ppat')
@click.option('--lambda', 'lam', required=True, callback=_composition_option, help="Composition, e.g. 3,6.")
@click.option('--word', required=True, help="Representative word on {0..2k-1}, e.g. 321132202.")
@click.option('--format', 'output_format', type=_format_choice(OutputFormat.TABLE, OutputFormat.JSON),
              default='table', show_default=True)
@click.pass_context
def ppat_command(ctx: click.Context, lam: Composition, word: str, output_format: str):
    """Print the pattern of WORD and its image under PPat_lambda."""
    try:
        s = Word.parse(word, lam.k)
        member = require_N_lambda(s, lam)
    except NotInNLambdaError as e:
        click.echo(f"✗ {e} (failed clause: {e.clause})", err=True)
        ctx.exit(EXIT_DOMAIN)
    except InvalidWordError as e:
        click.echo(f"✗ {e} (failed clause: alphabet)", err=True)
        ctx.exit(EXIT_DOMAIN)

    pi = pattern(s)
    image = cycle_to_one_line(pi.entries)
    logger.debug("ppat %s -> %s (class %s)", s.to_text(), image.to_text(), member.word.to_text())
    if output_format == OutputFormat.JSON.value:
        click.echo(json.dumps({
            'lambda': lam.to_text(),
            'word': s.to_text(),
            'pattern': pi.to_text(),
            'image': image.to_text(),
        }))
    else:
        click.echo(f"pattern: {pi.to_text()}")
        click.echo(f"image:   {image.to_text()}")


def _echo_pairs(pairs: List[Tuple[str, int]], output_format: str):
    if output_format == OutputFormat.JSON.value:
        click.echo(json.dumps(encode_value(dict(pairs))))
        return
    width = max(len(label) for label, _ in pairs)
    for label, value in pairs:
        click.echo(f"{label.ljust(width)}  {value}")


def _echo_table(table: Dict[Partition, Dict[Partition, int]], output_format: str):
    if output_format == OutputFormat.JSON.value:
        data = {nu.to_text(): {lam.to_text(): value for lam, value in row.items()} for nu, row in table.items()}
        click.echo(json.dumps(encode_value(data)))
        return
    columns = list(next(iter(table.values())))
    header = ["shape\\class"] + [lam.to_text() for lam in columns]
    cells = [[nu.to_text()] + [str(row[lam]) for lam in columns] for nu, row in table.items()]
    widths = [max(len(line[j]) for line in [header] + cells) for j in range(len(header))]
    for line in [header] + cells:
        click.echo("  ".join(cell.rjust(w) if j else cell.ljust(w) for j, (cell, w) in enumerate(zip(line, widths))))


@cli.command('char')
@click.option('--chi', 'mode', flag_value='chi', help="chi_lambda from the closed form, every class of n.")
@click.option('--irreducible', 'mode', flag_value='irreducible', help="Irreducible characters chi^nu.")
@click.option('--mult', 'mode', flag_value='mult', help="Multiplicities m_nu of rho.")
@click.option('--n', type=int, default=None)
@click.option('--shape', callback=_partition_option, default=None, help="Partition nu, e.g. 2,1.")
@click.option('--class', 'class_type', callback=_partition_option, default=None, help="Cycle type, e.g. 1,1,1.")
@click.option('--format', 'output_format', type=_format_choice(OutputFormat.TABLE, OutputFormat.JSON),
              default='table', show_default=True)
def char_command(mode: Optional[str], n: Optional[int], shape: Optional[Partition],
                 class_type: Optional[Partition], output_format: str):
    """Character values: chi_lambda, irreducible characters, or rho multiplicities."""
    if mode is None:
        raise click.UsageError("choose one of --chi, --irreducible, --mult")
    _config('char', n=n, output_format=output_format)

    if mode == 'irreducible':
        if shape is not None and class_type is not None:
            if shape.n != class_type.n:
                raise click.BadParameter(
                    f"shape {shape.to_text()} and class {class_type.to_text()} have different sizes",
                    param_hint="'--class'")
            value = mn_character(shape, class_type)
            if output_format == OutputFormat.JSON.value:
                click.echo(json.dumps(encode_value(
                    {'shape': shape.to_text(), 'class': class_type.to_text(), 'value': value})))
            else:
                click.echo(str(value))
        elif shape is not None:
            _echo_table({shape: {lam: mn_character(shape, lam) for lam in partitions(shape.n)}}, output_format)
        elif n is not None:
            _echo_table(character_table(n), output_format)
        else:
            raise click.UsageError("--irreducible needs --shape and --class, --shape, or --n")
        return

    if n is None:
        raise click.UsageError(f"--{mode} needs --n")
    if mode == 'chi':
        pairs = [(lam.to_text(), chi(Composition(lam.parts))) for lam in partitions(n)]
    else:
        pairs = list(rho_multiplicities(n).to_dict().items())
    _echo_pairs(pairs, output_format)


@cli.command('verify')
@click.option('--identity', 'identities', multiple=True, type=click.Choice([i.value for i in IdentityName]),
              help="Identity to check (repeatable).")
@click.option('--all', 'run_all', is_flag=True, help="Check every identity.")
@click.option('--n-max', type=int, default=None, help=f"Largest n visited (default {DEFAULT_N_MAX}).")
@click.option('--lambda', 'lam', callback=_composition_option, default=None,
              help="Restrict to one composition (and to its n).")
@click.option('--format', 'output_format', type=_format_choice(OutputFormat.TABLE, OutputFormat.JSON),
              default='table', show_default=True, help="table, or json for one JSON report per line.")
@click.option('--out', type=click.Path(dir_okay=False), default=None, help="Also write the JSONL report here.")
@click.option('--cache-dir', default=None, help="Report cache directory (default: CYCLIC_DESCENTS_CACHE_DIR).")
@click.option('--no-cache', is_flag=True, help="Neither read nor write cached reports.")
@click.option('--jobs', type=int, default=None, help="Worker processes (default: CYCLIC_DESCENTS_JOBS or 1).")
@click.option('--progress', is_flag=True, help="Show a progress bar on stderr.")
@click.option('--no-timings', is_flag=True, help="Omit 'ms' so output is byte-for-byte reproducible.")
@click.pass_context
def verify_command(ctx: click.Context, identities: Tuple[str, ...], run_all: bool, n_max: Optional[int],
                   lam: Optional[Composition], output_format: str, out: Optional[str], cache_dir: Optional[str],
                   no_cache: bool, jobs: Optional[int], progress: bool, no_timings: bool):
    """Run the identity checks; exit 0 iff every check passes."""
    if not identities and not run_all:
        raise click.UsageError("choose --identity NAME (repeatable) or --all")
    config = _config('verify', lam=lam, n_max=n_max, output_format=output_format, out=out,
                     cache_dir=cache_dir, jobs=jobs)
    selection = [i.value for i in IdentityName] if run_all else list(identities)
    cache = None if no_cache else ReportCache(config.cache_dir, VERSION)

    try:
        reports = verify_suite(config.n_max, selection, jobs=config.jobs, cache=cache,
                               progress=progress, lam=config.lam)
    except UnknownIdentityError as e:
        raise click.UsageError(str(e)) from e

    include_timing = not no_timings
    if config.output_format is OutputFormat.JSON:
        for report in reports:
            click.echo(report.to_json_line(include_timing))
    else:
        click.echo(render_table(reports))

    if config.out:
        with click.open_file(config.out, 'w') as stream:
            for report in reports:
                stream.write(report.to_json_line(include_timing) + '\n')

    failed = [r for r in reports if not r.passed]
    if failed and config.output_format is OutputFormat.JSON:
        click.echo(f"✗ {len(failed)} of {len(reports)} checks failed", err=True)
    if failed:
        ctx.exit(EXIT_FAILED)
