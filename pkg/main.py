"""
cork-forge command line

    cork-forge example u -m -3 | cork-forge invariants
    cork-forge example u -m 0 | cork-forge construct --n 3 --out fam/
    cork-forge certify fam/

Every command reading a handlebody takes a FILE argument or reads standard
input. Exit codes: 0 success, 1 validation failure or refused certificate,
2 usage error.
"""

import functools
import logging
import os
import sys
from typing import Any, Callable, Dict, Iterable, Optional, Sequence, Tuple

import click

from config import Config
from corkforge.algebra import Handlebody, homology, kernel_basis, validate
from corkforge.certify import (
    certify_family,
    certify_stein_nonstein,
    d3_family,
    homeo_report,
)
from corkforge.errors import CertificateRefused, CorkForgeError, SerializationError
from corkforge.legendrian import SteinStructureChoice, apply_choice, d3
from corkforge.modifications import ModificationLog, boundary_sum, tietze_certificate
from corkforge.pipeline import (
    SequencePlan,
    build_family,
    check_plan,
    example_u,
    extract_data,
    family_from_files,
    solve_plan,
    stein_nonstein_family,
)
from corkforge.utils import dumps, loads, read_bundle, read_json, write_bundle
from corkforge.utils.fuzz import make_rng, random_good_stein_b2one

logger = logging.getLogger('corkforge.cli')

VARIANTS = click.Choice(list(Config.SUPPORTED_VARIANTS))


def _read_handlebody(path: Optional[str]) -> Handlebody:
    if path is None or path == '-':
        data = loads(sys.stdin.read(), source='<stdin>')
    else:
        data = read_json(path)
    if not isinstance(data, dict):
        raise SerializationError("Handlebody JSON must be an object")
    return Handlebody.from_dict(data)


def _emit(ctx: click.Context, report: Dict[str, Any], text: Callable[[Dict[str, Any]], str]) -> None:
    if ctx.obj['json']:
        click.echo(dumps(report))
    else:
        click.echo(text(report))


def _fail(ctx: click.Context, report: Dict[str, Any], message: str) -> None:
    if ctx.obj['json']:
        click.echo(dumps(report))
    else:
        click.echo(message, err=True)
    ctx.exit(1)


def _run(func):
    """Map domain errors to exit code 1"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return func(*args, **kwargs)
        except CertificateRefused as e:
            logger.info(f"Refused: {e}")
            _fail(ctx, {'accepted': False, 'error': str(e), 'reasons': e.reasons}, f"refused: {e}")
        except CorkForgeError as e:
            logger.info(f"Failed: {e}")
            _fail(ctx, {'error': str(e)}, f"error: {e}")
    return wrapper


def _basis_options(func):
    func = click.option('--k0', default=None, help='Distinguished basis handle id')(func)
    func = click.option('--basis', multiple=True, help='Basis handle id (repeatable)')(func)
    return func


def _plan_for(data, n: int, variant: str, plan_path: Optional[str]) -> SequencePlan:
    if plan_path is None:
        return solve_plan(data, n, variant)
    supplied = SequencePlan.from_dict(read_json(plan_path))
    return check_plan(data, supplied.q, supplied.p, supplied.variant)


def _pi1_report(labelled_logs: Iterable[Tuple[str, ModificationLog]]) -> Dict[str, Any]:
    """Tietze certificate per member: every W-move adds a cancelling 1-/2-handle pair"""
    return {label: tietze_certificate(log).to_dict() for label, log in labelled_logs}


def _matrix_text(rows: Sequence[Sequence[Any]]) -> str:
    return '\n'.join('  ' + ' '.join(f"{str(x):>3}" for x in row) for row in rows) or '  (empty)'


@click.group(name='cork-forge')
@click.option('--json', 'as_json', is_flag=True, help='Emit JSON reports')
@click.option('--log-level', default=None, help='Override CORKFORGE_LOG_LEVEL')
@click.pass_context
def cli(ctx: click.Context, as_json: bool, log_level: Optional[str]):
    """Handle-calculus engine for cork-modified Stein handlebody families"""
    logging.basicConfig(level=(log_level or Config.LOG_LEVEL).upper(), format=Config.LOG_FORMAT,
                        stream=sys.stderr)
    ctx.ensure_object(dict)
    ctx.obj['json'] = as_json


@cli.command(name='validate')
@click.argument('file', required=False)
@click.pass_context
@_run
def validate_cmd(ctx, file):
    """Check the structural invariants of a handlebody"""
    report = validate(_read_handlebody(file)).to_dict()
    if not report['valid']:
        _fail(ctx, report, "invalid:\n" + '\n'.join(f"  - {v}" for v in report['violations']))
    _emit(ctx, report, lambda r: "valid")


@cli.command()
@click.argument('file', required=False)
@click.pass_context
@_run
def invariants(ctx, file):
    """Homology, intersection form, boundary homology, euler and signature"""
    profile = homology(_read_handlebody(file)).to_dict()

    def text(p):
        return '\n'.join([
            f"H1: {p['h1_invariant_factors'] or 'trivial'}",
            f"b2: {p['b2']}",
            "intersection form:",
            _matrix_text(p['intersection_matrix']),
            f"boundary H1 torsion: {p['boundary_h1_invariant_factors'] or 'none'}, "
            f"b1: {p['boundary_b1']}",
            f"euler: {p['euler']}, signature: {p['signature']}",
        ])
    _emit(ctx, profile, text)


@cli.command()
@click.argument('file', required=False)
@click.option('--n', 'n', type=int, default=Config.DEFAULT_FAMILY_SIZE, show_default=True)
@click.option('--variant', type=VARIANTS, default=Config.DEFAULT_VARIANT, show_default=True)
@click.option('--plan', 'plan_path', default=None, help='Check this plan instead of solving')
@_basis_options
@click.pass_context
@_run
def sequences(ctx, file, n, variant, plan_path, basis, k0):
    """Solve (or check) the q and p sequences"""
    h = _read_handlebody(file)
    data = extract_data(h, basis or None, k0)
    plan = _plan_for(data, n, variant, plan_path)
    report = {'data': data.to_dict(), 'plan': plan.to_dict()}
    if not plan.valid:
        _fail(ctx, report, "plan invalid:\n" + '\n'.join(f"  - {f}" for f in plan.failures))

    def text(r):
        return (f"variant {r['plan']['variant']}: q = {r['plan']['q']}, "
                f"p = {r['plan']['p'][2:]} (p_-1 = p_0 = 0)")
    _emit(ctx, report, text)


@cli.command()
@click.argument('file', required=False)
@click.option('--n', 'n', type=int, default=Config.DEFAULT_FAMILY_SIZE, show_default=True)
@click.option('--variant', type=VARIANTS, default=Config.DEFAULT_VARIANT, show_default=True)
@click.option('--out', 'out', default=None, help='Output directory (default: OUTPUT_FOLDER)')
@click.option('--plan', 'plan_path', default=None, help='Use this plan instead of the minimal one')
@_basis_options
@click.pass_context
@_run
def construct(ctx, file, n, variant, out, plan_path, basis, k0):
    """Build the family X_{-1}..X_n and write it to a directory"""
    h = _read_handlebody(file)
    data = extract_data(h, basis or None, k0)
    plan = _plan_for(data, n, variant, plan_path)
    family = build_family(h, data, plan)
    if out is None:
        Config.init_folders()
        out = Config.OUTPUT_FOLDER
    write_bundle(out, family.output_files())
    report = {
        'out': out,
        'members': family.indices,
        'plan': plan.to_dict(),
        'input_good_stein': family.input_good_stein,
        'pi1': _pi1_report((str(m.index), m.log) for m in family.members),
    }
    _emit(ctx, report, lambda r: f"wrote members {r['members']} to {r['out']}")


@cli.command()
@click.argument('directory', type=click.Path(exists=True, file_okay=False))
@click.pass_context
@_run
def certify(ctx, directory):
    """Rebuild a family directory and certify pairwise non-diffeomorphism"""
    family = family_from_files(read_bundle(directory))
    certificate = certify_family(family)
    report = certificate.to_dict()
    report['homeomorphism'] = homeo_report(family).to_dict()
    report['pi1'] = _pi1_report((str(m.index), m.log) for m in family.members)

    def text(r):
        pairs = certificate.distinct_pairs()
        lines = [f"accepted ({r['variant']}): M = {r['M']}",
                 f"{len(pairs)} distinct pair(s) over members {r['indices']}:",
                 _matrix_text([[int(x) for x in row] for row in r['distinct']])]
        if r['orientation_independent']:
            lines.append("distinctness holds for either orientation")
        lines.append("pi_1 preserved: " + ', '.join(
            f"X_{i} {len(c['steps'])} cancelling pair(s)" for i, c in r['pi1'].items()))
        return '\n'.join(lines)
    _emit(ctx, report, text)


@cli.command(name='d3')
@click.argument('target', required=False)
@click.pass_context
@_run
def d3_cmd(ctx, target):
    """d3 of a family directory, or of a single Stein handlebody with b2 = 1"""
    if target is not None and os.path.isdir(target):
        report = d3_family(family_from_files(read_bundle(target))).to_dict()
    else:
        h = _read_handlebody(target)
        finished = apply_choice(h, SteinStructureChoice.uniform(h))
        generator = kernel_basis(h)
        if len(generator) != 1:
            raise CertificateRefused("d3 unavailable", [f"b2 = {len(generator)}, d3 needs b2 = 1"])
        pairing = sum(c * handle.rot for c, handle in zip(generator[0].coeffs, finished.handles))
        report = {'values': {'0': d3(finished, pairing).to_dict()['d3']}, 'all_distinct': True}
    _emit(ctx, report, lambda r: '\n'.join(f"d3[{i}] = {v}" for i, v in r['values'].items()))


@cli.command()
@click.argument('file', required=False)
@click.option('--n', 'n', type=int, default=Config.DEFAULT_FAMILY_SIZE, show_default=True)
@click.option('--partner', type=click.Choice(['0', '-1']), default='0', show_default=True,
              help='Framing of the summed unknot')
@click.option('--out', 'out', default=None, help='Also write the members to this directory')
@_basis_options
@click.pass_context
@_run
def nonstein(ctx, file, n, partner, out, basis, k0):
    """Build and certify the Stein / non-Stein family"""
    h = _read_handlebody(file)
    result = stein_nonstein_family(h, n, int(partner), basis or None, k0)
    certificate = certify_stein_nonstein(result)
    if out is not None:
        write_bundle(out, result.output_files())
    report = certificate.to_dict()
    report['homeomorphism'] = homeo_report(
        [(f"X{m.label}", m.handlebody, m.log) for m in result.members]).to_dict()
    report['pi1'] = _pi1_report((m.label, m.log) for m in result.members)

    def text(r):
        lines = [f"{entry['label']}: {entry['status']}" for entry in r['status']['members']]
        lines.append("distinct:")
        lines.append(_matrix_text([[int(x) for x in row] for row in r['distinct']]))
        return '\n'.join(lines)
    _emit(ctx, report, text)


@cli.command(name='sum')
@click.argument('a')
@click.argument('b')
@click.pass_context
@_run
def sum_cmd(ctx, a, b):
    """Boundary connected sum of two handlebodies"""
    result = boundary_sum(_read_handlebody(a), _read_handlebody(b))
    click.echo(dumps(result.to_dict()))


@cli.group()
def example():
    """Emit an example handlebody"""


@example.command(name='u')
@click.option('-m', 'm', type=int, required=True, help='Framing of the unknot')
@_run
def example_u_cmd(m):
    """The unknot U(m) with its Legendrian representative"""
    click.echo(dumps(example_u(m).to_dict()))


@example.command(name='random')
@click.option('--seed', type=int, default=None, help='Generator seed (default: CORKFORGE_FUZZ_SEED)')
@_run
def example_random_cmd(seed):
    """A random good Stein handlebody with b2 = 1"""
    click.echo(dumps(random_good_stein_b2one(make_rng(seed)).to_dict()))


if __name__ == '__main__':
    cli()
