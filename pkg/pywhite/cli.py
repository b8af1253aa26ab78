"""
Provides the ``pywhite`` command line.

Every command takes matroids either as a path to a file in the matroid text format or as the name
of a packaged standard matroid. Exit code 1 signals invalid input, exit code 2 an internal failure.
"""
import logging
from pathlib import Path

import click

from .matroid.catalog import load_matroid, get_matroid, list_matroids, format_matroid
from .matroid.elements import parse_set, format_set
from .matroid.error import PreconditionError, InternalError
from .matroid.generate import make_uniform, make_random_paving, make_random_sparse_paving
from .matroid.matroid import Matroid, validate_matroid
from .matroid.relaxation import relax, relaxation_trace, stressed_hyperplanes, format_trace
from .misc.cfg import TemporaryConfig, getconfig
from .oracle.binomial import emit_quadric_binomials, format_binomials
from .oracle.fiber import fiber_bfs, shortest_sequence
from .oracle.verify import verify_white
from .white.context import ProvenanceContext, local
from .white.sequence import load_tuple, load_sequence, format_sequence, validate_sequence
from .white.solver import Solver


class _Group(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except PreconditionError as e:
            click.echo(f"error: {e}", err=True)
            ctx.exit(1)
        except InternalError as e:
            click.echo(f"internal error: {e}", err=True)
            ctx.exit(2)


def _matroid(source: str) -> Matroid:
    if Path(source).exists():
        return load_matroid(source)
    if source in list_matroids():
        return get_matroid(source)
    raise PreconditionError(f"No matroid file or standard matroid named {source}.")


@click.group(cls=_Group)
@click.option("-v", "--verbose", count=True, help="Log solver progress, twice for every splice.")
@click.option("--expert", is_flag=True, help="Only warn when the solver is given a non-paving matroid.")
@click.pass_context
def cli(ctx, verbose, expert):
    """Symmetric exchange sequences of bases of paving matroids."""
    if verbose:
        logging.basicConfig(level=logging.DEBUG if verbose > 1 else logging.INFO)
    cfg = ctx.with_resource(TemporaryConfig())
    if expert:
        cfg.solver.non_paving_action = "warning"


@cli.command()
@click.argument("matroid")
def validate(matroid):
    """Check the basis exchange axiom."""
    with TemporaryConfig() as cfg:
        cfg.matroid.validate_action = "ignore"
        m = _matroid(matroid)
    report = validate_matroid(m)
    click.echo(f"{m}: {report}")
    if not report.ok:
        raise click.exceptions.Exit(1)


@cli.command()
@click.argument("matroid")
def info(matroid):
    """Print rank, paving status and hyperplanes."""
    m = _matroid(matroid)
    stressed = set(stressed_hyperplanes(m)) if m.is_paving() else set()
    click.echo(f"matroid n={m.n} r={m.r} bases={len(m.bases)}")
    click.echo(f"uniform={str(m.is_uniform()).lower()} paving={str(m.is_paving()).lower()} "
               f"sparse_paving={str(m.is_sparse_paving()).lower()}")
    for h in m.hyperplanes():
        suffix = " stressed" if h in stressed else ""
        click.echo(f"hyperplane {format_set(h)}{suffix}")


@cli.command("relax")
@click.argument("matroid")
@click.option("-H", "--hyperplane", required=True, help="The stressed hyperplane, e.g. 0,1,2.")
@click.option("-o", "--out", type=click.File("w"), default="-")
def relax_command(matroid, hyperplane, out):
    """Relax a stressed hyperplane."""
    try:
        h = parse_set(hyperplane)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--hyperplane")
    out.write(format_matroid(relax(_matroid(matroid), h)))


@cli.command()
@click.argument("matroid")
@click.option("-o", "--out", type=click.File("w"), default="-")
def trace(matroid, out):
    """Relax stressed hyperplanes until the matroid is uniform."""
    out.write(format_trace(relaxation_trace(_matroid(matroid))))


@cli.command()
@click.argument("matroid")
@click.option("--from", "start", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--to", "end", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("-c", "--certificate", type=click.File("w"), default="-", help="Where to write the sequence.")
@click.option("-p", "--provenance", type=click.File("w"), default=None, help="Where to write one line per splice.")
def solve(matroid, start, end, certificate, provenance):
    """Connect two tuples of bases by symmetric exchanges."""
    m = _matroid(matroid)
    with local(ProvenanceContext()) as ctx:
        seq = Solver().solve(m, load_tuple(start), load_tuple(end))
    certificate.write(format_sequence(seq))
    if provenance is not None:
        provenance.write(ctx.log())


@cli.command()
@click.argument("matroid")
@click.argument("certificate", type=click.Path(exists=True, dir_okay=False))
@click.option("--to", "end", required=True, type=click.Path(exists=True, dir_okay=False))
def check(matroid, certificate, end):
    """Validate a certificate against a matroid and the expected end tuple."""
    report = validate_sequence(_matroid(matroid), load_sequence(certificate), load_tuple(end))
    click.echo(str(report))
    if not report.ok:
        raise click.exceptions.Exit(1)


@cli.command()
@click.argument("matroid")
@click.option("-d", "--degree", required=True, type=click.IntRange(min=1))
@click.option("--cap", type=click.IntRange(min=1), default=None, help="The maximal number of fibers.")
@click.option("--fiber-cap", type=click.IntRange(min=1), default=None, help="The maximal size of a fiber.")
@click.option("-w", "--workers", type=click.IntRange(min=1), default=1)
@click.option("-o", "--out", type=click.File("w"), default="-")
def verify(matroid, degree, cap, fiber_cap, workers, out):
    """Check that all fibers of a degree are connected."""
    cfg = getconfig()
    cfg.oracle.workers = workers
    if fiber_cap is not None:
        cfg.oracle.fiber_cap = fiber_cap
    report = verify_white(_matroid(matroid), degree, cap)
    out.write(str(report))


@cli.command()
@click.argument("matroid")
@click.option("--from", "start", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--to", "end", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--shortest", is_flag=True, help="Print a shortest sequence instead of the distance.")
def oracle(matroid, start, end, shortest):
    """Search the fiber graph between two tuples."""
    m = _matroid(matroid)
    first, last = load_tuple(start), load_tuple(end)
    if shortest:
        click.echo(format_sequence(shortest_sequence(m, first, last)), nl=False)
        return
    distances = fiber_bfs(m, first)
    distance = distances.get(tuple(last))
    click.echo(f"fiber reachable={len(distances)} distance={'-' if distance is None else distance}")


@cli.command()
@click.option("--uniform", "uniform", nargs=2, type=int, default=None, metavar="R N", help="Rank and size, the smaller one is the rank.")
@click.option("--paving", "paving", nargs=3, type=int, default=None, metavar="N R K")
@click.option("--sparse-paving", "sparse", nargs=3, type=int, default=None, metavar="N R K")
@click.option("-s", "--seed", type=click.IntRange(min=0, max=2 ** 64 - 1), default=0)
@click.option("-o", "--out", type=click.File("w"), default="-")
def gen(uniform, paving, sparse, seed, out):
    """Generate a uniform or random paving matroid."""
    chosen = [option for option in (uniform, paving, sparse) if option]
    if len(chosen) != 1:
        raise click.UsageError("Give exactly one of --uniform, --paving and --sparse-paving.")
    if uniform:
        r, n = sorted(uniform)
        m = make_uniform(n, r)
    elif paving:
        n, r, k = paving
        m = make_random_paving(n, r, k, seed)
    else:
        n, r, k = sparse
        m = make_random_sparse_paving(n, r, k, seed)
    out.write(format_matroid(m))


@cli.command()
@click.argument("matroid")
@click.option("-o", "--out", type=click.File("w"), default="-")
def binomials(matroid, out):
    """Print the quadric binomials of the toric ideal."""
    out.write(format_binomials(emit_quadric_binomials(_matroid(matroid))))


def run(argv=None) -> int:
    """Run the command line with ``argv`` and return the exit code."""
    try:
        code = cli.main(args=argv, prog_name="pywhite", standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        return 1
    return code if isinstance(code, int) else 0


def main():
    raise SystemExit(run())
