# Copyright the halftwist authors
# Licensed under the MIT license

import json
import logging
import sys
from pathlib import Path
from typing import Any, Iterable, Sequence

import click
from rich.console import Console
from rich.table import Table

from .__version__ import __version__
from .certify import (
    certify,
    DEFAULT_CLOSURE_CAP,
    group_closure,
    M_LETTERS,
    verify_certificate,
)
from .cyclotomic import canonical_root_for_m, find_pm_root, is_pm_root, q_order
from .errors import DomainError, PreconditionError
from .explore import EXPLORE_HALF_POINTS, EXPLORE_M, explore_words
from .matchings import catalan, enumerate_matchings
from .mcg import rescaled_scalar_check, verify_birman, verify_power_scalar
from .rings import CyclotomicRing, ring_for
from .schema import record
from .skein import braid_generator_matrix, braid_word_matrix
from .types import (
    BraidWord,
    CapExceeded,
    Options,
    ReproduceRow,
    RootOfUnityChoice,
    RunConfig,
    Verdict,
)

LOG = logging.getLogger(__name__)

CONSOLE = Console(stderr=True)

EXIT_FAILED = 1
EXIT_USAGE = 3
EXIT_CODES = {
    Verdict.FINITE: 0,
    Verdict.INFINITE: 10,
    Verdict.INCONCLUSIVE: 20,
}


class RootParam(click.ParamType):
    name = "N:j"

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> RootOfUnityChoice:
        if isinstance(value, RootOfUnityChoice):
            return value
        try:
            return RootOfUnityChoice.parse(value)
        except DomainError as exc:
            self.fail(str(exc), param, ctx)


class RangeParam(click.ParamType):
    """``6..12`` or a single integer."""

    name = "a..b"

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> range:
        if isinstance(value, range):
            return value
        start, sep, stop = str(value).partition("..")
        try:
            low = int(start)
            high = int(stop) if sep else low
        except ValueError:
            self.fail(f"expected a..b, got {value!r}", param, ctx)
        if high < low:
            self.fail(f"empty range {value!r}", param, ctx)
        return range(low, high + 1)


class ListParam(click.ParamType):
    """``4,6``"""

    name = "p,q,..."

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> list[int]:
        if isinstance(value, list):
            return value
        try:
            return [int(item) for item in str(value).split(",") if item.strip()]
        except ValueError:
            self.fail(f"expected comma separated integers, got {value!r}", param, ctx)


class HalftwistGroup(click.Group):
    """Usage errors, including out-of-domain arguments, exit with status 3."""

    def make_context(self, *args: Any, **kwargs: Any) -> click.Context:
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as exc:
            exc.exit_code = EXIT_USAGE
            raise

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except click.UsageError as exc:
            exc.exit_code = EXIT_USAGE
            raise
        except (DomainError, PreconditionError) as exc:
            error = click.UsageError(str(exc), ctx)
            error.exit_code = EXIT_USAGE
            raise error from exc


def default_root(m: int) -> RootOfUnityChoice:
    """The tabulated root for m >= 6, otherwise the smallest root of P_m."""
    return canonical_root_for_m(m) if m >= 6 else find_pm_root(m)


def emit(options: Options, records: Iterable[dict[str, Any]]) -> None:
    """One JSON object per line, to standard out or the --out file."""
    lines = [json.dumps(r) for r in records]
    if options.out is None:
        for line in lines:
            click.echo(line)
    else:
        options.out.write_text("".join(f"{line}\n" for line in lines))


def summary(title: str, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    table = Table(title=title)
    for column in columns:
        table.add_column(column)
    for row in rows:
        table.add_row(*(str(cell) for cell in row))
    CONSOLE.print(table)


points_option = click.option(
    "--points", "-p", type=int, required=True, help="number of boundary points 2n"
)
word_option = click.option(
    "--word", "-w", default="", help="signed generator indices, e.g. '1 1 -2 -2'"
)
root_option = click.option("--root", "-r", type=RootParam(), help="A = ζ_N^j")
symbolic_option = click.option(
    "--symbolic", "-s", is_flag=True, help="work over ℤ[A, A⁻¹] (default without --root)"
)


@click.group(cls=HalftwistGroup)
@click.pass_context
@click.version_option(__version__, "--version", "-V")
@click.option("--verbose / --quiet", "-v / -q", default=None)
@click.option(
    "--out",
    "-o",
    type=click.Path(dir_okay=False, writable=True, resolve_path=True, path_type=Path),
    default=None,
    help="write JSON records here instead of standard out",
)
@click.option(
    "--long-symbolic",
    is_flag=True,
    help="allow symbolic relator checks beyond 6 points",
)
def main(
    ctx: click.Context, verbose: bool | None, out: Path | None, long_symbolic: bool
) -> None:
    """
    Skein representations of braid and mapping class groups, and
    certificates for the order of their images
    """
    options = Options(out=out, long_symbolic=long_symbolic)
    level = (
        logging.DEBUG
        if verbose
        else (logging.WARNING if verbose is None else logging.ERROR)
    )
    logging.basicConfig(level=level, stream=sys.stderr)
    ctx.obj = options


@main.command("dim")
@click.pass_context
@points_option
def dim(ctx: click.Context, points: int) -> None:
    """
    Dimension of the skein module of 2n points
    """
    options: Options = ctx.obj
    config = RunConfig(points=points)
    dimension = len(enumerate_matchings(config.n))
    assert dimension == catalan(config.n)
    emit(
        options,
        [record("dimension", points=points, n=config.n, dimension=dimension)],
    )
    summary("dimension", ("2n", "d"), [(points, dimension)])


@main.command("matrix")
@click.pass_context
@points_option
@word_option
@root_option
@symbolic_option
def matrix(
    ctx: click.Context,
    points: int,
    word: str,
    root: RootOfUnityChoice | None,
    symbolic: bool,
) -> None:
    """
    Matrix of a braid word on the crossingless matching basis
    """
    options: Options = ctx.obj
    config = RunConfig(points=points, word=word, root=root, symbolic=symbolic)
    braid = BraidWord.parse(config.n, config.word)
    result = braid_word_matrix(braid, ring_for(config.root))
    emit(options, [result.as_record(braid)])
    basis = [str(m) for m in enumerate_matchings(config.n)]
    summary(
        f"ρ({braid or 'id'}) over {result.ring.name}",
        ("", *basis),
        ([b, *row] for b, row in zip(basis, result.entry_strings())),
    )


@main.command("certify")
@click.pass_context
@points_option
@word_option
@click.option("--root", "-r", type=RootParam(), required=True, help="A = ζ_N^j")
def certify_word(ctx: click.Context, points: int, word: str, root: RootOfUnityChoice) -> None:
    """
    Certify finite or infinite projective order of a braid word's image
    """
    options: Options = ctx.obj
    config = RunConfig(points=points, word=word, root=root)
    braid = BraidWord.parse(config.n, config.word)
    ring = CyclotomicRing.for_choice(root)
    r = q_order(root) if braid.letters == M_LETTERS else None
    result = certify(braid_word_matrix(braid, ring), braid, r)
    certificate = result.certificate
    verified = certificate.verdict is Verdict.INCONCLUSIVE or verify_certificate(
        result.matrix, certificate
    )
    emit(options, [certificate.as_record(ring.name, braid, result.matrix.dim)])
    summary(
        "certificate",
        ("word", "root", "dimension", "verdict", "order", "witness"),
        [
            (
                braid or "id",
                root,
                result.matrix.dim,
                certificate.verdict.value,
                certificate.order or "",
                type(certificate.witness).__name__ if certificate.witness else "",
            )
        ],
    )
    if not verified:
        LOG.error("certificate for %s did not re-verify", braid)
        ctx.exit(EXIT_FAILED)
    ctx.exit(EXIT_CODES[certificate.verdict])


@main.command("verify-birman")
@click.pass_context
@points_option
@root_option
@symbolic_option
def birman(
    ctx: click.Context, points: int, root: RootOfUnityChoice | None, symbolic: bool
) -> None:
    """
    Check that Birman's relators act by the expected scalars
    """
    options: Options = ctx.obj
    config = RunConfig(points=points, root=root, symbolic=symbolic)
    reports = verify_birman(config.n, ring_for(config.root), options.long_symbolic)
    emit(options, [report.as_record() for report in reports])
    summary(
        "Birman relators",
        ("relator", "2n", "ring", "scalar", "pass"),
        ((r.relator, points, r.ring, r.scalar, r.passed) for r in reports),
    )
    if not all(report.passed for report in reports):
        ctx.exit(EXIT_FAILED)


@main.command("check-power")
@click.pass_context
@points_option
@click.option("--m", "-m", "m", type=int, required=True, help="the power m")
@click.option("--root", "-r", type=RootParam(), help="A = ζ_N^j, a root of P_m")
def check_power(
    ctx: click.Context, points: int, m: int, root: RootOfUnityChoice | None
) -> None:
    """
    Check that the m-th power of every half-twist is scalar at a root of P_m
    """
    options: Options = ctx.obj
    config = RunConfig(points=points, root=root or default_root(m), m=m)
    assert config.root is not None
    check = verify_power_scalar(config.n, m, config.root)
    emit(
        options,
        [
            record(
                "power",
                n=config.n,
                m=m,
                ring=str(config.root),
                scalar=str(check.scalar),
                **{"pass": check.passed},
            )
        ],
    )
    summary(
        "power",
        ("2n", "m", "root", "scalar", "pass"),
        [(points, m, config.root, check.scalar, check.passed)],
    )
    if not check.passed:
        ctx.exit(EXIT_FAILED)


@main.command("rescale-check")
@click.pass_context
@points_option
@click.option("--m", "-m", "m", type=int, required=True, help="an odd power m")
@click.option("--root", "-r", type=RootParam(), help="A = ζ_N^j, a root of P_m")
def rescale_check(
    ctx: click.Context, points: int, m: int, root: RootOfUnityChoice | None
) -> None:
    """
    Check ((θA)^-m)^(4n-2) = (-1)^(n+1) for odd m
    """
    options: Options = ctx.obj
    config = RunConfig(points=points, root=root or default_root(m), m=m)
    assert config.root is not None
    value = rescaled_scalar_check(config.n, m, config.root)
    expected = (-1) ** (config.n + 1)
    emit(
        options,
        [
            record(
                "rescale",
                n=config.n,
                m=m,
                ring=str(config.root),
                value=value,
                expected=expected,
                **{"pass": value == expected},
            )
        ],
    )
    summary("rescaling", ("2n", "m", "root", "value"), [(points, m, config.root, value)])


@main.command("closure")
@click.pass_context
@points_option
@root_option
@click.option("--m", "-m", "m", type=int, default=EXPLORE_M, help="root of P_m when no --root")
@click.option(
    "--cap",
    "-c",
    type=int,
    default=DEFAULT_CLOSURE_CAP,
    help="projective classes to explore",
)
def closure(
    ctx: click.Context, points: int, root: RootOfUnityChoice | None, m: int, cap: int
) -> None:
    """
    Breadth-first closure of the projective image of the generators
    """
    options: Options = ctx.obj
    config = RunConfig(points=points, root=root or default_root(m), m=m, cap=cap)
    assert config.root is not None
    ring = CyclotomicRing.for_choice(config.root)
    indices = list(range(1, points))
    generators = [braid_generator_matrix(config.n, i, ring=ring) for i in indices]
    result = group_closure(generators, cap)
    exceeded = isinstance(result, CapExceeded)
    emit(
        options,
        [
            record(
                "closure",
                ring=ring.name,
                generators=indices,
                cap=cap,
                order=None if exceeded else result.order,
                cap_exceeded=exceeded,
                explored=result.explored if exceeded else result.order,
            )
        ],
    )
    summary(
        "closure",
        ("2n", "root", "order"),
        [(points, config.root, f"> {cap}" if exceeded else result.order)],
    )
    ctx.exit(EXIT_CODES[Verdict.INCONCLUSIVE] if exceeded else 0)


def reproduce_row(m: int, n: int) -> ReproduceRow:
    choice = canonical_root_for_m(m)
    ring = CyclotomicRing.for_choice(choice)
    pm_root = is_pm_root(m, choice)
    reports = verify_birman(n, ring)
    power = verify_power_scalar(n, m, choice)
    word = BraidWord(n, M_LETTERS)
    result = certify(braid_word_matrix(word, ring), word, q_order(choice))
    verdict = result.certificate.verdict
    if verdict is not Verdict.INCONCLUSIVE and not verify_certificate(
        result.matrix, result.certificate
    ):
        LOG.error("certificate at m=%d, 2n=%d did not re-verify", m, 2 * n)
        verdict = Verdict.INCONCLUSIVE
    return ReproduceRow(
        m=m,
        n=n,
        root=choice,
        q_order=q_order(choice),
        pm_root=pm_root,
        birman=all(report.passed for report in reports),
        power=power.passed,
        power_scalar=power.scalar,
        verdict=verdict,
    )


@main.command("reproduce")
@click.pass_context
@click.option("--m", "-m", "m_range", type=RangeParam(), default="6..12", help="powers, a..b")
@click.option("--points", "-p", "point_list", type=ListParam(), default="4,6", help="point counts")
def reproduce(ctx: click.Context, m_range: range, point_list: list[int]) -> None:
    """
    Check, for every m and 2n, that the m-th powers of half-twists normally
    generate an infinite-index subgroup
    """
    options: Options = ctx.obj
    if m_range.start < 6:
        raise click.BadParameter(
            f"the root table covers m >= 6, got m={m_range.start}", param_hint="--m"
        )
    configs = [RunConfig(points=p, m=m) for m in m_range for p in point_list]
    for config in configs:
        if config.n < 2:
            raise click.BadParameter(f"need 2n >= 4, got {config.points}", param_hint="--points")

    rows = []
    for config in configs:
        assert config.m is not None
        LOG.info("m=%d, 2n=%d", config.m, config.points)
        rows.append(reproduce_row(config.m, config.n))

    emit(options, [row.as_record() for row in rows])
    summary(
        "infinite index of the normal closure of h^m",
        ("m", "2n", "root", "r", "P_m(A)=0", "Birman", "power", "scalar", "M", "pass"),
        (
            (
                row.m,
                2 * row.n,
                row.root,
                row.q_order,
                row.pm_root,
                row.birman,
                row.power,
                row.power_scalar,
                row.verdict.value if row.verdict else "",
                row.passed,
            )
            for row in rows
        ),
    )
    if not all(row.passed for row in rows):
        ctx.exit(EXIT_FAILED)


@main.command("explore-m5")
@click.pass_context
@click.option("--max-len", "-l", type=int, default=2, help="longest word to try")
@click.option("--cap", "-c", type=int, default=None, help="most words to certify")
@root_option
def explore_m5(
    ctx: click.Context, max_len: int, cap: int | None, root: RootOfUnityChoice | None
) -> None:
    """
    Search short words of B_6 for infinite projective order at a root of P_5
    """
    options: Options = ctx.obj
    config = RunConfig(
        points=2 * EXPLORE_HALF_POINTS,
        root=root or find_pm_root(EXPLORE_M),
        max_len=max_len,
        cap=cap,
    )
    assert config.root is not None
    if not is_pm_root(EXPLORE_M, config.root):
        raise PreconditionError(f"is_pm_root({EXPLORE_M}, {config.root}) is false")
    ring = CyclotomicRing.for_choice(config.root)

    records = []
    counts = {verdict: 0 for verdict in Verdict}
    for word, result in explore_words(max_len, cap, config.root):
        certificate = result.certificate
        counts[certificate.verdict] += 1
        records.append(
            record(
                "explore",
                ring=ring.name,
                word=list(word.letters),
                verdict=certificate.verdict.value,
                certificate=certificate.as_record(ring.name, word, result.matrix.dim),
            )
        )

    emit(options, records)
    summary(
        f"B_6 words up to length {max_len} at {config.root}",
        ("finite", "infinite", "inconclusive"),
        [(counts[Verdict.FINITE], counts[Verdict.INFINITE], counts[Verdict.INCONCLUSIVE])],
    )
