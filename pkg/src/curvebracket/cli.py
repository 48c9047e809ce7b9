"""Command-line front end.

Each command maps one-to-one onto a library operation; the CLI only
parses, dispatches, and formats.  Exit codes: 0 success, 1 domain error
(invalid diagram, out-of-range parameter), 2 usage error, 3 overflow or
internal error.
"""

from __future__ import annotations

import json

import click

from .bracket import (
    bracket,
    bracket_span,
    kauffman_jones,
    min_self_intersection_lower_bound,
)
from .census import count_max_span, span_census
from .diagram import ChordDiagram, DiagramError
from .families import family_even, family_odd, named_diagram, realize_span
from .laurent import LaurentPoly
from .topology import SurfaceInvariants, neighborhood_invariants


class _ErrorMappingGroup(click.Group):
    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except (click.ClickException, click.exceptions.Exit, click.Abort):
            raise
        except (DiagramError, ValueError) as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(1)
        except OverflowError as exc:
            click.echo(f"overflow: {exc}", err=True)
            ctx.exit(3)
        except Exception as exc:
            click.echo(f"internal error: {exc}", err=True)
            ctx.exit(3)


@click.group(cls=_ErrorMappingGroup)
def cli() -> None:
    """Kauffman bracket calculator for oriented linear chord diagrams."""


def _format_option(func):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(["text", "json"]),
        default="text",
        show_default=True,
        help="Output format.",
    )(func)


def _gauss_option(func):
    return click.option(
        "--gauss", is_flag=True, help="Read diagram arguments as Gauss words."
    )(func)


def _threads_option(func):
    return click.option(
        "--threads",
        type=int,
        default=None,
        help="Worker count for the enumeration [default: machine parallelism].",
    )(func)


def _read_diagram(text: str, gauss: bool) -> ChordDiagram:
    if gauss:
        return ChordDiagram.from_gauss(text)
    stripped = text.strip()
    if stripped.startswith("{"):
        return ChordDiagram.from_json(stripped)
    return ChordDiagram.from_text(stripped)


def _emit_poly(poly: LaurentPoly, fmt: str) -> None:
    click.echo(str(poly) if fmt == "text" else poly.to_json())


def _emit_diagram(diagram: ChordDiagram, fmt: str) -> None:
    click.echo(diagram.to_text() if fmt == "text" else diagram.to_json())


def _emit_invariants(inv: SurfaceInvariants, fmt: str) -> None:
    if fmt == "json":
        click.echo(
            json.dumps(
                {
                    "orientable": inv.orientable,
                    "euler_characteristic": inv.euler_characteristic,
                    "boundary_components": inv.boundary_components,
                    "genus": inv.genus,
                }
            )
        )
        return
    kind = "orientable" if inv.orientable else "unorientable"
    genus_name = "genus" if inv.orientable else "crosscap"
    click.echo(
        f"{kind} euler={inv.euler_characteristic} "
        f"boundary={inv.boundary_components} {genus_name}={inv.genus}"
    )


@cli.command()
@click.argument("diagram")
@_gauss_option
@_format_option
def compute(diagram: str, gauss: bool, fmt: str) -> None:
    """Kauffman bracket of DIAGRAM."""
    _emit_poly(bracket(_read_diagram(diagram, gauss)), fmt)


@cli.command()
@click.argument("diagram")
@_gauss_option
@_format_option
def kj(diagram: str, gauss: bool, fmt: str) -> None:
    """Kauffman-Jones polynomial of DIAGRAM."""
    _emit_poly(kauffman_jones(_read_diagram(diagram, gauss)), fmt)


@cli.command()
@click.argument("diagram")
@_gauss_option
@_format_option
def span(diagram: str, gauss: bool, fmt: str) -> None:
    """Span of the bracket of DIAGRAM."""
    value = bracket_span(_read_diagram(diagram, gauss))
    if fmt == "json":
        click.echo(json.dumps(value))
    else:
        click.echo("undefined" if value is None else str(value))


@cli.command()
@click.argument("diagram")
@_gauss_option
@_format_option
def bound(diagram: str, gauss: bool, fmt: str) -> None:
    """Lower bound for the minimum self-intersection number."""
    value = min_self_intersection_lower_bound(_read_diagram(diagram, gauss))
    click.echo(json.dumps(value) if fmt == "json" else str(value))


@cli.command()
@click.argument("diagram")
@_gauss_option
@_format_option
def invariants(diagram: str, gauss: bool, fmt: str) -> None:
    """Orientability, Euler characteristic, boundary count and genus of the
    twisted neighborhood."""
    _emit_invariants(neighborhood_invariants(_read_diagram(diagram, gauss)), fmt)


@cli.command()
@click.argument("diagrams", nargs=2)
@_gauss_option
@_format_option
def stack(diagrams: tuple[str, str], gauss: bool, fmt: str) -> None:
    """Stack the first diagram on the second."""
    left = _read_diagram(diagrams[0], gauss)
    right = _read_diagram(diagrams[1], gauss)
    _emit_diagram(left.stack(right), fmt)


@cli.command()
@click.argument("diagram")
@_gauss_option
@_format_option
def reverse(diagram: str, gauss: bool, fmt: str) -> None:
    """Reverse the orientation of every chord."""
    _emit_diagram(_read_diagram(diagram, gauss).reverse(), fmt)


@cli.command()
@click.argument("diagram")
@click.option("--at", "position", type=int, required=True, help="Insertion position.")
@click.option("--positive/--negative", "positive", default=True, show_default=True)
@_gauss_option
@_format_option
def monogon(diagram: str, position: int, positive: bool, gauss: bool, fmt: str) -> None:
    """Insert a monogon chord into DIAGRAM."""
    result = _read_diagram(diagram, gauss).insert_monogon(position, positive)
    _emit_diagram(result, fmt)


@cli.command()
@click.option("--name", "name", default=None, help="Named diagram (e.g. C4).")
@click.option("--odd", "odd", type=int, default=None, help="Odd max-span family.")
@click.option("--even", "even", type=int, default=None, help="Even max-span family.")
@_format_option
def family(name: str | None, odd: int | None, even: int | None, fmt: str) -> None:
    """Produce a named diagram or a member of the max-span families."""
    picked = [opt for opt in (name, odd, even) if opt is not None]
    if len(picked) != 1:
        raise click.UsageError("give exactly one of --name, --odd, --even")
    if name is not None:
        result = named_diagram(name)
    elif odd is not None:
        result = family_odd(odd)
    else:
        result = family_even(even)
    _emit_diagram(result, fmt)


@cli.command()
@click.option("--d", "d", type=int, required=True, help="Chord count.")
@_threads_option
@_format_option
def census(d: int, threads: int | None, fmt: str) -> None:
    """Bracket-span histogram over all d-chord diagrams."""
    result = span_census(d, threads=threads)
    click.echo(result.to_text() if fmt == "text" else result.to_json())


@cli.command()
@click.option("--d", "d", type=int, required=True, help="Chord count.")
@click.option(
    "--mode",
    type=click.Choice(["full", "pruned"]),
    default="full",
    show_default=True,
)
@_threads_option
@_format_option
def maxspan(d: int, mode: str, threads: int | None, fmt: str) -> None:
    """Count d-chord diagrams whose bracket span is exactly 4d."""
    count = count_max_span(d, mode=mode, threads=threads)
    if fmt == "json":
        click.echo(json.dumps({"d": d, "mode": mode, "count": count}))
    else:
        click.echo(str(count))


@cli.command()
@click.argument("span", type=int)
@click.option("--d", "d", type=int, required=True, help="Chord count.")
@_format_option
def realize(span: int, d: int, fmt: str) -> None:
    """Construct a d-chord diagram with the given bracket SPAN, if known."""
    result = realize_span(d, span)
    if result is None:
        click.echo("null" if fmt == "json" else "none")
    else:
        _emit_diagram(result, fmt)


if __name__ == "__main__":
    cli()
