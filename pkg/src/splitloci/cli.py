"""Command-line front end.

Exit codes: 0 on success (and agreement), 1 on usage errors, 2 when the two
classification paths disagree.
"""

from __future__ import annotations

import json
import math
import sys

import click

from .classgroup import canonical_class, element_order, quotient_group
from .classifier import CrossCheck, classify, crosscheck
from .extension import choose_affine_model, torus_weights, weights_tsv
from .splitting import enumerate_types, hasse_diagram, parse_type, u_invariant, enumerate_strata

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2

FORMATS = ("text", "json", "tsv", "dot")


def _type_option(f):
    return click.option("-e", "--type", "raw_type", required=True,
                        help="Splitting type, comma-separated integers in any order.")(f)


def _format_option(default):
    return click.option("--format", "fmt", type=click.Choice(FORMATS), default=default,
                        show_default=True)


def _parse(raw_type):
    try:
        return parse_type(raw_type)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="'-e/--type'") from None


def _require(fmt, allowed):
    if fmt not in allowed:
        raise click.UsageError(f"--format {fmt} is not available here; use one of {', '.join(allowed)}")


def _order_str(n):
    return "∞" if n == math.inf else str(n)


@click.group()
def cli():
    """Gorenstein classification of splitting loci on P^1."""


@cli.command("classify")
@_type_option
@_format_option("text")
def cmd_classify(raw_type, fmt):
    """Classify by the combinatorial criterion and by the class group."""
    _require(fmt, ("text", "json"))
    report = crosscheck(_parse(raw_type))
    if fmt == "json":
        click.echo(json.dumps(report.to_json()))
    elif report.agree:
        click.echo(f"{report.criterion} (agree)")
    else:
        click.echo(f"criterion: {report.criterion}; class group: {report.class_group} (DISAGREE)")
    return EXIT_OK if report.agree else EXIT_DISAGREE


@cli.command("group")
@_type_option
@_format_option("text")
@click.option("--slack", type=click.IntRange(min=0), default=None,
              help="Present the group through the affine model with M = minimal + slack.")
def cmd_group(raw_type, fmt, slack):
    """Class group of the splitting locus and the order of its canonical class."""
    _require(fmt, ("text", "json"))
    e = _parse(raw_type)
    model = None
    if slack is not None:
        try:
            model = choose_affine_model(e, slack)
        except ValueError as exc:
            raise click.UsageError(str(exc)) from None
        group = quotient_group(e, model.M)
    else:
        group = quotient_group(e)
        if e.rank >= 2:
            model = choose_affine_model(e)
    omega = canonical_class(e)
    order = element_order(e, omega, group)
    if fmt == "json":
        click.echo(json.dumps({
            "type": str(e),
            "group": str(group),
            "presentation": group.to_json(),
            "canonical_class": omega.to_json(),
            "order": None if order == math.inf else order,
            "model": model.to_json() if model else None,
        }))
    else:
        click.echo(f"{group}; ω order {_order_str(order)}")
        click.echo(f"ω = {omega}")
    return EXIT_OK


def poset_dot(e, max_codim):
    nodes = enumerate_strata(e, max_codim)
    lines = ["digraph strata {", "  rankdir=BT;"]
    for x in nodes:
        label = f"{x} | u={u_invariant(x)} | {classify(x)}"
        lines.append(f'  "{x}" [label="{label}"];')
    for lo, hi in hasse_diagram(e, max_codim):
        lines.append(f'  "{lo}" -> "{hi}";')
    lines.append("}")
    return "\n".join(lines)


@cli.command("poset")
@_type_option
@click.option("-c", "--max-codim", type=click.IntRange(min=0), required=True)
@_format_option("dot")
def cmd_poset(raw_type, max_codim, fmt):
    """Strata below a type, up to a relative codimension, as a Hasse diagram."""
    _require(fmt, ("dot", "json", "text"))
    e = _parse(raw_type)
    if fmt == "dot":
        click.echo(poset_dot(e, max_codim))
    elif fmt == "json":
        nodes = enumerate_strata(e, max_codim)
        click.echo(json.dumps({
            "nodes": [{"type": str(x), "u": u_invariant(x), "verdict": str(classify(x))}
                      for x in nodes],
            "edges": [[str(a), str(b)] for a, b in hasse_diagram(e, max_codim)],
        }))
    else:
        for x in enumerate_strata(e, max_codim):
            click.echo(f"{x} | u={u_invariant(x)} | {classify(x)}")
        for a, b in hasse_diagram(e, max_codim):
            click.echo(f"{a} -> {b}")
    return EXIT_OK


def run_crosscheck(rank_max, spread_max, normalize=True) -> list[CrossCheck]:
    return [crosscheck(e) for e in enumerate_types(rank_max, spread_max, normalize)]


@cli.command("crosscheck")
@click.option("-r", "--rank-max", type=click.IntRange(min=1), required=True)
@click.option("-s", "--spread-max", type=click.IntRange(min=0), required=True)
@click.option("--no-normalize", is_flag=True,
              help="Check every shift in [0, spread-max], not only e_1 = 0.")
@_format_option("text")
def cmd_crosscheck(rank_max, spread_max, no_normalize, fmt):
    """Compare both classification paths on every type within the bounds."""
    _require(fmt, ("text", "json", "tsv"))
    reports = run_crosscheck(rank_max, spread_max, not no_normalize)
    failures = [r for r in reports if not r.agree]
    if fmt == "json":
        click.echo(json.dumps({
            "checked": len(reports),
            "disagreements": len(failures),
            "failures": [r.to_json() for r in failures],
        }))
    elif fmt == "tsv":
        click.echo("type\tcriterion\tclass_group\tagree")
        for r in reports:
            click.echo(f"{r.type}\t{r.criterion}\t{r.class_group}\t{str(r.agree).lower()}")
    else:
        noun = "type" if len(reports) == 1 else "types"
        click.echo(f"{len(reports)} {noun} checked, {len(failures)} disagreements")
        for r in failures:
            click.echo(json.dumps(r.to_json()))
    return EXIT_DISAGREE if failures else EXIT_OK


@cli.command("weights")
@_type_option
@_format_option("tsv")
def cmd_weights(raw_type, fmt):
    """Weight decomposition of H^1 End(O(e)) under the torus action."""
    _require(fmt, ("tsv", "json", "text"))
    weights = torus_weights(_parse(raw_type))
    if fmt == "json":
        click.echo(json.dumps([
            {"i": w.source, "j": w.target, "dim": w.dimension,
             "multidegree": list(w.multidegree)} for w in weights
        ]))
    elif fmt == "tsv":
        click.echo(weights_tsv(weights))
    else:
        for w in weights:
            click.echo(f"({w.source},{w.target}) dim {w.dimension} deg {w.multidegree}")
    return EXIT_OK


def main(argv=None) -> int:
    try:
        rv = cli.main(args=argv, prog_name="splitloci", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    return rv if isinstance(rv, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
