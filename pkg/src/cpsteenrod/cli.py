"""Command-line front end.

Exit codes: 0 when every check passes, 1 on a mathematical mismatch (the
first mismatching degree is printed), 2 on invalid invocation.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import click

from . import bijection as Bj
from . import blocks
from . import bsone
from .checks import Comparison, check_corollary, check_main, degree_identities, reference_generators
from .grading import is_prime
from .lenses import Lens, evaluate

MAX_DEGREE_ENV = "CPSTEENROD_MAX_DEGREE"


def _prime(ctx, param, value: int) -> int:
    if not is_prime(value):
        raise click.BadParameter(f"{value} is not prime")
    return value


def _perturbation(ctx, param, value: str | None):
    if value is None:
        return None
    name, sep, delta = value.partition(":")
    try:
        if not sep or not name:
            raise ValueError
        return name, int(delta)
    except ValueError:
        raise click.BadParameter("expected NAME:DELTA, e.g. xi1:+1") from None


prime_option = click.option("--prime", "-p", type=int, required=True, callback=_prime, help="The prime p.")
max_degree_option = click.option(
    "--max-degree",
    "-n",
    type=click.IntRange(min=0),
    default=100,
    show_default=True,
    envvar=MAX_DEGREE_ENV,
    help=f"Truncation degree (also read from ${MAX_DEGREE_ENV}).",
)
format_option = click.option(
    "--format", "fmt", type=click.Choice(["plain", "json", "csv"]), default="plain", show_default=True
)
perturb_option = click.option(
    "--perturb",
    callback=_perturbation,
    metavar="NAME:DELTA",
    help="Shift one reference generator (xi<i>, tau<i> or b) by DELTA degrees; a negative control.",
)


def _render_comparisons(comps: list[Comparison], fmt: str) -> str:
    if fmt == "json":
        docs = [c.to_dict() for c in comps]
        return json.dumps(docs[0] if len(docs) == 1 else docs, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        for c in comps:
            if len(comps) > 1:
                buf.write(f"# lens={c.lens}\n")
            doc = c.to_dict()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["degree", "lhs", "rhs"])
            for k, (a, b) in enumerate(zip(doc["lhs"], doc["rhs"])):
                w.writerow([doc["lower_bound"] + k, a, b])
        return buf.getvalue().rstrip("\n")
    lines = []
    for c in comps:
        doc = c.to_dict()
        lines.append(f"p={c.prime} lens={c.lens} max_degree={c.max_degree}")
        lines.append(f"{'degree':>6} {'model':>12} {'reference':>12}")
        for k, (a, b) in enumerate(zip(doc["lhs"], doc["rhs"])):
            mark = "  <-- mismatch" if a != b else ""
            lines.append(f"{doc['lower_bound'] + k:>6} {a:>12} {b:>12}{mark}")
        if c.equal:
            lines.append("EQUAL")
        else:
            lines.append(f"MISMATCH first at degree {c.first_mismatch}")
        lines.append("")
    return "\n".join(lines).rstrip("\n")


def _finish(comps: list[Comparison], fmt: str) -> None:
    click.echo(_render_comparisons(comps, fmt))
    sys.exit(0 if all(c.equal for c in comps) else 1)


def _perturb_for(p: int, n: int, lens: Lens, perturb):
    if perturb is None:
        return None
    names = {g.name for g in reference_generators(p, n, lens)}
    return perturb if perturb[0] in names else None


@click.group()
def main() -> None:
    """Exact degree and dimension checks for the C_p-equivariant dual Steenrod algebra."""


@main.command("check-main")
@prime_option
@max_degree_option
@click.option("--lens", type=click.Choice(["underlying", "phi", "both"]), default="both", show_default=True)
@format_option
@perturb_option
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True, help="Evaluate lenses in parallel.")
def check_main_cmd(prime: int, max_degree: int, lens: str, fmt: str, perturb, jobs: int) -> None:
    """Compare the model with H_*(HZ; F_p) (underlying) and A_* (x) F_p[b] (phi)."""
    lenses = [Lens.UNDERLYING, Lens.PHI] if lens == "both" else [Lens(lens)]
    plan = [(prime, max_degree, lz, _perturb_for(prime, max_degree, lz, perturb)) for lz in lenses]
    if perturb is not None and all(pp is None for *_, pp in plan):
        raise click.BadParameter(f"no reference generator named {perturb[0]!r} in degrees <= {max_degree + 1}",
                                 param_hint="--perturb")
    try:
        if jobs > 1 and len(plan) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                comps = list(pool.map(check_main, *zip(*plan)))
        else:
            comps = [check_main(*args) for args in plan]
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    _finish(comps, fmt)


@main.command("check-corollary")
@prime_option
@max_degree_option
@format_option
@perturb_option
def check_corollary_cmd(prime: int, max_degree: int, fmt: str, perturb) -> None:
    """Compare Lambda(tau_0) (x) the underlying model with A_*.

    At p = 2 the comparison is also made against F_2[xi_i], |xi_i| = 2^i - 1.
    """
    try:
        comps = [check_corollary(prime, max_degree, perturb)]
        if prime == 2:
            comps.append(check_corollary(prime, max_degree, classical=True))
    except (KeyError, ValueError) as exc:
        raise click.UsageError(str(exc)) from exc
    _finish(comps, fmt)


@main.command("bijection")
@prime_option
@max_degree_option
@click.option("--format", "fmt", type=click.Choice(["plain", "json"]), default="plain", show_default=True)
@click.option("--dump", type=click.Path(dir_okay=False, path_type=Path), help="Write a JSON listing of M/N monomials.")
@click.option("--dump-limit", type=click.IntRange(min=0), default=100, show_default=True)
@click.option("--drop-disjointness", is_flag=True, help="Negative control: allow I, J to meet K.")
def bijection_cmd(prime: int, max_degree: int, fmt: str, dump: Path | None, dump_limit: int,
                  drop_disjointness: bool) -> None:
    """Certify the V/W monomial bases have equal graded dimension."""
    report = Bj.check_bijection(prime, max_degree, enforce_disjoint=not drop_disjointness)
    if dump is not None:
        rows = Bj.monomial_listing(prime, max_degree, dump_limit)
        dump.write_text(json.dumps(rows, indent=1), encoding="utf-8")
    if fmt == "json":
        doc = {
            "prime": prime,
            "max_degree": max_degree,
            "index_count": report.index_count,
            "checks": [
                {"name": c.name, "passed": c.passed, "first_offending": c.first_offending, "detail": c.detail}
                for c in report.checks
            ],
            "equal": report.passed,
        }
        click.echo(json.dumps(doc, indent=2))
    else:
        click.echo(f"p={prime} max_degree={max_degree} indices={report.index_count}")
        for c in report.checks:
            status = "PASS" if c.passed else f"FAIL  {c.detail or c.first_offending}"
            click.echo(f"  {c.name:<22} {status}")
    sys.exit(0 if report.passed else 1)


@main.command("bsone")
@prime_option
@click.option("--k-max", type=click.IntRange(min=0), default=10, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["plain", "json", "csv"]), default="plain", show_default=True)
def bsone_cmd(prime: int, k_max: int, fmt: str) -> None:
    """Degrees |e_k| of the Lewis splitting generators."""
    rows = bsone.splitting_table(prime, k_max)
    if fmt == "json":
        click.echo(json.dumps({"prime": prime, "rows": [
            {"k": k, "fixed": d.fixed, "underlying": d.underlying} for k, d in rows]}, indent=2))
    elif fmt == "csv":
        click.echo("k,fixed,underlying")
        for k, d in rows:
            click.echo(f"{k},{d.fixed},{d.underlying}")
    else:
        click.echo(f"{'k':>5} {'fixed':>7} {'underlying':>10}")
        for k, d in rows:
            click.echo(f"{k:>5} {d.fixed:>7} {d.underlying:>10}")


@main.command("lint")
@prime_option
@click.option("--i-max", type=click.IntRange(min=1), default=3, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["plain", "json"]), default="plain", show_default=True)
def lint_cmd(prime: int, i_max: int, fmt: str) -> None:
    """Exponent of u_lambda in the theta-coefficient: forced by degrees vs printed.

    A mismatch is a finding, not a failure; the exit code is always 0.
    """
    rows = bsone.lint_section4(prime, i_max)
    if fmt == "json":
        click.echo(json.dumps({"prime": prime, "rows": [r.as_dict() for r in rows]}, indent=2))
        return
    click.echo(f"{'i':>3} {'required degree':>16} {'forced':>7} {'printed':>8} {'exponent':>9} {'restriction':>12}")
    for r in rows:
        click.echo(
            f"{r.i:>3} {str(r.required_degree):>16} {r.forced_exponent:>7} {r.printed_exponent:>8} "
            f"{r.exponent_status:>9} {r.restriction_status:>12}"
        )


@main.command("series")
@click.argument("expr_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--lens", type=click.Choice(["underlying", "phi"]), required=True)
@max_degree_option
@click.option("--format", "fmt", type=click.Choice(["plain", "json", "csv"]), default="plain", show_default=True)
def series_cmd(expr_file: Path, lens: str, max_degree: int, fmt: str) -> None:
    """Evaluate an expression stored as a JSON tree."""
    try:
        expr = blocks.loads(expr_file.read_text(encoding="utf-8"))
        s = evaluate(expr, lens, max_degree)
    except ValueError as exc:
        raise click.UsageError(f"{expr_file}: {exc}") from exc
    lo = min(s.lower_bound, 0)
    values = s.values(lo, max_degree)
    if fmt == "json":
        click.echo(json.dumps({"lens": lens, "max_degree": max_degree, "lower_bound": lo, "counts": values}))
    elif fmt == "csv":
        click.echo("degree,count")
        for k, v in enumerate(values):
            click.echo(f"{lo + k},{v}")
    else:
        for k, v in enumerate(values):
            click.echo(f"{lo + k:>6} {v:>10}")


@main.command("identities")
@prime_option
@click.option("--i-max", type=click.IntRange(min=1), default=6, show_default=True)
@click.option("--k-max", type=click.IntRange(min=0), default=10_000, show_default=True)
def identities_cmd(prime: int, i_max: int, k_max: int) -> None:
    """Degree identities: norm/transfer gap, theta twist, |e_k| oracle, suspension degrees."""
    results = degree_identities(prime, i_max=i_max, k_max=k_max)
    for r in results:
        click.echo(f"  {r.name:<20} {'PASS' if r.passed else 'FAIL  ' + r.detail}")
    sys.exit(0 if all(r.passed for r in results) else 1)


if __name__ == "__main__":
    main()
