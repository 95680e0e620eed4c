"""Command-line interface.

Subcommands: ``disk`` (numerical disk spectrum against closed forms),
``polygon`` (one polygon spectrum), ``paradox`` (the polygon-family
convergence table), and ``validate`` (the built-in check suite).
"""

from __future__ import annotations

import json
import sys
import time

import click

from .experiments import (
    ParadoxConfig,
    run_disk_validation,
    run_paradox,
    run_validation_suite,
    table_to_csv,
    table_to_dict,
    write_csv,
    write_json,
)
from .geometry import regular_polygon
from .solver import (
    DEFAULT_CLUSTER_TOL,
    DEFAULT_NULL_THRESHOLD,
    cluster_multiplicities,
    compute_spectrum,
)


def _parse_k_list(_ctx, _param, value: str) -> tuple[int, ...]:
    try:
        ks = tuple(int(part) for part in value.split(",") if part.strip())
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")
    if not ks:
        raise click.BadParameter("k-list is empty")
    return ks


def _tolerance_options(fn):
    fn = click.option(
        "--null-threshold",
        type=float,
        default=DEFAULT_NULL_THRESHOLD,
        show_default=True,
        help="Relative eigenvalue cutoff when filtering the interior Gram null space.",
    )(fn)
    fn = click.option(
        "--cluster-tol",
        type=float,
        default=DEFAULT_CLUSTER_TOL,
        show_default=True,
        help="Relative tolerance for grouping eigenvalues into multiplicity clusters.",
    )(fn)
    return fn


@click.group()
def main():
    """Dirichlet-biharmonic-Steklov eigenvalues on convex planar domains."""


@main.command()
@click.option("--n-max", type=int, required=True, help="Number of eigenvalues.")
@click.option("--degree", type=int, required=True, help="Harmonic polynomial degree.")
@click.option("--radius", type=float, default=1.0, show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@_tolerance_options
def disk(n_max, degree, radius, output, fmt, null_threshold, cluster_tol):
    """Numerical disk spectrum compared against the closed-form values."""
    try:
        report = run_disk_validation(
            n_max, degree, radius=radius, null_threshold=null_threshold, cluster_tol=cluster_tol
        )
    except ValueError as exc:
        raise click.ClickException(str(exc))
    click.echo(f"disk radius {radius:g}, degree {degree}, n_max {n_max}")
    click.echo(f"{'n':>3} {'computed':>18} {'exact':>12} {'abs error':>12}")
    for i, (c, e) in enumerate(zip(report.computed, report.exact), start=1):
        click.echo(f"{i:>3} {c:>18.12g} {e:>12.6g} {abs(c - e):>12.3e}")
    click.echo(f"max abs error {report.max_abs_error:.3e}  ({report.elapsed_seconds * 1e3:.2f} ms)")
    if output:
        if fmt == "csv":
            lines = ["n,computed,exact,abs_err"]
            for i, (c, e) in enumerate(zip(report.computed, report.exact), start=1):
                lines.append(f"{i},{c:.12g},{e:.12g},{abs(c - e):.12g}")
            with open(output, "w", encoding="ascii", newline="\n") as fh:
                fh.write("\n".join(lines) + "\n")
        else:
            payload = {
                "radius": radius,
                "degree": degree,
                "n_max": n_max,
                "computed": list(report.computed),
                "exact": list(report.exact),
                "max_abs_error": report.max_abs_error,
                "multiplicities": list(report.multiplicities),
            }
            with open(output, "w", encoding="ascii", newline="\n") as fh:
                json.dump(payload, fh, indent=2)
                fh.write("\n")
        click.echo(f"wrote {output}")


@main.command()
@click.option("--k", type=int, required=True, help="Number of polygon sides.")
@click.option("--mode", type=click.Choice(["inscribed", "circumscribed"]), required=True)
@click.option("--radius", type=float, default=1.0, show_default=True)
@click.option("--degree", type=int, required=True, help="Harmonic polynomial degree.")
@click.option("--n-max", type=int, required=True)
@click.option("--basis", type=click.Choice(["poly", "mfs"]), default="poly", show_default=True)
@click.option("--mfs-size", type=int, default=None, help="Source count for the MFS basis.")
@_tolerance_options
def polygon(k, mode, radius, degree, n_max, basis, mfs_size, null_threshold, cluster_tol):
    """Spectrum of one regular polygon."""
    if basis == "mfs" and not mfs_size:
        raise click.ClickException("--basis mfs requires --mfs-size")
    try:
        poly = regular_polygon(k, radius, mode)
        spectrum = compute_spectrum(
            poly,
            method=basis,
            degree_or_size=mfs_size if basis == "mfs" else degree,
            n_max=n_max,
            rel_threshold=null_threshold,
        )
    except ValueError as exc:
        raise click.ClickException(str(exc))
    click.echo(f"{mode} {k}-gon, radius {radius:g}, {basis} basis "
               f"(dimension {spectrum.basis_dimension}, retained {spectrum.retained_dim})")
    for i, v in enumerate(spectrum.values, start=1):
        click.echo(f"delta_{i} = {v:.12g}")
    if spectrum.truncated:
        click.echo(f"note: only {len(spectrum.values)} of {n_max} requested values available")
    clusters = cluster_multiplicities(spectrum, cluster_tol)
    pretty = ", ".join(f"{v:.9g} (x{m})" for v, m in clusters.clusters)
    click.echo(f"clusters: {pretty}")
    click.echo(f"perimeter/area bound: {spectrum.boundary_over_area:.12g}")
    click.echo(f"interior Gram condition number: {spectrum.cond_interior:.3e}")


@main.command()
@click.option("--k-list", callback=_parse_k_list, required=True,
              help="Comma-separated polygon side counts, strictly increasing.")
@click.option("--mode", type=click.Choice(["inscribed", "circumscribed"]), required=True)
@click.option("--radius", type=float, default=1.0, show_default=True)
@click.option("--degree", type=int, required=True, help="Harmonic polynomial degree.")
@click.option("--n-max", type=int, required=True)
@click.option("--basis", type=click.Choice(["poly", "mfs"]), default="poly", show_default=True)
@click.option("--mfs-size", type=int, default=None)
@click.option("--strict", is_flag=True,
              help="Exit nonzero if any error column fails its monotone decrease check.")
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@_tolerance_options
def paradox(k_list, mode, radius, degree, n_max, basis, mfs_size, strict, output, fmt,
            null_threshold, cluster_tol):
    """Convergence table for regular polygons approximating the disk."""
    try:
        config = ParadoxConfig(
            k_list=k_list,
            mode=mode,
            n_max=n_max,
            degree=degree,
            radius=radius,
            method=basis,
            mfs_size=mfs_size,
            null_threshold=null_threshold,
            cluster_tol=cluster_tol,
        )
    except ValueError as exc:
        raise click.ClickException(str(exc))
    started = time.perf_counter()
    table = run_paradox(config)
    elapsed = time.perf_counter() - started
    text = table_to_csv(table) if fmt == "csv" else json.dumps(table_to_dict(table), indent=2) + "\n"
    if output:
        if fmt == "csv":
            write_csv(table, output)
        else:
            write_json(table, output)
        click.echo(f"wrote {output} ({elapsed:.2f} s)")
    else:
        click.echo(text, nl=False)
    failures = [row for row in table.rows if row.failed]
    for row in failures:
        click.echo(f"row k={row.k} failed: {row.failure}", err=True)
    violations = table.monotone_violations()
    for n, k_from, k_to, e0, e1 in violations:
        click.echo(
            f"monotonicity violation: err_{n} rose from {e0:.6g} (k={k_from}) "
            f"to {e1:.6g} (k={k_to})",
            err=True,
        )
    if strict and (violations or failures):
        sys.exit(1)


@main.command()
@_tolerance_options
def validate(null_threshold, cluster_tol):
    """Run the built-in validation suite; exit 0 only if every check passes."""
    checks = run_validation_suite(null_threshold=null_threshold, cluster_tol=cluster_tol)
    width = max(len(c.name) for c in checks)
    all_ok = True
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        all_ok &= check.passed
        detail = f"  [{check.detail}]" if check.detail else ""
        click.echo(f"{status}  {check.name:<{width}}{detail}")
    if not all_ok:
        sys.exit(1)
    click.echo("all checks passed")


if __name__ == "__main__":
    main()
