"""Command-line front end.

Usage:
    partlab count --class Ek --k 3 --n 0..40
    partlab enumerate --class Ck --k 3 --n 9
    partlab map --bijection psi --k 3 --partition "7,6,6,3,2,2,1,1" --trace
    partlab gf --series C --k 3 --order 50 --format csv
    partlab verify --theorem thm1.4 --k 3 --n-max 40

Exit status: 0 on success, 1 when a verification finds a mismatch (the report
is still written), 2 on invalid input.
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from . import bijections as bj
from .classes import ClassSpec, Family, count, enumerate_class, parse_family
from .partition import format_partition, parse_partition
from .qseries import DEFAULT_ORDER, SERIES
from .verification import THEOREMS, verify_theorem

__all__ = ["cli", "main", "parse_range"]

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID = 0, 1, 2
FORMATS = click.Choice(["text", "csv", "json"])


class InvalidInput(click.ClickException):
    exit_code = EXIT_INVALID


def parse_range(text: str) -> range:
    """``"7"`` or inclusive ``"lo..hi"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
        else:
            lo_i = hi_i = int(text)
    except ValueError:
        raise InvalidInput(f"malformed range {text!r}; use N or LO..HI") from None
    if lo_i < 0 or hi_i < lo_i:
        raise InvalidInput(f"empty or negative range {text!r}")
    return range(lo_i, hi_i + 1)


def _spec(name: str, k: int, ek_threshold: str | None) -> ClassSpec:
    try:
        family = parse_family(name)
        return ClassSpec(family, k, ek_threshold if family is Family.E else None)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None


def _emit(document: str, output: str | None) -> None:
    # the whole document is built before anything is written
    if output:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(document)
    else:
        click.echo(document, nl=False)


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


_k_option = click.option("--k", "k", type=int, default=2, show_default=True, help="Modulus k >= 2.")
_format_option = click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
_output_option = click.option("--output", "-o", type=click.Path(dir_okay=False), default=None,
                              help="Write to a file instead of standard output.")
_threshold_option = click.option("--ek-threshold", type=click.Choice(["proof", "literal"]), default="proof",
                                 show_default=True, help="Threshold reading for class Ek.")


@click.group()
def cli() -> None:
    """Enumerate, map and verify k-regular partition identities."""


@cli.command("count")
@click.option("--class", "class_name", required=True, help="Ak, Bk, Bpk, Ck, D or Ek.")
@_k_option
@click.option("--n", "n_range", required=True, help="N or LO..HI (inclusive).")
@_threshold_option
@_format_option
@_output_option
def count_cmd(class_name, k, n_range, ek_threshold, fmt, output):
    """Count members of a partition class."""
    spec = _spec(class_name, k, ek_threshold)
    try:
        rows = [(n, count(spec, n)) for n in parse_range(n_range)]
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    if fmt == "json":
        doc = json.dumps({"class": spec.label, "k": k, "rows": [{"n": n, "count": c} for n, c in rows]}, indent=2) + "\n"
    elif fmt == "csv":
        doc = _csv([("n", "count"), *rows])
    else:
        doc = "".join(f"{n} {c}\n" for n, c in rows)
    _emit(doc, output)


@cli.command("enumerate")
@click.option("--class", "class_name", required=True, help="Ak, Bk, Bpk, Ck, D or Ek.")
@_k_option
@click.option("--n", "n_range", required=True, help="N or LO..HI (inclusive).")
@_threshold_option
@click.option("--compact", is_flag=True, help="Write repeated parts as v^m.")
@_format_option
@_output_option
def enumerate_cmd(class_name, k, n_range, ek_threshold, compact, fmt, output):
    """List members of a partition class in decreasing lexicographic order."""
    spec = _spec(class_name, k, ek_threshold)
    try:
        listing = [(n, enumerate_class(spec, n)) for n in parse_range(n_range)]
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    if fmt == "json":
        doc = json.dumps({
            "class": spec.label,
            "k": k,
            "partitions": {str(n): [format_partition(p, compact) for p in ps] for n, ps in listing},
        }, indent=2) + "\n"
    elif fmt == "csv":
        doc = _csv([("n", "partition"), *((n, format_partition(p, compact)) for n, ps in listing for p in ps)])
    else:
        lines = []
        for n, ps in listing:
            if len(listing) > 1:
                lines.append(f"# n={n} ({len(ps)})")
            lines.extend(format_partition(p, compact) for p in ps)
        doc = "".join(line + "\n" for line in lines)
    _emit(doc, output)


def _trace_text(trace: bj.BijectionTrace, compact: bool) -> str:
    lines = [f"map: {trace.map_name} ({trace.direction}), k={trace.k}",
             f"input: {format_partition(trace.input, compact)}"]
    for step in trace.steps:
        d = step.to_dict()
        emitted = format_partition(step.emitted, compact) or "()"
        if d["kind"] == "alpha":
            lines.append(f"  alpha {d['source']} = {trace.k}^{d['power']}*{d['kfree']} -> ({emitted})")
        elif d["kind"] == "beta":
            digits = ",".join(map(str, d["digits"]))
            lines.append(f"  beta {d['source']}^{d['multiplicity']} digits=[{digits}] t={d['threshold_exponent']} -> ({emitted})")
        elif d["kind"] == "largest":
            lines.append(f"  largest {d['source']} -> ({emitted})")
        else:
            lines.append(f"  merge {d['source']}^{d['multiplicity']}: {d['merged_groups']} x {d['merged_into']}, keep ({emitted})")
    lines.append(f"output: {format_partition(trace.output, compact)}")
    lines.append(f"weight: input {trace.input.weight}, emitted {trace.emitted_weight}, output {trace.output.weight}")
    return "\n".join(lines) + "\n"


@cli.command("map")
@click.option("--bijection", required=True, type=click.Choice(sorted(bj.BIJECTIONS)))
@_k_option
@click.option("--partition", "text", required=True, help='Parts such as "7,6,6,3" or "8,2^2,1^14".')
@click.option("--trace", is_flag=True, help="Include the step-by-step trace.")
@click.option("--compact", is_flag=True, help="Write repeated parts as v^m.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@_output_option
def map_cmd(bijection, k, text, trace, compact, fmt, output):
    """Apply one of the bijections to a partition."""
    try:
        p = parse_partition(text)
        result = bj.BIJECTIONS[bijection](p, k)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    if fmt == "json":
        payload = {"output": format_partition(result.output, compact)}
        if trace:
            payload["trace"] = result.to_dict()
        doc = json.dumps(payload, indent=2) + "\n"
    elif trace:
        doc = _trace_text(result, compact)
    else:
        doc = format_partition(result.output, compact) + "\n"
    _emit(doc, output)


@cli.command("gf")
@click.option("--series", "name", required=True, type=click.Choice(sorted(SERIES)))
@_k_option
@click.option("--order", type=int, default=DEFAULT_ORDER, show_default=True, help="Truncation order N.")
@_format_option
@_output_option
def gf_cmd(name, k, order, fmt, output):
    """Coefficients of a generating function up to q^N."""
    if order < 0:
        raise InvalidInput("order must be nonnegative")
    try:
        s = SERIES[name](k, order)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    if fmt == "json":
        doc = json.dumps([str(c) for c in s.coeffs]) + "\n"
    elif fmt == "csv":
        doc = _csv([("n", "coefficient"), *enumerate(s.coeffs)])
    else:
        doc = "".join(f"{n} {c}\n" for n, c in enumerate(s.coeffs))
    _emit(doc, output)


@cli.command("verify")
@click.option("--theorem", required=True, type=click.Choice(THEOREMS))
@_k_option
@click.option("--n-max", type=int, required=True)
@click.option("--n-min", type=int, default=0, show_default=True)
@click.option("--counts-only", is_flag=True, help="Skip the exhaustive bijection sweep.")
@_format_option
@_output_option
def verify_cmd(theorem, k, n_max, n_min, counts_only, fmt, output):
    """Check an identity exhaustively; exits 1 if anything disagrees."""
    try:
        report = verify_theorem(theorem, k, n_max, n_min=n_min, bijections=not counts_only)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    doc = {"json": report.to_json, "csv": report.to_csv, "text": report.to_text}[fmt]()
    _emit(doc, output)
    sys.exit(EXIT_OK if report.passed else EXIT_MISMATCH)


def main(argv=None) -> None:
    cli.main(args=argv, prog_name="partlab")


if __name__ == "__main__":
    main()
