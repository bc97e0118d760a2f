"""Command-line surface: document checking, analysis reports, the
categorification obstruction pipeline, character-table checks, S-matrices,
and corank-one extensions.

Exit codes: 0 = command completed (any verdict), 1 = validation failure,
2 = operational error (unreadable or malformed input).  Documents are the
JSON envelopes of the serialize module; bare names are resolved against
the bundled corpus, or against the directory named by MRFW_CORPUS.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Optional

import click

from .chartab import theorem57_check, validate_table
from .mr import (
    grading_forcing_check,
    integrality_class,
    prime_rank_check,
    spherical_witness,
)
from .obstruction import (
    DEFAULT_NODE_CAP,
    FEASIBLE_MEANING,
    classify_rank4_mr,
    obstruct,
)
from .premodular import degeneracy_class, premodular_data
from .ring import (
    FusionRing,
    InvalidRingError,
    adjoint_and_grading,
    detect_mr,
    fpdims,
    invertibles,
    validate,
)
from .scalars import ExactnessError, UnsupportedFieldError
from .serialize import (
    DocumentError,
    canonical_dumps,
    load_document,
    premodular_from_payload,
    report_doc,
    ring_from_payload,
    ring_to_doc,
    scalar_to_json,
    table_from_payload,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_OPERATIONAL = 2


def corpus_dir() -> Path:
    override = os.environ.get("MRFW_CORPUS")
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "corpus"


def resolve_document(ref: str) -> dict:
    """Load a document from a path, or from the corpus by bare name."""
    p = Path(ref)
    if p.exists():
        return load_document(p)
    candidate = corpus_dir() / f"{ref}.json"
    if candidate.exists():
        return load_document(candidate)
    raise FileNotFoundError(f"no such file or corpus entry: {ref}")


def _load_ring(ref: str) -> FusionRing:
    doc = resolve_document(ref)
    if doc["kind"] != "ring":
        raise DocumentError(f"expected a ring document, got {doc['kind']!r}")
    return ring_from_payload(doc["payload"])


def _emit(doc: dict) -> None:
    click.echo(canonical_dumps(doc), nl=False)


def _operational(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    raise SystemExit(EXIT_OPERATIONAL)


@click.group()
def main() -> None:
    """Exact-arithmetic workbench for corank-one fusion rings."""


@main.command()
@click.argument("ref")
def check(ref: str) -> None:
    """Validate a document (ring axioms or table orthogonality)."""
    try:
        doc = resolve_document(ref)
    except (OSError, DocumentError) as exc:
        _operational(exc)
    kind = doc["kind"]
    if kind == "ring":
        ring = ring_from_payload(doc["payload"])
        problems = [str(v) for v in validate(ring)]
    elif kind == "chartable":
        problems = validate_table(table_from_payload(doc["payload"]))
    elif kind == "premodular":
        ring, dims, twists = premodular_from_payload(doc["payload"])
        problems = [str(v) for v in validate(ring)]
        if not problems:
            try:
                premodular_data(ring, dims, twists)
            except (ValueError, UnsupportedFieldError) as exc:
                problems = [str(exc)]
    else:
        problems = []
    if problems:
        for line in problems:
            click.echo(f"INVALID: {line}")
        raise SystemExit(EXIT_INVALID)
    click.echo(f"valid {kind} document")


@main.command()
@click.argument("ref")
def report(ref: str) -> None:
    """One-page exact analysis of a ring document."""
    try:
        ring = _load_ring(ref)
    except (OSError, DocumentError) as exc:
        _operational(exc)
    problems = validate(ring)
    if problems:
        click.echo(f"INVALID: {problems[0]}")
        raise SystemExit(EXIT_INVALID)
    click.echo(f"rank {ring.rank} basis ({', '.join(ring.labels)})")
    dims = fpdims(ring)
    click.echo(
        "FP dims: "
        + ", ".join(str(d) for d in dims.dims)
        + f"; global dim {dims.total()}"
    )
    group = invertibles(ring)
    if len(group.elements) == ring.rank:
        click.echo("pointed: every basis element is invertible")
    mr = detect_mr(ring)
    if mr is None:
        click.echo("no corank-one subring structure")
        return
    click.echo(f"MR(a={mr.a}, kappa={mr.kappa}); extra object {ring.labels[mr.extra]}")
    if len(group.elements) == ring.rank - 1 and mr.extra not in group.elements:
        click.echo("near-group: all non-extra basis elements invertible")
    klass = integrality_class(mr.a, mr.kappa)
    click.echo(f"integrality class: {klass}")
    grading = adjoint_and_grading(ring)
    if grading.group_order > 1:
        line = f"faithfully graded by a group of order {grading.group_order}"
        if grading.rank_one_components:
            line += "; has a rank-1 component (fiber-functor flag)"
        click.echo(line)
    cert = spherical_witness(mr.a, mr.kappa)
    click.echo(f"spherical certificate: conclusion {cert.conclusion}")
    prime = prime_rank_check(ring, mr)
    for line in prime.lines:
        click.echo(f"prime-rank: {line}")
    if klass == "integral":
        try:
            forcing = grading_forcing_check(ring, mr)
        except ValueError:
            forcing = None
        if forcing is not None:
            click.echo(
                f"grading forcing: kappa = {forcing.kappa} forces a "
                f"Z_{forcing.grading_group_order} grading"
            )


def _verdict_payload(ring: FusionRing, verdict, node_cap: int) -> dict:
    payload = {
        "ring": ring_to_doc(ring)["payload"],
        "node_cap": node_cap,
        "status": verdict.status,
        "stage": verdict.stage,
        "steps": list(verdict.steps),
        "meaning": FEASIBLE_MEANING,
    }
    if verdict.witness is not None:
        payload["witness"] = [list(r) for r in verdict.witness.all_rows()]
    return payload


@main.command(name="obstruct")
@click.argument("ref", required=False)
@click.option("--sweep", is_flag=True, help="classify both rank-4 bases per kappa")
@click.option("--kappa-max", type=int, default=60, show_default=True)
@click.option("--node-cap", type=int, default=DEFAULT_NODE_CAP, show_default=True)
@click.option("--jobs", type=int, default=None, help="worker processes for sweeps")
@click.option("--replay", type=click.Path(exists=False), default=None,
              help="re-run a certificate document and compare verdicts")
def obstruct_cmd(
    ref: Optional[str],
    sweep: bool,
    kappa_max: int,
    node_cap: int,
    jobs: Optional[int],
    replay: Optional[str],
) -> None:
    """Run the categorification obstruction pipeline."""
    if replay is not None:
        try:
            doc = load_document(replay)
        except (OSError, DocumentError) as exc:
            _operational(exc)
        payload = doc["payload"]
        ring = ring_from_payload(payload["ring"])
        verdict = obstruct(ring, node_cap=int(payload.get("node_cap", node_cap)))
        same = (
            verdict.status == payload.get("status")
            and verdict.stage == payload.get("stage")
        )
        click.echo(
            f"replay: {verdict.status} at stage {verdict.stage} "
            f"({'match' if same else 'MISMATCH'})"
        )
        raise SystemExit(EXIT_OK if same else EXIT_INVALID)
    if sweep:
        table = classify_rank4_mr(kappa_max, node_cap=node_cap, jobs=jobs)
        payload = {
            "kappa_max": table.kappa_max,
            "columns": list(table.columns),
            "verdicts": [
                {"kappa": k, "statuses": list(row)} for k, row in table.verdicts
            ],
            "survivors": {c: table.survivors(c) for c in table.columns},
            "meaning": FEASIBLE_MEANING,
        }
        _emit(report_doc(payload))
        return
    if ref is None:
        raise click.UsageError("provide a ring document or use --sweep")
    try:
        ring = _load_ring(ref)
    except (OSError, DocumentError) as exc:
        _operational(exc)
    try:
        verdict = obstruct(ring, node_cap=node_cap)
    except InvalidRingError as exc:
        click.echo(f"INVALID: {exc}", err=True)
        raise SystemExit(EXIT_INVALID)
    except ExactnessError as exc:
        _operational(exc)
    _emit(report_doc(_verdict_payload(ring, verdict, node_cap)))


@main.command()
@click.argument("ref")
def gagola(ref: str) -> None:
    """Two-class nonvanishing criterion versus corank-one subring."""
    try:
        doc = resolve_document(ref)
    except (OSError, DocumentError) as exc:
        _operational(exc)
    if doc["kind"] != "chartable":
        _operational(DocumentError(f"expected a chartable document, got {doc['kind']!r}"))
    table = table_from_payload(doc["payload"])
    try:
        rep = theorem57_check(table)
    except ValueError as exc:
        click.echo(f"INVALID: {exc}")
        raise SystemExit(EXIT_INVALID)
    if rep.holds:
        click.echo(
            f"criterion holds: character {rep.witness.char_index} is "
            f"supported on classes {list(rep.witness.nonvanishing_classes)}; "
            f"subring basis {list(rep.mr_basis)}"
        )
    else:
        click.echo("criterion fails on both sides (no witness, no corank-one subring)")


@main.command()
@click.argument("ref")
def smatrix(ref: str) -> None:
    """S-matrix and degeneracy class of a premodular document."""
    try:
        doc = resolve_document(ref)
    except (OSError, DocumentError) as exc:
        _operational(exc)
    if doc["kind"] != "premodular":
        _operational(DocumentError(f"expected a premodular document, got {doc['kind']!r}"))
    ring, dims, twists = premodular_from_payload(doc["payload"])
    try:
        data = premodular_data(ring, dims, twists)
    except (ValueError, UnsupportedFieldError) as exc:
        click.echo(f"INVALID: {exc}", err=True)
        raise SystemExit(EXIT_INVALID)
    degeneracy = degeneracy_class(data)
    payload = {
        "S": [[scalar_to_json(v) for v in row] for row in data.S],
        "degeneracy": degeneracy.label,
        "center": sorted(degeneracy.center),
        "svec_center": degeneracy.svec_center,
    }
    _emit(report_doc(payload))


@main.command()
@click.argument("ref")
@click.option("--kappa", type=int, required=True)
@click.option("--label", default="Z", show_default=True, help="label of the new element")
def extend(ref: str, kappa: int, label: str) -> None:
    """Corank-one extension of an integral base ring."""
    try:
        ring = _load_ring(ref)
    except (OSError, DocumentError) as exc:
        _operational(exc)
    from .mr import mr_extend

    try:
        extended = mr_extend(ring, kappa, extra_label=label)
    except ValueError as exc:
        click.echo(f"INVALID: {exc}", err=True)
        raise SystemExit(EXIT_INVALID)
    _emit(ring_to_doc(extended))


if __name__ == "__main__":
    main()
