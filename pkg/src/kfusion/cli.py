"""Command line interface.

Exit codes: 0 on success, 1 for malformed input, 2 for domain errors,
which are reported as "ErrorClass: message" on stderr.  Output is
deterministic byte for byte for a fixed job and seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .affine import canonicalize, enumerate_regular_orbits, level_form, level_form_from_rep
from .checks import run_checks
from .detect import antisymmetrize, detection_matrix
from .errors import KfusionError
from .fusion import coform, fusion_ring, identity_class
from .roots import build_root_datum, parse_lie_type
from .torsion import restrict_character, torsion_subgroup

COMMANDS = ("basis", "identity", "theta", "fusion-table", "coform", "check")


class UsageError(Exception):
    pass


@dataclass
class Job:
    """A fully parsed CLI request."""

    command: str
    type_name: str
    level: int | None = None
    rep: tuple[int, ...] | None = None
    chi: tuple[int, ...] | None = None
    omega: tuple[int, ...] | None = None
    fmt: str = "pretty"
    seed: int = 0
    out: str | None = None
    matrix: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _coords(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> _Parser:
    parser = _Parser(prog="kfusion", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--type", required=True, dest="type_name", metavar="XN")
        p.add_argument("--level", type=int)
        p.add_argument("--rep", type=_coords, metavar="COORDS")
        p.add_argument(
            "--format", dest="fmt", choices=("pretty", "json", "csv"), default="pretty"
        )
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out")
        if name == "theta":
            p.add_argument("--chi", type=_coords, required=True, metavar="COORDS")
            p.add_argument("--matrix", action="store_true")
        if name == "coform":
            p.add_argument("--omega", type=_coords, metavar="COORDS")
    return parser


def parse_job(argv) -> Job:
    args = build_parser().parse_args(argv)
    job = Job(
        command=args.command,
        type_name=args.type_name,
        level=args.level,
        rep=args.rep,
        chi=getattr(args, "chi", None),
        omega=getattr(args, "omega", None),
        fmt=args.fmt,
        seed=args.seed,
        out=args.out,
        matrix=getattr(args, "matrix", False),
    )
    if job.level is None and job.rep is None:
        raise UsageError("one of --level or --rep is required")
    if job.level is not None and job.rep is not None:
        raise UsageError("--level and --rep are mutually exclusive")
    if job.level is not None and job.level <= 0:
        raise UsageError("level must be positive")
    if job.rep is not None and any(x < 0 for x in job.rep):
        raise UsageError("--rep must be a dominant weight")
    return job


def _resolve(job: Job):
    datum = build_root_datum(parse_lie_type(job.type_name))
    if job.rep is not None:
        if len(job.rep) != datum.rank:
            raise UsageError(f"--rep must have {datum.rank} coordinates")
        lf = level_form_from_rep(datum, job.rep)
    else:
        lf = level_form(datum, job.level)
    for name, coords in (("--chi", job.chi), ("--omega", job.omega)):
        if coords is not None and len(coords) != datum.rank:
            raise UsageError(f"{name} must have {datum.rank} coordinates")
    return datum, lf


def _emit(job: Job, text: str) -> None:
    if job.out:
        with open(job.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json(document) -> str:
    return json.dumps(document, separators=(", ", ": ")) + "\n"


def _csv(rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


def _run_basis(job: Job) -> int:
    datum, lf = _resolve(job)
    reps = enumerate_regular_orbits(lf)
    if job.fmt == "json":
        _emit(job, _json({"basis": [list(rep.weight) for rep in reps]}))
    elif job.fmt == "csv":
        header = [f"w{i + 1}" for i in range(datum.rank)]
        _emit(job, _csv([header] + [list(rep.weight) for rep in reps]))
    else:
        lines = [f"{len(reps)} regular orbit classes at level {lf.level}"]
        lines += [f"  E{rep.weight}" for rep in reps]
        _emit(job, "\n".join(lines) + "\n")
    return 0


def _run_identity(job: Job) -> int:
    datum, lf = _resolve(job)
    unit = identity_class(lf)
    reps = enumerate_regular_orbits(lf)
    index = unit.coeffs.index(1)
    weight = reps[index].weight
    if job.fmt == "json":
        _emit(job, _json({
            "identity": list(unit.coeffs),
            "weight": list(weight),
            "index": index,
        }))
    elif job.fmt == "csv":
        _emit(job, _csv([["index"] + [f"w{i + 1}" for i in range(datum.rank)],
                          [index] + list(weight)]))
    else:
        _emit(job, f"identity class E{weight} at index {index}\n")
    return 0


def _character_doc(char) -> dict:
    return {"residues": list(char.dual), "divisors": list(char.divisors)}


def _run_theta(job: Job) -> int:
    datum, lf = _resolve(job)
    group = torsion_subgroup(lf)
    rep, sign = canonicalize(lf, job.chi)
    image = antisymmetrize(lf, job.chi, group)
    terms = [
        {"coeff": c, **_character_doc(char)} for char, c in image.coeffs
    ]
    document = {
        "chi": list(job.chi),
        "canonical": list(rep.weight),
        "sign": sign,
        "terms": terms,
    }
    if job.matrix:
        dm = detection_matrix(lf, group)
        document["matrix"] = {
            "cyclotomic_order": dm.ring.order,
            "rows": [list(r.weight) for r in dm.basis],
            "columns": [[str(x) for x in f.coords] for f in dm.columns],
            "entries": [[list(e) for e in row] for row in dm.entries],
        }
    if job.fmt == "json":
        _emit(job, _json(document))
    elif job.fmt == "csv":
        rows = [["coeff"] + [f"n{i + 1}" for i in range(len(group.elementary_divisors))]]
        rows += [[c] + list(char.dual) for char, c in image.coeffs]
        _emit(job, _csv(rows))
    else:
        lines = [f"theta(E{tuple(job.chi)}) with {len(terms)} signed characters:"]
        for char, c in image.coeffs:
            marker = "+" if c > 0 else "-"
            lines.append(f"  {marker} chi{char.dual} over Z/{char.divisors}")
        if job.matrix:
            lines.append(json.dumps({"matrix": document["matrix"]}))
        _emit(job, "\n".join(lines) + "\n")
    return 0


def _run_fusion_table(job: Job) -> int:
    datum, lf = _resolve(job)
    ring = fusion_ring(lf)
    if job.fmt == "json":
        document = {
            "type": str(datum.lie_type),
            "level": lf.level,
            "basis": [list(rep.weight) for rep in ring.basis],
            "identity": list(ring.identity.coeffs),
            "N": [[list(row) for row in plane] for plane in ring.structure_constants],
        }
        _emit(job, _json(document))
    elif job.fmt == "csv":
        rows = [["lambda", "mu", "nu", "N"]]
        for a in range(ring.dim):
            for b in range(ring.dim):
                for c in range(ring.dim):
                    rows.append([a, b, c, ring.structure_constants[a][b][c]])
        _emit(job, _csv(rows))
    else:
        lines = [
            f"fusion ring of {datum.lie_type} at level {lf.level}: "
            f"{ring.dim} classes"
        ]
        for a in range(ring.dim):
            for b in range(a, ring.dim):
                terms = [
                    (ring.structure_constants[a][b][c], ring.basis[c].weight)
                    for c in range(ring.dim)
                    if ring.structure_constants[a][b][c]
                ]
                rhs = " + ".join(
                    (f"{n}*" if n != 1 else "") + f"E{w}" for n, w in terms
                ) or "0"
                lines.append(
                    f"  E{ring.basis[a].weight} * E{ring.basis[b].weight} = {rhs}"
                )
        if ring.diagnostics:
            lines += [f"  warning: {d}" for d in ring.diagnostics]
        _emit(job, "\n".join(lines) + "\n")
    return 0


def _run_coform(job: Job) -> int:
    datum, lf = _resolve(job)
    result = coform(lf, job.omega)
    if job.fmt == "json":
        _emit(job, _json({
            "type": str(datum.lie_type),
            "level": lf.level,
            "omega": list(result.omega),
            "overall_sign": result.overall_sign,
            "matrix": [list(row) for row in result.matrix],
        }))
    elif job.fmt == "csv":
        rows = [["i", "j", "a"]]
        for i, row in enumerate(result.matrix):
            for j, value in enumerate(row):
                rows.append([i, j, value])
        _emit(job, _csv(rows))
    else:
        lines = [f"coform at omega = {result.omega} (overall sign conventional):"]
        lines += ["  " + " ".join(f"{x:+d}" for x in row) for row in result.matrix]
        _emit(job, "\n".join(lines) + "\n")
    return 0


def _run_check(job: Job) -> int:
    datum, lf = _resolve(job)
    results = run_checks(str(datum.lie_type), lf.level, job.seed)
    ok = all(r.passed for r in results)
    if job.fmt == "json":
        _emit(job, _json({
            "type": str(datum.lie_type),
            "level": lf.level,
            "seed": job.seed,
            "passed": ok,
            "results": [
                {"name": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
        }))
    elif job.fmt == "csv":
        rows = [["name", "passed", "detail"]]
        rows += [[r.name, int(r.passed), r.detail] for r in results]
        _emit(job, _csv(rows))
    else:
        lines = [
            f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in results
        ]
        lines.append(f"{'all checks passed' if ok else 'CHECKS FAILED'}")
        _emit(job, "\n".join(lines) + "\n")
    return 0 if ok else 2


_RUNNERS = {
    "basis": _run_basis,
    "identity": _run_identity,
    "theta": _run_theta,
    "fusion-table": _run_fusion_table,
    "coform": _run_coform,
    "check": _run_check,
}


def run(job: Job) -> int:
    return _RUNNERS[job.command](job)


def main(argv=None) -> int:
    try:
        job = parse_job(argv if argv is not None else sys.argv[1:])
        return run(job)
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 1
    except KfusionError as err:
        print(f"{type(err).__name__}: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
