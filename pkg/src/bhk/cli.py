"""Command line interface. One JSON report document per invocation, NDJSON for
batch; exit status 0 on success, 1 for input or adequacy errors, 2 when an
internal cross-check fails."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .arith import Matrix4, matrix4
from .delsarte import Characteristic, DelsarteMatrix, build_delsarte
from .duality import BhkPair, MirrorPair, dual_group, make_pair, mirror_pair
from .errors import (
    InputError,
    InternalCheckError,
    NotInvertiblePotential,
    ParseError,
    SemanticError,
)
from .picard import (
    picard_by_counting,
    picard_by_orbits,
    picard_closed_form,
    picard_report,
    prime_scan,
    transcendental_set,
)
from .smoothness import AdequacyReport, Chain, Fermat, Loop, atomic_decomposition
from .symmetry import (
    SymmetrySubgroup,
    aut_group,
    enumerate_intermediate,
    j_subgroup,
    sl_subgroup,
    subgroup_generated,
)

TOOL_VERSION = "0.1.0"

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2

_ALLOWED_KEYS = {"matrix", "group", "characteristic"}


@dataclass(frozen=True)
class InputSpec:
    """Parsed input document: matrix rows, group selector, characteristic."""

    matrix: Matrix4
    group_spec: str | tuple
    characteristic: int


def parse_input(text: str) -> InputSpec:
    """Parse one input document; strict about keys and shapes."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid JSON: {err}") from err
    if not isinstance(data, dict):
        raise ParseError(f"expected a JSON object, got {type(data).__name__}")
    unknown = sorted(set(data) - _ALLOWED_KEYS)
    if unknown:
        raise ParseError(f"unknown keys: {', '.join(unknown)}")
    if "matrix" not in data:
        raise ParseError("missing key: matrix")
    try:
        matrix = matrix4(data["matrix"])
    except (TypeError, ValueError) as err:
        raise ParseError(f"field 'matrix': {err}") from err

    group = data.get("group", "J")
    if isinstance(group, str):
        if group not in ("J", "SL"):
            raise ParseError(f"field 'group': expected 'J', 'SL', or generators, got {group!r}")
        group_spec: str | tuple = group
    elif isinstance(group, dict):
        extra = sorted(set(group) - {"generators"})
        if extra:
            raise ParseError(f"field 'group': unknown keys: {', '.join(extra)}")
        if "generators" not in group:
            raise ParseError("field 'group': missing key: generators")
        gens = group["generators"]
        if not isinstance(gens, list) or not gens:
            raise ParseError("field 'group.generators': expected a nonempty list")
        rows = []
        for i, g in enumerate(gens):
            if (
                not isinstance(g, list)
                or len(g) != 4
                or any(not isinstance(x, int) or isinstance(x, bool) for x in g)
            ):
                raise ParseError(f"field 'group.generators[{i}]': expected 4 integers")
            rows.append(tuple(g))
        group_spec = tuple(rows)
    else:
        raise ParseError(f"field 'group': expected a string or object, got {type(group).__name__}")

    char = data.get("characteristic", 0)
    if not isinstance(char, int) or isinstance(char, bool) or char < 0:
        raise ParseError(f"field 'characteristic': expected a nonnegative integer, got {char!r}")
    return InputSpec(matrix=matrix, group_spec=group_spec, characteristic=char)


@dataclass
class _Workspace:
    spec: InputSpec
    char: Characteristic
    matrix: DelsarteMatrix
    aut: SymmetrySubgroup
    sl: SymmetrySubgroup
    j_group: SymmetrySubgroup
    pair: BhkPair


def _resolve(spec: InputSpec, *, force_char: int | None = None) -> _Workspace:
    """Build all core objects from a parsed input; semantic errors surface here."""
    char_value = spec.characteristic if force_char is None else force_char
    try:
        char = Characteristic(char_value)
    except ValueError as err:
        raise SemanticError(str(err)) from err
    m = build_delsarte(spec.matrix, char)
    aut = aut_group(m)
    sl = sl_subgroup(aut)
    try:
        jg = j_subgroup(m)
    except ValueError as err:
        raise SemanticError(str(err)) from err
    if spec.group_spec == "J":
        group = jg
    elif spec.group_spec == "SL":
        group = sl
    else:
        group = subgroup_generated(m.exponent, spec.group_spec)
        for g in group.generators:
            if g not in sl:
                raise SemanticError(
                    f"generator {list(g.coords)} is outside the coordinate-sum-zero kernel"
                )
    pair = make_pair(m, group, char)
    return _Workspace(spec=spec, char=char, matrix=m, aut=aut, sl=sl, j_group=jg, pair=pair)


def _echo(spec: InputSpec) -> dict:
    if isinstance(spec.group_spec, str):
        group = spec.group_spec
    else:
        group = {"generators": [list(g) for g in spec.group_spec]}
    return {
        "matrix": [list(r) for r in spec.matrix],
        "group": group,
        "characteristic": spec.characteristic,
    }


def _delsarte_section(m: DelsarteMatrix) -> dict:
    return {
        "det": m.det,
        "weights": list(m.weights),
        "degree": m.degree,
        "exponent": m.exponent,
        "b_matrix": [list(r) for r in m.b_matrix],
    }


def _atoms_section(m: DelsarteMatrix):
    try:
        dec = atomic_decomposition(m)
    except NotInvertiblePotential:
        return None
    out = []
    for atom in dec.atoms:
        if isinstance(atom, Fermat):
            out.append({"kind": "fermat", "variable": atom.variable, "exponent": atom.exponent})
        elif isinstance(atom, Chain):
            out.append(
                {
                    "kind": "chain",
                    "variables": list(atom.variables),
                    "exponents": list(atom.exponents),
                }
            )
        elif isinstance(atom, Loop):
            out.append(
                {
                    "kind": "loop",
                    "variables": list(atom.variables),
                    "exponents": list(atom.exponents),
                }
            )
    return out


def _adequacy_section(report: AdequacyReport) -> dict:
    return {
        "quasi_smooth": report.quasi_smooth,
        "well_formed": report.well_formed,
        "weight_triple_gcd_ok": report.weight_triple_gcd_ok,
        "char_ok": report.char_ok,
        "verdict": report.verdict,
        "diagnostics": list(report.diagnostics),
    }


def _groups_section(ws: _Workspace) -> dict:
    return {
        "aut_order": ws.aut.order,
        "sl_order": ws.sl.order,
        "j_order": ws.j_group.order,
        "group_order": ws.pair.group.order,
        "j": list(ws.j_group.generators[0].coords),
        "group_generators": [list(g.coords) for g in ws.pair.group.generators],
    }


def _mirror_section(ws: _Workspace, mp: MirrorPair) -> dict:
    mt = mp.mirror.matrix
    slt = sl_subgroup(aut_group(mt))
    jt = j_subgroup(mt)
    dual_of_j = dual_group(make_pair(ws.matrix, ws.j_group, ws.char))
    dual_of_sl = dual_group(make_pair(ws.matrix, ws.sl, ws.char))
    return {
        "weights": list(mt.weights),
        "degree": mt.degree,
        "exponent": mt.exponent,
        "det": mt.det,
        "j_dual_order": jt.order,
        "sl_dual_order": slt.order,
        "group_dual": {
            "order": mp.mirror.group.order,
            "generators": [list(g.coords) for g in mp.mirror.group.generators],
        },
        "dual_of_j_order": dual_of_j.order,
        "dual_of_sl_order": dual_of_sl.order,
        "dual_of_j_equals_mirror_sl": dual_of_j == slt,
        "dual_of_sl_equals_mirror_j": dual_of_sl == jt,
        "adequacy": _adequacy_section(mp.mirror.adequacy),
    }


def _picard_section(mp: MirrorPair, method: str) -> dict:
    if method == "all":
        report = picard_report(mp)
        return {
            "rho_primal": report.rho_primal,
            "rho_mirror": report.rho_mirror,
            "characteristic": report.characteristic,
            "methods": {
                name: {"rho_primal": v[0], "rho_mirror": v[1]}
                for name, v in sorted(report.methods.items())
            },
            "set_sizes": {
                "in_dual_group": report.set_sizes[0],
                "in_group": report.set_sizes[1],
            },
        }
    compute = {
        "closed": picard_closed_form,
        "kelly": picard_by_counting,
        "orbit": picard_by_orbits,
    }[method]
    rho_primal, rho_mirror = compute(mp)
    key = "closed_form" if method == "closed" else method
    doc = {
        "rho_primal": rho_primal,
        "rho_mirror": rho_mirror,
        "characteristic": mp.primal.char.p,
        "methods": {key: {"rho_primal": rho_primal, "rho_mirror": rho_mirror}},
    }
    if method != "closed":
        char = mp.primal.char
        doc["set_sizes"] = {
            "in_dual_group": len(transcendental_set(mp.mirror.group, char)),
            "in_group": len(transcendental_set(mp.primal.group, char)),
        }
    return doc


def _scan_section(mp: MirrorPair, primes_up_to: int) -> dict:
    primes = [p for p in range(2, primes_up_to + 1) if _is_prime(p)]
    report = prime_scan(mp, primes)
    return {
        "degree": report.degree,
        "mirror_degree": report.mirror_degree,
        "primes_up_to": primes_up_to,
        "rows": [
            {
                "prime": r.prime,
                "residue_primal": r.residue_primal,
                "residue_mirror": r.residue_mirror,
                "rho_primal": r.rho_primal,
                "rho_mirror": r.rho_mirror,
                "supersingular_primal": r.supersingular_primal,
                "supersingular_mirror": r.supersingular_mirror,
            }
            for r in report.rows
        ],
        "skipped": [{"prime": p, "reason": reason} for p, reason in report.skipped],
        "supersingular_primal_residues": list(report.supersingular_primal_residues),
        "supersingular_mirror_residues": list(report.supersingular_mirror_residues),
        "characterization": {
            "primal": f"rho_primal = 22 exactly when p mod {report.mirror_degree} "
            f"lies in {sorted(report.supersingular_primal_residues)}",
            "mirror": f"rho_mirror = 22 exactly when p mod {report.degree} "
            f"lies in {sorted(report.supersingular_mirror_residues)}",
        },
    }


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1 if p == 2 else 2
    return True


def _subgroups_section(ws: _Workspace) -> dict:
    groups = enumerate_intermediate(ws.j_group, ws.sl)
    entries = []
    for g in groups:
        pair = make_pair(ws.matrix, g, ws.char)
        dual = dual_group(pair)
        entries.append(
            {
                "order": g.order,
                "generators": [list(x.coords) for x in g.generators],
                "dual_order": dual.order,
            }
        )
    return {"count": len(entries), "groups": entries}


def _full_document(ws: _Workspace, method: str = "all") -> dict:
    mp = mirror_pair(ws.pair)
    return {
        "input": _echo(ws.spec),
        "tool_version": TOOL_VERSION,
        "delsarte": _delsarte_section(ws.matrix),
        "atoms": _atoms_section(ws.matrix),
        "adequacy": _adequacy_section(ws.pair.adequacy),
        "groups": _groups_section(ws),
        "mirror": _mirror_section(ws, mp),
        "picard": _picard_section(mp, method),
    }


def run_command(command: str, spec: InputSpec, **options) -> tuple[dict, int]:
    """Execute one command against a parsed input; returns (document, exit status)."""
    if command == "validate":
        ws = _resolve(spec)
        doc = {
            "input": _echo(spec),
            "tool_version": TOOL_VERSION,
            "adequacy": _adequacy_section(ws.pair.adequacy),
        }
        status = EXIT_OK if ws.pair.adequacy.verdict else EXIT_INPUT
        return doc, status
    if command == "analyze":
        ws = _resolve(spec)
        doc = {
            "input": _echo(spec),
            "tool_version": TOOL_VERSION,
            "delsarte": _delsarte_section(ws.matrix),
            "atoms": _atoms_section(ws.matrix),
            "adequacy": _adequacy_section(ws.pair.adequacy),
            "groups": _groups_section(ws),
        }
        return doc, EXIT_OK
    if command == "mirror":
        ws = _resolve(spec)
        mp = mirror_pair(ws.pair)
        doc = {
            "input": _echo(spec),
            "tool_version": TOOL_VERSION,
            "delsarte": _delsarte_section(ws.matrix),
            "adequacy": _adequacy_section(ws.pair.adequacy),
            "groups": _groups_section(ws),
            "mirror": _mirror_section(ws, mp),
        }
        return doc, EXIT_OK
    if command == "subgroups":
        ws = _resolve(spec)
        doc = {
            "input": _echo(spec),
            "tool_version": TOOL_VERSION,
            "groups": _groups_section(ws),
            "subgroups": _subgroups_section(ws),
        }
        return doc, EXIT_OK
    if command == "picard":
        ws = _resolve(spec)
        doc = _full_document(ws, method=options.get("method", "all"))
        return doc, EXIT_OK
    if command == "scan":
        ws = _resolve(spec, force_char=0)
        mp = mirror_pair(ws.pair)
        doc = {
            "input": _echo(spec),
            "tool_version": TOOL_VERSION,
            "delsarte": _delsarte_section(ws.matrix),
            "scan": _scan_section(mp, options["primes_up_to"]),
        }
        return doc, EXIT_OK
    raise ValueError(f"unknown command: {command}")


def _error_document(err: Exception) -> dict:
    category = "internal" if isinstance(err, InternalCheckError) else "input"
    return {"error": {"kind": type(err).__name__, "category": category, "message": str(err)}}


def _render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2)
    return "\n".join(_flatten(doc))


def _flatten(value, prefix: str = "") -> list[str]:
    lines: list[str] = []
    if isinstance(value, dict):
        for k in sorted(value):
            lines.extend(_flatten(value[k], f"{prefix}{k}."))
    elif isinstance(value, list) and any(isinstance(x, (dict, list)) for x in value):
        for i, x in enumerate(value):
            lines.extend(_flatten(x, f"{prefix}{i}."))
    else:
        lines.append(f"{prefix.rstrip('.')} = {json.dumps(value, sort_keys=True)}")
    return lines


def _run_batch(directory: str, out_path: str | None, fmt: str, quiet: bool) -> int:
    base = Path(directory)
    if not base.is_dir():
        print(json.dumps(_error_document(SemanticError(f"not a directory: {directory}")), sort_keys=True), file=sys.stderr)
        return EXIT_INPUT
    lines = []
    any_failed = False
    worst = EXIT_OK
    for path in sorted(base.glob("*.json"), key=lambda p: p.name):
        try:
            spec = parse_input(path.read_text())
            ws = _resolve(spec)
            doc = _full_document(ws)
            lines.append(json.dumps({"file": path.name, "report": doc, "status": "ok"}, sort_keys=True))
        except InternalCheckError as err:
            any_failed = True
            worst = EXIT_INTERNAL
            entry = {"file": path.name, "status": "error"}
            entry.update(_error_document(err))
            lines.append(json.dumps(entry, sort_keys=True))
        except (InputError, ValueError) as err:
            any_failed = True
            worst = max(worst, EXIT_INPUT)
            entry = {"file": path.name, "status": "error"}
            entry.update(_error_document(err))
            lines.append(json.dumps(entry, sort_keys=True))
    body = "\n".join(lines) + ("\n" if lines else "")
    if out_path:
        Path(out_path).write_text(body)
    elif not quiet:
        sys.stdout.write(body)
    return worst if any_failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bhk",
        description="Validate BHK pairs, construct mirrors, and compute Picard numbers.",
    )
    parser.add_argument("--format", choices=("json", "text"), default="json", help="output format")
    parser.add_argument("--quiet", action="store_true", help="suppress report output")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("validate", "adequacy report for one input document"),
        ("analyze", "matrix data, atomic shapes, and group orders"),
        ("mirror", "transposed matrix and dual group data"),
        ("subgroups", "all groups between J and SL with their duals"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="input JSON document")

    p = sub.add_parser("picard", help="Picard numbers of the pair and its mirror")
    p.add_argument("file", help="input JSON document")
    p.add_argument(
        "--method",
        choices=("closed", "kelly", "orbit", "all"),
        default="all",
        help="which computation route to use (default: all, cross-checked)",
    )

    p = sub.add_parser("scan", help="closed-form Picard numbers over a prime range")
    p.add_argument("file", help="input JSON document")
    p.add_argument("--primes-up-to", type=int, required=True, metavar="N", help="scan primes p <= N")

    p = sub.add_parser("batch", help="process every *.json in a directory, NDJSON output")
    p.add_argument("directory", help="directory of input documents")
    p.add_argument("--out", default=None, metavar="FILE", help="write NDJSON here instead of stdout")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "batch":
        return _run_batch(args.directory, args.out, args.format, args.quiet)
    try:
        text = Path(args.file).read_text()
    except OSError as err:
        print(json.dumps(_error_document(ParseError(str(err))), sort_keys=True), file=sys.stderr)
        return EXIT_INPUT
    options = {}
    if args.command == "picard":
        options["method"] = args.method
    if args.command == "scan":
        options["primes_up_to"] = args.primes_up_to
    try:
        spec = parse_input(text)
        doc, status = run_command(args.command, spec, **options)
    except InternalCheckError as err:
        print(json.dumps(_error_document(err), sort_keys=True), file=sys.stderr)
        return EXIT_INTERNAL
    except (InputError, ValueError) as err:
        print(json.dumps(_error_document(err), sort_keys=True), file=sys.stderr)
        return EXIT_INPUT
    if not args.quiet:
        print(_render(doc, args.format))
    return status


if __name__ == "__main__":
    sys.exit(main())
