"""Quasi-smoothness via atomic shapes (Fermat, chain, loop), well-formedness,
and the combined adequacy verdict for a pair."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import gcd
from typing import Union

from .delsarte import Characteristic, DelsarteMatrix
from .errors import NotInvertiblePotential


@dataclass(frozen=True)
class Fermat:
    """Single-variable power y^e."""

    variable: int
    exponent: int


@dataclass(frozen=True)
class Chain:
    """y_0^{e_0} y_1 + y_1^{e_1} y_2 + ... + y_k^{e_k}, listed head to tail."""

    variables: tuple[int, ...]
    exponents: tuple[int, ...]


@dataclass(frozen=True)
class Loop:
    """y_0^{e_0} y_1 + ... + y_k^{e_k} y_0, cyclic, listed from the least variable."""

    variables: tuple[int, ...]
    exponents: tuple[int, ...]


Atom = Union[Fermat, Chain, Loop]


@dataclass(frozen=True)
class AtomicDecomposition:
    """Disjoint atoms covering all four variables."""

    atoms: tuple[Atom, ...]

    def covered_variables(self) -> set[int]:
        out: set[int] = set()
        for atom in self.atoms:
            if isinstance(atom, Fermat):
                out.add(atom.variable)
            else:
                out.update(atom.variables)
        return out


@dataclass(frozen=True)
class AdequacyReport:
    quasi_smooth: bool
    well_formed: bool
    weight_triple_gcd_ok: bool
    char_ok: bool
    verdict: bool
    diagnostics: tuple[str, ...]


def _match_rows(rows, assign):
    """Try one row-to-variable assignment; return successor and exponent maps or None.

    Row i must be a pure power of its assigned variable, or that power times a
    single other variable with exponent exactly one. Two-variable rows with both
    exponents equal to one are ambiguous and never match.
    """
    succ: dict[int, int | None] = {}
    exps: dict[int, int] = {}
    for i, row in enumerate(rows):
        v = assign[i]
        if row[v] == 0:
            return None
        others = [j for j in range(4) if j != v and row[j] != 0]
        if not others:
            succ[v] = None
        elif len(others) == 1 and row[others[0]] == 1 and row[v] >= 2:
            succ[v] = others[0]
        else:
            return None
        exps[v] = row[v]
    return succ, exps


def _assemble(succ, exps):
    """Split a successor map with in-degree at most one into atoms, or None."""
    indeg = {v: 0 for v in range(4)}
    for v, w in succ.items():
        if w is not None:
            indeg[w] += 1
    if any(c > 1 for c in indeg.values()):
        return None
    atoms: list[Atom] = []
    seen: set[int] = set()
    for v in range(4):
        if indeg[v] == 0 and v not in seen:
            path = [v]
            seen.add(v)
            while succ[path[-1]] is not None:
                path.append(succ[path[-1]])
                seen.add(path[-1])
            if len(path) == 1:
                atoms.append(Fermat(variable=v, exponent=exps[v]))
            else:
                atoms.append(
                    Chain(variables=tuple(path), exponents=tuple(exps[x] for x in path))
                )
    for v in range(4):
        if v not in seen:
            cycle = [v]
            seen.add(v)
            while succ[cycle[-1]] not in (None, v):
                cycle.append(succ[cycle[-1]])
                seen.add(cycle[-1])
            start = cycle.index(min(cycle))
            cycle = cycle[start:] + cycle[:start]
            atoms.append(
                Loop(variables=tuple(cycle), exponents=tuple(exps[x] for x in cycle))
            )
    atoms.sort(key=_atom_key)
    return AtomicDecomposition(atoms=tuple(atoms))


def _atom_key(atom: Atom) -> int:
    if isinstance(atom, Fermat):
        return atom.variable
    return min(atom.variables)


def atomic_decomposition(m: DelsarteMatrix) -> AtomicDecomposition:
    """Decompose the rows into disjoint Fermat, chain, and loop atoms.

    Tries every row-to-variable bijection (at most 24) rather than guessing
    greedily; raises NotInvertiblePotential when none matches.
    """
    for assign in permutations(range(4)):
        matched = _match_rows(m.matrix, assign)
        if matched is None:
            continue
        result = _assemble(*matched)
        if result is not None:
            return result
    raise NotInvertiblePotential(
        f"rows {m.matrix} do not decompose into Fermat, chain, and loop shapes"
    )


def quasi_smooth(m: DelsarteMatrix) -> bool:
    """Whether the rows decompose into atomic shapes."""
    try:
        atomic_decomposition(m)
        return True
    except NotInvertiblePotential:
        return False


def _triple_gcds_ok(q) -> bool:
    idx = range(4)
    return all(
        gcd(q[i], gcd(q[j], q[k])) == 1
        for i in idx
        for j in idx
        for k in idx
        if i < j < k
    )


def _pair_supports_ok(m: DelsarteMatrix) -> bool:
    q = m.weights
    for i in range(4):
        for j in range(i + 1, 4):
            if gcd(q[i], q[j]) > 1:
                covered = any(
                    all(row[k] == 0 for k in range(4) if k not in (i, j))
                    for row in m.matrix
                )
                if not covered:
                    return False
    return True


def well_formed(m: DelsarteMatrix) -> bool:
    """Combinatorial well-formedness: triple gcds of weights are one, and every
    weight pair with a common factor is supported by a coordinate-line row."""
    return _triple_gcds_ok(m.weights) and _pair_supports_ok(m)


def adequacy(m: DelsarteMatrix, group, char: Characteristic) -> AdequacyReport:
    """Adequacy verdict: quasi-smooth, well-formed, and characteristic conditions.

    In positive characteristic p the verdict also needs p coprime to every
    weight and to the exponent d.
    """
    diagnostics: list[str] = []
    try:
        dec = atomic_decomposition(m)
        qs = True
        diagnostics.append(f"atomic shapes: {_describe_atoms(dec)}")
    except NotInvertiblePotential as err:
        qs = False
        diagnostics.append(f"not quasi-smooth: {err}")

    triple_ok = _triple_gcds_ok(m.weights)
    wf = triple_ok and _pair_supports_ok(m)
    if not triple_ok:
        diagnostics.append(f"weight triple with common factor: q = {m.weights}")
    elif not wf:
        diagnostics.append(
            f"weight pair with common factor lacks a supporting coordinate line: q = {m.weights}"
        )
    diagnostics.append(
        "well-formedness decided by the combinatorial line-support criterion; "
        "audit borderline weight systems by hand"
    )

    if char.positive:
        bad_weight = any(qi % char.p == 0 for qi in m.weights)
        divides_d = m.exponent % char.p == 0
        char_ok = not bad_weight and not divides_d
        if bad_weight:
            diagnostics.append(f"characteristic {char.p} divides a weight of {m.weights}")
        if divides_d:
            diagnostics.append(f"characteristic {char.p} divides the exponent {m.exponent}")
    else:
        char_ok = True

    if group is not None:
        diagnostics.append(f"group order {group.order}")

    verdict = qs and wf and char_ok
    return AdequacyReport(
        quasi_smooth=qs,
        well_formed=wf,
        weight_triple_gcd_ok=triple_ok,
        char_ok=char_ok,
        verdict=verdict,
        diagnostics=tuple(diagnostics),
    )


def _describe_atoms(dec: AtomicDecomposition) -> str:
    parts = []
    for atom in dec.atoms:
        if isinstance(atom, Fermat):
            parts.append(f"fermat(x{atom.variable}^{atom.exponent})")
        elif isinstance(atom, Chain):
            body = ",".join(f"x{v}^{e}" for v, e in zip(atom.variables, atom.exponents))
            parts.append(f"chain({body})")
        else:
            body = ",".join(f"x{v}^{e}" for v, e in zip(atom.variables, atom.exponents))
            parts.append(f"loop({body})")
    return " + ".join(parts)
