"""BHK pairs, the mod d^2 pairing between the two kernels, dual groups,
and construction of the transposed (mirror) pair."""

from __future__ import annotations

from dataclasses import dataclass

from .delsarte import Characteristic, DelsarteMatrix, is_calabi_yau, transpose
from .errors import (
    InternalCheckError,
    MirrorNotAdequate,
    NotAdequate,
    SemanticError,
)
from .smoothness import AdequacyReport, adequacy
from .symmetry import (
    GroupElement,
    SymmetrySubgroup,
    _from_coords,
    aut_group,
    j_subgroup,
    sl_subgroup,
)


@dataclass(frozen=True)
class BhkPair:
    """A validated (matrix, group) pair at a fixed characteristic."""

    matrix: DelsarteMatrix
    group: SymmetrySubgroup
    char: Characteristic
    adequacy: AdequacyReport


@dataclass(frozen=True)
class MirrorPair:
    primal: BhkPair
    mirror: BhkPair


def make_pair(m: DelsarteMatrix, group: SymmetrySubgroup, char: Characteristic) -> BhkPair:
    """Validate J <= G <= SL and attach the adequacy report."""
    if group.modulus != m.exponent:
        raise SemanticError(
            f"group modulus {group.modulus} does not match the exponent {m.exponent}"
        )
    if not is_calabi_yau(m):
        raise SemanticError(f"weights {m.weights} sum to {sum(m.weights)}, degree is {m.degree}")
    sl = sl_subgroup(aut_group(m))
    jg = j_subgroup(m)
    if not jg.is_subgroup_of(group):
        raise SemanticError("group does not contain the grading element")
    if not group.is_subgroup_of(sl):
        raise SemanticError("group is not contained in the coordinate-sum-zero kernel")
    report = adequacy(m, group, char)
    return BhkPair(matrix=m, group=group, char=char, adequacy=report)


def pairing(m: DelsarteMatrix, a: GroupElement, b: GroupElement, *, verify: bool = False) -> int:
    """The residue a A b^t mod d^2, using canonical lifts in [0, d).

    a must annihilate the columns of A and b its rows, else ValueError.
    With verify=True the value is recomputed with every lift shifted by +d
    in one coordinate and checked for agreement.
    """
    d = m.exponent
    if a.modulus != d or b.modulus != d:
        raise ValueError(f"pairing needs modulus {d} on both sides")
    if any(sum(a.coords[i] * m.matrix[i][j] for i in range(4)) % d != 0 for j in range(4)):
        raise ValueError(f"{a.coords} is not in the transposed kernel")
    if any(sum(m.matrix[i][j] * b.coords[j] for j in range(4)) % d != 0 for i in range(4)):
        raise ValueError(f"{b.coords} is not in the kernel")
    value = _raw_pairing(m.matrix, d, a.coords, b.coords)
    if verify:
        for k in range(4):
            lift_a = list(a.coords)
            lift_a[k] += d
            if _raw_pairing(m.matrix, d, tuple(lift_a), b.coords) != value:
                raise InternalCheckError("pairing depends on the lift of the left argument")
            lift_b = list(b.coords)
            lift_b[k] += d
            if _raw_pairing(m.matrix, d, a.coords, tuple(lift_b)) != value:
                raise InternalCheckError("pairing depends on the lift of the right argument")
    return value


def _raw_pairing(matrix, d, a, b) -> int:
    total = 0
    for i in range(4):
        for j in range(4):
            total += a[i] * matrix[i][j] * b[j]
    return total % (d * d)


def dual_group(pair: BhkPair) -> SymmetrySubgroup:
    """Annihilator of the group inside the transposed kernel.

    Filtering against the generators suffices: the pairing is bilinear mod d^2,
    so vanishing on generators gives vanishing on the whole group.
    """
    mt = transpose(pair.matrix, pair.char)
    aut_t = aut_group(mt)
    gens = pair.group.generators
    coords = [
        a.coords
        for a in aut_t.elements
        if all(pairing(pair.matrix, a, g) == 0 for g in gens)
    ]
    return _from_coords(pair.matrix.exponent, coords)


def mirror_pair(pair: BhkPair) -> MirrorPair:
    """The transposed pair with the dual group; both sides must be adequate."""
    if not pair.adequacy.verdict:
        raise NotAdequate(
            f"pair is not adequate: {'; '.join(pair.adequacy.diagnostics)}",
            report=pair.adequacy,
        )
    mt = transpose(pair.matrix, pair.char)
    dual = dual_group(pair)
    jt = j_subgroup(mt)
    slt = sl_subgroup(aut_group(mt))
    if not jt.is_subgroup_of(dual) or not dual.is_subgroup_of(slt):
        raise InternalCheckError("dual group escaped the J..SL window of the transpose")
    report = adequacy(mt, dual, pair.char)
    if not report.verdict:
        raise MirrorNotAdequate(
            f"transposed pair is not adequate: {'; '.join(report.diagnostics)}",
            report=report,
        )
    mirror = BhkPair(matrix=mt, group=dual, char=pair.char, adequacy=report)
    return MirrorPair(primal=pair, mirror=mirror)
