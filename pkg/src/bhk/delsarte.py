"""Weighted Delsarte matrices: validation, weight systems, the exponent d,
and the integral matrix B = d A^(-1)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .arith import Matrix4, Vector4, det_adjugate, matrix4, transpose_rows
from .errors import (
    CharDividesDet,
    InternalCheckError,
    NegativeEntry,
    NonpositiveWeight,
    RowWithoutZero,
    SingularMatrix,
)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1 if p == 2 else 2
    return True


@dataclass(frozen=True)
class Characteristic:
    """Base field characteristic: zero or a prime, checked by trial division."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"characteristic must be 0 or prime, got {self.p}")

    @property
    def positive(self) -> bool:
        return self.p > 0


@dataclass(frozen=True)
class DelsarteMatrix:
    """A validated matrix of exponents together with its cached derived data.

    weights q and degree h satisfy A q = h (1,1,1,1) with gcd(q) = 1; the
    exponent d is the least positive integer making B = d A^(-1) integral.
    """

    matrix: Matrix4
    det: int
    adjugate: Matrix4
    weights: Vector4
    degree: int
    exponent: int
    b_matrix: Matrix4

    def inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        """Exact inverse, reconstructed from the cached adjugate."""
        return tuple(
            tuple(Fraction(self.adjugate[i][j], self.det) for j in range(4))
            for i in range(4)
        )


def build_delsarte(rows: Sequence[Sequence[int]], char: Characteristic) -> DelsarteMatrix:
    """Validate a candidate exponent matrix and compute its derived data.

    Checks, in order: shape, nonnegativity, a zero in every row, nonzero
    determinant, characteristic coprime to the determinant, positive weights.
    """
    m = matrix4(rows)
    for i in range(4):
        for j in range(4):
            if m[i][j] < 0:
                raise NegativeEntry(f"entry ({i},{j}) = {m[i][j]} is negative")
    for i in range(4):
        if all(v != 0 for v in m[i]):
            raise RowWithoutZero(f"row {i} = {m[i]} has no zero entry")
    det, adj = det_adjugate(m)
    if det == 0:
        raise SingularMatrix("determinant is zero")
    if char.positive and det % char.p == 0:
        raise CharDividesDet(f"characteristic {char.p} divides det = {det}")

    w = [Fraction(sum(adj[i]), det) for i in range(4)]
    for i, wi in enumerate(w):
        if wi <= 0:
            raise NonpositiveWeight(f"weight {i} is {wi}, expected positive")
    h = lcm(*[wi.denominator for wi in w])
    q = tuple(int(wi * h) for wi in w)
    if gcd(*q) != 1:
        raise InternalCheckError(f"weight normalization failed: q = {q}")

    d = lcm(*[abs(det) // gcd(det, adj[i][j]) for i in range(4) for j in range(4)])
    b = tuple(tuple(d * adj[i][j] // det for j in range(4)) for i in range(4))
    _check_construction(m, det, q, h, d, b)
    return DelsarteMatrix(
        matrix=m, det=det, adjugate=adj, weights=q, degree=h, exponent=d, b_matrix=b
    )


def _check_construction(m, det, q, h, d, b):
    """Construction-time assertions: A q = h 1, A B = B A = d I, h | d | |det| | d^4."""
    if any(sum(m[i][j] * q[j] for j in range(4)) != h for i in range(4)):
        raise InternalCheckError("A q = h (1,1,1,1) failed")
    for i in range(4):
        for j in range(4):
            ab = sum(m[i][k] * b[k][j] for k in range(4))
            ba = sum(b[i][k] * m[k][j] for k in range(4))
            want = d if i == j else 0
            if ab != want or ba != want:
                raise InternalCheckError("A B = B A = d I failed")
    if d % h != 0 or abs(det) % d != 0 or d**4 % abs(det) != 0:
        raise InternalCheckError(f"divisibility chain h | d | |det| | d^4 failed: {h}, {d}, {det}")


def is_calabi_yau(m: DelsarteMatrix) -> bool:
    """Whether the degree equals the weight sum; cross-checked against the
    inverse-entry sum, which must agree exactly."""
    by_weights = m.degree == sum(m.weights)
    by_inverse = sum(x for row in m.inverse() for x in row) == 1
    if by_weights != by_inverse:
        raise InternalCheckError("Calabi-Yau criteria disagree")
    return by_weights


def transpose(m: DelsarteMatrix, char: Characteristic) -> DelsarteMatrix:
    """The transposed matrix, validated from scratch; errors propagate."""
    return build_delsarte(transpose_rows(m.matrix), char)
