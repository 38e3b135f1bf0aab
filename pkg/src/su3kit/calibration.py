"""Pointwise calibration linear algebra on C^3 = R^6.

Vectors of R^6 are given in the coordinates ``(x1, x2, x3, y1, y2, y3)``
dual to ``dx1..dx6`` with ``dz_j = dx_j + i dx_{3+j}``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import linalg
from .exterior import VectorSlot, evaluate
from .numbers import GaussianRational, ONE, ZERO, parse_rational
from .su3 import ModelForms, model_forms


class NotLagrangian(ValueError):
    pass


class NotSpecialLagrangian(ValueError):
    pass


class NotNormal(ValueError):
    pass


_MODEL: ModelForms | None = None


def _model() -> ModelForms:
    global _MODEL
    if _MODEL is None:
        _MODEL = model_forms(3)
    return _MODEL


def _vec(components: Sequence) -> VectorSlot:
    return VectorSlot(_model().space, {i: c for i, c in enumerate(components)})


@dataclass(frozen=True)
class Plane3:
    """A real 3-plane in R^6 spanned by three vectors (six rational coordinates each)."""

    basis: tuple

    def __post_init__(self):
        rows = tuple(tuple(parse_rational(x) if isinstance(x, str) else Fraction(x) for x in v) for v in self.basis)
        if len(rows) != 3 or any(len(v) != 6 for v in rows):
            raise ValueError("a plane needs three vectors with six coordinates each")
        if linalg.rank([list(v) for v in rows]) != 3:
            raise ValueError("basis vectors are linearly dependent")
        object.__setattr__(self, "basis", rows)

    @classmethod
    def from_complex(cls, columns: Sequence[Sequence[GaussianRational]]) -> Plane3:
        """Plane spanned by complex 3-vectors ``u`` read as ``(Re u, Im u)``."""
        vecs = []
        for u in columns:
            u = [GaussianRational.coerce(z) for z in u]
            vecs.append([z.re for z in u] + [z.im for z in u])
        return cls(tuple(vecs))

    def slots(self) -> list[VectorSlot]:
        return [_vec(v) for v in self.basis]

    def gram(self) -> list[list[Fraction]]:
        return [[sum(a * b for a, b in zip(u, v)) for v in self.basis] for u in self.basis]

    def complex_columns(self) -> np.ndarray:
        """3x3 complex matrix whose columns are the basis vectors in C^3."""
        cols = [[complex(float(v[j]), float(v[3 + j])) for j in range(3)] for v in self.basis]
        return np.array(cols, dtype=complex).T

    def to_json(self) -> dict:
        return {"basis": [[f"{x.numerator}/{x.denominator}" for x in v] for v in self.basis]}

    @classmethod
    def from_json(cls, data) -> Plane3:
        vecs = data["basis"] if isinstance(data, dict) else data
        return cls(tuple(tuple(parse_rational(str(x)) for x in v) for v in vecs))


STANDARD_PLANE = Plane3(((1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)))


def is_lagrangian(E: Plane3) -> bool:
    s = E.slots()
    Om = _model().Omega0
    return all(evaluate(Om, [s[a], s[b]]).is_zero() for a in range(3) for b in range(a + 1, 3))


def is_special_lagrangian(E: Plane3) -> bool:
    """Lagrangian with ``psi0|_E = 0`` (either orientation)."""
    return is_lagrangian(E) and evaluate(_model().psi0, E.slots()).is_zero()


def psi_value(E: Plane3) -> GaussianRational:
    return evaluate(_model().Psi0, E.slots()).constant


def _exact_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def lambda_phase(E: Plane3, tol: float = 1e-12):
    """``Psi0(basis) / vol(basis)``; exact when the Gram determinant is a rational square."""
    if not is_lagrangian(E):
        raise NotLagrangian("lambda is defined for Lagrangian planes")
    num = psi_value(E)
    det = linalg.det(E.gram())
    root = _exact_sqrt(Fraction(det))
    if root is not None:
        lam = num / root
        if lam.abs2() != 1:
            raise ArithmeticError("phase is not unimodular")
        return lam
    lam = complex(num) / math.sqrt(float(det))
    if abs(abs(lam) - 1) > tol:
        raise ArithmeticError("phase is not unimodular")
    return lam


def oriented(E: Plane3) -> Plane3:
    """Reorder the basis so that ``phi0`` is positive on it (for special Lagrangian planes)."""
    if not is_special_lagrangian(E):
        raise NotSpecialLagrangian("orientation by phi0 needs a special Lagrangian plane")
    if psi_value(E).re > 0:
        return E
    b = E.basis
    return Plane3((b[1], b[0], b[2]))


def su3_witness(E: Plane3, tol: float = 1e-9) -> np.ndarray:
    """A matrix ``A`` in SU(3) with ``A(E) = R^3`` (floating point)."""
    if not is_special_lagrangian(E):
        raise NotSpecialLagrangian("witness requires a special Lagrangian plane")
    M = E.complex_columns()
    Q = np.zeros((3, 3), dtype=complex)
    for k in range(3):
        v = M[:, k].copy()
        for j in range(k):
            v = v - np.real(np.vdot(Q[:, j], v)) * Q[:, j]
        Q[:, k] = v / math.sqrt(np.real(np.vdot(v, v)))
    if np.real(np.linalg.det(Q)) < 0:
        Q[:, 0] = -Q[:, 0]
    A = Q.conj().T
    if np.abs(A @ A.conj().T - np.eye(3)).max() > tol or abs(np.linalg.det(A) - 1) > tol:
        raise ArithmeticError("witness failed to be special unitary")
    return A


def witness_residuals(A: np.ndarray, E: Plane3) -> dict:
    image = A @ E.complex_columns()
    return {
        "unitary": float(np.abs(A @ A.conj().T - np.eye(3)).max()),
        "det": float(abs(np.linalg.det(A) - 1)),
        "imaginary_image": float(np.abs(image.imag).max()),
    }


# ---------------------------------------------------------------------------
# McLean's correspondence at a point
# ---------------------------------------------------------------------------


def _dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class McLeanReport:
    v: tuple  # (V -| Omega0)(b_a)
    lhs: tuple  # (V -| psi0)(b_a, b_b) for a < b
    rhs: tuple  # -(*v)(b_a, b_b)
    holds: bool


def mclean_check(E: Plane3, V: Sequence) -> McLeanReport:
    """Compare ``(V -| psi0)|_E`` with ``-*v`` where ``v = (V -| Omega0)|_E``.

    ``*`` is the Hodge star of ``g0|_E`` with the orientation making ``phi0``
    positive; the volume form of ``E`` is ``phi0|_E``.
    """
    E = oriented(E)
    V = tuple(parse_rational(x) if isinstance(x, str) else Fraction(x) for x in V)
    if len(V) != 6:
        raise ValueError("normal vector needs six coordinates")
    if any(_dot(V, b) != 0 for b in E.basis):
        raise NotNormal("V is not orthogonal to E")
    m = _model()
    b = E.slots()
    Vs = _vec(V)
    v = [evaluate(m.Omega0, [Vs, b[a]]).constant for a in range(3)]
    if any(not x.is_real() for x in v):
        raise ArithmeticError("non-real contraction")
    vr = [x.re for x in v]
    G = E.gram()
    Ginv = linalg.inverse(G, one=Fraction(1), zero=Fraction(0))
    sharp = [sum(Ginv[c][a] * vr[a] for a in range(3)) for c in range(3)]
    sharp_vec = _vec([sum(sharp[c] * E.basis[c][k] for c in range(3)) for k in range(6)])
    pairs = [(0, 1), (0, 2), (1, 2)]
    lhs = tuple(evaluate(m.psi0, [Vs, b[p], b[q]]).constant for p, q in pairs)
    rhs = tuple(-evaluate(m.phi0, [sharp_vec, b[p], b[q]]).constant for p, q in pairs)
    return McLeanReport(tuple(v), lhs, rhs, lhs == rhs)


def mclean_identity(E: Plane3, V: Sequence) -> bool:
    return mclean_check(E, V).holds


def normal_vectors(E: Plane3) -> list[tuple]:
    """``J b_a`` for the basis of a Lagrangian plane: a basis of its normal space."""
    out = []
    for v in E.basis:
        x, y = v[:3], v[3:]
        out.append(tuple(-t for t in y) + tuple(x))
    return out


# ---------------------------------------------------------------------------
# exact SU(3) elements
# ---------------------------------------------------------------------------


def unit_phase(rng: random.Random, bound: int = 9) -> GaussianRational:
    """``(a + b i)^2 / (a^2 + b^2)`` for random integers: a rational point on the unit circle."""
    while True:
        a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if a or b:
            z = GaussianRational(a, b)
            return z * z / (a * a + b * b)


def random_su3(rng: random.Random, bound: int = 4) -> list[list[GaussianRational]]:
    """Rational special unitary matrix from the Cayley transform of a skew-Hermitian matrix."""
    K = [[ZERO] * 3 for _ in range(3)]
    for i in range(3):
        K[i][i] = GaussianRational(0, Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))
        for j in range(i + 1, 3):
            z = GaussianRational(
                Fraction(rng.randint(-bound, bound), rng.randint(1, bound)),
                Fraction(rng.randint(-bound, bound), rng.randint(1, bound)),
            )
            K[i][j] = z
            K[j][i] = -z.conj()
    Id = [[ONE if i == j else ZERO for j in range(3)] for i in range(3)]
    minus = [[Id[i][j] - K[i][j] for j in range(3)] for i in range(3)]
    plus = [[Id[i][j] + K[i][j] for j in range(3)] for i in range(3)]
    U = linalg.matmul(minus, linalg.inverse(plus, one=ONE, zero=ZERO), zero=ZERO)
    d = linalg.det(U)
    for i in range(3):
        U[i][0] = U[i][0] * d.conj()
    d = unit_phase(rng)
    D = [d, d.conj(), ONE]
    # an extra diagonal SU(3) phase keeps samples from clustering near the identity
    return [[U[i][j] * D[j] for j in range(3)] for i in range(3)]


def is_special_unitary(U) -> bool:
    n = len(U)
    for i in range(n):
        for j in range(n):
            s = sum((U[k][i].conj() * U[k][j] for k in range(n)), ZERO)
            if s != (ONE if i == j else ZERO):
                return False
    return linalg.det(U) == ONE


def apply_to_plane(U, E: Plane3) -> Plane3:
    """Image of ``E`` under the complex-linear map ``U``."""
    cols = []
    for v in E.basis:
        z = [GaussianRational(v[j], v[3 + j]) for j in range(3)]
        cols.append([sum((U[i][k] * z[k] for k in range(3)), ZERO) for i in range(3)])
    return Plane3.from_complex(cols)


def random_sl_plane(rng: random.Random) -> tuple[Plane3, list]:
    U = random_su3(rng)
    return apply_to_plane(U, STANDARD_PLANE), U
