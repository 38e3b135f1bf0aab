"""Anti-self-dual curvature data of a Riemannian 4-manifold and the twistor torsion.

``R_-`` is recorded by ten scalars ``A, B, C1..C3, D1..D3`` (complex) and
``a, b`` (real) through its two component 2-forms::

    (R_-)_1 = A Th1 - conj(A) Th2 + i a Th3 + B Si1 - conj(B) Si2 + i b Si3
    (R_-)_2 = C1 Th1 + C2 Th2 + C3 Th3 + D1 Si1 + D2 Si2 + D3 Si3

with ``Th`` the anti-self-dual and ``Si`` the self-dual basis built from
``w1 = dx1 + i dx3``, ``w2 = dx2 + i dx4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .exterior import Form, GeneratorSpace, ParamCoeff, wedge
from .numbers import GaussianRational, I, ZERO, format_rational, parse_rational
from .su3 import (
    StructureClass,
    TorsionTensor,
    classify_torsion,
    nijenhuis_from_structure,
    sigma_basis,
    theta_basis,
)

THIRD2 = Fraction(2, 3)


def _g(x) -> GaussianRational:
    return GaussianRational.coerce(x)


@dataclass(frozen=True)
class CurvatureMinus:
    A: GaussianRational = ZERO
    B: GaussianRational = ZERO
    C1: GaussianRational = ZERO
    C2: GaussianRational = ZERO
    C3: GaussianRational = ZERO
    D1: GaussianRational = ZERO
    D2: GaussianRational = ZERO
    D3: GaussianRational = ZERO
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("A", "B", "C1", "C2", "C3", "D1", "D2", "D3"):
            object.__setattr__(self, name, _g(getattr(self, name)))
        for name in ("a", "b"):
            v = getattr(self, name)
            if isinstance(v, GaussianRational):
                if not v.is_real():
                    raise ValueError(f"{name} must be real")
                v = v.re
            object.__setattr__(self, name, Fraction(v))

    def matrix(self) -> list[list[GaussianRational]]:
        """The 6x3 matrix of ``R_-`` on ``(Th1, Th2, Th3)`` in the basis ``(Th, Si)``."""
        A, B = self.A, self.B
        C1, C2, C3 = self.C1, self.C2, self.C3
        D1, D2, D3 = self.D1, self.D2, self.D3
        a, b = _g(self.a), _g(self.b)
        rows = [
            [C2.conj(), C1, I * A],
            [C1.conj(), C2, -I * A.conj()],
            [C3.conj(), C3, -a],
            [D2.conj(), D1, I * B],
            [D1.conj(), D2, -I * B.conj()],
            [D3.conj(), D3, -b],
        ]
        return [[x * 2 for x in r] for r in rows]

    def two_forms(self, space: GeneratorSpace | None = None) -> tuple[Form, Form]:
        """``((R_-)_1, (R_-)_2)`` as 2-forms on R^4."""
        th = theta_basis(space)
        si = sigma_basis(space)
        r1 = (
            th[0] * self.A - th[1] * self.A.conj() + th[2] * (I * self.a)
            + si[0] * self.B - si[1] * self.B.conj() + si[2] * (I * self.b)
        )
        r2 = (
            th[0] * self.C1 + th[1] * self.C2 + th[2] * self.C3
            + si[0] * self.D1 + si[1] * self.D2 + si[2] * self.D3
        )
        return r1, r2

    @classmethod
    def from_two_forms(cls, r1: Form, r2: Form) -> CurvatureMinus:
        """Inverse of :meth:`two_forms`; raises ``ValueError`` if ``r1`` has the wrong shape."""
        basis = theta_basis(r1.space) + sigma_basis(r1.space)
        c1 = _coordinates(r1, basis)
        c2 = _coordinates(r2, basis)
        A, B = c1[0], c1[3]
        if c1[1] != -A.conj() or c1[4] != -B.conj():
            raise ValueError("first component is not of the required shape")
        ia, ib = c1[2], c1[5]
        if ia.re != 0 or ib.re != 0:
            raise ValueError("a and b must be real")
        return cls(A, B, c2[0], c2[1], c2[2], c2[3], c2[4], c2[5], ia.im, ib.im)

    def to_json(self) -> dict:
        return {
            "A": self.A.to_json(),
            "B": self.B.to_json(),
            "C": [self.C1.to_json(), self.C2.to_json(), self.C3.to_json()],
            "D": [self.D1.to_json(), self.D2.to_json(), self.D3.to_json()],
            "a": format_rational(self.a),
            "b": format_rational(self.b),
        }

    @classmethod
    def from_json(cls, data: dict) -> CurvatureMinus:
        dec = GaussianRational.from_json
        C = [dec(x) for x in data.get("C", [0, 0, 0])]
        D = [dec(x) for x in data.get("D", [0, 0, 0])]
        if len(C) != 3 or len(D) != 3:
            raise ValueError("C and D need three entries each")

        def real(v):
            if isinstance(v, dict):
                g = dec(v)
                if not g.is_real():
                    raise ValueError("a and b must be real")
                return g.re
            return parse_rational(str(v))

        return cls(
            dec(data.get("A", 0)), dec(data.get("B", 0)), *C, *D,
            a=real(data.get("a", 0)), b=real(data.get("b", 0)),
        )


def _coordinates(f: Form, basis: Sequence[Form]) -> list[GaussianRational]:
    monos = sorted({k for g in list(basis) + [f] for k in g.terms})
    rows = [[g.terms.get(m, ParamCoeff(ZERO)).constant for g in basis] for m in monos]
    rhs = [f.terms.get(m, ParamCoeff(ZERO)).constant for m in monos]
    x = linalg.solve(rows, rhs, zero=ZERO)
    if x is None:
        raise ValueError("form is not in the span of the basis")
    return x


@dataclass(frozen=True)
class CurvatureDecomposition:
    Z: tuple
    Wminus: tuple
    s: Fraction

    def reassemble(self) -> list[list[GaussianRational]]:
        """``[W^- + s/12 Id ; Z]`` as a 6x3 matrix."""
        top = [
            [self.Wminus[i][j] + (_g(self.s / 12) if i == j else ZERO) for j in range(3)]
            for i in range(3)
        ]
        return top + [list(r) for r in self.Z]

    def to_json(self) -> dict:
        return {
            "Z": [[x.to_json() for x in r] for r in self.Z],
            "Wminus": [[x.to_json() for x in r] for r in self.Wminus],
            "s": format_rational(self.s),
        }


def decompose(rm: CurvatureMinus) -> CurvatureDecomposition:
    M = rm.matrix()
    x = rm.C2 + rm.C2.conj() - rm.a
    s = (x * 8).re
    W = tuple(
        tuple(M[i][j] - (x * THIRD2 if i == j else ZERO) for j in range(3)) for i in range(3)
    )
    Z = tuple(tuple(M[3 + i]) for i in range(3))
    return CurvatureDecomposition(Z=Z, Wminus=W, s=s)


def is_self_dual_einstein(rm: CurvatureMinus) -> bool:
    """``b = A = B = C1 = C3 = D1 = D2 = D3 = 0`` and ``C2 = conj(C2) = -a``."""
    zeros = (rm.A, rm.B, rm.C1, rm.C3, rm.D1, rm.D2, rm.D3)
    return (
        rm.b == 0
        and all(z.is_zero() for z in zeros)
        and rm.C2.is_real()
        and rm.C2.re == -rm.a
    )


# ---------------------------------------------------------------------------
# twistor spaces
# ---------------------------------------------------------------------------


def twistor_space() -> GeneratorSpace:
    """``w1..w3, wb1..wb3`` plus opaque u(2) connection symbols ``a_ij`` and conjugates."""
    entries = [(f"w{k}", f"wb{k}", True) for k in (1, 2, 3)]
    entries += [(f"wb{k}", None, True) for k in (1, 2, 3)]
    for i in (1, 2):
        for j in (1, 2):
            entries.append((f"a{i}{j}", f"ab{i}{j}"))
    for i in (1, 2):
        for j in (1, 2):
            entries.append((f"ab{i}{j}", None))
    return GeneratorSpace.build(entries)


def twistor_structure_equation(s, space: GeneratorSpace | None = None) -> list[Form]:
    """``d(w1, w2, w3)`` on the twistor space of a self-dual Einstein 4-manifold."""
    s = parse_rational(s) if isinstance(s, str) else Fraction(s)
    sp = space or twistor_space()
    w = {k: sp.gen(f"w{k}") for k in (1, 2, 3)}
    wb = {k: sp.gen(f"wb{k}") for k in (1, 2, 3)}
    al = {(i, j): sp.gen(f"a{i}{j}") for i in (1, 2) for j in (1, 2)}
    tr = al[1, 1] + al[2, 2]
    d1 = -wedge(al[1, 1], w[1]) - wedge(al[1, 2], w[2]) + wedge(wb[2], wb[3])
    d2 = -wedge(al[2, 1], w[1]) - wedge(al[2, 2], w[2]) + wedge(wb[3], wb[1])
    d3 = wedge(tr, w[3]) + wedge(wb[1], wb[2]) * (s / 24)
    return [d1, d2, d3]


def twistor_torsion(s) -> tuple[list[list[GaussianRational]], StructureClass]:
    """Nijenhuis tensor read off the twistor structure equations, and its class."""
    N = nijenhuis_from_structure(twistor_structure_equation(s))
    return N, classify_torsion(TorsionTensor.from_nijenhuis(N))


def normalization(s) -> Fraction:
    """Metric scale ``c`` (``g -> c g``, so ``s -> s / c``) giving ``s`` in ``{24, 0, -48}``."""
    s = Fraction(s)
    if s > 0:
        return s / 24
    if s < 0:
        return s / -48
    return Fraction(1)
