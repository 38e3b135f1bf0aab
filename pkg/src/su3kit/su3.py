"""The flat SU(m) model, the so(2m) <-> 2-form dictionary and SU(3) torsion.

Index conventions follow the unitary coframe ``w1, w2, w3`` with conjugates
``wb1, wb2, wb3``. Torsion is stored in normalized form ``(N_{ij}, S_{ij},
lambda_k)`` where the structure equations read (connection dropped)::

    dw_i = 1/2 S_ij eps_jkl w_k^w_l + 1/2 N_ij eps_jkl wb_k^wb_l
           + i/3 (lambda_k wb_k + conj(lambda_k) w_k) ^ w_i
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Optional, Sequence

from . import linalg
from .exterior import (
    ExteriorError,
    Form,
    GeneratorSpace,
    ParamCoeff,
    complex_coordinates,
    conjugate,
    exterior_derivative,
    substitute,
    wedge,
)
from .numbers import GaussianRational, I, ONE, ZERO

HALF = Fraction(1, 2)


class NotSkew(ExteriorError):
    """Matrix data does not lie in so(2m, R)."""


def levi_civita(i: int, j: int, k: int) -> int:
    """Signature of ``(i, j, k)`` as a permutation of ``(0, 1, 2)``, or 0."""
    if len({i, j, k}) < 3:
        return 0
    inv = (i > j) + (i > k) + (j > k)
    return -1 if inv % 2 else 1


def gr(x) -> GaussianRational:
    return GaussianRational.coerce(x)


def gmatrix(rows) -> list[list[GaussianRational]]:
    return [[gr(x) for x in row] for row in rows]


def identity(n: int) -> list[list[GaussianRational]]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def zeros(n: int, m: int | None = None) -> list[list[GaussianRational]]:
    return [[ZERO] * (n if m is None else m) for _ in range(n)]


def conj_transpose(a):
    return [[a[j][i].conj() for j in range(len(a))] for i in range(len(a[0]))]


def trace(a):
    return sum((a[i][i] for i in range(len(a))), ZERO)


def unitary_space(m: int = 3) -> GeneratorSpace:
    """Complex coframe ``w1..wm, wb1..wbm``, all spanning the independence condition."""
    entries = [(f"w{k}", f"wb{k}", True) for k in range(1, m + 1)]
    entries += [(f"wb{k}", None, True) for k in range(1, m + 1)]
    return GeneratorSpace.build(entries)


def su_forms(omega: Sequence[Form], omegabar: Sequence[Form]) -> tuple[Form, Form]:
    """``Omega = i/2 sum w_j ^ wb_j`` and ``Psi = w_1 ^ ... ^ w_m`` for a given coframe."""
    Omega = sum((wedge(w, wb) for w, wb in zip(omega, omegabar)), omega[0].space.zero()) * (I * HALF)
    Psi = wedge(*omega)
    return Omega, Psi


@dataclass(frozen=True)
class ModelForms:
    """The flat structure ``(g0, Omega0, Psi0)`` on C^m = R^2m."""

    space: GeneratorSpace
    g0: list
    Omega0: Form
    Psi0: Form
    psi0: Form
    phi0: Form
    dz: list = field(repr=False)
    dzbar: list = field(repr=False)


def model_forms(m: int = 3) -> ModelForms:
    if m not in (2, 3):
        raise ValueError("model forms are provided for m = 2 and m = 3")
    space = GeneratorSpace.real(2 * m)
    dz, dzb = complex_coordinates(space)
    Omega0, Psi0 = su_forms(dz, dzb)
    g0 = [[Fraction(int(i == j)) for j in range(2 * m)] for i in range(2 * m)]
    return ModelForms(
        space=space,
        g0=g0,
        Omega0=Omega0,
        Psi0=Psi0,
        psi0=Psi0.imag_part(),
        phi0=Psi0.real_part(),
        dz=dz,
        dzbar=dzb,
    )


# ---------------------------------------------------------------------------
# so(2m, R) in (A, B) block form <-> 2-forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SkewBlock:
    """An element of so(2m, R) written as ``[[A, conj(B)], [B, conj(A)]]``.

    Requires ``A^t + conj(A) = 0`` and ``B^t + B = 0``.
    """

    A: tuple
    B: tuple

    def __post_init__(self):
        A = tuple(tuple(gr(x) for x in row) for row in self.A)
        B = tuple(tuple(gr(x) for x in row) for row in self.B)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        m = len(A)
        if len(B) != m or any(len(r) != m for r in A + B):
            raise NotSkew("A and B must be square of the same size")
        for i in range(m):
            for j in range(m):
                if A[j][i] + A[i][j].conj() != 0:
                    raise NotSkew("A^t + conj(A) != 0")
                if B[j][i] + B[i][j] != 0:
                    raise NotSkew("B^t + B != 0")

    @property
    def m(self) -> int:
        return len(self.A)

    def __add__(self, other: SkewBlock) -> SkewBlock:
        m = self.m
        return SkewBlock(
            [[self.A[i][j] + other.A[i][j] for j in range(m)] for i in range(m)],
            [[self.B[i][j] + other.B[i][j] for j in range(m)] for i in range(m)],
        )

    def matrix(self) -> list[list[GaussianRational]]:
        m = self.m
        top = [list(self.A[i]) + [self.B[i][j].conj() for j in range(m)] for i in range(m)]
        bottom = [list(self.B[i]) + [self.A[i][j].conj() for j in range(m)] for i in range(m)]
        return top + bottom

    @classmethod
    def from_matrix(cls, H) -> SkewBlock:
        n = len(H)
        if n % 2:
            raise NotSkew("matrix size must be even")
        m = n // 2
        H = gmatrix(H)
        A = [row[:m] for row in H[:m]]
        B = [row[:m] for row in H[m:]]
        blk = cls(A, B)
        if blk.matrix() != H:
            raise NotSkew("matrix is not of the real block form [[A, conj B], [B, conj A]]")
        return blk

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.A + self.B for x in row)


def matrix_to_two_form(H: SkewBlock, space: GeneratorSpace | None = None) -> Form:
    """``1/2 A_ij dzb_i ^ dz_j + 1/4 (B_ij dz_i ^ dz_j + conj(B_ij) dzb_i ^ dzb_j)``."""
    if not isinstance(H, SkewBlock):
        H = SkewBlock.from_matrix(H)
    m = H.m
    space = space or GeneratorSpace.real(2 * m)
    dz, dzb = complex_coordinates(space)
    out = space.zero()
    q = Fraction(1, 4)
    for i in range(m):
        for j in range(m):
            a, b = H.A[i][j], H.B[i][j]
            if not a.is_zero():
                out = out + wedge(dzb[i], dz[j]) * (a * HALF)
            if not b.is_zero():
                out = out + wedge(dz[i], dz[j]) * (b * q) + wedge(dzb[i], dzb[j]) * (b.conj() * q)
    return out


def to_unitary_frame(f: Form) -> tuple[Form, GeneratorSpace]:
    """Rewrite a form on Euclidean R^2m in the complex coframe ``z_j, zb_j``."""
    n = len(f.space)
    m = n // 2
    target = GeneratorSpace.build(
        [(f"z{k}", f"zb{k}") for k in range(1, m + 1)] + [(f"zb{k}", None) for k in range(1, m + 1)]
    )
    images = {}
    for j in range(m):
        z, zb = target.gen(f"z{j + 1}"), target.gen(f"zb{j + 1}")
        images[j] = (z + zb) * HALF
        images[m + j] = (z - zb) * GaussianRational(0, -HALF)
    return substitute(f, images, target), target


def two_form_to_matrix(f: Form) -> SkewBlock:
    """Inverse of :func:`matrix_to_two_form` on real 2-forms."""
    if f.is_zero():
        m = len(f.space) // 2
        return SkewBlock(zeros(m), zeros(m))
    if f.degrees() != {2} or not f.is_constant():
        raise NotSkew("expected a constant 2-form")
    g, target = to_unitary_frame(f)
    m = len(f.space) // 2
    A = zeros(m)
    B = zeros(m)
    for i in range(m):
        for j in range(m):
            A[i][j] = g.coeff(f"zb{i + 1}", f"z{j + 1}").constant * 2
            if i != j:
                B[i][j] = g.coeff(f"z{i + 1}", f"z{j + 1}").constant * 2
    blk = SkewBlock(A, B)
    if matrix_to_two_form(blk, f.space) != f:
        raise NotSkew("form is not real")
    return blk


def su2_split(H: SkewBlock) -> tuple[SkewBlock, SkewBlock]:
    """Split ``H`` in so(4) into its su(2)_+ and su(2)_- components."""
    if not isinstance(H, SkewBlock):
        H = SkewBlock.from_matrix(H)
    if H.m != 2:
        raise NotSkew("su(2) splitting is defined for so(4)")
    half_tr = (H.A[0][0] + H.A[1][1]) * HALF
    plus_A = [[H.A[i][j] - (half_tr if i == j else ZERO) for j in range(2)] for i in range(2)]
    minus_A = [[half_tr if i == j else ZERO for j in range(2)] for i in range(2)]
    return SkewBlock(plus_A, zeros(2)), SkewBlock(minus_A, H.B)


def theta_basis(space: GeneratorSpace | None = None) -> list[Form]:
    """``dz1^dz2, dzb1^dzb2, i/2 (dz1^dzb1 + dz2^dzb2)`` on R^4."""
    space = space or GeneratorSpace.real(4)
    dz, dzb = complex_coordinates(space)
    return [
        wedge(dz[0], dz[1]),
        wedge(dzb[0], dzb[1]),
        (wedge(dz[0], dzb[0]) + wedge(dz[1], dzb[1])) * (I * HALF),
    ]


def sigma_basis(space: GeneratorSpace | None = None) -> list[Form]:
    """``dz1^dzb2, dzb1^dz2, i/2 (dz1^dzb1 - dz2^dzb2)`` on R^4."""
    space = space or GeneratorSpace.real(4)
    dz, dzb = complex_coordinates(space)
    return [
        wedge(dz[0], dzb[1]),
        wedge(dzb[0], dz[1]),
        (wedge(dz[0], dzb[0]) - wedge(dz[1], dzb[1])) * (I * HALF),
    ]


# ---------------------------------------------------------------------------
# SU(3) torsion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TorsionTensor:
    """Normalized first-order invariants of an SU(3)-structure."""

    N: tuple
    S: tuple
    lam: tuple

    def __post_init__(self):
        object.__setattr__(self, "N", tuple(tuple(gr(x) for x in r) for r in self.N))
        object.__setattr__(self, "S", tuple(tuple(gr(x) for x in r) for r in self.S))
        object.__setattr__(self, "lam", tuple(gr(x) for x in self.lam))

    @classmethod
    def zero(cls) -> TorsionTensor:
        return cls(zeros(3), zeros(3), [ZERO] * 3)

    @classmethod
    def from_nijenhuis(cls, N) -> TorsionTensor:
        return cls(N, zeros(3), [ZERO] * 3)

    def raw_nijenhuis(self) -> list:
        """``N_ijk = eps_jkl N_il``."""
        return [
            [[sum((self.N[i][l] * levi_civita(j, k, l) for l in range(3)), ZERO) for k in range(3)]
             for j in range(3)]
            for i in range(3)
        ]

    @staticmethod
    def normalize_nijenhuis(raw) -> list:
        """``N_ij = 1/2 eps_jkl N_ikl``."""
        return [
            [sum((gr(raw[i][k][l]) * levi_civita(j, k, l) for k in range(3) for l in range(3)), ZERO) * HALF
             for j in range(3)]
            for i in range(3)
        ]

    def raw_s(self) -> list:
        """``S_ijk = eps_jkl S_il``."""
        return [
            [[sum((self.S[i][l] * levi_civita(j, k, l) for l in range(3)), ZERO) for k in range(3)]
             for j in range(3)]
            for i in range(3)
        ]

    def to_json(self) -> dict:
        return {
            "N": [[x.to_json() for x in r] for r in self.N],
            "S": [[x.to_json() for x in r] for r in self.S],
            "lambda": [x.to_json() for x in self.lam],
        }

    @classmethod
    def from_json(cls, data: dict) -> TorsionTensor:
        dec = GaussianRational.from_json
        N = [[dec(x) for x in r] for r in data.get("N", [[0] * 3] * 3)]
        S = [[dec(x) for x in r] for r in data.get("S", [[0] * 3] * 3)]
        lam = [dec(x) for x in data.get("lambda", [0, 0, 0])]
        return cls(N, S, lam)


CALABI_YAU = "CalabiYau"
NEARLY_KAHLER = "NearlyKahler"
NEARLY_CY_STRICT = "NearlyCalabiYauStrict"
ADMISSIBLE = "Admissible"
GENERIC = "Generic"

PRECEDENCE = (CALABI_YAU, NEARLY_KAHLER, NEARLY_CY_STRICT, ADMISSIBLE, GENERIC)


@dataclass(frozen=True)
class StructureClass:
    tag: str
    c: Optional[Fraction] = None
    witness: Optional[dict] = None

    def __post_init__(self):
        if self.tag not in PRECEDENCE:
            raise ValueError(f"unknown structure class {self.tag!r}")

    def at_least(self, tag: str) -> bool:
        """True if this class is ``tag`` or stronger in the precedence order."""
        return PRECEDENCE.index(self.tag) <= PRECEDENCE.index(tag)

    def to_json(self) -> dict:
        out: dict = {"tag": self.tag}
        if self.c is not None:
            out["c"] = f"{self.c.numerator}/{self.c.denominator}"
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _is_zero_matrix(a) -> bool:
    return all(x.is_zero() for row in a for x in row)


def _is_hermitian(a) -> bool:
    return all(a[i][j] == a[j][i].conj() for i in range(3) for j in range(3))


def admissibility_equations(S) -> tuple[list[list], list]:
    """Linear system for ``u`` in ``eps_ljk S_il = u_j delta_ik - u_k delta_ij``.

    Unknowns are ``u_1, u_2, u_3``; one row per ``(i, j, k)``.
    """
    rows, rhs = [], []
    for i in range(3):
        for j in range(3):
            for k in range(3):
                lhs = sum((gr(S[i][l]) * levi_civita(l, j, k) for l in range(3)), ZERO)
                row = [ZERO, ZERO, ZERO]
                if i == k:
                    row[j] = row[j] + 1
                if i == j:
                    row[k] = row[k] - 1
                rows.append(row)
                rhs.append(lhs)
    return rows, rhs


def admissibility_solve(S, N) -> Optional[tuple[list[GaussianRational], Fraction]]:
    """``(u, a)`` with ``a = tr N`` when the admissibility equations are solvable."""
    tr = sum((gr(N[i][i]) for i in range(3)), ZERO)
    if not tr.is_real():
        return None
    rows, rhs = admissibility_equations(S)
    u = linalg.solve(rows, rhs, zero=ZERO)
    if u is None:
        return None
    return u, tr.re


def classify_torsion(t: TorsionTensor, mu_present: bool = False) -> StructureClass:
    """Strongest structure class satisfied by the torsion ``t``.

    With ``mu_present`` the extra torsion rules out the Calabi-Yau, nearly
    Kahler and nearly Calabi-Yau branches; only admissibility is tested.
    """
    lam_zero = all(x.is_zero() for x in t.lam)
    S_zero = _is_zero_matrix(t.S)
    N_zero = _is_zero_matrix(t.N)
    if not mu_present and lam_zero and S_zero:
        if N_zero:
            return StructureClass(CALABI_YAU)
        c = t.N[0][0]
        if c.is_real() and not c.is_zero() and all(
            t.N[i][j] == (c if i == j else ZERO) for i in range(3) for j in range(3)
        ):
            return StructureClass(NEARLY_KAHLER, c=c.re)
        if _is_hermitian(t.N) and trace(t.N).is_zero():
            return StructureClass(NEARLY_CY_STRICT)
    if lam_zero:
        sol = admissibility_solve(t.S, t.N)
        if sol is not None:
            u, a = sol
            return StructureClass(
                ADMISSIBLE,
                witness={"u": [x.to_json() for x in u], "a": f"{a.numerator}/{a.denominator}"},
            )
    return StructureClass(GENERIC)


# ---------------------------------------------------------------------------
# structure equations
# ---------------------------------------------------------------------------


def structure_equations(t: TorsionTensor, space: GeneratorSpace | None = None) -> dict[int, Form]:
    """``d`` of the unitary coframe (connection omitted) for torsion ``t``.

    The connection is su(3)-valued and drops out of ``dOmega`` and ``dPsi``.
    """
    space = space or unitary_space(3)
    w = space.gens("w1", "w2", "w3")
    wb = space.gens("wb1", "wb2", "wb3")
    real_lam = sum(
        (wb[k] * t.lam[k] + w[k] * t.lam[k].conj() for k in range(3)), space.zero()
    )
    d = {}
    for i in range(3):
        acc = space.zero()
        for j in range(3):
            for k in range(3):
                for l in range(3):
                    e = levi_civita(j, k, l)
                    if not e:
                        continue
                    if not t.S[i][j].is_zero():
                        acc = acc + wedge(w[k], w[l]) * (t.S[i][j] * (HALF * e))
                    if not t.N[i][j].is_zero():
                        acc = acc + wedge(wb[k], wb[l]) * (t.N[i][j] * (HALF * e))
        acc = acc + wedge(real_lam, w[i]) * (I / 3)
        d[space.idx(f"w{i + 1}")] = acc
    for i in range(3):
        d[space.idx(f"wb{i + 1}")] = conjugate(d[space.idx(f"w{i + 1}")])
    return d


def torsion_forms(t: TorsionTensor):
    """``(Omega, Psi, dOmega, dPsi)`` computed from the structure equations."""
    space = unitary_space(3)
    d = structure_equations(t, space)
    Omega, Psi = su_forms(space.gens("w1", "w2", "w3"), space.gens("wb1", "wb2", "wb3"))
    return Omega, Psi, exterior_derivative(Omega, d), exterior_derivative(Psi, d)


def nijenhuis_from_structure(dw: Sequence[Form]) -> list[list[GaussianRational]]:
    """Read ``N_ij`` off the ``wb ^ wb`` part of ``dw_1, dw_2, dw_3``."""
    cyc = {0: ("wb2", "wb3"), 1: ("wb3", "wb1"), 2: ("wb1", "wb2")}
    N = zeros(3)
    for i in range(3):
        for j in range(3):
            c = dw[i].coeff(*cyc[j])
            if not c.is_constant():
                raise ExteriorError("parametric torsion")
            N[i][j] = c.constant
    return N


def admissible_by_forms(t: TorsionTensor) -> bool:
    """Whether ``dOmega = theta ^ Omega + a psi`` is solvable (real ``a``), by direct linear algebra."""
    Omega, Psi, dOmega, _ = torsion_forms(t)
    space = Omega.space
    psi = Psi.imag_part()
    w = space.gens("w1", "w2", "w3")
    wb = space.gens("wb1", "wb2", "wb3")
    # unknowns: Re u_k, Im u_k (k = 1..3) and a; theta = u_k w_k + conj(u_k) wb_k
    basis = []
    for k in range(3):
        basis.append(wedge(w[k] + wb[k], Omega))
        basis.append(wedge(w[k] * I - wb[k] * I, Omega))
    basis.append(psi)
    monos = sorted({m for f in basis + [dOmega] for m in f.terms})
    rows, rhs = [], []
    for mono in monos:
        coeffs = [f.terms.get(mono, ParamCoeff(ZERO)).constant for f in basis]
        target = dOmega.terms.get(mono, ParamCoeff(ZERO)).constant
        rows.append([Fraction(c.re) for c in coeffs])
        rhs.append(target.re)
        rows.append([Fraction(c.im) for c in coeffs])
        rhs.append(target.im)
    return linalg.solve(rows, rhs, zero=Fraction(0)) is not None


def all_permutations_sign():
    return {p: levi_civita(*p) for p in permutations(range(3))}
