"""Constant-coefficient exterior differential systems at a point.

An :class:`EDSSystem` lists ideal generators on a generator space split into
independence forms (``w_i``, ``wb_i``) and fiber forms, together with an
affine substitution expressing each fiber form in terms of the independence
forms. From this we get the rank of the integral-element equations, polar
ranks along a flag and Cartan's test.

Polar ranks are computed at the fiber-zero element: a polar form
``e_I -| Phi`` is replaced by its fiber projection. Because every generator is
affine in the fiber forms and the integral element projects isomorphically to
the independence directions, this projection does not change the rank.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Optional, Sequence

from . import linalg
from .exterior import (
    ExteriorError,
    Form,
    GeneratorSpace,
    Param,
    ParamCoeff,
    VectorSlot,
    complex_param,
    conjugate,
    contract,
    exterior_derivative,
    fiber_projection,
    rank_one_forms,
    substitute,
    wedge,
)
from .numbers import GaussianRational, I, ONE, ZERO
from .su3 import levi_civita

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)
IDX = (1, 2, 3)


# ---------------------------------------------------------------------------
# generator spaces
# ---------------------------------------------------------------------------


def _fiber_entries(admissible: bool) -> list[tuple]:
    entries: list[tuple] = [(f"w{k}", f"wb{k}", True) for k in IDX]
    entries += [(f"wb{k}", None, True) for k in IDX]
    for i in IDX:
        entries.append((f"k{i}{i}", None))
    for i, j in combinations(IDX, 2):
        entries.append((f"k{i}{j}", f"k{j}{i}"))
        entries.append((f"k{j}{i}", None))
    for i in IDX:
        for j in IDX:
            entries.append((f"b{i}{j}", f"bb{i}{j}"))
    for i in IDX:
        for j in IDX:
            entries.append((f"bb{i}{j}", None))
    entries.append(("mu", None))
    if admissible:
        for i in IDX:
            entries.append((f"Du{i}", f"Dub{i}"))
        for i in IDX:
            entries.append((f"Dub{i}", None))
        entries.append(("Da", None))
    return entries


def nearly_cy_space() -> GeneratorSpace:
    """``w, wb`` (6), Hermitian ``kappa`` (9 real), ``beta, betabar`` (18), ``mu``: 34 generators."""
    return GeneratorSpace.build(_fiber_entries(False))


def admissible_space() -> GeneratorSpace:
    """:func:`nearly_cy_space` plus ``Du, Dubar`` (6) and ``Da``: 41 generators."""
    return GeneratorSpace.build(_fiber_entries(True))


class _Gens:
    """Name-based access to the generators of an EDS space."""

    def __init__(self, space: GeneratorSpace):
        self.space = space
        g = space.gen
        self.w = {i: g(f"w{i}") for i in IDX}
        self.wb = {i: g(f"wb{i}") for i in IDX}
        self.k = {(i, j): g(f"k{i}{j}") for i in IDX for j in IDX}
        self.b = {(i, j): g(f"b{i}{j}") for i in IDX for j in IDX}
        self.bb = {(i, j): g(f"bb{i}{j}") for i in IDX for j in IDX}
        self.mu = g("mu")
        if "Da" in space.index:
            self.Du = {i: g(f"Du{i}") for i in IDX}
            self.Dub = {i: g(f"Dub{i}") for i in IDX}
            self.Da = g("Da")

    def Omega(self) -> Form:
        return sum((wedge(self.w[j], self.wb[j]) for j in IDX), self.space.zero()) * (I * HALF)

    def Psi(self) -> Form:
        return wedge(self.w[1], self.w[2], self.w[3])

    def Psibar(self) -> Form:
        return wedge(self.wb[1], self.wb[2], self.wb[3])

    def psi(self) -> Form:
        return (self.Psi() - self.Psibar()) * GaussianRational(0, -HALF)

    def trace_kappa(self) -> Form:
        return self.k[1, 1] + self.k[2, 2] + self.k[3, 3]

    def fiber_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.space)) if i not in self.space.independence)


def _eps(i: int, j: int, k: int) -> int:
    return levi_civita(i - 1, j - 1, k - 1)


# ---------------------------------------------------------------------------
# displayed generators
# ---------------------------------------------------------------------------


def _d_omega_fiber(G: _Gens, antisymmetrize: bool = False) -> Form:
    """Fiber-linear part of ``dOmega`` in terms of ``kappa`` and ``beta``."""
    out = G.space.zero()
    hi, mhi = I * HALF, -I * HALF
    for i in IDX:
        for j in IDX:
            out = out + wedge(G.k[i, j], G.w[j], G.wb[i]) * mhi
            out = out + wedge(G.k[j, i], G.wb[j], G.w[i]) * hi
            if antisymmetrize:
                bij = G.b[i, j] - G.b[j, i]
                bbij = G.bb[i, j] - G.bb[j, i]
                out = out + wedge(bij, G.wb[j], G.wb[i]) * (-I * QUARTER)
                out = out + wedge(bbij, G.w[j], G.w[i]) * (I * QUARTER)
            else:
                out = out + wedge(G.b[i, j], G.wb[j], G.wb[i]) * mhi
                out = out + wedge(G.bb[i, j], G.w[j], G.w[i]) * hi
    return out


def _d_psi_beta(G: _Gens) -> Form:
    out = G.space.zero()
    for i in IDX:
        for j in IDX:
            for k in IDX:
                e = _eps(i, j, k)
                if not e:
                    continue
                for l in IDX:
                    out = out + wedge(G.bb[i, l], G.w[l], G.wb[j], G.wb[k]) * (-I * QUARTER * e)
                    out = out + wedge(G.b[i, l], G.wb[l], G.w[j], G.w[k]) * (I * QUARTER * e)
    return out


def _d_psi(G: _Gens, mu_coeff: Fraction = Fraction(-1, 2)) -> Form:
    tr = G.trace_kappa()
    out = wedge(G.mu * mu_coeff + tr * (-I * HALF), G.Psibar())
    out = out + wedge(G.mu * mu_coeff + tr * (I * HALF), G.Psi())
    return out + _d_psi_beta(G)


# ---------------------------------------------------------------------------
# structure-equation oracle
# ---------------------------------------------------------------------------


def connection_structure(G: _Gens) -> dict[int, Form]:
    """``dw = -(i/3 mu + kappa) ^ w - beta ^ wb`` with the su(3) part set to zero."""
    sp = G.space
    d: dict[int, Form] = {}
    for i in IDX:
        acc = wedge(G.mu, G.w[i]) * (-I / 3)
        for j in IDX:
            acc = acc - wedge(G.k[i, j], G.w[j]) - wedge(G.b[i, j], G.wb[j])
        d[sp.idx(f"w{i}")] = acc
        d[sp.idx(f"wb{i}")] = conjugate(acc)
    return d


def derived_nearly_cy(G: _Gens) -> tuple[Form, Form]:
    """``(dOmega, dpsi)`` obtained by differentiating ``Omega`` and ``psi``."""
    d = connection_structure(G)
    return exterior_derivative(G.Omega(), d), exterior_derivative(G.psi(), d)


def derived_admissible(G: _Gens, a0, u0) -> tuple[Form, Form]:
    """``Pi_3`` and ``Pi_4 = dtheta ^ Omega + (da - a theta) ^ psi + a dpsi`` at the point ``(a0, u0)``."""
    a0 = GaussianRational.coerce(a0)
    u0 = [GaussianRational.coerce(x) for x in u0]
    sp = G.space
    d = connection_structure(G)
    Omega, psi = G.Omega(), G.psi()
    dOmega = exterior_derivative(Omega, d)
    dpsi = exterior_derivative(psi, d)
    theta = sum((G.w[i] * u0[i - 1] + G.wb[i] * u0[i - 1].conj() for i in IDX), sp.zero())
    pi3 = dOmega - wedge(theta, Omega) - psi * a0
    dtheta = sp.zero()
    for i in IDX:
        du = G.Du[i] + G.mu * (I / 3 * u0[i - 1])
        for j in IDX:
            du = du + G.k[j, i] * u0[j - 1] + G.bb[j, i] * u0[j - 1].conj()
        piece = wedge(du, G.w[i]) + d[sp.idx(f"w{i}")] * u0[i - 1]
        dtheta = dtheta + piece + conjugate(piece)
    # da - a theta = Da
    pi4 = wedge(dtheta, Omega) + wedge(G.Da, psi) + dpsi * a0
    return pi3, pi4


# ---------------------------------------------------------------------------
# systems
# ---------------------------------------------------------------------------


@dataclass
class EDSSystem:
    name: str
    space: GeneratorSpace
    ideal_gens: tuple
    substitution: dict
    base_point: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def fiber(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.space)) if i not in self.space.independence)

    def real_fiber_dimension(self) -> int:
        """Real dimension spanned by the fiber 1-forms (each conjugate pair counts twice)."""
        return len(self.fiber)

    def check_substitution(self) -> bool:
        """Substituting then conjugating equals conjugating then substituting."""
        cj = self.space.conj
        for i, img in self.substitution.items():
            if conjugate(img) != self.substitution[cj[i]]:
                return False
        return True


def _param_substitution(G: _Gens, admissible: bool) -> dict[int, Form]:
    sp = G.space
    sub: dict[int, Form] = {}
    A = {(i, j, k): complex_param(f"A{i}{j}{k}") for i in IDX for j in IDX for k in IDX}
    B = {(i, j, k): complex_param(f"B{i}{j}{k}") for i in IDX for j in IDX for k in IDX}
    C = {(i, j, k): complex_param(f"C{i}{j}{k}") for i in IDX for j in IDX for k in IDX}
    b = {i: complex_param(f"b{i}") for i in IDX}

    def lin(pairs) -> Form:
        out = sp.zero()
        for gen, p in pairs:
            out = out + gen * p
        return out

    for i in IDX:
        for j in IDX:
            img = lin([(G.wb[k], A[i, j, k][0]) for k in IDX] + [(G.w[k], A[j, i, k][1]) for k in IDX])
            sub[sp.idx(f"k{i}{j}")] = img
            beta = lin([(G.wb[k], B[i, j, k][0]) for k in IDX] + [(G.w[k], C[i, j, k][0]) for k in IDX])
            sub[sp.idx(f"b{i}{j}")] = beta
            sub[sp.idx(f"bb{i}{j}")] = conjugate(beta)
    sub[sp.idx("mu")] = lin([(G.w[i], b[i][0]) for i in IDX] + [(G.wb[i], b[i][1]) for i in IDX])
    if admissible:
        U1 = {(i, j): complex_param(f"Ubb{i}{j}") for i in IDX for j in IDX}
        U2 = {(i, j): complex_param(f"Ub{i}{j}") for i in IDX for j in IDX}
        av = {i: complex_param(f"a{i}") for i in IDX}
        for i in IDX:
            img = lin([(G.w[j], U1[i, j][0]) for j in IDX] + [(G.wb[j], U2[i, j][0]) for j in IDX])
            sub[sp.idx(f"Du{i}")] = img
            sub[sp.idx(f"Dub{i}")] = conjugate(img)
        sub[sp.idx("Da")] = lin([(G.w[i], av[i][0]) for i in IDX] + [(G.wb[i], av[i][1]) for i in IDX])
    return sub


def build_nearly_cy_system(mu_coeff: Fraction = Fraction(-1, 2)) -> EDSSystem:
    """The system generated by ``dOmega`` and ``dpsi`` on the coframe bundle modulo SU(3).

    ``mu_coeff`` is the coefficient of ``mu ^ Psi`` in ``dpsi``; changing it
    gives perturbed systems for testing.
    """
    G = _Gens(nearly_cy_space())
    dOmega = _d_omega_fiber(G)
    dpsi = _d_psi(G, Fraction(mu_coeff))
    return EDSSystem(
        name="nearly-cy",
        space=G.space,
        ideal_gens=(dOmega, dpsi),
        substitution=_param_substitution(G, admissible=False),
    )


def build_admissible_system(a0=1, u0: Sequence = (0, 0, 0)) -> EDSSystem:
    """``Pi_3`` and ``Pi_4`` at the point ``a = a0``, ``u = u0``."""
    a0 = GaussianRational.coerce(a0)
    if not a0.is_real():
        raise ValueError("a0 must be real")
    u0 = [GaussianRational.coerce(x) for x in u0]
    G = _Gens(admissible_space())
    sp = G.space
    Psi, Psib = G.Psi(), G.Psibar()
    Omega = G.Omega()
    theta = sum((G.w[i] * u0[i - 1] + G.wb[i] * u0[i - 1].conj() for i in IDX), sp.zero())
    pi3 = _d_omega_fiber(G, antisymmetrize=True)
    pi3 = pi3 + wedge(theta, Omega) * -1
    pi3 = pi3 + (Psib - Psi) * (-I * HALF * a0)
    du_part = sum(
        (wedge(G.Du[i], G.w[i]) + wedge(G.Dub[i], G.wb[i]) for i in IDX), sp.zero()
    )
    ww = sum((wedge(G.w[j], G.wb[j]) for j in IDX), sp.zero())
    pi4 = wedge(du_part, ww) * (I * HALF)
    pi4 = pi4 + wedge(G.Da - G.trace_kappa() * a0, Psib - Psi) * (I * HALF)
    pi4 = pi4 + wedge(G.mu, Psib + Psi) * (-a0 * HALF)
    pi4 = pi4 + _d_psi_beta(G) * a0
    return EDSSystem(
        name="admissible",
        space=sp,
        ideal_gens=(pi3, pi4),
        substitution=_param_substitution(G, admissible=True),
        base_point={"a": a0, "u": u0},
    )


# ---------------------------------------------------------------------------
# integral elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntegralElementVariety:
    """Real linear equations ``rows . x = rhs`` on the real parameter coordinates."""

    params: tuple
    rows: tuple
    rhs: tuple
    rank: int
    consistent: bool

    @property
    def dimension(self) -> int:
        return len(self.params) - self.rank


def _real_columns(params: set[Param]) -> list[tuple[Param, str]]:
    reps = sorted({p if p.is_real or not p.name.endswith("*") else p.conjugate() for p in params})
    cols = []
    for p in reps:
        cols.append((p, "re"))
        if not p.is_real:
            cols.append((p, "im"))
    return cols


def integral_element_rank(sys: EDSSystem) -> IntegralElementVariety:
    """Rank of the equations on the parameters making the substituted element integral."""
    indep = sys.space.independence
    polys = []
    for g in sys.ideal_gens:
        s = substitute(g, sys.substitution)
        for key in s.terms:
            if not set(key) <= indep:
                raise ExteriorError("substitution left a fiber generator behind")
        polys.append(s)
    params = set()
    for img in sys.substitution.values():
        params |= img.params()
    for s in polys:
        params |= s.params()
    cols = _real_columns(params)
    rows, rhs = [], []
    for s in polys:
        for key in sorted(s.terms):
            c = s.terms[key]
            row = []
            for p, part in cols:
                cp = c.linear.get(p, ZERO)
                if p.is_real:
                    row.append(cp)
                    continue
                cq = c.linear.get(p.conjugate(), ZERO)
                row.append(cp + cq if part == "re" else (cp - cq) * I)
            const = -c.constant
            rows.append([x.re for x in row])
            rhs.append(const.re)
            rows.append([x.im for x in row])
            rhs.append(const.im)
    if not rows:
        return IntegralElementVariety(tuple(), tuple(), tuple(), 0, True)
    r = linalg.rank(rows)
    aug = linalg.rank([row + [b] for row, b in zip(rows, rhs)])
    labels = tuple(f"{part}({p.name})" for p, part in cols)
    return IntegralElementVariety(labels, tuple(map(tuple, rows)), tuple(rhs), r, aug == r)


# ---------------------------------------------------------------------------
# flags, polar spaces, Cartan's test
# ---------------------------------------------------------------------------


def real_vector(space: GeneratorSpace, re_parts: Sequence, im_parts: Sequence) -> VectorSlot:
    """Fiber-zero vector with ``Re w_j = re_parts[j]`` and ``Im w_j = im_parts[j]``."""
    comps = {}
    for j in range(3):
        z = GaussianRational(re_parts[j], im_parts[j])
        comps[space.idx(f"w{j + 1}")] = z
        comps[space.idx(f"wb{j + 1}")] = z.conj()
    return VectorSlot(space, comps)


def default_flag(space: GeneratorSpace) -> list[VectorSlot]:
    """``e_1..e_3`` dual to ``Re w_j`` and ``e_4..e_6`` dual to ``Im w_j``."""
    out = []
    for j in range(3):
        v = [0, 0, 0]
        v[j] = 1
        out.append(real_vector(space, v, [0, 0, 0]))
    for j in range(3):
        v = [0, 0, 0]
        v[j] = 1
        out.append(real_vector(space, [0, 0, 0], v))
    return out


def random_flag(space: GeneratorSpace, rng: random.Random, bound: int = 5) -> list[VectorSlot]:
    """A random rational basis of the fiber-zero element (redrawn until independent)."""
    while True:
        mat = [[Fraction(rng.randint(-bound, bound)) for _ in range(6)] for _ in range(6)]
        if linalg.rank(mat) == 6:
            break
    return [real_vector(space, row[:3], row[3:]) for row in mat]


def polar_forms(sys: EDSSystem, flag_prefix: Sequence[VectorSlot]) -> list[Form]:
    """Fiber parts of ``(e_I) -| Phi`` for ``|I| = deg Phi - 1`` inside the prefix."""
    fiber = sys.fiber
    out = []
    for g in sys.ideal_gens:
        p = g.degree
        for combo in combinations(range(len(flag_prefix)), p - 1):
            f = contract([flag_prefix[i] for i in combo], g)
            out.append(fiber_projection(f, fiber))
    return out


def polar_rank(sys: EDSSystem, flag_prefix: Sequence[VectorSlot]) -> int:
    return rank_one_forms(polar_forms(sys, flag_prefix)) if flag_prefix or sys.ideal_gens else 0


@dataclass(frozen=True)
class CartanReport:
    flag: tuple
    c: tuple
    s: tuple
    integral_rank: int
    involutive: bool
    test_lhs: int
    test_rhs: int
    consistent: bool = True
    notes: tuple = ()

    def to_json(self) -> dict:
        return {
            "c": list(self.c),
            "s": list(self.s),
            "integral_rank": self.integral_rank,
            "involutive": self.involutive,
            "test_lhs": self.test_lhs,
            "test_rhs": self.test_rhs,
            "consistent": self.consistent,
            "notes": list(self.notes),
        }


def characters(c: Sequence[int], fiber_dim: int) -> tuple[int, ...]:
    """``s_0 = c_0``, ``s_k = c_k - c_{k-1}`` and ``s_6 = fiber_dim - c_5``."""
    s = [c[0]] + [c[k] - c[k - 1] for k in range(1, 6)]
    s.append(fiber_dim - c[5])
    return tuple(s)


def cartan_test(
    sys: EDSSystem,
    flag: Sequence[VectorSlot] | None = None,
    variety: IntegralElementVariety | None = None,
) -> CartanReport:
    """Polar ranks ``c_0..c_5`` along ``flag`` compared with the integral-element rank.

    The test is ``c_0 + ... + c_5 == rank`` (equivalently
    ``6 s_0 + 5 s_1 + ... + s_5 == rank``).
    """
    flag = list(flag) if flag is not None else default_flag(sys.space)
    if len(flag) != 6:
        raise ValueError("a flag needs six vectors")
    c = tuple(polar_rank(sys, flag[:k]) for k in range(6))
    s = characters(c, sys.real_fiber_dimension())
    variety = variety or integral_element_rank(sys)
    lhs = sum(c)
    notes = []
    if not variety.consistent:
        notes.append("integral-element equations are inconsistent")
    return CartanReport(
        flag=tuple(flag),
        c=c,
        s=s,
        integral_rank=variety.rank,
        involutive=variety.consistent and lhs == variety.rank,
        test_lhs=lhs,
        test_rhs=variety.rank,
        consistent=variety.consistent,
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# the four-term polar relation
# ---------------------------------------------------------------------------


def polar_relation_terms(sys: EDSSystem, flag: Sequence[VectorSlot] | None = None) -> list[Form]:
    """``(e2^e4)-|dOmega, -(e1^e5)-|dOmega, -(e2^e3^e5)-|dpsi, -(e1^e3^e4)-|dpsi`` (fiber parts)."""
    e = list(flag) if flag is not None else default_flag(sys.space)
    g3, g4 = sys.ideal_gens
    fib = sys.fiber
    return [
        fiber_projection(contract([e[1], e[3]], g3), fib),
        -fiber_projection(contract([e[0], e[4]], g3), fib),
        -fiber_projection(contract([e[1], e[2], e[4]], g4), fib),
        -fiber_projection(contract([e[0], e[2], e[3]], g4), fib),
    ]


def polar_relation_check(sys: EDSSystem) -> bool:
    """The four terms sum to zero and no three of them do."""
    terms = polar_relation_terms(sys)
    total = sum(terms[1:], terms[0])
    if not total.is_zero():
        return False
    for k in range(4):
        if (total - terms[k]).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# real and imaginary parts of fiber generators, for reading off polar forms
# ---------------------------------------------------------------------------


def fiber_form(space: GeneratorSpace, expr: Callable[[_Gens], Form]) -> Form:
    return expr(_Gens(space))


def re(f: Form) -> Form:
    return f.real_part()


def im(f: Form) -> Form:
    return f.imag_part()


def gens(space: GeneratorSpace) -> _Gens:
    return _Gens(space)
