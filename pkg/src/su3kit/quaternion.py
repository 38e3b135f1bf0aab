"""Quaternionic frames over H^2 for Sp(2) and Sp(1,1).

A quaternion is written ``q = z1 + j z2`` with complex ``z1, z2`` and
``z j = j conj(z)``. The product is

    (z1 + j z2)(z3 + j z4) = z1 z3 - conj(z2) z4 + j (z2 z3 + conj(z1) z4)

The same rule, with wedge products, multiplies quaternion-valued 1-forms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .exterior import (
    Form,
    GeneratorSpace,
    ParamCoeff,
    VectorSlot,
    conjugate,
    evaluate,
    exterior_derivative,
    substitute,
    wedge,
)
from .numbers import SQRT2, GaussianRational, I, ONE, ZERO, SurdGaussian
from .su3 import model_forms, su_forms

SP2 = "sp2"
SP11 = "sp11"
GROUPS = (SP2, SP11)


class DegenerateSample(ValueError):
    """A rational parametrization hit a pole."""


def _num(x):
    if isinstance(x, (GaussianRational, SurdGaussian)):
        return x
    return GaussianRational.coerce(x)


@dataclass(frozen=True)
class Quaternion:
    z1: object = ZERO
    z2: object = ZERO

    def __post_init__(self):
        object.__setattr__(self, "z1", _num(self.z1))
        object.__setattr__(self, "z2", _num(self.z2))

    @classmethod
    def real(cls, x) -> Quaternion:
        return cls(x, 0)

    def __add__(self, o: Quaternion) -> Quaternion:
        return Quaternion(self.z1 + o.z1, self.z2 + o.z2)

    def __sub__(self, o: Quaternion) -> Quaternion:
        return Quaternion(self.z1 - o.z1, self.z2 - o.z2)

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.z1, -self.z2)

    def __mul__(self, o) -> Quaternion:
        if not isinstance(o, Quaternion):
            o = Quaternion(o, 0)
        return quat_mul(self, o)

    def conj(self) -> Quaternion:
        """Quaternion conjugate: ``conj(z1) - j z2``."""
        return Quaternion(self.z1.conj(), -self.z2)

    def C(self) -> Quaternion:
        """The automorphism ``z1 + j z2 -> conj(z1) + j conj(z2)``."""
        return Quaternion(self.z1.conj(), self.z2.conj())

    def norm2(self):
        return self.z1 * self.z1.conj() + self.z2 * self.z2.conj()

    def is_zero(self) -> bool:
        return self.z1.is_zero() and self.z2.is_zero()

    def to_json(self) -> dict:
        return {"z1": self.z1.to_json(), "z2": self.z2.to_json()}


QI = Quaternion(I, 0)
QJ = Quaternion(0, 1)
QONE = Quaternion(1, 0)


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    a, b, c, d = p.z1, p.z2, q.z1, q.z2
    return Quaternion(a * c - b.conj() * d, b * c + a.conj() * d)


def inner_product(kind: str, v: Sequence[Quaternion], w: Sequence[Quaternion]) -> Quaternion:
    """``conj(q1) p1 + eps conj(q2) p2`` with ``eps = +1`` (definite) or ``-1`` (split)."""
    if kind not in ("definite", "split"):
        raise ValueError(f"unknown inner product {kind!r}")
    first = v[0].conj() * w[0]
    second = v[1].conj() * w[1]
    return first + second if kind == "definite" else first - second


def kind_of(group: str) -> str:
    return {SP2: "definite", SP11: "split"}[_group(group)]


def signature(group: str) -> tuple[int, int]:
    return (1, 1) if _group(group) == SP2 else (1, -1)


def _group(group: str) -> str:
    g = group.lower().replace("(", "").replace(")", "").replace(",", "").replace("-", "")
    if g not in GROUPS:
        raise ValueError(f"unknown group {group!r}; expected sp2 or sp11")
    return g


@dataclass(frozen=True)
class FrameMatrix:
    """2x2 quaternion matrix ``entries[a][b] = phi^a_b``."""

    entries: tuple
    group: str

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        object.__setattr__(self, "group", _group(self.group))

    def __mul__(self, o: FrameMatrix) -> FrameMatrix:
        e, f = self.entries, o.entries
        out = [[e[a][0] * f[0][b] + e[a][1] * f[1][b] for b in range(2)] for a in range(2)]
        return FrameMatrix(out, self.group)

    def __sub__(self, o: FrameMatrix) -> FrameMatrix:
        return FrameMatrix(
            [[self.entries[a][b] - o.entries[a][b] for b in range(2)] for a in range(2)], self.group
        )

    def in_algebra(self) -> bool:
        """``eps_a conj(phi^a_b)... `` i.e. ``conj(phi) eta + eta phi^t = 0`` with ``eta = diag(signature)``."""
        eta = signature(self.group)
        e = self.entries
        for a in range(2):
            for b in range(2):
                lhs = e[a][b].conj() * Quaternion(eta[b]) + Quaternion(eta[a]) * e[b][a]
                if not lhs.is_zero():
                    return False
        return True


# ---------------------------------------------------------------------------
# quaternion-valued forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QForm:
    """``F1 + j F2`` with complex-valued forms ``F1, F2``."""

    F1: Form
    F2: Form

    def __add__(self, o: QForm) -> QForm:
        return QForm(self.F1 + o.F1, self.F2 + o.F2)

    def __neg__(self) -> QForm:
        return QForm(-self.F1, -self.F2)

    def __sub__(self, o: QForm) -> QForm:
        return self + (-o)

    def C(self) -> QForm:
        return QForm(conjugate(self.F1), conjugate(self.F2))


def qwedge(p: QForm, q: QForm) -> QForm:
    return QForm(
        wedge(p.F1, q.F1) - wedge(conjugate(p.F2), q.F2),
        wedge(p.F2, q.F1) + wedge(conjugate(p.F1), q.F2),
    )


def frame_space() -> GeneratorSpace:
    """``rho1, rho2`` (real), ``w1..w3, t`` and conjugates: ten real dimensions."""
    entries = [("rho1", None), ("rho2", None)]
    entries += [(f"w{k}", f"wb{k}") for k in (1, 2, 3)] + [("t", "tb")]
    entries += [(f"wb{k}", None) for k in (1, 2, 3)] + [("tb", None)]
    return GeneratorSpace.build(entries)


@dataclass(frozen=True)
class FrameFormBasis:
    """Component map ``phi^a_b = F1 + j F2`` in terms of the ten frame generators."""

    group: str
    space: GeneratorSpace
    phi: tuple  # phi[a][b] is a QForm
    scale: object = ONE  # coefficient of the off-diagonal entries

    @property
    def real_generators(self) -> tuple[str, ...]:
        return ("rho1", "rho2", "Re w1", "Im w1", "Re w2", "Im w2", "Re w3", "Im w3", "Re t", "Im t")


def component_map(group: str, scale=None, tau_sign: int = 1) -> FrameFormBasis:
    """The algebra-valued form ``phi`` for ``group``.

    ``scale`` multiplies the off-diagonal entries; it defaults to ``1/sqrt 2``
    for Sp(2) and ``1`` for Sp(1,1). ``tau_sign = -1`` flips ``t`` in
    ``phi^2_2`` (a deliberate perturbation for testing).
    """
    group = _group(group)
    sp = frame_space()
    g = sp.gen
    if scale is None:
        scale = SQRT2.inverse() if group == SP2 else ONE
    phi11 = QForm(g("rho1") * I, g("wb3"))
    phi22 = QForm(g("rho2") * I, g("t") * tau_sign)
    phi21 = QForm(g("w1") * scale, g("w2") * scale)
    if group == SP2:
        phi12 = QForm(-g("wb1") * scale, g("w2") * scale)
    else:
        phi12 = QForm(g("wb1") * scale, -g("w2") * scale)
    return FrameFormBasis(group, sp, ((phi11, phi12), (phi21, phi22)), scale)


def component_rank(basis: FrameFormBasis) -> int:
    """Real rank of the map from the ten real generators to the eight complex components."""
    rows = []
    sp = basis.space
    comps = []
    for a in range(2):
        for b in range(2):
            q = basis.phi[a][b]
            comps += [q.F1, q.F2, conjugate(q.F1), conjugate(q.F2)]
    for f in comps:
        row = []
        for name in sp.names:
            c = f.terms.get((sp.idx(name),), ParamCoeff(ZERO)).constant
            row.append(SurdGaussian.coerce(c))
        rows.append(row)
    return linalg.rank(rows)


def maurer_cartan_forms(basis: FrameFormBasis) -> tuple[tuple[QForm, QForm], tuple[QForm, QForm]]:
    """``d phi = -phi ^ phi`` entrywise."""
    phi = basis.phi
    return tuple(
        tuple(-(qwedge(phi[a][0], phi[0][b]) + qwedge(phi[a][1], phi[1][b])) for b in range(2))
        for a in range(2)
    )


def maurer_cartan_structure(basis: FrameFormBasis) -> dict[int, Form]:
    """``d`` of every frame generator read off the Maurer-Cartan equations."""
    sp = basis.space
    dphi = maurer_cartan_forms(basis)
    inv = 1 / basis.scale
    d = {}
    d[sp.idx("rho1")] = dphi[0][0].F1 * -I
    d[sp.idx("rho2")] = dphi[1][1].F1 * -I
    d[sp.idx("wb3")] = dphi[0][0].F2
    d[sp.idx("t")] = dphi[1][1].F2
    if basis.phi[1][1].F2 != sp.gen("t"):
        d[sp.idx("t")] = dphi[1][1].F2 * -1
    d[sp.idx("w1")] = dphi[1][0].F1 * inv
    d[sp.idx("w2")] = dphi[1][0].F2 * inv
    for name, cname in (("w1", "wb1"), ("w2", "wb2"), ("t", "tb")):
        d[sp.idx(cname)] = conjugate(d[sp.idx(name)])
    d[sp.idx("w3")] = conjugate(d[sp.idx("wb3")])
    return d


def maurer_cartan_derive(group: str, basis: FrameFormBasis | None = None) -> dict[str, Form]:
    """``dw1, dw2, dw3`` as forms on the ten-generator space."""
    basis = basis or component_map(group)
    d = maurer_cartan_structure(basis)
    sp = basis.space
    return {f"w{k}": d[sp.idx(f"w{k}")] for k in (1, 2, 3)}


def consistency_defects(basis: FrameFormBasis) -> list[str]:
    """Entries of ``d phi`` not reproduced by the generator structure equations."""
    d = maurer_cartan_structure(basis)
    dphi = maurer_cartan_forms(basis)
    out = []
    for a in range(2):
        for b in range(2):
            q = basis.phi[a][b]
            for label, f, target in (("F1", q.F1, dphi[a][b].F1), ("F2", q.F2, dphi[a][b].F2)):
                if exterior_derivative(f, d) != target:
                    out.append(f"phi^{a + 1}_{b + 1}.{label}")
    return out


def d_squared(group: str, basis: FrameFormBasis | None = None) -> dict[str, Form]:
    """``d(dw_i)`` computed by substituting the structure equations again (should vanish)."""
    basis = basis or component_map(group)
    d = maurer_cartan_structure(basis)
    sp = basis.space
    return {f"w{k}": exterior_derivative(d[sp.idx(f"w{k}")], d) for k in (1, 2, 3)}


def expected_structure(group: str, space: GeneratorSpace | None = None) -> dict[str, Form]:
    """The structure equations in connection-plus-torsion form.

    ``dw = -Gamma ^ w + T`` with ``Gamma = [[i(rho2-rho1), -tb, 0], [t, -i(rho1+rho2), 0], [0, 0, 2i rho1]]``
    and ``T = (wb2^wb3, wb3^wb1, c wb1^wb2)``, ``c = 1`` for Sp(2), ``-2`` for Sp(1,1).
    """
    group = _group(group)
    sp = space or frame_space()
    g = sp.gen
    w = [g(f"w{k}") for k in (1, 2, 3)]
    wb = [g(f"wb{k}") for k in (1, 2, 3)]
    r1, r2, t, tb = g("rho1"), g("rho2"), g("t"), g("tb")
    zero = sp.zero()
    gamma = [
        [(r2 - r1) * I, -tb, zero],
        [t, (r1 + r2) * -I, zero],
        [zero, zero, r1 * (I * 2)],
    ]
    c = 1 if group == SP2 else -2
    torsion = [wedge(wb[1], wb[2]), wedge(wb[2], wb[0]), wedge(wb[0], wb[1]) * c]
    out = {}
    for i in range(3):
        acc = torsion[i]
        for j in range(3):
            if not gamma[i][j].is_zero():
                acc = acc - wedge(gamma[i][j], w[j])
        out[f"w{i + 1}"] = acc
    return out


@dataclass(frozen=True)
class MatchReport:
    group: str
    match: bool
    diffs: tuple  # (form, monomial, derived, expected)

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "match": self.match,
            "diffs": [
                {"form": f, "monomial": m, "derived": d, "expected": e} for f, m, d, e in self.diffs
            ],
        }


def match_structure_equation(group: str, basis: FrameFormBasis | None = None) -> MatchReport:
    """Compare the Maurer-Cartan derivation with :func:`expected_structure` term by term."""
    group = _group(group)
    basis = basis or component_map(group)
    derived = maurer_cartan_derive(group, basis)
    expected = expected_structure(group, basis.space)
    names = basis.space.names
    diffs = []
    for key in ("w1", "w2", "w3"):
        dv, ev = derived[key], expected[key]
        for mono in sorted(set(dv.terms) | set(ev.terms)):
            a = dv.terms.get(mono, ParamCoeff(ZERO)).constant
            b = ev.terms.get(mono, ParamCoeff(ZERO)).constant
            if a != b:
                diffs.append((key, "^".join(names[i] for i in mono), str(a), str(b)))
    return MatchReport(group, not diffs, tuple(diffs))


# ---------------------------------------------------------------------------
# the involution C
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InvolutionReport:
    group: str
    images: dict
    omega_to_conjugate: bool
    squares_to_identity: bool
    automorphism_samples: int
    automorphism_ok: bool
    kahler_reversed: bool
    volume_conjugated: bool

    @property
    def ok(self) -> bool:
        return (
            self.omega_to_conjugate
            and self.squares_to_identity
            and self.automorphism_ok
            and self.kahler_reversed
            and self.volume_conjugated
        )

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "images": self.images,
            "omega_to_conjugate": self.omega_to_conjugate,
            "squares_to_identity": self.squares_to_identity,
            "automorphism_samples": self.automorphism_samples,
            "automorphism_ok": self.automorphism_ok,
            "kahler_reversed": self.kahler_reversed,
            "volume_conjugated": self.volume_conjugated,
            "ok": self.ok,
        }


def _linear_coeffs(f: Form) -> list:
    sp = f.space
    return [SurdGaussian.coerce(f.terms.get((i,), ParamCoeff(ZERO)).constant) for i in range(len(sp))]


def induced_generator_map(basis: FrameFormBasis) -> dict[int, Form]:
    """Solve ``phi(C^* g) = C(phi(g))`` for the images ``C^* g`` of the ten generators."""
    sp = basis.space
    n = len(sp)
    cj = sp.conj
    # unknowns M[g][h]: C^* g = sum_h M[g][h] h ; solved column by column
    comps = []
    for a in range(2):
        for b in range(2):
            q = basis.phi[a][b]
            cq = q.C()
            for f, target in ((q.F1, cq.F1), (q.F2, cq.F2)):
                comps.append((f, target))
                comps.append((conjugate(f), conjugate(target)))
    images = {g: sp.zero() for g in range(n)}
    for h in range(n):
        rows, rhs = [], []
        for f, target in comps:
            rows.append(_linear_coeffs(f))
            rhs.append(_linear_coeffs(target)[h])
        col = linalg.solve(rows, rhs, zero=SurdGaussian(0))
        if col is None:
            raise ValueError("C does not preserve the algebra")
        for g in range(n):
            if not col[g].is_zero():
                images[g] = images[g] + Form._clean(sp, {(h,): ParamCoeff(col[g])})
    return images


def _random_quaternion(rng: random.Random, bound: int = 6) -> Quaternion:
    def r():
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    return Quaternion(GaussianRational(r(), r()), GaussianRational(r(), r()))


def involution_action(group: str, samples: int = 100, seed: int = 0) -> InvolutionReport:
    group = _group(group)
    basis = component_map(group)
    sp = basis.space
    images = induced_generator_map(basis)
    omega_ok = all(images[sp.idx(f"w{k}")] == sp.gen(f"wb{k}") for k in (1, 2, 3))
    square_ok = all(substitute(images[g], images) == sp.gen(sp.names[g]) for g in range(len(sp)))
    rng = random.Random(seed)
    auto_ok = True
    for _ in range(samples):
        p, q = _random_quaternion(rng), _random_quaternion(rng)
        if (p * q).C() != p.C() * q.C():
            auto_ok = False
            break
    w = sp.gens("w1", "w2", "w3")
    wb = sp.gens("wb1", "wb2", "wb3")
    Omega, Psi = su_forms(w, wb)
    kahler = substitute(Omega, images) == -Omega
    vol = substitute(Psi, images) == conjugate(Psi)
    named = {sp.names[g]: repr(f) for g, f in images.items()}
    return InvolutionReport(group, named, omega_ok, square_ok, samples, auto_ok, kahler, vol)


# ---------------------------------------------------------------------------
# fixed loci
# ---------------------------------------------------------------------------


def sphere_point(rng: random.Random, bound: int = 9) -> list[Fraction]:
    """Rational point of S^3 by inverse stereographic projection."""
    y = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(3)]
    n = sum(t * t for t in y)
    return [2 * t / (n + 1) for t in y] + [(n - 1) / (n + 1)]


def circle_point(rng: random.Random, bound: int = 9) -> tuple[Fraction, Fraction]:
    t = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    return (1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)


def pseudo_sphere_point(rng: random.Random, bound: int = 9) -> list[Fraction]:
    """Rational point of ``x1^2 + x2^2 - x3^2 - x4^2 = 1``."""
    m = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    if m == 0:
        raise DegenerateSample("hyperbolic parameter m = 0")
    r = (m * m + 1) / (2 * m)
    t = (m * m - 1) / (2 * m)
    c1, s1 = circle_point(rng, bound)
    c2, s2 = circle_point(rng, bound)
    return [r * c1, r * s1, t * c2, t * s2]


def fixed_frame(group: str, x: Sequence[Fraction]) -> tuple[list[Quaternion], list[Quaternion]]:
    """A C-fixed frame ``(e1, e2)`` with ``e1 = (x1 + j x2, x3 + j x4)``."""
    group = _group(group)
    q1 = Quaternion(x[0], x[1])
    q2 = Quaternion(x[2], x[3])
    e1 = [q1, q2]
    e2 = [q2.conj(), -q1.conj()] if group == SP2 else [q2.conj(), q1.conj()]
    return e1, e2


def check_frame(group: str, e1, e2) -> bool:
    kind = kind_of(group)
    eps = signature(group)
    return (
        inner_product(kind, e1, e1) == Quaternion(eps[0])
        and inner_product(kind, e2, e2) == Quaternion(eps[1])
        and inner_product(kind, e1, e2).is_zero()
    )


def _real_coords(e: Sequence[Quaternion]) -> list[Fraction]:
    return [e[0].z1.re, e[0].z2.re, e[1].z1.re, e[1].z2.re]


def fixed_tangent_space(group: str, e1, e2) -> list[tuple[list[Quaternion], list[Quaternion]]]:
    """Basis of C-fixed tangent vectors ``(de1, de2)`` to the frame manifold at ``(e1, e2)``."""
    kind = kind_of(group)

    def unpack(v):
        return [Quaternion(v[0], v[1]), Quaternion(v[2], v[3])], [Quaternion(v[4], v[5]), Quaternion(v[6], v[7])]

    # linear constraints <e_a, de_b> + <de_a, e_b> = 0, one row per real component
    rows = []
    for k in range(8):
        basis_vec = [Fraction(int(i == k)) for i in range(8)]
        d1, d2 = unpack(basis_vec)
        e, de = (e1, e2), (d1, d2)
        vals = []
        for a in range(2):
            for b in range(a, 2):
                q = inner_product(kind, e[a], de[b]) + inner_product(kind, de[a], e[b])
                vals += [q.z1.re, q.z1.im, q.z2.re, q.z2.im]
        rows.append(vals)
    cons = [list(col) for col in zip(*rows)]
    null = linalg.nullspace(cons, 8, one=Fraction(1), zero=Fraction(0))
    return [unpack(v) for v in null]


@dataclass(frozen=True)
class SampleRecord:
    group: str
    point: tuple
    tangent_dim: int
    omega_values: tuple
    values_real: bool
    kahler_vanishes: bool
    imaginary_part_vanishes: bool
    real_part_positive: bool

    @property
    def ok(self) -> bool:
        return (
            self.values_real
            and self.kahler_vanishes
            and self.imaginary_part_vanishes
            and self.real_part_positive
            and self.tangent_dim == 3
        )

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "point": [f"{x.numerator}/{x.denominator}" for x in self.point],
            "tangent_dim": self.tangent_dim,
            "values_real": self.values_real,
            "kahler_vanishes": self.kahler_vanishes,
            "imaginary_part_vanishes": self.imaginary_part_vanishes,
            "real_part_positive": self.real_part_positive,
            "ok": self.ok,
        }


def omega_values(group: str, e1, e2, de1, de2) -> list:
    """``(w1, w2, w3)`` on the tangent vector ``(de1, de2)`` at the frame ``(e1, e2)``."""
    kind = kind_of(group)
    eps = signature(group)
    # phi^b_a = eps_b <e_b, de_a>
    phi11 = inner_product(kind, e1, de1) * Quaternion(eps[0])
    phi21 = inner_product(kind, e2, de1) * Quaternion(eps[1])
    scale = SQRT2 if _group(group) == SP2 else ONE
    w1 = SurdGaussian.coerce(phi21.z1) * scale
    w2 = SurdGaussian.coerce(phi21.z2) * scale
    w3 = SurdGaussian.coerce(phi11.z2).conj()
    return [w1, w2, w3]


def _surd(x) -> SurdGaussian:
    return SurdGaussian.coerce(x)


def sample_fixed_locus(group: str, n: int, seed: int = 0, bound: int = 9) -> list[SampleRecord]:
    """Exact special Lagrangian checks at ``n`` rational points of the fixed locus."""
    group = _group(group)
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    model = model_forms(3)
    sp6 = model.space
    out = []
    first = True
    while len(out) < n:
        if first:
            x = [Fraction(1), Fraction(0), Fraction(0), Fraction(0)]
            first = False
        else:
            try:
                x = sphere_point(rng, bound) if group == SP2 else pseudo_sphere_point(rng, bound)
            except DegenerateSample:
                continue
        out.append(_check_point(group, x, model, sp6))
    return out


def _check_point(group, x, model, sp6) -> SampleRecord:
    e1, e2 = fixed_frame(group, x)
    if not check_frame(group, e1, e2):
        raise AssertionError("constructed frame is not adapted")
    tangent = fixed_tangent_space(group, e1, e2)
    vals = [omega_values(group, e1, e2, d1, d2) for d1, d2 in tangent]
    real = all(v.is_real() for row in vals for v in row)
    # image in C^3 = R^6 as (Re w1, Re w2, Re w3, Im w1, Im w2, Im w3)
    vecs = [[v.real for v in row] + [v.imag for v in row] for row in vals]
    basis = [vecs[i] for i in _independent_rows(vecs)]
    slots = [VectorSlot(sp6, {i: c for i, c in enumerate(v)}) for v in basis]
    if len(slots) == 3:
        kahler = all(
            evaluate(model.Omega0, [slots[a], slots[b]]).is_zero() for a in range(3) for b in range(3)
        )
        imag = evaluate(model.psi0, slots).is_zero()
        re_val = _surd(evaluate(model.phi0, slots).constant)
        if re_val.is_zero():
            positive = False
        else:
            if not re_val.is_positive_real():
                slots[0] = slots[0] * -1
                re_val = -re_val
            positive = re_val.is_positive_real()
    else:
        kahler = imag = positive = False
    return SampleRecord(
        group=group,
        point=tuple(x),
        tangent_dim=len(slots),
        omega_values=tuple(tuple(str(v) for v in row) for row in vals),
        values_real=real,
        kahler_vanishes=kahler,
        imaginary_part_vanishes=imag,
        real_part_positive=positive,
    )


def _independent_rows(vecs) -> list[int]:
    chosen: list[int] = []
    for i in range(len(vecs)):
        if linalg.rank([vecs[j] for j in chosen + [i]]) == len(chosen) + 1:
            chosen.append(i)
    return chosen
