"""Exact exterior algebra over a finite generator space.

A :class:`GeneratorSpace` names a basis of 1-forms together with a complex
conjugation pairing. A :class:`Form` is a finite sum of wedge monomials (stored
as strictly increasing index tuples) with :class:`ParamCoeff` coefficients,
i.e. Gaussian-rational constants plus an affine-linear part in named
parameters.

Conventions
-----------
* ``v ^ w = v (x) w - w (x) v``, so ``(dx1 ^ dx2)(e1, e2) = 1``.
* Interior products contract the first slot:
  ``v -| (a1 ^ ... ^ ak) = sum_s (-1)^s a_s(v) a1 ^ ... a_s-hat ... ^ ak``.
  Multi-vector contraction ``contract([v1, v2], f)`` is ``f(v1, v2, ...)``.
* On a Euclidean space ``dx1..dx2m`` the Hodge star uses the orientation
  ``dx1 ^ dx2 ^ ... ^ dx2m``; complex coordinates are
  ``dz_j = dx_j + i dx_{m+j}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import linalg
from .numbers import GaussianRational, SurdGaussian, ZERO, ONE, I, conj, is_zero


class ExteriorError(Exception):
    pass


class AffineOverflow(ExteriorError):
    """A coefficient product would be quadratic in parameters."""


class SpaceMismatch(ExteriorError):
    pass


class NotDegreeOne(ExteriorError):
    pass


class ParametricInput(ExteriorError):
    pass


class UnsupportedSpace(ExteriorError):
    pass


def _scalar(x):
    if isinstance(x, (GaussianRational, SurdGaussian)):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    if isinstance(x, str):
        return GaussianRational.parse(x)
    if isinstance(x, complex):
        raise TypeError("floating complex values are not exact")
    raise TypeError(f"not an exact scalar: {x!r}")


# ---------------------------------------------------------------------------
# parameters and affine coefficients
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Param:
    """A parameter symbol with a declared conjugate symbol (itself if real)."""

    name: str
    conj_name: str = ""

    def __post_init__(self):
        if not self.conj_name:
            object.__setattr__(self, "conj_name", self.name)

    @property
    def is_real(self) -> bool:
        return self.conj_name == self.name

    def conjugate(self) -> Param:
        return self if self.is_real else Param(self.conj_name, self.name)

    def __str__(self) -> str:
        return self.name


def complex_param(name: str) -> tuple[Param, Param]:
    """A complex parameter and its conjugate, named ``name`` and ``name*``."""
    p = Param(name, name + "*")
    return p, p.conjugate()


class ParamCoeff:
    """``constant + sum(linear[p] * p)``, affine in the parameters."""

    __slots__ = ("constant", "linear")

    def __init__(self, constant=ZERO, linear: Mapping[Param, object] | None = None):
        self.constant = _scalar(constant)
        lin = {}
        for p, c in (linear or {}).items():
            c = _scalar(c)
            if not c.is_zero():
                lin[p] = c
        self.linear = lin

    @classmethod
    def of(cls, x) -> ParamCoeff:
        if isinstance(x, ParamCoeff):
            return x
        if isinstance(x, Param):
            return cls(ZERO, {x: ONE})
        return cls(x)

    @classmethod
    def _raw(cls, constant, linear):
        obj = object.__new__(cls)
        obj.constant = constant
        obj.linear = linear
        return obj

    def is_zero(self) -> bool:
        return self.constant.is_zero() and not self.linear

    def is_constant(self) -> bool:
        return not self.linear

    def params(self) -> set[Param]:
        return set(self.linear)

    def __add__(self, other):
        other = ParamCoeff.of(other)
        lin = dict(self.linear)
        for p, c in other.linear.items():
            s = lin.get(p, ZERO) + c
            if s.is_zero():
                lin.pop(p, None)
            else:
                lin[p] = s
        return ParamCoeff._raw(self.constant + other.constant, lin)

    __radd__ = __add__

    def __neg__(self):
        return ParamCoeff._raw(-self.constant, {p: -c for p, c in self.linear.items()})

    def __sub__(self, other):
        return self + (-ParamCoeff.of(other))

    def __rsub__(self, other):
        return ParamCoeff.of(other) - self

    def __mul__(self, other):
        if isinstance(other, ParamCoeff):
            if self.linear and other.linear:
                raise AffineOverflow("product of two parameter-dependent coefficients")
            if not self.linear:
                return other.scale(self.constant)
            return self.scale(other.constant)
        if isinstance(other, Param):
            return self * ParamCoeff.of(other)
        try:
            return self.scale(_scalar(other))
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def scale(self, s) -> ParamCoeff:
        if is_zero(s):
            return ParamCoeff._raw(ZERO, {})
        return ParamCoeff._raw(
            self.constant * s, {p: c * s for p, c in self.linear.items()}
        )

    def conj(self) -> ParamCoeff:
        return ParamCoeff._raw(
            self.constant.conj(), {p.conjugate(): c.conj() for p, c in self.linear.items()}
        )

    def evaluate(self, values: Mapping[Param, object]):
        """Substitute numeric values; unknown parameters raise ``KeyError``."""
        out = self.constant
        for p, c in self.linear.items():
            if p in values:
                v = _scalar(values[p])
            elif p.conjugate() in values:
                v = _scalar(values[p.conjugate()]).conj()
            else:
                raise KeyError(p.name)
            out = out + c * v
        return out

    def __eq__(self, other):
        if not isinstance(other, ParamCoeff):
            try:
                other = ParamCoeff.of(other)
            except TypeError:
                return NotImplemented
        return self.constant == other.constant and self.linear == other.linear

    def __hash__(self):
        return hash((self.constant, frozenset(self.linear.items())))

    def __repr__(self) -> str:
        parts = [str(self.constant)] if not self.constant.is_zero() or not self.linear else []
        for p in sorted(self.linear):
            parts.append(f"({self.linear[p]})*{p.name}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        if isinstance(self.constant, SurdGaussian) or any(
            isinstance(c, SurdGaussian) for c in self.linear.values()
        ):
            raise ExteriorError("sqrt(2) coefficients have no JSON encoding")
        out = self.constant.to_json()
        out["params"] = {p.name: c.to_json() for p, c in sorted(self.linear.items())}
        return out


# ---------------------------------------------------------------------------
# generator spaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorSpace:
    """Named 1-form generators with an involutive conjugation pairing.

    ``conj[i]`` is the index of the conjugate generator (``i`` itself for a
    real generator). ``independence`` lists the generators spanning the
    independence condition; it must be closed under ``conj``.
    ``euclidean`` marks the standard oriented orthonormal real coframe.
    """

    names: tuple[str, ...]
    conj: tuple[int, ...]
    independence: frozenset = frozenset()
    euclidean: bool = False
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.names)
        if len(set(self.names)) != n:
            raise ValueError("duplicate generator names")
        if len(self.conj) != n:
            raise ValueError("conjugation pairing has the wrong length")
        for i, j in enumerate(self.conj):
            if not 0 <= j < n or self.conj[j] != i:
                raise ValueError(f"conjugation is not an involution at {self.names[i]}")
        for i in self.independence:
            if self.conj[i] not in self.independence:
                raise ValueError("independence set is not closed under conjugation")
        object.__setattr__(self, "index", {name: i for i, name in enumerate(self.names)})

    @classmethod
    def build(cls, entries: Iterable[tuple], euclidean: bool = False) -> GeneratorSpace:
        """Build from ``(name, conj_name, independent)`` triples.

        ``conj_name`` may be ``None`` for a real generator; a pair needs only
        to be declared once.
        """
        entries = list(entries)
        names = [e[0] for e in entries]
        pos = {n: i for i, n in enumerate(names)}
        conjs = list(range(len(names)))
        indep = set()
        for i, e in enumerate(entries):
            cname = e[1] if len(e) > 1 else None
            if cname is not None and cname != e[0]:
                j = pos[cname]
                conjs[i], conjs[j] = j, i
            if len(e) > 2 and e[2]:
                indep.add(i)
        indep |= {conjs[i] for i in indep}
        return cls(tuple(names), tuple(conjs), frozenset(indep), euclidean)

    @classmethod
    def real(cls, n: int, prefix: str = "dx") -> GeneratorSpace:
        """The standard oriented orthonormal coframe ``dx1..dxn`` of R^n."""
        return cls(
            tuple(f"{prefix}{k + 1}" for k in range(n)),
            tuple(range(n)),
            frozenset(range(n)),
            euclidean=True,
        )

    def __len__(self) -> int:
        return len(self.names)

    def __hash__(self):
        return hash((self.names, self.conj, self.independence, self.euclidean))

    def idx(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def gen(self, name: str) -> Form:
        return Form._clean(self, {(self.idx(name),): ParamCoeff(ONE)})

    def gens(self, *names: str) -> list[Form]:
        return [self.gen(n) for n in names]

    def one(self) -> Form:
        return Form._clean(self, {(): ParamCoeff(ONE)})

    def zero(self) -> Form:
        return Form._clean(self, {})

    def to_json(self) -> list[dict]:
        return [
            {"name": n, "conj": self.names[self.conj[i]], "independence": i in self.independence}
            for i, n in enumerate(self.names)
        ]


def _sort_with_sign(idx: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation, or 0 if an index repeats."""
    arr = list(idx)
    sign = 1
    for i in range(1, len(arr)):
        j = i
        while j > 0 and arr[j - 1] > arr[j]:
            arr[j - 1], arr[j] = arr[j], arr[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and arr[j - 1] == arr[j]:
            return 0, ()
    return sign, tuple(arr)


def _merge_sign(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Sign and sorted index tuple of ``g_a ^ g_b`` for sorted ``a``, ``b``."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    sb = set(b)
    if any(x in sb for x in a):
        return 0, ()
    inv = 0
    for x in a:
        for y in b:
            if x > y:
                inv += 1
    return (-1 if inv & 1 else 1), tuple(sorted(a + b))


# ---------------------------------------------------------------------------
# forms
# ---------------------------------------------------------------------------


class Form:
    """A mixed-degree exterior form with affine-parametric coefficients."""

    __slots__ = ("space", "terms")

    def __init__(self, space: GeneratorSpace, terms: Mapping[Sequence[int], object] | None = None):
        acc: dict[tuple[int, ...], ParamCoeff] = {}
        for idx, c in (terms or {}).items():
            sign, key = _sort_with_sign(idx)
            if sign == 0:
                continue
            c = ParamCoeff.of(c)
            if sign < 0:
                c = -c
            prev = acc.get(key)
            acc[key] = c if prev is None else prev + c
        self.space = space
        self.terms = {k: v for k, v in acc.items() if not v.is_zero()}

    @classmethod
    def _clean(cls, space, terms) -> Form:
        obj = object.__new__(cls)
        obj.space = space
        obj.terms = terms
        return obj

    @classmethod
    def from_names(cls, space: GeneratorSpace, terms: Mapping[str | tuple, object]) -> Form:
        """Build from monomials given by generator names, e.g. ``{("w1", "w2"): 1}``."""
        out = {}
        for key, c in terms.items():
            names = (key,) if isinstance(key, str) else key
            out[tuple(space.idx(n) for n in names)] = c
        return cls(space, out)

    # -- basic structure --

    def _check(self, other: Form):
        if self.space is not other.space and self.space != other.space:
            raise SpaceMismatch("forms live on different generator spaces")

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {len(k) for k in self.terms}

    @property
    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ExteriorError(f"form is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def part(self, k: int) -> Form:
        return Form._clean(self.space, {i: c for i, c in self.terms.items() if len(i) == k})

    def is_constant(self) -> bool:
        return all(c.is_constant() for c in self.terms.values())

    def params(self) -> set[Param]:
        out = set()
        for c in self.terms.values():
            out |= c.params()
        return out

    def coeff(self, *names: str) -> ParamCoeff:
        """Coefficient of the monomial ``names[0] ^ names[1] ^ ...`` (sign-adjusted)."""
        sign, key = _sort_with_sign([self.space.idx(n) for n in names])
        if sign == 0:
            return ParamCoeff(ZERO)
        c = self.terms.get(key, ParamCoeff(ZERO))
        return c if sign > 0 else -c

    # -- linear structure --

    def __add__(self, other):
        if isinstance(other, Form):
            self._check(other)
            out = dict(self.terms)
            for k, c in other.terms.items():
                prev = out.get(k)
                s = c if prev is None else prev + c
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
            return Form._clean(self.space, out)
        if is_zero(other):
            return self
        return NotImplemented

    def __radd__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return Form._clean(self.space, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, Form):
            return self + (-other)
        return NotImplemented

    def __mul__(self, s):
        if isinstance(s, Form):
            return NotImplemented
        c = ParamCoeff.of(s) if isinstance(s, (ParamCoeff, Param)) else None
        out = {}
        for k, v in self.terms.items():
            prod = v * c if c is not None else v.scale(_scalar(s))
            if not prod.is_zero():
                out[k] = prod
        return Form._clean(self.space, out)

    __rmul__ = __mul__

    def __truediv__(self, s):
        return self * (1 / _scalar(s))

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda t: (len(t), t)):
            mono = "^".join(self.space.names[i] for i in k) or "1"
            parts.append(f"[{self.terms[k]!r}] {mono}")
        return " + ".join(parts)

    def map_coeffs(self, fn) -> Form:
        out = {}
        for k, c in self.terms.items():
            c2 = fn(c)
            if not c2.is_zero():
                out[k] = c2
        return Form._clean(self.space, out)

    def evaluate_params(self, values: Mapping[Param, object]) -> Form:
        return self.map_coeffs(lambda c: ParamCoeff(c.evaluate(values)))

    def is_real(self) -> bool:
        return conjugate(self) == self

    def real_part(self) -> Form:
        return (self + conjugate(self)) * Fraction(1, 2)

    def imag_part(self) -> Form:
        return (self - conjugate(self)) * GaussianRational(0, Fraction(-1, 2))

    def to_json(self) -> dict:
        params = {}
        for c in self.terms.values():
            for p in c.linear:
                params[p.name] = p.conj_name
        out = {
            "generators": self.space.to_json(),
            "terms": [
                {"indices": list(k), "coeff": self.terms[k].to_json()}
                for k in sorted(self.terms, key=lambda t: (len(t), t))
            ],
        }
        if any(params[n] != n for n in params):
            out["parameters"] = [{"name": n, "conj": params[n]} for n in sorted(params)]
        return out

    @classmethod
    def from_json(cls, data: dict, space: GeneratorSpace | None = None) -> Form:
        if space is None:
            space = GeneratorSpace.build(
                (g["name"], g.get("conj"), g.get("independence", False)) for g in data["generators"]
            )
        declared = {p["name"]: p.get("conj", p["name"]) for p in data.get("parameters", [])}
        terms = {}
        for t in data["terms"]:
            c = t["coeff"]
            lin = {
                Param(name, declared.get(name, name)): GaussianRational.from_json(v)
                for name, v in c.get("params", {}).items()
            }
            const = GaussianRational.from_json({"re": c.get("re", "0"), "im": c.get("im", "0")})
            terms[tuple(t["indices"])] = ParamCoeff(const, lin)
        return cls(space, terms)


@dataclass(frozen=True)
class VectorSlot:
    """A tangent vector, recorded by the values of the generators on it."""

    space: GeneratorSpace
    components: Mapping[int, object]

    def __post_init__(self):
        comps = {}
        for i, c in dict(self.components).items():
            c = _scalar(c)
            if not c.is_zero():
                comps[i] = c
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_names(cls, space: GeneratorSpace, values: Mapping[str, object]) -> VectorSlot:
        return cls(space, {space.idx(n): v for n, v in values.items()})

    def __getitem__(self, name: str):
        return self.components.get(self.space.idx(name), ZERO)

    def __add__(self, other: VectorSlot) -> VectorSlot:
        out = dict(self.components)
        for i, c in other.components.items():
            out[i] = out.get(i, ZERO) + c
        return VectorSlot(self.space, out)

    def __mul__(self, s) -> VectorSlot:
        s = _scalar(s)
        return VectorSlot(self.space, {i: c * s for i, c in self.components.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def conjugate(self) -> VectorSlot:
        # value of g on conj(v) is the conjugate of conj(g)(v)
        cj = self.space.conj
        return VectorSlot(self.space, {cj[i]: c.conj() for i, c in self.components.items()})

    def __hash__(self):
        return hash((self.space, frozenset(self.components.items())))


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def wedge(*forms: Form) -> Form:
    """Exterior product of one or more forms on the same space."""
    if not forms:
        raise ValueError("wedge of nothing")
    out = forms[0]
    for g in forms[1:]:
        out._check(g)
        acc: dict[tuple[int, ...], ParamCoeff] = {}
        for ka, ca in out.terms.items():
            for kb, cb in g.terms.items():
                sign, key = _merge_sign(ka, kb)
                if sign == 0:
                    continue
                prod = ca * cb
                if sign < 0:
                    prod = -prod
                prev = acc.get(key)
                acc[key] = prod if prev is None else prev + prod
        out = Form._clean(out.space, {k: v for k, v in acc.items() if not v.is_zero()})
    return out


def interior(v: VectorSlot, f: Form) -> Form:
    """Contract ``v`` into the first slot of ``f``."""
    if v.space != f.space:
        raise SpaceMismatch("vector and form live on different generator spaces")
    comps = v.components
    acc: dict[tuple[int, ...], ParamCoeff] = {}
    for key, c in f.terms.items():
        for s, i in enumerate(key):
            val = comps.get(i)
            if val is None:
                continue
            rest = key[:s] + key[s + 1:]
            term = c.scale(val if s % 2 == 0 else -val)
            prev = acc.get(rest)
            acc[rest] = term if prev is None else prev + term
    return Form._clean(f.space, {k: t for k, t in acc.items() if not t.is_zero()})


def contract(vs: Sequence[VectorSlot], f: Form) -> Form:
    """``(v1 ^ ... ^ vk) -| f``, i.e. ``f(v1, ..., vk, ...)``."""
    for v in vs:
        f = interior(v, f)
    return f


def evaluate(f: Form, vs: Sequence[VectorSlot]) -> ParamCoeff:
    """Full alternating evaluation ``f(v1, ..., vk)`` of the degree-k part."""
    g = contract(vs, f.part(len(vs)))
    return g.terms.get((), ParamCoeff(ZERO))


def conjugate(f: Form) -> Form:
    """Complex conjugate: generators via the pairing, coefficients and parameters conjugated."""
    cj = f.space.conj
    out = {}
    for key, c in f.terms.items():
        sign, k2 = _sort_with_sign([cj[i] for i in key])
        c2 = c.conj()
        out[k2] = c2 if sign > 0 else -c2
    return Form._clean(f.space, out)


def substitute(f: Form, images: Mapping[int, Form], target: GeneratorSpace | None = None) -> Form:
    """Algebra homomorphism sending generator ``i`` to the 1-form ``images[i]``.

    Generators without an image are kept as themselves (only allowed when the
    target space equals the source space).
    """
    target = target or f.space
    cache: dict[int, Form] = {}

    def image(i: int) -> Form:
        if i not in cache:
            if i in images:
                cache[i] = images[i]
            elif target == f.space:
                cache[i] = Form._clean(target, {(i,): ParamCoeff(ONE)})
            else:
                raise KeyError(f"no image for generator {f.space.names[i]}")
        return cache[i]

    out = Form._clean(target, {})
    for key, c in f.terms.items():
        if not key:
            out = out + Form._clean(target, {(): c})
            continue
        prod = wedge(*(image(i) for i in key))
        out = out + prod * c
    return out


def exterior_derivative(f: Form, d_gens: Mapping[int, Form]) -> Form:
    """``d f`` for a constant-coefficient form, given ``d`` of each generator."""
    if not f.is_constant():
        raise ParametricInput("exterior derivative needs constant coefficients")
    out = Form._clean(f.space, {})
    for key, c in f.terms.items():
        for s, i in enumerate(key):
            if i not in d_gens:
                raise KeyError(f"no structure equation for {f.space.names[i]}")
            left = Form._clean(f.space, {key[:s]: ParamCoeff(ONE)})
            right = Form._clean(f.space, {key[s + 1:]: ParamCoeff(ONE)})
            piece = wedge(left, d_gens[i], right)
            out = out + (piece * c if s % 2 == 0 else piece * (-c))
    return out


def rank_one_forms(fs: Sequence[Form]) -> int:
    """Exact rank of a family of constant 1-forms."""
    fs = list(fs)
    if not fs:
        return 0
    space = fs[0].space
    rows = []
    for f in fs:
        f._check(fs[0])
        if not f.is_zero() and f.degrees() != {1}:
            raise NotDegreeOne("rank_one_forms needs forms of pure degree one")
        if not f.is_constant():
            raise ParametricInput("rank_one_forms needs constant coefficients")
        row = [ZERO] * len(space)
        for (i,), c in f.terms.items():
            row[i] = c.constant
        rows.append(row)
    return linalg.rank(rows)


def hodge_star(f: Form, dim: int | None = None) -> Form:
    """Euclidean Hodge star with orientation ``dx1 ^ ... ^ dxn``."""
    space = f.space
    n = len(space)
    if not space.euclidean or (dim is not None and dim != n):
        raise UnsupportedSpace("Hodge star needs the standard oriented orthonormal coframe")
    if dim is not None and dim not in (4, 6):
        raise UnsupportedSpace("Hodge star is provided in dimensions 4 and 6")
    if not f.is_constant():
        raise ParametricInput("Hodge star needs constant coefficients")
    full = tuple(range(n))
    out = {}
    for key, c in f.terms.items():
        comp = tuple(i for i in full if i not in key)
        sign, _ = _merge_sign(key, comp)
        out[comp] = c if sign > 0 else -c
    return Form._clean(space, out)


def volume_form(space: GeneratorSpace) -> Form:
    return Form._clean(space, {tuple(range(len(space))): ParamCoeff(ONE)})


def fiber_projection(f: Form, keep: Iterable[int]) -> Form:
    """Drop every monomial that involves a generator outside ``keep``."""
    keep = set(keep)
    return Form._clean(f.space, {k: c for k, c in f.terms.items() if set(k) <= keep})


def complex_coordinates(space: GeneratorSpace) -> tuple[list[Form], list[Form]]:
    """``dz_j = dx_j + i dx_{m+j}`` and their conjugates on a Euclidean R^{2m}."""
    n = len(space)
    if not space.euclidean or n % 2:
        raise UnsupportedSpace("complex coordinates need an even-dimensional Euclidean coframe")
    m = n // 2
    dz, dzb = [], []
    for j in range(m):
        dz.append(Form._clean(space, {(j,): ParamCoeff(ONE), (m + j,): ParamCoeff(I)}))
        dzb.append(Form._clean(space, {(j,): ParamCoeff(ONE), (m + j,): ParamCoeff(-I)}))
    return dz, dzb


def basis_monomials(space: GeneratorSpace, k: int, among: Iterable[int] | None = None):
    idx = sorted(among) if among is not None else range(len(space))
    return list(combinations(idx, k))


__all__ = [
    "AffineOverflow",
    "ExteriorError",
    "Form",
    "GeneratorSpace",
    "NotDegreeOne",
    "Param",
    "ParamCoeff",
    "ParametricInput",
    "SpaceMismatch",
    "UnsupportedSpace",
    "VectorSlot",
    "complex_coordinates",
    "complex_param",
    "conjugate",
    "contract",
    "evaluate",
    "exterior_derivative",
    "fiber_projection",
    "hodge_star",
    "interior",
    "rank_one_forms",
    "substitute",
    "volume_form",
    "wedge",
]
