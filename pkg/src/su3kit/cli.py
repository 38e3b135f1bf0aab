"""Command-line front end. Every subcommand prints a JSON report.

Exit status: 0 when every assertion passes, 1 when one fails, 2 for usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import cartan, calibration, curvature, quaternion, su3
from .exterior import wedge
from .numbers import GaussianRational, SurdGaussian, format_rational, parse_rational

SCHEMA_VERSION = 1


class InputError(Exception):
    """Malformed input file or argument value."""


def jsonable(x: Any) -> Any:
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, (GaussianRational, SurdGaussian)):
        return x.to_json()
    if isinstance(x, complex):
        return {"re": repr(x.real), "im": repr(x.imag)}
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return jsonable(x.to_json())
    raise TypeError(f"cannot serialize {type(x).__name__}")


@dataclass
class Report:
    command: str
    inputs: dict
    assertions: list = field(default_factory=list)
    results: dict = field(default_factory=dict)

    def check(self, name: str, anchor: str, ok: bool, detail: Any = "") -> bool:
        self.assertions.append(
            {"name": name, "anchor": anchor, "status": "pass" if ok else "fail", "detail": jsonable(detail)}
        )
        return ok

    @property
    def exit_status(self) -> int:
        return 0 if all(a["status"] == "pass" for a in self.assertions) else 1

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": jsonable(self.inputs),
            "assertions": self.assertions,
            "results": jsonable(self.results),
            "exit_status": self.exit_status,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_cartan(args) -> Report:
    rep = Report("cartan", {"system": args.system, "a0": args.a0, "flag": args.flag, "seed": args.seed})
    if args.system == "nearly-cy":
        sys_ = cartan.build_nearly_cy_system()
    else:
        sys_ = cartan.build_admissible_system(a0=args.a0)
    flag = None
    if args.flag == "random":
        flag = cartan.random_flag(sys_.space, random.Random(args.seed))
    r = cartan.cartan_test(sys_, flag)
    rep.results = r.to_json()
    weighted = sum((6 - k) * r.s[k] for k in range(6))
    rep.check("test identity", "Cartan test bookkeeping", weighted == r.test_lhs, {"weighted_sum": weighted})
    if args.system == "nearly-cy":
        rep.check("integral rank", "nearly-CY integral elements", r.integral_rank == 34, r.integral_rank)
        rep.check("characters", "nearly-CY characters", r.s == (0, 0, 1, 3, 6, 9, 9), r.s)
        rep.check("involutive", "nearly-CY involutivity", r.involutive, r.involutive)
        rep.check(
            "polar relation", "nearly-CY polar relation", cartan.polar_relation_check(sys_), "four-term relation"
        )
    elif args.a0 != 0:
        rep.check("integral rank", "admissible integral elements", r.integral_rank == 35, r.integral_rank)
        rep.check("characters", "admissible characters", r.s == (0, 0, 1, 3, 6, 10, 15), r.s)
        rep.check("involutive", "admissible involutivity", r.involutive, r.involutive)
    else:
        rep.check("c5 bound", "admissible degenerate case", r.c[5] <= 17, r.c)
        rep.check("not involutive", "admissible degenerate case", not r.involutive, r.involutive)
    return rep


def cmd_torsion(args) -> Report:
    data = _load_json(args.input)
    try:
        t = su3.TorsionTensor.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad torsion file: {exc}") from None
    rep = Report("torsion", {"input": args.input, "mu": args.mu})
    cls = su3.classify_torsion(t, mu_present=args.mu)
    rep.results = {"torsion": t.to_json(), "class": cls.to_json()}
    by_forms = su3.admissible_by_forms(t)
    claimed = cls.tag != su3.GENERIC
    if not args.mu:
        rep.check(
            "admissibility agrees with forms",
            "admissibility criterion",
            by_forms == claimed,
            {"by_forms": by_forms, "class": cls.tag},
        )
    if cls.tag == su3.NEARLY_KAHLER:
        Omega, Psi, dOmega, dPsi = su3.torsion_forms(t)
        c = cls.c
        ok = dOmega == Psi.imag_part() * (3 * c) and dPsi == wedge(Omega, Omega) * (2 * c)
        rep.check("nearly Kahler equations", "nearly Kahler structure", ok, {"c": c})
    if cls.tag == su3.NEARLY_CY_STRICT:
        Omega, Psi, dOmega, dPsi = su3.torsion_forms(t)
        ok = dOmega.is_zero() and dPsi.imag_part().is_zero()
        rep.check("nearly Calabi-Yau equations", "nearly Calabi-Yau structure", ok, "dOmega = 0, dpsi = 0")
    return rep


def cmd_twistor(args) -> Report:
    s = args.scalar
    rep = Report("twistor", {"scalar": s, "normalize": args.normalize})
    results: dict = {}
    if args.normalize:
        c = curvature.normalization(s)
        results["scale"] = c
        s = s / c
        results["normalized_scalar"] = s
    N, cls = curvature.twistor_torsion(s)
    tr = sum((N[i][i] for i in range(3)), GaussianRational(0))
    results.update({"N": N, "class": cls.to_json(), "trace": tr})
    rep.results = results
    rep.check("trace", "twistor Nijenhuis tensor", tr == 2 + s / 24, tr)
    expected = su3.NEARLY_KAHLER if s == 24 else su3.NEARLY_CY_STRICT if s == -48 else su3.ADMISSIBLE
    rep.check("class", "twistor torsion class", cls.tag == expected, {"expected": expected, "got": cls.tag})
    if args.normalize:
        rep.check("normalized scalar", "metric normalization", s in (24, 0, -48), s)
    return rep


def cmd_curvature(args) -> Report:
    data = _load_json(args.input)
    try:
        rm = curvature.CurvatureMinus.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad curvature file: {exc}") from None
    rep = Report("curvature", {"input": args.input})
    dec = curvature.decompose(rm)
    sde = curvature.is_self_dual_einstein(rm)
    rep.results = {"curvature": rm.to_json(), "decomposition": dec.to_json(), "self_dual_einstein": sde}
    tr = sum((dec.Wminus[i][i] for i in range(3)), GaussianRational(0))
    rep.check("traceless Weyl", "curvature decomposition", tr.is_zero(), tr)
    rep.check("reassembly", "curvature decomposition", dec.reassemble() == rm.matrix(), "")
    if sde:
        zero = all(x.is_zero() for row in dec.Z + dec.Wminus for x in row)
        rep.check("self-dual Einstein", "self-dual Einstein criterion", zero and dec.s == 24 * rm.C2.re, dec.s)
    return rep


def cmd_maurer_cartan(args) -> Report:
    rep = Report("maurer-cartan", {"group": args.group})
    basis = quaternion.component_map(args.group)
    m = quaternion.match_structure_equation(args.group, basis)
    defects = quaternion.consistency_defects(basis)
    dd = quaternion.d_squared(args.group, basis)
    rep.results = {
        "component_rank": quaternion.component_rank(basis),
        "derived": {k: repr(v) for k, v in quaternion.maurer_cartan_derive(args.group, basis).items()},
        "match": m.to_json(),
    }
    rep.check("component rank", "Maurer-Cartan forms", quaternion.component_rank(basis) == 10, "")
    rep.check("consistency", "Maurer-Cartan equation", not defects, defects)
    rep.check("structure equations", "Maurer-Cartan structure equations", m.match, m.to_json()["diffs"])
    bad = [k for k, v in dd.items() if not v.is_zero()]
    rep.check("d squared", "Maurer-Cartan structure equations", not bad, bad)
    return rep


def cmd_involution(args) -> Report:
    rep = Report("involution", {"group": args.group, "samples": args.samples, "seed": args.seed})
    r = quaternion.involution_action(args.group, samples=args.samples, seed=args.seed)
    rep.results = r.to_json()
    rep.check("omega conjugation", "involution C", r.omega_to_conjugate, r.images)
    rep.check("involutive", "involution C", r.squares_to_identity, "")
    rep.check("automorphism", "involution C", r.automorphism_ok, {"samples": r.automorphism_samples})
    rep.check("Kahler form reversed", "involution C", r.kahler_reversed, "")
    rep.check("volume form conjugated", "involution C", r.volume_conjugated, "")
    return rep


def cmd_fixed_locus(args) -> Report:
    if args.samples < 1:
        raise InputError("--samples must be positive")
    rep = Report("fixed-locus", {"group": args.group, "samples": args.samples, "seed": args.seed})
    records = quaternion.sample_fixed_locus(args.group, args.samples, seed=args.seed)
    failed = [r.to_json() for r in records if not r.ok]
    rep.results = {"samples": len(records), "failures": failed}
    rep.check("special Lagrangian fixed locus", "fixed locus of C", not failed, {"failed": len(failed)})
    return rep


def cmd_calibrate(args) -> Report:
    data = _load_json(args.plane)
    try:
        E = calibration.Plane3.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad plane file: {exc}") from None
    rep = Report("calibrate", {"plane": args.plane, "witness": args.witness})
    lag = calibration.is_lagrangian(E)
    results: dict = {"plane": E.to_json(), "lagrangian": lag}
    rep.check("Lagrangian", "Lagrangian plane", lag, "Omega0 restricted to E")
    if lag:
        lam = calibration.lambda_phase(E)
        sl = calibration.is_special_lagrangian(E)
        results.update({"lambda": lam, "special_lagrangian": sl})
        rep.check("special Lagrangian", "special Lagrangian plane", sl, {"lambda": lam})
        if args.witness and sl:
            A = calibration.su3_witness(E)
            res = calibration.witness_residuals(A, E)
            results["witness"] = [[complex(x) for x in row] for row in A.tolist()]
            results["residuals"] = res
            rep.check("witness", "SU(3) transitivity", max(res.values()) < 1e-9, res)
    rep.results = results
    return rep


def cmd_mclean_check(args) -> Report:
    if args.samples < 1:
        raise InputError("--samples must be positive")
    rep = Report("mclean-check", {"samples": args.samples, "seed": args.seed})
    rng = random.Random(args.seed)
    failures = []
    for k in range(args.samples):
        E, _ = calibration.random_sl_plane(rng)
        coeffs = [rng.randint(-4, 4) for _ in range(3)]
        normals = calibration.normal_vectors(E)
        V = tuple(sum(c * n[i] for c, n in zip(coeffs, normals)) for i in range(6))
        r = calibration.mclean_check(E, V)
        if not r.holds:
            failures.append({"sample": k, "plane": E.to_json(), "V": list(V), "lhs": r.lhs, "rhs": r.rhs})
    rep.results = {"failures": failures}
    rep.check("McLean correspondence", "normal vectors and 1-forms", not failures, {"failed": len(failures)})
    return rep


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _common(p: argparse.ArgumentParser, seed: bool = True) -> None:
    p.add_argument("--json", metavar="PATH", help="write the report here instead of stdout")
    if seed:
        p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="su3kit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    groups = list(quaternion.GROUPS)

    p = sub.add_parser("cartan", help="Cartan test for the nearly Calabi-Yau or admissible system")
    p.add_argument("--system", choices=["nearly-cy", "admissible"], required=True)
    p.add_argument("--a0", type=_rational, default=Fraction(1))
    p.add_argument("--flag", choices=["default", "random"], default="default")
    _common(p)
    p.set_defaults(func=cmd_cartan)

    p = sub.add_parser("torsion", help="classify a torsion tensor")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--mu", action="store_true", help="extra torsion term is present")
    _common(p)
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("twistor", help="torsion of the twistor space")
    p.add_argument("--scalar", type=_rational, required=True, metavar="RAT")
    p.add_argument("--normalize", action="store_true")
    _common(p)
    p.set_defaults(func=cmd_twistor)

    p = sub.add_parser("curvature", help="decompose anti-self-dual curvature data")
    p.add_argument("--input", required=True, metavar="FILE")
    _common(p)
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("maurer-cartan", help="derive the structure equations of a quaternionic group")
    p.add_argument("--group", choices=groups, required=True)
    _common(p)
    p.set_defaults(func=cmd_maurer_cartan)

    p = sub.add_parser("involution", help="check the involution C")
    p.add_argument("--group", choices=groups, required=True)
    p.add_argument("--samples", type=int, default=100)
    _common(p)
    p.set_defaults(func=cmd_involution)

    p = sub.add_parser("fixed-locus", help="sample the fixed locus of C")
    p.add_argument("--group", choices=groups, required=True)
    p.add_argument("--samples", type=int, default=100)
    _common(p)
    p.set_defaults(func=cmd_fixed_locus)

    p = sub.add_parser("calibrate", help="Lagrangian and special Lagrangian tests for a 3-plane")
    p.add_argument("--plane", required=True, metavar="FILE")
    p.add_argument("--witness", action="store_true")
    _common(p)
    p.set_defaults(func=cmd_calibrate)

    p = sub.add_parser("mclean-check", help="check McLean's correspondence on random planes")
    p.add_argument("--samples", type=int, default=50)
    _common(p)
    p.set_defaults(func=cmd_mclean_check)
    return parser


def run(argv: Sequence[str] | None = None) -> tuple[Report | None, int]:
    parser = build_parser()
    args = parser.parse_args(argv)
    func: Callable[[argparse.Namespace], Report] = args.func
    try:
        report = func(args)
    except InputError as exc:
        print(f"su3kit {args.command}: {exc}", file=sys.stderr)
        return None, 2
    text = report.dumps() + "\n"
    if args.json:
        try:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"su3kit: cannot write {args.json}: {exc.strerror}", file=sys.stderr)
            return report, 2
    else:
        sys.stdout.write(text)
    return report, report.exit_status


def main(argv: Sequence[str] | None = None) -> int:
    try:
        _, status = run(argv)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    return status


if __name__ == "__main__":
    sys.exit(main())
