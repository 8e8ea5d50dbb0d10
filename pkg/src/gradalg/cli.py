"""Batch driver producing verification reports as JSON.

Subcommands: verify | constants | invert | spectrum | mellin | axb.
Exit codes: 0 every check passed, 1 a mathematical check failed (or a
witness was found), 2 usage or input error.  The environment variable
``GRADALG_SEED`` overrides any configured seed.  Identical configuration and
seed produce byte-identical output; nothing time- or host-dependent is ever
written.
"""

import argparse
import json
import math
import os
import random
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from . import calculus, continuous
from .elements import GradedElement, convolve, index_pool, norm, random_element
from .errors import (
    AlgebraMismatchError,
    DivergenceError,
    GradalgError,
    IndexKindError,
    InversionInconclusiveError,
    LevelGapError,
    NotInvertibleError,
    NotSubmultiplicativeError,
    SeriesRadiusError,
    SupportCapError,
    TailCertificationError,
    UnsupportedFamilyError,
)
from .report import make_report
from .semigroups import nats_up_to
from .weights import check_submultiplicative, coupling, family_by_name

SCHEMA = "gradalg/1"

USAGE_ERRORS = (
    LevelGapError,
    UnsupportedFamilyError,
    IndexKindError,
    AlgebraMismatchError,
    TailCertificationError,
    ValueError,
    OSError,
)
MATH_ERRORS = (
    NotInvertibleError,
    InversionInconclusiveError,
    NotSubmultiplicativeError,
    SeriesRadiusError,
    DivergenceError,
    SupportCapError,
)


@dataclass(frozen=True)
class RunConfig:
    """Configuration of one verification run; recorded verbatim in the output."""

    algebra: str
    q_max: int = 4
    p_span: int = 3
    samples: int = 100
    seed: int = 0
    support: int = 12
    trunc: int = 12
    quad_tol: float = 1e-9
    cutoff: float = 400.0
    out: str | None = None

    def validated(self) -> "RunConfig":
        if self.samples < 1:
            raise ValueError(f"sample count must be >= 1, got {self.samples}")
        if self.q_max < 0 or self.p_span < 1 or self.support < 1:
            raise ValueError("q_max must be >= 0, p_span and support >= 1")
        return self


def _emit(payload: dict, out_path: str | None) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if out_path and out_path != "-":
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def _seed_from_env(seed: int) -> int:
    env = os.environ.get("GRADALG_SEED")
    return int(env) if env else seed


def _load_element(algebra: str, path: str) -> GradedElement:
    fam = family_by_name(algebra)
    data = json.loads(Path(path).read_text())
    if not isinstance(data, list):
        raise ValueError(f"element file {path} must hold a JSON list of terms")
    return GradedElement.from_json_list(fam, data)


def cmd_verify(args) -> int:
    cfg = RunConfig(
        algebra=args.algebra,
        q_max=args.qmax,
        p_span=args.p_span,
        samples=args.samples,
        seed=_seed_from_env(args.seed),
        support=args.support,
        out=args.out,
    ).validated()
    fam = family_by_name(cfg.algebra)
    reports = []
    if fam.kind == "sprime":
        witness = check_submultiplicative(fam, 1, nats_up_to(50))
        if witness is None:
            reports.append(make_report(
                "weight_submultiplicativity", 0.0, 0.0, 0.0,
                params={"algebra": fam.kind, "level": 1, "scope": "n<=50"}))
        else:
            reports.append(make_report(
                "weight_submultiplicativity",
                math.exp(witness.log_weight_composed),
                math.exp(witness.log_weight_bound),
                0.0,
                params={
                    "algebra": fam.kind,
                    "level": 1,
                    "witness_x": witness.x.text(),
                    "witness_y": witness.y.text(),
                },
            ))
    else:
        rng = random.Random(cfg.seed)
        pool = index_pool(fam)
        d = fam.gap
        for q in range(cfg.q_max + 1):
            for p in range(q + d + 1, q + d + cfg.p_span + 1):
                a_upper = coupling(fam, p, q).upper()
                for trial in range(cfg.samples):
                    f = random_element(fam, rng, rng.randint(1, cfg.support), pool)
                    g = random_element(fam, rng, rng.randint(1, cfg.support), pool)
                    lhs_fg = norm(convolve(f, g), p)
                    lhs_gf = norm(convolve(g, f), p)
                    rhs = a_upper * norm(f, q) * norm(g, p)
                    reports.append(make_report(
                        "convolution_norm_inequality",
                        max(lhs_fg, lhs_gf), rhs, 1e-10 * rhs,
                        params={
                            "algebra": fam.kind,
                            "p": p,
                            "q": q,
                            "trial": trial,
                            "norm_fg": lhs_fg,
                            "norm_gf": lhs_gf,
                        },
                    ))
    payload = {
        "schema": SCHEMA,
        "config": asdict(cfg),
        "reports": [r.as_dict() for r in reports],
    }
    _emit(payload, cfg.out)
    return 0 if all(r.passed for r in reports) else 1


def cmd_constants(args) -> int:
    fam = family_by_name(args.algebra)
    value = coupling(fam, args.p, args.q)
    _emit(value.as_dict(), args.out)
    return 0


def cmd_invert(args) -> int:
    elem = _load_element(args.algebra, args.file)
    result, cert = calculus.invert(elem, args.trunc, scan=args.scan)
    _emit(
        {
            "schema": SCHEMA,
            "algebra": args.algebra,
            "element": result.to_json_list(),
            "certificate": cert.as_dict(),
        },
        args.out,
    )
    return 0


def cmd_spectrum(args) -> int:
    elem = _load_element(args.algebra, args.file)
    bound = calculus.spectrum_radius_bound(elem, scan=args.scan)
    _emit(
        {"schema": SCHEMA, "algebra": args.algebra, "scan": args.scan, "bound": bound},
        args.out,
    )
    return 0


def cmd_mellin(args) -> int:
    summatory = (continuous.SummatoryFunction.totient() if args.totient
                 else continuous.SummatoryFunction.floor())
    t = args.t
    identity_quad = continuous.QuadratureSpec(abs_tol=args.tol, cutoff=1e6)
    value, verr = continuous.mellin_certified(summatory, -t, identity_quad)
    series, serr = summatory.dirichlet_certified(t)
    identity_report = make_report(
        "mellin_dirichlet_identity",
        abs(t * value - series), 0.0, t * verr + serr,
        params={"t": t, "summatory": summatory.name,
                "scaled_transform": t * value, "series": series},
    )
    quad = continuous.QuadratureSpec(abs_tol=args.tol, cutoff=args.cutoff)
    verifier = (continuous.verify_totient_inequality if args.totient
                else continuous.verify_zeta_inequality)
    inequality_report = verifier(t, args.r, quad, r_grid=args.grid)
    reports = [identity_report, inequality_report]
    _emit(
        {"schema": SCHEMA, "reports": [r.as_dict() for r in reports]},
        args.out,
    )
    return 0 if all(r.passed for r in reports) else 1


def cmd_axb(args) -> int:
    reports = continuous.axb_reports(args.m, tol=args.tol)
    _emit(
        {"schema": SCHEMA, "reports": [r.as_dict() for r in reports]},
        args.out,
    )
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradalg",
        description="verification reports for graded convolution algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    algebras = ["germs", "kondratiev", "free_kondratiev", "sprime"]

    p_verify = sub.add_parser("verify", help="run the convolution inequality suite")
    p_verify.add_argument("--algebra", required=True, choices=algebras)
    p_verify.add_argument("--qmax", type=int, default=4)
    p_verify.add_argument("--p-span", type=int, default=3, dest="p_span")
    p_verify.add_argument("--samples", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--support", type=int, default=12)
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_const = sub.add_parser("constants", help="print one coupling constant")
    p_const.add_argument("--algebra", required=True, choices=algebras)
    p_const.add_argument("--p", type=int, required=True)
    p_const.add_argument("--q", type=int, required=True)
    p_const.add_argument("--out", default=None)
    p_const.set_defaults(func=cmd_constants)

    p_inv = sub.add_parser("invert", help="invert an element from a JSON file")
    p_inv.add_argument("--algebra", required=True, choices=algebras)
    p_inv.add_argument("--file", required=True)
    p_inv.add_argument("--trunc", type=int, default=12)
    p_inv.add_argument("--scan", type=int, default=calculus.DEFAULT_SCAN)
    p_inv.add_argument("--out", default=None)
    p_inv.set_defaults(func=cmd_invert)

    p_spec = sub.add_parser("spectrum", help="spectral enclosure radius bound")
    p_spec.add_argument("--algebra", required=True, choices=algebras)
    p_spec.add_argument("--file", required=True)
    p_spec.add_argument("--scan", type=int, default=20)
    p_spec.add_argument("--out", default=None)
    p_spec.set_defaults(func=cmd_spectrum)

    p_mel = sub.add_parser("mellin", help="transform identity and series inequality checks")
    p_mel.add_argument("--t", type=float, required=True)
    p_mel.add_argument("--r", type=float, required=True)
    p_mel.add_argument("--grid", type=float, nargs="*", default=None)
    p_mel.add_argument("--totient", action="store_true")
    p_mel.add_argument("--cutoff", type=float, default=400.0)
    p_mel.add_argument("--tol", type=float, default=1e-9)
    p_mel.add_argument("--out", default=None)
    p_mel.set_defaults(func=cmd_mellin)

    p_axb = sub.add_parser("axb", help="affine-semigroup integrals, closed form vs quadrature")
    p_axb.add_argument("--m", type=int, required=True)
    p_axb.add_argument("--tol", type=float, default=1e-6)
    p_axb.add_argument("--out", default=None)
    p_axb.set_defaults(func=cmd_axb)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MATH_ERRORS as exc:
        print(f"gradalg: {exc}", file=sys.stderr)
        return 1
    except USAGE_ERRORS as exc:
        # includes json.JSONDecodeError via ValueError
        print(f"gradalg: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
