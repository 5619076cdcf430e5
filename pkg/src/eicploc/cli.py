"""Command-line front end.

Subcommands::

    eicploc check INSTANCE     matrix-class certificates only
    eicploc localize INSTANCE  localization sets, optionally after a shift
    eicploc spectrum INSTANCE  exact spectrum plus containment verdicts
    eicploc family ...         emit a parametric instance + expected values

Exit codes are stable: 0 ok, 2 parse error, 3 hypothesis violation,
4 instance too large, 5 parameter out of range.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

import numpy as np

from .certify import MatrixPair, make_pair, shift_pair, suggest_shift
from .errors import (
    DimensionTooLarge,
    EicpError,
    HypothesisViolation,
    NegativeShift,
    NotPositiveDefinite,
    ParamOutOfRange,
    ParseError,
)
from .families import prop4_instance, prop5_instance
from .instance_io import (
    certificate_obj,
    interval_obj,
    load_instance,
    localization_obj,
    save_instance,
    serialize_report,
    spectrum_obj,
    union_obj,
)
from .intervals import Interval, IntervalUnion
from .linalg import inf_norm
from .localize import gamma_interval, localization_report
from .spectrum import (
    DEFAULT_DEDUP_RTOL,
    DEFAULT_N_MAX,
    DEFAULT_SIGN_TOL,
    DEFAULT_SUPPORT_TOL,
    enumerate_spectrum,
    spectrum_report,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_HYPOTHESIS = 3
EXIT_SIZE = 4
EXIT_PARAMS = 5

REQUIREMENT_NAMES = ("a-pd", "a-sdd", "a-copositive", "b-pd", "b-sdd", "b-copositive")
SET_NAMES = ("k1", "k1cop", "k2")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (HypothesisViolation, NotPositiveDefinite) as exc:
        print(f"error: hypothesis violation: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except DimensionTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (ParamOutOfRange, NegativeShift) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except EicpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eicploc",
        description="Localization sets and exact enumeration for the "
        "symmetric eigenvalue complementarity problem.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="certify matrix classes of an instance")
    _add_instance_args(check)
    check.add_argument(
        "--require",
        action="append",
        choices=REQUIREMENT_NAMES,
        help="exit 3 unless this certificate holds (repeatable)",
    )
    check.set_defaults(func=cmd_check)

    localize = sub.add_parser("localize", help="compute localization sets")
    _add_instance_args(localize)
    localize.add_argument(
        "--sets",
        default="auto",
        help="comma list from k1,k1cop,k2 (default: every certifiable set)",
    )
    localize.add_argument(
        "--shift",
        default=None,
        help="'auto' or a nonnegative amount; localizes the shifted pair "
        "and translates the sets back",
    )
    localize.set_defaults(func=cmd_localize)

    spectrum = sub.add_parser("spectrum", help="enumerate the complementarity spectrum")
    _add_instance_args(spectrum)
    spectrum.add_argument("--nmax", type=int, default=DEFAULT_N_MAX,
                          help="refuse instances larger than this (default 15)")
    spectrum.add_argument("--tol-feas", type=float, default=None,
                          help="feasibility tolerance (default 1e-8 scaled)")
    spectrum.add_argument("--tol-support", type=float, default=DEFAULT_SUPPORT_TOL)
    spectrum.add_argument("--tol-sign", type=float, default=DEFAULT_SIGN_TOL)
    spectrum.add_argument("--tol-dedup", type=float, default=DEFAULT_DEDUP_RTOL)
    spectrum.set_defaults(func=cmd_spectrum)

    family = sub.add_parser("family", help="emit a parametric instance file")
    family.add_argument("--prop", type=int, choices=(4, 5), required=True)
    family.add_argument("--n", type=int, required=True)
    family.add_argument("--eps", type=float, default=None)
    family.add_argument("--beta", type=float, default=None)
    family.add_argument("--R", type=float, default=None, dest="big_r")
    family.add_argument("--c", type=float, default=None)
    family.add_argument("--emit", required=True, help="instance file to write")
    family.set_defaults(func=cmd_family)

    return parser


def _add_instance_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("instance", help="path to a JSON instance file")
    sub.add_argument("--max-exact-n", type=int, default=12,
                     help="cap for the exact copositivity check (default 12)")
    sub.add_argument("--json", action="store_true", help="emit a JSON report")


def _load_pair(args) -> MatrixPair:
    a, b = load_instance(args.instance)
    return make_pair(a, b, max_exact_n=args.max_exact_n)


def _echo(pair: MatrixPair) -> dict:
    return {
        "n": pair.n,
        "A": pair.A.tolist(),
        "B": pair.B.tolist(),
    }


def cmd_check(args) -> int:
    pair = _load_pair(args)
    certs = {"A": certificate_obj(pair.cert_A), "B": certificate_obj(pair.cert_B)}
    available = {
        "a-pd": pair.cert_A.is_pd,
        "a-sdd": pair.cert_A.is_sdd,
        "a-copositive": pair.cert_A.copositivity.copositive,
        "b-pd": pair.cert_B.is_pd,
        "b-sdd": pair.cert_B.is_sdd,
        "b-copositive": pair.cert_B.copositivity.copositive,
    }
    required = list(args.require or [])
    failures = [name for name in required if not available[name]]
    doc = {
        "instance": _echo(pair),
        "certificates": certs,
        "required": required,
        "failed_requirements": failures,
    }
    if args.json:
        print(serialize_report(doc))
    else:
        for name, cert in (("A", pair.cert_A), ("B", pair.cert_B)):
            cop = cert.copositivity
            print(
                f"{name}: sdd={_yn(cert.is_sdd)} dd={_yn(cert.is_dd)} "
                f"pd={_yn(cert.is_pd)} copositive={_yn(cop.copositive)} "
                f"(via {cop.method})"
            )
    if failures:
        print(
            "error: required certificates not satisfied: " + ", ".join(failures),
            file=sys.stderr,
        )
        return EXIT_HYPOTHESIS
    return EXIT_OK


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _shift_interval(iv: Interval | None, delta: float) -> Interval | None:
    if iv is None:
        return None
    return Interval(iv.lo + delta, iv.hi + delta)


def _shift_union(union: IntervalUnion | None, delta: float) -> IntervalUnion | None:
    if union is None:
        return None
    return IntervalUnion(
        tuple(_shift_interval(iv, delta) for iv in union.intervals),
        normalized=union.normalized,
    )


def cmd_localize(args) -> int:
    t0 = time.perf_counter()
    pair = _load_pair(args)
    mu = 0.0
    if args.shift is not None:
        if args.shift == "auto":
            mu = suggest_shift(pair)
        else:
            try:
                mu = float(args.shift)
            except ValueError:
                raise ParseError(f"--shift must be 'auto' or a number, got {args.shift!r}")
    work = shift_pair(pair, mu) if mu != 0.0 else pair

    if args.sets == "auto":
        strict = False
        names = list(SET_NAMES)
    else:
        strict = True
        names = [s.strip() for s in args.sets.split(",") if s.strip()]
        unknown = [s for s in names if s not in SET_NAMES]
        if unknown:
            raise ParseError(f"unknown set names {unknown}; choose from {SET_NAMES}")

    loc = localization_report(work)
    sets: dict[str, dict] = {}
    if "k1" in names:
        sets["k1"] = {
            "rows": [interval_obj(_shift_interval(iv, -mu)) for iv in loc.k1_rows],
            "union": union_obj(_shift_union(loc.k1, -mu)),
            "hull": interval_obj(_shift_interval(loc.hull_k1, -mu)),
        }
    for key, rows, union in (
        ("k1cop", loc.k1_cop_rows, loc.k1_cop),
        ("k2", loc.k2_pair_intervals, loc.k2),
    ):
        if key not in names:
            continue
        if rows is None:
            if strict:
                raise HypothesisViolation(
                    f"set '{key}' needs a certified copositive left matrix "
                    "(after the shift, if any); try --shift auto"
                )
            continue
        entry = {
            "rows": [interval_obj(_shift_interval(iv, -mu)) for iv in rows],
            "union": union_obj(_shift_union(union, -mu)),
            "hull": interval_obj(_shift_interval(union.hull(), -mu)),
        }
        if key == "k2":
            entry["pairs"] = [[int(i), int(j)] for i, j in loc.k2_pairs]
        sets[key] = entry

    gamma = _shift_interval(loc.gamma, -mu)
    doc = {
        "instance": _echo(pair),
        "certificates": {
            "A": certificate_obj(pair.cert_A),
            "B": certificate_obj(pair.cert_B),
        },
        "shift": mu,
        "assumptions_after_shift": {
            "b_pd": loc.assumptions.b_pd,
            "b_sdd": loc.assumptions.b_sdd,
            "a_copositive": loc.assumptions.a_copositive,
        },
        "sets": sets,
        "gamma": interval_obj(gamma),
        "tolerances": {"max_exact_n": args.max_exact_n, "instance_sym_rtol": 1e-9},
        "timings": {"total_s": time.perf_counter() - t0},
    }
    if args.json:
        print(serialize_report(doc))
    else:
        if mu:
            print(f"shift: {mu:.9g} (sets below are translated back)")
        print(_render_sets(doc))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    t0 = time.perf_counter()
    pair = _load_pair(args)
    feas_tol = args.tol_feas
    effective_feas = (
        feas_tol
        if feas_tol is not None
        else 1e-8 * (1.0 + inf_norm(pair.A) + inf_norm(pair.B))
    )
    enum_kwargs = dict(
        support_tol=args.tol_support,
        sign_tol=args.tol_sign,
        feas_tol=feas_tol,
        dedup_rtol=args.tol_dedup,
    )
    localization_error = None
    try:
        rep = spectrum_report(pair, n_max=args.nmax, **enum_kwargs)
        loc_doc = localization_obj(rep.localization)
        spec = rep.spectrum
        verdicts = rep.all_verdicts()
    except HypothesisViolation as exc:
        spec = enumerate_spectrum(pair, n_max=args.nmax, **enum_kwargs)
        gamma = gamma_interval(pair)
        loc_doc = None
        localization_error = str(exc)
        verdicts = {
            "pi_in_gamma": all(
                gamma.contains(float(v), 1e-7) for v in spec.values
            )
        }
    doc = {
        "instance": _echo(pair),
        "certificates": {
            "A": certificate_obj(pair.cert_A),
            "B": certificate_obj(pair.cert_B),
        },
        "localization": loc_doc,
        "localization_skipped": localization_error,
        "spectrum": spectrum_obj(spec),
        "verdicts": verdicts,
        "tolerances": {
            "n_max": args.nmax,
            "feas_tol": effective_feas,
            "support_tol": args.tol_support,
            "sign_tol": args.tol_sign,
            "dedup_rtol": args.tol_dedup,
            "max_exact_n": args.max_exact_n,
        },
        "timings": {"total_s": time.perf_counter() - t0},
    }
    if args.json:
        print(serialize_report(doc))
        return EXIT_OK
    print(f"complementarity eigenvalues ({len(spec.values)}):")
    for value in spec.values:
        witness = next(s for s in spec.solutions if abs(s.lam - value) <= 1e-7 * (1 + abs(value)))
        support = "{" + ",".join(str(i + 1) for i in witness.support) + "}"
        xs = np.array2string(witness.x, precision=6, suppress_small=True)
        print(f"  lambda = {value:< .10g}  support = {support}  x = {xs}")
    if spec.degenerate_supports:
        sups = ", ".join(
            "{" + ",".join(str(i + 1) for i in s) + "}" for s in spec.degenerate_supports
        )
        print(f"note: repeated submatrix eigenvalues on supports {sups}")
    if localization_error:
        print(f"localization skipped: {localization_error}")
    print("verdicts:")
    for name, verdict in verdicts.items():
        shown = "n/a" if verdict is None else _yn(verdict)
        print(f"  {name}: {shown}")
    return EXIT_OK


def cmd_family(args) -> int:
    if args.prop == 4:
        if args.eps is None:
            raise ParamOutOfRange("--prop 4 needs --eps")
        inst = prop4_instance(args.n, args.eps)
    else:
        missing = [
            flag
            for flag, value in (("--beta", args.beta), ("--R", args.big_r), ("--c", args.c))
            if value is None
        ]
        if missing:
            raise ParamOutOfRange(f"--prop 5 needs {', '.join(missing)}")
        inst = prop5_instance(args.n, args.beta, args.big_r, args.c)
    emit = Path(args.emit)
    save_instance(emit, inst.pair.A, inst.pair.B)
    sidecar = emit.with_suffix(".expected.json")
    sidecar_doc = {
        "params": inst.params,
        "expected_hull_k1": interval_obj(inst.expected_hull_k1),
        "expected_hull_k2": interval_obj(inst.expected_hull_k2),
        "expected_gamma": interval_obj(inst.expected_gamma),
    }
    sidecar.write_text(serialize_report(sidecar_doc) + "\n", encoding="utf-8")
    print(f"wrote {emit} and {sidecar}")
    return EXIT_OK


def _render_sets(doc: dict, width: int = 80) -> str:
    """ASCII number line of the computed sets, display only."""
    hull = doc["sets"].get("k1", {}).get("hull")
    if hull is None:
        candidates = [s["hull"] for s in doc["sets"].values() if s.get("hull")]
        candidates.append(doc["gamma"])
        hull = [min(c[0] for c in candidates), max(c[1] for c in candidates)]
    lo, hi = hull
    span = hi - lo
    pad = 0.05 * span if span > 0 else max(0.5, 0.05 * abs(lo))
    w0, w1 = lo - pad, hi + pad

    def col(x: float) -> int:
        frac = (x - w0) / (w1 - w0)
        return min(width - 1, max(0, round(frac * (width - 1))))

    lines = []
    label_pad = 7
    for name, payload in doc["sets"].items():
        canvas = [" "] * width
        for interval in payload["union"]["intervals"]:
            c0, c1 = col(interval[0]), col(interval[1])
            if c1 == c0:
                canvas[c0] = "|"
            else:
                canvas[c0] = "["
                canvas[c1] = "]"
                for c in range(c0 + 1, c1):
                    canvas[c] = "="
        lines.append(f"{name:>{label_pad}} " + "".join(canvas))
    canvas = [" "] * width
    c0, c1 = col(doc["gamma"][0]), col(doc["gamma"][1])
    canvas[c0] = "<" if c1 > c0 else "|"
    if c1 > c0:
        canvas[c1] = ">"
        for c in range(c0 + 1, c1):
            canvas[c] = "-"
    lines.append(f"{'gamma':>{label_pad}} " + "".join(canvas))
    axis = f"{w0:< .6g}".strip()
    right = f"{w1:.6g}"
    ruler = axis + " " * max(1, width - len(axis) - len(right)) + right
    lines.append(" " * (label_pad + 1) + ruler)
    return "\n".join(lines)


if __name__ == "__main__":
    sys.exit(main())
