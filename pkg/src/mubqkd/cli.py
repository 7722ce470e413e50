"""Command-line front end: invariant verification, basis and Wigner dumps,
and protocol sessions with persisted transcripts.

Exit codes: 0 success, 1 invariant failure, 2 usage or config error,
3 eavesdropper detected.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

import numpy as np

from .entangle import PairLabel, entangled_mub, exponent_additivity_check, \
    joint_c_measure, measure_first, shift_remote
from .gf import FieldSpec
from .hilbert import project_first
from .mub import BasisId, MubLabel, all_bases, basis_matrix, mub_state, unbiasedness_report
from .phasespace import dwigner1, dwigner2_support
from .protocol import EveStrategy, SessionConfig, run_session

VERIFY_TOLS = {
    "cross": 1e-9,
    "orthonormality": 1e-12,
    "completeness": 1e-12,
    "projection": 1e-12,
    "projection_norm": 1e-12,
    "shift": 1e-12,
    "epr": 1e-12,
}


def _field_from_args(args) -> FieldSpec:
    modulus = ()
    if getattr(args, "modulus", None):
        modulus = tuple(int(t) for t in args.modulus.split(","))
    return FieldSpec(args.p, args.n, modulus)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _tuple_stream(d: int, width: int, samples: int, rng):
    """Index tuples to test: exhaustive for small d, sampled otherwise."""
    if d ** width <= 2500:
        yield from itertools.product(range(d), repeat=width)
    else:
        for row in rng.integers(0, d, size=(samples, width)):
            yield tuple(int(x) for x in row)


def _verify_report(spec: FieldSpec, samples: int, seed: int) -> dict:
    rng = np.random.default_rng(seed)
    d = spec.d
    rep = unbiasedness_report(spec)
    root_d = np.sqrt(d)

    proj_dev = proj_norm_dev = 0.0
    for ib, ic, ib1, ic1 in _tuple_stream(d, 4, samples, rng):
        b, c = spec.from_index(ib), spec.from_index(ic)
        b1, c1 = spec.from_index(ib1), spec.from_index(ic1)
        pair = entangled_mub(spec, PairLabel(b, c))
        bra = mub_state(spec, MubLabel(BasisId(b1), c1))
        w = project_first(pair.state, bra)
        expect = mub_state(spec, MubLabel(BasisId(b - b1), c - c1)) / root_d
        proj_dev = max(proj_dev, float(np.max(np.abs(w - expect))))
        proj_norm_dev = max(proj_norm_dev, abs(float(np.vdot(w, w).real) - 1.0 / d))

    shift_dev = 0.0
    for ib, ic, il in _tuple_stream(d, 3, samples, rng):
        b, c, lam = spec.from_index(ib), spec.from_index(ic), spec.from_index(il)
        shifted = shift_remote(mub_state(spec, MubLabel(BasisId(b), c)), lam)
        target = mub_state(spec, MubLabel(BasisId(b), c + lam))
        shift_dev = max(shift_dev, float(np.max(np.abs(shifted - target))))

    epr = entangled_mub(spec, PairLabel(spec.zero(), spec.zero()))
    epr_target = np.zeros(d * d, dtype=complex)
    epr_target[np.arange(d) * (d + 1)] = 1.0 / root_d
    epr_dev = float(np.max(np.abs(epr.state - epr_target)))

    additivity = all(
        exponent_additivity_check(spec, spec.from_index(i1), spec.from_index(j1),
                                  spec.from_index(i2), spec.from_index(j2))
        for i1, j1, i2, j2 in _tuple_stream(d, 4, samples, rng))

    repeatable = True
    for _ in range(20):
        b = spec.from_index(int(rng.integers(d)))
        c = spec.from_index(int(rng.integers(d)))
        pair = entangled_mub(spec, PairLabel(b, c))
        out1, post1 = joint_c_measure(pair, b, rng)
        out2, post2 = joint_c_measure(post1, b, rng)
        if out1 != c or out2 != out1 or float(np.max(np.abs(post2 - post1))) > 1e-12:
            repeatable = False

    report = {
        "p": spec.p,
        "n": spec.n,
        "d": d,
        "modulus": list(spec.modulus),
        "basis_count": rep.basis_count,
        "max_cross_deviation": rep.max_cross_deviation,
        "max_orthonormality_deviation": rep.max_orthonormality_deviation,
        "max_completeness_deviation": rep.max_completeness_deviation,
        "max_projection_deviation": proj_dev,
        "max_projection_norm_deviation": proj_norm_dev,
        "max_shift_deviation": shift_dev,
        "max_epr_deviation": epr_dev,
        "exponent_additivity_ok": additivity,
        "joint_measure_repeatable": repeatable,
    }
    report["ok"] = bool(
        rep.basis_count == d + 1
        and rep.max_cross_deviation < VERIFY_TOLS["cross"]
        and rep.max_orthonormality_deviation < VERIFY_TOLS["orthonormality"]
        and rep.max_completeness_deviation < VERIFY_TOLS["completeness"]
        and proj_dev < VERIFY_TOLS["projection"]
        and proj_norm_dev < VERIFY_TOLS["projection_norm"]
        and shift_dev < VERIFY_TOLS["shift"]
        and epr_dev < VERIFY_TOLS["epr"]
        and additivity and repeatable)
    return report


def cmd_verify(args) -> int:
    spec = _field_from_args(args)
    if spec.d > args.max_d:
        raise ValueError(f"d = {spec.d} exceeds --max-d {args.max_d}")
    report = _verify_report(spec, args.samples, args.seed)
    print(json.dumps(report, indent=2))
    return 0 if report["ok"] else 1


# ---------------------------------------------------------------------------
# bases / wigner dumps
# ---------------------------------------------------------------------------

def _emit(lines, path):
    text = "\n".join(lines) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_bases(args) -> int:
    spec = _field_from_args(args)
    lines = ["basis,b_index,c_index,n_index,re,im"]
    for basis in all_bases(spec):
        fam = "computational" if basis.is_computational else "quadratic"
        b_idx = -1 if basis.is_computational else basis.b.index
        mat = basis_matrix(spec, basis)
        for c_idx in range(spec.d):
            for n_idx in range(spec.d):
                v = mat[c_idx, n_idx]
                lines.append(f"{fam},{b_idx},{c_idx},{n_idx},{float(v.real)!r},{float(v.imag)!r}")
    _emit(lines, args.out)
    return 0


def cmd_wigner(args) -> int:
    if args.n != 1:
        raise ValueError("Wigner tables are defined for prime dimension only (n = 1)")
    spec = _field_from_args(args)
    d = spec.d
    if not 0 <= args.b < d or not 0 <= args.c < d:
        raise ValueError(f"--b and --c must lie in [0, {d})")
    b, c = spec.from_index(args.b), spec.from_index(args.c)
    if args.pair:
        support = dwigner2_support(entangled_mub(spec, PairLabel(b, c)))
        lines = ["q1,p1,q2,p2,value"]
        for (q1, p1, q2, p2), v in sorted(support.items()):
            lines.append(f"{q1},{p1},{q2},{p2},{v!r}")
    else:
        table = dwigner1(mub_state(spec, MubLabel(BasisId(b), c))).table
        lines = ["q,p,value"]
        for q in range(d):
            for p in range(d):
                lines.append(f"{q},{p},{float(table[q, p])!r}")
    _emit(lines, args.out)
    return 0


# ---------------------------------------------------------------------------
# session
# ---------------------------------------------------------------------------

def _parse_eve(text: str) -> EveStrategy:
    if text == "none":
        return EveStrategy()
    if text == "uniform-quadratic":
        return EveStrategy("intercept_resend", "uniform_quadratic")
    if text == "uniform-all":
        return EveStrategy("intercept_resend", "uniform_all")
    if text.startswith("fixed:"):
        return EveStrategy("intercept_resend", "fixed", int(text.split(":", 1)[1]))
    raise ValueError(f"unknown --eve value {text!r}")


def _session_config(args) -> SessionConfig:
    if args.config:
        conflicting = [name for name, val in
                       [("--p", args.p), ("--rounds", args.rounds), ("--b", args.b), ("--c", args.c)]
                       if val is not None]
        if conflicting:
            raise ValueError(f"--config cannot be combined with {', '.join(conflicting)}")
        with open(args.config) as fh:
            return SessionConfig.from_json(json.load(fh))
    if args.p is None or args.rounds is None:
        raise ValueError("session needs --p and --rounds (or --config)")
    spec = _field_from_args(args)
    if (args.b is None) != (args.c is None):
        raise ValueError("--b and --c set the fixed pair label and must come together")
    pair = None
    if args.b is not None:
        pair = PairLabel(spec.from_index(args.b), spec.from_index(args.c))
    return SessionConfig(
        field=spec,
        rounds=args.rounds,
        check_fraction=args.check_frac,
        mode=args.mode,
        swap_repetitions=args.reps,
        eve=_parse_eve(args.eve),
        delta_offset=spec.from_index(args.delta),
        pair_label=pair,
        seed=args.seed,
    )


def cmd_session(args) -> int:
    config = _session_config(args)
    transcript = run_session(config)
    if not args.no_transcript:
        with open(args.out, "w") as fh:
            for rec in transcript.records:
                fh.write(json.dumps(rec.to_json()) + "\n")
    with open(args.stats, "w") as fh:
        fh.write(json.dumps(transcript.summary, indent=2) + "\n")
    s = transcript.summary

    def fmt(x):
        return "n/a" if x is None else f"{x:.6f}"

    print(f"session d={config.field.d} rounds={s['rounds']} message={s['message_rounds']} "
          f"check={s['check_rounds']} ber={fmt(s['bit_error_rate'])} "
          f"check_pass={fmt(s['check_pass_rate'])} detected={s['eavesdropper_detected']}")
    return 3 if s["eavesdropper_detected"] else 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mubqkd",
                                     description="MUB entanglement simulator and protocol auditor")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_field_args(sp, p_required=True):
        sp.add_argument("--p", type=int, required=p_required, default=None,
                        help="odd prime characteristic")
        sp.add_argument("--n", type=int, default=1, help="extension degree (d = p^n)")
        sp.add_argument("--modulus", type=str, default=None,
                        help="comma-separated modulus coefficients c0,c1,... (low-order first)")

    sp = sub.add_parser("verify", help="run the invariant suite and report max deviations")
    add_field_args(sp)
    sp.add_argument("--max-d", type=int, default=81, help="refuse dimensions above this")
    sp.add_argument("--samples", type=int, default=200,
                    help="sample count per check when exhaustive scans are too large")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bases", help="dump all d+1 basis amplitudes as CSV")
    add_field_args(sp)
    sp.add_argument("--out", type=str, default=None, help="output path (default stdout)")
    sp.set_defaults(func=cmd_bases)

    sp = sub.add_parser("wigner", help="dump a discrete Wigner table or pair support as CSV")
    add_field_args(sp)
    sp.add_argument("--b", type=int, required=True, help="quadratic basis index")
    sp.add_argument("--c", type=int, required=True, help="state index")
    sp.add_argument("--pair", action="store_true", help="two-particle support instead of a single state")
    sp.add_argument("--out", type=str, default=None)
    sp.set_defaults(func=cmd_wigner)

    sp = sub.add_parser("session", help="run a protocol session and persist the transcript")
    add_field_args(sp, p_required=False)
    sp.add_argument("--rounds", type=int, default=None)
    sp.add_argument("--check-frac", type=float, default=0.1)
    sp.add_argument("--mode", choices=["oracle", "swap"], default="oracle")
    sp.add_argument("--reps", type=int, default=1, help="swap-test repetitions per comparison")
    sp.add_argument("--eve", type=str, default="none",
                    help="none | fixed:<basis idx> | uniform-quadratic | uniform-all")
    sp.add_argument("--delta", type=int, default=0, help="offset between the two pair labels (index)")
    sp.add_argument("--b", type=int, default=None, help="fixed pair label b (index); random if omitted")
    sp.add_argument("--c", type=int, default=None, help="fixed pair label c (index); random if omitted")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", type=str, default="transcript.jsonl")
    sp.add_argument("--stats", type=str, default="stats.json")
    sp.add_argument("--no-transcript", action="store_true",
                    help="skip the JSONL transcript (summary only)")
    sp.add_argument("--config", type=str, default=None,
                    help="JSON session config instead of individual flags")
    sp.set_defaults(func=cmd_session)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
