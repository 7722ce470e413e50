"""Key-distribution protocol over shared entangled pairs.

Each round uses two entangled pairs with labels (b, c) and (b, c - delta).
Alice measures the first particle of both pairs in one quadratic basis b1
of her choice, recording c1 and c1'.  Bob's particles transit a quantum
channel where an intercept-resend eavesdropper may measure and forward
them.  After transit the round is assigned message or check duty, so the
eavesdropper cannot condition on it:

* message round: Alice announces lambda (the matching value c1' - c1 +
  delta for bit 1, any other field value for bit 0); Bob shifts his
  second particle by lambda and compares his two states, either through
  an exact overlap oracle or through repeated swap tests.
* check round: Alice discloses (b2, expected c2) for the first particle;
  Bob measures it projectively in basis b2 and records pass/fail.

Sessions are deterministic functions of their seed; transcripts persist
as JSON Lines plus a single summary document.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .entangle import EntangledPair, PairLabel, entangled_mub, measure_first, shift_remote
from .gf import FieldSpec, GfElem
from .hilbert import born_sample, inner, swap_test
from .mub import BasisId, basis_from_index, basis_index, basis_matrix
from .phasespace import CvLabel, cv_equal_delta, cv_shift, cv_split

ORACLE_MATCH_TOL = 1e-9

_EVE_KINDS = ("none", "intercept_resend")
_EVE_PICKERS = ("fixed", "uniform_quadratic", "uniform_all")
_MODES = ("oracle", "swap")


@dataclass(frozen=True)
class EveStrategy:
    """Intercept-resend attack configuration; kind "none" disables it.

    fixed_basis is a canonical basis index (0..d-1 quadratic, d
    computational) and applies only to the "fixed" picker.
    """

    kind: str = "none"
    picker: str = "uniform_all"
    fixed_basis: int | None = None

    def __post_init__(self):
        if self.kind not in _EVE_KINDS:
            raise ValueError(f"unknown eavesdropper kind {self.kind!r}")
        if self.picker not in _EVE_PICKERS:
            raise ValueError(f"unknown basis picker {self.picker!r}")
        if self.kind == "intercept_resend" and self.picker == "fixed" and self.fixed_basis is None:
            raise ValueError("fixed picker needs a fixed_basis index")

    def to_json(self) -> dict:
        return {"kind": self.kind, "picker": self.picker, "fixed_basis": self.fixed_basis}

    @classmethod
    def from_json(cls, cfg: dict) -> EveStrategy:
        return cls(kind=cfg.get("kind", "none"),
                   picker=cfg.get("picker", "uniform_all"),
                   fixed_basis=cfg.get("fixed_basis"))


@dataclass(frozen=True)
class SessionConfig:
    """Parameters of one protocol session; validated on construction."""

    field: FieldSpec
    rounds: int
    check_fraction: float = 0.1
    mode: str = "oracle"
    swap_repetitions: int = 1
    eve: EveStrategy = dc_field(default_factory=EveStrategy)
    delta_offset: GfElem | None = None     # None means zero offset
    pair_label: PairLabel | None = None    # None means a fresh random label per round
    seed: int = 0

    def __post_init__(self):
        if self.rounds < 1:
            raise ValueError(f"rounds must be at least 1, got {self.rounds}")
        if not 0.0 <= self.check_fraction <= 1.0:
            raise ValueError(f"check_fraction must lie in [0, 1], got {self.check_fraction}")
        if self.mode not in _MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.swap_repetitions < 1:
            raise ValueError("swap_repetitions must be at least 1")
        delta = self.delta_offset if self.delta_offset is not None else self.field.zero()
        if delta.field != self.field:
            raise ValueError("delta_offset belongs to a different field spec")
        object.__setattr__(self, "delta_offset", delta)
        if self.pair_label is not None:
            if self.pair_label.b.field != self.field or self.pair_label.c.field != self.field:
                raise ValueError("pair_label belongs to a different field spec")
        if self.eve.kind == "intercept_resend" and self.eve.picker == "fixed":
            if not 0 <= self.eve.fixed_basis <= self.field.d:
                raise ValueError(f"fixed eavesdropper basis index outside [0, {self.field.d}]")

    def to_json(self) -> dict:
        return {
            "field": self.field.to_config(),
            "rounds": self.rounds,
            "check_fraction": self.check_fraction,
            "mode": self.mode,
            "swap_repetitions": self.swap_repetitions,
            "eve": self.eve.to_json(),
            "delta_offset": self.delta_offset.index,
            "pair_label": ([self.pair_label.b.index, self.pair_label.c.index]
                           if self.pair_label is not None else None),
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, cfg: dict) -> SessionConfig:
        spec = FieldSpec.from_config(cfg["field"])
        pair = cfg.get("pair_label")
        return cls(
            field=spec,
            rounds=int(cfg["rounds"]),
            check_fraction=float(cfg.get("check_fraction", 0.1)),
            mode=cfg.get("mode", "oracle"),
            swap_repetitions=int(cfg.get("swap_repetitions", 1)),
            eve=EveStrategy.from_json(cfg.get("eve") or {}),
            delta_offset=spec.from_index(int(cfg.get("delta_offset", 0))),
            pair_label=(PairLabel(spec.from_index(int(pair[0])), spec.from_index(int(pair[1])))
                        if pair is not None else None),
            seed=int(cfg.get("seed", 0)),
        )


@dataclass
class RoundRecord:
    """One protocol round; field values are canonical integer indices."""

    round: int
    kind: str
    bit_sent: int | None
    lam: int | None
    b1: int
    c1: int
    c1p: int
    eve_basis: int | None
    eve_outcome: list[int] | None
    decoded: int | None
    check_b2: int | None
    check_expected: int | None
    check_measured: int | None
    check_passed: bool | None

    def to_json(self) -> dict:
        return {
            "round": self.round,
            "kind": self.kind,
            "bit_sent": self.bit_sent,
            "lambda": self.lam,
            "b1": self.b1,
            "c1": self.c1,
            "c1p": self.c1p,
            "eve_basis": self.eve_basis,
            "eve_outcome": self.eve_outcome,
            "decoded": self.decoded,
            "check_b2": self.check_b2,
            "check_expected": self.check_expected,
            "check_measured": self.check_measured,
            "check_passed": self.check_passed,
        }


@dataclass
class Transcript:
    config: SessionConfig
    records: list[RoundRecord]
    summary: dict


def alice_encode(bit: int, c1: GfElem, c1p: GfElem, delta: GfElem, rng) -> GfElem:
    """Announcement value: the matching shift for bit 1, uniformly any of
    the d-1 other field values for bit 0."""
    match = c1p - c1 + delta
    if bit == 1:
        return match
    spec = c1.field
    k = int(rng.integers(spec.d - 1))
    if k >= match.index:
        k += 1
    return spec.from_index(k)


def bob_decode(state2: np.ndarray, state2p: np.ndarray, lam: GfElem,
               mode: str, reps: int, rng) -> int:
    """Shift the second state by lam and compare with the first.

    oracle mode decides from the exact overlap magnitude; swap mode runs
    reps independent swap tests (fresh copies each) and decodes 0 on any
    antisymmetric outcome.
    """
    shifted = shift_remote(state2p, lam)
    if mode == "oracle":
        return 1 if abs(inner(state2, shifted)) > 1.0 - ORACLE_MATCH_TOL else 0
    for _ in range(reps):
        if swap_test(state2, shifted, rng) == "antisymmetric":
            return 0
    return 1


def _pick_eve_basis(eve: EveStrategy, spec: FieldSpec, rng) -> BasisId:
    if eve.picker == "fixed":
        return basis_from_index(spec, eve.fixed_basis)
    if eve.picker == "uniform_quadratic":
        return BasisId(spec.from_index(int(rng.integers(spec.d))))
    return basis_from_index(spec, int(rng.integers(spec.d + 1)))


def run_round(config: SessionConfig, round_index: int, rng) -> RoundRecord:
    spec = config.field
    d = spec.d
    if config.pair_label is None:
        b = spec.from_index(int(rng.integers(d)))
        c = spec.from_index(int(rng.integers(d)))
    else:
        b, c = config.pair_label.b, config.pair_label.c
    delta = config.delta_offset
    pair1 = entangled_mub(spec, PairLabel(b, c))
    pair2 = entangled_mub(spec, PairLabel(b, c - delta))

    # one quadratic basis for both of Alice's measurements
    b1 = BasisId(spec.from_index(int(rng.integers(d))))
    c1, bob1 = measure_first(pair1, b1, rng)
    c1p, bob2 = measure_first(pair2, b1, rng)

    eve_basis = eve_outcome = None
    if config.eve.kind == "intercept_resend":
        eb = _pick_eve_basis(config.eve, spec, rng)
        eve_mat = basis_matrix(spec, eb)
        k1, bob1 = born_sample(bob1, eve_mat, rng)
        k2, bob2 = born_sample(bob2, eve_mat, rng)
        eve_basis, eve_outcome = basis_index(spec, eb), [k1, k2]

    # duty assigned only after transit
    kind = "check" if rng.random() < config.check_fraction else "message"

    rec = RoundRecord(round=round_index, kind=kind, bit_sent=None, lam=None,
                      b1=b1.b.index, c1=c1.index, c1p=c1p.index,
                      eve_basis=eve_basis, eve_outcome=eve_outcome, decoded=None,
                      check_b2=None, check_expected=None,
                      check_measured=None, check_passed=None)

    if kind == "message":
        bit = int(rng.integers(2))
        lam = alice_encode(bit, c1, c1p, delta, rng)
        rec.bit_sent = bit
        rec.lam = lam.index
        rec.decoded = bob_decode(bob1, bob2, lam, config.mode, config.swap_repetitions, rng)
    else:
        b2 = b - b1.b
        expected = c - c1
        measured, _ = born_sample(bob1, basis_matrix(spec, BasisId(b2)), rng)
        rec.check_b2 = b2.index
        rec.check_expected = expected.index
        rec.check_measured = measured
        rec.check_passed = measured == expected.index
    return rec


def eavesdropper_detected(passes: int, n_check: int) -> bool:
    """Check pass rate significantly below 1 (three binomial sigma)."""
    if n_check == 0:
        return False
    rate = passes / n_check
    eps = 3.0 * math.sqrt(rate * (1.0 - rate) / n_check)
    return rate < 1.0 - eps


def summarize(records: list[RoundRecord]) -> dict:
    """Session statistics, recomputable from the round records alone."""
    msg = [r for r in records if r.kind == "message"]
    chk = [r for r in records if r.kind == "check"]
    bit_errors = sum(1 for r in msg if r.decoded != r.bit_sent)
    passes = sum(1 for r in chk if r.check_passed)
    return {
        "rounds": len(records),
        "message_rounds": len(msg),
        "check_rounds": len(chk),
        "bit_errors": bit_errors,
        "bit_error_rate": bit_errors / len(msg) if msg else None,
        "check_passes": passes,
        "check_pass_rate": passes / len(chk) if chk else None,
        "eavesdropper_detected": eavesdropper_detected(passes, len(chk)),
    }


def run_session(config: SessionConfig) -> Transcript:
    """Run all rounds on a stream seeded only by the config seed."""
    rng = np.random.default_rng(config.seed)
    records = [run_round(config, i, rng) for i in range(config.rounds)]
    summary = {"v": 1, "config": config.to_json(), **summarize(records)}
    return Transcript(config=config, records=records, summary=summary)


def run_cv_round(bit: int, rng, b: float | None = None, c: float | None = None,
                 delta: float = 0.0, interval: tuple[float, float] = (-10.0, 10.0)) -> dict:
    """Label-level continuous-variable analog of one message round.

    Measurement outcomes are drawn uniformly from a finite interval (a
    uniform distribution over all reals is improper).  The label algebra
    reproduces the same-basis delta correlation: the shifted second label
    matches the first exactly when lambda equals c1' - c1 + delta.
    """
    lo, hi = interval
    if b is None:
        b = float(rng.uniform(lo, hi))
    if c is None:
        c = float(rng.uniform(lo, hi))
    b1 = float(rng.uniform(lo, hi))
    c1 = float(rng.uniform(lo, hi))
    c1p = float(rng.uniform(lo, hi))
    bob1 = cv_split(CvLabel(b, c), b1, c1)
    bob2 = cv_split(CvLabel(b, c - delta), b1, c1p)
    match = c1p - c1 + delta
    if bit == 1:
        lam = match
    else:
        off = 0.0
        while abs(off) < 1e-6:
            off = float(rng.uniform(lo, hi))
        lam = match + off
    shifted = cv_shift(bob2, lam)
    decoded = 1 if cv_equal_delta(bob1, shifted) else 0
    return {
        "bit_sent": bit,
        "lambda": lam,
        "decoded": decoded,
        "alice": {"b1": b1, "c1": c1, "c1p": c1p},
        "bob": {"b2": bob1.b, "c2": bob1.c, "c2p_shifted": shifted.c},
    }
