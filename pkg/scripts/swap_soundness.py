#!/usr/bin/env python3
"""Swap-test repetition sweep.

Runs message-only swap-mode sessions and compares the misdecode rate of
bit-0 rounds with the (1/2)^R prediction, where R is the number of swap
repetitions per comparison.
"""

import argparse
import sys

from mubqkd.gf import FieldSpec
from mubqkd.protocol import SessionConfig, run_session


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=7)
    ap.add_argument("--rounds", type=int, default=4000)
    ap.add_argument("--max-reps", type=int, default=6)
    ap.add_argument("--seed", type=int, default=11)
    ap.add_argument("--out", type=str, default=None, help="CSV path (default stdout)")
    args = ap.parse_args()

    spec = FieldSpec(args.p, 1)
    lines = ["d,reps,bit0_rounds,misdecode_rate,predicted"]
    for reps in range(1, args.max_reps + 1):
        cfg = SessionConfig(field=spec, rounds=args.rounds, check_fraction=0.0,
                            mode="swap", swap_repetitions=reps, seed=args.seed + reps)
        t = run_session(cfg)
        bit0 = [r for r in t.records if r.bit_sent == 0]
        mis = sum(r.decoded == 1 for r in bit0) / len(bit0)
        lines.append(f"{spec.d},{reps},{len(bit0)},{mis:.6f},{0.5 ** reps:.6f}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
