"""Rebuild gin in three variables from Betti numbers (SLP) or the Hilbert function (SSP).

Every reconstruction that does not reproduce the sampled ideal is printed;
this is where a tie-breaking counterexample in the SLP assignment would show up.

    python3 scripts/roundtrip_codim3.py --count 2000 --max-socle 10
"""

import argparse
import collections
import time

from borel.codim3 import betti_gin_from_betti_I, reconstruct_gin_slp, reconstruct_gin_ssp
from borel.corpus import CorpusConfig, stable_corpus
from borel.errors import BorelError
from borel.invariants import ek_betti, hilbert_function
from borel.lefschetz import slp_oracle, ssp_oracle, wlp_oracle


def attempt(fn, *args):
    try:
        return fn(*args)
    except BorelError as e:
        return e


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--max-socle", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    start = time.perf_counter()
    seen = collections.Counter()
    failures = []
    for I in stable_corpus(args.count, CorpusConfig(max_socle=args.max_socle, seed=args.seed), n=3):
        H, B = hilbert_function(I), ek_betti(I)
        if wlp_oracle(I):
            seen["wlp"] += 1
            got = attempt(betti_gin_from_betti_I, B, H)
            if got != B:
                failures.append(("betti of gin", I.gens, got))
        if slp_oracle(I):
            seen["slp"] += 1
            got = attempt(reconstruct_gin_slp, B, H)
            if got != I:
                failures.append(("slp", I.gens, got))
        if ssp_oracle(I):
            seen["ssp"] += 1
            got = attempt(reconstruct_gin_ssp, H)
            if got != I:
                failures.append(("ssp", I.gens, got))

    print(f"{args.count} ideals in {time.perf_counter() - start:.1f}s: "
          + ", ".join(f"{k} {v}" for k, v in sorted(seen.items())))
    for kind, gens, got in failures:
        print(kind, gens, "->", got)
    print("failures:", len(failures))
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
