"""Compare criterion, Betti-table and rank-oracle verdicts on random strongly stable ideals.

    python3 scripts/fuzz_criteria.py --count 2000 --max-n 4 --max-socle 8 --seed 1
"""

import argparse
import collections
import time

from borel.corpus import CorpusConfig, stable_corpus
from borel.lefschetz import SLP, SSP, WLP, analyze


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-socle", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    start = time.perf_counter()
    cfg = CorpusConfig(max_n=args.max_n, max_socle=args.max_socle, seed=args.seed)
    tally = collections.Counter()
    problems = []
    for I in stable_corpus(args.count, cfg):
        got = {}
        for r in analyze(I):
            got.setdefault(r.property, set()).add(r.verdict)
        if any(len(v) > 1 for v in got.values()):
            problems.append(("methods disagree", I.gens))
            continue
        v = {p: s.pop() for p, s in got.items()}
        if (v[SSP] and not v[SLP]) or (v[SLP] and not v[WLP]):
            problems.append(("implication chain", I.gens))
        tally[(I.n, v[WLP], v[SLP], v[SSP])] += 1

    print(f"{args.count} ideals in {time.perf_counter() - start:.1f}s")
    print(" n   WLP   SLP   SSP  count")
    for (n, w, s, p), c in sorted(tally.items()):
        print(f"{n:>2} {w!s:>5} {s!s:>5} {p!s:>5} {c:>6}")
    for kind, gens in problems:
        print(kind, gens)
    print("disagreements:", len(problems))
    return 1 if problems else 0


if __name__ == "__main__":
    raise SystemExit(main())
