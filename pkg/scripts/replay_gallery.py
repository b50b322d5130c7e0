"""Replay the bundled worked examples and print one line per expectation.

    python3 scripts/replay_gallery.py [--seed 0] [--trials 3]
"""

import argparse

from borel.gallery import run_gallery


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=3)
    args = ap.parse_args()
    checks = run_gallery(seed=args.seed, trials=args.trials)
    width = max(len(c.fixture) for c in checks)
    for c in checks:
        mark = "ok  " if c.ok else "FAIL"
        print(f"{mark} {c.fixture:<{width}} {c.block:>7} {c.key:<20} {c.actual}")
    bad = sum(not c.ok for c in checks)
    print(f"{len(checks) - bad}/{len(checks)} passed")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
