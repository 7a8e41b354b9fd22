"""Check lambda_min >= -k_max over many random hypergraphs and report the slack.

    python scripts/spectral_sweep.py --count 1000
"""
import argparse

import numpy as np

from hyperlap.hypercore import is_linear
from hyperlap.random_hypergraphs import random_hypergraph, random_linear_hypergraph
from hyperlap.spectral import verify_bound


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--rng-seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.Generator(np.random.PCG64(args.rng_seed))

    failures, slack = 0, []
    for i in range(args.count):
        n, L = int(rng.integers(3, 61)), int(rng.integers(3, 121))
        h = random_linear_hypergraph(rng, n, L, (1, 2, 3, 4)) if i % 2 else random_hypergraph(rng, n, L, 6)
        if h.link_count == 0:
            continue
        r = verify_bound(h)
        failures += not r.bound_satisfied
        slack.append((r.lambda_min + r.k_max, is_linear(h)))
    s = np.array([x for x, _ in slack])
    tight = np.array([lin for _, lin in slack])
    print(f"checked {len(slack)} hypergraphs, violations: {failures}")
    print(f"slack lambda_min + k_max: min {s.min():.3e}, median {np.median(s):.3f}")
    print(f"tight cases (slack < 1e-9): linear {int(np.sum((s < 1e-9) & tight))}, "
          f"nonlinear {int(np.sum((s < 1e-9) & ~tight))}")


if __name__ == "__main__":
    main()
