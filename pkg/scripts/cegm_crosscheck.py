"""Compare the critical-point sum with the combinatorial E6 amplitude on random rational inputs."""

import argparse
from dataclasses import dataclass

import numpy as np

from pezzo import scatter


@dataclass
class Config:
    samples: int = 10
    seed: int = 1


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=10)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    cfg = Config(args.samples, args.seed)
    rng = np.random.default_rng(cfg.seed)
    worst = 0.0
    for k in range(cfg.samples):
        s = scatter.random_rational(15, rng)
        r = scatter.e6_cegm_check(s, seed=cfg.seed + k)
        worst = max(worst, r.rel_error)
        print(f"sample {k}: found {r.found} rel error {r.rel_error:.3e}", flush=True)
    print(f"worst relative error {worst:.3e}")


if __name__ == "__main__":
    main()
