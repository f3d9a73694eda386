"""Sampling estimate of the number of sign vectors for seven points, over several seeds."""

import argparse
import time
from dataclasses import dataclass

from pezzo import checks, realdp


@dataclass
class Config:
    seeds: tuple[int, ...] = (0, 1, 2)
    random_samples: int = 200_000


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--samples", type=int, default=200_000)
    args = ap.parse_args()
    cfg = Config(tuple(args.seeds), args.samples)
    for seed in cfg.seeds:
        start = time.perf_counter()
        n = realdp.sample_sign_vectors(checks.SEVEN_POINTS, random_samples=cfg.random_samples, seed=seed)
        print(f"seed {seed}: {n} sign vectors ({time.perf_counter() - start:.1f}s)", flush=True)


if __name__ == "__main__":
    main()
