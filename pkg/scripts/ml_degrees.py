"""Count critical points of the likelihood models by monodromy.

Fast models by default; --full adds Y(3,7), the E6 arrangement and the
Yoshida parametrization, which take hours.
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from pezzo import scatter

SLOW_MODELS = ["y37", "ae6", "yoshida"]


@dataclass
class Config:
    models: list[str] = field(default_factory=lambda: list(scatter.FAST_MODELS))
    seed: int = 1
    max_loops: int = 400
    out: str | None = None


def run(cfg: Config) -> list[dict]:
    rows = []
    for name in cfg.models:
        sys = scatter.model(name)
        rng = np.random.default_rng(cfg.seed)
        params = rng.normal(size=sys.nparams) + 1j * rng.normal(size=sys.nparams)
        start = time.perf_counter()
        sol = scatter.monodromy_solve(sys, sys.target, seed=cfg.seed, params=params, max_loops=cfg.max_loops)
        rows.append({"model": name, "target": sys.target, "found": sol.found,
                     "certified": int(sol.certified.sum()), "loops": sol.loops,
                     "seconds": round(time.perf_counter() - start, 2)})
        print(f"{name:8s} target {sys.target:6d} found {sol.found:6d} certified {rows[-1]['certified']:6d} "
              f"{rows[-1]['seconds']:9.1f}s", flush=True)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--full", action="store_true", help="include the hours-scale models")
    ap.add_argument("--models", nargs="+")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--max-loops", type=int, default=400)
    ap.add_argument("--out")
    args = ap.parse_args()
    models = args.models or list(scatter.FAST_MODELS) + (SLOW_MODELS if args.full else [])
    cfg = Config(models, args.seed, args.max_loops, args.out)
    rows = run(cfg)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "results": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
