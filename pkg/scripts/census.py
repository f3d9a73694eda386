"""Region census of the line-and-conic arrangement for a point configuration."""

import argparse
import json
from dataclasses import dataclass

from pezzo import checks, fixtures, realdp, scatter

CONFIGS = {
    "example": fixtures.EXAMPLE_CUBIC_MATRIX,
    "pentagon": scatter.CONVEX_PENTAGON,
    "seven": checks.SEVEN_POINTS,
}


@dataclass
class Config:
    name: str = "example"
    sign_vectors: bool = False
    double_six: bool = True


def run(cfg: Config) -> dict:
    matrix = CONFIGS[cfg.name] if cfg.name in CONFIGS else json.loads(cfg.name)
    out = {"config": cfg.name}
    if len(matrix[0]) <= 6:
        c = realdp.blowup_census(matrix)
        out.update(v=c.v, e=c.e, f=c.f, sizes=c.sizes(), sign_vectors=c.sign_vector_count, euler=c.euler())
        if cfg.double_six and len(matrix[0]) == 6:
            rep = realdp.double_six_check(c)
            out["double_six_unique"] = rep.unique
            out["double_six"] = [sorted(s) for s in rep.double_six] if rep.double_six else None
    if cfg.sign_vectors or len(matrix[0]) > 6:
        out["sampled_sign_vectors"] = realdp.sample_sign_vectors(matrix)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("config", nargs="?", default="example", help="example | pentagon | seven | JSON 3xn matrix")
    ap.add_argument("--sign-vectors", action="store_true")
    args = ap.parse_args()
    print(json.dumps(run(Config(args.config, args.sign_vectors)), indent=2, default=str))


if __name__ == "__main__":
    main()
