#!/usr/bin/env python3
"""Rebuild the chain and graph census for n = 3..N and print it next to the published values."""

import argparse
import logging
import time
from dataclasses import dataclass
from pathlib import Path

from gbdq.census import CensusConfig, run_census
from gbdq.chains import default_jobs
from gbdq.cli import format_census

PUBLISHED = {  # n: (chains, graphs, iso classes, {omega,rho}-classes)
    3: (70, None, None, None),
    4: (1236, 499, 7, 4),
    5: (29400, 5948, 28, 12),
    6: (881934, 82294, 178, 73),
}


@dataclass
class Config:
    max_n: int = 6
    jobs: int = 1
    out: Path | None = None


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--jobs", type=int, default=default_jobs())
    ap.add_argument("--out", type=Path)
    a = ap.parse_args()
    cfg = Config(a.max_n, a.jobs, a.out)
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    for n in range(3, cfg.max_n + 1):
        t0 = time.perf_counter()
        census = run_census(CensusConfig(n, cfg.jobs))
        elapsed = time.perf_counter() - t0
        print(format_census(census), end="")
        got = (census.chains, census.graphs, census.iso_classes, census.omega_rho_classes)
        pub = PUBLISHED.get(n)
        if pub:
            names = ("chains", "graphs", "iso", "omega_rho")
            diffs = [f"{k}: {g} vs {p}" for k, g, p in zip(names, got, pub) if p is not None and g != p]
            print("published values:", "all match" if not diffs else "; ".join(diffs))
        print(f"({elapsed:.1f}s)\n")
        if cfg.out:
            cfg.out.mkdir(parents=True, exist_ok=True)
            (cfg.out / f"census_n{n}.json").write_text(census.to_json() + "\n")


if __name__ == "__main__":
    main()
