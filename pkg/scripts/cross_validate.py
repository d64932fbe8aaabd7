#!/usr/bin/env python3
"""Independent cross-checks.

1. Chain side vs. Schubert polynomials: for every u in S_m, every k and every
   w reachable in the k-Bruhat order within ``--rank`` steps, the Schur
   expansion of the chain generating function must equal the coefficients of
   S_u * s_lam(z_1..z_k) computed by divided differences.
2. Graph isomorphism classes vs. networkx (VF2), if installed.
"""

import argparse
import time
from dataclasses import dataclass

from gbdq.census import classify, global_graph
from gbdq.schubert import all_permutations, coeff_oracle, interval_schur_side, k_bruhat_above
from gbdq.tableaux import f_lambda, partitions


@dataclass
class Config:
    m: int = 5
    rank: int = 4
    iso_n: int = 5


def schubert_sweep(cfg: Config) -> int:
    bad = checked = 0
    for u in all_permutations(cfg.m):
        for k in range(1, cfg.m):
            for rank in range(cfg.rank + 1):
                oracle: dict = {}
                for lam in partitions(rank):
                    for w, c in coeff_oracle(u, lam, k).items():
                        oracle.setdefault(w, {})[lam] = c
                for w in k_bruhat_above(u, k, rank) | set(oracle):
                    exp, count = interval_schur_side(u, w, k)
                    want = oracle.get(w, {})
                    ok = exp.as_dict() == want and count == sum(f_lambda(l) * c for l, c in want.items())
                    checked += 1
                    if not ok:
                        bad += 1
                        print(f"MISMATCH u={u.one_line_string()} k={k} w={w.one_line_string()}: {exp} vs {want}")
    print(f"schubert sweep: {checked} intervals, {bad} mismatches")
    return bad


def networkx_classes(n: int) -> None:
    try:
        import networkx as nx
        from networkx.algorithms.isomorphism import categorical_edge_match, categorical_node_match
    except ImportError:
        print("networkx not installed; skipping isomorphism cross-check")
        return
    g = global_graph(n)
    comps, classes = classify(g)
    reps: list = []
    for members in comps:
        h = g.subgraph(members)
        x = nx.MultiGraph()
        for v in range(len(h)):
            x.add_node(v, sig=(h.descents[v], tuple(i for i in h.colors if h.fixed(v, i))))
        for v, w, i in h.edges():
            x.add_edge(v, w, color=i)
        if not any(len(r) == len(x) and nx.is_isomorphic(
                r, x, node_match=categorical_node_match("sig", None),
                edge_match=categorical_edge_match("color", None)) for r in reps):
            reps.append(x)
    print(f"n={n}: certificate classes {len(classes)}, networkx classes {len(reps)}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=5)
    ap.add_argument("--rank", type=int, default=4)
    ap.add_argument("--iso-n", type=int, default=5)
    a = ap.parse_args()
    cfg = Config(a.m, a.rank, a.iso_n)
    t0 = time.perf_counter()
    bad = schubert_sweep(cfg)
    networkx_classes(cfg.iso_n)
    print(f"done in {time.perf_counter() - t0:.1f}s")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
