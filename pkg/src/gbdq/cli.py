"""Command-line entry point: ``gbdq {enumerate,graphs,verify,expand,export}``.

Results go to stdout (or files under --out); progress goes to stderr.
Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .chains import Chain, canonical_flat_chains, default_jobs, enumerate_interval_chains, is_disjoint_flat
from .perm import Permutation, inversion_length

log = logging.getLogger("gbdq")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    zeta: Optional[str] = None
    u: Optional[str] = None
    w: Optional[str] = None
    k: Optional[int] = None
    jobs: int = 1
    out: Optional[Path] = None
    formats: list = field(default_factory=lambda: ["text"])
    oracle: bool = False
    corrupt: bool = False

    def selector(self) -> str:
        chosen = [name for name, val in (("n", self.n), ("zeta", self.zeta), ("u/w/k", self.u or self.w))
                  if val is not None]
        if len(chosen) != 1:
            raise UsageError("give exactly one of --n, --zeta, or --u/--w/--k")
        if chosen[0] == "u/w/k" and (self.u is None or self.w is None or self.k is None):
            raise UsageError("--u, --w and --k go together")
        return chosen[0]


# helpers -----------------------------------------------------------------


def chain_record(c: Chain) -> dict:
    return {
        "transpositions": [list(t) for t in c.transpositions],
        "labels": list(c.labels),
        "descents": sorted(c.descents.positions),
        "endpoint": c.endpoint.cycle_string(),
    }


def _write(cfg: RunConfig, name: str, text: str) -> Path:
    cfg.out.mkdir(parents=True, exist_ok=True)
    path = cfg.out / name
    path.write_text(text)
    log.info("wrote %s", path)
    return path


def _parse_perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _check_n(n: int, lo: int = 1) -> None:
    if n < lo or n > 7:
        raise UsageError(f"n must be between {lo} and 7")


def _target_chains(cfg: RunConfig) -> list:
    """Chains selected by --zeta or --u/--w/--k (as GB chains of [e, w u^-1])."""
    if cfg.zeta is not None:
        return enumerate_interval_chains(_parse_perm(cfg.zeta))
    from .schubert import enumerate_k_bruhat_interval

    u, w = _parse_perm(cfg.u), _parse_perm(cfg.w)
    return [Chain.from_flat([x for t in kc.left_transpositions() for x in t])
            for kc in enumerate_k_bruhat_interval(u, w, cfg.k)]


# commands ----------------------------------------------------------------


def cmd_enumerate(cfg: RunConfig) -> int:
    _check_n(cfg.n)
    flats = canonical_flat_chains(cfg.n, jobs=cfg.jobs)
    disjoint = sum(1 for f in flats if is_disjoint_flat(f))
    print(f"n={cfg.n} chains={len(flats)} disjoint={disjoint}")
    if cfg.out is not None:
        if "text" in cfg.formats:
            _write(cfg, f"chains_n{cfg.n}.txt", "".join(str(Chain.from_flat(f)) + "\n" for f in flats))
        if "json" in cfg.formats:
            recs = [chain_record(Chain.from_flat(f)) for f in flats]
            _write(cfg, f"chains_n{cfg.n}.json", json.dumps(recs, indent=None) + "\n")
    return EXIT_OK


def format_census(c) -> str:
    lines = [f"n={c.n} chains={c.chains} graphs={c.graphs} iso_classes={c.iso_classes} "
             f"omega_rho_classes={c.omega_rho_classes} schur_positive={c.all_schur_positive}",
             "vertices graphs iso omega_rho functions"]
    for r in c.rows:
        lines.append(f"{r.vertices} {r.graphs} {r.iso_classes} {r.omega_rho_classes} {r.distinct_functions}"
                     f"  {' | '.join(r.functions)}")
    return "\n".join(lines) + "\n"


def cmd_graphs(cfg: RunConfig) -> int:
    from .census import CensusConfig, classify, global_graph, run_census

    _check_n(cfg.n, 3)
    g = global_graph(cfg.n, cfg.jobs)
    census = run_census(CensusConfig(cfg.n, cfg.jobs), g)
    sys.stdout.write(format_census(census))
    if cfg.out is not None:
        _write(cfg, f"census_n{cfg.n}.json", census.to_json() + "\n")
        certs = [k.cert.hex() for k in classify(g)[1]]
        _write(cfg, f"certificates_n{cfg.n}.txt", "\n".join(certs) + "\n")
    return EXIT_OK if census.all_schur_positive else EXIT_FAIL


def corrupt_graph(g) -> None:
    """Negative control: make phi_2 fix both ends of its first edge."""
    t = g.phi[2]
    v = next(x for x in range(len(g)) if t[x] != x)
    w = t[v]
    t[v], t[w] = v, w


def cmd_verify(cfg: RunConfig) -> int:
    from .census import global_graph, verify_level
    from .graphs import AxiomReport

    _check_n(cfg.n, 3)
    total = AxiomReport()
    per_level = {}
    for n in range(3, cfg.n + 1):
        g = global_graph(n, cfg.jobs)
        if cfg.corrupt:
            corrupt_graph(g)
        rep = verify_level(n, g=g)
        per_level[n] = rep.as_dict()
        print(f"n={n} chains={len(g)} {'PASS' if rep.passed else 'FAIL'} "
              + " ".join(f"{a}={'ok' if rep.status(a) else 'FAIL'}" for a in sorted(rep.checked)))
        total.merge(rep)
    print("PASS" if total.passed else "FAIL")
    if cfg.out is not None and ("json" in cfg.formats or not total.passed):
        _write(cfg, f"verify_n{cfg.n}.json", json.dumps(per_level, indent=1, sort_keys=True) + "\n")
    if not total.passed:
        for axiom, wit in total.as_dict()["witnesses"].items():
            print(f"witness ({axiom}): {json.dumps(wit)}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_expand(cfg: RunConfig) -> int:
    from .qsym import NotSymmetric, QSymFunction, expand_in_schur

    sel = cfg.selector()
    if sel == "n":
        raise UsageError("expand needs --zeta or --u/--w/--k")
    chains = _target_chains(cfg)
    if not chains:
        print("empty interval")
        return EXIT_OK
    n = chains[0].n
    f = QSymFunction.from_descents(n, (c.descents for c in chains))
    e = expand_in_schur(f)
    print(f"chains={len(chains)}")
    print(f"K = {f}")
    print(f"K = {e}")
    status = EXIT_FAIL if isinstance(e, NotSymmetric) or not e.is_schur_positive() else EXIT_OK
    if cfg.oracle:
        if sel != "u/w/k":
            raise UsageError("--oracle needs --u/--w/--k")
        from .schubert import coeff_oracle
        from .tableaux import partitions

        u, w = _parse_perm(cfg.u), _parse_perm(cfg.w)
        oracle = {}
        for lam in partitions(inversion_length(w) - inversion_length(u)):
            c = coeff_oracle(u, lam, cfg.k).get(w, 0)
            if c:
                oracle[lam] = c
        chain_side = {} if isinstance(e, NotSymmetric) else e.as_dict()
        match = chain_side == oracle
        print("oracle: " + " ".join(f"c[{lam}]={c}" for lam, c in sorted(oracle.items(), reverse=True)))
        print("oracle " + ("match" if match else "MISMATCH"))
        if not match:
            status = EXIT_FAIL
    return status


def cmd_export(cfg: RunConfig) -> int:
    from .graphs import build_graph, connected_components, to_dot

    sel = cfg.selector()
    if sel == "n":
        if "json" in cfg.formats:
            from .census import CensusConfig, run_census

            _check_n(cfg.n, 3)
            text = run_census(CensusConfig(cfg.n, cfg.jobs)).to_json() + "\n"
            _emit(cfg, f"census_n{cfg.n}.json", text)
        if "text" in cfg.formats:
            _check_n(cfg.n)
            flats = canonical_flat_chains(cfg.n, cfg.jobs)
            _emit(cfg, f"chains_n{cfg.n}.txt", "".join(str(Chain.from_flat(f)) + "\n" for f in flats))
        if "dot" in cfg.formats:
            raise UsageError("dot export needs --zeta or --u/--w/--k")
        return EXIT_OK
    chains = _target_chains(cfg)
    g = build_graph(chains)
    stem = "graph"
    if "dot" in cfg.formats:
        _emit(cfg, f"{stem}.dot", to_dot(g))
    if "json" in cfg.formats:
        recs = {
            "chains": [chain_record(c) for c in (g.labels or [])],
            "edges": [{"u": v, "v": w, "color": i, "rule": str(g.tags.get((v, i), ""))}
                      for v, w, i in g.edges()],
            "components": [len(h) for h in connected_components(g)] if len(g) else [],
        }
        _emit(cfg, f"{stem}.json", json.dumps(recs, indent=1) + "\n")
    if "text" in cfg.formats:
        _emit(cfg, f"{stem}.txt", "".join(f"{c}  {''.join(map(str, c.labels))}  {c.descents}\n"
                                          for c in (g.labels or [])))
    return EXIT_OK


def _emit(cfg: RunConfig, name: str, text: str) -> None:
    if cfg.out is None:
        sys.stdout.write(text)
    else:
        _write(cfg, name, text)


COMMANDS = {
    "enumerate": cmd_enumerate,
    "graphs": cmd_graphs,
    "verify": cmd_verify,
    "expand": cmd_expand,
    "export": cmd_export,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gbdq", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="progress messages on stderr")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--n", type=int)
        s.add_argument("--zeta", help='permutation, e.g. "(1,4,5,3,2,6)"')
        s.add_argument("--u")
        s.add_argument("--w")
        s.add_argument("--k", type=int)
        s.add_argument("--jobs", type=int, default=None, help="worker processes (default: $GBDQ_JOBS or 1)")
        s.add_argument("--out", type=Path)
        s.add_argument("--format", action="append", choices=["text", "json", "dot"], dest="formats")
        if name == "expand":
            s.add_argument("--oracle", action="store_true", help="cross-check with Schubert polynomials")
        if name == "verify":
            s.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    return p


def config_from_args(args: argparse.Namespace) -> RunConfig:
    jobs = args.jobs if args.jobs is not None else default_jobs()
    return RunConfig(
        command=args.command, n=args.n, zeta=args.zeta, u=args.u, w=args.w, k=args.k,
        jobs=max(1, jobs), out=args.out, formats=args.formats or ["text"],
        oracle=getattr(args, "oracle", False), corrupt=getattr(args, "corrupt", False),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    cfg = config_from_args(args)
    try:
        if cfg.command in ("enumerate", "graphs", "verify"):
            if cfg.n is None:
                raise UsageError(f"{cfg.command} needs --n")
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"gbdq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"gbdq: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
