"""Colored graphs of involutions with descent data, and the dual equivalence axioms.

A graph stores its vertices by index.  ``phi[i][v]`` is the image of vertex v
under the involution of color i (``v`` itself when fixed) and ``descents[v]``
is a bit mask of the descent set.  Everything here works on that table, so the
same checks apply to chains, tableaux or any hand-built fixture.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Optional, Sequence

from .chains import Chain, DescentSet, reverse_chain
from .involutions import RuleTag, phi_flat
from .qsym import NotSymmetric, QSymFunction, expand_in_schur


class MixedLengths(ValueError):
    pass


class InconsistentPropagation(ValueError):
    pass


def mask_positions(mask: int) -> frozenset:
    return frozenset(p + 1 for p in range(mask.bit_length()) if mask >> p & 1)


@dataclass
class ColoredGraph:
    n: int
    descents: list
    phi: dict
    labels: Optional[list] = None
    tags: Optional[dict] = None  # (v, i) -> rule tag, when known

    def __post_init__(self):
        size = len(self.descents)
        for i, table in self.phi.items():
            if not 2 <= i <= self.n - 1:
                raise ValueError(f"color {i} outside [2,{self.n - 1}]")
            if len(table) != size:
                raise ValueError(f"table for color {i} has wrong size")

    def __len__(self) -> int:
        return len(self.descents)

    @property
    def colors(self) -> list:
        return sorted(self.phi)

    def descent_set(self, v: int) -> DescentSet:
        return DescentSet(self.n, mask_positions(self.descents[v]))

    def fixed(self, v: int, i: int) -> bool:
        table = self.phi.get(i)
        return table is None or table[v] == v

    def edges(self) -> list[tuple[int, int, int]]:
        out = []
        for i in self.colors:
            for v, w in enumerate(self.phi[i]):
                if v < w:
                    out.append((v, w, i))
        return out

    def neighbours(self, v: int) -> Iterable[int]:
        for i in self.colors:
            w = self.phi[i][v]
            if w != v:
                yield w

    def vertex(self, v: int):
        return self.labels[v] if self.labels is not None else v

    def subgraph(self, vertices: Sequence[int]) -> "ColoredGraph":
        index = {v: k for k, v in enumerate(vertices)}
        phi = {i: [index[t[v]] for v in vertices] for i, t in self.phi.items()}
        labels = [self.labels[v] for v in vertices] if self.labels is not None else list(vertices)
        tags = None
        if self.tags is not None:
            tags = {(index[v], i): tag for (v, i), tag in self.tags.items() if v in index}
        return ColoredGraph(self.n, [self.descents[v] for v in vertices], phi, labels, tags)


def graph_from_objects(
    seeds: Iterable[Hashable],
    n: int,
    descent_mask: Callable[[Hashable], int],
    involution: Callable[[Hashable, int], Hashable],
    sort_key: Optional[Callable] = None,
) -> ColoredGraph:
    """Close ``seeds`` under the involutions and tabulate the result."""
    seen = set(seeds)
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for i in range(2, n):
            y = involution(x, i)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    objs = sorted(seen, key=sort_key)
    index = {x: k for k, x in enumerate(objs)}
    phi = {i: [index[involution(x, i)] for x in objs] for i in range(2, n)}
    return ColoredGraph(n, [descent_mask(x) for x in objs], phi, objs)


def build_graph(chains: Iterable[Chain]) -> ColoredGraph:
    """Graph of the involutions on a chain set, closed under every phi_i."""
    chains = list(chains)
    lengths = {c.n for c in chains}
    if len(lengths) > 1:
        raise MixedLengths(f"chains of lengths {sorted(lengths)}")
    if not chains:
        return ColoredGraph(0, [], {}, [])
    n = lengths.pop()
    flats = {c.flat for c in chains}
    tags: dict = {}

    def inv(flat, i):
        return phi_flat(flat, i)[0]

    g = graph_from_objects(flats, n, lambda f: Chain.from_flat(f).descents.mask, inv,
                           sort_key=lambda f: (f[1::2], f))
    for v, flat in enumerate(g.labels):
        for i in range(2, n):
            _, tag = phi_flat(flat, i)
            if tag is not RuleTag.FIXED:
                tags[(v, i)] = tag
    g.labels = [Chain.from_flat(f) for f in g.labels]
    g.tags = tags
    return g


def connected_components(g: ColoredGraph) -> list[ColoredGraph]:
    return [g.subgraph(comp) for comp in component_vertices(g)]


def component_vertices(g: ColoredGraph, colors: Optional[Iterable[int]] = None) -> list[list[int]]:
    """Vertex lists of the components (restricted to ``colors``), ordered by least vertex."""
    colors = g.colors if colors is None else [i for i in colors if i in g.phi]
    tables = [g.phi[i] for i in colors]
    comp = [-1] * len(g)
    out = []
    for s in range(len(g)):
        if comp[s] >= 0:
            continue
        comp[s] = len(out)
        members = [s]
        k = 0
        while k < len(members):
            v = members[k]
            k += 1
            for t in tables:
                w = t[v]
                if comp[w] < 0:
                    comp[w] = len(out)
                    members.append(w)
        members.sort()
        out.append(members)
    return out


# isomorphism -------------------------------------------------------------


@dataclass(frozen=True, order=True)
class GraphCertificate:
    data: tuple

    def hex(self) -> str:
        return b"".join(x.to_bytes(4, "big") for x in self.data).hex()

    @classmethod
    def from_hex(cls, text: str) -> "GraphCertificate":
        raw = bytes.fromhex(text)
        return cls(tuple(int.from_bytes(raw[k:k + 4], "big") for k in range(0, len(raw), 4)))


def _vertex_signature(g: ColoredGraph, v: int, colors: list) -> tuple:
    return (g.descents[v],) + tuple(int(g.phi[i][v] == v) for i in colors)


def _encode_from(g: ColoredGraph, start: int, colors: list, tables: list) -> tuple:
    order = [start]
    ids = {start: 0}
    k = 0
    while k < len(order):
        v = order[k]
        k += 1
        for t in tables:
            w = t[v]
            if w not in ids:
                ids[w] = len(order)
                order.append(w)
    code = [g.n, len(order)] + colors
    for v in order:
        code.append(g.descents[v])
        code.extend(ids[t[v]] for t in tables)
    return tuple(code)


def certificate(g: ColoredGraph) -> GraphCertificate:
    """Canonical form of a connected graph up to color- and descent-preserving isomorphism.

    Every vertex has at most one edge of each color, so a breadth-first search
    visiting colors in a fixed order numbers the vertices canonically once the
    start is chosen; the certificate is the least encoding over all starts.
    """
    colors = g.colors
    tables = [g.phi[i] for i in colors]
    if not len(g):
        return GraphCertificate((g.n, 0))
    if len(component_vertices(g)) > 1:
        parts = sorted(certificate(h).data for h in connected_components(g))
        return GraphCertificate(tuple(x for p in parts for x in (len(p),) + p))
    sigs = [_vertex_signature(g, v, colors) for v in range(len(g))]
    best_sig = min(sigs)
    best = None
    for v in range(len(g)):
        if sigs[v] == best_sig:
            code = _encode_from(g, v, colors, tables)
            if best is None or code < best:
                best = code
    return GraphCertificate(best)


def omega_graph(g: ColoredGraph) -> ColoredGraph:
    full = (1 << (g.n - 1)) - 1
    return ColoredGraph(g.n, [full ^ m for m in g.descents], dict(g.phi), g.labels, g.tags)


def _rho_mask(mask: int, n: int) -> int:
    return sum(1 << (n - p - 1) for p in mask_positions(mask))


def rho_graph(g: ColoredGraph) -> ColoredGraph:
    """Reverse descents (j -> n-j) and recolor i -> n+1-i."""
    phi = {g.n + 1 - i: t for i, t in g.phi.items()}
    return ColoredGraph(g.n, [_rho_mask(m, g.n) for m in g.descents], phi, g.labels)


def omega_rho_orbit(g: ColoredGraph) -> frozenset:
    w = omega_graph(g)
    return frozenset(certificate(h) for h in (g, w, rho_graph(g), rho_graph(w)))


def generating_function(g: ColoredGraph) -> QSymFunction:
    return QSymFunction.from_descents(g.n, g.descents)


# axioms ------------------------------------------------------------------

AXIOMS = ("involution", "i", "ii.a", "ii.b", "ii.c", "ii.d", "iii", "iv", "iv.a", "iv.b", "iv.c")


@dataclass
class AxiomReport:
    checked: set = field(default_factory=set)
    failures: dict = field(default_factory=dict)  # axiom -> first witness

    def record(self, axiom: str, ok: bool, witness=None) -> bool:
        self.checked.add(axiom)
        if not ok and axiom not in self.failures:
            self.failures[axiom] = witness
        return ok

    def touch(self, *axioms: str) -> None:
        self.checked.update(axioms)

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        self.checked |= other.checked
        for k, w in other.failures.items():
            self.failures.setdefault(k, w)
        return self

    @property
    def passed(self) -> bool:
        return not self.failures

    def status(self, axiom: str) -> Optional[bool]:
        if axiom in self.failures:
            return False
        return True if axiom in self.checked else None

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "axioms": {a: self.status(a) for a in AXIOMS if self.status(a) is not None},
            "witnesses": {a: _jsonable(w) for a, w in self.failures.items()},
        }


def _jsonable(w):
    if isinstance(w, dict):
        return {k: _jsonable(v) for k, v in w.items()}
    if isinstance(w, (list, tuple)):
        return [_jsonable(x) for x in w]
    if isinstance(w, (int, float, str, bool)) or w is None:
        return w
    return str(w)


def _as_graph(obj) -> ColoredGraph:
    return obj if isinstance(obj, ColoredGraph) else build_graph(obj)


def check_axioms_i_iii(obj) -> AxiomReport:
    """Involution property, (i), (ii.a)-(ii.d) and (iii)."""
    g = _as_graph(obj)
    n = g.n
    rep = AxiomReport()
    rep.touch("involution", "i")
    colors = [i for i in range(2, n) if i in g.phi]
    if colors:
        rep.touch("ii.a", "ii.b", "ii.c", "ii.d")
    if any(abs(i - j) >= 3 for i in colors for j in colors):
        rep.touch("iii")
    D = g.descents
    for i in colors:
        t = g.phi[i]
        lo, hi = 1 << (i - 2), 1 << (i - 1)
        outside = ~sum(1 << (p - 1) for p in range(max(1, i - 2), min(n - 1, i + 1) + 1))
        for v in range(len(g)):
            w = t[v]
            wit = {"vertex": g.vertex(v), "i": i}
            rep.record("involution", t[w] == v, wit)
            both_or_neither = bool(D[v] & lo) == bool(D[v] & hi)
            rep.record("i", (w == v) == both_or_neither, wit)
            if w == v:
                continue
            rep.record("ii.a", (D[v] & outside) == (D[w] & outside), wit)
            rep.record("ii.b", bool((D[v] ^ D[w]) & lo) and bool((D[v] ^ D[w]) & hi), wit)
            if i >= 3 and (D[v] ^ D[w]) >> (i - 3) & 1:
                rep.record("ii.c", not g.fixed(v, i - 1), wit)
            if i + 1 <= n - 1 and (D[v] ^ D[w]) >> i & 1:
                rep.record("ii.d", not g.fixed(v, i + 1), wit)
    for i in colors:
        for j in colors:
            if j - i >= 3:
                ti, tj = g.phi[i], g.phi[j]
                for v in range(len(g)):
                    rep.record("iii", ti[tj[v]] == tj[ti[v]], {"vertex": g.vertex(v), "i": i, "j": j})
    return rep


def restricted_mask(mask: int, i: int, j: int) -> int:
    """Descents in [i-1, j], shifted down by i-2."""
    return (mask >> (i - 2)) & ((1 << (j - i + 2)) - 1)


def restricted_function(g: ColoredGraph, members: Iterable[int], i: int, j: int) -> QSymFunction:
    return QSymFunction.from_descents(j - i + 3, (restricted_mask(g.descents[v], i, j) for v in members))


def _schur_positive(f: QSymFunction, cache: dict) -> bool:
    key = f
    if key not in cache:
        e = expand_in_schur(f)
        cache[key] = not isinstance(e, NotSymmetric) and e.is_schur_positive()
    return cache[key]


def check_iv_a(obj, cache: Optional[dict] = None) -> AxiomReport:
    g = _as_graph(obj)
    rep = AxiomReport()
    rep.touch("iv.a")
    cache = {} if cache is None else cache
    for i in range(2, g.n):
        for j in range(i + 1, min(i + 2, g.n - 1) + 1):
            for members in component_vertices(g, range(i, j + 1)):
                f = restricted_function(g, members, i, j)
                rep.record("iv.a", _schur_positive(f, cache),
                           {"vertex": g.vertex(members[0]), "i": i, "j": j, "function": str(f)})
    if g.n == 3:  # no window i < j fits, so check each class itself
        for members in component_vertices(g):
            f = QSymFunction.from_descents(3, (g.descents[v] for v in members))
            rep.record("iv.a", _schur_positive(f, cache), {"vertex": g.vertex(members[0])})
    return rep


def check_iv_b(obj) -> AxiomReport:
    g = _as_graph(obj)
    rep = AxiomReport()
    rep.touch("iv.b")
    low_cls = {}
    high_cls = {}
    for i in range(3, g.n - 1):
        low = {}
        for members in component_vertices(g, (i - 1, i)):
            f = restricted_function(g, members, i - 1, i)
            for v in members:
                low[v] = f
        high = {}
        for members in component_vertices(g, (i, i + 1)):
            f = restricted_function(g, members, i, i + 1)
            for v in members:
                high[v] = f
        low_cls[i], high_cls[i] = low, high
        t = g.phi[i]
        for v in range(len(g)):
            w = t[v]
            if w == v:
                continue
            if any(g.fixed(x, k) for x in (v, w) for k in (i - 1, i + 1)):
                continue
            rep.record("iv.b", low[v] == high[v],
                       {"vertex": g.vertex(v), "i": i, "low": str(low[v]), "high": str(high[v])})
    return rep


@dataclass(frozen=True)
class FlatChain:
    vertices: tuple
    i: int

    @property
    def r(self) -> int:
        return len(self.vertices) // 2


def _flat_paths(g: ColoredGraph, i: int) -> list[tuple]:
    """Right-maximal flat i-chains starting at every admissible vertex."""
    if not all(k in g.phi for k in (i - 2, i - 1, i)):
        return []
    p2, p1, p0 = g.phi[i - 2], g.phi[i - 1], g.phi[i]

    def ok(x):
        return p2[x] != x and p0[x] != x

    paths = []

    def extend(path: list):
        last = path[-1]
        grown = False
        x = p2[last]
        seen = set()
        while x not in seen:
            seen.add(x)
            y = p0[x]
            if ok(x) and p1[x] == x and ok(y) and x not in path and y not in path and x != y:
                path.extend((x, y))
                extend(path)
                path.pop()
                path.pop()
                grown = True
            x = p2[p1[x]]
        if not grown:
            paths.append(tuple(path))

    for c1 in range(len(g)):
        c2 = p0[c1]
        if ok(c1) and ok(c2):
            extend([c1, c2])
    return paths


def enumerate_flat_chains(obj, i: int) -> list[FlatChain]:
    """All maximal flat i-chains (not extendable at either end)."""
    g = _as_graph(obj)
    paths = _flat_paths(g, i)
    inner = set()
    for p in paths:
        for k in range(2, len(p), 2):
            inner.add(p[k:])
    out = sorted(p for p in set(paths) if p not in inner)
    return [FlatChain(tuple(g.vertex(v) for v in p), i) for p in out]


def _iv_c_on(g: ColoredGraph, rep: AxiomReport, mirrored: bool) -> None:
    for i in range(4, g.n - 1):
        for path in _flat_paths(g, i):
            r = len(path) // 2
            if r < 3:
                continue
            free = [not g.fixed(v, i + 1) for v in path]
            for j in range(2, r):
                if free[2 * j - 2] and free[2 * j - 1]:
                    ok = all(free[:2 * j]) or all(free[2 * j - 2:])
                    rep.record("iv.c", ok, {"path": [g.vertex(v) for v in path], "i": i, "j": j,
                                            "mirrored": mirrored})


def check_iv_c(obj) -> AxiomReport:
    """(iv.c) on the graph and on its reversal (colors i -> n+1-i)."""
    g = _as_graph(obj)
    rep = AxiomReport()
    rep.touch("iv.c")
    _iv_c_on(g, rep, False)
    _iv_c_on(rho_graph(g), rep, True)
    return rep


def _closure(g: ColoredGraph, starts: Iterable[int], tables: list) -> set:
    seen = set(starts)
    stack = list(seen)
    while stack:
        v = stack.pop()
        for t in tables:
            w = t[v]
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def check_strong_iv(obj) -> AxiomReport:
    """Strong axiom (iv): within colors [i, j], j <= i+3, color j is needed at most once."""
    g = _as_graph(obj)
    rep = AxiomReport()
    rep.touch("iv")
    for i in range(2, g.n):
        for j in range(i + 1, min(i + 3, g.n - 1) + 1):
            lower = [g.phi[k] for k in range(i, j)]
            top = g.phi[j]
            for members in component_vertices(g, range(i, j + 1)):
                for c in members:
                    once = _closure(g, [c], lower)
                    once = _closure(g, once | {top[x] for x in once}, lower)
                    rep.record("iv", once == set(members), {"vertex": g.vertex(c), "i": i, "j": j})
    return rep


def check_all(obj, cache: Optional[dict] = None) -> AxiomReport:
    g = _as_graph(obj)
    rep = check_axioms_i_iii(g)
    rep.merge(check_iv_a(g, cache))
    rep.merge(check_iv_b(g))
    rep.merge(check_iv_c(g))
    return rep


def reverse_graph_of_chains(chains: Iterable[Chain]) -> ColoredGraph:
    return build_graph(reverse_chain(c) for c in chains)


# descent reconstruction --------------------------------------------------


def _fill_from(g: ColoredGraph, v: int, pos: int, value: bool) -> int:
    """Complete the descent mask of v from one known position using (i)."""
    n = g.n
    known = {pos: value}
    for j in range(pos + 1, n):
        known[j] = known[j - 1] == g.fixed(v, j)
    for j in range(pos, 1, -1):
        known[j - 1] = known[j] == g.fixed(v, j)
    return sum(1 << (p - 1) for p, b in known.items() if b)


def reconstruct_descents(g: ColoredGraph, seed: int = 0) -> tuple[list, list]:
    """Recover descent masks of a connected graph from its edges, up to complementation."""
    n = g.n
    if n < 2:
        return [0] * len(g), [0] * len(g)
    masks: list = [None] * len(g)
    masks[seed] = _fill_from(g, seed, 1, True)
    queue = deque([seed])
    while queue:
        v = queue.popleft()
        for i in g.colors:
            w = g.phi[i][v]
            if w == v:
                continue
            guess = _fill_from(g, w, i - 1, not (masks[v] >> (i - 2) & 1))
            if masks[w] is None:
                masks[w] = guess
                queue.append(w)
            elif masks[w] != guess:
                raise InconsistentPropagation(f"vertex {g.vertex(w)} gets {masks[w]} and {guess}")
    if any(m is None for m in masks):
        raise ValueError("graph is not connected")
    full = (1 << (n - 1)) - 1
    return masks, [full ^ m for m in masks]


# export ------------------------------------------------------------------


def to_dot(g: ColoredGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(len(g)):
        label = f"{g.vertex(v)}\\n{g.descent_set(v)}"
        lines.append(f'  v{v} [label="{label}"];')
    for v, w, i in g.edges():
        tag = g.tags.get((v, i)) if g.tags else None
        text = f"{i}" if tag is None else f"{i} ({tag})"
        rule = "" if tag is None else f' rule="{tag}"'
        lines.append(f'  v{v} -- v{w} [label="{text}" color_i="{i}"{rule}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def tableau_graph(lam) -> ColoredGraph:
    """Haiman's involutions on standard tableaux of shape ``lam``."""
    from .tableaux import enumerate_syt, haiman_phi, syt_descents

    tabs = enumerate_syt(lam)
    n = lam.size
    return graph_from_objects(tabs, n, lambda t: syt_descents(t).mask, haiman_phi,
                              sort_key=lambda t: t.reading_word())
