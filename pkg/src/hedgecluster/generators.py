"""Seeded instance families.

The same ``InstanceFamily`` always yields the same graph.  Every family checks
the structural property it promises before returning.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass

from .core import HedgeGraph, build, enumerate_triples
from .cover import SimpleGraph
from .errors import InputError, InvariantViolation
from .reductions import embed_host, vc_to_hcd
from .structure import build_intersection_graph, is_acyclic

FAMILIES = ("deltap3", "random", "bihedge", "acyclic", "hosted", "bipartite")


@dataclass(frozen=True)
class InstanceFamily:
    """Family name, seed and size knobs.

    ``n`` counts vertices (``deltap3``/``hosted``: vertices of the cover graph;
    ``bipartite``: the large side), ``ell`` bounds the number of hedges,
    ``density`` is an edge probability.  ``variant`` selects the acyclic
    sub-family (``blocks`` or ``clique``), chosen by the seed when unset.
    """

    family: str
    seed: int = 0
    n: int = 6
    ell: int = 6
    density: float = 0.5
    host: str = "path"
    host_size: int = 0
    variant: str | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.n < 1 or self.ell < 1:
            raise InputError("n and ell must be positive")
        if not 0.0 <= self.density <= 1.0:
            raise InputError("density must lie in [0, 1]")
        if self.variant not in (None, "blocks", "clique"):
            raise InputError(f"unknown variant {self.variant!r}")


def _gnp(rng: random.Random, n: int, p: float) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]


def _deltap3(rng, spec):
    edges = _gnp(rng, spec.n, spec.density)
    if not edges and spec.n >= 2:
        edges = [(0, 1)]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        H, _ = vc_to_hcd(SimpleGraph.from_edges(spec.n, edges))
    return H


def _random(rng, spec):
    edges = _gnp(rng, spec.n, spec.density)
    return build(spec.n, [(u, v, f"h{rng.randrange(spec.ell) + 1}") for u, v in edges])


def _bihedge(rng, spec):
    labeled = []
    for t in range(max(1, spec.n // 3)):
        a, b, c = 3 * t, 3 * t + 1, 3 * t + 2
        x, y = (f"h{rng.randrange(spec.ell) + 1}" for _ in range(2))
        if rng.random() < 0.5:
            labeled += [(a, b, x), (b, c, y)]
        else:
            labeled += [(a, b, x), (a, c, rng.choice((x, y))), (b, c, rng.choice((x, y)))]
    return build(3 * max(1, spec.n // 3), labeled)


def _acyclic_blocks(rng, spec):
    # small blocks with at most two hedges each, joined into a tree by bridges;
    # a bridge sits at vertices touching a single block hedge, one bridge per vertex
    labeled: list[tuple[int, int, str]] = []
    names = iter(range(1, 10**6))
    base = 0
    ports: list[list[int]] = []
    budget = spec.ell
    while budget > 0:
        shape = rng.choice(("triangle", "path", "square", "k4"))
        size = {"triangle": 3, "path": 3, "square": 4, "k4": 4}[shape]
        vs = list(range(base, base + size))
        if shape == "triangle":
            pairs = [(vs[0], vs[1]), (vs[0], vs[2]), (vs[1], vs[2])]
        elif shape == "path":
            pairs = [(vs[0], vs[1]), (vs[1], vs[2])]
        elif shape == "square":
            pairs = [(vs[0], vs[1]), (vs[1], vs[2]), (vs[2], vs[3]), (vs[0], vs[3])]
        else:
            pairs = [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]]
        two = budget >= 2 and rng.random() < 0.7
        hs = [f"h{next(names)}" for _ in range(2 if two else 1)]
        incident: dict[int, set[str]] = {v: set() for v in vs}
        for u, v in pairs:
            h = rng.choice(hs)
            labeled.append((u, v, h))
            incident[u].add(h)
            incident[v].add(h)
        budget -= len({h for _, _, h in labeled[-len(pairs):]})
        ports.append([v for v in vs if len(incident[v]) == 1])
        base += size
    used: set[int] = set()
    for j in range(1, len(ports)):
        if budget <= 0:
            break
        free_here = [v for v in ports[j] if v not in used]
        earlier = [v for i in range(j) for v in ports[i] if v not in used]
        if not free_here or not earlier:
            continue
        u, w = rng.choice(earlier), rng.choice(free_here)
        used.update((u, w))
        labeled.append((min(u, w), max(u, w), f"h{next(names)}"))
        budget -= 1
    return build(base, labeled)


def _acyclic_clique(rng, spec):
    # clique minus some edges, plus a matching whose edges carry their own hedges
    s = max(3, min(spec.n, 2 * (spec.ell - 1)))
    t_max = min(s // 2, spec.ell - 1)
    t = rng.randint(1, t_max) if t_max >= 1 else 0
    matching = {(2 * i, 2 * i + 1) for i in range(t)}
    labeled = []
    for u in range(s):
        for v in range(u + 1, s):
            if (u, v) in matching:
                labeled.append((u, v, f"m{u // 2 + 1}"))
            elif rng.random() < max(spec.density, 0.5):
                labeled.append((u, v, "c"))
    return build(s, labeled)


def _acyclic(rng, spec):
    variant = spec.variant or rng.choice(("blocks", "clique"))
    H = _acyclic_blocks(rng, spec) if variant == "blocks" else _acyclic_clique(rng, spec)
    if not is_acyclic(build_intersection_graph(H)):
        raise InvariantViolation("acyclic generator produced a cyclic hedge intersection graph")
    return H


def _hosted(rng, spec):
    core = _deltap3(rng, spec)
    comps = core.n // 3
    size = spec.host_size or 3 * (comps + 1 + rng.randrange(2))
    return embed_host(core, spec.host, size)


def _bipartite(rng, spec):
    # K_{s,t} with s <= 2: every connected triple uses a small-side vertex
    s = rng.choice((1, 2))
    labeled = [(u, s + v, f"h{rng.randrange(spec.ell) + 1}") for u in range(s) for v in range(spec.n)]
    return build(s + spec.n, labeled)


_BUILDERS = {
    "deltap3": _deltap3,
    "random": _random,
    "bihedge": _bihedge,
    "acyclic": _acyclic,
    "hosted": _hosted,
    "bipartite": _bipartite,
}


def generate(spec: InstanceFamily) -> HedgeGraph:
    rng = random.Random(f"{spec.family}:{spec.seed}")
    H = _BUILDERS[spec.family](rng, spec)
    if spec.family == "bihedge" and any(t.multiplicity == 3 for t in enumerate_triples(H).k3s):
        raise InvariantViolation("bi-hedge generator produced a three-hedge triangle")
    return H
