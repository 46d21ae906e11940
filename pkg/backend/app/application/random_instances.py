"""
Seeded random matroidal instances for the property suite and the search harness.

Every draw is normalized (variables outside the support dropped, gcd
divided out); draws that collapse to a principal ideal are resampled.
"""

import logging
import random
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple

import networkx as nx

from app.api.schemas.instance_schemas import MatroidSpec, RANDOM_FAMILIES
from app.core.config import settings
from app.core.exceptions import InputError, ResourceLimitError
from app.domain.ideals import MonomialIdeal
from app.domain.matroids import (
    graphic_ideal,
    normalize,
    transversal_ideal,
    uniform_ideal,
    veronese_type,
)
from app.domain.monomials import PrimeSupport

logger = logging.getLogger("polystab.service.random")


@dataclass(frozen=True)
class RandomDraw:
    ideal: MonomialIdeal
    spec: MatroidSpec  # concrete parameters of the accepted draw
    kept_variables: Tuple[int, ...]  # ambient indices of the raw draw, 0-based
    attempts: int


def _draw_graphic(spec: MatroidSpec, rng: random.Random) -> MatroidSpec:
    v = spec.vertices or rng.randint(3, 5)
    pairs = list(combinations(range(1, v + 1), 2))
    top = min(len(pairs), settings.RANDOM_MAX_VARIABLES)
    if spec.edge_count is not None:
        if spec.edge_count > len(pairs):
            raise InputError(f"{spec.edge_count} edges do not fit a simple graph on {v} vertices")
        e = spec.edge_count
    else:
        e = rng.randint(min(v, top), top)
    edges = sorted(rng.sample(pairs, e))
    return spec.model_copy(update={"vertices": v, "edges": edges, "edge_count": e})


def _draw_transversal(spec: MatroidSpec, rng: random.Random) -> MatroidSpec:
    blocks = spec.blocks or [rng.randint(1, 3) for _ in range(rng.randint(2, 3))]
    sets, start = [], 1
    for size in blocks:
        sets.append(list(range(start, start + size)))
        start += size
    return spec.model_copy(update={"blocks": list(blocks), "sets": sets, "n": start - 1})


def _draw_veronese(spec: MatroidSpec, rng: random.Random) -> MatroidSpec:
    n = spec.n or rng.randint(3, 6)
    d = spec.d or rng.randint(2, max(2, n - 1))
    return spec.model_copy(update={"n": n, "d": d, "caps": [1] * n})


_DRAWS = {
    "graphic": _draw_graphic,
    "transversal": _draw_transversal,
    "veronese": _draw_veronese,
}


def build_from_spec(spec: MatroidSpec, max_edges: Optional[int] = None) -> MonomialIdeal:
    """Construct the ideal of a fully specified (non-random) MatroidSpec."""
    if spec.family == "explicit":
        return MonomialIdeal.from_exponents(spec.generators, spec.n)
    if spec.family == "uniform":
        return uniform_ideal(spec.n, spec.d)
    if spec.family == "veronese":
        return veronese_type(len(spec.caps), spec.d, spec.caps)
    if spec.family == "graphic":
        return graphic_ideal(spec.vertices, spec.edges, max_edges or settings.GRAPHIC_MAX_EDGES)
    n = spec.n or max(max(s) for s in spec.sets)
    return transversal_ideal([PrimeSupport.from_labels(s) for s in spec.sets], n)


def random_instance(
    spec: MatroidSpec,
    max_retries: Optional[int] = None,
    max_variables: Optional[int] = None,
    max_generators: Optional[int] = None,
) -> RandomDraw:
    """Deterministic for a fixed seed; the result is matroidal with gcd 1 and full support."""
    if spec.family not in RANDOM_FAMILIES:
        raise InputError(f"no random draws for family '{spec.family}'")
    retries = max_retries or settings.RANDOM_MAX_RETRIES
    max_variables = max_variables or settings.RANDOM_MAX_VARIABLES
    max_generators = max_generators or settings.RANDOM_MAX_GENERATORS

    rng = random.Random(spec.seed)
    for attempt in range(1, retries + 1):
        concrete = _DRAWS[spec.family](spec, rng)
        raw = build_from_spec(concrete)
        if raw.is_zero:
            continue
        ideal, kept = normalize(raw)
        if ideal.size < 2 or ideal.n > max_variables or ideal.size > max_generators:
            logger.debug("Rejected %s draw %d: n=%d, %d generators", spec.family, attempt, ideal.n, ideal.size)
            continue
        return RandomDraw(ideal, concrete, kept, attempt)
    raise ResourceLimitError("random draw retry", retries)


def kept_graph(draw: RandomDraw) -> nx.Graph:
    """Graph on the edges that survive normalization, isolated vertices dropped."""
    if draw.spec.family != "graphic":
        raise InputError("only graphic draws carry a graph")
    G = nx.Graph()
    G.add_edges_from(tuple(draw.spec.edges[i]) for i in draw.kept_variables)
    return G


def seeds(master: int, count: int) -> List[int]:
    """Per-trial seeds derived from one master seed."""
    rng = random.Random(master)
    return [rng.randrange(2**31) for _ in range(count)]
