#!/usr/bin/env python3
"""
Linkage closures and truncated blocks

s3_closure explores the symmetrized linking relation mu -> nu
([Z(nu) : V(mu)] > 0) breadth first from a seed weight. Downward links come
from the composition multiplicities of Z(nu); upward links are found by
scanning the Verma modules of the candidates theta0 * nu with |theta0| <= D.
Within a round the per-weight computations run on a thread pool; the
explored set is merged in frontier order so reports are deterministic.
"""

import itertools
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .errors import UnsupportedParameterError
from .verma import CharacterCache, composition_multiplicities
from .weights import RootVector, Weight, WeightModel
from .zoo import AlgebraSpec

logger = logging.getLogger(__name__)

THREADS_ENV = "RTA_THREADS"


def thread_count(requested: Optional[int] = None) -> int:
    """Worker count: explicit request, else RTA_THREADS, else 1"""
    if requested is not None:
        return max(1, int(requested))
    value = os.environ.get(THREADS_ENV)
    if value:
        try:
            return max(1, int(value))
        except ValueError:
            raise UnsupportedParameterError(f"{THREADS_ENV} must be an integer, got '{value}'")
    return 1


@dataclass
class SSetReport:
    algebra: str
    seed: Weight
    depth: int
    rounds: int
    members: List[Weight] = dc_field(default_factory=list)
    edges: List[Tuple[Weight, Weight]] = dc_field(default_factory=list)
    truncated: bool = False
    growth: List[int] = dc_field(default_factory=list)

    @property
    def status(self) -> str:
        if self.truncated:
            return "still growing"
        return f"closed under linking within horizon (depth {self.depth}, rounds {self.rounds})"

    def contains(self, weight: Weight) -> bool:
        return weight in self.members

    def to_dict(self) -> Dict:
        return {
            "seed": str(self.seed),
            "horizon": {"depth": self.depth, "rounds": self.rounds},
            "members": [str(w) for w in self.members],
            "edges": [[str(a), str(b)] for a, b in self.edges],
            "truncated": self.truncated,
            "growth": list(self.growth),
        }


def upward_thetas(model: WeightModel, depth: int) -> List[RootVector]:
    """theta0 >= 0 with 1 <= |theta0| <= depth, by height then lexicographically"""
    thetas = []
    for values in itertools.product(range(depth + 1), repeat=model.root_rank):
        theta = RootVector(tuple(values))
        if 1 <= theta.height() <= depth:
            thetas.append(theta)
    return sorted(thetas, key=lambda t: (t.height(), t.coefficients))


def _links(spec: AlgebraSpec, nu: Weight, depth: int, margin: int, cache: CharacterCache) -> List[Tuple[Weight, Weight]]:
    """Edges (mu, kappa) touching nu: V(mu) in Z(nu) and V(nu) in Z(kappa)"""
    edges = []
    down = composition_multiplicities(spec, nu, depth, margin, cache)
    for mu in down.linked():
        if mu != nu:
            edges.append((mu, nu))
    for theta in upward_thetas(spec.model, depth - margin):
        kappa = spec.model.act(theta, nu)
        up = composition_multiplicities(spec, kappa, theta.height(), 0, cache)
        if up.multiplicities.get(nu, 0) > 0:
            edges.append((nu, kappa))
    return edges


def s3_closure(spec: AlgebraSpec, lam: Weight, depth: int, rounds: int, threads: Optional[int] = None,
               margin: int = 0, cache: Optional[CharacterCache] = None) -> SSetReport:
    """Truncated equivalence closure of {lambda} under linking"""
    if depth < 2:
        raise UnsupportedParameterError(f"closure depth must be at least 2, got {depth}")
    if rounds < 1:
        raise UnsupportedParameterError(f"closure needs at least one round, got {rounds}")
    spec.model.check(lam)
    cache = CharacterCache() if cache is None else cache
    report = SSetReport(spec.name, lam, depth, rounds, members=[lam])
    explored: Set[Weight] = {lam}
    seen_edges = set()
    frontier = [lam]
    workers = thread_count(threads)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        for number in range(rounds):
            if not frontier:
                break
            results = list(executor.map(lambda nu: _links(spec, nu, depth, margin, cache), frontier))
            added = []
            for edges in results:
                for edge in edges:
                    if edge not in seen_edges:
                        seen_edges.add(edge)
                        report.edges.append(edge)
                    for weight in edge:
                        if weight not in explored:
                            explored.add(weight)
                            report.members.append(weight)
                            added.append(weight)
            report.growth.append(len(report.members))
            logger.info("%s: closure of %s round %d, %d members", spec.name, lam, number + 1, len(report.members))
            frontier = added
    report.truncated = bool(frontier)
    if report.truncated:
        logger.warning("%s: closure of %s still growing after %d rounds", spec.name, lam, rounds)
    return report


def s_sets(report: SSetReport) -> Tuple[List[Weight], List[Weight]]:
    """(S1, S2): projections of the explored members below lambda, and of all members"""
    model = report.seed.model
    s1, s2 = [], []
    for mu in report.members:
        image = model.project(mu)
        if image not in s2:
            s2.append(image)
        if model.leq(mu, report.seed) is not None and image not in s1:
            s1.append(image)
    return s1, s2


# ----------------------------------------------------------------------
# blocks

@dataclass
class BlockPartition:
    cells: List[List[Weight]]
    truncated_cells: List[int] = dc_field(default_factory=list)
    reports: Dict[Weight, SSetReport] = dc_field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {
            "cells": [[str(w) for w in cell] for cell in self.cells],
            "truncated": list(self.truncated_cells),
        }


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def block_partition(spec: AlgebraSpec, weights: Sequence[Weight], depth: int, rounds: int,
                    threads: Optional[int] = None, margin: int = 0) -> BlockPartition:
    """Cells of a weight list under membership in each other's closures"""
    unique = []
    for w in weights:
        if w not in unique:
            unique.append(w)
    cache = CharacterCache()
    reports = {w: s3_closure(spec, w, depth, rounds, threads, margin, cache) for w in unique}
    groups = _UnionFind(len(unique))
    for a, b in itertools.combinations(range(len(unique)), 2):
        if reports[unique[a]].contains(unique[b]) or reports[unique[b]].contains(unique[a]):
            groups.union(a, b)
    cells: Dict[int, List[Weight]] = {}
    for i, w in enumerate(unique):
        cells.setdefault(groups.find(i), []).append(w)
    partition = BlockPartition([cells[root] for root in sorted(cells)], reports=reports)
    for k, cell in enumerate(partition.cells):
        if any(reports[w].truncated for w in cell):
            partition.truncated_cells.append(k)
    logger.info("%s: %d weights in %d cells", spec.name, len(unique), len(partition.cells))
    return partition
