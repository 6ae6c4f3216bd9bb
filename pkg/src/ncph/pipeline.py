"""Run configuration and the lazily built artifact bundle.

A RunConfig identifies a computation completely; two runs with equal
configs produce byte-identical outputs.  The bundle builds each artifact on
first use, and the generated group and root data can be cached on disk
under a content hash of the config.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Optional

from . import serialize
from .arrangement import (DEFAULT_DENOMINATOR_BOUND, GenericVector, chambers,
                          bounded_slice, enumerate_rays, generic_vector,
                          ray_separation_bound)
from .complexes import (DEFAULT_SIMPLEX_BUDGET, NcpLattice, SimplicialComplex,
                        betti_numbers, build_ncp, build_root_complex,
                        facet_boundary_cycles, order_complex)
from .coxeter import (DEFAULT_GROUP_CAP, CoxeterDiagram, CoxeterSystem)
from .embed import EmbeddingReport, VertexComplex, embedding_report, vertex_complex
from .rootorder import OrderedRoots, ordered_roots

CACHE_VERSION = 1


@dataclass(frozen=True)
class RunConfig:
    type_label: str = "A"
    rank: int = 2
    matrix: Optional[tuple[tuple[int, ...], ...]] = None
    swap_classes: bool = False
    lambda_denominator: int = DEFAULT_DENOMINATOR_BOUND
    group_cap: int = DEFAULT_GROUP_CAP
    simplex_budget: int = DEFAULT_SIMPLEX_BUDGET
    out_dir: str = "ncph-out"
    cache: bool = True

    def diagram(self) -> CoxeterDiagram:
        if self.matrix is not None:
            return CoxeterDiagram.from_matrix(self.matrix)
        return CoxeterDiagram.from_type(self.type_label, self.rank)

    def canonical_json(self) -> str:
        payload = {
            "type": self.type_label,
            "rank": self.rank,
            "matrix": [list(r) for r in self.matrix] if self.matrix else None,
            "swapClasses": self.swap_classes,
            "lambdaDenominator": self.lambda_denominator,
            "groupCap": self.group_cap,
            "simplexBudget": self.simplex_budget,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    def content_hash(self) -> str:
        return hashlib.sha256(self.canonical_json().encode()).hexdigest()[:16]

    def cache_path(self) -> Path:
        return Path(self.out_dir) / "cache" / self.content_hash() / "system.json"


class Bundle:
    """Everything derived from one RunConfig, built lazily."""

    def __init__(self, config: RunConfig):
        self.config = config

    @cached_property
    def system(self) -> CoxeterSystem:
        cfg = self.config
        if cfg.cache:
            cached = _load_system_cache(cfg)
            if cached is not None:
                return cached
        system = CoxeterSystem(cfg.diagram(), swap_classes=cfg.swap_classes,
                               group_cap=cfg.group_cap)
        if cfg.cache:
            _write_system_cache(cfg, system)
        return system

    @cached_property
    def ordered(self) -> OrderedRoots:
        return ordered_roots(self.system)

    @cached_property
    def ncp(self) -> NcpLattice:
        return build_ncp(self.system)

    @cached_property
    def root_complex(self) -> SimplicialComplex:
        return build_root_complex(self.system, self.ordered)

    @cached_property
    def ncp_order_complex(self) -> SimplicialComplex:
        proper = self.ncp.proper_positions()
        return order_complex(
            len(proper), lambda i, j: self.ncp.leq[proper[i]][proper[j]])

    @cached_property
    def ncp_betti(self) -> dict[int, int]:
        return betti_numbers(self.ncp_order_complex, self.config.simplex_budget)

    @cached_property
    def rays(self) -> list:
        return enumerate_rays(self.system)

    @cached_property
    def separation(self) -> Fraction:
        return ray_separation_bound(self.system, self.rays,
                                    self.config.lambda_denominator)

    @cached_property
    def generic(self) -> GenericVector:
        return generic_vector(self.system, self.ordered.tau, self.separation,
                              self.rays)

    @cached_property
    def chamber_list(self) -> list:
        return chambers(self.system)

    @cached_property
    def bounded_flags(self) -> list[bool]:
        v = self.generic.vector
        return [bounded_slice(c, v) for c in self.chamber_list]

    @cached_property
    def vertex_complex(self) -> VertexComplex:
        return vertex_complex(self.system, self.ordered, self.root_complex)

    @cached_property
    def embedding(self) -> EmbeddingReport:
        return embedding_report(self.system, self.vertex_complex,
                                self.chamber_list, self.generic.vector)

    @cached_property
    def basis_cycles(self) -> list:
        return facet_boundary_cycles(self.system, self.ordered,
                                     self.root_complex, self.ncp)


def build(config: RunConfig) -> Bundle:
    return Bundle(config)


# ---------------------------------------------------------------------------
# system cache
# ---------------------------------------------------------------------------

def _write_system_cache(config: RunConfig, system: CoxeterSystem) -> None:
    path = config.cache_path()
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        "version": CACHE_VERSION,
        "config": json.loads(config.canonical_json()),
        "field": system.field.describe(),
        "perm": list(system.perm),
        "s": system.s,
        "h": system.h,
        "simpleRoots": [serialize.vector(r) for r in system.simple_roots],
        "elements": [serialize.matrix(m) for m in system.elements],
        "lengths": system.lengths,
        "reflections": [[i, serialize.vector(root)]
                        for i, root in system.reflections],
    }
    path.write_text(json.dumps(payload, sort_keys=True, indent=1) + "\n")


def _load_system_cache(config: RunConfig) -> Optional[CoxeterSystem]:
    path = config.cache_path()
    if not path.is_file():
        return None
    try:
        payload = json.loads(path.read_text())
        if payload.get("version") != CACHE_VERSION:
            return None
        return _system_from_cache(config, payload)
    except (ValueError, KeyError, OSError):
        return None


def _system_from_cache(config: RunConfig, payload: dict) -> CoxeterSystem:
    from .fields import NumberField, catalog_field_by_name, rationals
    from .linalg import Matrix

    desc = payload["field"]
    if desc["degree"] == 1:
        field = rationals()
    else:
        # prefer the catalog singleton so cached and fresh values share a field
        field = catalog_field_by_name(desc["name"], desc["minimalPolynomial"])
        if field is None:
            field = NumberField(desc["minimalPolynomial"],
                                [Fraction(b) for b in desc["isolatingInterval"]],
                                name=desc["name"])
    system = CoxeterSystem.__new__(CoxeterSystem)
    system.diagram = config.diagram()
    system.rank = system.diagram.rank
    system.perm = tuple(payload["perm"])
    system.s = payload["s"]
    system.field = field
    system.h = payload["h"]
    system.simple_roots = [serialize.vector_from(field, v)
                           for v in payload["simpleRoots"]]
    from .coxeter import reflection_matrix
    system.simple_reflections = [reflection_matrix(field, a)
                                 for a in system.simple_roots]
    c = system.simple_reflections[0]
    for r in system.simple_reflections[1:]:
        c = c * r
    system.coxeter_element = c
    system.identity = Matrix.identity(field, system.rank)
    root_matrix = Matrix(field, system.simple_roots)
    inv = root_matrix.inverse()
    system.dual_rays = [tuple(inv.rows[r][i] for r in range(system.rank))
                        for i in range(system.rank)]
    ones = tuple(field.one for _ in range(system.rank))
    system.interior_point = inv.apply(ones)
    system.elements = [serialize.matrix_from(field, m)
                       for m in payload["elements"]]
    system.index_of = {m.key(): i for i, m in enumerate(system.elements)}
    system.e_index = system.index_of[system.identity.key()]
    system.c_index = system.index_of[system.coxeter_element.key()]
    system.lengths = list(payload["lengths"])
    system.inverses = [system.index_of[m.transpose().key()]
                       for m in system.elements]
    system.reflections = [(i, serialize.vector_from(field, v))
                          for i, v in payload["reflections"]]
    system.root_of_reflection = dict(system.reflections)
    system._product_cache = {}
    return system
