"""Commutation graphs of rho-commuting sets and the p = 3 classification.

A set of nonzero elements is rho-commuting when it is linearly
independent and every ordered pair (u, v) satisfies u v u^{-1} = rho^e v
for some e.  The commutation graph records those labels; an arrow u -> v
is drawn when e = 1, i.e. u conjugates v to rho v.  For p = 3 every pair
therefore carries either no arrow (label 0) or exactly one arrow.

For p = 3 a set of monomial classes spans a Kummer space exactly when its
graph satisfies four axioms:

  1. every pair carries an arrow (the graph is a tournament);
  2. every simple directed cycle has length 3;
  3. the ordered product around each 3-cycle is scalar;
  4. the 3-cycles are pairwise vertex-disjoint.

``classify`` bundles the axioms into the monomial decision procedure, and
``max_transitive_chain`` extracts the longest chain x_1 -> ... -> x_r
with all forward arrows present.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import AlgebraElement, AlgebraSpec, conjugation_exponent
from .spaces import _laurent_rank


def _pair_labels(elements):
    """Conjugation labels for all ordered pairs, or None where undefined."""
    labels = {}
    for i, u in enumerate(elements):
        for j, v in enumerate(elements):
            if i >= j:
                continue
            e = conjugation_exponent(u, v)
            labels[(i, j)] = e
            labels[(j, i)] = None if e is None else (-e) % u.spec.p
    return labels


def is_rho_commuting(elements) -> bool:
    """Linearly independent, with every pair conjugating to a power of rho."""
    elements = list(elements)
    if not elements:
        return True
    spec = elements[0].spec
    for e in elements:
        if e.spec != spec:
            raise ValueError("elements from different algebras")
        if not e:
            return False
    if all(e.is_monomial() for e in elements):
        classes = {next(iter(e.terms)) for e in elements}
        if len(classes) != len(elements):
            return False
    else:
        rows = [e.terms for e in elements]
        if _laurent_rank(rows, spec.p, spec.n) != len(elements):
            return False
    labels = _pair_labels(elements)
    return all(e is not None for e in labels.values())


@dataclass
class CommutationGraph:
    """Conjugation labels of a rho-commuting set, plus display names.

    ``labels[(i, j)]`` is the e with v_i v_j v_i^{-1} = rho^e v_j; the
    arrow i -> j is present exactly when that label is 1.
    """

    p: int
    size: int
    labels: dict
    vertex_names: list

    def label(self, i: int, j: int) -> int:
        return self.labels[(i, j)]

    def has_arrow(self, i: int, j: int) -> bool:
        return i != j and self.labels[(i, j)] == 1

    def arrows(self):
        return sorted(pair for pair, e in self.labels.items() if e == 1)

    def successors(self, i: int):
        return [j for j in range(self.size) if self.has_arrow(i, j)]

    def simple_cycles(self):
        """All simple directed cycles, each reported once.

        Canonical form: the tuple starts at the cycle's smallest vertex
        and follows the arrows.  Brute-force DFS; graphs here are tiny.
        """
        cycles = []
        adjacency = [self.successors(i) for i in range(self.size)]

        def extend(start, current, path, visited):
            for nxt in adjacency[current]:
                if nxt == start and len(path) >= 2:
                    cycles.append(tuple(path))
                elif nxt > start and nxt not in visited:
                    visited.add(nxt)
                    path.append(nxt)
                    extend(start, nxt, path, visited)
                    path.pop()
                    visited.remove(nxt)

        for start in range(self.size):
            extend(start, start, [start], {start})
        return sorted(cycles, key=lambda c: (len(c), c))

    def three_cycles(self):
        return [c for c in self.simple_cycles() if len(c) == 3]


def build_graph(elements) -> CommutationGraph:
    """Commutation graph of a rho-commuting list of elements."""
    elements = list(elements)
    if not is_rho_commuting(elements):
        raise ValueError("the elements are not a rho-commuting set")
    labels = _pair_labels(elements)
    p = elements[0].spec.p if elements else 0
    return CommutationGraph(
        p=p,
        size=len(elements),
        labels=labels,
        vertex_names=[str(e) for e in elements],
    )


@dataclass
class AxiomReport:
    """Per-axiom outcomes with witnesses for the failures."""

    tournament: bool = True
    missing_arrow: tuple | None = None
    cycle_lengths: bool = True
    long_cycle: tuple | None = None
    cycle_products: bool = True
    nonscalar_cycle: tuple | None = None
    nonscalar_product: AlgebraElement | None = None
    disjoint: bool = True
    intersecting_cycles: tuple | None = None
    cycles: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.tournament
            and self.cycle_lengths
            and self.cycle_products
            and self.disjoint
        )

    def failures(self):
        out = []
        if not self.tournament:
            out.append(f"axiom 1 fails: vertices {self.missing_arrow} carry no arrow")
        if not self.cycle_lengths:
            out.append(f"axiom 2 fails: cycle {self.long_cycle} has length > 3")
        if not self.cycle_products:
            out.append(
                f"axiom 3 fails: cycle {self.nonscalar_cycle} has nonscalar product"
            )
        if not self.disjoint:
            out.append(
                f"axiom 4 fails: cycles {self.intersecting_cycles} share a vertex"
            )
        return out


def check_axioms(graph: CommutationGraph, elements) -> AxiomReport:
    """Evaluate the four p = 3 axioms on a graph with its elements."""
    if graph.p != 3:
        raise ValueError("the graph axioms apply only to p = 3")
    elements = list(elements)
    if len(elements) != graph.size:
        raise ValueError("element list does not match the graph")
    report = AxiomReport()
    for i in range(graph.size):
        for j in range(i + 1, graph.size):
            if graph.label(i, j) == 0:
                report.tournament = False
                report.missing_arrow = (i, j)
                break
        if not report.tournament:
            break
    report.cycles = graph.simple_cycles()
    for cycle in report.cycles:
        if len(cycle) != 3:
            report.cycle_lengths = False
            report.long_cycle = cycle
            break
    for cycle in report.cycles:
        if len(cycle) != 3:
            continue
        product = elements[cycle[0]] * elements[cycle[1]] * elements[cycle[2]]
        if not product.is_scalar():
            report.cycle_products = False
            report.nonscalar_cycle = cycle
            report.nonscalar_product = product
            break
    seen: dict = {}
    for cycle in report.cycles:
        for vertex in set(cycle):
            if vertex in seen and seen[vertex] != cycle:
                report.disjoint = False
                report.intersecting_cycles = (seen[vertex], cycle)
                break
            seen[vertex] = cycle
        if not report.disjoint:
            break
    return report


def classify(spec: AlgebraSpec, classes) -> bool:
    """Graph-axiom decision: do the monomial classes span a Kummer space?

    Equivalent to is_kummer_space on the corresponding monomial basis.
    """
    if spec.p != 3:
        raise ValueError("classification applies only to p = 3")
    elements = [spec.monomial(w) for w in classes]
    graph = build_graph(elements)
    return check_axioms(graph, elements).passed


def max_transitive_chain(graph: CommutationGraph) -> int:
    """Size of the largest transitive chain x_1 -> ... -> x_r (all i < j
    arrows present).

    Requires the structural axioms (tournament, only disjoint 3-cycles);
    then deleting one vertex from each 3-cycle in every possible way
    leaves acyclic tournaments, and the best one is the answer.
    """
    size = graph.size
    if size == 0:
        return 0
    for i in range(size):
        for j in range(i + 1, size):
            if graph.label(i, j) == 0:
                raise ValueError("axioms violated: missing arrow")
    cycles = graph.simple_cycles()
    vertex_seen: set = set()
    for cycle in cycles:
        if len(cycle) != 3:
            raise ValueError("axioms violated: cycle longer than 3")
        for vertex in cycle:
            if vertex in vertex_seen:
                raise ValueError("axioms violated: intersecting cycles")
            vertex_seen.add(vertex)
    best = 0
    for removal in itertools.product(*cycles) if cycles else [()]:
        keep = [v for v in range(size) if v not in set(removal)]
        if _is_transitive_chain(graph, keep):
            best = max(best, len(keep))
    return best


def _is_transitive_chain(graph: CommutationGraph, vertices) -> bool:
    order = sorted(
        vertices,
        key=lambda v: sum(1 for w in vertices if w != v and graph.has_arrow(v, w)),
        reverse=True,
    )
    for a in range(len(order)):
        for b in range(a + 1, len(order)):
            if not graph.has_arrow(order[a], order[b]):
                return False
    return True


def export_dot(graph: CommutationGraph) -> str:
    """Deterministic DOT rendering; edges on 3-cycles are styled bold red."""
    cycle_edges = set()
    for cycle in graph.three_cycles():
        for t in range(3):
            cycle_edges.add((cycle[t], cycle[(t + 1) % 3]))
    lines = ["digraph commutation {"]
    for i, name in enumerate(graph.vertex_names):
        lines.append(f'  v{i} [label="{name}"];')
    for i, j in graph.arrows():
        style = " [color=red, penwidth=2]" if (i, j) in cycle_edges else ""
        lines.append(f"  v{i} -> v{j}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
