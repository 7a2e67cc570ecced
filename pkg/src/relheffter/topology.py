"""Cayley graphs, developed cycle decompositions, rotation systems, and face tracing."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .group import GroupElement, GroupSpec, neg, subgroup_of_order
from .orderings import Ordering, partial_sums
from .pfarray import PFArray

Edge = frozenset  # frozenset of two GroupElements
DirectedEdge = tuple  # (tail: GroupElement, head: GroupElement)


class CertificationError(ValueError):
    """A decomposition or embedding certificate failed, with a witness."""


@dataclass(frozen=True)
class CayleyGraph:
    """Cay[G : connection]: vertices G, x ~ y iff x - y in the connection set."""

    spec: GroupSpec
    connection: frozenset[GroupElement]

    def __post_init__(self) -> None:
        for a in self.connection:
            if a.is_identity:
                raise ValueError("connection set must not contain the identity")
            if neg(a) not in self.connection:
                raise ValueError(f"connection set not closed under negation at {a.coords}")

    @classmethod
    def multipartite(cls, v: int, t: int) -> "CayleyGraph":
        """K_{(v/t) x t} as Cay[Z_v : Z_v minus the order-t subgroup]."""
        spec = GroupSpec.cyclic(v)
        forbidden = subgroup_of_order(v, t)
        return cls(spec, frozenset(g for g in spec.elements() if g not in forbidden))

    @classmethod
    def from_entries(cls, array: PFArray) -> "CayleyGraph":
        """Cay[G : +-E(A)]."""
        conn = set()
        for e in array.entries.values():
            conn.add(e)
            conn.add(neg(e))
        return cls(array.spec, frozenset(conn))

    @property
    def num_vertices(self) -> int:
        return self.spec.size

    @property
    def num_edges(self) -> int:
        return self.spec.size * len(self.connection) // 2

    def edges(self) -> set[Edge]:
        out: set[Edge] = set()
        for x in self.spec.elements():
            for a in self.connection:
                out.add(frozenset((x, x + a)))
        return out


@dataclass(frozen=True)
class Cycle:
    """A cycle as its vertex sequence; consecutive vertices (cyclically) adjacent."""

    vertices: tuple[GroupElement, ...]

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("cycle vertices must be distinct")

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [frozenset((vs[i], vs[(i + 1) % len(vs)])) for i in range(len(vs))]

    def differences(self) -> list[GroupElement]:
        """Both signed differences of each edge; the list has 2 * len entries."""
        vs = self.vertices
        out = []
        for i in range(len(vs)):
            d = vs[(i + 1) % len(vs)] - vs[i]
            out.append(d)
            out.append(neg(d))
        return out

    def translate(self, g: GroupElement) -> "Cycle":
        return Cycle(tuple(v + g for v in self.vertices))

    def canonical_edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges())


def base_cycles(array: PFArray, ordering: Ordering, by: str = "col") -> list[Cycle]:
    """Partial-sum cycles of each row (by='row') or column (by='col') ordering."""
    if by not in ("row", "col"):
        raise ValueError("by must be 'row' or 'col'")
    cycles = []
    orders = ordering.row_orders if by == "row" else ordering.col_orders
    for index in sorted(orders):
        seq = (ordering.row_entries(array, index) if by == "row"
               else ordering.col_entries(array, index))
        sums = partial_sums(seq)
        if len(set(sums)) != len(sums):
            raise CertificationError(f"{by} {index} ordering is not simple")
        if len(sums) < 3:
            raise CertificationError(f"{by} {index} has fewer than 3 filled cells")
        cycles.append(Cycle(tuple(sums)))
    return cycles


@dataclass
class DecompositionCertificate:
    """A verified G-regular cycle decomposition: all translates of the base cycles."""

    graph: CayleyGraph
    base: list[Cycle]
    cycles: list[Cycle] = field(default_factory=list)

    @property
    def cycle_lengths(self) -> Counter:
        return Counter(len(c) for c in self.cycles)

    def to_json(self) -> dict:
        return {
            "num_base_cycles": len(self.base),
            "num_cycles": len(self.cycles),
            "cycle_lengths": dict(sorted(self.cycle_lengths.items())),
            "num_edges": self.graph.num_edges,
        }


def develop_and_verify(base: list[Cycle], graph: CayleyGraph) -> DecompositionCertificate:
    """Develop the base cycles by every g in G and certify an exact edge partition."""
    diffs: list[GroupElement] = []
    for cycle in base:
        diffs.extend(cycle.differences())
    counts = Counter(diffs)
    for d, c in counts.items():
        if c > 1:
            raise CertificationError(f"difference {d.coords} appears {c} times in the base cycles")
    if set(counts) != set(graph.connection):
        missing = next(iter(set(graph.connection) - set(counts)), None)
        extra = next(iter(set(counts) - set(graph.connection)), None)
        raise CertificationError(
            f"difference list != connection set (missing={missing}, extra={extra})"
        )

    cert = DecompositionCertificate(graph, base)
    seen: dict[Edge, tuple[int, GroupElement]] = {}
    for g in graph.spec.elements():
        for idx, cycle in enumerate(base):
            t = cycle.translate(g)
            cert.cycles.append(t)
            for edge in t.edges():
                if edge in seen:
                    raise CertificationError(
                        f"edge {sorted(v.coords for v in edge)} covered twice "
                        f"(base {seen[edge][0]} + {seen[edge][1].coords} and base {idx} + {g.coords})"
                    )
                seen[edge] = (idx, g)
    if len(seen) != graph.num_edges:
        raise CertificationError(
            f"covered {len(seen)} edges, graph has {graph.num_edges}"
        )
    return cert


def verify_orthogonal(d1: DecompositionCertificate, d2: DecompositionCertificate) -> bool:
    """True iff every cycle of d1 shares at most one edge with every cycle of d2."""
    if d1 is d2:
        raise ValueError("orthogonality is defined across two distinct decompositions")
    owner1: dict[Edge, int] = {}
    for i, cycle in enumerate(d1.cycles):
        for edge in cycle.edges():
            owner1[edge] = i
    pair_counts: Counter = Counter()
    for j, cycle in enumerate(d2.cycles):
        for edge in cycle.edges():
            i = owner1.get(edge)
            if i is not None:
                pair_counts[(i, j)] += 1
                if pair_counts[(i, j)] > 1:
                    return False
    return True


@dataclass(frozen=True)
class RotationMap:
    """The vertex-rotation seed: a cyclic permutation of +-E(A)."""

    mapping: dict[GroupElement, GroupElement]

    def __call__(self, a: GroupElement) -> GroupElement:
        return self.mapping[a]

    @property
    def domain(self) -> set[GroupElement]:
        return set(self.mapping)


def entry_successor_maps(
    array: PFArray, ordering: Ordering
) -> tuple[dict[GroupElement, GroupElement], dict[GroupElement, GroupElement]]:
    """omega_r and omega_c as entry-level cyclic successor maps (entries distinct)."""
    omega_r: dict[GroupElement, GroupElement] = {}
    for i, cells in ordering.row_orders.items():
        seq = [array.entries[c] for c in cells]
        for p, e in enumerate(seq):
            if e in omega_r:
                raise ValueError("entries are not distinct; entry-level orderings undefined")
            omega_r[e] = seq[(p + 1) % len(seq)]
    omega_c: dict[GroupElement, GroupElement] = {}
    for j, cells in ordering.col_orders.items():
        seq = [array.entries[c] for c in cells]
        for p, e in enumerate(seq):
            omega_c[e] = seq[(p + 1) % len(seq)]
    return omega_r, omega_c


def build_rho0(array: PFArray, ordering: Ordering) -> RotationMap:
    """rho0(a) = -omega_r(a) on E(A) and omega_c(-a) on -E(A); must be one cycle."""
    omega_r, omega_c = entry_successor_maps(array, ordering)
    entries = set(omega_r)
    mapping: dict[GroupElement, GroupElement] = {}
    for a in entries:
        mapping[a] = neg(omega_r[a])
        mapping[neg(a)] = omega_c[a]
    start = next(iter(mapping))
    length = 1
    cur = mapping[start]
    while cur != start:
        cur = mapping[cur]
        length += 1
    if length != len(mapping):
        raise CertificationError(
            f"rho0 is not cyclic on +-E(A): orbit {length} of {len(mapping)} "
            "(the orderings are not compatible)"
        )
    return RotationMap(mapping)


@dataclass
class EmbeddingReport:
    """Faces of the embedding induced by rho0, with Euler-characteristic genus."""

    V: int
    S: int
    F: int
    faces: list[tuple[DirectedEdge, ...]]
    genus: int
    color_of_face: list[int] | None = None
    formula_genus: int | None = None

    def to_json(self) -> dict:
        data = {"V": self.V, "S": self.S, "F": self.F, "genus": self.genus}
        if self.formula_genus is not None:
            data["formula_genus"] = self.formula_genus
        if self.color_of_face is not None:
            data["color_class_sizes"] = dict(sorted(Counter(self.color_of_face).items()))
        return data


def heffter_genus_formula(m: int, n: int, s: int, k: int, t: int) -> int:
    """Closed-form genus of the biembedding obtained from an H_t(m,n;s,k)."""
    num = (n * k - n - m - 1) * (2 * n * k + t)
    if num % 2 != 0:
        raise ValueError("genus formula does not yield an integer")
    return 1 + num // 2


def trace_faces(graph: CayleyGraph, rho0: RotationMap) -> EmbeddingReport:
    """Faces as orbits of rho o tau on directed edges, where
    rho((x, x+a)) = (x, x + rho0(a)) and tau swaps the directions."""
    if rho0.domain != set(graph.connection):
        raise ValueError("rotation domain must equal the connection set")
    vertices = list(graph.spec.elements())
    directed = [(x, x + a) for x in vertices for a in graph.connection]
    unvisited = set(directed)
    faces: list[tuple[DirectedEdge, ...]] = []
    while unvisited:
        start = next(iter(unvisited))
        face = []
        cur = start
        while True:
            face.append(cur)
            unvisited.discard(cur)
            tail, head = cur
            # tau then rho: (head, tail) = (head, head + (tail - head))
            cur = (head, head + rho0(tail - head))
            if cur == start:
                break
        faces.append(_canonical_rotation(tuple(face)))

    V = len(vertices)
    S = len(directed) // 2
    F = len(faces)
    euler = V - S + F
    if (2 - euler) % 2 != 0:
        raise CertificationError(f"Euler characteristic {euler} gives a non-integer genus")
    faces.sort(key=lambda f: (f[0][0].coords, f[0][1].coords))
    return EmbeddingReport(V, S, F, faces, (2 - euler) // 2)


def _canonical_rotation(face: tuple[DirectedEdge, ...]) -> tuple[DirectedEdge, ...]:
    """Rotate so the lexicographically least directed edge comes first."""
    key = min(range(len(face)), key=lambda i: (face[i][0].coords, face[i][1].coords))
    return face[key:] + face[:key]


def two_color_check(report: EmbeddingReport, array: PFArray, ordering: Ordering) -> bool:
    """Classify every face as a translate of a column base cycle (class 1) or of a
    row base cycle (class 2); check each undirected edge sees one of each.

    Stores the coloring into the report on success.
    """
    # class 2 follows the REVERSED row orderings (omega_r inverse): reversing
    # the ordering negates every partial-sum cycle's edge set
    reversed_rows = Ordering(
        {i: tuple(reversed(cells)) for i, cells in ordering.row_orders.items()},
        ordering.col_orders,
    )
    col_sets = _developed_edge_sets(array, ordering, "col")
    row_sets = _developed_edge_sets(array, reversed_rows, "row")

    colors: list[int] = []
    edge_classes: dict[Edge, list[int]] = defaultdict(list)
    for face in report.faces:
        face_edges = frozenset(frozenset(e) for e in face)
        if face_edges in col_sets:
            color = 1
        elif face_edges in row_sets:
            color = 2
        else:
            return False
        colors.append(color)
        for e in face_edges:
            edge_classes[e].append(color)
    for classes in edge_classes.values():
        if sorted(classes) != [1, 2]:
            return False
    report.color_of_face = colors
    return True


def _developed_edge_sets(array: PFArray, ordering: Ordering, by: str) -> set[frozenset[Edge]]:
    graph = CayleyGraph.from_entries(array)
    out: set[frozenset[Edge]] = set()
    for cycle in base_cycles(array, ordering, by=by):
        for g in graph.spec.elements():
            out.add(cycle.translate(g).canonical_edge_set())
    return out
