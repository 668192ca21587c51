"""Combinatorial side of the classification.

Catalog of simplicial polytope graphs, enumeration of facet-isosceles
edge 2-colorings, and the pruning rules that eliminate colorings which
cannot come from a polytope with congruent isosceles facets inscribed in
the unit sphere.

Color convention, fixed globally: red marks the unique base edge of each
facet (length a), blue the two legs (length b).  A coloring is
facet-isosceles when every facet has exactly one red and two blue edge.

The pruning rules all flow from one observation: three identically
colored paths of length two between a pair of vertices force that pair
to be antipodal (three midpoints equidistant from both endpoints lie on
a circle in the perpendicular bisector plane, and three coplanar sphere
points pin that plane through the origin).  Consequences:

- Property L: a degree-3 vertex with mixed edge colors is impossible.
- Defect A: an antipodal pair joined by an edge of color X makes X a
  diameter, so no other X edge (length-2 chords repeat) can exist.
- Chain rule: once color X is a diameter, an X-colored path of length
  two anywhere forces two more antipodal vertices and a contradiction.
- Defect B: >= 3 same-colored plus >= 1 opposite-colored two-paths
  between a pair force a = b (equilateral facets).
- Defect C: exactly 2 red + 2 blue two-paths whose midpoints alternate
  in cyclic order also force a = b.
- Forced a = b plus a vertex of degree >= 6 is a contradiction outright:
  six equilateral facet angles leave no positive angle defect.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

RED = "red"
BLUE = "blue"


class MalformedCatalog(ValueError):
    """Catalog document cannot be parsed or has the wrong structure."""


class InvariantViolation(ValueError):
    """A catalog entry fails the simplicial-polytope invariants."""


@dataclass(frozen=True)
class PolytopeGraph:
    """One combinatorial type: graph plus facet triangulation."""

    class_label: str
    k: int
    edges: tuple[tuple[int, int], ...]
    facets: tuple[tuple[int, int, int], ...]

    @staticmethod
    def make(class_label, k, edges, facets) -> "PolytopeGraph":
        g = PolytopeGraph(
            class_label,
            int(k),
            tuple(tuple(sorted(int(x) for x in e)) for e in edges),
            tuple(tuple(sorted(int(x) for x in f)) for f in facets),
        )
        g.validate()
        return g

    def validate(self) -> None:
        k = self.k
        if k < 4:
            raise InvariantViolation(f"{self.class_label}: k < 4")
        es = set(self.edges)
        if len(es) != len(self.edges):
            raise InvariantViolation(f"{self.class_label}: duplicate edges")
        if any(not (0 <= i < j < k) for i, j in self.edges):
            raise InvariantViolation(f"{self.class_label}: bad edge index")
        if len(self.edges) != 3 * k - 6:
            raise InvariantViolation(
                f"{self.class_label}: |E|={len(self.edges)} != 3k-6")
        if len(self.facets) != 2 * k - 4:
            raise InvariantViolation(
                f"{self.class_label}: |F|={len(self.facets)} != 2k-4")
        cover: dict[tuple[int, int], int] = {e: 0 for e in es}
        for f in self.facets:
            for e in itertools.combinations(f, 2):
                if e not in cover:
                    raise InvariantViolation(
                        f"{self.class_label}: facet {f} uses non-edge {e}")
                cover[e] += 1
        if any(c != 2 for c in cover.values()):
            raise InvariantViolation(
                f"{self.class_label}: some edge not in exactly 2 facets")

    @property
    def degree_sequence(self) -> tuple[int, ...]:
        deg = [0] * self.k
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return tuple(deg)

    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def neighbors(self, v: int) -> list[int]:
        out = []
        for i, j in self.edges:
            if i == v:
                out.append(j)
            elif j == v:
                out.append(i)
        return out


@dataclass(frozen=True)
class EdgeColoring:
    """Red/blue edge assignment, stored as a bitmask over g.edges.

    Bit b set means edge b is red.
    """

    graph: PolytopeGraph
    mask: int

    @property
    def red_edges(self) -> frozenset:
        return frozenset(
            e for b, e in enumerate(self.graph.edges) if (self.mask >> b) & 1)

    def color(self, u: int, v: int) -> str | None:
        e = (u, v) if u < v else (v, u)
        idx = self.graph.edge_index().get(e)
        if idx is None:
            return None
        return RED if (self.mask >> idx) & 1 else BLUE

    def color_matrix(self) -> list[list[str | None]]:
        k = self.graph.k
        col: list[list[str | None]] = [[None] * k for _ in range(k)]
        for b, (i, j) in enumerate(self.graph.edges):
            c = RED if (self.mask >> b) & 1 else BLUE
            col[i][j] = col[j][i] = c
        return col

    def is_facet_isosceles(self) -> bool:
        for f in self.graph.facets:
            reds = sum(
                1 for e in itertools.combinations(f, 2)
                if self.color(*e) == RED)
            if reds != 1:
                return False
        return True


@dataclass
class EliminationVerdict:
    """Outcome of a pruning rule (or of the whole pipeline) on a coloring."""

    status: str                    # "eliminated" | "survives"
    rule: str | None = None
    witnesses: tuple = ()
    annotations: dict = field(default_factory=dict)

    @property
    def eliminated(self) -> bool:
        return self.status == "eliminated"


def _survives(**annotations) -> EliminationVerdict:
    return EliminationVerdict("survives", annotations=annotations)


# Catalog I/O --------------------------------------------------------------

_CATALOG_DIR = Path(__file__).parent / "catalogs"


def parse_catalog(text: str) -> list[PolytopeGraph]:
    """Parse a catalog document (JSON list of entries) and validate it."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedCatalog(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, list) or not doc:
        raise MalformedCatalog("catalog must be a non-empty list of entries")
    graphs = []
    for entry in doc:
        if not isinstance(entry, dict):
            raise MalformedCatalog(f"entry is not an object: {entry!r}")
        missing = {"class_label", "k", "edges", "facets"} - set(entry)
        if missing:
            raise MalformedCatalog(
                f"entry missing fields {sorted(missing)}: {entry.get('class_label')}")
        try:
            g = PolytopeGraph.make(
                entry["class_label"], entry["k"], entry["edges"],
                entry["facets"])
        except InvariantViolation as exc:
            raise MalformedCatalog(str(exc)) from exc
        expected = entry.get("expected_degree_sequence")
        if expected is not None and tuple(expected) != g.degree_sequence:
            raise InvariantViolation(
                f"{g.class_label}: degree sequence {g.degree_sequence} "
                f"!= expected {tuple(expected)}")
        graphs.append(g)
    return graphs


def load_catalog(path) -> list[PolytopeGraph]:
    """Load and validate a catalog file."""
    return parse_catalog(Path(path).read_text())


def builtin_catalog(name: str) -> list[PolytopeGraph]:
    """One of the shipped catalogs: 'k7', 'k8' or 'warmup'."""
    return load_catalog(_CATALOG_DIR / f"{name}.catalog")


# Facet derivation ---------------------------------------------------------

def derive_facets(k: int, edges) -> list[tuple[tuple[int, int, int], ...]]:
    """All facet triangulations of a 3-connected planar graph given only
    its edges: choose 2k-4 triangles so every edge lies in exactly two.

    Returns the list of solutions (normally exactly one for the catalog
    graphs); used to build catalog entries and to cross-check them.
    """
    es = {tuple(sorted(e)) for e in edges}
    tris = [
        t for t in itertools.combinations(range(k), 3)
        if all(tuple(sorted(p)) in es for p in itertools.combinations(t, 2))
    ]
    edge_ids = {e: i for i, e in enumerate(sorted(es))}
    tri_edges = [
        [edge_ids[tuple(sorted(p))] for p in itertools.combinations(t, 2)]
        for t in tris
    ]
    need = 2 * k - 4
    count = [0] * len(es)
    sols: set[tuple] = set()

    def bt(chosen: list[int], used: set[int]) -> None:
        if len(chosen) == need:
            if all(c == 2 for c in count):
                sols.add(tuple(sorted(tris[i] for i in chosen)))
            return
        uncovered = next((i for i in range(len(es)) if count[i] < 2), None)
        if uncovered is None:
            return
        for ti in range(len(tris)):
            if ti in used or uncovered not in tri_edges[ti]:
                continue
            if any(count[x] >= 2 for x in tri_edges[ti]):
                continue
            for x in tri_edges[ti]:
                count[x] += 1
            used.add(ti)
            chosen.append(ti)
            bt(chosen, used)
            chosen.pop()
            used.discard(ti)
            for x in tri_edges[ti]:
                count[x] -= 1

    bt([], set())
    return sorted(sols)


# Coloring enumeration -----------------------------------------------------

def enumerate_colorings(g: PolytopeGraph) -> list[EdgeColoring]:
    """All facet-isosceles colorings, in ascending-bitmask order.

    Brute force over 2^|E| bitmasks (|E| <= 18 for k <= 8), vectorized.
    """
    ne = len(g.edges)
    eid = g.edge_index()
    masks = np.arange(1 << ne, dtype=np.uint32)
    ok = np.ones(masks.shape, dtype=bool)
    for f in g.facets:
        bits = [eid[e] for e in itertools.combinations(f, 2)]
        s = ((masks >> bits[0]) & 1) + ((masks >> bits[1]) & 1) \
            + ((masks >> bits[2]) & 1)
        ok &= s == 1
    return [EdgeColoring(g, int(m)) for m in masks[ok]]


# Rule engine --------------------------------------------------------------

def find_colored_two_paths(g, c: EdgeColoring, u: int, v: int, color: str):
    """Midpoints w of paths u-w-v whose two edges both have the given color."""
    col = c.color_matrix()
    return [
        w for w in range(g.k)
        if w not in (u, v) and col[u][w] == color and col[v][w] == color
    ]


def deduce_antipodal_pairs(g, c: EdgeColoring) -> list[tuple[int, int]]:
    """All pairs {u,v} with >= 3 identically colored two-paths between
    them; such pairs are forced to be antipodal (a set of diameters)."""
    col = c.color_matrix()
    out = []
    for u in range(g.k):
        for v in range(u + 1, g.k):
            reds = blues = 0
            for w in range(g.k):
                if w in (u, v):
                    continue
                if col[u][w] == col[v][w] is not None:
                    if col[u][w] == RED:
                        reds += 1
                    else:
                        blues += 1
            if reds >= 3 or blues >= 3:
                out.append((u, v))
    return out


def check_property_l(g, c: EdgeColoring) -> EliminationVerdict:
    """Degree-3 vertex with mixed incident edge colors: eliminated."""
    deg = g.degree_sequence
    for v in range(g.k):
        if deg[v] != 3:
            continue
        colors = {c.color(v, w) for w in g.neighbors(v)}
        if len(colors) > 1:
            return EliminationVerdict("eliminated", "PropertyL", (v,))
    return _survives()


def check_defect_a(g, c: EdgeColoring) -> EliminationVerdict:
    """Antipodality contradictions.

    Three parts, all downstream of deduce_antipodal_pairs:
    - two antipodal pairs sharing a vertex cannot both be diameters;
    - an antipodal pair joined by an edge of color X makes X the
      diameter, so another X edge at either endpoint is degenerate;
    - once X is the diameter, an X-colored two-path anywhere forces a
      second diameter chord through a non-antipodal pair.
    Survivors carry the deduced pairs as an annotation.
    """
    pairs = deduce_antipodal_pairs(g, c)
    seen: dict[int, tuple[int, int]] = {}
    for u, v in pairs:
        for x in (u, v):
            if x in seen:
                return EliminationVerdict(
                    "eliminated", "Lemma-antipodal-chain",
                    tuple(sorted({*seen[x], u, v})))
            seen[x] = (u, v)
    col = c.color_matrix()
    diameter_colors = set()
    for u, v in pairs:
        cc = col[u][v]
        if cc is None:
            continue
        for x in (u, v):
            others = [
                w for w in range(g.k)
                if col[x][w] == cc and {x, w} != {u, v}
            ]
            if others:
                return EliminationVerdict(
                    "eliminated", "DefectA", (u, v, x, others[0]))
        diameter_colors.add(cc)
    for cc in diameter_colors:
        for w in range(g.k):
            nb = [x for x in range(g.k) if col[w][x] == cc]
            if len(nb) >= 2:
                return EliminationVerdict(
                    "eliminated", "Lemma-antipodal-chain", (nb[0], w, nb[1]))
    return _survives(antipodal_pairs=pairs)


def check_defect_b(g, c: EdgeColoring) -> EliminationVerdict:
    """>= 3 same-colored plus >= 1 opposite-colored two-paths between a
    pair force a = b.  With a vertex of degree >= 6 that is an outright
    contradiction (non-positive angle defect); otherwise the coloring
    survives annotated as forced-equilateral."""
    max_deg = max(g.degree_sequence)
    for u in range(g.k):
        for v in range(u + 1, g.k):
            reds = find_colored_two_paths(g, c, u, v, RED)
            blues = find_colored_two_paths(g, c, u, v, BLUE)
            if (len(reds) >= 3 and len(blues) >= 1) or \
               (len(blues) >= 3 and len(reds) >= 1):
                if max_deg >= 6:
                    return EliminationVerdict(
                        "eliminated", "DefectB+AngleDefect", (u, v))
                return _survives(forced_equal=True, forcing_pair=(u, v))
    return _survives()


def check_defect_c(g, c: EdgeColoring) -> EliminationVerdict:
    """A pair with exactly 2 red + 2 blue two-paths whose midpoints form
    a 4-cycle with alternating colors: the four midpoints are coplanar
    and the alternation forces a = b.  Elimination as in Defect B when a
    degree >= 6 vertex exists."""
    col = c.color_matrix()
    max_deg = max(g.degree_sequence)
    for u in range(g.k):
        for v in range(u + 1, g.k):
            reds = find_colored_two_paths(g, c, u, v, RED)
            blues = find_colored_two_paths(g, c, u, v, BLUE)
            if len(reds) != 2 or len(blues) != 2:
                continue
            mids = reds + blues
            link = {w: [x for x in mids if col[w][x] is not None] for w in mids}
            if not all(len(link[w]) == 2 for w in mids):
                continue
            order = [mids[0], link[mids[0]][0]]
            while len(order) < 4:
                order.append(
                    next(x for x in link[order[-1]] if x != order[-2]))
            pattern = [w in reds for w in order]
            if pattern in ([True, False, True, False],
                           [False, True, False, True]):
                if max_deg >= 6:
                    return EliminationVerdict(
                        "eliminated", "DefectC-contradiction",
                        (u, v, *order))
                return _survives(forced_equal=True, forcing_pair=(u, v))
    return _survives()


_PIPELINE = (check_property_l, check_defect_a, check_defect_b, check_defect_c)


def prune_coloring(g, c: EdgeColoring) -> EliminationVerdict:
    """Run the full rule pipeline on one coloring.

    Rule order (Property L, then the antipodality rules, then the a = b
    forcings) only affects which rule gets credit, never the survivor
    set.  A surviving verdict accumulates the annotations of every rule.
    """
    annotations: dict = {}
    for rule in _PIPELINE:
        v = rule(g, c)
        if v.eliminated:
            return v
        annotations.update(v.annotations)
    return EliminationVerdict("survives", annotations=annotations)


def prune(g: PolytopeGraph) -> list[tuple[EdgeColoring, EliminationVerdict]]:
    """Verdict for every facet-isosceles coloring of g."""
    return [(c, prune_coloring(g, c)) for c in enumerate_colorings(g)]


def survivors(g: PolytopeGraph) -> list[tuple[EdgeColoring, EliminationVerdict]]:
    return [(c, v) for c, v in prune(g) if not v.eliminated]


def class_outcome(g: PolytopeGraph) -> str:
    """Graph-level summary of pruning.

    "isosceles-candidates" if some coloring survives without a forced
    a = b; "MonochromeFacetOnly" if every surviving option degenerates to
    equilateral facets (including the case of no survivors at all, where
    only the monochrome coloring remains conceivable).
    """
    for _, v in survivors(g):
        if not v.annotations.get("forced_equal"):
            return "isosceles-candidates"
    return "MonochromeFacetOnly"


# Isomorphism and automorphisms --------------------------------------------

def find_isomorphism(k: int, edges_a, edges_b) -> tuple[int, ...] | None:
    """A vertex bijection mapping edge set a onto edge set b, or None.

    Brute force over degree-compatible permutations; fine for k <= 8.
    """
    ea = {tuple(sorted(e)) for e in edges_a}
    eb = {tuple(sorted(e)) for e in edges_b}
    if len(ea) != len(eb):
        return None

    def degs(es):
        d = [0] * k
        for i, j in es:
            d[i] += 1
            d[j] += 1
        return d

    da, db = degs(ea), degs(eb)
    if sorted(da) != sorted(db):
        return None
    for p in itertools.permutations(range(k)):
        if any(da[i] != db[p[i]] for i in range(k)):
            continue
        if all(tuple(sorted((p[i], p[j]))) in eb for i, j in ea):
            return p
    return None


# Automorphisms ------------------------------------------------------------

def automorphisms(g: PolytopeGraph) -> list[tuple[int, ...]]:
    """All graph automorphisms, by brute-force search over
    degree-compatible permutations (k <= 8 keeps this cheap)."""
    es = set(g.edges)
    deg = g.degree_sequence
    out = []
    for p in itertools.permutations(range(g.k)):
        if any(deg[i] != deg[p[i]] for i in range(g.k)):
            continue
        if all(tuple(sorted((p[i], p[j]))) in es for i, j in g.edges):
            out.append(p)
    return out


def apply_automorphism(g, c: EdgeColoring, p) -> EdgeColoring:
    eid = g.edge_index()
    m = 0
    for b, (i, j) in enumerate(g.edges):
        if (c.mask >> b) & 1:
            m |= 1 << eid[tuple(sorted((p[i], p[j])))]
    return EdgeColoring(g, m)


def coloring_orbits(g, colorings) -> list[list[EdgeColoring]]:
    """Partition colorings into orbits under the automorphism group.

    Orbit representatives are the minimal masks; orbits sorted by
    representative, so output order is deterministic.
    """
    autos = automorphisms(g)
    pool = {c.mask: c for c in colorings}
    orbits = []
    while pool:
        m = min(pool)
        c = pool[m]
        orbit_masks = sorted({apply_automorphism(g, c, p).mask for p in autos}
                             & set(pool))
        orbits.append([pool[x] for x in orbit_masks])
        for x in orbit_masks:
            del pool[x]
    return orbits
