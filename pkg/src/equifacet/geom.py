"""3D geometry for small inscribed polytopes.

Convex hulls of a handful of points, facet areas, facet-shape
classification, bipyramid closed forms, and the asymptotic sandwich
bounds for the maximal surface area of an inscribed polytope.

All points live in ambient R^3 as length-3 float arrays.  Configurations
"on the sphere" means the unit sphere S^2 centered at the origin.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

# Tolerance tiers.  Input validation is strict; shape classification has
# to absorb accumulated hull arithmetic, so it is looser.
EPS_SPHERE = 1e-12   # |x|^2 - 1 for points tagged spherical
EPS_SHAPE = 1e-8     # edge-length agreement for shape classification
EPS_DIST = 1e-9      # pairwise distinctness

_VIS_EPS = 1e-10     # strict-visibility threshold in the hull
_PLANE_EPS = 1e-8    # coplanar-facet merging


class DegenerateInput(ValueError):
    """Raised when a hull is requested for degenerate input."""


class InvalidArgument(ValueError):
    """Raised for out-of-domain arguments to closed-form helpers."""


def triangle_area(a, b, c) -> float:
    """Area of the triangle abc via the cross product.

    Zero iff the points are collinear; degenerate input is not an error.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    return 0.5 * float(np.linalg.norm(np.cross(b - a, c - a)))


@dataclass
class Realization:
    """K labeled points plus a facet triangulation of their hull boundary.

    Facets are index triples, outward oriented (normal points away from
    the vertex centroid).
    """

    points: np.ndarray
    facets: list[tuple[int, int, int]] = field(default_factory=list)

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=float)
        self.facets = [tuple(int(i) for i in f) for f in self.facets]

    @property
    def k(self) -> int:
        return len(self.points)

    def edges(self) -> set[frozenset]:
        out: set[frozenset] = set()
        for a, b, c in self.facets:
            out |= {frozenset((a, b)), frozenset((b, c)), frozenset((c, a))}
        return out

    def is_spherical(self, eps: float = EPS_SPHERE) -> bool:
        r2 = np.einsum("ij,ij->i", self.points, self.points)
        return bool(np.max(np.abs(r2 - 1.0)) <= eps)

    def validate(self, spherical: bool = False) -> None:
        """Check distinctness, Euler counts and convex position.

        Raises DegenerateInput on failure.  With spherical=True also
        requires every point to lie on the unit sphere.
        """
        pts = self.points
        n = len(pts)
        if n < 4:
            raise DegenerateInput("need at least 4 points")
        d = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=2)
        d[np.diag_indices(n)] = np.inf
        if d.min() <= EPS_DIST:
            raise DegenerateInput("points not pairwise distinct")
        if spherical and not self.is_spherical():
            raise DegenerateInput("points not on the unit sphere")
        used = {v for f in self.facets for v in f}
        if len(self.facets) != 2 * len(used) - 4:
            raise DegenerateInput(
                f"facet count {len(self.facets)} != 2K-4 for K={len(used)}")
        if len(self.edges()) != 3 * len(used) - 6:
            raise DegenerateInput("edge count != 3K-6")
        centroid = pts.mean(axis=0)
        for a, b, c in self.facets:
            nrm = np.cross(pts[b] - pts[a], pts[c] - pts[a])
            if np.dot(nrm, pts[a] - centroid) <= 0:
                raise DegenerateInput(f"facet {(a, b, c)} not outward oriented")
            h = (pts - pts[a]) @ nrm / np.linalg.norm(nrm)
            if h.max() > EPS_SHAPE:
                raise DegenerateInput(f"point beyond facet {(a, b, c)} plane")


def _canonical_facets(pts: np.ndarray, faces: set[tuple[int, int, int]]):
    """Merge coplanar facet patches and re-fan them from the lowest index.

    The incremental hull can triangulate a coplanar patch (a square face,
    say) in an insertion-order-dependent way.  This pass makes the output
    deterministic: each maximal coplanar patch is fan-triangulated from
    its lowest vertex index.
    """
    faces = list(faces)
    normals = []
    for a, b, c in faces:
        nv = np.cross(pts[b] - pts[a], pts[c] - pts[a])
        normals.append(nv / np.linalg.norm(nv))
    # group faces by adjacency + matching supporting plane
    parent = list(range(len(faces)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    edge_owner: dict[frozenset, int] = {}
    for i, (a, b, c) in enumerate(faces):
        for e in (frozenset((a, b)), frozenset((b, c)), frozenset((c, a))):
            j = edge_owner.get(e)
            if j is None:
                edge_owner[e] = i
                continue
            # merge only when face j's vertices sit on face i's plane to
            # near machine precision, so refanning the patch cannot move
            # its plane by more than the validator's one-sidedness budget
            same_plane = np.dot(normals[i], normals[j]) > 0.0 and all(
                abs(np.dot(normals[i], pts[v] - pts[faces[i][0]])) < _VIS_EPS
                for v in faces[j])
            if same_plane:
                parent[find(i)] = find(j)

    groups: dict[int, list[int]] = {}
    for i in range(len(faces)):
        groups.setdefault(find(i), []).append(i)

    out = []
    for members in groups.values():
        if len(members) == 1:
            a, b, c = faces[members[0]]
            m = min(a, b, c)
            while a != m:
                a, b, c = b, c, a
            out.append((a, b, c))
            continue
        # boundary edges of the patch appear in exactly one member face
        cnt: dict[tuple[int, int], int] = {}
        succ: dict[int, int] = {}
        for i in members:
            a, b, c = faces[i]
            for u, v in ((a, b), (b, c), (c, a)):
                cnt[frozenset((u, v))] = cnt.get(frozenset((u, v)), 0) + 1
        for i in members:
            a, b, c = faces[i]
            for u, v in ((a, b), (b, c), (c, a)):
                if cnt[frozenset((u, v))] == 1:
                    succ[u] = v
        start = min(succ)
        cycle = [start]
        while True:
            nxt = succ[cycle[-1]]
            if nxt == start:
                break
            cycle.append(nxt)
        for t in range(1, len(cycle) - 1):
            out.append((cycle[0], cycle[t], cycle[t + 1]))
    out.sort()
    return out


def convex_hull(points) -> Realization:
    """Facet triangulation of the convex hull boundary.

    Incremental insertion with brute-force visibility tests; fine for the
    handful of points this library works with.  Points in convex position
    all appear in some facet.  Coplanar hull patches are fan-triangulated
    from their lowest vertex index, so the output is deterministic.

    Raises DegenerateInput for fewer than 4 points or coplanar input.
    """
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    if n < 4:
        raise DegenerateInput("need at least 4 points")

    i0 = 0
    i1 = max(range(n), key=lambda i: np.linalg.norm(pts[i] - pts[i0]))
    if np.linalg.norm(pts[i1] - pts[i0]) <= EPS_DIST:
        raise DegenerateInput("all points coincide")
    u = pts[i1] - pts[i0]
    i2 = max(range(n), key=lambda i: np.linalg.norm(np.cross(u, pts[i] - pts[i0])))
    if np.linalg.norm(np.cross(u, pts[i2] - pts[i0])) <= EPS_DIST:
        raise DegenerateInput("all points collinear")
    nrm = np.cross(u, pts[i2] - pts[i0])
    i3 = max(range(n), key=lambda i: abs(np.dot(nrm, pts[i] - pts[i0])))
    if abs(np.dot(nrm, pts[i3] - pts[i0])) / np.linalg.norm(nrm) <= EPS_DIST:
        raise DegenerateInput("all points coplanar")
    seed = [i0, i1, i2, i3]

    def orient(tri, inner):
        a, b, c = tri
        nv = np.cross(pts[b] - pts[a], pts[c] - pts[a])
        if np.dot(nv, pts[a] - inner) < 0:
            return (a, c, b)
        return tri

    inner = pts[seed].mean(axis=0)
    faces = {
        orient(t, inner)
        for t in [(i0, i1, i2), (i0, i1, i3), (i0, i2, i3), (i1, i2, i3)]
    }
    for p in range(n):
        if p in seed:
            continue
        vis = set()
        for f in faces:
            a, b, c = f
            nv = np.cross(pts[b] - pts[a], pts[c] - pts[a])
            if np.dot(nv / np.linalg.norm(nv), pts[p] - pts[a]) > _VIS_EPS:
                vis.add(f)
        if not vis:
            continue
        edge_count: dict[frozenset, int] = {}
        for a, b, c in vis:
            for e in (frozenset((a, b)), frozenset((b, c)), frozenset((c, a))):
                edge_count[e] = edge_count.get(e, 0) + 1
        horizon = [e for e, cnt in edge_count.items() if cnt == 1]
        faces -= vis
        inner = pts[sorted({v for f in faces for v in f} | {p})].mean(axis=0)
        for e in horizon:
            a, b = tuple(e)
            faces.add(orient((a, b, p), inner))

    return Realization(pts, _canonical_facets(pts, faces))


def oriented_facets(points, facets) -> list[tuple[int, int, int]]:
    """Flip facet windings so every normal points away from the centroid."""
    pts = np.asarray(points, dtype=float)
    centroid = pts.mean(axis=0)
    out = []
    for a, b, c in facets:
        nrm = np.cross(pts[b] - pts[a], pts[c] - pts[a])
        if np.dot(nrm, pts[a] - centroid) < 0:
            a, b, c = a, c, b
        out.append((a, b, c))
    return out


def boundary_consistent(r: Realization, spherical: bool = False) -> bool:
    """Is r.facets a valid triangulation of the hull boundary of r.points?

    True when the realization passes its own invariants (every facet's
    plane supports the point set) and the facet areas sum to the hull
    area.  This is the right consistency check even for weakly convex
    bodies where adjacent triangular facets are coplanar and the hull's
    own triangulation may pick different diagonals.
    """
    fixed = Realization(r.points, oriented_facets(r.points, r.facets))
    try:
        fixed.validate(spherical=spherical)
        hull = convex_hull(r.points)
    except DegenerateInput:
        return False
    return abs(surface_area(fixed) - surface_area(hull)) <= 1e-8


def planar_facet_count(r: Realization) -> int:
    """Number of distinct supporting planes among the facets.

    Coplanar adjacent triangles count once, so a triangulated cube
    reports 6, not 12.
    """
    planes = []
    for a, b, c in oriented_facets(r.points, r.facets):
        nv = np.cross(r.points[b] - r.points[a], r.points[c] - r.points[a])
        nv = nv / np.linalg.norm(nv)
        d = float(np.dot(nv, r.points[a]))
        for n2, d2 in planes:
            if abs(d - d2) < _PLANE_EPS and np.dot(nv, n2) > 1 - _PLANE_EPS:
                break
        else:
            planes.append((nv, d))
    return len(planes)


def surface_area(r: Realization) -> float:
    """Sum of facet areas; invariant under rigid motions of the points."""
    return sum(triangle_area(*(r.points[i] for i in f)) for f in r.facets)


@dataclass(frozen=True)
class FacetShape:
    """Shape of one triangular facet, by its sorted edge lengths."""

    kind: str                       # "equilateral" | "isosceles" | "scalene"
    edges: tuple[float, float, float]  # sorted ascending
    leg: float | None = None
    base: float | None = None


def _shape_of(edges: tuple[float, float, float]) -> FacetShape:
    e0, e1, e2 = edges
    eq01 = abs(e0 - e1) <= EPS_SHAPE
    eq12 = abs(e1 - e2) <= EPS_SHAPE
    if eq01 and eq12:
        return FacetShape("equilateral", edges, leg=e1, base=e1)
    if eq01:
        return FacetShape("isosceles", edges, leg=e0, base=e2)
    if eq12:
        return FacetShape("isosceles", edges, leg=e1, base=e0)
    return FacetShape("scalene", edges)


def facet_edge_lengths(r: Realization) -> np.ndarray:
    """(|F|, 3) array of per-facet edge lengths, each row sorted ascending."""
    pts = r.points
    tri = np.array(r.facets, dtype=int)
    e = np.stack(
        [
            np.linalg.norm(pts[tri[:, 0]] - pts[tri[:, 1]], axis=1),
            np.linalg.norm(pts[tri[:, 1]] - pts[tri[:, 2]], axis=1),
            np.linalg.norm(pts[tri[:, 2]] - pts[tri[:, 0]], axis=1),
        ],
        axis=1,
    )
    e.sort(axis=1)
    return e


def classify_facets(r: Realization) -> tuple[list[FacetShape], bool]:
    """Per-facet shapes plus a congruence verdict.

    Congruent means all facets' sorted edge-length triples agree pairwise
    within EPS_SHAPE.
    """
    lengths = facet_edge_lengths(r)
    shapes = [_shape_of(tuple(row)) for row in lengths]
    congruent = bool(np.max(np.abs(lengths - lengths[0])) <= EPS_SHAPE)
    return shapes, congruent


def is_equifacetal_member(r: Realization) -> bool:
    """Membership in the competition class: congruent isosceles or
    equilateral facets, all vertices on the unit sphere."""
    shapes, congruent = classify_facets(r)
    if not congruent or not r.is_spherical():
        return False
    return all(s.kind in ("equilateral", "isosceles") for s in shapes)


def congruence_defect(r: Realization) -> float:
    """Variance of the sorted facet edge-length triples.

    Zero exactly on congruent-facet configurations; used as the
    equifacetal penalty by the stochastic optimizer.
    """
    return float(facet_edge_lengths(r).var(axis=0).sum())


def bipyramid_max_area(n: int) -> float:
    """Surface area of the bipyramid over a regular n-gon in the equator
    with apexes at the poles: 2n sin(pi/n) sqrt(1 + cos^2(pi/n))."""
    if n < 3:
        raise InvalidArgument("bipyramid needs n >= 3")
    t = math.pi / n
    return 2 * n * math.sin(t) * math.sqrt(1 + math.cos(t) ** 2)


def asymptotic_bounds(K: int) -> tuple[float, float]:
    """Sandwich bounds (a_K, b_K) for the maximal surface area at K points.

    a_K = 4pi(1 - (2pi/sqrt 3) / K),  b_K = 4pi(1 - (10pi/(9 sqrt 3)) / K).
    Both tend to the sphere area 4pi as K grows.
    """
    if K < 4:
        raise InvalidArgument("need K >= 4")
    lo = 4 * math.pi * (1 - (2 * math.pi / math.sqrt(3)) / K)
    hi = 4 * math.pi * (1 - (10 * math.pi / (9 * math.sqrt(3))) / K)
    return lo, hi


# Reference configurations -------------------------------------------------

def regular_tetrahedron() -> np.ndarray:
    """Unit-sphere regular tetrahedron with one vertex at the north pole."""
    z = -1.0 / 3.0
    r = math.sqrt(8.0) / 3.0
    pts = [(0.0, 0.0, 1.0)]
    for j in range(3):
        t = 2 * math.pi * j / 3
        pts.append((r * math.cos(t), r * math.sin(t), z))
    return np.array(pts)


def regular_octahedron() -> np.ndarray:
    return np.array(
        [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]],
        dtype=float,
    )


def regular_icosahedron() -> np.ndarray:
    phi = (1 + math.sqrt(5)) / 2
    raw = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            raw += [(0, s1, s2 * phi), (s1, s2 * phi, 0), (s1 * phi, 0, s2)]
    pts = np.array(raw, dtype=float)
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


def bipyramid_points(n: int) -> np.ndarray:
    """Poles plus a regular n-gon on the equator, all on the unit sphere."""
    if n < 3:
        raise InvalidArgument("bipyramid needs n >= 3")
    pts = [(0.0, 0.0, 1.0), (0.0, 0.0, -1.0)]
    for j in range(n):
        t = 2 * math.pi * j / n
        pts.append((math.cos(t), math.sin(t), 0.0))
    return np.array(pts)
