"""Catalogs, coloring enumeration and the pruning pipeline."""
import json

import numpy as np
import pytest

from equifacet import combinat


def coloring_from_red(g, red):
    eid = g.edge_index()
    mask = 0
    for u, v in red:
        mask |= 1 << eid[(u, v) if u < v else (v, u)]
    return combinat.EdgeColoring(g, mask)


def graph_by_label(catalog, label):
    return next(g for g in combinat.builtin_catalog(catalog)
                if g.class_label == label)


# catalogs -----------------------------------------------------------------

def test_builtin_catalog_sizes():
    assert len(combinat.builtin_catalog("warmup")) == 4
    assert len(combinat.builtin_catalog("k7")) == 5
    assert len(combinat.builtin_catalog("k8")) == 14


def test_catalog_graphs_satisfy_invariants():
    for name in ("warmup", "k7", "k8"):
        for g in combinat.builtin_catalog(name):
            g.validate()
            assert len(g.edges) == 3 * g.k - 6
            assert len(g.facets) == 2 * g.k - 4
            # every edge lies in exactly two facets
            from collections import Counter
            cnt = Counter()
            for a, b, c in g.facets:
                for e in ((a, b), (b, c), (a, c)):
                    cnt[tuple(sorted(e))] += 1
            assert set(cnt) == set(g.edges)
            assert all(v == 2 for v in cnt.values())


def test_parse_catalog_rejects_malformed_input():
    with pytest.raises(combinat.MalformedCatalog):
        combinat.parse_catalog("not json at all {")
    bad = json.dumps([{"class_label": "X", "k": 4,
                       "edges": [[0, 1]], "facets": [[0, 1, 2]]}])
    with pytest.raises(combinat.MalformedCatalog):
        combinat.parse_catalog(bad)


def test_load_catalog_missing_file():
    with pytest.raises(FileNotFoundError):
        combinat.load_catalog("/nonexistent/path.catalog")


def test_derive_facets_octahedron():
    octa = graph_by_label("warmup", "K6-C2")
    sols = combinat.derive_facets(6, octa.edges)
    assert len(sols) == 1
    assert set(sols[0]) == set(octa.facets)


# coloring enumeration -----------------------------------------------------

EXPECTED_COLORING_COUNTS = {
    "K7-C1": 6, "K7-C2": 7, "K7-C3": 6, "K7-C4": 9, "K7-C5": 11,
    "K8-C1": 8, "K8-C2": 8, "K8-C3": 7, "K8-C4": 10, "K8-C5": 8,
    "K8-C6": 7, "K8-C7": 8, "K8-C8": 10, "K8-C9": 9, "K8-C10": 10,
    "K8-C11": 12, "K8-C12": 12, "K8-C13": 20, "K8-C14": 12,
}


def test_enumeration_counts_and_isosceles_property():
    for name in ("k7", "k8"):
        for g in combinat.builtin_catalog(name):
            cs = combinat.enumerate_colorings(g)
            assert len(cs) == EXPECTED_COLORING_COUNTS[g.class_label]
            assert all(c.is_facet_isosceles() for c in cs)
            masks = [c.mask for c in cs]
            assert masks == sorted(masks)


def test_every_facet_has_one_red_edge():
    g = graph_by_label("k8", "K8-C10")
    for c in combinat.enumerate_colorings(g):
        for f in g.facets:
            pairs = [(f[0], f[1]), (f[1], f[2]), (f[0], f[2])]
            assert sum(c.color(u, v) == combinat.RED for u, v in pairs) == 1


# pruning ------------------------------------------------------------------

EXPECTED_SURVIVORS = {
    # label: (survivors, orbits, forced_equilateral)
    "K7-C1": (0, 0, 0), "K7-C2": (0, 0, 0), "K7-C3": (0, 0, 0),
    "K7-C4": (0, 0, 0), "K7-C5": (6, 2, 5),
    "K8-C1": (1, 1, 0), "K8-C2": (0, 0, 0), "K8-C3": (0, 0, 0),
    "K8-C4": (0, 0, 0), "K8-C5": (0, 0, 0), "K8-C6": (0, 0, 0),
    "K8-C7": (0, 0, 0), "K8-C8": (1, 1, 0), "K8-C9": (0, 0, 0),
    "K8-C10": (1, 1, 0), "K8-C11": (0, 0, 0), "K8-C12": (1, 1, 0),
    "K8-C13": (3, 2, 0), "K8-C14": (4, 3, 0),
}


def test_pruning_survivor_counts():
    for name in ("k7", "k8"):
        for g in combinat.builtin_catalog(name):
            alive = combinat.survivors(g)
            orbs = combinat.coloring_orbits(g, [c for c, _ in alive])
            forced = sum(1 for _, v in alive
                         if v.annotations.get("forced_equal"))
            assert (len(alive), len(orbs), forced) == \
                EXPECTED_SURVIVORS[g.class_label], g.class_label


def test_k7_survivors_only_pentagonal_bipyramid():
    for g in combinat.builtin_catalog("k7"):
        outcome = combinat.class_outcome(g)
        if g.class_label == "K7-C5":
            assert outcome == "isosceles-candidates"
        else:
            assert outcome == "MonochromeFacetOnly"


def test_k7_class2_near_survivor_killed_by_antipodal_chain():
    """One Class 2 coloring survives the basic rules; the chained
    antipodal deduction eliminates it."""
    g = graph_by_label("k7", "K7-C2")
    c = coloring_from_red(g, [(0, 2), (0, 4), (0, 6), (2, 6), (4, 6)])
    assert c.is_facet_isosceles()
    assert combinat.check_property_l(g, c).status == "survives"
    verdict = combinat.prune_coloring(g, c)
    assert verdict.eliminated
    assert verdict.rule == "Lemma-antipodal-chain"


def test_warmup_outcomes():
    outcomes = {g.class_label: combinat.class_outcome(g)
                for g in combinat.builtin_catalog("warmup")}
    # tetrahedron and octahedron admit only equilateral facets; the
    # triangular bipyramid keeps a genuine isosceles candidate
    assert outcomes["K4-C1"] == "MonochromeFacetOnly"
    assert outcomes["K5-C1"] == "isosceles-candidates"
    assert outcomes["K6-C1"] == "MonochromeFacetOnly"
    assert outcomes["K6-C2"] == "MonochromeFacetOnly"


def test_octahedron_survivors_all_forced_equilateral():
    g = graph_by_label("warmup", "K6-C2")
    alive = combinat.survivors(g)
    assert len(alive) == 9
    assert all(v.annotations.get("forced_equal") for _, v in alive)
    assert len(combinat.coloring_orbits(g, [c for c, _ in alive])) == 2


def test_verdicts_carry_witnesses():
    g = graph_by_label("k7", "K7-C2")
    for c, v in combinat.prune(g):
        if v.eliminated:
            assert v.rule in {"PropertyL", "DefectA", "Lemma-antipodal-chain",
                              "DefectB+AngleDefect", "DefectC-contradiction"}


def test_deduce_antipodal_pairs_on_bipyramid():
    """The all-legs-blue pentagonal bipyramid coloring forces the apexes
    antipodal: they are joined by five blue 2-paths."""
    g = graph_by_label("k7", "K7-C5")
    red = [e for e in g.edges if 5 not in e and 6 not in e]
    c = coloring_from_red(g, red)
    assert c.is_facet_isosceles()
    pairs = combinat.deduce_antipodal_pairs(g, c)
    assert (5, 6) in pairs or (6, 5) in pairs


# automorphisms ------------------------------------------------------------

def test_automorphism_group_sizes():
    octa = graph_by_label("warmup", "K6-C2")
    assert len(combinat.automorphisms(octa)) == 48
    penta = graph_by_label("k7", "K7-C5")
    assert len(combinat.automorphisms(penta)) == 20


def test_pruning_invariant_under_automorphisms():
    """Verdict status agrees across each automorphism orbit (200 cases)."""
    rng = np.random.default_rng(7)
    cases = 0
    for name in ("warmup", "k7", "k8"):
        for g in combinat.builtin_catalog(name):
            autos = combinat.automorphisms(g)
            cs = combinat.enumerate_colorings(g)
            for c in cs:
                base = combinat.prune_coloring(g, c).eliminated
                p = autos[int(rng.integers(len(autos)))]
                image = combinat.apply_automorphism(g, c, p)
                assert combinat.prune_coloring(g, image).eliminated == base
                cases += 1
    assert cases >= 200


def test_coloring_orbits_partition():
    g = graph_by_label("k8", "K8-C13")
    cs = combinat.enumerate_colorings(g)
    orbits = combinat.coloring_orbits(g, cs)
    masks = sorted(c.mask for orb in orbits for c in orb)
    assert masks == sorted(c.mask for c in cs)
    reps = [orb[0].mask for orb in orbits]
    assert reps == sorted(reps)


def test_find_isomorphism_identity_and_relabel():
    g = graph_by_label("k7", "K7-C5")
    assert combinat.find_isomorphism(g.k, g.edges, g.edges) is not None
    perm = [3, 0, 4, 1, 2, 6, 5]
    relabeled = tuple(sorted(
        tuple(sorted((perm[u], perm[v]))) for u, v in g.edges))
    assert combinat.find_isomorphism(g.k, g.edges, relabeled) is not None
    other = graph_by_label("k7", "K7-C1")
    assert combinat.find_isomorphism(g.k, g.edges, other.edges) is None
