"""The complete 8-vertex classification, class by class.

All 14 simplicial 8-vertex graph classes are pushed through the pruning
pipeline; the handful of surviving colorings are then realized or
refuted geometrically.  The winner is the Class 10 configuration with
area exactly 8 -- remarkably, its coordinates form an inscribed cube,
and the Class 14(iii) construction retriangulates the very same cube.
"""
import math

from equifacet import combinat, geom, realize

print("pruning summary")
for g in combinat.builtin_catalog("k8"):
    alive = combinat.survivors(g)
    orbs = combinat.coloring_orbits(g, [c for c, _ in alive])
    print(f"  {g.class_label}: {len(alive)} survivors in {len(orbs)} orbits")

print("\ngeometric disposal of the surviving classes")
r10 = realize.realize_class10()
print(f"  Class 10: h={r10.h:.6f}, a={r10.a:.6f}, b={r10.b:.6f}, "
      f"area={r10.area:.12f}")
hull10 = geom.convex_hull(r10.realization.points)
print(f"    the hull has {geom.planar_facet_count(hull10)} planar faces: "
      "an inscribed cube, triangulated by the class facet list")

r13 = realize.realize_class13()
print(f"  Class 13: hexagonal bipyramid, area={r13.area:.12f} "
      f"(= 3*sqrt(7) = {3 * math.sqrt(7):.12f})")

i14 = realize.class14i_value()
print(f"  Class 14(i): area={i14['area']:.12f}, ties Class 13")
print(f"  Class 14(ii): refuted={realize.refute_class14ii().refuted} "
      "(forced square faces collapse the eight points to four)")
r14 = realize.realize_class14iii()
print(f"  Class 14(iii): h={r14.h:.6f}, area={r14.area:.12f} "
      "(the same cube as Class 10, different facet diagonals)")

for rep in (realize.refute_class1(probe=False), realize.refute_class8(),
            realize.refute_class12(), realize.refute_snub_disphenoid()):
    print(f"  {rep.class_label}: refuted={rep.refuted} ({rep.method})")

print("\ntheorem check")
rep = realize.verify_theorem(8)
print(f"  winner {rep.winner} with area {rep.max_area:.12f} "
      f"(matches: {rep.matches})")
