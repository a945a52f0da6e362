"""Tour of the graph layer: families, amalgams, profiles, and enumeration.

Run:  python demos/01_graphs_and_families.py
"""

from dilations import (canonical_form, corona, cp_vee_cq, cycle,
                       enumerate_connected, g_nr, ghat_nr,
                       graph_from_family_string, is_isomorphic, parse_graph6,
                       structure_profile, to_edge_list, to_graph6, t2,
                       vertex_amalgam)


def section(title):
    print(f"\n{'=' * 60}\n{title}\n{'=' * 60}")


section("Family specs are plain strings")
for spec in ["cycle:7", "complete_bipartite:2,4", "corona:cycle:3",
             "g_nr:4,1", "ghat_nr:4,1", "cp_vee_cq:4,3", "t2"]:
    g = graph_from_family_string(spec)
    prof = structure_profile(g)
    print(f"{spec:<24} n={g.n:<3} m={g.edge_count:<3} degrees={prof.degree_sequence}"
          f" leaves={len(prof.leaves)}")

section("Serialization round-trips: graph6 and edge lists")
g = cp_vee_cq(4, 3)
code = to_graph6(g)
print("graph6:", code)
print(to_edge_list(g).rstrip())
assert parse_graph6(code) == g

section("Vertex amalgamation builds the two-cycle family")
bowtie = vertex_amalgam(cycle(3), 0, cycle(3), 0)
print("bowtie:", bowtie, "- same as cp_vee_cq(3,3)?",
      is_isomorphic(bowtie, cp_vee_cq(3, 3)))

section("Structure profiles expose leaves, stems, bipartitions")
g = g_nr(3, 1)
prof = structure_profile(g)
print(f"G(3,1): leaves={prof.leaves} stems={prof.stems}"
      f" bipartite={prof.bipartition is not None}")
g = corona(cycle(4))
prof = structure_profile(g)
print(f"corona(C4): every vertex a leaf or stem?"
      f" {set(prof.leaves) | set(prof.stems) == set(range(g.n))}")

section("Canonical forms power isomorphism and enumeration")
relabeled = cycle(6).relabel([3, 1, 4, 0, 5, 2])
print("C6 canonical code stable under relabeling:",
      canonical_form(cycle(6)) == canonical_form(relabeled))
for n in range(1, 7):
    count = sum(1 for _ in enumerate_connected(n))
    print(f"connected graphs on {n} vertices: {count}")
print("5-vertex, min degree 2, non-bipartite:",
      [to_graph6(h) for h in enumerate_connected(5, min_degree=2, bipartite=False)])
