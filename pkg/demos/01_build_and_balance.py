"""Building oriented hypergraphs and asking whether they are balanced.

An oriented hypergraph attaches +1 or -1 to every (edge, vertex)
incidence.  Balance asks for a bipartition of the vertices so that each
edge touches one part only through +1 incidences and the other part
only through -1 incidences.  `incidence_balance` either exhibits such a
bipartition (with a switching certificate) or a negative cycle that
rules one out.
"""

import hypersign as hs

# A single edge over two vertices, positive at 1, negative at 2.
g = hs.build(2, [[(1, 1), (2, -1)]])
verdict = hs.incidence_balance(g)
print("single mixed edge balanced?", bool(verdict))
print("  parts:", verdict.part_positive, "/", verdict.part_negative)
print("  switching certificate:", verdict.cert)

# Replaying the certificate turns every orientation positive.
switched = hs.apply_switches(g, verdict.cert)
print("  after switching:", [[(v, switched.orientation(j, v)) for v in switched.members(j)]
                             for j in range(switched.m)])

# A triangle with one negative incidence cannot be split that way.
triangle = hs.build(3, [[(1, -1), (2, 1)], [(1, 1), (3, 1)], [(2, 1), (3, 1)]])
verdict = hs.incidence_balance(triangle)
print("\ntriangle with one negative incidence balanced?", bool(verdict))
print("  witness cycle:", " ".join(f"{k}{i}" for k, i in verdict.cycle.elements))
print("  cycle sign:", hs.incidence_sign_of(verdict.cycle, triangle))

# The bundled 4-uniform example: three edges on six vertices.
ex = hs.load_bundled("ex_c3_42")
print("\nbundled example balanced?", bool(hs.incidence_balance(ex)))
print("edge signs of the bundled example:",
      [hs.edge_sign(ex, j) for j in range(ex.m)])

# The same structure with every orientation positive is balanced trivially,
# but its *edge signs* are all -1 because each edge has even size.
plus = hs.all_positive_variant(ex)
print("all-positive variant balanced?", bool(hs.incidence_balance(plus)))
print("its induced edge signs:", hs.induced_signed(plus).gamma)
