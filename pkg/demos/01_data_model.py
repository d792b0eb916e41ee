"""Tour of the data model: graphs, paths, covers, validation, splitting.

Run with:  python demos/01_data_model.py
"""

from pathcover import Cover, Graph, Path, split_long_path, validate_cover

# A small graph: a 9-cycle with one chord.  Vertices are dense integers.
g = Graph(9, [(i, (i + 1) % 9) for i in range(9)] + [(2, 7)])
print(g)
print("neighbors of 2:", g.neighbors(2))
print("adjacent(2, 7):", g.adjacent(2, 7))

# Paths are ordered vertex sequences; u(j)/v(j) index from head and tail.
p = Path([0, 1, 2, 3, 4])
print("\npath:", p, "order:", p.order)
print("u(1) =", p.u(1), " v(1) =", p.v(1), " (v counts from the tail)")

# A cover is a set of vertex-disjoint paths, each of order in [k, 2k-1].
cover = Cover(4, 9, [p])
print("\ncover:", cover, "free vertices:", cover.free_vertices())
print("violations:", validate_cover(g, cover))

# Violations are reported as data, never raised.
broken = Cover(4, 9)
broken.paths = [Path([0, 1, 2]), Path([2, 3, 4, 5])]
for v in validate_cover(g, broken):
    print("  violation:", v)

# Long paths are normalised by splitting off k-vertex pieces.
wide = Cover(4, 9)
wide.paths = [Path(range(9))]
wide._covered = bytearray([1] * 9)
wide._coverage = 9
split_long_path(wide, Path(range(9)))
print("\nafter split:", [tuple(q) for q in wide.paths])
