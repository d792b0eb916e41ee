"""Watch the local search improve a cover one move at a time.

The driver loop behind approx1/approx2 is: find the first applicable
move (add > rep > double-rep > re-cover > look-ahead), apply it,
normalise path lengths, repeat until nothing applies.

Run with:  python demos/02_local_search.py
"""

from pathcover import (
    Cover,
    apply_move,
    approx1,
    approx2,
    find_add,
    find_double_rep,
    find_lookahead,
    find_recover,
    find_rep,
)
from pathcover.instances import fixture_tight_ratio_24

inst, stalled = fixture_tight_ratio_24()
g = inst.graph

print("24-vertex worst-case graph; optimal cover reaches all", inst.planted_opt)

# Step through the five finders manually, starting from the empty cover.
cover = Cover(4, g.n)
memo = {}
step = 0
while True:
    move = (
        find_add(g, cover)
        or find_rep(g, cover)
        or find_double_rep(g, cover)
        or find_recover(g, cover, memo=memo)
        or find_lookahead(g, cover)
    )
    if move is None:
        break
    apply_move(cover, move)
    step += 1
    print(f"  step {step:2d}: {move.kind:10s} delta={move.coverage_delta:+d}"
          f"  covered={cover.coverage()}")
print("stalled with", cover.coverage(), "of", g.n, "vertices covered")

# The bundled stalled state shows the worst case: 10 of 24 covered, and
# the three general-k moves are all inapplicable there.
r = approx1(g, 4, initial_cover=stalled)
print("\nfrom the adversarial start, approx1 stays at", r.covered,
      f"-> ratio {inst.planted_opt / r.covered}")

r2 = approx2(g, initial_cover=stalled)
print("approx2 escapes the same start and covers", r2.covered)
