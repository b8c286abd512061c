"""Small roots and the reduced-word automaton on a hyperbolic triangle group.

Builds the (3,3,4) group, computes the small roots, assembles the canonical
automaton on small inversion sets, and counts reduced words vs elements.
Run from the repo root: python3 demos/01_small_roots_and_automaton.py
"""

from pathlib import Path

from coxlow import (
    build_automaton,
    count_elements,
    growth_series,
    is_reduced,
    load_root_system,
    small_roots,
)

rs = load_root_system(Path("demos/groups/hyperbolic-3-3-4.json").read_text())
sigma = small_roots(rs)

print("group (3,3,4): rank %d, backend %s" % (rs.rank, rs.backend))
print("\nsmall roots (%d):" % len(sigma))
for i, root in enumerate(sigma):
    coords = ", ".join("%6.3f" % c for c in root.coords)
    print("  %2d  (%s)  depth %d" % (i, coords, root.depth))

aut = build_automaton(rs, sigma)
print("\nautomaton: %d states (the small inversion sets)" % len(aut))

for word in [(0, 1, 2, 0), (0, 0), (0, 1, 0, 1, 0, 1)]:
    print("  word %s reduced: %s" % (word, is_reduced(aut, word)))

k = 10
print("\nreduced words by length:", growth_series(aut, k))
print("elements by length:     ", count_elements(rs, sigma, k))
# the gap between the two rows is exactly the braid-relation collisions
