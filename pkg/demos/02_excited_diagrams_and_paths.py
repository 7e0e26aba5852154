"""Excited diagrams and their non-intersecting path complements.

Each diagram is drawn as a grid ('#' = diagram cell, '.' = free cell of the
outer shape); the complement of every diagram splits into monotone lattice
paths whose endpoints never move.
"""

from skewtab import enumerate_excited, parse_shape, paths_from_diagram

shape = parse_shape("5,4,4,1/2,1")
diagrams = enumerate_excited(shape)
print(f"{shape!r} has {len(diagrams)} excited diagrams\n")

for d in diagrams:
    occupied = set(d)
    for i in range(1, len(shape.outer) + 1):
        print("".join("#" if (i, j) in occupied else "."
                      for j in range(1, shape.outer.part(i) + 1)))
    family = paths_from_diagram(shape, d)
    for path in family.paths:
        print("  path:", " -> ".join(f"({i},{j})" for i, j in path))
    print()

endpoints = {paths_from_diagram(shape, d).endpoints() for d in diagrams}
assert len(endpoints) == 1
print("endpoints shared by all families:", endpoints.pop())
