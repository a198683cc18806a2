"""Walkthrough: bracketing the connective constant of the four-row strip.

Exact counting on Z x {-1,0,1,2} is harder because irreducible bridges can
wander; instead, two modified alphabets bracket the truth.  Undercounting
atoms (bridges that never step left) give a lower bound; overcounting atoms
(built from an injective transformation onto two-row walks, with coefficient
corrections) give an upper bound.
"""

from stripwalks import (
    StripGeometry,
    atoms_width4_lower,
    atoms_width4_upper,
    compose_bridge_code,
    count_bridges,
    important_part_denominator,
    mu_bounds_width4,
    upper_atom_from_pipeline,
)

strip = StripGeometry(-1, 2)
bridges = count_bridges(strip, 14)

print("-- lower bound: left-step-free bridges --")
lower = compose_bridge_code(atoms_width4_lower(), 4)
print("  composed:", lower.pretty())
print("  series  :", lower.series(12))
print("  bridges :", bridges.counts[:13])
print("  minorizes:", all(s <= b for s, b in zip(lower.series(14), bridges.counts)))

print("\n-- upper bound: transformed-walk atoms --")
upper_atoms = atoms_width4_upper()
for t in ("OO", "IO", "OI", "II"):
    same = upper_atoms[t] == upper_atom_from_pipeline(t)
    print(f"  atom {t}: series {upper_atoms[t].series(8)}  pipeline-consistent={same}")
upper = compose_bridge_code(upper_atoms, 4)
print("  series  :", upper.series(12))
print("  majorizes:", all(s >= b for s, b in zip(upper.series(14), bridges.counts)))

print("\n-- loop denominator of the upper composition --")
d44 = important_part_denominator(upper_atoms, 4)
print(f"  degree {d44.degree}, leading terms: {d44.coefficients[:5]} ...")
print(f"  trailing terms: ... {d44.coefficients[-3:]}")

print("\n-- the bracket --")
lo, hi = mu_bounds_width4()
print(f"  lower root {lo.root:.9f}  ->  mu >= {lo.mu:.6f}")
print(f"  upper root {hi.root:.9f}  ->  mu <= {hi.mu:.6f}")
print(f"  bracket width: {hi.mu - lo.mu:.6f}")
