"""Secant-line experiments and the regularity of small point sets.

Three loosely related captures of how lines meet special surfaces and how
finite point sets sit in projective space: a trisecant of the quartic
symmetric-determinant surface, secant lines of a random complete
intersection through a general point, and Castelnuovo-Mumford regularity
read off Hilbert functions.

Run:  python3 demos/trisecants_and_point_sets.py
"""

from qfiber import (
    FieldSpec,
    Ideal,
    PolyRing,
    Seed,
    cm_regularity,
    gen_ci_secant,
    gen_reye,
    parse_ideal,
    reye_trisecant,
    secant_through_point,
)

# --- the symmetric-determinant quartic has 3-dimensional families of
#     trisecant lines; sample one per seed and verify the intersection

print("trisecants of the rank-<=2 locus of a 3x3 symmetric matrix of")
print("random linear forms in P^5:")
for seed in range(3):
    data = gen_reye(Seed(seed))
    chk = reye_trisecant(data, Seed(seed))
    print(f"  seed {seed}: line meets the surface in degree "
          f"{chk.intersection_degree}, det degree {chk.det_degree}, "
          f"sampled point on the line: {chk.point_on_line}")
print()

# --- secant lines through a general point of the ambient space

print("secant lines of a random CI through a random external point:")
for n, l in ((1, 2), (2, 3)):
    scen = gen_ci_secant(n, l, Seed(0))
    chk = secant_through_point(scen)
    print(f"  {l}-secants of an n={n} CI in P^{scen.r}: cone of directions "
          f"nonempty: {chk.cone_nonempty}; witnessed line degree "
          f"{chk.line_degree}")
    if chk.note:
        print(f"    note: {chk.note}")
print()

# --- regularity of point configurations in P^2

R = PolyRing(FieldSpec(32003), ("x", "y", "z"))
configs = [
    ("one reduced point", "x, y"),
    ("three collinear points", "x, y^2*z - y*z^2"),
    ("four points cut by two conics", "x^2 - y*z, y^2 - x*z"),
]
for label, text in configs:
    res = cm_regularity(Ideal(R, parse_ideal(text, R)))
    print(f"{label}: degree {res.degree}, regularity {res.regularity}, "
          f"hilbert function {list(res.hilbert_values)}")
