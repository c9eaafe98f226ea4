"""
Two generator families and their sumset growth
==============================================

The norm-one circle in F_{q^2} (plus family) and the unit hyperbola in
F_q x F_q (minus family) are both symmetric, zero-free generator sets.
Their iterated sumsets either fill the Lee balls exactly and then cover
the whole group at step three - the quasi-perfect pattern - or fall
short somewhere.
"""

from quasilee import (admissibility, classify, cumulative_layers,
                      generator_set, lee_ball_size, make_field)

# the admissibility rule: plus needs -3 to be a square, minus needs the
# opposite and q > 12
for p, k, family in [(13, 1, "plus"), (5, 1, "plus"), (23, 1, "minus"),
                     (5, 1, "minus"), (17, 1, "minus")]:
    rep = admissibility(p, k, family)
    print(f"{family:5s} q={rep.q:2d}  admissible={rep.admissible}  ({rep.reason})")

# layer sizes vs Lee ball sizes for the flagship example
print("\nplus family at q = 13:")
gen = generator_set(make_field(13), "plus")
lay = cumulative_layers(gen)
for t, size in enumerate(lay.sizes):
    ball = lee_ball_size(gen.n, t) if t <= 3 else None
    mark = "= ball" if size == ball else f"  (ball {ball})"
    print(f"  #C_{t} = {size:4d} {mark}")
print("critical index", lay.critical_index, " limit index", lay.limit_index)
print("verdict:", classify(gen).verdict)

# the same scan across small fields, both families
print("\nfamily   q   layers               critical limit verdict")
for p, k, family in [(5, 1, "plus"), (7, 1, "plus"), (3, 2, "plus"),
                     (11, 1, "plus"), (13, 1, "plus"),
                     (5, 1, "minus"), (7, 1, "minus"), (3, 2, "minus"),
                     (11, 1, "minus"), (13, 1, "minus"), (23, 1, "minus")]:
    gen = generator_set(make_field(p, k), family)
    lay = cumulative_layers(gen)
    # the ball-size sandwich needs p >= 5 to be meaningful
    verdict = classify(gen).verdict if p >= 5 else "(p < 5)"
    limit = lay.limit_index if lay.limit_index is not None else "-"
    print(f"{family:5s} {p ** k:4d}   {str(list(lay.sizes)):20s}"
          f" {lay.critical_index:>6}  {limit:>4}  {verdict}")

# q = 11 is a curiosity: below the q > 12 admissibility threshold the
# triple sumset H+H+H alone misses part of the group, yet the cumulative
# union still covers at step three, so the sandwich test passes
print("\nnote: minus at q = 11 classifies as quasi-perfect even though the "
      "general construction only guarantees q > 12")
