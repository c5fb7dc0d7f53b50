"""Graded characters: the two independent routes and the identities.

The closed form multiplies the degree-weighted sum over the finite crystal
by an inverse product over the columns of lambda; the brute-force route
enumerates truncated path sets and sums their weights.  They must agree
exactly, window by window.
"""

from silspath import (
    brute_force_gch_minus_e,
    build,
    floor_w0,
    gch_demazure_minus_e,
    gch_demazure_plus_w0,
    gch_quotient_minus,
    macdonald_t0,
    qls_degree_sum,
    simple_reflection,
    weyl_character,
)

datum = build("A", 1)
lam = (2,)

print("degree-weighted sum over the finite crystal:")
print("  ", qls_degree_sum(datum, lam))
print("Macdonald polynomial at t=0 (substitute q -> 1/q):")
print("  ", macdonald_t0(datum, lam))
print("its q^0 slice against the Weyl character formula:")
print("  ", weyl_character(datum, lam))

print()
depth = 3
closed = gch_demazure_minus_e(datum, lam, depth)
brute = brute_force_gch_minus_e(datum, lam, depth)
print(f"minus-side Demazure character, truncated to q >= -{depth}:")
print("  closed form: ", closed)
print("  enumeration: ", brute)
print("  exactly equal:", closed == brute)

print()
plus = gch_demazure_plus_w0(datum, lam, depth)
flipped = gch_demazure_minus_e(datum, lam, depth).invert_q().invert_x()
print("plus-side character equals the (x, q)-inverted minus side:", plus == flipped)

print()
print("quotient characters shrink as the representative climbs:")
identity = simple_reflection(datum, 1).mul(simple_reflection(datum, 1))
print("  at identity:", gch_quotient_minus(datum, lam, identity))
print(f"  at {floor_w0(datum, lam)!r}:    ", gch_quotient_minus(datum, lam, floor_w0(datum, lam)))

print()
print("a rank-two sample (C2, first fundamental weight):")
c2 = build("C", 2)
print("  ", macdonald_t0(c2, (1, 0)))
print(
    "  cross-check at depth 2:",
    gch_demazure_minus_e(c2, (1, 0), 2) == brute_force_gch_minus_e(c2, (1, 0), 2),
)
