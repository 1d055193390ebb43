"""Initial forms of homogeneous polynomials under weight vectors.

A weight vector scores every monomial by the scalar product with its
exponent; the initial form keeps the terms of top score.  Run:

    python demos/initial_forms.py
"""

from toricdegen import (
    format_poly,
    initial_form,
    parse_poly,
    weight_of,
    witness_weight,
)

f = parse_poly("x1^3 + x0^2*x2 + x2^3", 2, 3)
print("f =", format_poly(f))

for omega in [(3, 2, 0), (0, 0, 0), (1, 0, 0)]:
    print(f"\nweights under omega = {omega}:")
    for u in f.support():
        print(f"  {u}: weight {weight_of(u, omega)}")
    print("  initial form:", format_poly(initial_form(f, omega)))

# The staircase weight (d, d-1, 0, -1, ...) balances x1^d against
# x0^(d-1)*x2 while every other monomial scores strictly lower.
for n, d in [(2, 3), (3, 4), (4, 6)]:
    omega = witness_weight(n, d)
    print(f"\nstaircase weight for n={n}, d={d}: {tuple(map(int, omega))}")
    print(f"  (d-1)*w0 + w2 = {(d - 1) * omega[0] + omega[2]} = d*w1 =",
          int(d * omega[1]))
