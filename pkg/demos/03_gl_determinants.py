"""Orthogonal determinants of GL_n(q) characters.

The unipotent class multiplies the determinant-polynomial class by a power
of q; the exponent is (degree - tableau count)/(q - 1). Sign pairs are
settled by the parity of a Gaussian binomial: an even induction index
makes the class trivial, an odd one passes the unipotent class through.
"""

from orthdet import sign_pair_determinant, unipotent_determinant
from orthdet.gl import unipotent_degree, unipotent_q_exponent
from orthdet.intpoly import gaussian_binomial

print("unipotent characters of GL_5(q), shape (3,1,1):")
for q in (3, 5, 7, 9):
    result = unipotent_determinant((3, 1, 1), q)
    print(f"  q={q}: degree {result.degree}, q-exponent {result.q_exponent}, "
          f"class {result.det_class!r}")

print("\nbreakdown for shape (2,1) at q=3 (odd q-exponent):")
result = unipotent_determinant((2, 1), 3)
print(f"  degree {unipotent_degree((2, 1), 3)}, exponent {unipotent_q_exponent((2, 1), 3)}")
for label, cls in result.breakdown:
    print(f"  {label:8s} {cls!r}")
print(f"  total    {result.det_class!r}")

print("\nsign pairs at q=3:")
for lam, mu in [((1,), (1,)), ((2,), (2, 2)), ((), (3, 1, 1)), ((1, 1), (2, 2))]:
    n, ell = sum(lam) + sum(mu), sum(lam)
    index = gaussian_binomial(n, ell, 3)
    result = sign_pair_determinant(lam, mu, 3)
    print(f"  {str(lam):10s} | {str(mu):10s} index {index} "
          f"({'even' if index % 2 == 0 else 'odd'}), degree {result.degree}, "
          f"class {result.det_class!r}")
