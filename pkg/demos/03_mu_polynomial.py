"""The generator count mu(I^n) is eventually an exact linear polynomial.

Run with: python demos/03_mu_polynomial.py
"""

from stairpow import MonomialIdeal, mu_polynomial, naive_power, serialize_terms

I = MonomialIdeal.of((0, 2), (2, 1), (3, 0))
print(f"I = {serialize_terms(I)}")

poly = mu_polynomial(I)
print(f"mu(I^n) = {poly.intercept} + {poly.slope}*(n - {poly.s})  for n >= {poly.s}")

print("\n  n   mu(I^n)  naive check")
for n in range(1, 13):
    actual = naive_power(I, n).mu
    predicted = poly(n) if n >= poly.s else "pre-stable"
    print(f"  {n:<3} {actual:<8} {predicted}")

# The polynomial stays exact arbitrarily far out.
n = 10**9
print(f"\nmu(I^{n}) = {poly(n)}")
