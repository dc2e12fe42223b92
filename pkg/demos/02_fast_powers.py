"""Compare the naive power loop against assembled powers on a large exponent.

The assembled method emits G(I^(s+l)) directly from the stable decomposition
using one exponent addition per emitted generator, so the cost is linear in
the size of the answer rather than in the amount of intermediate arithmetic.

Run with: python demos/02_fast_powers.py
"""

import time

from stairpow import (
    MonomialIdeal,
    assemble_power,
    assemble_power_counted,
    naive_power,
    stable_decomposition,
)

I = MonomialIdeal.of((0, 10), (1, 9), (2, 5), (4, 4), (5, 3), (6, 2), (12, 1), (15, 0))
dec = stable_decomposition(I)
print(f"mu(I) = {I.mu}, s = {dec.s}")

# Cross-check against the naive product at a moderate exponent.
n = dec.s
t0 = time.perf_counter()
fast = assemble_power(dec, n)
t_fast = time.perf_counter() - t0
t0 = time.perf_counter()
slow = naive_power(I, n)
t_slow = time.perf_counter() - t0
assert fast.gens == slow.gens
print(f"n = {n}: mu = {fast.mu}, assembled {t_fast * 1e3:.1f} ms vs naive {t_slow * 1e3:.1f} ms")

# The naive loop is hopeless at n = s + 10000; assembly is near-instant.
n = dec.s + 10_000
t0 = time.perf_counter()
huge, additions = assemble_power_counted(dec, n)
t_fast = time.perf_counter() - t0
print(f"n = {n}: mu = {huge.mu} in {t_fast * 1e3:.1f} ms")

# Every emitted generator costs exactly one exponent addition.
assert additions == huge.mu
print(f"exponent additions performed: {additions} (= mu, one per generator)")
