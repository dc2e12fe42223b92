"""Linking glues two staircases into one; unlinking recovers the parts.

The minimal generators of the link are the union of shifted copies of the
parts' generators, so mu(I (.) J) = mu(I) + mu(J) - 1.  This is the algebra
the stable decomposition uses: a stabilized power I^s is the link of its
components, and higher powers only move the link points.

Run with: python demos/04_links.py
"""

from stairpow import MonomialIdeal, link, link_many, serialize_terms, unlink

I = MonomialIdeal.of((0, 2), (1, 1), (3, 0))
J = MonomialIdeal.of((0, 3), (2, 1), (3, 0))
print(f"I = {serialize_terms(I)}   (mu = {I.mu})")
print(f"J = {serialize_terms(J)}   (mu = {J.mu})")

L = link(I, J)
print(f"I (.) J = {serialize_terms(L)}   (mu = {L.mu} = {I.mu} + {J.mu} - 1)")

# Chains of links keep track of the gluing points, which makes the
# operation invertible.
chain = link_many([I, J, I])
print(f"\nchain ideal: {chain.ideal.gens}")
print(f"link points: {chain.link_points}")

parts = unlink(chain.ideal, chain.link_points)
for idx, part in enumerate(parts):
    print(f"part {idx}: {serialize_terms(part)}")
assert parts[0].gens == I.anchor()[0].gens
assert parts[1].gens == J.anchor()[0].gens
assert parts[2].gens == I.anchor()[0].gens
print("unlink recovered every part exactly")
