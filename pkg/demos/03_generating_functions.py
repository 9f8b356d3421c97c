# coding: utf-8

# # Generating functions, expanded exactly
#
# Each catalog entry is a rational function in z with polynomial coefficients
# in x. Expanding it is a linear recurrence, so no floating point is involved.

from losanitsch.families import L_poly, pentagonal_f, euler_product
from losanitsch.series import CATALOG, catalog_gf, series_expand

for name, entry in CATALOG.items():
    print(name, entry.title)

coeffs = series_expand(catalog_gf("3.11"), 6)
for n, c in enumerate(coeffs):
    print(n, c, c == L_poly(n))

# ## A column of the even-subset triangle
#
# The codiagonal e(n, n-k) needs different exponents for even and odd k.
# The single compact formula agrees only at k = 0.

for k in range(3):
    split = [c[0] for c in series_expand(catalog_gf("3.13", k=k), 12)]
    compact = [c[0] for c in series_expand(catalog_gf("3.13c", k=k), 12)]
    print(k, split, split == compact)

# ## Pentagonal numbers
#
# The alternating q-sums f(n) are partial sums of Euler's product.

print(pentagonal_f(12))
print(euler_product(26))
