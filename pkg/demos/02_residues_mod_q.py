# coding: utf-8

# # q-binomials folded mod q^p - 1
#
# The Gaussian binomial [n k] counts words by inversions. Folding exponents
# mod p keeps only the residue of the inversion number, so the coefficient of
# q^j counts words with inv = j mod p.

from losanitsch.algebra import cyclotomic_reduce, q_binomial, residue_reduce
from losanitsch.oracle import inv_residue_counts
from losanitsch.cli import render_matrix
from losanitsch.triangles import epsilon_table, lambda_table

g = q_binomial(6, 3)
print(g)
for p in (2, 3, 5):
    print(p, residue_reduce(g, p), inv_residue_counts(6, 3, p))

# ## Two residue triangles
#
# epsilon tracks subset sums, lambda tracks inversions. For p = 2 the two
# components of lambda are L and Lbar.

print(render_matrix(lambda_table(7, 2)))
print(render_matrix(epsilon_table(6, 3)))

# At a primitive p-th root of unity only the cyclotomic remainder survives.

for k in range(1, 5):
    print(k, cyclotomic_reduce(epsilon_table(5, 5)[5, k]))
