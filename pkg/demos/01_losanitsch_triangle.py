# coding: utf-8

# # The Losanitsch triangle from subset sums
#
# Count the k-subsets of {1..n} whose elements add up to an even number.
# Folding that table together with the odd counts gives the Losanitsch
# triangle, which also counts binary words up to reversal.

from losanitsch import oracle
from losanitsch.cli import render_matrix
from losanitsch.triangles import L_tables, column_composition, e_o_tables

# ## Even and odd subsets
#
# Brute force first, so there is something to compare the recursion with.

n = 6
print([oracle.subset_residue_counts(n, k, 2) for k in range(n + 1)])

e, o = e_o_tables(n)
print(render_matrix(e))
print(render_matrix(o))

# ## Picking columns
#
# Column k of L comes from e when k is 0 or 3 mod 4 and from o otherwise.

L, Lbar = L_tables(n)
print("".join(column_composition(k) for k in range(n + 1)))
print(render_matrix(L))

# ## Words up to reversal
#
# L(n, k) is also the number of weight-k binary words of length n taken up to
# reversal. L - Lbar counts the palindromes among them.

for k in range(n + 1):
    classes, palindromes = oracle.reversal_classes(n, k)
    print(k, classes, L[n, k], palindromes, L[n, k] - Lbar[n, k])

# The bracelet reading: n white beads, k red ones and a single blue bead.

print([oracle.bracelet_count(n - k, k) for k in range(n + 1)], list(L.row(n)))
