"""Exact normal forms and lattice arithmetic.

Everything in ckinv reduces to integer linear algebra that never rounds:
Smith and Hermite normal forms with their unimodular transforms, kernel
bases, and cokernel invariants.
"""

import numpy as np

from ckinv import (cokernel_invariants, hermite_normal_form, kernel_basis,
                   lattice_contains, smith_normal_form)

# A small integer matrix and its Smith normal form u @ m @ v = s.
m = np.array([[2, 4, 4],
              [-6, 6, 12],
              [10, -4, -16]])
dec = smith_normal_form(m)
print("matrix:\n", m)
print("smith diagonal:", dec.diagonal)
reassembled = dec.u @ np.asarray(m, dtype=object) @ dec.v
print("u @ m @ v == s:", bool((reassembled == dec.s).all()))

# The diagonal reads off the cokernel: Z^3 / (column lattice of m).
print("cokernel:", cokernel_invariants(m))

# Kernels are returned as full lattice bases (columns).
k = kernel_basis([[1, 1, 1]])
print("\nkernel of the sum map Z^3 -> Z:")
print(k.T)

# Hermite form answers membership questions exactly.
cols = [[2, 1], [0, 3]]
print("\ncolumn lattice of", cols)
print("  contains (2, 3)?", lattice_contains(cols, [2, 3]))
print("  contains (1, 0)?", lattice_contains(cols, [1, 0]))
h = hermite_normal_form(cols)
print("hermite form:\n", h.h)

# Entries can be arbitrarily large; the arithmetic stays exact.
big = [[10 ** 40, 1], [0, 10 ** 40]]
print("\nhuge-entry smith diagonal:", smith_normal_form(big).diagonal)
