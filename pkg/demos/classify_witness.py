"""Position classification and witness points on Schubert varieties.

Classifies the worked family of kernels against X_a for a = (7,4,1),
then builds a cell point L, finds a witness plane H through it in two
boundary modes, and confirms the tangent-space codimension.
"""

from pierikit import (
    DecSeq,
    cell_point,
    classify_pieri,
    limit_at_zero,
    standard_flag,
    tangent_codim,
    witness_point,
    worked_family,
    worked_kernel,
)

a = DecSeq(9, (7, 4, 1))
flag = standard_flag(9)

print("classifying L(s, t) against X_a, a = 741:")
for s, t in ((1, 1), (2, 3), (0, 1), (0, 2)):
    got = classify_pieri(a, flag, worked_kernel(s, t), 2)
    extra = f"  equality rows {got.equality_set}" if got.equality_set else ""
    print(f"  s={s} t={t}: {got.verdict}{extra}")

closed = limit_at_zero(worked_family())
got = classify_pieri(a, flag, closed, 2)
print(f"  t -> 0 limit: {got.verdict}")
print()

# a fresh L with the generic intersection profile, then witnesses on it
L = cell_point(a, 2, flag, seed=3)
print(f"cell point L, dim {L.dim}:")
for row in L.basis:
    print("  ", row)
print()

for mode in (2, 3):
    H = witness_point(a, flag, L, mode, seed=5)
    codim = tangent_codim(H, a, flag, L)
    print(f"witness from boundary mode {mode}: dim H = {H.dim}, "
          f"tangent codim = {codim}")
