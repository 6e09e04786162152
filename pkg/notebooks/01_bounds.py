"""
Size bounds for single-error codes with feedback
================================================

Every number here is an exact Python integer, so even q=6, n=97 is fine.
"""

from feedback_codes import bounds

# the sphere-packing ceiling and the complete-feedback optimum
for n in range(4, 13):
    U, p, H = bounds.dada_quantities(3, n)
    print(f"n={n:2d}  H={H:6d}  U={U:6d}  p={p:4d}  M_cf={bounds.m_cf(3, n):6d}")

# p < q^2 forces the U + q - r branch
U, p, H = bounds.dada_quantities(4, 6)
print("q=4 n=6:", U, p, H, "->", bounds.m_cf(4, 6))

# one feedback instance already reaches the Hamming bound here
big = bounds.theorem2_size(6, 97, 92, 5)
print("q=6 n=97 split 92+5 hits H exactly:", big == bounds.hamming_bound(6, 97) == 6**97 // 486)

# the full report, as printed by `feedback-codes bounds`
print(bounds.compute_bounds(6, 97).best_n1)
