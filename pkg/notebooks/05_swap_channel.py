"""
A channel that only swaps 0 and 1
=================================

Words without 0s and 1s cannot be hit at all, so they stand alone.  The
rest pair up, and the code is perfect.
"""

from collections import Counter

from feedback_codes import swap_capacity, swap_channel_build
from feedback_codes.cloud import expand

for q, n in [(4, 2), (10, 3)]:
    code = swap_channel_build(q, n)
    sizes = Counter(len(expand(c, code.partition)) for c in code.clouds)
    print(f"q={q} n={n}: {len(code)} clouds (capacity {swap_capacity(q, n)}), cloud sizes {dict(sizes)}")
