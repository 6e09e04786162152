"""
Two feedback instances are enough
=================================

A one-time feedback code of length n-1 doubled once already matches the
complete-feedback optimum.  For q=3 and n=9 the textbook split falls short
and a different split with a greedy suffix code is used instead.
"""

from feedback_codes import game_check, m_cf, theorem5_condition, two_instance
from feedback_codes.constructions.chains import two_instance_plan

for n in range(6, 10):
    split = theorem5_condition(3, n)
    n1, n2, suffix = two_instance_plan(3, n)
    code = two_instance(3, n)
    print(f"n={n} split holds={split.holds} used=({n1},{n2}) suffix={len(suffix.codewords)}"
          f" size={len(code)} target={m_cf(3, n)} blocks={code.partition.lengths}")

print(game_check(two_instance(3, 8)).ok)
