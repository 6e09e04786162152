"""
Perfect codes with one feedback instance
========================================

No Hamming code exists for q=6, yet one feedback instance gives a perfect
code of length 7.
"""

from feedback_codes import corollary1, free_census, game_check, theorem3_rs_analog

code = corollary1(6, 2)
print(len(code), "messages, blocks", code.partition.lengths)
print("free words:", free_census(code))

# a cloud: root plus one continuation per possible error
c = code.clouds[0]
print("root", c.root)
for (pos, recv), tail in sorted(c.branches.items())[:4]:
    print(f"  error at {pos} read as {recv}: tail {tail}")

# exhaustive adversary, every message against every single error
rep = game_check(code)
print("game:", rep.ok, rep.outcomes, "outcomes")

# a different construction reaches the same optimum
print(len(theorem3_rs_analog(6, 7)) == len(code))
