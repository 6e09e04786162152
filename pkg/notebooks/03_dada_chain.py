"""
Double and delete
=================

Start at n = q+1 and grow the length one symbol at a time.  Each step
prefixes every cloud with every symbol, repairs the copies from free
words, and deletes a few copies when the pools run dry.
"""

from feedback_codes import free_census, m_cf
from feedback_codes.constructions import DadaRound, complete_chain, dada, theorem3_rs_analog

for n in range(4, 9):
    code = complete_chain(3, n)
    print(n, len(code), m_cf(3, n), "free:", free_census(code))

# watch one step
trace: list[DadaRound] = []
out = dada(theorem3_rs_analog(4, 5), trace=trace)
for r in trace:
    print(f"{r.phase:16s} incomplete={r.incomplete} free={r.free}")
print("q=4 n=6:", len(out))
