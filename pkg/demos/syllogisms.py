"""Walk through the 64 premise pairs: census, conclusions, names, symmetry.

Run with ``python3 demos/syllogisms.py``.
"""

from collections import Counter

from categorica import PCP, canonicalize, classify, derive, enumerate_all, mood_name, parse_statement, normalize

print("== census")
pcps = enumerate_all()
print(len(pcps), "premise pairs;", dict(Counter(classify(q).name for q in pcps)))
found = {q: derive(q) for q in pcps}
entailing = [q for q, cs in found.items() if cs]
print(len(entailing), "of them pinpoint a cell")

print("\n== Barbara, typed in by hand")
q = PCP(normalize(parse_statement("All M are P")), normalize(parse_statement("All S are M")))
print("premises:", ", ".join(p.equation() for p in q.premises))
print("type:", classify(q).name, " name:", mood_name(q))
for c in derive(q):
    print("  ", c.text(), " reads as", c.middle_dropped)

print("\n== every entailing pair is a relabeled representative")
by_rep = Counter()
for q in entailing:
    f = canonicalize(q)
    by_rep[f.representative] += 1
    if q.code in ("AE'", "E'A", "OA", "IA'"):
        print(f"  {q.code:4} {str(mood_name(q)):12} -> {f}")
print(dict(by_rep))
