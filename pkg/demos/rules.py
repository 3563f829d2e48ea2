"""Rules against the model: where the classical rules work and where they fail.

Run with ``python3 demos/rules.py``.
"""

from categorica import (PCP, coexistence, derive, enumerate_all, esc_compatible, lit, normalize,
                        rofvca_predict, rofvs_dofa)

print("== classical rules on the 36 positive-term pairs")
r = rofvs_dofa()
for stage, n in r.stage_counts().items():
    print(f"  removed at {stage}: {n}")
print("  candidates:", " ".join(r.candidates))
print("  valid syllogisms:", ", ".join(f"{c} {st}" for c, st in r.members.items()))
print("  ei only:", " ".join(r.ei_only))

print("\n== generalized rules predict every conclusion")
bad = 0
for q in enumerate_all():
    if derive(q):
        p = rofvca_predict(q)
        readings = {(normalize(c.middle_dropped), c.ei_condition) for c in derive(q)
                    if c.middle_dropped is not None}
        bad += (p.statement, p.ei_condition) not in readings
print("  mispredictions:", bad)
print("  Darapti:", rofvca_predict(PCP.from_code("AA")))

print("\n== empty terms")
darapti = PCP.from_code("AA")
ei = [c for c in derive(darapti) if c.is_ei]
for x in ("S", "M'"):
    for v in esc_compatible(darapti, ei, [lit(x)]):
        print(f"  {x} empty, {v.item}: {'ok' if v.compatible else 'incompatible'}")

print("\n== pairs that cannot hold together without collapsing terms")
print("  Celarent with Camestres:", coexistence(PCP.from_code("EE'"), PCP.from_code("E'E")))
