"""Solve Carroll's ten-term sorite three ways.

Run with ``python3 demos/carroll.py``.
"""

import time
from pathlib import Path

from categorica import Sorite, eliminated_lc, lit, parse_sorite, retinends, solve, substitution_trace
from categorica.sorites import verify_universal

text = (Path(__file__).parent.parent / "tests" / "data" / "carroll.txt").read_text()
lines = parse_sorite(text)
s = Sorite.of([x.statement for x in lines])
print(f"{len(lines)} premises over {s.universe.n} terms, {s.universe.cell_count} cells")
for x in lines:
    print(f"  line {x.line}: {x.statement.equation()}")

t = time.perf_counter()
trace = substitution_trace(s, [lit("e"), lit("l")])
print("\ntrace:", trace.text())
print("premises used in order", trace.order)

elim = eliminated_lc(s)
print("\nretinends:", " ".join(sorted(str(x) for x in retinends(s))))
print("eliminated conclusion:", ", ".join(elim.equations()))
print("c'el empty?", verify_universal(s, [lit("c'"), lit("e"), lit("l")]))

# no single literal is squeezed into one cell; it takes the product el
print(f"\none-literal pinpoints: {len(solve(s))}")
print(f"all of it took {time.perf_counter() - t:.3f} s")
