"""
Deletion patterns and the channel
=================================

Patterns name where bits vanish: each window gives a 1-indexed start and
the offsets deleted inside it. The text form round-trips, so simulation
logs stay replayable.
"""

import random

from gccodes import (
    delete_localized,
    gc_params,
    pattern_from_text,
    pattern_to_text,
    sample_pattern,
)

x = "100101001010010010110"

# two windows: offsets 0,1,3 of the window at 3, offsets 0,2 at 15
pat = pattern_from_text("3:0,1,3;15:0,2")
print("pattern:", pattern_to_text(pat))
print("deleted positions:", pat.positions())
print(f"before: {x}  ({len(x)} bits)")
y = delete_localized(x, pat)
print(f"after:  {y}  ({len(y)} bits)")

# a burst is just the window with every offset present
burst = pattern_from_text("5:0,1,2,3")
print("\nburst at 5:", delete_localized(x, burst), "== slice",
      x[:4] + x[8:] == delete_localized(x, burst))

# sampling draws a window start and an offset subset; the same seed
# always gives the same pattern
p = gc_params(64, 6, 3)
for seed in ("demo", "demo", "other"):
    pat = sample_pattern(p, 4, seed)
    print(f"seed {seed!r}: {pattern_to_text(pat)}")

# systematic-only mode keeps the window inside the message bits
rng = random.Random(1)
starts = {sample_pattern(p, 2, rng, mode="systematic-only").windows[0].start
          for _ in range(500)}
print(f"\nsystematic-only starts span [{min(starts)}, {max(starts)}], "
      f"k - w + 1 = {p.k - p.w + 1}")
