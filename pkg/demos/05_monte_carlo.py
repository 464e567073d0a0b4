"""
A small Monte Carlo run
=======================

Every trial draws a fresh message and a fresh worst-case pattern (a full
window of delta = w deletions), then checks the decoder's answer. Failure
means the decoder abstained between candidates; wrong answers would be
counted separately and have never been observed. Seeds make every number
reproducible, and worker processes cannot change them.
"""

from gccodes import SimConfig, report_to_csv, run_trials

cfg = SimConfig(k_list=(64, 128, 256), c=3, trials=2000,
                delta_frac=1.0, master_seed="demo")
report = run_trials(cfg, progress=True)
print()
print(report_to_csv(report))

# the same numbers at c=4: one extra check parity per guess drives the
# ambiguity rate down by roughly 2^-ell
cfg4 = SimConfig(k_list=(64, 128, 256), c=4, trials=2000,
                 delta_frac=1.0, master_seed="demo")
print(report_to_csv(run_trials(cfg4)))
