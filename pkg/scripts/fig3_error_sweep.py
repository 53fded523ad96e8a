"""L2 and uniform errors for N = 101..599 odd under 5 dB noise, averaged over repeats.

The lambda grid 1e-5..1e-1 is swept and the best lambda is flagged in
error_sweep_lambda.csv.
"""

import sys

from lassotrig.cli import main

out = sys.argv[1] if len(sys.argv) > 1 else "results/fig3"
repeats = sys.argv[2] if len(sys.argv) > 2 else "10"
for signal in ("f1", "f2"):
    main(["error-sweep", "--signal", signal, "--n-range", "101:599:2", "--snr-db", "5",
          "--lambda-grid", "1e-5,1e-4,1e-3,1e-2,1e-1", "--repeats", repeats, "--seed", "0",
          "--plot", "--out", f"{out}/{signal}"])
