"""Nonzero coefficient counts, classical vs Lasso, N = 1..59 odd, clean and 5 dB noise."""

import sys

from lassotrig.cli import main

out = sys.argv[1] if len(sys.argv) > 1 else "results/fig2"
for signal in ("f1", "f2", "f3"):
    main(["sparsity-sweep", "--signal", signal, "--n-range", "1:59:2", "--snr-db", "5",
          "--lambda", "0.1", "--seed", "0", "--plot", "--out", f"{out}/{signal}"])
