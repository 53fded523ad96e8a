"""Recover the FM signal f2 from 5 dB noisy samples at N = 501."""

import sys

from lassotrig.cli import main

out = sys.argv[1] if len(sys.argv) > 1 else "results/fig4"
main(["recover", "--signal", "f2", "--n", "501", "--snr-db", "5", "--lambda", "0.1",
      "--seed", "0", "--plot", "--out", out])
main(["recover", "--signal", "f2", "--n", "501", "--snr-db", "5", "--lambda", "0.1",
      "--seed", "0", "--even-only", "--plot", "--out", f"{out}/even"])
