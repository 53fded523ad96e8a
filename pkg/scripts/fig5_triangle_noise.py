"""Recover the triangle wave f3 at N = 501 under Gaussian noise with sigma = 0.15 and 0.3.

For each noise level a lambda sweep is also written, since the best lambda
depends on the noise level.
"""

import sys

from lassotrig.cli import main

out = sys.argv[1] if len(sys.argv) > 1 else "results/fig5"
for sigma in ("0.15", "0.3"):
    main(["recover", "--signal", "f3", "--n", "501", "--sigma", sigma, "--lambda", "0.1",
          "--seed", "0", "--plot", "--out", f"{out}/sigma_{sigma}"])
    main(["lambda-sweep", "--signal", "f3", "--n", "501", "--sigma", sigma,
          "--lambda-grid", "0,1e-3,3e-3,1e-2,3e-2,1e-1,3e-1", "--repeats", "5", "--seed", "0",
          "--plot", "--out", f"{out}/sigma_{sigma}"])
