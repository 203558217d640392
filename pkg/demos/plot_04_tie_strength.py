"""
Weak and strong ties
====================

Tie strength is the overlap of the two ends' friendships. Less clustered
networks put more of their ties at low strength.
"""

import tempfile
from pathlib import Path

from tieentropy.experiments import cdf_at, strength_cdf
from tieentropy.generators import GenParams, generate
from tieentropy.graph import avg_clustering
from tieentropy.io import write_cdf_csv
from tieentropy.plot import plot_cdf

out = Path(tempfile.mkdtemp())
files, labels = [], []
for p in (0.02, 0.1, 0.8):
    g = generate(GenParams("sw", 2000, K=10, p=p, seed=0))
    cdf = strength_cdf(g)
    print(f"p={p}: c={avg_clustering(g):.3f}, share of ties with w <= 0.1: {cdf_at(cdf, 0.1):.3f}")
    files.append(out / f"cdf_{p}.csv")
    labels.append(f"p={p}")
    write_cdf_csv(cdf, files[-1])

plot_cdf(files, out / "cdf.svg", labels)
print("wrote", out / "cdf.svg")
