#!/usr/bin/env python3
"""Cluster the fixture corpus with k-means and inspect the labeled clusters:
centroids, sizes, and the inertia trace of the winning restart."""

from pathlib import Path

from chartlab.catalog import build_catalog
from chartlab.cluster import KMeansConfig
from chartlab.features import VECTOR_FEATURES

DATA = Path(__file__).parent.parent / "tests" / "data"

with open(DATA / "billboard.csv", newline="", encoding="utf-8") as bb, \
        open(DATA / "spotify.csv", newline="", encoding="utf-8") as sp:
    catalog = build_catalog(bb, sp, kmeans_config=KMeansConfig(k=5, seed=42))

meta = catalog.clustering
print(f"k={meta.k} seed={meta.seed} restarts={meta.restarts}")
print(f"winning inertia {meta.inertia:.4f} after {meta.iterations_run} iterations\n")

header = "  ".join(f"{name[:6]:>6}" for name in VECTOR_FEATURES)
print(f"{'cluster':<24} {'size':>4}  {header}")
for cluster in catalog.clusters:
    centroid = "  ".join(f"{value:6.3f}" for value in cluster.centroid)
    print(f"{cluster.id} {cluster.name:<22} {len(cluster.member_ids):>4}  {centroid}")

print("\nfun facts:")
for cluster in catalog.clusters:
    print(f"  {cluster.name}: {cluster.fun_fact}")
