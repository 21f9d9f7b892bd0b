"""From synthetic motion to a diverse, renderable pose dataset.

Motion sequences are generated, farthest-point sampling picks poses that are
far apart in joint-feature space, and each pick pulls in its temporal
neighbours.  The diversity number compares the selected set against the
smaller-amplitude scan split used to pretrain the baseline models.  One
training pose is written out as a PNG strip of its four views.

    python demos/02_building_the_pose_dataset.py [out_dir]
"""
import os
import sys
import tempfile

import numpy as np

from drpose.dataset import DatasetConfig, build_dataset, farthest_point_sample, load_split, split_arrays
from drpose.report import encode_png, tile, upscale
from drpose.skeleton import SkeletonSpec

out = sys.argv[1] if len(sys.argv) > 1 else tempfile.mkdtemp(prefix="drpose_demo_")

# FPS on a toy cloud: the first pick is the point nearest the mean, then always the farthest one.
pts = np.array([[0.0, 0.0], [0.1, 0.0], [5.0, 0.0], [5.0, 5.0], [0.0, 5.0], [2.5, 2.5]])
print("FPS order on a square with a centre point:", farthest_point_sample(pts, 5).tolist())

cfg = DatasetConfig(n_sequences=20, sequence_length=120, n_select=30, scan_sequences=8, scan_train=200,
                    scan_holdout=40, heldout_sequences=4, heldout_count=40)
manifest = build_dataset(cfg, os.path.join(out, "data"))
c = manifest["counts"]
print(f"\nselected {c['fps_selected']} poses by FPS, {c['train']} after adding {cfg.neighbors} neighbours each")
for name, std in sorted(manifest["diversity_mean_std"].items()):
    print(f"  joint-location std  {name:<16} {std:.4f}")

split = load_split(os.path.join(out, "data"), "train")
arr = split_arrays(split, SkeletonSpec.default(), cfg.cameras())
views = (arr["x0"][0] + 1.0) / 2.0  # (V, H, W, RGBA)
rgb = [upscale(v[..., :3] * v[..., 3:] + (1 - v[..., 3:]), 4) for v in views]
path = os.path.join(out, "train_pose_0.png")
with open(path, "wb") as f:
    f.write(encode_png(tile([rgb])))
print(f"\nfour views of the first training pose: {path}")
