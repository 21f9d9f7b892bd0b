"""What the PoseScore reward measures.

The reward compares predicted per-joint heatmaps with heatmaps rendered from
the ground-truth skeleton.  Feeding the rendered targets back as the
"prediction" shows its scale: zero for a perfect binary match, a small
negative number for the soft Gaussian targets, and a steady decline as the
joints drift from where they should be.

    python demos/03_pose_score.py
"""
import numpy as np

from drpose.autodiff import Tensor, precision
from drpose.reward import RewardConfig, reward_from_prediction, skeletal_targets
from drpose.skeleton import CameraSet, Pose, SkeletonSpec, forward_kinematics, make_identity, project_views

spec, cams, cfg = SkeletonSpec.default(), CameraSet(), RewardConfig()
ident = make_identity(3, spec)
joints = project_views(forward_kinematics(Pose.rest(), spec, ident), cams)[None]  # (1, V, J, 2)
target = skeletal_targets(joints, cfg.kernel_sigma, cams.height, cams.width, dtype=np.float64)

with precision(np.float64):
    binary = (target > 0.5).astype(np.float64)
    print(f"binary target scored against itself: r = {float(reward_from_prediction(Tensor(binary), binary).data):.2e}")
    print(f"soft target scored against itself:   r = {float(reward_from_prediction(Tensor(target), target).data):.4f}")
    print("\njoint shift (px)   r")
    for shift in (0.0, 0.5, 1.0, 2.0, 4.0):
        moved = skeletal_targets(joints + shift, cfg.kernel_sigma, cams.height, cams.width, dtype=np.float64)
        r = float(reward_from_prediction(Tensor(np.clip(moved, 1e-4, 1 - 1e-4)), target).data)
        print(f"  {shift:>4.1f}            {r:.4f}")
