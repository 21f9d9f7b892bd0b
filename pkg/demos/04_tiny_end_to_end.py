"""The whole pipeline at toy scale, in about ten seconds.

Runs every stage of ``configs/tiny.toml`` into a fresh directory: dataset,
baseline diffusion, g_skel, reward fine-tuning, generation, evaluation and
the report bundle.  The numbers are far too small a run to mean anything;
the point is the shape of the artifacts.  ``drpose all -c configs/tiny.toml``
does the same from the shell.

    python demos/04_tiny_end_to_end.py [out_dir]
"""
import logging
import os
import sys
import tempfile

from drpose.pipeline import read_csv, resolve_config, run_pipeline

logging.basicConfig(level=logging.INFO, format="%(message)s")
root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
out = sys.argv[1] if len(sys.argv) > 1 else tempfile.mkdtemp(prefix="drpose_tiny_")
cfg = resolve_config(os.path.join(root, "configs", "tiny.toml"), [f'out_dir="{out}"'], env={})
run, _ = run_pipeline(cfg)

print("\nmodel       PoseScore   reproj(px)  PSNR(dB)")
for row in read_csv(run.p("eval/summary.csv")):
    print(f"{row['model']:<11} {float(row['pose_score']):>9.4f}   {float(row['reproj_err']):>9.3f}  "
          f"{float(row['psnr']):>8.2f}")
print("\nartifacts:")
for base, _, names in sorted(os.walk(out)):
    for n in sorted(names):
        print("  " + os.path.relpath(os.path.join(base, n), out))
