"""Dense-pose IoU metrics (DPBS, DPIS) and SSIM.

Builds a small directory of dense-index pairs, evaluates it, and shows
the sentinel masking rule on a both-empty pair. Outputs land in
demos/out/06/.
"""

from pathlib import Path

import numpy as np
from PIL import Image

from personsynth.metrics import SENTINEL, binary_iou, dpis, evaluate_directory, ssim

out = Path(__file__).parent / "out" / "06"
gt_dir, gen_dir = out / "gt", out / "gen"
gt_dir.mkdir(parents=True, exist_ok=True)
gen_dir.mkdir(parents=True, exist_ok=True)
rng = np.random.default_rng(0)


def save_pair(name, gt, gen):
    for d, img in ((gt_dir, gt), (gen_dir, gen)):
        rgb = np.stack([img] * 3, axis=-1).astype(np.uint8)
        Image.fromarray(rgb).save(d / f"{name}.png")


full = np.zeros((32, 32), dtype=np.uint8)
for idx in range(1, 25):
    full[(idx - 1) % 32, :] = idx
save_pair("identical_dense", full, full.copy())

half = np.zeros((32, 32), dtype=np.uint8)
half[:, :16] = 1
save_pair("half_vs_full", half, np.ones((32, 32), dtype=np.uint8))
save_pair("both_empty", np.zeros((32, 32), dtype=np.uint8), np.zeros((32, 32), dtype=np.uint8))

print("binary IoU, half vs full:", binary_iou(half, np.ones_like(half)))
print("binary IoU, both empty (sentinel):", binary_iou(np.zeros_like(half), np.zeros_like(half)))
print("DPIS, identical maps with every index present:", dpis(full, full.copy()))

report = evaluate_directory(gt_dir, gen_dir, pairing="by_name")
print("\ndirectory evaluation:")
for rec in report["per_image"]:
    print(f"  {rec['gt']:>20}: dpbs={rec['dpbs']} dpis={rec['dpis']:.4f}")
print(f"DPBS stats: {report['dpbs'].as_dict()}")
print(f"DPIS stats: {report['dpis'].as_dict()}")
assert report["dpbs"].masked_count == 1  # the both-empty pair

a = rng.integers(0, 256, size=(64, 64, 3)).astype(np.uint8)
noisy = np.clip(a.astype(np.int64) + rng.normal(0, 10, a.shape), 0, 255).astype(np.uint8)
print(f"\nssim(a, a) = {ssim(a, a):.6f}")
print(f"ssim(a, a + noise) = {ssim(a, noisy):.4f}")
print(f"wrote fixture directories under {out}")
