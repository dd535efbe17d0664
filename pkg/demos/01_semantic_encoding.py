"""Semantic maps, face hulls, and bounding-box channels.

Walks the core encodings: fold a raw parser image into the 8-code
palette, rasterize face hulls from keypoints, and derive tight boxes.
Outputs land in demos/out/01/.
"""

from pathlib import Path

import numpy as np

from personsynth import fileio
from personsynth.palette import DEFAULT_PALETTE, GROUP_NAMES, reduce_labels
from personsynth.semantics import (
    SemanticMap,
    bbox_channel_from_labels,
    face_hull_channel,
)

out = Path(__file__).parent / "out" / "01"
out.mkdir(parents=True, exist_ok=True)
rng = np.random.default_rng(0)

print("palette groups and codes:")
for name, code in zip(GROUP_NAMES, DEFAULT_PALETTE.codes):
    print(f"  {code:>3} {name}")

# A fake raw parser output: 19 possible labels, a few regions.
raw = np.zeros((96, 96), dtype=np.uint8)
raw[10:20, 30:60] = 2    # hair
raw[20:35, 35:55] = 11   # face
raw[35:70, 25:65] = 4    # upper-clothes
raw[70:90, 30:60] = 6    # pants
reduced = reduce_labels(raw)
print(f"\nraw labels {sorted(np.unique(raw).tolist())} -> codes {sorted(np.unique(reduced).tolist())}")
fileio.save_semantic_png(out / "reduced.png", SemanticMap(reduced))

# Face hulls from two keypoint rings.
ring = lambda cx, cy, r: [
    (cx + r * np.cos(a), cy + r * np.sin(a)) for a in np.linspace(0, 2 * np.pi, 8, endpoint=False)
]
face = face_hull_channel([ring(45, 27, 9), ring(70, 60, 6)], raw.shape)
print(f"face channel lit pixels: {int((face.pixels != 0).sum())}")
fileio.save_binary_png(out / "face.png", face.pixels)

# Tight box of the person support.
box_channel = bbox_channel_from_labels(reduced)
print(f"tight person box (x0, y0, x1, y1): {box_channel.box}")
fileio.save_binary_png(out / "bbox.png", box_channel.pixels)

print(f"\nwrote {sorted(p.name for p in out.iterdir())} to {out}")
