"""The full three-stage insertion chain on a synthetic dataset.

Writes a small dataset, trains each network for a handful of steps (so
weights are at least not random noise), then inserts a target person
into a scene with an optional bounding box, saving every intermediate:
pose map, rendered person, blending mask, composite, refined final.
Outputs land in demos/out/07/.
"""

from pathlib import Path

import numpy as np

from personsynth import fileio
from personsynth.dataset import ingest
from personsynth.frn import FaceEmbedderStub
from personsynth.pipeline import (
    InsertionModels,
    InsertionRequest,
    RunConfig,
    insert_person,
    load_checkpoint,
    train,
)
from personsynth.semantics import SemanticMap
from personsynth.synthetic import write_synthetic_dataset

out = Path(__file__).parent / "out" / "07"
data_root = out / "data"
runs = out / "runs"
out.mkdir(parents=True, exist_ok=True)

rng = np.random.default_rng(0)
if not (data_root / "images").exists():
    write_synthetic_dataset(data_root, rng, persons_per_image=[2, 2, 1], shape=(96, 96))
index = ingest(data_root)
print(
    f"dataset: {len(index.samples)} images, {len(index.mcrn_samples)} renderer samples, "
    f"{len(index.egn_samples)} pose samples"
)

steps = 150
for net in ("egn", "mcrn", "frn"):
    config = RunConfig(net=net, preset="desk", max_steps=steps, out_dir=str(runs), seed=0, checkpoint_every=0)
    result = train(index, config, progress=True)
    print(f"trained {net} for {result.steps} steps -> {result.checkpoint_path}")

egn, _ = load_checkpoint(runs / "egn" / "checkpoint.pt")
mcrn, _ = load_checkpoint(runs / "mcrn" / "checkpoint.pt")
frn, _ = load_checkpoint(runs / "frn" / "checkpoint.pt")
models = InsertionModels(
    mcrn=mcrn,
    egn=egn,
    frn=frn,
    face_backend=FaceEmbedderStub(dim=frn.config.descriptor_dim, seed=0),
)

scene_parse, scene_image = index.load_scene("scene_0000")
target_parse, target_image = index.load_scene("scene_0002")
req = InsertionRequest(
    scene_parse=scene_parse,
    scene_image=scene_image,
    target_image=target_image,
    target_parse=SemanticMap(target_parse.persons[0]),
    target_keypoints=target_parse.keypoints[0],
    bbox=(30, 10, 40, 75),
    seed=0,
)
result = insert_person(models, req)
print(f"insertion done (retries: {result.retries}, seed: {result.seed})")

fileio.save_rgb_png(out / "scene.png", scene_image)
fileio.save_semantic_png(out / "pose_semantic.png", result.pose.semantic)
fileio.save_binary_png(out / "pose_face.png", result.pose.face.pixels)
fileio.save_rgb_png(out / "rendered.png", result.rendered)
fileio.save_gray_png(out / "mask.png", result.mask)
fileio.save_rgb_png(out / "composited.png", result.composited)
fileio.save_rgb_png(out / "final.png", result.final)
print(f"wrote all intermediates to {out}")
