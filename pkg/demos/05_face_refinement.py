"""Face cropping, identity embedding, refinement, and blend-back.

Runs the refiner stage in isolation with the frozen stub recognizer:
crop the face region, embed the target identity, refine, and blend the
result back so only the face box changes. Outputs land in demos/out/05/.
"""

from pathlib import Path

import numpy as np
import torch

from personsynth import fileio
from personsynth.frn import (
    FrnModel,
    FaceEmbedderStub,
    blend_face,
    crop_face,
    embed_face,
    frn_desk_config,
    identity_loss,
    refine,
)
from personsynth.pipeline import image_to_tensor, tensor_to_image
from personsynth.synthetic import synth_scene

out = Path(__file__).parent / "out" / "05"
out.mkdir(parents=True, exist_ok=True)

torch.manual_seed(0)
rng = np.random.default_rng(0)
scene, image = synth_scene(rng, shape=(128, 128), n_persons=1)
target_scene, target_image = synth_scene(rng, shape=(128, 128), n_persons=1)

frame = image_to_tensor(image)
crop = crop_face(frame, scene.face, margin=0.3)
print(f"face box (x0, y0, x1, y1): {crop.box}, margin 0.3")

backend = FaceEmbedderStub(dim=64, seed=0)
target_crop = crop_face(image_to_tensor(target_image), target_scene.face)
descriptor = embed_face(target_crop, backend)
print(f"identity descriptor dim: {descriptor.dim}")

model = FrnModel(frn_desk_config(descriptor_dim=64, seed=0))
refined, face_mask = refine(model, crop, descriptor)
blended = blend_face(frame, refined, face_mask, crop.box)

drift = identity_loss(embed_face(crop, backend).vector, descriptor.vector)
print(f"identity distance between input crop and target: {float(drift):.4f}")

changed = (blended - frame).abs().sum(dim=0) > 0
x0, y0, x1, y1 = crop.box
outside = torch.ones_like(changed)
outside[y0 : y1 + 1, x0 : x1 + 1] = False
print(f"pixels changed outside the face box: {int(changed[outside].sum())} (must be 0)")

fileio.save_rgb_png(out / "input.png", tensor_to_image(frame))
fileio.save_rgb_png(out / "refined_blend.png", tensor_to_image(blended))
fileio.save_gray_png(out / "face_mask.png", (face_mask[0].numpy() * 255).round().astype(np.uint8))
print(f"wrote outputs to {out}")
