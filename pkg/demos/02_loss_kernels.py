"""The loss kernels, their conventions, and the gradient checker.

Every kernel is a pure differentiable function; this script prints
hand-checkable values and the central finite-difference error of each.
"""

import torch

from personsynth.losses import (
    LossReport,
    finite_diff_check,
    fm_discriminator,
    fm_perceptual,
    grad_l1,
    hinge_d,
    hinge_g,
    l1,
)
from personsynth.perceptual import LinearFeatureBackend, PerceptualExtractor

g = torch.Generator().manual_seed(0)

print("l1 mean-reduction:", l1(torch.tensor([1.0, -1.0]), torch.zeros(2)).item())
ramp = torch.arange(6.0).repeat(4, 1)
print("grad_l1 of a unit horizontal ramp:", grad_l1(ramp).item())

print("hinge_g, two discriminators all at 1:", hinge_g([torch.ones(1, 1, 3, 3)] * 2).item())
print(
    "hinge_d at the margin (real=1, fake=-1):",
    hinge_d([torch.ones(4)], [-torch.ones(4)]).item(),
)
print(
    "hinge_d with both at 0 (one discriminator):",
    hinge_d([torch.zeros(4)], [torch.zeros(4)]).item(),
)

real = [[torch.zeros(4)]]
fake = [[torch.ones(4)]]
print("fm_discriminator, 4 elements differing by 1:", fm_discriminator(real, fake).item())

extractor = PerceptualExtractor(LinearFeatureBackend(seed=7).double())
x = torch.randn(1, 3, 16, 16, generator=g, dtype=torch.float64)
o = torch.randn(1, 3, 16, 16, generator=g, dtype=torch.float64)
print("fm_perceptual through the frozen linear stub:", fm_perceptual(x, o, extractor).item())

err = finite_diff_check(lambda t: grad_l1(t), [torch.randn(5, 5, generator=g, dtype=torch.float64).requires_grad_(True)])
print(f"grad_l1 finite-difference max relative error: {err:.2e}")

report = LossReport.build(
    {"adversarial_g": 0.5, "fm_d": 0.2, "mask_grad": 0.1},
    {"adversarial_g": 1.0, "fm_d": 10.0, "mask_grad": 5.0},
)
report.validate()
print(f"LossReport total_g = {report.total_g} (weighted sum, validated to 1e-12)")
