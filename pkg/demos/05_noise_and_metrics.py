"""Noise models and the PSNR/SSIM comparison of edge maps."""
import numpy as np

from qhfedge.hardy import HardyParams
from qhfedge.metrics import edge_plane, psnr, ssim
from qhfedge.noise import NOISE_KINDS, NoiseSpec, add_noise
from qhfedge.pipeline import DetectParams, detect_edges
from qhfedge.scenes import shapes_scene

img = shapes_scene(128)

# each kind at its default strength, seeded
for kind in NOISE_KINDS:
    spec = NoiseSpec(kind, seed=3)
    noisy = add_noise(img, spec)
    print(f"{kind:12s} strength {spec.strength:<6g} image PSNR {psnr(noisy[..., 0], img[..., 0]):.2f} dB")

# identical inputs: PSNR is infinite and SSIM exactly 1
plane = edge_plane(detect_edges(img))
print("psnr(x, x) =", psnr(plane, plane), " ssim(x, x) =", ssim(plane, plane))

# compare noisy and clean edge maps for the QHF and raw detectors
params = DetectParams(HardyParams(4, 4))
for kind in NOISE_KINDS:
    noisy = add_noise(img, NoiseSpec(kind, seed=0))
    row = []
    for detector in ("qhf", "idz_raw"):
        clean = edge_plane(detect_edges(img, params, detector))
        edges = edge_plane(detect_edges(noisy, params, detector))
        row.append(ssim(edges, clean))
    print(f"{kind:12s} SSIM qhf {row[0]:.3f}  idz_raw {row[1]:.3f}")
