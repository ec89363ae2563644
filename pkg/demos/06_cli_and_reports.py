"""The command-line interface, driven from Python."""
import tempfile
from pathlib import Path

from qhfedge.cli import main
from qhfedge.imageio import save_image
from qhfedge.scenes import house_scene, shapes_scene

work = Path(tempfile.mkdtemp())
save_image(house_scene(128), work / "house.png")
save_image(shapes_scene(128), work / "shapes.ppm")

# qhfedge detect --s1 1.5 --s2 1.5 --threshold 0.1 house.png --out edges.png
main(["detect", "--s1", "1.5", "--s2", "1.5", "--threshold", "0.1",
      str(work / "house.png"), "--out", str(work / "edges.png")])
print("edge map:", (work / "edges.png").stat().st_size, "bytes")

# qhfedge noise house.png --noise salt_pepper:density=0.1 --seed 4 --out noisy.png
main(["noise", str(work / "house.png"), "--noise", "salt_pepper:density=0.1",
      "--seed", "4", "--out", str(work / "noisy.png")])

# qhfedge eval: one row per image, noise kind and detector, CSV on stdout
main(["eval", str(work / "house.png"), str(work / "shapes.ppm"), "--seed", "0"])

# a bad parameter returns a nonzero status with a message on stderr
print("exit status for --s1 -1:",
      main(["detect", "--s1", "-1", str(work / "house.png"), "--out", str(work / "x.png")]))

# the oracle cross-checks shipped with the package
main(["selftest"])
