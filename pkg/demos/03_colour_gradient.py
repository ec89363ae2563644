"""Di Zenzo colour gradient from the channel structure tensor."""
import numpy as np

from qhfedge.gradient import (f_theta, gradient_direction, gradient_field, gradient_magnitude,
                              structure_tensor)

# a tensor with only horizontal variation points along the row axis (theta = 0)
print("direction of (3, 0, 0):", gradient_direction(3.0, 0.0, 0.0))
print("direction of (1, 1, 1) / pi:", gradient_direction(1.0, 1.0, 1.0) / np.pi)

# the magnitude is the largest squared rate of change over all directions
exx, eyy, exy = 2.0, 1.0, 0.7
theta = np.linspace(-np.pi / 2, np.pi / 2, 100001)
print("sweep max:", f_theta(exx, eyy, exy, theta).max(),
      " closed form:", gradient_magnitude(exx, eyy, exy))

# a red/green diagonal edge: equal luminance on both sides, yet a strong gradient
r, c = np.mgrid[0:16, 0:16]
red = (r > c).astype(float)
green = 1.0 - red
blue = np.zeros_like(red)
g = gradient_field([red, green, blue])
print("peak magnitude:", g.magnitude.max())
# across the middle of the diagonal the gradient points at -45 degrees
print("direction at (8, 7) / pi:", g.direction[8, 7] / np.pi)

# channels enter symmetrically
st1 = structure_tensor([red, green, blue])
st2 = structure_tensor([blue, red, green])
print("channel order irrelevant:", all(np.allclose(a, b) for a, b in zip(st1, st2)))
