"""Two pinhole cameras, one planar face: where depth comes from.

A point (x, y, z) photographed with focal length f lands at
(f*x/z, -f*y/z). Shift the camera sideways by T and the same point lands
T*f/z away in the image: the disparity. Nothing about the object needs to
be known; the shift between its two projections already encodes 1/z.
"""

import numpy as np

from stereorelief import Camera, Point3, project, project_points, synth_scene
from stereorelief.geometry import disparities

f = 1.0
cam1 = Camera(f)
cam2 = Camera(f, translation=(0.5, 0.0))

p = Point3(1.0, 0.0, 5.0)
q1 = project(p, cam1)
q2 = project(p, cam2)
print(f"point {p}")
print(f"  camera 1 sees it at ({q1.u:.3f}, {q1.v:.3f})")
print(f"  camera 2 sees it at ({q2.u:.3f}, {q2.v:.3f})")
print(f"  disparity d = {q1.u - q2.u:.3f},  f*T/d = {f * 0.5 / (q1.u - q2.u):.3f} = z\n")

# The relation holds for every point, whatever the depth:
zs = np.linspace(2.0, 20.0, 7)
pts = np.column_stack([np.full_like(zs, 0.7), np.full_like(zs, -0.3), zs])
d = np.linalg.norm(project_points(pts, cam1) - project_points(pts, cam2), axis=1)
print("z        disparity   d*z (should be f*T = 0.5)")
for z, di in zip(zs, d):
    print(f"{z:6.2f}   {di:9.5f}   {di * z:.12f}")

# A tilted planar face: corner depths 4..6 give corner disparities 1/8..1/12.
quad = np.array([[-1, -1, 4], [-1, 1, 4], [1, 1, 6], [1, -1, 6]], float)
(obs,) = synth_scene([quad], cam1, cam2)
print("\ntilted face corner disparities:", np.round(disparities(obs), 5))
print("expected f*T/z at the corners :", np.round(0.5 / quad[:, 2], 5))
