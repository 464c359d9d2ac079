"""One annotated face, start to finish: matrix fit, disparity, heights.

Four corner pairs are enough to pin down the 3x3 matrix that maps every
image-1 pixel of the face onto image 2. Pixels that moved farther are
nearer; heights 1 - k/d put near points on top, ready for printing.

Writes grayscale previews into demos/output/.
"""

from pathlib import Path

import numpy as np
from PIL import Image

from stereorelief import (
    Camera,
    CornerPairSet,
    FaceAnnotation,
    FaceCorner,
    PixelPoint,
    choose_k,
    estimate,
    face_disparities,
    heights_from_disparity,
    render_grayscale,
    synth_scene,
)

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

# A tilted plane z = 5 + 0.004*x_world, big enough to cover real pixels.
quad3 = np.array(
    [[-250, 200, 4.0], [250, 200, 6.0], [250, -200, 6.0], [-250, -200, 4.0]]
)
cam1, cam2 = Camera(1.0), Camera(1.0, (0.5, 0.0))
(obs,) = synth_scene([quad3], cam1, cam2)

h = estimate(CornerPairSet(obs.image1, obs.image2))
print("fitted matrix (row-major, canonical scale):")
print(np.array2string(h.m, precision=6, suppress_small=True))

face = FaceAnnotation(
    "demo",
    tuple(
        FaceCorner(f"c{i}", PixelPoint(*obs.image1[i]), PixelPoint(*obs.image2[i]))
        for i in range(4)
    ),
)
field = face_disparities(face)
masked = field.disparity[field.mask]
print(f"\nrasterized {int(field.mask.sum())} pixels, "
      f"disparities {masked.min():.4f}..{masked.max():.4f}")

k = choose_k([field], beta=0.9)
depth = heights_from_disparity(field, k)
print(f"k = {k:.4f}; heights {depth.heights[depth.mask].min():.3f}"
      f"..{depth.heights[depth.mask].max():.3f} (near side is high)")

Image.fromarray(render_grayscale(depth), mode="L").save(out / "single_face.png")
print(f"wrote {out / 'single_face.png'} (white = near, black = background)")
