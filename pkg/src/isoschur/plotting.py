"""Rendering slice tables to PNG files with matplotlib."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .errors import InputError


def render_slice_png(labelled_points, path, title=""):
    """Scatter the labelled slice points and write a PNG. Points carry
    1, 2 or 3 coordinates; 1d data is drawn on the x axis."""
    if not labelled_points:
        raise InputError("no slice points to render")
    dim = len(labelled_points[0][1])
    if any(len(coords) != dim for _, coords in labelled_points):
        raise InputError("slice points have mixed dimensions")
    if dim < 1 or dim > 3:
        raise InputError(f"cannot render {dim}-dimensional slice points")

    fig = plt.figure(figsize=(6, 6))
    if dim == 3:
        ax = fig.add_subplot(projection="3d")
        for label, coords in labelled_points:
            x, y, z = (float(c) for c in coords)
            ax.scatter([x], [y], [z], s=40)
            ax.text(x, y, z, f" {label}")
        ax.set_zlabel("z")
    else:
        ax = fig.add_subplot()
        for label, coords in labelled_points:
            x = float(coords[0])
            y = float(coords[1]) if dim == 2 else 0.0
            ax.scatter([x], [y], s=40)
            ax.annotate(f" {label}", (x, y))
        ax.set_ylabel("y")
        ax.grid(True, linewidth=0.3)
    ax.set_xlabel("x")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
