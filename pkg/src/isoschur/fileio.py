"""File formats: quiver and sequence documents, slice tables, reports.

Quiver files are JSON objects with "vertices" (string labels) and
"arrows" ([tail, head] label pairs). Sequence files reference a quiver
file and list class vectors, with an optional isotropic position.
Reports are JSON with a schema version, the verb, the quiver, and the
arguments, so a report can be recomputed and compared bit for bit.
"""

import json
from fractions import Fraction
from pathlib import Path

from .errors import InputError
from .quiver import Quiver


def quiver_from_dict(doc, origin="<quiver>"):
    if not isinstance(doc, dict):
        raise InputError(f"{origin}: expected a JSON object")
    try:
        vertices = doc["vertices"]
        arrows = doc["arrows"]
    except KeyError as missing:
        raise InputError(f"{origin}: missing field {missing}")
    if not isinstance(vertices, list) or not all(
        isinstance(v, (str, int)) for v in vertices
    ):
        raise InputError(f"{origin}: vertices must be a list of labels")
    if not isinstance(arrows, list) or not all(
        isinstance(a, list) and len(a) == 2 for a in arrows
    ):
        raise InputError(f"{origin}: arrows must be [tail, head] pairs")
    return Quiver.from_labelled_arrows(vertices, [(a[0], a[1]) for a in arrows])


def quiver_to_dict(quiver):
    return {
        "vertices": list(quiver.labels),
        "arrows": [
            [quiver.labels[t], quiver.labels[h]] for t, h in quiver.arrows
        ],
    }


def _load_json(path):
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as err:
        raise InputError(f"cannot read {path}: {err}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise InputError(f"{path}: invalid JSON ({err})")


def load_quiver(path):
    return quiver_from_dict(_load_json(path), origin=str(path))


def parse_vector(text):
    """Comma-separated integers: "3,2,3,1" -> (3, 2, 3, 1)."""
    try:
        return tuple(int(part.strip()) for part in str(text).split(","))
    except ValueError:
        raise InputError(f"bad vector {text!r}; expected comma-separated integers")


def format_vector(v):
    return ",".join(str(x) for x in v)


def load_sequence(path):
    """Sequence document: quiver (path, relative to this file), classes,
    optional position and isotropic root. Returns a dict with keys
    quiver, classes, position, isotropic."""
    doc = _load_json(path)
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    if "quiver" not in doc or "classes" not in doc:
        raise InputError(f"{path}: needs fields 'quiver' and 'classes'")
    qpath = Path(path).parent / doc["quiver"]
    quiver = load_quiver(qpath)
    classes = []
    for k, row in enumerate(doc["classes"]):
        if not isinstance(row, list) or not all(isinstance(x, int) for x in row):
            raise InputError(f"{path}: class {k + 1} must be a list of integers")
        classes.append(tuple(row))
    position = doc.get("position")
    if position is not None and not isinstance(position, int):
        raise InputError(f"{path}: position must be an integer")
    isotropic = doc.get("isotropic")
    if isotropic is not None:
        isotropic = tuple(isotropic)
    return {
        "quiver": quiver,
        "classes": classes,
        "position": position,
        "isotropic": isotropic,
    }


def fraction_str(x):
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad rational {text!r}")


def write_slice_table(path, labelled_points):
    """Plain-text slice rows: label then the coordinates, whitespace
    separated. Coordinates are written as decimal floats for plotting;
    the exact fractions live in the JSON report."""
    lines = []
    for label, coords in labelled_points:
        nums = " ".join(repr(float(Fraction(c))) for c in coords)
        lines.append(f"{label} {nums}")
    Path(path).write_text("\n".join(lines) + "\n")
    return lines


def dump_report(report):
    return json.dumps(report, indent=2) + "\n"


def load_report(path):
    doc = _load_json(path)
    if not isinstance(doc, dict) or doc.get("schema") != 1:
        raise InputError(f"{path}: not a schema-1 report")
    return doc
