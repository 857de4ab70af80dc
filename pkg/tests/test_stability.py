from fractions import Fraction

import pytest

from isoschur import (
    InputError,
    cone_report,
    in_cone,
    sigma_weight,
    slice_coordinates,
    stability_status,
    stable_decomposition,
    stable_vectors,
)


def test_sigma_weight(q4):
    assert sigma_weight(q4, (3, 2, 3, 1)) == (-3, 1, 0, 7)


def test_stability_status(q4):
    delta = (3, 2, 3, 1)
    assert stability_status(q4, (0, 0, 1, 0), delta) == "stable"
    assert stability_status(q4, (3, 2, 1, 1), delta) == "stable"
    assert stability_status(q4, (8, 3, 3, 3), delta) == "stable"
    assert stability_status(q4, delta, delta) == "semistable"
    assert stability_status(q4, (1, 0, 0, 0), delta) == "unstable"
    with pytest.raises(InputError):
        stability_status(q4, (0, 0, 0, 0), delta)


def test_stable_vectors_q4(q4):
    assert stable_vectors(q4, (3, 2, 3, 1), 9) == [
        (0, 0, 1, 0), (3, 2, 1, 1), (8, 3, 3, 3),
    ]


def test_stable_decomposition(q4):
    assert stable_decomposition(q4, (3, 2, 3, 1), (3, 2, 3, 1)) == [
        (0, 0, 1, 0), (0, 0, 1, 0), (3, 2, 1, 1),
    ]


def test_in_cone():
    rays = [(1, 0, 0), (0, 1, 0)]
    assert in_cone(rays, (2, 3, 0))
    assert not in_cone(rays, (0, 0, 1))
    assert not in_cone(rays, (-1, 0, 0))
    assert in_cone([], (0, 0, 0))


def test_cone_report_q4(q4):
    report = cone_report(q4, (3, 2, 3, 1), 9)
    assert report.rays == [(0, 0, 1, 0), (3, 2, 1, 1), (8, 3, 3, 3)]
    assert report.deltabar == (3, 2, 1, 1)
    assert report.stable_non_extremal is None
    assert report.proper is None
    assert report.complete
    # delta sits on the facet spanned by two of the rays
    s3, db = (0, 0, 1, 0), (3, 2, 1, 1)
    assert tuple(2 * a + b for a, b in zip(s3, db)) == (3, 2, 3, 1)
    # simplicial: one group covering the two rays off the isotropic point
    assert report.simplex_decomposition == [((0, 2), 2)]


def test_cone_report_rejects_non_isotropic(q4):
    with pytest.raises(InputError):
        cone_report(q4, (1, 0, 0, 0), 5)


def test_slice_coordinates_q4(q4):
    report = cone_report(q4, (3, 2, 3, 1), 9)
    pts = dict(slice_coordinates(report))
    assert pts["delta"] == (Fraction(0), Fraction(0))
    assert pts["ray1"] == (Fraction(1), Fraction(0))
    assert pts["ray2"] == (Fraction(-2, 7), Fraction(0))
    assert pts["ray3"] == (Fraction(0), Fraction(1))
    assert pts["deltabar"] == pts["ray2"]
    # delta on the segment between ray1 and deltabar with weights 2:1
    w1, w2 = Fraction(2, 9), Fraction(7, 9)
    for i in range(2):
        assert w1 * pts["ray1"][i] + w2 * pts["ray2"][i] == pts["delta"][i]


def test_cone_report_d4tilde(d4tilde):
    delta = (2, 1, 1, 1, 1)
    report = cone_report(d4tilde, delta, 3)
    assert report.rays == [
        (1, 0, 0, 1, 1), (1, 0, 1, 0, 1), (1, 0, 1, 1, 0),
        (1, 1, 0, 0, 1), (1, 1, 0, 1, 0), (1, 1, 1, 0, 0),
    ]
    # the isotropic point is interior: it survives every drop-one cone
    assert report.stable_non_extremal == delta
    assert report.proper == delta
    # three antipodal pairs, each straddling the isotropic point
    assert report.simplex_decomposition == [((0, 5), 1), ((1, 4), 1), ((2, 3), 1)]
    for i, j in [g[0] for g in report.simplex_decomposition]:
        pair_sum = tuple(a + b for a, b in zip(report.rays[i], report.rays[j]))
        assert pair_sum == delta


def test_cone_report_kronecker(k2):
    report = cone_report(k2, (1, 1), 5)
    assert report.rays == [(1, 1)]
    assert report.deltabar == (1, 1)
    assert report.proper is None
    assert report.complete
