import pytest

from isoschur import (
    InputError,
    canonical_decomposition,
    embeds,
    generic_ext,
    generic_ext_dual,
    generic_hom_ext,
    is_prehomogeneous,
    is_schur_root,
    orthogonal,
    sample_end_dim,
    sample_hom_dim,
)

from conftest import make_a2, make_k2, make_k3, random_quiver, random_vector, seeded


def test_hom_ext_simples(q4):
    # no arrow 1 -> 2, one arrow 2 -> 1
    assert generic_hom_ext(q4, (1, 0, 0, 0), (0, 1, 0, 0)) == (0, 0)
    assert generic_hom_ext(q4, (0, 1, 0, 0), (1, 0, 0, 0)) == (0, 1)


def test_hom_ext_kronecker(k2):
    assert generic_hom_ext(k2, (1, 0), (0, 1)) == (0, 2)
    assert generic_hom_ext(k2, (1, 2), (1, 2)) == (1, 0)
    # (1,2) is projective, so ext from it always vanishes
    assert generic_hom_ext(k2, (1, 2), (2, 1)) == (2, 0)


def test_hom_ext_matches_pairing(q4, k2):
    rng = seeded(3)
    for quiver in (q4, k2):
        for _ in range(60):
            a = random_vector(rng, quiver.n)
            b = random_vector(rng, quiver.n)
            hom, ext = generic_hom_ext(quiver, a, b)
            assert hom - ext == quiver.pair(a, b)
            assert hom >= 0 and ext >= 0


def test_ext_dual_formula_agrees(q4, k2):
    rng = seeded(4)
    for quiver in (q4, k2):
        for _ in range(60):
            a = random_vector(rng, quiver.n)
            b = random_vector(rng, quiver.n)
            assert generic_ext(quiver, a, b) == generic_ext_dual(quiver, a, b)


def test_schur_roots(q4, k2):
    assert is_schur_root(q4, (3, 2, 3, 1))
    assert is_schur_root(q4, (1, 1, 1, 1))
    assert is_schur_root(q4, (1, 0, 0, 0))
    assert is_schur_root(k2, (1, 1))
    assert not is_schur_root(k2, (2, 2))
    assert not is_schur_root(k2, (2, 0))


def test_schur_root_disconnected_support():
    from isoschur import Quiver

    q = Quiver(["a", "b"], [])
    assert not is_schur_root(q, (1, 1))
    assert is_schur_root(q, (1, 0))


def test_embeds(q4, k2):
    assert embeds(k2, (1, 1), (2, 2))
    assert embeds(k2, (1, 2), (1, 2))
    assert not embeds(q4, (0, 1, 0, 0), (3, 2, 3, 1))
    assert embeds(q4, (3, 2, 1, 1), (3, 2, 3, 1))
    assert not embeds(k2, (2, 1), (2, 2))


def test_embeds_rejects_bad_input(q4):
    with pytest.raises(InputError):
        embeds(q4, (1, 0, 0, 0), (0, 1, 0))
    with pytest.raises(InputError):
        embeds(q4, (1, 0, 0, 0), (-1, 1, 1, 1))


def test_orthogonal(q4):
    assert orthogonal(q4, (0, 0, 1, 0), (0, 1, 0, 0))
    assert not orthogonal(q4, (0, 1, 0, 0), (1, 0, 0, 0))


def test_candecomp_kronecker(k2):
    assert canonical_decomposition(k2, (2, 2)) == [((1, 1), 2, "isotropic")]
    assert canonical_decomposition(k2, (3, 1)) == [
        ((2, 1), 1, "real"),
        ((1, 0), 1, "real"),
    ]
    assert canonical_decomposition(k2, (1, 1)) == [((1, 1), 1, "isotropic")]


def test_candecomp_a2():
    a2 = make_a2()
    assert canonical_decomposition(a2, (2, 1)) == [
        ((1, 1), 1, "real"),
        ((1, 0), 1, "real"),
    ]
    assert canonical_decomposition(a2, (2, 2)) == [((1, 1), 2, "real")]


def test_candecomp_imaginary_scaling():
    k3 = make_k3()
    assert canonical_decomposition(k3, (1, 1)) == [((1, 1), 1, "imaginary")]
    # an imaginary anisotropic root absorbs its multiples
    assert canonical_decomposition(k3, (2, 2)) == [((2, 2), 1, "imaginary")]


def test_candecomp_q4(q4):
    assert canonical_decomposition(q4, (2, 5, 1, 2)) == [
        ((2, 2, 1, 2), 1, "imaginary"),
        ((0, 1, 0, 0), 3, "real"),
    ]
    assert canonical_decomposition(q4, (3, 2, 3, 1)) == [
        ((3, 2, 3, 1), 1, "isotropic")
    ]


def test_candecomp_null_root_multiple(d4tilde):
    assert canonical_decomposition(d4tilde, (4, 2, 2, 2, 2)) == [
        ((2, 1, 1, 1, 1), 2, "isotropic")
    ]


def test_candecomp_sums_and_kinds():
    rng = seeded(9)
    for _ in range(40):
        q = random_quiver(rng, nmax=4)
        d = random_vector(rng, q.n, hi=4)
        entries = canonical_decomposition(q, d)
        total = [0] * q.n
        for root, mult, kind in entries:
            assert is_schur_root(q, root)
            tits = q.tits(root)
            assert kind == {1: "real", 0: "isotropic"}.get(tits, "imaginary")
            for i, x in enumerate(root):
                total[i] += mult * x
        assert tuple(total) == d


def test_oracle_matches_generic_hom(q4, k2):
    cases = [
        (k2, (1, 2), (2, 1), 2),
        (k2, (1, 0), (0, 1), 0),
        # vertex 1 is a sink, so (1,0,0,0) is projective and hom = pairing
        (q4, (1, 0, 0, 0), (3, 1, 1, 1), 3),
        (q4, (0, 1, 0, 0), (1, 0, 0, 0), 0),
    ]
    for quiver, a, b, expect in cases:
        hom, _ = generic_hom_ext(quiver, a, b)
        assert hom == expect
        assert sample_hom_dim(quiver, a, b, trials=3, seed=1) == expect


def test_oracle_end_dim_schur(q4, k2):
    # Schur roots have one-dimensional generic endomorphism rings
    assert sample_end_dim(k2, (1, 1), trials=3, seed=2) == 1
    assert sample_end_dim(q4, (3, 2, 3, 1), trials=3, seed=2) == 1
    assert sample_end_dim(k2, (2, 2), trials=3, seed=2) > 1


def test_prehomogeneous(q4, k2):
    assert is_prehomogeneous(q4, (1, 0, 0, 0))
    assert is_prehomogeneous(q4, (3, 1, 1, 1))
    assert not is_prehomogeneous(k2, (1, 1))
    a2 = make_a2()
    assert is_prehomogeneous(a2, (1, 1))
