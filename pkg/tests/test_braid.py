import pytest

from isoschur import (
    BudgetExhausted,
    InputError,
    apply_braid,
    brute_isotropic_filter,
    enumerate_isotropic,
    format_braid_word,
    gamma,
    iso_type_sequence,
    is_tame_type,
    parse_braid_word,
    probe_orbits,
    reduce_to_tame_type,
)
from isoschur.fileio import load_sequence

from conftest import CORPUS, FIXTURES

Q4_CLASSES = [(8, 3, 3, 3), (0, 0, 1, 0), (3, 1, 3, 1), (0, 1, 0, 0)]


@pytest.fixture
def q4_iso(q4):
    return iso_type_sequence(q4, Q4_CLASSES, position=3)


def test_iso_type_sequence_fixture_file(q4):
    doc = load_sequence(FIXTURES / "q4-iso.seq")
    assert doc["quiver"].labels == q4.labels
    iso = iso_type_sequence(doc["quiver"], doc["classes"], doc["position"])
    assert iso.position == 3
    assert iso.root_type == doc["isotropic"] == (3, 2, 3, 1)


def test_iso_type_sequence_auto_position(q4):
    # position omitted: the smallest tame pair wins, here S_3 next to V,
    # whose isotropic combination V - S_3 has a negative coefficient
    iso = iso_type_sequence(q4, Q4_CLASSES)
    assert iso.position == 2
    assert iso.root_type == (3, 1, 2, 1)


def test_iso_type_sequence_rejects_real_pair(q4):
    with pytest.raises(InputError):
        iso_type_sequence(q4, Q4_CLASSES, position=1)


def test_iso_type_sequence_needs_full(q4):
    with pytest.raises(InputError):
        iso_type_sequence(q4, Q4_CLASSES[:3], position=2)


def test_gamma_case_table(q4_iso):
    # pair at r = 3: gamma_1 acts away from it, gamma_2 = gamma_{r-1}
    # reflects the pair past its left neighbour and changes the root
    out = gamma(q4_iso, 1, 1)
    assert out.base.classes == (
        (40, 15, 16, 15), (8, 3, 3, 3), (3, 1, 3, 1), (0, 1, 0, 0),
    )
    assert out.position == 3 and out.root_type == (3, 2, 3, 1)
    out = gamma(q4_iso, 1, -1)
    assert out.base.classes == (
        (0, 0, 1, 0), (8, 3, 8, 3), (3, 1, 3, 1), (0, 1, 0, 0),
    )
    assert out.position == 3 and out.root_type == (3, 2, 3, 1)
    out = gamma(q4_iso, 2, 1)
    assert out.base.classes == (
        (8, 3, 3, 3), (3, 1, 1, 1), (0, 1, 0, 0), (0, 0, 1, 0),
    )
    assert out.position == 2 and out.root_type == (3, 2, 1, 1)
    out = gamma(q4_iso, 2, -1)
    assert out.base.classes == (
        (8, 3, 3, 3), (3, 1, 3, 1), (0, 1, 0, 0), (6, 6, 5, 2),
    )
    assert out.position == 2 and out.root_type == (3, 2, 3, 1)


def test_gamma_involutions(q4_iso):
    for i in (1, 2):
        assert gamma(gamma(q4_iso, i, 1), i, -1) == q4_iso
        assert gamma(gamma(q4_iso, i, -1), i, 1) == q4_iso


def test_gamma_rejects_bad_input(q4_iso):
    with pytest.raises(InputError):
        gamma(q4_iso, 0, 1)
    with pytest.raises(InputError):
        gamma(q4_iso, 3, 1)
    with pytest.raises(InputError):
        gamma(q4_iso, 1, 2)


def test_braid_relation_instance(q4_iso):
    lhs = apply_braid(q4_iso, parse_braid_word("g1 g2 g1"))
    rhs = apply_braid(q4_iso, parse_braid_word("g2 g1 g2"))
    assert lhs == rhs
    assert lhs.root_type == (19, 8, 7, 7)
    assert lhs.base.classes == (
        (21, 8, 8, 8), (40, 16, 15, 15), (40, 15, 16, 15), (8, 3, 3, 3),
    )


def test_apply_braid_rightmost_first(q4_iso):
    word = parse_braid_word("g1 g2")
    assert apply_braid(q4_iso, word) == gamma(gamma(q4_iso, 2, 1), 1, 1)


def test_parse_and_format_braid_word():
    word = parse_braid_word("g2^-1 g1^-1 g2 g1^-1")
    assert word == [(2, -1), (1, -1), (2, 1), (1, -1)]
    assert format_braid_word(word) == "g2^-1 g1^-1 g2 g1^-1"
    assert parse_braid_word("") == []
    for bad in ("h1", "g", "g1^2", "g-1", "g1^"):
        with pytest.raises(InputError):
            parse_braid_word(bad)


def test_reduce_to_tame_type_fixture(q4_iso):
    word, tame = reduce_to_tame_type(q4_iso)
    assert format_braid_word(word) == "g2^-1 g1^-1 g1^-1 g2"
    assert tame.base.classes == (
        (1, 1, 0, 0), (0, 0, 1, 0), (2, 0, 2, 1), (1, 0, 1, 0),
    )
    assert tame.position == 3
    assert tame.root_type == (1, 0, 1, 1)
    assert is_tame_type(tame) == 1
    # replaying the word from the start reaches the same sequence
    assert apply_braid(q4_iso, word) == tame


def test_is_tame_type_rejects_start(q4_iso):
    assert is_tame_type(q4_iso) is None


def test_is_tame_type_whole_category(a21tilde):
    iso = iso_type_sequence(a21tilde, [(0, 1, 0), (0, 1, 1), (1, 0, 0)], 2)
    word, tame = reduce_to_tame_type(iso)
    assert is_tame_type(tame) == 0
    assert tame.root_type == (1, 1, 1)


def test_reduce_budget(q4_iso):
    with pytest.raises(BudgetExhausted):
        reduce_to_tame_type(q4_iso, budget=2)


def test_brute_isotropic_q4(q4):
    roots = brute_isotropic_filter(q4, 3)
    assert (1, 0, 1, 1) in roots
    assert (1, 1, 0, 1) in roots
    assert (3, 2, 1, 1) in roots
    assert (3, 2, 3, 1) in roots
    assert len(roots) == 10


def test_enumerate_matches_brute_small():
    for name in ("k2", "k3", "a2", "a3", "a21tilde", "d4tilde"):
        q = CORPUS[name]()
        assert enumerate_isotropic(q, 4) == brute_isotropic_filter(q, 4), name


def test_enumerate_matches_brute_q4(q4):
    assert enumerate_isotropic(q4, 4) == brute_isotropic_filter(q4, 4)


def test_enumerate_q4_bound_10(q4):
    roots = enumerate_isotropic(q4, 10)
    assert len(roots) == 14
    for need in ((1, 1, 0, 1), (1, 0, 1, 1), (3, 2, 1, 1), (3, 2, 3, 1)):
        assert need in roots


def test_enumerate_rejects_bad_bound(q4):
    with pytest.raises(InputError):
        enumerate_isotropic(q4, 0)
    with pytest.raises(InputError):
        brute_isotropic_filter(q4, 0)


def test_probe_orbits_a21tilde(a21tilde):
    rows = probe_orbits(a21tilde, 2)
    assert rows == [{"root": (1, 1, 1), "tame_root": (1, 1, 1), "word": ""}]


def test_probe_orbits_q4(q4):
    rows = probe_orbits(q4, 3)
    assert [r["root"] for r in rows] == brute_isotropic_filter(q4, 3)
    # every orbit lands on one of the two minimal tame roots
    assert {r["tame_root"] for r in rows} == {(1, 0, 1, 1), (1, 1, 0, 1)}
    by_root = {r["root"]: r for r in rows}
    assert by_root[(3, 2, 3, 1)]["word"] == "g2^-1 g1^-1 g1^-1 g2"
    assert by_root[(1, 0, 1, 1)]["word"] == ""
