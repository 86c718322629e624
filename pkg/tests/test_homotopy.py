import random

import pytest

from linkhomotopy import (
    COUNTABLE,
    Cyclic,
    DirectSum,
    FreeAbelian,
    HomotopyTable,
    PiOfSphere,
    PiOfWedge,
    SphereWedge,
    Trivial,
    default_table,
    direct_sum,
    hilton_pi,
    homotopy_table_lookup,
    lyndon_words,
)
from linkhomotopy.homotopy import TableFormatError, parse_group_token

Z = FreeAbelian(1)


def test_table_builtin_entries():
    assert homotopy_table_lookup(6, 3) == Cyclic(12)
    assert homotopy_table_lookup(4, 3) == Cyclic(2)
    assert homotopy_table_lookup(5, 3) == Cyclic(2)
    assert homotopy_table_lookup(3, 2) == Z
    assert homotopy_table_lookup(4, 2) == Cyclic(2)
    assert homotopy_table_lookup(5, 2) == Cyclic(2)


def test_table_structural_rules():
    assert homotopy_table_lookup(5, 7) == Trivial()
    assert homotopy_table_lookup(4, 4) == Z
    assert homotopy_table_lookup(1, 1) == Z
    assert homotopy_table_lookup(3, 1) == Trivial()


def test_table_miss_returns_none():
    assert homotopy_table_lookup(7, 3) is None
    assert homotopy_table_lookup(6, 2) is None
    with pytest.raises(ValueError):
        homotopy_table_lookup(0, 1)


def test_table_file_loading(tmp_path):
    path = tmp_path / "extra.tab"
    path.write_text(
        "# extension entries\n"
        "pi 7 3 Z/2 classical tables\n"
        "pi 7 4 Z+Z/12 classical tables\n"
    )
    table = HomotopyTable()
    table.load_file(str(path))
    assert table.lookup(7, 3) == Cyclic(2)
    assert table.lookup(7, 4) == direct_sum([Z, Cyclic(12)])
    assert table.entry(7, 3).provenance == "classical tables"
    # the default table is untouched
    assert default_table().lookup(7, 3) is None


@pytest.mark.parametrize(
    "content",
    [
        "pi 7 3 Z/2",  # provenance missing
        "pi x 3 Z/2 src",
        "pi 7 3 Q src",
        "pj 7 3 Z/2 src",
        "pi 0 3 Z/2 src",
    ],
)
def test_table_file_rejects_bad_lines(tmp_path, content):
    path = tmp_path / "bad.tab"
    path.write_text(content + "\n")
    with pytest.raises(TableFormatError):
        HomotopyTable().load_file(str(path))


def test_parse_group_token():
    assert parse_group_token("0") == Trivial()
    assert parse_group_token("Z") == Z
    assert parse_group_token("Z/8") == Cyclic(8)
    assert parse_group_token("Z^3") == FreeAbelian(3)
    assert parse_group_token("Z^(countable)") == FreeAbelian(COUNTABLE)
    with pytest.raises(ValueError):
        parse_group_token("S^2")


def test_renderings():
    assert Trivial().render() == "0"
    assert Cyclic(12).render() == "Z/12"
    assert Z.render() == "Z"
    assert FreeAbelian(3).render() == "Z^3"
    assert FreeAbelian(COUNTABLE).render() == "Z^(countable)"
    assert PiOfSphere(7, 3).render() == "pi_7(S^3)"
    assert PiOfSphere(7, 3).render(mark_unknown=True) == "pi_7(S^3) [unknown]"
    wedge = SphereWedge((2, 2))
    assert wedge.render() == "S^2 v S^2"
    assert SphereWedge((3,), "K(G(d_{1,2}L),1)").render() == "K(G(d_{1,2}L),1) v S^3"
    assert SphereWedge().render() == "*"
    assert PiOfWedge(3, wedge).render() == "pi_3(S^2 v S^2)"


def test_direct_sum_normalization():
    assert direct_sum([]) == Trivial()
    assert direct_sum([Trivial(), Trivial()]) == Trivial()
    assert direct_sum([Z]) == Z
    nested = direct_sum([Z, direct_sum([Cyclic(2), Z]), Trivial()])
    assert nested == DirectSum((Z, Cyclic(2), Z))
    assert nested.render() == "Z + Z/2 + Z"


def test_evaluation():
    assert PiOfSphere(4, 3).evaluate() == Cyclic(2)
    assert PiOfSphere(7, 3).evaluate() == PiOfSphere(7, 3)
    assert PiOfWedge(3, SphereWedge()).evaluate() == Trivial()
    wedge_with_factor = SphereWedge((2,), "K(G,1)")
    assert PiOfWedge(3, wedge_with_factor).evaluate() == PiOfWedge(3, wedge_with_factor)
    assert PiOfWedge(3, SphereWedge((3,))).evaluate() == Z
    summed = DirectSum((PiOfSphere(4, 3), PiOfSphere(4, 4)))
    assert summed.evaluate() == direct_sum([Cyclic(2), Z])
    assert not summed.is_concrete
    assert summed.evaluate().is_concrete


def test_lyndon_word_enumeration():
    words = lyndon_words(2, 4)
    assert words == [
        (0,), (1,),
        (0, 1),
        (0, 0, 1), (0, 1, 1),
        (0, 0, 0, 1), (0, 0, 1, 1), (0, 1, 1, 1),
    ]
    assert lyndon_words(1, 5) == [(0,)]
    assert lyndon_words(0, 3) == []
    # counts by length follow the necklace numbers: 3, 3, 8, 18 for 3 letters
    by_length = {}
    for word in lyndon_words(3, 4):
        by_length[len(word)] = by_length.get(len(word), 0) + 1
    assert by_length == {1: 3, 2: 3, 3: 8, 4: 18}


def test_hilton_two_sphere_wedge_degree3():
    assert hilton_pi(3, [2, 2]) == DirectSum((Z, Z, Z))


def test_hilton_two_sphere_wedge_degree4():
    # letters give pi_4(S^2) twice, the weight-2 bracket pi_4(S^3),
    # and the two weight-3 brackets pi_4(S^4)
    assert hilton_pi(4, [2, 2]) == DirectSum((Cyclic(2), Cyclic(2), Cyclic(2), Z, Z))


def test_hilton_singleton_agrees_with_table():
    for n in range(2, 7):
        for m in range(2, n + 1):
            expected = homotopy_table_lookup(n, m)
            got = hilton_pi(n, [m])
            if expected is None:
                assert got == PiOfSphere(n, m)
            else:
                assert got == expected
    assert hilton_pi(5, [5]) == Z


def test_hilton_is_order_independent():
    rng = random.Random(67)
    for _ in range(50):
        dims = [rng.randint(2, 4) for _ in range(rng.randint(1, 3))]
        n = rng.randint(2, 5)
        shuffled = dims[:]
        rng.shuffle(shuffled)
        assert hilton_pi(n, dims) == hilton_pi(n, shuffled)


def test_hilton_keeps_unknown_entries_symbolic():
    got = hilton_pi(7, [3])
    assert got == PiOfSphere(7, 3)
    assert got.render(mark_unknown=True) == "pi_7(S^3) [unknown]"
    mixed = hilton_pi(6, [2, 2])
    assert not mixed.is_concrete  # pi_6(S^2) is not in the builtin table
    assert "[unknown]" in mixed.render(mark_unknown=True)


def test_hilton_validation():
    with pytest.raises(ValueError):
        hilton_pi(1, [2])
    with pytest.raises(ValueError):
        hilton_pi(3, [1])
    assert hilton_pi(3, []) == Trivial()
