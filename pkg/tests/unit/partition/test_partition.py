import pytest

from qasc.partition import Partition, partitions, partitions_up_to
from qasc.utils import QascValueError


def test_partition_creation():
    lam = Partition([3, 1, 0, 0])
    assert lam.parts == (3, 1)
    assert lam.size == 4
    assert lam.length == 2
    assert lam.part(1) == 3
    assert lam.part(5) == 0
    assert lam.padded(4) == (3, 1, 0, 0)
    assert lam.to_json() == [3, 1]
    assert str(lam) == "(3,1)"
    assert Partition([3, 1]) == lam
    assert hash(Partition([3, 1])) == hash(lam)


@pytest.mark.parametrize("parts", [[1, 2], [2, -1], [0, 1]])
def test_partition_invalid(parts: list[int]):
    with pytest.raises(QascValueError):
        Partition(parts)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("2,1", Partition([2, 1])),
        ("(3,1,1)", Partition([3, 1, 1])),
        ("0", Partition()),
        ("", Partition()),
        ("4", Partition([4])),
    ],
)
def test_from_string(text: str, expected: Partition):
    assert Partition.from_string(text) == expected


def test_from_string_fail():
    with pytest.raises(QascValueError):
        Partition.from_string("2,x")

    with pytest.raises(QascValueError):
        Partition.from_string("1,2")


@pytest.mark.parametrize(
    "parts, conjugate, b",
    [
        ([3], [1, 1, 1], 0),
        ([2, 1], [2, 1], 1),
        ([1, 1, 1], [3], 3),
        ([], [], 0),
        ([4, 2, 1], [3, 2, 1, 1], 4),
    ],
)
def test_conjugate_and_b(parts: list[int], conjugate: list[int], b: int):
    lam = Partition(parts)
    assert lam.conjugate() == Partition(conjugate)
    assert lam.conjugate().conjugate() == lam
    assert lam.b() == b


def test_conjugate_statistics_up_to_six():
    for lam in partitions_up_to(6):
        assert lam.conjugate().size == lam.size
        assert lam.conjugate().b() == sum(p * (p - 1) // 2 for p in lam)


def test_nodes_moves():
    lam = Partition([2, 1])
    assert lam.add_node(1) == Partition([3, 1])
    assert lam.add_node(3) == Partition([2, 1, 1])
    assert lam.remove_node(2) == Partition([2])

    with pytest.raises(QascValueError):
        lam.remove_node(3)


def test_arm_leg_and_cells():
    lam = Partition([3, 1])
    assert list(lam.cells()) == [(1, 1), (1, 2), (1, 3), (2, 1)]
    assert lam.arm(1, 1) == 2
    assert lam.leg(1, 1) == 1
    assert lam.leg(1, 2) == 0


def test_orders():
    assert Partition([2, 1]).dominates(Partition([1, 1, 1]))
    assert not Partition([1, 1, 1]).dominates(Partition([2, 1]))
    assert not Partition([2]).dominates(Partition([1]))
    assert Partition([2, 1]).contains(Partition([1, 1]))
    assert not Partition([2]).contains(Partition([1, 1]))
    assert Partition([1, 1]) < Partition([2])


def test_partitions_listing():
    assert partitions(3) == [Partition([3]), Partition([2, 1]), Partition([1, 1, 1])]
    assert partitions(3, max_length=2) == [Partition([3]), Partition([2, 1])]
    assert partitions(0) == [Partition()]
    assert len(partitions_up_to(4)) == 1 + 1 + 2 + 3 + 5
    assert [lam.size for lam in partitions_up_to(2)] == [0, 1, 2, 2]

    with pytest.raises(QascValueError):
        partitions(-1)
