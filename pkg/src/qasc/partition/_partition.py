"""The Partition value type."""

from collections.abc import Iterable, Iterator
from functools import total_ordering

from qasc.utils import QascValueError


@total_ordering
class Partition:
    """A partition stored as a tuple of positive, weakly decreasing parts.

    Trailing zeros are stripped on construction so that equal partitions
    compare and hash equal. Ordering is lexicographic on the parts, which is
    a linear extension of the dominance order on partitions of equal size.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        """Initialize the partition from its parts."""
        values = [int(p) for p in parts]
        while values and values[-1] == 0:
            values.pop()
        if any(p <= 0 for p in values):
            raise QascValueError(f"Partition parts must be positive, got {values}.")
        if any(a < b for a, b in zip(values, values[1:], strict=False)):
            raise QascValueError(f"Partition parts must be decreasing, got {values}.")
        self._parts = tuple(values)

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        """Parse "2,1" (or "0" / "" for the empty partition)."""
        text = text.strip()
        if text in ("", "0", "()", "[]"):
            return cls()
        try:
            values = [int(p) for p in text.strip("()[]").split(",") if p.strip()]
        except ValueError as e:
            raise QascValueError(f"Invalid partition {text!r}.") from e
        return cls(values)

    @property
    def parts(self) -> tuple[int, ...]:
        """The positive parts."""
        return self._parts

    @property
    def size(self) -> int:
        """|lambda|, the sum of the parts."""
        return sum(self._parts)

    @property
    def length(self) -> int:
        """Number of positive parts."""
        return len(self._parts)

    def part(self, row: int) -> int:
        """lambda_row with 1-based rows, zero beyond the length."""
        if row < 1:
            raise QascValueError(f"Rows are 1-based, got {row}.")
        return self._parts[row - 1] if row <= len(self._parts) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        """The parts padded with zeros to length n."""
        if self.length > n:
            raise QascValueError(f"Partition {self} is longer than {n}.")
        return self._parts + (0,) * (n - self.length)

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells (i, j) of the diagram, 1-based, row by row."""
        for i, part in enumerate(self._parts, start=1):
            for j in range(1, part + 1):
                yield i, j

    def conjugate(self) -> "Partition":
        """Column lengths of the diagram."""
        if not self._parts:
            return Partition()
        return Partition(
            sum(1 for p in self._parts if p >= j) for j in range(1, self._parts[0] + 1)
        )

    def arm(self, i: int, j: int) -> int:
        """Cells to the right of (i, j) in its row."""
        return self.part(i) - j

    def leg(self, i: int, j: int) -> int:
        """Cells below (i, j) in its column."""
        return sum(1 for p in self._parts[i:] if p >= j)

    def b(self) -> int:
        """b(lambda) = sum (i - 1) lambda_i."""
        return sum(i * p for i, p in enumerate(self._parts))

    def add_node(self, row: int) -> "Partition":
        """lambda^(row): a node added to the given row."""
        values = list(self.padded(max(self.length, row)))
        values[row - 1] += 1
        return Partition(values)

    def remove_node(self, row: int) -> "Partition":
        """lambda_(row): a node removed from the given row."""
        if self.part(row) == 0:
            raise QascValueError(f"Row {row} of {self} is empty.")
        values = list(self._parts)
        values[row - 1] -= 1
        return Partition(values)

    def contains(self, other: "Partition") -> bool:
        """Diagram inclusion other ⊆ self."""
        return other.length <= self.length and all(
            other.part(i) <= self.part(i) for i in range(1, other.length + 1)
        )

    def dominates(self, other: "Partition") -> bool:
        """Dominance order for partitions of the same size."""
        if self.size != other.size:
            return False
        acc_self = acc_other = 0
        for i in range(1, max(self.length, other.length) + 1):
            acc_self += self.part(i)
            acc_other += other.part(i)
            if acc_self < acc_other:
                return False
        return True

    def to_json(self) -> list[int]:
        """JSON form, an array of parts."""
        return list(self._parts)

    def __len__(self) -> int:
        """Number of positive parts."""
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        """Iterate over the positive parts."""
        return iter(self._parts)

    def __eq__(self, other: object) -> bool:
        """Equality of parts."""
        if not isinstance(other, Partition):
            return NotImplemented
        return self._parts == other._parts

    def __lt__(self, other: "Partition") -> bool:
        """Lexicographic comparison of parts."""
        if not isinstance(other, Partition):
            return NotImplemented
        return self._parts < other._parts

    def __hash__(self) -> int:
        """Hash of the parts."""
        return hash(self._parts)

    def __repr__(self) -> str:
        """Return a string representation of the partition."""
        return f"Partition({self._parts})"

    def __str__(self) -> str:
        """Compact form, e.g. (2,1)."""
        return "(" + ",".join(str(p) for p in self._parts) + ")"


def partitions(size: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of `size` with at most `max_length` parts.

    Returned in decreasing lexicographic order, so dominance-larger
    partitions always come first.
    """
    if size < 0:
        raise QascValueError(f"size must be nonnegative, got {size}.")
    limit = size if max_length is None else max_length
    result: list[Partition] = []

    def _walk(remaining: int, largest: int, prefix: list[int]) -> None:
        if remaining == 0:
            result.append(Partition(prefix))
            return
        if len(prefix) == limit:
            return
        for part in range(min(largest, remaining), 0, -1):
            _walk(remaining - part, part, [*prefix, part])

    _walk(size, size, [])
    return result


def partitions_up_to(degmax: int, max_length: int | None = None) -> list[Partition]:
    """All partitions with |lambda| <= degmax, by size then decreasing lex."""
    return [p for d in range(degmax + 1) for p in partitions(d, max_length)]
