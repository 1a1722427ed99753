from collections.abc import Set


def iter_bits(mask):
    """Yields the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet(Set):
    """An immutable set of vertex indices stored as an integer bitmask.

    Set algebra (``|``, ``&``, ``-``, ``^``, ``<=``) runs on the mask, which
    keeps the exhaustive sweeps over small graphs cheap.
    """

    __slots__ = ("mask",)

    def __init__(self, indices=()):
        mask = 0
        for index in indices:
            if index < 0:
                raise ValueError(f"vertex index must be nonnegative, got {index}")
            mask |= 1 << index
        self.mask = mask

    @classmethod
    def from_mask(cls, mask):
        instance = cls.__new__(cls)
        instance.mask = mask
        return instance

    @classmethod
    def full(cls, count):
        return cls.from_mask((1 << count) - 1)

    @classmethod
    def _from_iterable(cls, iterable):
        return cls(iterable)

    def __contains__(self, index):
        return isinstance(index, int) and index >= 0 and bool(self.mask >> index & 1)

    def __iter__(self):
        return iter_bits(self.mask)

    def __len__(self):
        return self.mask.bit_count()

    def __bool__(self):
        return self.mask != 0

    def __hash__(self):
        return hash(self.mask)

    def __eq__(self, other):
        if isinstance(other, VertexSet):
            return self.mask == other.mask
        return super().__eq__(other)

    def __le__(self, other):
        if isinstance(other, VertexSet):
            return not self.mask & ~other.mask
        return super().__le__(other)

    def __lt__(self, other):
        if isinstance(other, VertexSet):
            return self.mask != other.mask and not self.mask & ~other.mask
        return super().__lt__(other)

    def __ge__(self, other):
        if isinstance(other, VertexSet):
            return not other.mask & ~self.mask
        return super().__ge__(other)

    def __gt__(self, other):
        if isinstance(other, VertexSet):
            return self.mask != other.mask and not other.mask & ~self.mask
        return super().__gt__(other)

    def __or__(self, other):
        return VertexSet.from_mask(self.mask | _mask_of(other))

    def __and__(self, other):
        return VertexSet.from_mask(self.mask & _mask_of(other))

    def __sub__(self, other):
        return VertexSet.from_mask(self.mask & ~_mask_of(other))

    def __xor__(self, other):
        return VertexSet.from_mask(self.mask ^ _mask_of(other))

    __ror__ = __or__
    __rand__ = __and__
    __rxor__ = __xor__

    def __repr__(self):
        return f"VertexSet({sorted(self)})"

    def isdisjoint(self, other):
        return not self.mask & _mask_of(other)

    def issubset(self, other):
        return not self.mask & ~_mask_of(other)

    def union(self, *others):
        mask = self.mask
        for other in others:
            mask |= _mask_of(other)
        return VertexSet.from_mask(mask)

    def intersection(self, *others):
        mask = self.mask
        for other in others:
            mask &= _mask_of(other)
        return VertexSet.from_mask(mask)

    def difference(self, *others):
        mask = self.mask
        for other in others:
            mask &= ~_mask_of(other)
        return VertexSet.from_mask(mask)

    def with_vertex(self, index):
        return VertexSet.from_mask(self.mask | 1 << index)

    def without_vertex(self, index):
        return VertexSet.from_mask(self.mask & ~(1 << index))

    def min(self):
        if not self.mask:
            raise ValueError("empty vertex set has no minimum")
        return (self.mask & -self.mask).bit_length() - 1

    def max(self):
        if not self.mask:
            raise ValueError("empty vertex set has no maximum")
        return self.mask.bit_length() - 1


def _mask_of(value):
    if isinstance(value, VertexSet):
        return value.mask
    return VertexSet(value).mask


EMPTY = VertexSet()
