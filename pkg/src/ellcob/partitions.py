"""Integer partitions and Pontryagin-number vectors.

Partitions are plain tuples of weakly decreasing positive integers.  The
enumeration order (decreasing lexicographic) is fixed and is part of the
serialization contract: for k = 6 it yields exactly 11 partitions starting
(6,), (5, 1), ... and ending (1, 1, 1, 1, 1, 1).
"""

import json
from dataclasses import dataclass, field
from functools import lru_cache


@lru_cache(maxsize=None)
def partitions_of(k):
    """All partitions of k as a tuple, in decreasing lexicographic order."""
    if k < 0:
        raise ValueError("partitions_of needs k >= 0")

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(largest, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(k, k))


def check_partition(parts):
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError("partition parts must be positive")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("partition parts must be weakly decreasing")
    return parts


def parse_partition(s):
    """Parse a partition key like "[2,2,1,1]"."""
    try:
        parts = json.loads(s)
    except json.JSONDecodeError as exc:
        raise ValueError("bad partition key %r: %s" % (s, exc)) from None
    if not isinstance(parts, list) or not all(isinstance(p, int) for p in parts):
        raise ValueError("bad partition key %r: expected a JSON list of integers" % (s,))
    return check_partition(parts)


def format_partition(p):
    return "[" + ",".join(str(x) for x in p) + "]"


@dataclass(frozen=True, eq=True)
class PontryaginVector:
    """Pontryagin numbers of a closed oriented 4k-manifold.

    `numbers` maps every partition of k to an integer; all partitions must
    be present.
    """

    k: int
    numbers: dict = field(hash=False)

    def __post_init__(self):
        if self.k <= 0:
            raise ValueError("PontryaginVector needs k >= 1")
        want = set(partitions_of(self.k))
        got = {}
        for p, v in self.numbers.items():
            p = check_partition(p)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError("Pontryagin number for %s must be an integer" % (p,))
            got[p] = v
        if set(got) != want:
            missing = sorted(want - set(got))
            extra = sorted(set(got) - want)
            raise ValueError(
                "Pontryagin numbers must cover the partitions of %d exactly "
                "(missing %s, extra %s)" % (self.k, missing, extra)
            )
        object.__setattr__(self, "numbers", got)

    @property
    def dim(self):
        return 4 * self.k

    @classmethod
    def zero(cls, k):
        return cls(k, {p: 0 for p in partitions_of(k)})

    @classmethod
    def from_string_keys(cls, dim, table):
        if dim % 4 != 0 or dim <= 0:
            raise ValueError("dimension must be a positive multiple of 4")
        numbers = {parse_partition(key): value for key, value in table.items()}
        return cls(dim // 4, numbers)

    @classmethod
    def random(cls, k, rng, bound=9):
        return cls(k, {p: rng.randint(-bound, bound) for p in partitions_of(k)})

    def to_string_keys(self):
        return {format_partition(p): self.numbers[p] for p in partitions_of(self.k)}

    def __getitem__(self, partition):
        return self.numbers[check_partition(partition)]
