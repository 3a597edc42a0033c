"""DNA alphabet, 2-4 rule weights, reverse complements and weight-class counts."""

from functools import lru_cache

BASES = "ACGT"
WEAK = frozenset("AT")
STRONG = frozenset("CG")

BASE_WEIGHT = {"A": 1, "T": 1, "C": 2, "G": 2}
_COMPLEMENT = str.maketrans("ACGT", "TGCA")


class SequenceError(ValueError):
    """Raised for characters outside {A, C, G, T}."""


class DnaSeq(str):
    """Immutable, validated, uppercase DNA string.

    Behaves as a regular ``str`` (hashing, slicing, comparison) so it can be
    used directly as a dictionary key or set member.

    >>> DnaSeq("acgt").weight
    6
    """

    __slots__ = ()

    def __new__(cls, value=""):
        s = str(value).upper()
        bad = set(s) - set(BASES)
        if bad:
            raise SequenceError(f"invalid base(s) {''.join(sorted(bad))!r} in {value!r}")
        return super().__new__(cls, s)

    @property
    def weight(self) -> int:
        return weight(self)

    def revcomp(self) -> "DnaSeq":
        return DnaSeq(revcomp(self))

    def __repr__(self):
        return f"DnaSeq({str(self)!r})"


def weight(s: str) -> int:
    """Sum of base weights: A/T count 1, C/G count 2."""
    return len(s) + s.count("C") + s.count("G")


def revcomp(s: str) -> str:
    """Watson-Crick reverse complement."""
    return s.translate(_COMPLEMENT)[::-1]


def is_self_complementary(s: str) -> bool:
    return s == revcomp(s)


@lru_cache(maxsize=None)
def _g(n: int) -> int:
    if n == 0:
        return 1
    if n == 1:
        return 2
    if n == 2:
        return 6
    return 2 * _g(n - 1) + 2 * _g(n - 2)


def g(n: int) -> int:
    """Number of DNA strings of weight ``n``.

    >>> [g(i) for i in range(6)]
    [1, 2, 6, 16, 44, 120]
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    # iterate to keep the cache warm bottom-up (no deep recursion for large n)
    for i in range(n + 1):
        _g(i)
    return _g(n)


def h(n: int) -> int:
    """Number of self-complementary DNA strings of weight ``n``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n % 2:
        return 0
    return g(n // 2)


def strings_of_weight(n: int):
    """Yield every DNA string of weight exactly ``n`` (lexicographic in ACGT)."""
    if n == 0:
        yield ""
        return
    for b in BASES:
        bw = BASE_WEIGHT[b]
        if bw <= n:
            for rest in strings_of_weight(n - bw):
                yield b + rest
