"""Bitmask subsets of {1..n} with colexicographic ranking and set algebra."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

MAX_GROUND = 64


@dataclass(frozen=True)
class SubsetWord:
    """Subset of [n] = {1, ..., n} packed into an n-bit word (bit i-1 set <=> element i in subset)."""

    bits: int
    ground_n: int

    def __post_init__(self) -> None:
        if not 1 <= self.ground_n <= MAX_GROUND:
            raise ValueError(
                f"ground set size must be in 1..{MAX_GROUND}, got {self.ground_n}"
            )
        if self.bits < 0 or self.bits >> self.ground_n:
            raise ValueError(
                f"bits 0x{self.bits:x} fall outside the ground set [{self.ground_n}]"
            )

    @property
    def size(self) -> int:
        """Cardinality of the subset."""
        return self.bits.bit_count()

    def elements(self) -> tuple[int, ...]:
        """Members as ascending 1-based integers."""
        return tuple(i + 1 for i in range(self.ground_n) if self.bits >> i & 1)

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= self.ground_n and self.bits >> (element - 1) & 1 == 1

    def __str__(self) -> str:
        return to_text(self)


def from_elements(elements, n: int) -> SubsetWord:
    """Build a SubsetWord over [n] from an iterable of 1-based elements."""
    bits = 0
    for e in elements:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside ground set [{n}]")
        bits |= 1 << (e - 1)
    return SubsetWord(bits, n)


def to_text(a: SubsetWord) -> str:
    """Render as ascending comma-joined elements, e.g. "1,3,4"; the empty set is "-"."""
    if a.bits == 0:
        return "-"
    return ",".join(str(e) for e in a.elements())


def from_text(text: str, n: int) -> SubsetWord:
    """Parse the rendering produced by to_text back into a SubsetWord over [n]."""
    if text == "-":
        return SubsetWord(0, n)
    try:
        elems = [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed subset text {text!r}") from None
    if elems != sorted(set(elems)):
        raise ValueError(f"subset text must list distinct ascending elements, got {text!r}")
    return from_elements(elems, n)


def _check_same_ground(a: SubsetWord, b: SubsetWord) -> None:
    if a.ground_n != b.ground_n:
        raise ValueError(
            f"mismatched ground sets: [{a.ground_n}] vs [{b.ground_n}]"
        )


def symm_diff_size(a: SubsetWord, b: SubsetWord) -> int:
    """Size of the symmetric difference of a and b."""
    _check_same_ground(a, b)
    return (a.bits ^ b.bits).bit_count()


def intersect_size(a: SubsetWord, b: SubsetWord) -> int:
    """Size of the intersection of a and b."""
    _check_same_ground(a, b)
    return (a.bits & b.bits).bit_count()


def complement(a: SubsetWord) -> SubsetWord:
    """[n] minus a; an involution mapping k-subsets to (n-k)-subsets."""
    mask = (1 << a.ground_n) - 1
    return SubsetWord(a.bits ^ mask, a.ground_n)


def rank(a: SubsetWord) -> int:
    """Combinadic rank of a among the k-subsets of its ground set in colex order.

    For positions p_1 < ... < p_k (0-based) the rank is sum_i C(p_i, i).
    Colex order coincides with ascending numeric order of the bit words.
    """
    r = 0
    i = 0
    bits = a.bits
    while bits:
        low = bits & -bits
        i += 1
        r += comb(low.bit_length() - 1, i)
        bits ^= low
    return r


def unrank(r: int, n: int, k: int) -> SubsetWord:
    """Inverse of rank: the k-subset of [n] with colex rank r."""
    if not 0 <= k <= n <= MAX_GROUND:
        raise ValueError(f"need 0 <= k <= n <= {MAX_GROUND}, got n={n} k={k}")
    total = comb(n, k)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} out of range 0..{total - 1} for C({n},{k})")
    bits = 0
    rem = r
    for i in range(k, 0, -1):
        p = i - 1
        while comb(p + 1, i) <= rem:
            p += 1
        bits |= 1 << p
        rem -= comb(p, i)
    return SubsetWord(bits, n)


def enumerate_k_subsets(n: int, k: int) -> list[SubsetWord]:
    """All C(n,k) k-subsets of [n] in colex order; position equals rank."""
    if not 0 <= k <= n <= MAX_GROUND:
        raise ValueError(f"need 0 <= k <= n <= {MAX_GROUND}, got n={n} k={k}")
    if k == 0:
        return [SubsetWord(0, n)]
    out = []
    v = (1 << k) - 1
    limit = 1 << n
    while v < limit:
        out.append(SubsetWord(v, n))
        # Gosper's hack: next bit word with the same popcount.
        c = v & -v
        r = v + c
        v = (((r ^ v) >> 2) // c) | r
    return out
