"""c-tokens: extraction, classification, universe enumeration and tag-count bounds.

A c-token is a DNA string of weight >= c whose every proper suffix weighs
less than c.  Its weight is c, or c + 1 when it starts with a strong base.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import accumulate
from typing import List, Optional, Tuple

from .seq import BASE_WEIGHT, STRONG, g, revcomp, strings_of_weight, weight

MAX_ENUM_C = 12


class TokenClass(str, Enum):
    W_c3_S = "W<c-3>S"
    S_c4_S = "S<c-4>S"
    S_c3_S = "S<c-3>S"
    W_c2_W = "W<c-2>W"
    S_c3_W = "S<c-3>W"
    S_c3_WW = "S<c-3>WW"
    S_c4_SW = "S<c-4>SW"


# class of x -> class of the c-token suffix of revcomp(x)
COMPLEMENT_CLASS = {
    TokenClass.W_c3_S: TokenClass.S_c3_W,
    TokenClass.S_c4_S: TokenClass.S_c4_S,
    TokenClass.S_c3_S: TokenClass.S_c3_S,
    TokenClass.W_c2_W: TokenClass.W_c2_W,
    TokenClass.S_c3_W: TokenClass.W_c3_S,
    TokenClass.S_c3_WW: TokenClass.W_c3_S,
    TokenClass.S_c4_SW: TokenClass.S_c4_S,
}


@dataclass(frozen=True)
class CToken:
    seq: str
    c: int

    @property
    def weight(self) -> int:
        return weight(self.seq)

    @property
    def tail_weight(self) -> int:
        return BASE_WEIGHT[self.seq[-1]]

    def __str__(self):
        return self.seq


def _check_c(c: int, lo: int = 2) -> None:
    if c < lo:
        raise ValueError(f"c must be >= {lo}, got {c}")


def prefix_weights(s: str) -> List[int]:
    """``out[j]`` is the weight of ``s[:j]``."""
    return [0, *accumulate(BASE_WEIGHT[b] for b in s)]


def extract_tokens(s: str, c: int) -> List[Tuple[int, str]]:
    """Token occurrence at every end position of ``s``.

    Returns ``(end, token)`` pairs with 1-based end positions, one for every
    position whose prefix weighs at least ``c``.  Occurrences are reported,
    so repeated tokens appear repeatedly.

    >>> extract_tokens("ATACGA", 4)
    [(4, 'TAC'), (5, 'CG'), (6, 'CGA')]
    """
    _check_c(c)
    pw = prefix_weights(s)
    out = []
    start = 0
    for j in range(1, len(s) + 1):
        if pw[j] < c:
            continue
        # the minimal suffix start only moves right as j grows
        while pw[j] - pw[start + 1] >= c:
            start += 1
        out.append((j, s[start:j]))
    return out


def token_suffix(s: str, c: int) -> Optional[str]:
    """The c-token suffix of ``s`` (None if ``s`` weighs less than c)."""
    if weight(s) < c:
        return None
    acc = 0
    for i in range(len(s) - 1, -1, -1):
        acc += BASE_WEIGHT[s[i]]
        if acc >= c:
            return s[i:]
    raise AssertionError("unreachable")


def window_suffixes(s: str, c: int, pw: Optional[List[int]] = None) -> List[Tuple[int, str]]:
    """All substrings of ``s`` weighing exactly c or c + 1, as (end, substring).

    Any string of weight >= c that occurs in ``s`` has a prefix (and a
    suffix) in this set, so it is the right granularity for complement
    look-ups.
    """
    if pw is None:
        pw = prefix_weights(s)
    out = []
    i = 0
    for j in range(1, len(s) + 1):
        while i < j and pw[j] - pw[i] > c + 1:
            i += 1
        k = i
        while k < j and pw[j] - pw[k] >= c:
            out.append((j, s[k:j]))
            k += 1
    return out


def is_token(s: str, c: int) -> bool:
    """True iff ``s`` weighs >= c and every proper suffix weighs < c."""
    _check_c(c)
    if not s:
        return False
    w = weight(s)
    return w >= c and w - BASE_WEIGHT[s[0]] < c


def enumerate_tokens(c: int) -> set:
    """Every c-token: all weight-c strings plus weight-(c+1) strings led by C/G."""
    _check_c(c)
    if c > MAX_ENUM_C:
        raise ValueError(f"token universe too large for c={c} (limit {MAX_ENUM_C})")
    universe = set(strings_of_weight(c))
    for b in "CG":
        universe.update(b + rest for rest in strings_of_weight(c - 1))
    return universe


def classify(t: str, c: int) -> TokenClass:
    """Class of a c-token by weight and its leading/trailing base types."""
    _check_c(c, 4)
    if not is_token(t, c):
        raise ValueError(f"{t!r} is not a {c}-token")
    first_strong = t[0] in STRONG
    last_strong = t[-1] in STRONG
    if weight(t) == c:
        if first_strong:
            return TokenClass.S_c4_S if last_strong else TokenClass.S_c3_W
        return TokenClass.W_c3_S if last_strong else TokenClass.W_c2_W
    if last_strong:
        return TokenClass.S_c3_S
    return TokenClass.S_c4_SW if t[-2] in STRONG else TokenClass.S_c3_WW


def class_size(cls: TokenClass, c: int) -> int:
    """Closed-form number of c-tokens in ``cls``."""
    sizes = {
        TokenClass.W_c3_S: 4 * g(c - 3),
        TokenClass.S_c4_S: 4 * g(c - 4),
        TokenClass.S_c3_S: 4 * g(c - 3),
        TokenClass.W_c2_W: 4 * g(c - 2),
        TokenClass.S_c3_W: 4 * g(c - 3),
        TokenClass.S_c3_WW: 8 * g(c - 3),
        TokenClass.S_c4_SW: 8 * g(c - 4),
    }
    return sizes[TokenClass(cls)]


def complement_token(t: str, c: int) -> str:
    """c-token suffix of the reverse complement of ``t``."""
    return token_suffix(revcomp(t), c)


def lemma1_bounds(c: int) -> Tuple[int, int]:
    """Upper bounds on (token count, total tail weight) over a feasible tag set
    under constraints C1-C3.

    >>> lemma1_bounds(8)
    (1726, 2300)
    """
    _check_c(c, 4)
    if c % 2:
        tokens = 3 * g(c - 2) + 6 * g(c - 3) + g((c - 3) // 2)
        tail = 2 * g(c - 1) + 4 * g(c - 3) + 2 * g((c - 3) // 2)
    else:
        # g(n) is even for n >= 1, so the halving is exact
        tokens = 3 * g(c - 2) + 6 * g(c - 3) + g(c // 2) // 2
        tail = 2 * g(c - 1) + 4 * g(c - 3) + g((c - 2) // 2) + 2 * g((c - 4) // 2)
    return tokens, tail


@dataclass(frozen=True)
class BoundReport:
    c: int
    token_bound: int
    tail_weight_bound: int
    tag_bound_by_length: Optional[int]
    tag_bound_by_weight: Optional[int]
    tag_bound: int


def theorem1_tag_bound(c: int, l: Optional[int] = None, h: Optional[int] = None) -> BoundReport:
    """Maximum tag count of a C1-C3 feasible set with tag length ``l`` and/or
    minimum tag weight ``h``.  Both per-constraint terms are reported.
    """
    _check_c(c, 4)
    if l is None and h is None:
        raise ValueError("at least one of length l or weight h is required")
    if l is not None and l < c:
        raise ValueError(f"tag length {l} must be >= c={c}")
    if h is not None and h < c:
        raise ValueError(f"tag weight {h} must be >= c={c}")
    if l is not None and h is not None and not (l <= h <= 2 * l):
        raise ValueError(f"need l <= h <= 2l, got l={l}, h={h}")
    tokens, tail = lemma1_bounds(c)
    by_len = tokens // (l - c + 1) if l is not None else None
    by_wt = tail // (h - c + 1) if h is not None else None
    return BoundReport(
        c=c,
        token_bound=tokens,
        tail_weight_bound=tail,
        tag_bound_by_length=by_len,
        tag_bound_by_weight=by_wt,
        tag_bound=min(b for b in (by_len, by_wt) if b is not None),
    )
