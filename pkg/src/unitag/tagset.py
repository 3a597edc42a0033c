"""Greedy backtracking tag generation and feasibility checks.

Constraints on a tag set, for a hybridization threshold c:

* C1 -- every tag has the configured length and/or weight range;
* C2 -- every string of weight >= c occurs at most once over all tags;
* C3 -- if such a string occurs, its reverse complement does not occur,
  unless the string is its own reverse complement.

Both C2 and C3 reduce exactly to checks on c-tokens and on substrings of
weight c or c + 1 (``windows``), which is what the generator and
:func:`verify_feasible` use.  :func:`oracle_verify` checks the constraints
literally and is meant for small inputs.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .seq import BASE_WEIGHT, DnaSeq, revcomp, weight
from .tokens import extract_tokens, prefix_weights, window_suffixes

log = logging.getLogger(__name__)

# letter order explored by the generator
GREEDY_ALPHABET = "ACTG"

DEFAULT_NODE_BUDGET = 50_000_000


@dataclass(frozen=True)
class TagSetConfig:
    c: int
    length: Optional[int] = None
    min_weight: Optional[int] = None
    max_weight: Optional[int] = None
    enforce_c3: bool = True
    max_tags: Optional[int] = None
    node_budget: Optional[int] = DEFAULT_NODE_BUDGET

    def __post_init__(self):
        c, l = self.c, self.length
        lo, hi = self.min_weight, self.max_weight
        if c < 4:
            raise ValueError(f"c must be >= 4, got {c}")
        if l is None and lo is None:
            raise ValueError("a tag length or a minimum weight is required")
        if hi is not None and lo is None:
            raise ValueError("max_weight requires min_weight")
        if lo is not None and hi is not None and lo > hi:
            raise ValueError(f"min_weight {lo} > max_weight {hi}")
        if l is not None:
            if l < 1:
                raise ValueError(f"length must be positive, got {l}")
            if lo is not None and not (l <= lo and (hi if hi is not None else lo) <= 2 * l):
                raise ValueError(f"weight range [{lo}, {hi}] incompatible with length {l}")
        if c > (lo if lo is not None else l):
            raise ValueError(f"c={c} exceeds the minimum tag weight/length")
        if self.max_tags is not None and self.max_tags < 0:
            raise ValueError("max_tags must be non-negative")

    @property
    def weight_range(self) -> Tuple[int, float]:
        lo = self.min_weight if self.min_weight is not None else 0
        if self.max_weight is not None:
            hi = self.max_weight
        elif self.length is not None:
            hi = 2 * self.length
        else:
            hi = float("inf")
        return lo, hi


class Violation(NamedTuple):
    constraint: str  # "C1", "C2" or "C3"
    string: str
    tags: Tuple[int, ...]
    positions: Tuple[int, ...]  # 1-based end positions, aligned with ``tags``


@dataclass
class FeasibilityReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def by_constraint(self, name: str) -> List[Violation]:
        return [v for v in self.violations if v.constraint == name]


class TokenRegistry:
    """Tokens and weight-c/c+1 windows committed by accepted tags."""

    def __init__(self, c: int):
        self.c = c
        self.tokens = set()
        self.windows = set()

    def commit(self, tag: str) -> None:
        pw = prefix_weights(tag)
        self.tokens.update(t for _, t in extract_tokens(tag, self.c))
        self.windows.update(w for _, w in window_suffixes(tag, self.c, pw))

    def __contains__(self, token: str) -> bool:
        return token in self.tokens

    def __len__(self):
        return len(self.tokens)


class _Prefix:
    """Partial tag with undo information for each position.

    ``tokens`` and ``windows`` map each string to its 1-based end position.
    """

    def __init__(self):
        self.s = ""
        self.pw = [0]
        self.tokens = {}
        self.windows = {}
        # per position: (letter index, token or None, windows added)
        self.frames = []

    def __len__(self):
        return len(self.s)

    def push(self, idx, letter, token, wins):
        self.s += letter
        self.pw.append(self.pw[-1] + BASE_WEIGHT[letter])
        j = len(self.s)
        if token is not None:
            self.tokens[token] = j
        for w in wins:
            self.windows[w] = j
        self.frames.append((idx, token, wins))

    def pop(self) -> int:
        idx, token, wins = self.frames.pop()
        self.s = self.s[:-1]
        self.pw.pop()
        if token is not None:
            del self.tokens[token]
        for w in wins:
            del self.windows[w]
        return idx


def _suffix_info(s: str, pw: Sequence[int], c: int):
    """Token and c/c+1 windows ending at the last position of ``s``."""
    j = len(s)
    total = pw[j]
    token = None
    wins = []
    k = j - 1
    while k >= 0:
        wk = total - pw[k]
        if wk >= c:
            if token is None:
                token = s[k:]
            if wk > c + 1:
                break
            wins.append(s[k:])
        k -= 1
    return token, wins


def _check(s, pw, c, registry, prefix, enforce_c3):
    """Test the last letter of ``s`` against C2/C3.

    Returns ``(reason, blocker, token, wins)``: reason is None, "C2" or
    "C3"; blocker is the end position of the prefix item that caused the
    rejection (None when the registry or the new position itself did).
    """
    token, wins = _suffix_info(s, pw, c)
    if token is None:
        return None, None, token, wins
    if token in registry.tokens:
        return "C2", None, token, wins
    q = prefix.tokens.get(token)
    if q is not None:
        return "C2", q, token, wins
    if enforce_c3:
        rc = revcomp(token)
        if rc != token:
            if rc in registry.windows:
                return "C3", None, token, wins
            q = prefix.windows.get(rc)
            if q is not None:
                return "C3", q, token, wins
        for w in wins:
            rw = revcomp(w)
            if rw == w:
                continue
            if rw in registry.tokens or rw == token:
                return "C3", None, token, wins
            q = prefix.tokens.get(rw)
            if q is not None:
                return "C3", q, token, wins
    return None, None, token, wins


def try_extend(prefix: str, letter: str, registry: TokenRegistry, config: TagSetConfig):
    """Check whether appending ``letter`` to ``prefix`` keeps C2 (and C3).

    Returns ``(accepted, reason)`` where reason is None, "C2" or "C3".
    Nothing is committed to the registry.
    """
    c = config.c
    p = _Prefix()
    for ch in prefix:
        _, _, token, wins = _check(p.s + ch, p.pw + [p.pw[-1] + BASE_WEIGHT[ch]], c,
                                   registry, p, config.enforce_c3)
        p.push(0, ch, token, wins)
    s = prefix + letter
    pw = p.pw + [p.pw[-1] + BASE_WEIGHT[letter]]
    reason, _, _, _ = _check(s, pw, c, registry, p, config.enforce_c3)
    return reason is None, reason


@dataclass
class GreedyResult:
    tags: List[DnaSeq]
    nodes: int
    exhausted: bool  # False when stopped by max_tags or the node budget
    budget_hit: bool = False


_NO_BLOCK = 1 << 30


def greedy_search(config: TagSetConfig, registry: Optional[TokenRegistry] = None,
                  memo: bool = True) -> GreedyResult:
    """Depth-first greedy tag construction.

    Letters are tried in the order A, C, T, G.  A letter is rejected when
    it completes a token already used (in committed tags or earlier in the
    current prefix) or, with C3, a token/complement pair.  On completing a
    tag, the search commits it and resumes by advancing the letter that
    ended the tag's first token.

    With ``memo``, exhausted subtrees are remembered by (depth, weight,
    trailing token) when their failure did not depend on prefix items
    above the subtree root.  The registry only grows, so such a subtree
    stays dead and skipping it never changes the output.
    """
    c = config.c
    length = config.length
    lo, hi = config.weight_range
    weight_only = length is None
    registry = registry if registry is not None else TokenRegistry(c)
    budget = config.node_budget
    cap = config.max_tags
    c3 = config.enforce_c3

    tags: List[DnaSeq] = []
    p = _Prefix()
    # lowest prefix position whose item blocked a letter inside each subtree
    low = [_NO_BLOCK]
    keys = [None]
    dead = set()
    idx = 0
    nodes = 0
    budget_hit = False
    if cap == 0:
        return GreedyResult(tags, 0, False)

    while True:
        j = len(p) + 1
        pushed = False
        while idx < 4:
            letter = GREEDY_ALPHABET[idx]
            w = p.pw[-1] + BASE_WEIGHT[letter]
            if weight_only:
                feasible = w <= hi
            else:
                rest = length - j
                feasible = w + rest <= hi and w + 2 * rest >= lo
            if feasible:
                nodes += 1
                s = p.s + letter
                p.pw.append(w)
                reason, q, token, wins = _check(s, p.pw, c, registry, p, c3)
                p.pw.pop()
                if reason is None:
                    key = (j, w, token if token is not None else s) if memo else None
                    if key is None or key not in dead:
                        p.push(idx, letter, token, wins)
                        low.append(_NO_BLOCK)
                        keys.append(key)
                        pushed = True
                        break
                elif q is not None and q < low[-1]:
                    low[-1] = q
            idx += 1

        if budget is not None and nodes >= budget:
            budget_hit = True
            log.warning("node budget %d reached after %d tags", budget, len(tags))
            break

        if pushed:
            done = (len(p) == length) if not weight_only else (p.pw[-1] >= lo)
            if not done:
                idx = 0
                continue
            tag = DnaSeq(p.s)
            tags.append(tag)
            registry.commit(tag)
            if cap is not None and len(tags) >= cap:
                return GreedyResult(tags, nodes, False)
            first_end = next(k for k, pwk in enumerate(p.pw) if pwk >= c)
            # prefix positions before the first token carry no tokens/windows
            while len(p) >= first_end:
                idx = p.pop()
                low.pop()
                keys.pop()
            idx += 1
            continue

        depth = len(p)
        if not depth:
            break
        # subtree at this depth is exhausted
        blocked_at = low.pop()
        key = keys.pop()
        if key is not None and blocked_at > depth:
            dead.add(key)
        if blocked_at < low[-1]:
            low[-1] = blocked_at
        idx = p.pop() + 1

    return GreedyResult(tags, nodes, not budget_hit, budget_hit)


def greedy_generate(config: TagSetConfig) -> List[DnaSeq]:
    """Deterministic greedy tag set for ``config``."""
    return greedy_search(config).tags


def _check_c1(tags: Sequence[str], config: TagSetConfig) -> List[Violation]:
    out = []
    lo, hi = config.weight_range
    for i, t in enumerate(tags):
        if config.length is not None and len(t) != config.length:
            out.append(Violation("C1", t, (i,), (len(t),)))
            continue
        if not lo <= weight(t) <= hi:
            out.append(Violation("C1", t, (i,), (len(t),)))
    return out


def verify_feasible(tags: Sequence[str], config: TagSetConfig) -> FeasibilityReport:
    """Check C1, C2 and (if enabled) C3 at token granularity."""
    c = config.c
    report = FeasibilityReport(_check_c1(tags, config))
    token_occ = defaultdict(list)
    window_occ = defaultdict(list)
    for i, t in enumerate(tags):
        for end, tok in extract_tokens(t, c):
            token_occ[tok].append((i, end))
        if config.enforce_c3:
            for end, win in window_suffixes(t, c):
                window_occ[win].append((i, end))

    for tok, occ in token_occ.items():
        if len(occ) > 1:
            report.violations.append(
                Violation("C2", tok, tuple(i for i, _ in occ), tuple(e for _, e in occ)))
    if config.enforce_c3:
        for tok, occ in token_occ.items():
            rc = revcomp(tok)
            if rc != tok and rc in window_occ:
                both = occ[:1] + window_occ[rc][:1]
                report.violations.append(
                    Violation("C3", tok, tuple(i for i, _ in both), tuple(e for _, e in both)))
    return report


def oracle_verify(tags: Sequence[str], config: TagSetConfig) -> FeasibilityReport:
    """Literal constraint check over every substring of weight >= c.

    Quadratic in tag length; for tests on small inputs.
    """
    c = config.c
    report = FeasibilityReport(_check_c1(tags, config))
    occ = defaultdict(list)
    for i, t in enumerate(tags):
        for a in range(len(t)):
            for b in range(a + 1, len(t) + 1):
                sub = t[a:b]
                if weight(sub) >= c:
                    occ[sub].append((i, b))
    for sub, where in occ.items():
        if len(where) > 1:
            report.violations.append(
                Violation("C2", sub, tuple(i for i, _ in where), tuple(e for _, e in where)))
    if config.enforce_c3:
        for sub, where in occ.items():
            rc = revcomp(sub)
            if rc != sub and rc in occ:
                both = where[:1] + occ[rc][:1]
                report.violations.append(
                    Violation("C3", sub, tuple(i for i, _ in both), tuple(e for _, e in both)))
    return report


def token_occurrences(tags: Iterable[str], c: int) -> int:
    return sum(len(extract_tokens(t, c)) for t in tags)
