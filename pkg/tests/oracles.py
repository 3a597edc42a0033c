"""Brute-force references, deliberately independent of the library code paths."""

from itertools import product

W = {"A": 1, "T": 1, "C": 2, "G": 2}
PAIR = {"A": "T", "T": "A", "C": "G", "G": "C"}


def wt(s):
    return sum(W[b] for b in s)


def rc(s):
    return "".join(PAIR[b] for b in reversed(s))


def all_strings(max_len):
    for n in range(max_len + 1):
        for t in product("ACGT", repeat=n):
            yield "".join(t)


def strings_up_to_weight(n, prefix=""):
    """Every string of weight <= n, by extending prefixes letter by letter."""
    yield prefix
    for b in "ACGT":
        if wt(prefix) + W[b] <= n:
            yield from strings_up_to_weight(n, prefix + b)


def count_weight(n):
    return sum(1 for s in strings_up_to_weight(n) if wt(s) == n)


def count_selfcomp(n):
    return sum(1 for s in strings_up_to_weight(n) if wt(s) == n and s == rc(s))


def is_token_literal(s, c):
    return wt(s) >= c and all(wt(s[i:]) < c for i in range(1, len(s)))


def token_universe(c):
    # tokens weigh at most c + 1, hence have at most c + 1 letters
    return {s for s in all_strings(c + 1) if s and is_token_literal(s, c)}


def minimal_suffix_tokens(s, c):
    """(1-based end, token) by scanning every start for every end."""
    out = []
    for j in range(1, len(s) + 1):
        best = None
        for i in range(j - 1, -1, -1):
            if wt(s[i:j]) >= c:
                best = s[i:j]
                break
        if best is not None:
            out.append((j, best))
    return out


def class_by_pattern(t, c):
    """Appendix class from the W/S pattern and weight, written out case by case."""
    k = "".join("S" if b in "CG" else "W" for b in t)
    w = wt(t)
    if w == c and k[0] == "W" and k[-1] == "S":
        return "W<c-3>S"
    if w == c and k[0] == "S" and k[-1] == "S":
        return "S<c-4>S"
    if w == c and k[0] == "W" and k[-1] == "W":
        return "W<c-2>W"
    if w == c and k[0] == "S" and k[-1] == "W":
        return "S<c-3>W"
    if w == c + 1 and k[-1] == "S":
        return "S<c-3>S"
    if w == c + 1 and k.endswith("WW"):
        return "S<c-3>WW"
    if w == c + 1 and k.endswith("SW"):
        return "S<c-4>SW"
    raise AssertionError(t)


def hybridizes_literal(p, t, c):
    """Any substring pair (x in p, rc(x) in t) with weight >= c."""
    for i in range(len(p)):
        for j in range(i + 1, len(p) + 1):
            x = p[i:j]
            if wt(x) >= c and rc(x) in t:
                return True
    return False


def feasible_literal(tags, c, enforce_c3=True):
    """Definition-level C2/C3 check (C1 not included)."""
    count = {}
    for t in tags:
        for i in range(len(t)):
            for j in range(i + 1, len(t) + 1):
                x = t[i:j]
                if wt(x) >= c:
                    count[x] = count.get(x, 0) + 1
    if any(v > 1 for v in count.values()):
        return False
    if enforce_c3:
        for x in count:
            if rc(x) != x and rc(x) in count:
                return False
    return True


def assignable_brute(primer_sets, tags_of, n_tags):
    """Exhaustive search for an assignable primer choice + tag mapping."""
    from itertools import permutations
    for choice in product(*primer_sets):
        for perm in permutations(range(n_tags), len(choice)):
            a = dict(zip(choice, perm))
            used = set(perm)
            if all(t not in used or a[p] == t for p in choice for t in tags_of[p]):
                return True
    return False
