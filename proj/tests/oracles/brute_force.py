"""Brute-force oracles used to freeze expected values in the C++ tests.

Independent of the library: Stirling words are produced by filtering all
distinct permutations of the multiset, and type B partitions by filtering
all set partitions of [-n, n].
"""
import itertools
import math


def multiset_perms(n, m):
    letters = [v for v in range(1, n + 1) for _ in range(m)]
    return sorted(set(itertools.permutations(letters)))


def is_stirling(w):
    for v in set(w):
        idx = [i for i, x in enumerate(w) if x == v]
        if any(w[i] <= v for i in range(idx[0], idx[-1] + 1) if w[i] != v):
            return False
        if any(w[i] < v for i in range(idx[0], idx[-1] + 1)):
            return False
    return True


def runs(w):
    if not w:
        return []
    out = [[w[0]]]
    for a, b in zip(w, w[1:]):
        if b >= a:
            out[-1].append(b)
        else:
            out.append([b])
    return out


def flattened(w):
    lead = [r[0] for r in runs(w)]
    return all(a <= b for a, b in zip(lead, lead[1:]))


def set_partitions(elems):
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for p in set_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]
        yield [[first]] + p


def typeb_count(n):
    ground = list(range(-n, n + 1))
    count = 0
    for p in set_partitions(ground):
        blocks = {frozenset(b) for b in p}
        if all(frozenset(-x for x in b) in blocks for b in blocks):
            if sum(1 for b in blocks if frozenset(-x for x in b) == b) == 1:
                count += 1
    return count


def typeb_canonical(n):
    """Adler strings of every type B partition of [-n, n], sorted."""
    out = []
    for p in set_partitions(list(range(-n, n + 1))):
        blocks = {frozenset(b) for b in p}
        if not all(frozenset(-x for x in b) in blocks for b in blocks):
            continue
        zero = [b for b in blocks if frozenset(-x for x in b) == b]
        if len(zero) != 1:
            continue
        kept = []
        for b in blocks:
            if b == zero[0]:
                continue
            if (min(x for x in b if x > 0) if any(x > 0 for x in b) else math.inf) < (
                    min(-x for x in b if x < 0) if any(x < 0 for x in b) else math.inf):
                kept.append(b)
        kept.sort(key=lambda b: min(x for x in b if x > 0))
        text = [" ".join(str(x) for x in sorted(x for x in zero[0] if x >= 0))]
        for b in kept:
            neg = sorted((x for x in b if x < 0), reverse=True)
            pos = sorted(x for x in b if x > 0)
            text.append(" ".join(str(x) for x in neg + pos))
        out.append(" | ".join(text))
    return sorted(out)


def stirling2_brute(a, b):
    return sum(1 for p in set_partitions(list(range(a))) if len(p) == b)


if __name__ == "__main__":
    for n, m in [(2, 2), (3, 2), (4, 2), (4, 3), (3, 3)]:
        q = [w for w in multiset_perms(n, m) if is_stirling(w)]
        f = [w for w in q if flattened(w)]
        print(f"n={n} m={m} |Q|={len(q)} |flat|={len(f)}")
        if n == 2 and m == 2:
            print("  flat words", f)
    for w in ["14412332", "12233441", "11332442", "112299388346677455"]:
        ws = [int(c) for c in w]
        print(w, "runs", [len(r) for r in runs(ws)], "des", len(runs(ws)) - 1)
    print("S(4,2) =", stirling2_brute(4, 2), "S(3,2) =", stirling2_brute(3, 2))
    print("typeb counts", [typeb_count(n) for n in range(0, 4)])
    print("typeb n=2", typeb_canonical(2))
    # flat_3 column by brute force for small n (closed-form check anchor)
    for n in range(1, 6):
        q = [w for w in multiset_perms(n, 2) if is_stirling(w) and flattened(w)]
        hist = {}
        for w in q:
            hist[len(runs(w))] = hist.get(len(runs(w)), 0) + 1
        print("n", n, sorted(hist.items()))
