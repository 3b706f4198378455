"""Independent reference computations, deliberately naive and dense."""

from itertools import combinations


def dense_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def dense_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return out


def strip(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def dense_product(factors):
    out = [1]
    for f in factors:
        out = dense_mul(out, f)
    return strip(out)


def dense_qq(n):
    """(q;q)_n as a dense list."""
    factors = []
    for i in range(1, n + 1):
        f = [0] * (i + 1)
        f[0], f[i] = 1, -1
        factors.append(f)
    return dense_product(factors)


def box_gauss(n, k):
    """[n choose k] by counting k-subsets of {0..n-1}: weight sum - k(k-1)/2."""
    if k < 0 or k > n:
        return []
    out = [0] * (k * (n - k) + 1)
    base = k * (k - 1) // 2
    for c in combinations(range(n), k):
        out[sum(c) - base] += 1
    return strip(out)


def subsets(pool):
    for r in range(len(pool) + 1):
        for c in combinations(sorted(pool, reverse=True), r):
            yield c


def brute_S(m, n, zero_free=False):
    """All (alpha, beta) pairs as raw tuples."""
    betas = list(subsets(range(1 if zero_free else 0, n + 1)))
    return [(a, b) for a in subsets(range(1, m + 1)) for b in betas]


def brute_gf(pairs, sign=lambda a, b: 1):
    acc = {}
    for a, b in pairs:
        w = sum(a) + sum(b)
        acc[w] = acc.get(w, 0) + sign(a, b)
    top = max(acc) if acc else -1
    return strip([acc.get(i, 0) for i in range(top + 1)])
