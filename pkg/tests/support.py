"""Reference implementations used to cross-check the package.

Everything here is deliberately written from scratch in plain Python:
breadth-first connectivity, brute-force subset enumeration, and a direct
transcription of the bound formulas with a naive full scan.  Slow is fine;
independent is the point.
"""

import itertools
import math


def bfs_connected(n, edges):
    if n <= 1:
        return True
    adj = {i: [] for i in range(n)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def brute_force_connectivity(n, edges, p):
    """Sum p^k (1-p)^(m-k) over connected edge subsets, one subset at a time."""
    edges = list(edges)
    m = len(edges)
    total = 0.0
    count = 0
    for bits in itertools.product((0, 1), repeat=m):
        chosen = [e for e, b in zip(edges, bits) if b]
        if bfs_connected(n, chosen):
            k = sum(bits)
            total += p**k * (1.0 - p) ** (m - k)
            count += 1
    return total, count


def connected_count_by_size(n, edges):
    edges = list(edges)
    counts = [0] * (len(edges) + 1)
    for bits in itertools.product((0, 1), repeat=len(edges)):
        chosen = [e for e, b in zip(edges, bits) if b]
        if bfs_connected(n, chosen):
            counts[sum(bits)] += 1
    return counts


def sym2_eigenvalues(a, b, c):
    """Eigenvalues of [[a, b], [b, c]] from the characteristic polynomial."""
    disc = math.sqrt((a - c) ** 2 + 4.0 * b * b)
    return sorted(((a + c - disc) / 2.0, (a + c + disc) / 2.0))


def reference_s_squared(n, m, deg_sq, p):
    return 2 * m * p * (n - 1) * (2 - p) + p * p * (n - 1) * deg_sq - 4 * m * m * p * p


def reference_bound(n, m, deg_sq, p, n_cap=10**6):
    """Naive full transcription of the maximized ratio; no pruning, no tricks."""
    s_sq = reference_s_squared(n, m, deg_sq, p)
    s = math.sqrt(max(0.0, s_sq))
    energy = 4 * m * p - 2 * m * p * p + p * p * deg_sq
    if s_sq <= 0.0:
        hi = n_cap
    else:
        ratio = (s_sq + 4 * m * m * p * p) / s_sq
        hi = n_cap if ratio >= n_cap else int(math.floor(ratio))
    hi = max(2, hi)
    best, best_n = -1.0, 2
    for N in range(2, hi + 1):
        r = 1.0 - ((n - 2) / (n - 1)) ** (N - 1)
        raw = 2 * m * p * r - s * math.sqrt(N - 1)
        num = max(0.0, raw) ** 2
        val = min(1.0, num / ((n - 1) * r * r * energy))
        if val > best:
            best, best_n = val, N
    return best, best_n


def random_connected_graph(rng, n, extra_edges):
    """Random spanning tree plus a few extra edges; rng is random.Random."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        a, b = order[rng.randrange(i)], order[i]
        edges.add((min(a, b), max(a, b)))
    attempts = 0
    while len(edges) < n - 1 + extra_edges and attempts < 50 * (extra_edges + 1):
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            edges.add((min(a, b), max(a, b)))
        attempts += 1
    return sorted(edges)
