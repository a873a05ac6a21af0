import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def brute_force_has_long_induced_cycle(G) -> bool:
    """Independent chordality oracle: search every vertex subset for an
    induced cycle of length >= 4 (2-regular + connected)."""
    n = G.n
    idx = {v: i for i, v in enumerate(G.vertices)}
    adj = [0] * n
    for e in G.edges:
        u, v = tuple(e)
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]
    for mask in range(1 << n):
        if bin(mask).count("1") < 4:
            continue
        ok = True
        for i in range(n):
            if mask >> i & 1 and bin(adj[i] & mask).count("1") != 2:
                ok = False
                break
        if not ok:
            continue
        start = (mask & -mask).bit_length() - 1
        seen = 1 << start
        stack = [start]
        while stack:
            x = stack.pop()
            todo = adj[x] & mask & ~seen
            while todo:
                b = todo & -todo
                seen |= b
                stack.append(b.bit_length() - 1)
                todo ^= b
        if seen == mask:
            return True
    return False
