"""Instance sources: exhaustive enumeration and seeded random caterpillars."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .graph_core import Caterpillar, InputError, parse_caterpillar


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    spine_range: tuple[int, int] = (1, 10)
    leaf_budget: int = 10


def _compositions(total: int, parts: int, lo_first: int, lo_last: int) -> Iterator[tuple[int, ...]]:
    """All sequences of `parts` nonnegative ints summing to total, with floors on the ends."""
    if parts == 1:
        if total >= max(lo_first, lo_last):
            yield (total,)
        return

    def rec(prefix: tuple[int, ...], remaining: int) -> Iterator[tuple[int, ...]]:
        pos = len(prefix)
        if pos == parts - 1:
            if remaining >= lo_last:
                yield prefix + (remaining,)
            return
        lo = lo_first if pos == 0 else 0
        hi = remaining - lo_last
        for c in range(lo, hi + 1):
            yield from rec(prefix + (c,), remaining - c)

    yield from rec((), total)


def enumerate_caterpillars(max_n: int) -> Iterator[Caterpillar]:
    """Every canonical caterpillar of order 3..max_n, exactly once.

    Emission order: by order n, then spine length, then lexicographic on the
    leaf-count sequence. A sequence and its reversal describe the same tree,
    so only the lexicographically smaller of the two is emitted.
    """
    if max_n < 3:
        raise InputError("max_n must be at least 3")
    for n in range(3, max_n + 1):
        for s in range(1, n):
            r = n - s
            if r < 2:
                continue  # a lone spine vertex needs 2 leaves, two ends need 1 each
            lo = 2 if s == 1 else 1
            for counts in _compositions(r, s, lo, lo):
                if counts <= counts[::-1]:
                    yield parse_caterpillar(counts)


def random_caterpillar(cfg: GeneratorConfig, rng: Optional[random.Random] = None) -> Caterpillar:
    """Seeded random caterpillar: uniform spine length, multinomial leaves.

    End counts are bumped afterwards to keep the sequence canonical, so the
    actual leaf count may exceed the budget by up to two.
    """
    lo, hi = cfg.spine_range
    if lo < 1 or hi < lo:
        raise InputError(f"bad spine range {cfg.spine_range}")
    if cfg.leaf_budget < 2:
        raise InputError("leaf budget must be at least 2")
    if rng is None:
        rng = random.Random(cfg.seed)
    s = rng.randint(lo, hi)
    counts = [0] * s
    for _ in range(cfg.leaf_budget):
        counts[rng.randrange(s)] += 1
    if s == 1:
        counts[0] = max(counts[0], 2)
    else:
        counts[0] = max(counts[0], 1)
        counts[-1] = max(counts[-1], 1)
    return parse_caterpillar(counts)


def random_caterpillars(cfg: GeneratorConfig, count: int) -> Iterator[Caterpillar]:
    """A reproducible stream: instance i uses the sub-seed (cfg.seed, i)."""
    for i in range(count):
        sub = random.Random(hash((cfg.seed, i)))
        yield random_caterpillar(cfg, rng=sub)
