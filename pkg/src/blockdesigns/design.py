"""Block designs as orbits of a base block, and their classification.

A design here is always a set of distinct k-subsets of {0..v-1} with v <= 64,
stored as bit masks. orbit_design() realizes the block-transitive
construction: the block set is one group orbit. classify() enumerates every
orbit of k-subsets, keeps the orbits whose designs are t-designs, and merges
them into isomorphism classes by canonical certificate; representatives()
is the pure-Python orbit enumeration that the vectorized path is checked
against.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from . import isomorph
from .grouplib import builtin
from .kcombs import _colex_ranks, _colex_table, rank_colex, subset_orbits
from .permcore import PermGroup, Permutation


@dataclass(frozen=True, order=True)
class Block:
    """A block as a point bit mask (point i present iff bit i set)."""

    mask: int

    @classmethod
    def from_points(cls, points) -> "Block":
        mask = 0
        for p in points:
            if not 0 <= p < 64:
                raise ValueError("points must lie in 0..63")
            bit = 1 << p
            if mask & bit:
                raise ValueError(f"point {p} repeated in block")
            mask |= bit
        return cls(mask)

    def points(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.mask.bit_length()) if self.mask >> i & 1)

    @property
    def size(self) -> int:
        return self.mask.bit_count()


def _apply_to_mask(g: Permutation, mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << g.images[low.bit_length() - 1]
        mask ^= low
    return out


@dataclass(frozen=True)
class Design:
    """v points, a sorted tuple of distinct k-sized blocks, and provenance."""

    v: int
    k: int
    blocks: tuple[Block, ...]
    group_name: str | None = None
    base_block: Block | None = None

    def __post_init__(self):
        if not 0 < self.v <= 64:
            raise ValueError("v must be in 1..64")
        if not 0 < self.k <= self.v:
            raise ValueError("k must be in 1..v")
        blocks = tuple(sorted(self.blocks, key=Block.points))
        if not blocks:
            raise ValueError("a design needs at least one block")
        for blk in blocks:
            if blk.size != self.k:
                raise ValueError("all blocks must have size k")
            if blk.mask >> self.v:
                raise ValueError("block contains a point >= v")
        if len({blk.mask for blk in blocks}) != len(blocks):
            raise ValueError("duplicate blocks")
        object.__setattr__(self, "blocks", blocks)

    @property
    def b(self) -> int:
        return len(self.blocks)

    def block_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(blk.points() for blk in self.blocks)

    def relabel(self, sigma: Permutation) -> "Design":
        if sigma.degree != self.v:
            raise ValueError("degree mismatch")
        blocks = tuple(Block(_apply_to_mask(sigma, blk.mask)) for blk in self.blocks)
        return Design(self.v, self.k, blocks)


@dataclass(frozen=True)
class LambdaVector:
    """lambda_s for s = 0..t, exact rationals; values[0] = b, values[1] = r."""

    values: tuple[Fraction, ...]

    @property
    def integral(self) -> bool:
        return all(x.denominator == 1 for x in self.values)

    def as_ints(self) -> tuple[int, ...]:
        if not self.integral:
            raise ValueError("non-integral lambda vector")
        return tuple(int(x) for x in self.values)


def lambda_vector(v: int, k: int, t: int, lambda_t: int) -> LambdaVector:
    if not t <= k <= v:
        raise ValueError("need t <= k <= v")
    vals = tuple(
        Fraction(lambda_t * comb(v - s, t - s), comb(k - s, t - s)) for s in range(t + 1)
    )
    return LambdaVector(vals)


def orbit_design(G: PermGroup, base, group_name: str | None = None) -> Design:
    """The G-orbit of a base block, as a design. G is block-transitive on the
    result by construction, and the block count divides the group order."""
    if G.degree > 64:
        raise ValueError("mask form requires degree <= 64")
    blk = base if isinstance(base, Block) else Block.from_points(base)
    if blk.mask >> G.degree:
        raise ValueError("base block contains a point outside the action")
    if not 0 < blk.size < G.degree:
        raise ValueError("base block size must be in 1..degree-1")
    seen = {blk.mask}
    frontier = [blk.mask]
    while frontier:
        nxt = []
        for m in frontier:
            for g in G.generators:
                im = _apply_to_mask(g, m)
                if im not in seen:
                    seen.add(im)
                    nxt.append(im)
        frontier = nxt
    blocks = tuple(Block(m) for m in seen)
    return Design(G.degree, blk.size, blocks, group_name=group_name, base_block=blk)


def lambda_of(design: Design, t: int) -> int | None:
    """lambda_t if every t-subset of points lies in equally many blocks, else
    None. Counts coverage of all C(v,t) subsets exactly."""
    if not 1 <= t <= design.k:
        raise ValueError("t must be in 1..k")
    counts = [0] * comb(design.v, t)
    for blk in design.blocks:
        pts = blk.points()
        for sub in combinations(pts, t):
            counts[rank_colex(sub)] += 1
    lam = counts[0]
    return lam if all(c == lam for c in counts) else None


def is_flag_transitive(G: PermGroup, design: Design) -> bool:
    """True iff G is transitive on incident (point, block) pairs. Raises if G
    does not stabilize the block set."""
    if G.degree != design.v:
        raise ValueError("degree mismatch")
    masks = {blk.mask for blk in design.blocks}
    for g in G.generators:
        if any(_apply_to_mask(g, m) not in masks for m in masks):
            raise ValueError("group does not preserve the block set")
    first = design.blocks[0]
    start = (first.points()[0], first.mask)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for p, m in frontier:
            for g in G.generators:
                flag = (g.images[p], _apply_to_mask(g, m))
                if flag not in seen:
                    seen.add(flag)
                    nxt.append(flag)
        frontier = nxt
    return len(seen) == design.b * design.k


def representatives(G: PermGroup, k: int):
    """Yield the lexicographically least block of every G-orbit of k-subsets,
    in lexicographic order (pure-Python reference enumeration).

    Scans all C(n,k) subsets in lex order with a visited bitmap indexed by
    colex rank; each unvisited subset starts a new orbit, which is walked
    breadth-first and marked. Memory is C(n,k)/8 bytes.
    """
    n = G.degree
    if not 0 < k < n:
        raise ValueError("k must be in 1..degree-1")
    if n > 64:
        raise ValueError("degree <= 64 required")
    total = comb(n, k)
    if total > 1 << 32:
        raise ValueError("C(degree,k) exceeds the 2^32 rank bitmap capacity")
    table = [[comb(x, i + 1) for i in range(k)] for x in range(n)]

    def crank(sub) -> int:
        r = 0
        for i, x in enumerate(sub):
            r += table[x][i]
        return r

    visited = bytearray((total + 7) // 8)
    gens = G.generators
    for sub in combinations(range(n), k):
        r = crank(sub)
        if visited[r >> 3] >> (r & 7) & 1:
            continue
        yield Block.from_points(sub)
        frontier = [sub]
        visited[r >> 3] |= 1 << (r & 7)
        while frontier:
            nxt = []
            for s in frontier:
                for g in gens:
                    im = tuple(sorted(g.images[x] for x in s))
                    ri = crank(im)
                    if not visited[ri >> 3] >> (ri & 7) & 1:
                        visited[ri >> 3] |= 1 << (ri & 7)
                        nxt.append(im)
            frontier = nxt


def fixed_k_subsets(p: Permutation, k: int) -> int:
    """Number of k-subsets fixed setwise by p: a fixed subset is a union of
    whole cycles, so count cycle-length multisets summing to k."""
    lengths = [len(c) for c in p.cycles(include_fixed=True)]
    dp = [0] * (k + 1)
    dp[0] = 1
    for length in lengths:
        for j in range(k, length - 1, -1):
            dp[j] += dp[j - length]
    return dp[k]


def count_orbits_burnside(G: PermGroup, k: int) -> int:
    total = sum(fixed_k_subsets(g, k) for g in G.elements())
    if total % G.order():
        raise AssertionError("Burnside sum not divisible by the group order")
    return total // G.order()


@dataclass(frozen=True)
class DesignClass:
    """One isomorphism class from classify(): the lex-least base block over
    the merged orbit designs, the common lambda and block count, the
    certificate, and every merged orbit's base block."""

    base: tuple[int, ...]
    lam: int
    b: int
    certificate: isomorph.Certificate
    orbit_reps: tuple[tuple[int, ...], ...]


def _certificate_task(args):
    idx, v, rows, aut_images = args
    cert = isomorph.certificate(
        isomorph.RawDesign(v, rows), known_automorphisms=[Permutation(im) for im in aut_images]
    )
    return idx, cert


def classify(G: PermGroup, k: int, t: int = 2, workers: int = 1) -> list[DesignClass]:
    """All nontrivial t-designs among the G-orbits of k-subsets, merged into
    isomorphism classes, sorted by (lambda, base block).

    The group's own generators act as automorphisms of every orbit design and
    seed the certificate search. Worker count never changes the result, only
    how certificate computations are distributed.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    v = G.degree
    if not t < k < v:
        return []
    so = subset_orbits(G, k)
    per_block = comb(k, t)
    denom = comb(v, t)
    tsub_idx = np.asarray(list(combinations(range(k), t)), dtype=np.int64)
    table = _colex_table(v, t)

    found: list[tuple[int, int]] = []  # (orbit index, lambda_t)
    for i in range(so.orbit_count):
        size = int(so.sizes[i])
        if size == comb(v, k):
            continue  # complete design is trivial
        if (size * per_block) % denom:
            continue
        lam = size * per_block // denom
        rows = so.orbit_rows(i)
        subs = rows[:, tsub_idx].reshape(-1, t).astype(np.int64)
        counts = np.bincount(_colex_ranks(subs, table), minlength=denom)
        if counts.min() == counts.max():
            found.append((i, lam))

    aut_images = [tuple(g.images) for g in G.generators]
    tasks = []
    for i, _ in found:
        rows = tuple(tuple(int(x) for x in row) for row in so.orbit_rows(i))
        tasks.append((i, v, rows, aut_images))
    certs: dict[int, isomorph.Certificate] = {}
    if workers == 1 or len(tasks) <= 1:
        for task in tasks:
            idx, cert = _certificate_task(task)
            certs[idx] = cert
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for idx, cert in pool.map(_certificate_task, tasks, chunksize=8):
                certs[idx] = cert

    by_cert: dict[bytes, list[tuple[tuple[int, ...], int, int]]] = {}
    cert_obj: dict[bytes, isomorph.Certificate] = {}
    for i, lam in found:
        base = tuple(int(x) for x in so.rows[so.rep_ranks[i]])
        cert = certs[i]
        by_cert.setdefault(cert.data, []).append((base, lam, int(so.sizes[i])))
        cert_obj.setdefault(cert.data, cert)

    classes = []
    for data, members in by_cert.items():
        bases = sorted(m[0] for m in members)
        lams = {m[1] for m in members}
        bs = {m[2] for m in members}
        if len(lams) != 1 or len(bs) != 1:
            raise AssertionError("isomorphic orbit designs disagree on lambda or block count")
        classes.append(
            DesignClass(
                base=bases[0],
                lam=members[0][1],
                b=members[0][2],
                certificate=cert_obj[data],
                orbit_reps=tuple(bases),
            )
        )
    classes.sort(key=lambda c: (c.lam, c.base))
    return classes


_CLASSIFY_CACHE: dict[tuple[str, int, int], list[DesignClass]] = {}


def classify_builtin(name: str, k: int = 6, t: int = 2, workers: int = 1) -> list[DesignClass]:
    """classify() for a builtin group, cached per (name, k, t); the worker
    count is not part of the key because it cannot affect the result."""
    key = (name, k, t)
    if key not in _CLASSIFY_CACHE:
        _CLASSIFY_CACHE[key] = classify(builtin(name), k, t, workers=workers)
    return _CLASSIFY_CACHE[key]
