"""Design isomorphism via canonical labeling of the incidence structure.

certificate() runs individualization-refinement on the bipartite point-block
incidence graph, branching on point cells only: blocks are pairwise distinct
point sets, so a discrete point side forces the block order, and any
incidence isomorphism is determined by its point half. The certificate is
the lexicographically least leaf encoding over the whole search tree, which
makes it relabeling-invariant by construction.

Pruning: a candidate in the target cell is skipped when a known automorphism
fixing all previously individualized points maps an already explored
candidate to it; the skipped subtree then only repeats leaf encodings of the
explored one. "Known" automorphisms are the seeded generators, each verified
on entry, plus any discovered when two leaves encode equally.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from hashlib import sha256
from itertools import permutations

import numpy as np

from .permcore import PermGroup, Permutation

MAX_VERTICES = 5000


@dataclass(frozen=True)
class RawDesign:
    """Minimal incidence structure: v points, blocks as sorted point tuples."""

    v: int
    rows: tuple

    def block_rows(self) -> tuple:
        return self.rows


@dataclass(frozen=True)
class Certificate:
    """Canonical encoding of a design plus one labeling that realizes it.

    data is relabeling-invariant: equal for isomorphic designs, unequal
    otherwise. labeling maps original point -> canonical point and is one
    witness, not itself canonical across isomorphic inputs.
    """

    data: bytes
    labeling: tuple[int, ...]

    @property
    def hexdigest(self) -> str:
        return sha256(self.data).hexdigest()


def _unique_rows_inverse(arr: np.ndarray) -> np.ndarray:
    _, inv = np.unique(arr, axis=0, return_inverse=True)
    return inv.reshape(-1)


class _Refiner:
    """Vectorized color refinement for one fixed incidence structure.

    Block signature: sorted point colors of the block's points. Point
    signature: old point color, then sorted incident block colors (padded
    with a sentinel that sorts last, so unequal degrees split). Color ids
    are lex ranks of the signature rows, hence renumbering is monotone and
    cells only ever split; the loop stops when the point color count stops
    growing.
    """

    def __init__(self, v: int, rows):
        self.v = v
        self.b = len(rows)
        self.rows_arr = np.asarray(rows, dtype=np.int64).reshape(self.b, -1)
        incident = [[] for _ in range(v)]
        for j, row in enumerate(rows):
            for p in row:
                incident[p].append(j)
        rmax = max((len(pb) for pb in incident), default=0)
        # pad with block id b; the sentinel color looked up for it sorts last
        self.pb_arr = np.full((v, rmax), self.b, dtype=np.int64)
        for i, pb in enumerate(incident):
            self.pb_arr[i, : len(pb)] = pb

    def refine(self, pcol: np.ndarray) -> np.ndarray:
        if self.b == 0:
            return _unique_rows_inverse(pcol.reshape(-1, 1))
        ncol = int(pcol.max()) + 1
        while True:
            bsig = np.sort(pcol[self.rows_arr], axis=1)
            bcol = _unique_rows_inverse(bsig)
            bcol_ext = np.concatenate([bcol, [self.b]])  # sentinel beyond any color id
            psig = np.concatenate(
                [pcol.reshape(-1, 1), np.sort(bcol_ext[self.pb_arr], axis=1)], axis=1
            )
            new = _unique_rows_inverse(psig)
            newncol = int(new.max()) + 1
            if newncol == ncol:
                return pcol
            pcol = new
            ncol = newncol


def _individualize(pcol: np.ndarray, x: int) -> np.ndarray:
    # x becomes a singleton cell immediately before the rest of its old cell
    cx = pcol[x]
    out = pcol + (pcol > cx)
    out[pcol == cx] = cx + 1
    out[x] = cx
    return out


def _leaf_bytes(v: int, b: int, k: int, rows, pcol) -> bytes:
    """Incidence bitmap under the discrete labeling pcol: one row per
    canonical point, one column per canonical block, left-aligned bits."""
    blocks = sorted(tuple(sorted(pcol[p] for p in row)) for row in rows)
    nbytes = (b + 7) // 8
    pad = 8 * nbytes - b
    rowints = [0] * v
    for j, blk in enumerate(blocks):
        bit = 1 << (b - 1 - j + pad)
        for p in blk:
            rowints[p] |= bit
    header = struct.pack(">HIH", v, b, k)
    return header + b"".join(r.to_bytes(nbytes, "big") for r in rowints)


def certificate(design, known_automorphisms=(), max_vertices: int = MAX_VERTICES) -> Certificate:
    """Canonical certificate of a design (anything with .v and .block_rows()).

    known_automorphisms seeds the pruning group; every seed is verified to
    map the block set onto itself before use, so a wrong seed raises instead
    of corrupting the canonical form.
    """
    v = design.v
    rows = [tuple(sorted(row)) for row in design.block_rows()]
    b = len(rows)
    k = len(rows[0]) if rows else 0
    if v + b > max_vertices:
        raise ValueError(f"{v} points + {b} blocks exceeds the {max_vertices}-vertex bound")
    if len(set(rows)) != b:
        raise ValueError("duplicate blocks")
    if any(len(r) != k for r in rows):
        raise ValueError("blocks must share one size")

    rowset = set(rows)
    auts: list[Permutation] = []
    for g in known_automorphisms:
        if not isinstance(g, Permutation):
            g = Permutation(g)
        if g.degree != v:
            raise ValueError("automorphism degree does not match point count")
        if any(tuple(sorted(g.images[p] for p in row)) not in rowset for row in rows):
            raise ValueError("seeded permutation is not an automorphism of the design")
        if not g.is_identity():
            auts.append(g)

    refiner = _Refiner(v, rows)
    best_data: bytes | None = None
    best_pcol: list[int] | None = None
    aut_group: PermGroup | None = PermGroup(auts) if auts else None

    def add_automorphism(sigma: Permutation) -> None:
        nonlocal aut_group
        if sigma.is_identity():
            return
        if aut_group is not None and aut_group.contains(sigma):
            return
        if any(tuple(sorted(sigma.images[p] for p in row)) not in rowset for row in rows):
            return  # equal leaf encodings always yield a real automorphism; stay safe anyway
        gens = list(aut_group.generators) if aut_group is not None else []
        aut_group = PermGroup(gens + [sigma])

    def search(pcol: np.ndarray, sequence: list[int]) -> None:
        nonlocal best_data, best_pcol
        pcol = refiner.refine(pcol)
        counts = np.bincount(pcol, minlength=int(pcol.max()) + 1)
        nonsingleton = [c for c in np.nonzero(counts > 1)[0]]
        if not nonsingleton:
            plist = pcol.tolist()
            data = _leaf_bytes(v, b, k, rows, plist)
            if best_data is None or data < best_data:
                best_data, best_pcol = data, plist
            elif data == best_data and plist != best_pcol:
                inv_best = [0] * v
                for i, c in enumerate(best_pcol):
                    inv_best[c] = i
                add_automorphism(Permutation([inv_best[plist[i]] for i in range(v)]))
            return
        # target cell: smallest non-singleton, earliest in the cell order
        target = min(nonsingleton, key=lambda c: (counts[c], c))
        candidates = [int(i) for i in np.nonzero(pcol == target)[0]]
        explored: list[int] = []
        for x in candidates:
            if explored and aut_group is not None:
                stab = aut_group.pointwise_stabilizer(sequence)
                if any(x in stab.orbit(e) for e in explored):
                    explored.append(x)
                    continue
            search(_individualize(pcol, x), sequence + [x])
            explored.append(x)

    search(np.zeros(v, dtype=np.int64), [])
    return Certificate(best_data, tuple(best_pcol))


def isomorphism_witness(d1, d2):
    """A Permutation mapping d1's points to d2's so blocks map onto blocks,
    or None. Recovered from the two canonical labelings and then verified,
    so a true return value is self-checking."""
    rows1 = [tuple(sorted(r)) for r in d1.block_rows()]
    rows2 = [tuple(sorted(r)) for r in d2.block_rows()]
    if d1.v != d2.v or len(rows1) != len(rows2):
        return None
    if sorted(len(r) for r in rows1) != sorted(len(r) for r in rows2):
        return None
    c1 = certificate(d1)
    c2 = certificate(d2)
    if c1.data != c2.data:
        return None
    inv2 = [0] * d2.v
    for i, c in enumerate(c2.labeling):
        inv2[c] = i
    sigma = Permutation([inv2[c1.labeling[i]] for i in range(d1.v)])
    rowset2 = set(rows2)
    if any(tuple(sorted(sigma.images[p] for p in row)) not in rowset2 for row in rows1):
        raise AssertionError("certificates matched but the recovered map is not an isomorphism")
    return sigma


def are_isomorphic(d1, d2) -> bool:
    return isomorphism_witness(d1, d2) is not None


def brute_force_isomorphic(d1, d2) -> bool:
    """Oracle: try all v! point maps. v <= 9 enforced."""
    if d1.v != d2.v:
        return False
    v = d1.v
    if v > 9:
        raise ValueError("brute force limited to v <= 9")
    rows1 = [tuple(sorted(r)) for r in d1.block_rows()]
    rows2set = {tuple(sorted(r)) for r in d2.block_rows()}
    if len(rows1) != len(rows2set) or len(set(rows1)) != len(rows1):
        return False
    for images in permutations(range(v)):
        if all(tuple(sorted(images[p] for p in row)) in rows2set for row in rows1):
            return True
    return False
