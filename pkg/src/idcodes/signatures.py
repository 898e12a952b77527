"""Cover-set bookkeeping and the evaluation function f = nc + ns.

For a code C in F^n and radius r, every vertex v gets a cover set: the set
of codeword slots within distance r of v.  A code identifies F^n exactly
when every cover set is nonempty and no two vertices share one.  We track

  nc = number of vertices with an empty cover set,
  ns = number of unordered vertex pairs with identical cover sets,

and f = nc + ns, which is zero precisely on identifying codes.  Pairs of
uncovered vertices count toward ns (two uncovered vertices cannot be told
apart), so f = 0 still characterizes the property exactly.

Two evaluation paths are provided and cross-checked in the test suite:

* ``SignatureTable`` — a mutable table supporting O(ball) incremental
  updates under codeword addition, removal and swap.  This is what the
  local-search constructions iterate on.
* ``evaluate`` — a static vectorized pass over all of F^n, used for
  one-shot verification of codes of any size.

Cover-set classes are keyed by fingerprint with an exact fallback: the
table interns frozensets of slot indices (hash = fingerprint, equality =
exact comparison), and the static path groups 64-bit scatter hashes and
then confirms every group by direct set comparison, so a hash collision
can never produce a wrong count.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .hypercube import Code, ball_offsets, ball_size

# Per-vertex tables get big fast; the incremental engine is meant for the
# search sizes, not for bulk verification (use evaluate for that).
MAX_TABLE_DIM = 20

_EMPTY_ID = 0
_FP_SEED = 0x1DC0DE5


@dataclass(frozen=True)
class Evaluation:
    """Aggregate result: uncovered count, unseparated-pair count, their sum."""

    nc: int
    ns: int
    f: int

    def __post_init__(self) -> None:
        if self.f != self.nc + self.ns:
            raise ValueError("f must equal nc + ns")


def _pairs(k: int) -> int:
    return k * (k - 1) // 2


class SignatureTable:
    """Mutable cover-set table for one (code, radius) pair.

    Codewords occupy slots; cover sets are frozensets of slot indices,
    interned to integer class ids.  A removed codeword frees its slot for
    reuse, so a swap (remove then add) keeps all other slots stable.

    Single-owner semantics: mutate from one thread at a time.
    """

    def __init__(self, dim: int, radius: int) -> None:
        if not 1 <= dim <= MAX_TABLE_DIM:
            raise ValueError(f"table dim must be in [1, {MAX_TABLE_DIM}]")
        if not 0 <= radius <= dim:
            raise ValueError(f"radius {radius} out of range for dim {dim}")
        self.dim = dim
        self.radius = radius
        n_verts = 1 << dim
        self._offsets = ball_offsets(dim, radius)
        self._key_id = np.zeros(n_verts, dtype=np.int64)
        # class id -> key (frozenset of slots); id 0 = empty key, never freed
        self._keys: dict[int, frozenset[int]] = {0: frozenset()}
        self._ids: dict[frozenset[int], int] = {frozenset(): 0}
        self._count = np.zeros(8, dtype=np.int64)
        self._count[_EMPTY_ID] = n_verts
        self._free_ids: list[int] = []
        self._next_id = 1
        self._slots: list[int | None] = []
        self._free_slots: list[int] = []
        self._word_slot: dict[int, int] = {}
        self.ns = _pairs(n_verts)
        self._ball_matrix: np.ndarray | None = None

    # -- construction ------------------------------------------------------

    @classmethod
    def build(cls, code: Code, radius: int) -> "SignatureTable":
        table = cls(code.dim, radius)
        for word in code.words:
            table.add(word)
        return table

    # -- read-only views ---------------------------------------------------

    @property
    def nc(self) -> int:
        return int(self._count[_EMPTY_ID])

    @property
    def f(self) -> int:
        return self.nc + self.ns

    @property
    def size(self) -> int:
        return len(self._word_slot)

    def evaluation(self) -> Evaluation:
        return Evaluation(self.nc, self.ns, self.f)

    def slot_of(self, word: int) -> int:
        return self._word_slot[word]

    def has_word(self, word: int) -> bool:
        return word in self._word_slot

    def slot_active(self, slot: int) -> bool:
        return 0 <= slot < len(self._slots) and self._slots[slot] is not None

    def word_at(self, slot: int) -> int:
        word = self._slots[slot]
        if word is None:
            raise KeyError(f"slot {slot} is empty")
        return word

    def active_slots(self) -> list[int]:
        return [i for i, w in enumerate(self._slots) if w is not None]

    def words(self) -> list[int]:
        return sorted(self._word_slot)

    def code(self) -> Code:
        return Code.from_words(self.words(), self.dim)

    def cover_set(self, vertex: int) -> frozenset[int]:
        """Slot indices of the codewords within the radius of this vertex."""
        return self._keys[int(self._key_id[vertex])]

    def class_counts(self) -> dict[frozenset[int], int]:
        """Each distinct cover set with the number of vertices holding it."""
        out = {}
        for key, cid in self._ids.items():
            c = int(self._count[cid])
            if c > 0:
                out[key] = c
        return out

    # -- interning ---------------------------------------------------------

    def _intern(self, key: frozenset[int]) -> int:
        cid = self._ids.get(key)
        if cid is not None:
            return cid
        if self._free_ids:
            cid = self._free_ids.pop()
        else:
            cid = self._next_id
            self._next_id += 1
            if cid >= len(self._count):
                grown = np.zeros(2 * len(self._count), dtype=np.int64)
                grown[: len(self._count)] = self._count
                self._count = grown
        self._ids[key] = cid
        self._keys[cid] = key
        self._count[cid] = 0
        return cid

    def _release(self, cid: int) -> None:
        if cid != _EMPTY_ID and self._count[cid] == 0:
            key = self._keys.pop(cid)
            del self._ids[key]
            self._free_ids.append(cid)

    def _move(self, vertex: int, new_id: int) -> None:
        old_id = int(self._key_id[vertex])
        if old_id == new_id:
            return
        self.ns -= int(self._count[old_id]) - 1
        self._count[old_id] -= 1
        self.ns += int(self._count[new_id])
        self._count[new_id] += 1
        self._key_id[vertex] = new_id
        self._release(old_id)

    # -- mutations ---------------------------------------------------------

    def add(self, word: int) -> int:
        """Add a codeword; returns the slot it occupies."""
        if word in self._word_slot:
            raise ValueError(f"word {word} is already a codeword")
        if not 0 <= word < (1 << self.dim):
            raise ValueError(f"word {word} out of range for dim {self.dim}")
        if self._free_slots:
            slot = self._free_slots.pop()
            self._slots[slot] = word
        else:
            slot = len(self._slots)
            self._slots.append(word)
        self._word_slot[word] = slot
        ball = self._offsets ^ np.uint32(word)
        ids = self._key_id[ball]
        for v, old in zip(ball.tolist(), ids.tolist()):
            new_key = self._keys[old] | {slot}
            self._move(v, self._intern(new_key))
        return slot

    def remove_slot(self, slot: int) -> int:
        """Remove the codeword in this slot; returns its word."""
        word = self.word_at(slot)
        ball = self._offsets ^ np.uint32(word)
        ids = self._key_id[ball]
        for v, old in zip(ball.tolist(), ids.tolist()):
            new_key = self._keys[old] - {slot}
            self._move(v, self._intern(new_key))
        self._slots[slot] = None
        del self._word_slot[word]
        self._free_slots.append(slot)
        return word

    def remove(self, word: int) -> int:
        """Remove a codeword by value; returns the slot it freed."""
        slot = self._word_slot[word]
        self.remove_slot(slot)
        return slot

    def swap(self, slot: int, word: int) -> None:
        """Replace the codeword in `slot` by `word` (a noncodeword)."""
        if word in self._word_slot:
            raise ValueError(f"word {word} is already a codeword")
        self.remove_slot(slot)
        self.add(word)  # LIFO slot reuse puts `word` into `slot`

    # -- deltas (no mutation) ----------------------------------------------

    def add_delta(self, word: int) -> int:
        """f(C + word) - f(C); word may not already be a codeword."""
        if word in self._word_slot:
            raise ValueError(f"word {word} is already a codeword")
        ball = self._offsets ^ np.uint32(word)
        t = Counter(self._key_id[ball].tolist())
        delta = 0
        for cid, tk in t.items():
            delta -= tk * (int(self._count[cid]) - tk)
        delta -= t.get(_EMPTY_ID, 0)
        return delta

    def add_delta_all(self) -> np.ndarray:
        """f-delta of adding each word of F^n as a fresh codeword.

        Entries at current codewords are meaningless; mask them out.
        Derivation: a new codeword splits each cover-set class K into the
        part inside its ball (t_K vertices) and the rest, so
        delta_ns = -sum_K t_K (|K| - t_K) and delta_nc = -t_empty.
        """
        if self._ball_matrix is None:
            n_verts = 1 << self.dim
            verts = np.arange(n_verts, dtype=np.uint32)
            self._ball_matrix = verts[:, None] ^ self._offsets[None, :]
        g = self._key_id[self._ball_matrix]
        cs = self._count[g].sum(axis=1)
        t_empty = (g == _EMPTY_ID).sum(axis=1)
        gs = np.sort(g, axis=1)
        eq = gs[:, 1:] == gs[:, :-1]
        run = np.cumsum(eq, axis=1)
        resets = np.where(eq, 0, run)
        run -= np.maximum.accumulate(resets, axis=1)
        eq_pairs = run.sum(axis=1)
        v = g.shape[1]
        t_sq = v + 2 * eq_pairs  # sum_K t_K^2 over each ball
        return t_sq - cs - t_empty

    def remove_delta(self, slot: int) -> int:
        """f(C - codeword in slot) - f(C).

        Every vertex whose cover set holds `slot` lies in that codeword's
        ball, so each affected class sits entirely inside the ball and
        merges with the class holding its key minus `slot`.
        """
        word = self.word_at(slot)
        ball = self._offsets ^ np.uint32(word)
        t = Counter(self._key_id[ball].tolist())
        delta = 0
        for cid, c_class in t.items():
            target = self._keys[cid] - {slot}
            tid = self._ids.get(target)
            c_target = int(self._count[tid]) if tid is not None else 0
            delta += c_class * c_target  # merged pairs
            if not target:
                delta += c_class  # these vertices become uncovered
        return delta

    def swap_delta(self, slot: int, word: int) -> int:
        """f(C with slot's codeword replaced by word) - f(C); no mutation.

        Composed as removal delta plus an addition delta evaluated on an
        overlay of the post-removal state (classes holding `slot` merged
        into their keys without it).
        """
        if word in self._word_slot:
            raise ValueError(f"word {word} is already a codeword")
        delta = self.remove_delta(slot)
        ball = self._offsets ^ np.uint32(word)
        t: Counter[frozenset[int]] = Counter()
        for cid in self._key_id[ball].tolist():
            key = self._keys[cid]
            if slot in key:
                key = key - {slot}
            t[key] += 1
        for key, tk in t.items():
            base = self._ids.get(key)
            c = int(self._count[base]) if base is not None else 0
            merged = self._ids.get(key | {slot})
            if merged is not None:
                c += int(self._count[merged])
            delta -= tk * (c - tk)
        delta -= sum(tk for key, tk in t.items() if not key)
        return delta

    # -- integrity ---------------------------------------------------------

    def check(self) -> None:
        """Assert internal consistency against a from-scratch recount."""
        n_verts = 1 << self.dim
        live = [int(self._count[cid]) for cid in self._keys]
        assert sum(live) == n_verts, "class counts must cover all vertices"
        counted = Counter(self._key_id.tolist())
        for cid, c in counted.items():
            assert int(self._count[cid]) == c, f"stale count for class {cid}"
        assert self.ns == sum(_pairs(c) for c in counted.values())
        active = set(self.active_slots())
        for cid in counted:
            assert self._keys[cid] <= active, "cover set references a free slot"


# -- spec-level function API -------------------------------------------------


def build_signatures(code: Code, radius: int) -> SignatureTable:
    """Full cover-set table for the code, built codeword by codeword."""
    return SignatureTable.build(code, radius)


def swap_delta(table: SignatureTable, slot: int, word: int) -> int:
    return table.swap_delta(slot, word)


def apply_swap(table: SignatureTable, slot: int, word: int) -> None:
    table.swap(slot, word)


def _exact_group_ns(words: np.ndarray, members: np.ndarray, n: int, r: int,
                    want_pair: bool):
    """Exact unseparated-pair count among `members` (all covered vertices).

    Used to confirm fingerprint groups: compares true cover sets via a
    boolean membership matrix, so equal fingerprints never get trusted.
    """
    diff = members[:, None] ^ words[None, :]
    covered = np.bitwise_count(diff) <= r
    packed = np.packbits(covered, axis=1)
    view = packed.view([("", packed.dtype)] * packed.shape[1]).ravel()
    order = np.argsort(view, kind="stable")
    sorted_view = view[order]
    ns = 0
    pair = None
    start = 0
    m = len(members)
    for i in range(1, m + 1):
        if i == m or sorted_view[i] != sorted_view[start]:
            size = i - start
            ns += _pairs(size)
            if want_pair and pair is None and size >= 2:
                pair = (int(members[order[start]]), int(members[order[start + 1]]))
            start = i
    return ns, pair


def _evaluate_static(words: np.ndarray, n: int, r: int, want_witnesses: bool,
                     target_mask: np.ndarray | None = None):
    """nc/ns over the target vertices (default: all of F^n), plus witnesses.

    Scatter pass over codeword balls; classes grouped by (cover count,
    64-bit fingerprint) and every nontrivial group confirmed exactly.
    """
    n_verts = 1 << n
    offs = ball_offsets(n, r).astype(np.uint32)
    idx = (words[:, None].astype(np.uint32) ^ offs[None, :]).ravel()
    cover_count = np.zeros(n_verts, dtype=np.int64)
    np.add.at(cover_count, idx, 1)
    rng = np.random.Generator(np.random.PCG64(_FP_SEED))
    marks = rng.integers(0, 2**63, size=len(words), dtype=np.uint64) | np.uint64(1)
    fp = np.zeros(n_verts, dtype=np.uint64)
    np.bitwise_xor.at(fp, idx, np.repeat(marks, len(offs)))

    if target_mask is None:
        in_target = np.ones(n_verts, dtype=bool)
    else:
        in_target = target_mask

    empty_target = in_target & (cover_count == 0)
    nc = int(empty_target.sum())
    uncovered = None
    if want_witnesses and nc:
        uncovered = int(np.flatnonzero(empty_target)[0])

    ns = _pairs(nc)  # the uncovered vertices form one exact class
    pair = None
    if want_witnesses and nc >= 2:
        empties = np.flatnonzero(empty_target)
        pair = (int(empties[0]), int(empties[1]))

    # group covered target vertices by (cover count, fingerprint); any
    # group of two or more gets its cover sets compared exactly
    covered_idx = np.flatnonzero(in_target & (cover_count > 0))
    cc = cover_count[covered_idx]
    cf = fp[covered_idx]
    order = np.lexsort((cf, cc))
    cc = cc[order]
    cf = cf[order]
    verts = covered_idx[order]
    boundary = np.flatnonzero((cc[1:] != cc[:-1]) | (cf[1:] != cf[:-1]))
    starts = np.concatenate(([0], boundary + 1))
    ends = np.concatenate((boundary + 1, [len(verts)]))
    for s, e in zip(starts.tolist(), ends.tolist()):
        if e - s < 2:
            continue
        sub_ns, sub_pair = _exact_group_ns(
            words, verts[s:e], n, r, want_witnesses and pair is None
        )
        ns += sub_ns
        if pair is None and sub_pair is not None:
            pair = sub_pair
    return nc, ns, uncovered, pair


def evaluate(code: Code, radius: int) -> Evaluation:
    """One-shot exact evaluation of f = nc + ns over all of F^n."""
    if not 0 <= radius <= code.dim:
        raise ValueError(f"radius {radius} out of range for dim {code.dim}")
    words = np.array(code.words, dtype=np.uint32)
    nc, ns, _, _ = _evaluate_static(words, code.dim, radius, False)
    return Evaluation(nc, ns, nc + ns)


@dataclass(frozen=True)
class VerifyReport:
    dim: int
    radius: int
    size: int
    nc: int
    ns: int
    identifying: bool
    uncovered: int | None
    unseparated: tuple[int, int] | None


def diagnose(code: Code, radius: int) -> VerifyReport:
    """Evaluation plus witnesses: an uncovered vertex / an unseparated pair."""
    if not 0 <= radius <= code.dim:
        raise ValueError(f"radius {radius} out of range for dim {code.dim}")
    words = np.array(code.words, dtype=np.uint32)
    nc, ns, uncovered, pair = _evaluate_static(words, code.dim, radius, True)
    return VerifyReport(
        dim=code.dim,
        radius=radius,
        size=len(code),
        nc=nc,
        ns=ns,
        identifying=(nc + ns == 0),
        uncovered=uncovered,
        unseparated=pair,
    )


def is_identifying(code: Code, radius: int) -> bool:
    """True iff every vertex has a nonempty, unique cover set."""
    return evaluate(code, radius).f == 0
