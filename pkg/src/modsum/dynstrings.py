"""Deterministic string family with concatenate / split / equal, plus the
longest-common-prefix structures built on top of it.

Every distinct string a family has ever seen is represented by exactly one
node id, so `equal` is a single integer comparison with no randomness and
no error probability.  Uniqueness holds because every constructor builds
the same canonical tree for the same symbol sequence: an internal node
always splits its symbols at the boundary whose left-weight is closest to
half the total weight (ties toward the smaller index), where a plain
symbol weighs 1 and a run of L zeros weighs L + 1.  Concatenation and
splitting rebuild only the O(log)-ish spine around the cut and are
memoized, so repeated queries against a slowly-changing string stay cheap.

Symbols are encoded as ints: 1 and 0 for themselves, and -(L + 1) for a
run of L zeros.  The public surface decodes runs to (0, L) tuples.
"""
from __future__ import annotations

import sys

from .errors import InvalidParameterError

_EMPTY = 0

_MASK64 = (1 << 64) - 1


def _mix64(x: int) -> int:
    # splitmix64 finalizer; deterministic stand-in for random priorities
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


class RankSelectSet:
    """Ordered set of ints with O(log n) insert, rank, and select.

    A treap keyed by value; priorities come from hashing the key, so the
    structure is deterministic for a given key set.
    """

    __slots__ = ("_key", "_prio", "_left", "_right", "_size", "_root")

    def __init__(self):
        self._key = []
        self._prio = []
        self._left = []
        self._right = []
        self._size = []
        self._root = -1

    def __len__(self) -> int:
        return self._size[self._root] if self._root >= 0 else 0

    def __contains__(self, v: int) -> bool:
        t = self._root
        while t >= 0:
            if v == self._key[t]:
                return True
            t = self._left[t] if v < self._key[t] else self._right[t]
        return False

    def rank(self, v: int) -> int:
        """Number of stored keys strictly below v."""
        t = self._root
        r = 0
        while t >= 0:
            if v <= self._key[t]:
                t = self._left[t]
            else:
                l = self._left[t]
                r += (self._size[l] if l >= 0 else 0) + 1
                t = self._right[t]
        return r

    def select(self, k: int) -> int:
        """The k-th smallest key, 0-based."""
        if not (0 <= k < len(self)):
            raise IndexError("select(%d) on %d keys" % (k, len(self)))
        t = self._root
        while True:
            l = self._left[t]
            ls = self._size[l] if l >= 0 else 0
            if k < ls:
                t = l
            elif k == ls:
                return self._key[t]
            else:
                k -= ls + 1
                t = self._right[t]

    def insert(self, v: int) -> None:
        if v in self:
            return
        node = len(self._key)
        self._key.append(v)
        self._prio.append(_mix64(v))
        self._left.append(-1)
        self._right.append(-1)
        self._size.append(1)
        lo, hi = self._split(self._root, v)
        self._root = self._merge(self._merge(lo, node), hi)

    def _resize(self, t: int) -> None:
        s = 1
        l, r = self._left[t], self._right[t]
        if l >= 0:
            s += self._size[l]
        if r >= 0:
            s += self._size[r]
        self._size[t] = s

    def _split(self, t: int, v: int):
        # (keys < v, keys >= v)
        if t < 0:
            return -1, -1
        if self._key[t] < v:
            a, b = self._split(self._right[t], v)
            self._right[t] = a
            self._resize(t)
            return t, b
        a, b = self._split(self._left[t], v)
        self._left[t] = b
        self._resize(t)
        return a, t

    def _merge(self, a: int, b: int) -> int:
        if a < 0:
            return b
        if b < 0:
            return a
        if self._prio[a] >= self._prio[b]:
            self._right[a] = self._merge(self._right[a], b)
            self._resize(a)
            return a
        self._left[b] = self._merge(a, self._left[b])
        self._resize(b)
        return b


def _encode(symbol) -> int:
    if symbol == 1:
        return 1
    if symbol == 0:
        return 0
    if (isinstance(symbol, tuple) and len(symbol) == 2 and symbol[0] == 0
            and isinstance(symbol[1], int) and symbol[1] >= 0):
        return -(symbol[1] + 1)
    raise InvalidParameterError(
        "symbol must be 0, 1, or (0, run_length), got %r" % (symbol,))


def _decode(code: int):
    return code if code >= 0 else (0, -code - 1)


def _sym_weight(code: int) -> int:
    return 1 if code >= 0 else -code


def _sym_explen(code: int) -> int:
    return 1 if code >= 0 else -code - 1


class StringHandle:
    """Opaque reference to an immutable string owned by one family."""

    __slots__ = ("family", "id")

    def __init__(self, family: "StringFamily", node: int):
        self.family = family
        self.id = node

    def __len__(self) -> int:
        return self.family._nsym[self.id]

    @property
    def length(self) -> int:
        return self.family._nsym[self.id]

    def __repr__(self):
        return "StringHandle(%d symbols)" % (self.length,)


class StringFamily:
    """A growing collection of strings closed under concat and split."""

    def __init__(self):
        # node 0 is the empty string; _uni marks single-symbol subtrees
        self._sym: list[int | None] = [None]
        self._left = [-1]
        self._right = [-1]
        self._nsym = [0]
        self._wt = [0]
        self._explen = [0]
        self._uni: list[int | None] = [None]
        self._leaf_ids: dict[int, int] = {}
        self._pair_ids: dict[tuple[int, int], int] = {}
        self._concat_memo: dict[tuple[int, int], int] = {}
        self._split_memo: dict[tuple[int, int], tuple[int, int]] = {}
        self._repeat_memo: dict[tuple[int, int], int] = {}
        # rebuild spines nest concat inside split inside concat ...
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 100_000))

    # -- public surface -------------------------------------------------

    def empty(self) -> StringHandle:
        return StringHandle(self, _EMPTY)

    def add_string(self, symbol) -> StringHandle:
        """The one-symbol string for 0, 1, or a (0, L) run."""
        return StringHandle(self, self._leaf(_encode(symbol)))

    def concatenate(self, s: StringHandle, t: StringHandle) -> StringHandle:
        return StringHandle(self, self._concat(self._check(s), self._check(t)))

    def split(self, s: StringHandle, i: int):
        """(s[:i], s[i:]) as two handles; 0 <= i <= len(s)."""
        node = self._check(s)
        if not (0 <= i <= self._nsym[node]):
            raise InvalidParameterError(
                "split point %r outside [0, %d]" % (i, self._nsym[node]))
        a, b = self._split_id(node, i)
        return StringHandle(self, a), StringHandle(self, b)

    def equal(self, s: StringHandle, t: StringHandle) -> bool:
        """Exact equality, O(1): one id per distinct string."""
        return self._check(s) == self._check(t)

    def symbols(self, s: StringHandle) -> list:
        """Decoded symbol sequence (materializes the whole string)."""
        out = []
        stack = [self._check(s)]
        while stack:
            t = stack.pop()
            if t == _EMPTY:
                continue
            if self._left[t] < 0:
                out.append(_decode(self._sym[t]))
            else:
                stack.append(self._right[t])
                stack.append(self._left[t])
        return out

    def _check(self, s: StringHandle) -> int:
        if not isinstance(s, StringHandle) or s.family is not self:
            raise InvalidParameterError(
                "handle does not belong to this family: %r" % (s,))
        return s.id

    # -- canonical construction ----------------------------------------

    def _leaf(self, code: int) -> int:
        node = self._leaf_ids.get(code)
        if node is None:
            node = self._new_node(code, -1, -1, 1, _sym_weight(code),
                                  _sym_explen(code), code)
            self._leaf_ids[code] = node
        return node

    def _cons(self, l: int, r: int) -> int:
        # well-formed canonical nodes never have an empty child
        key = (l, r)
        node = self._pair_ids.get(key)
        if node is None:
            ul = self._uni[l]
            uni = ul if (ul is not None and ul == self._uni[r]) else None
            node = self._new_node(None, l, r,
                                  self._nsym[l] + self._nsym[r],
                                  self._wt[l] + self._wt[r],
                                  self._explen[l] + self._explen[r],
                                  uni)
            self._pair_ids[key] = node
        return node

    def _new_node(self, sym, l, r, nsym, wt, explen, uni) -> int:
        node = len(self._sym)
        self._sym.append(sym)
        self._left.append(l)
        self._right.append(r)
        self._nsym.append(nsym)
        self._wt.append(wt)
        self._explen.append(explen)
        self._uni.append(uni)
        return node

    def _tree_floor(self, t: int, budget: int):
        # largest symbol count h with weight(prefix of h symbols) <= budget
        left = self._left
        wt = self._wt
        h = 0
        used = 0
        while t != _EMPTY and left[t] >= 0:
            l = left[t]
            wl = wt[l]
            if wl <= budget - used:
                used += wl
                h += self._nsym[l]
                t = self._right[t]
            else:
                t = l
        if t != _EMPTY and wt[t] <= budget - used:
            used += wt[t]
            h += 1
        return h, used

    def _pair_floor(self, a: int, b: int, budget: int):
        wa = self._wt[a]
        if wa <= budget:
            h, used = self._tree_floor(b, budget - wa)
            return self._nsym[a] + h, wa + used
        return self._tree_floor(a, budget)

    def _sym_at(self, t: int, i: int) -> int:
        left = self._left
        nsym = self._nsym
        while left[t] >= 0:
            l = left[t]
            kl = nsym[l]
            if i < kl:
                t = l
            else:
                i -= kl
                t = self._right[t]
        return self._sym[t]

    def _pair_sym_at(self, a: int, b: int, i: int) -> int:
        ka = self._nsym[a]
        return self._sym_at(a, i) if i < ka else self._sym_at(b, i - ka)

    def _concat(self, a: int, b: int) -> int:
        if a == _EMPTY:
            return b
        if b == _EMPTY:
            return a
        key = (a, b)
        memo = self._concat_memo
        res = memo.get(key)
        if res is not None:
            return res
        nsym = self._nsym
        wt = self._wt
        ka = nsym[a]
        k = ka + nsym[b]
        ua = self._uni[a]
        if ua is not None and ua == self._uni[b]:
            # one repeated symbol: the canonical tree depends only on the
            # count (equal weights make the weight midpoint a count
            # midpoint), so skip the boundary machinery entirely
            res = self._repeat(ua, k)
        elif k == 2:
            res = self._cons(a, b)
        else:
            total = wt[a] + wt[b]
            hf, pf = self._pair_floor(a, b, total // 2)
            if hf < 1:
                hs = 1
            else:
                hs = hf
                if hf + 1 <= k - 1:
                    wnext = _sym_weight(self._pair_sym_at(a, b, hf))
                    if 2 * (pf + wnext) - total < total - 2 * pf:
                        hs = hf + 1
            if hs == ka:
                res = self._cons(a, b)
            elif hs < ka:
                a1, a2 = self._split_id(a, hs)
                res = self._cons(a1, self._concat(a2, b))
            else:
                b1, b2 = self._split_id(b, hs - ka)
                res = self._cons(self._concat(a, b1), b2)
        memo[key] = res
        return res

    def _split_id(self, t: int, k: int):
        nsym = self._nsym
        n = nsym[t]
        if k <= 0 or k >= n:
            assert 0 <= k <= n, "split point %d outside [0, %d]" % (k, n)
            return (_EMPTY, t) if k == 0 else (t, _EMPTY)
        key = (t, k)
        memo = self._split_memo
        res = memo.get(key)
        if res is not None:
            return res
        u = self._uni[t]
        if u is not None:
            res = (self._repeat(u, k), self._repeat(u, n - k))
        else:
            l, r = self._left[t], self._right[t]
            kl = nsym[l]
            if k == kl:
                res = (l, r)
            elif k < kl:
                p1, p2 = self._split_id(l, k)
                res = (p1, self._concat(p2, r))
            else:
                p1, p2 = self._split_id(r, k - kl)
                res = (self._concat(l, p1), p2)
        memo[key] = res
        return res

    def _repeat(self, code: int, count: int) -> int:
        if count == 0:
            return _EMPTY
        if count == 1:
            return self._leaf(code)
        res = self._repeat_memo.get((code, count))
        if res is None:
            half = count // 2
            res = self._cons(self._repeat(code, half),
                             self._repeat(code, count - half))
            self._repeat_memo[(code, count)] = res
        return res


def _suffix_seed(fam: StringFamily, t: int, o: int) -> list:
    """Node ids spelling t[o:] left to right when popped off the end.

    Pure descent over existing nodes — nothing is built.  Requires
    0 <= o < nsym(t).
    """
    st = []
    left = fam._left
    nsym = fam._nsym
    right = fam._right
    while o > 0:
        l = left[t]
        kl = nsym[l]
        if o < kl:
            st.append(right[t])
            t = l
        else:
            o -= kl
            t = right[t]
    st.append(t)
    return st


def _prefix_eq(fam: StringFamily, t1: int, o1: int, t2: int, o2: int,
               c: int) -> bool:
    """Do the first c symbols of t1[o1:] and t2[o2:] agree?

    Simultaneous left-to-right walk over both trees.  A shared node id
    proves its whole span equal in one step, and two single-symbol
    spans (every leaf is one, but so is any repeat subtree) compare by
    symbol value and consume their overlap arithmetically, so
    misaligned uniform regions never get broken into leaves.
    Allocation-free apart from the walk stacks.
    """
    nsym = fam._nsym
    uni = fam._uni
    left = fam._left
    right = fam._right
    st1 = _suffix_seed(fam, t1, o1)
    st2 = _suffix_seed(fam, t2, o2)
    skip1 = 0  # symbols of the stack tops already consumed; a nonzero
    skip2 = 0  # skip always sits on a single-symbol top
    seen = 0
    while seen < c:
        a = st1[-1]
        b = st2[-1]
        if a == b and skip1 == skip2:
            st1.pop()
            st2.pop()
            seen += nsym[a] - skip1
            skip1 = skip2 = 0
            continue
        ua = uni[a]
        ub = uni[b]
        if ua is not None and ub is not None:
            if ua != ub:
                return False
            ra = nsym[a] - skip1
            rb = nsym[b] - skip2
            take = ra if ra <= rb else rb
            seen += take
            if take == ra:
                st1.pop()
                skip1 = 0
            else:
                skip1 += take
            if take == rb:
                st2.pop()
                skip2 = 0
            else:
                skip2 += take
            continue
        # a mixed-content node is internal, and carries no skip: break
        # the wider side down (ties go left-to-right through side 1)
        if ua is None and (ub is not None or nsym[a] >= nsym[b]):
            st1.pop()
            st1.append(right[a])
            st1.append(left[a])
        else:
            st2.pop()
            st2.append(right[b])
            st2.append(left[b])
    return True


def _explen_prefix(fam: StringFamily, t: int, c: int) -> int:
    """Expanded (bit) length of the first c symbols of t, by descent."""
    total = 0
    while c > 0:
        if c >= fam._nsym[t]:
            total += fam._explen[t]
            break
        l = fam._left[t]  # internal: 0 < c < nsym
        if c >= fam._nsym[l]:
            total += fam._explen[l]
            c -= fam._nsym[l]
            t = fam._right[t]
        else:
            t = l
    return total


def _common_prefix_len(fam: StringFamily, t1: int, t2: int,
                       o1: int = 0, o2: int = 0) -> int:
    """Longest common prefix of t1[o1:] and t2[o2:], in symbols.

    Largest c with equal length-c prefixes, found by doubling then
    bisecting so tiny answers cost few probes.
    """
    top = min(fam._nsym[t1] - o1, fam._nsym[t2] - o2)
    if top <= 0:
        return 0
    if t1 == t2 and o1 == o2:
        return top
    lo = 0
    step = 1
    while lo + step <= top and _prefix_eq(fam, t1, o1, t2, o2, lo + step):
        lo += step
        step *= 2
    hi = min(lo + step, top + 1)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _prefix_eq(fam, t1, o1, t2, o2, mid):
            lo = mid
        else:
            hi = mid
    return lo


class PlainBitLcp:
    """Bit string supporting 0 -> 1 writes and suffix-vs-suffix
    longest-common-prefix queries, one family symbol per position.

    With every symbol weighing 1 the canonical split point is always
    floor(n/2), so the tree shape is fixed by the length alone.  A write
    is therefore a path-copying point update (the shape cannot change),
    and an lcp query walks two offsets of the same root without building
    suffix trees.
    """

    def __init__(self, length: int, family: StringFamily | None = None):
        if length < 1:
            raise InvalidParameterError("length must be >= 1")
        self.length = length
        self.family = family if family is not None else StringFamily()
        self._one = self.family._leaf(1)
        self._root = self.family._repeat(0, length)

    def bit(self, i: int) -> int:
        self._check_pos(i)
        return self.family._sym_at(self._root, i)

    def add(self, i: int) -> None:
        """Set bit i.  Setting an already-set bit is a no-op."""
        self._check_pos(i)
        f = self.family
        t = self._root
        path = []  # (sibling id, True when descent went right)
        while f._left[t] >= 0:
            l = f._left[t]
            kl = f._nsym[l]
            if i < kl:
                path.append((f._right[t], False))
                t = l
            else:
                i -= kl
                path.append((l, True))
                t = f._right[t]
        if f._sym[t] == 1:
            return
        new = self._one
        for sib, went_right in reversed(path):
            new = f._cons(sib, new) if went_right else f._cons(new, sib)
        self._root = new

    def lcp(self, i: int, j: int) -> int:
        """Length of the longest common prefix of z[i:] and z[j:]."""
        self._check_suffix(i)
        self._check_suffix(j)
        if i == j:
            return self.length - i
        return _common_prefix_len(self.family, self._root, self._root, i, j)

    def to_list(self) -> list[int]:
        return self.family.symbols(StringHandle(self.family, self._root))

    def _check_pos(self, i):
        if not (0 <= i < self.length):
            raise InvalidParameterError(
                "position %r outside [0, %d)" % (i, self.length))

    def _check_suffix(self, i):
        if not (0 <= i <= self.length):
            raise InvalidParameterError(
                "suffix start %r outside [0, %d]" % (i, self.length))


class CompressedBitLcp:
    """Same contract as PlainBitLcp with zero runs collapsed, so the
    family works over O(ones) symbols rather than O(length).

    Canonical form of the underlying string: a (0, L) symbol sits
    between consecutive ones (L may be 0), before the first one iff the
    string starts with 0, and after the last one iff it ends with 0.
    """

    def __init__(self, length: int, family: StringFamily | None = None):
        if length < 1:
            raise InvalidParameterError("length must be >= 1")
        self.length = length
        self.family = family if family is not None else StringFamily()
        self._one = self.family._leaf(1)
        self._ones = RankSelectSet()
        self._root = self.family._leaf(-(length + 1))  # all zeros: one run

    def bit(self, i: int) -> int:
        self._check_pos(i)
        return 1 if i in self._ones else 0

    def _lead(self) -> int:
        # 1 if the canonical form starts with a run symbol
        s = len(self._ones)
        return 1 if (s == 0 or self._ones.select(0) > 0) else 0

    def add(self, i: int) -> None:
        """Set bit i, splicing the run that contains it."""
        self._check_pos(i)
        if i in self._ones:
            return
        f = self.family
        t = self._ones.rank(i)
        s = len(self._ones)
        pred = self._ones.select(t - 1) if t > 0 else None
        succ = self._ones.select(t) if t < s else None
        start = 0 if pred is None else pred + 1
        end = self.length - 1 if succ is None else succ - 1
        h = 0 if pred is None else self._lead() + 2 * (t - 1) + 1
        if __debug__:
            run = self._run_len(start, end)
            assert f._sym_at(self._root, h) == run, "run bookkeeping drifted"
        left = i - start
        right = end - i
        mid = _EMPTY
        if pred is not None or left > 0:
            mid = f._leaf(-(left + 1))
        mid = f._concat(mid, self._one)
        if succ is not None or right > 0:
            mid = f._concat(mid, f._leaf(-(right + 1)))
        pre, rest = f._split_id(self._root, h)
        _, post = f._split_id(rest, 1)
        self._root = f._concat(f._concat(pre, mid), post)
        self._ones.insert(i)

    @staticmethod
    def _run_len(start, end):
        return -((end - start + 1) + 1)

    def _locate(self, i: int):
        """(at_one, aligned symbol offset, zeros left in the run).

        A suffix starting on a one is aligned to that one's symbol; a
        suffix starting inside a run keeps `rem` zeros of it and aligns
        to the symbol after the run.
        """
        t = self._ones.rank(i)
        if i in self._ones:
            return True, self._lead() + 2 * t, 0
        succ = self._ones.select(t) if t < len(self._ones) else None
        end = self.length - 1 if succ is None else succ - 1
        h_run = 0 if t == 0 else self._lead() + 2 * (t - 1) + 1
        return False, h_run + 1, end - i + 1

    def lcp(self, i: int, j: int) -> int:
        """Length of the longest common prefix of z[i:] and z[j:].

        Compare whole symbols first; if the first differing symbols are
        both runs, the shorter run still matches inside the longer one.
        Works directly on two offsets of the live tree — no suffix is
        ever materialized.
        """
        self._check_suffix(i)
        self._check_suffix(j)
        if i == j:
            return self.length - i
        if i == self.length or j == self.length:
            return 0
        one_i, oi, rem_i = self._locate(i)
        one_j, oj, rem_j = self._locate(j)
        if one_i != one_j:
            return 0  # bit i is 1, bit j is 0 (or the reverse)
        delta = 0
        if not one_i:
            if rem_i != rem_j:
                # the shorter zero tail is consumed first, then a one
                # (or the end of the string) meets a zero
                return min(rem_i, rem_j)
            delta = rem_i
        f = self.family
        root = self._root
        c = _common_prefix_len(f, root, root, oi, oj)
        if c > 0:
            delta += (_explen_prefix(f, root, oi + c)
                      - _explen_prefix(f, root, oi))
        k = f._nsym[root]
        if oi + c >= k or oj + c >= k:
            return delta
        s1 = f._sym_at(root, oi + c)
        s2 = f._sym_at(root, oj + c)
        if s1 >= 0 or s2 >= 0:
            return delta
        return delta + min(-s1 - 1, -s2 - 1)

    def symbols(self) -> list:
        return self.family.symbols(StringHandle(self.family, self._root))

    def to_list(self) -> list[int]:
        out = []
        for sym in self.symbols():
            if sym == 1:
                out.append(1)
            else:
                out.extend([0] * sym[1])
        return out

    def _check_pos(self, i):
        if not (0 <= i < self.length):
            raise InvalidParameterError(
                "position %r outside [0, %d)" % (i, self.length))

    def _check_suffix(self, i):
        if not (0 <= i <= self.length):
            raise InvalidParameterError(
                "suffix start %r outside [0, %d]" % (i, self.length))
