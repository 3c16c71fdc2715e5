"""Exact maximum search for hereditary vertex-set properties.

A family of admissible sets is described by two pieces of data:

* ``keep[j]``: vertices that may coexist with ``j`` (pairwise constraint);
* ``pairmask[j][u]``: vertices that may not join a set already holding
  both ``u`` and ``j`` (triple constraint, i.e. a 3-uniform hypergraph).

Both independent sets of a 3-uniform hypergraph (general position sets,
induced cluster subgraphs) and cliques fit this shape.  The solver is a
Russian-doll search: ``c[i]`` is the optimum restricted to vertices
``i..n-1``, computed for ``i = n-1 .. 0``, and used as an upper bound for
every later subproblem.  Search always branches on the smallest candidate
with the include-branch first, so the first set of a given size reached
is the lexicographically least one.
"""
from __future__ import annotations

import sys

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000))


class SetSearch:
    def __init__(self, n: int, keep=None, pairmask=None):
        self.n = n
        self.keep = keep
        self.pairmask = pairmask
        self.nodes = 0
        self._c = None

    def _candidates_after(self, i: int) -> int:
        p = ((1 << self.n) - 1) >> (i + 1) << (i + 1)
        if self.keep is not None:
            p &= self.keep[i]
        return p

    def _include(self, C, j, P):
        if self.keep is not None:
            P &= self.keep[j]
        if self.pairmask is not None and C:
            row = self.pairmask[j]
            f = 0
            for u in C:
                f |= row[u]
            P &= ~f
        return P

    def _reach(self, C, P, target, c):
        """Extend C (in place) to size ``target``; True on success."""
        size = len(C)
        while P:
            self.nodes += 1
            if size + P.bit_count() < target:
                return False
            low = P & -P
            j = low.bit_length() - 1
            if size + c[j] < target:
                return False
            P ^= low
            nP = self._include(C, j, P)
            C.append(j)
            if size + 1 >= target or self._reach(C, nP, target, c):
                return True
            C.pop()
        return False

    def bounds(self) -> list:
        """c[i] = maximum admissible set within vertices i..n-1 (c[n] = 0)."""
        if self._c is not None:
            return self._c
        n = self.n
        c = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            target = c[i + 1] + 1
            found = target == 1 or self._reach([i], self._candidates_after(i), target, c)
            c[i] = target if found else c[i + 1]
        self._c = c
        return c

    def maximum(self):
        """(value, lexicographically least witness)."""
        c = self.bounds()
        k = c[0]
        if k == 0:
            return 0, ()
        for i in range(self.n):
            if c[i] < k:
                break
            C = [i]
            if k == 1 or self._reach(C, self._candidates_after(i), k, c):
                return k, tuple(C)
        raise AssertionError("suffix bounds are inconsistent")

    def all_of_size(self, k: int) -> list:
        """Every admissible set of cardinality ``k`` (lexicographic order)."""
        c = self.bounds()
        out = []

        def walk(C, P):
            if len(C) == k:
                out.append(tuple(C))
                return
            while P:
                self.nodes += 1
                if len(C) + P.bit_count() < k:
                    return
                low = P & -P
                j = low.bit_length() - 1
                if len(C) + c[j] < k:
                    return
                P ^= low
                nP = self._include(C, j, P)
                C.append(j)
                walk(C, nP)
                C.pop()

        if k == 0:
            return [()]
        for i in range(self.n):
            if c[i] < k:
                break
            walk([i], self._candidates_after(i))
        return out

    def maximum_with(self, need: list, lower: int = 0):
        """Best admissible set S with S & need[min(S)] nonempty.

        Returns (value, witness) with value 0 and an empty witness when no
        set exceeding ``lower`` exists.
        """
        c = self.bounds()
        best = [lower, ()]

        def walk(C, P, satisfied, nd):
            size = len(C)
            if satisfied and size > best[0]:
                best[0], best[1] = size, tuple(C)
            while P:
                self.nodes += 1
                low = P & -P
                j = low.bit_length() - 1
                if size + min(P.bit_count(), c[j]) <= best[0]:
                    return
                if not satisfied and not P & nd:
                    return
                P ^= low
                nP = self._include(C, j, P)
                C.append(j)
                walk(C, nP, satisfied or bool(nd >> j & 1), nd)
                C.pop()

        for i in range(self.n):
            if 1 + c[i + 1] <= best[0]:
                break
            walk([i], self._candidates_after(i), False, need[i])
        if not best[1]:
            return 0, ()
        return best[0], best[1]
