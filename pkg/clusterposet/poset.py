"""
Poset Module

Finite posets over arbitrary hashable keys, order preserving maps, the
flip-flop gluing of two posets along a map, Hasse diagrams, isomorphism
search and the Coxeter polynomial of the incidence algebra.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import (
    Callable,
    Dict,
    Hashable,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

import networkx as nx
from sympy import Poly

from clusterposet import exact_linalg as la
from clusterposet.errors import InvariantViolation, PreconditionError
from clusterposet.exact_linalg import Matrix

logger = logging.getLogger(__name__)

PLUS = "plus"
MINUS = "minus"

Key = Hashable


# ------------------------------------------------------------
# Finite posets
# ------------------------------------------------------------

class FinitePoset:
    """
    A finite partial order on an ordered list of keys.

    relation[i][j] is True iff elements[i] <= elements[j].
    """

    def __init__(
        self,
        elements: Sequence[Key],
        relation: Sequence[Sequence[bool]],
        check: bool = True,
    ) -> None:
        self.elements: Tuple[Key, ...] = tuple(elements)
        self.relation: Tuple[Tuple[bool, ...], ...] = tuple(
            tuple(bool(v) for v in row) for row in relation
        )
        self._index: Dict[Key, int] = {e: i for i, e in enumerate(self.elements)}

        n = len(self.elements)
        if len(self._index) != n:
            raise ValueError("poset elements must be distinct")
        if len(self.relation) != n or any(len(row) != n for row in self.relation):
            raise ValueError(f"relation must be a {n}x{n} boolean matrix")

        if check:
            self._check_axioms()

    def _check_axioms(self) -> None:
        r = self.relation
        n = len(r)
        for i in range(n):
            if not r[i][i]:
                raise ValueError(f"relation is not reflexive at {self.elements[i]!r}")
            for j in range(i + 1, n):
                if r[i][j] and r[j][i]:
                    raise ValueError(
                        f"relation is not antisymmetric: {self.elements[i]!r}, {self.elements[j]!r}"
                    )
        if not _is_transitive(r):
            raise ValueError("relation is not transitive")

    # --------------------------------------------------------
    # Construction
    # --------------------------------------------------------

    @classmethod
    def from_relation(
        cls, elements: Sequence[Key], leq: Callable[[Key, Key], bool]
    ) -> "FinitePoset":
        elements = tuple(elements)
        relation = [[a == b or bool(leq(a, b)) for b in elements] for a in elements]
        return cls(elements, relation)

    @classmethod
    def from_covers(
        cls, elements: Sequence[Key], covers: Iterable[Tuple[Key, Key]]
    ) -> "FinitePoset":
        """
        The reflexive-transitive closure of the given (smaller, larger) pairs.
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(elements)
        graph.add_edges_from(covers)
        closure = nx.transitive_closure(graph, reflexive=True)
        return cls.from_relation(elements, closure.has_edge)

    # --------------------------------------------------------
    # Access
    # --------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Key]:
        return iter(self.elements)

    def __contains__(self, a: Key) -> bool:
        return a in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        if set(self.elements) != set(other.elements):
            return False
        return all(
            self.leq(a, b) == other.leq(a, b) for a in self.elements for b in self.elements
        )

    def __hash__(self) -> int:
        return hash((frozenset(self.elements), frozenset(self.strict_pairs())))

    def __repr__(self) -> str:
        return f"FinitePoset({len(self)} elements, {len(hasse(self))} covers)"

    def index(self, a: Key) -> int:
        try:
            return self._index[a]
        except KeyError:
            raise KeyError(f"{a!r} is not an element of this poset") from None

    def leq(self, a: Key, b: Key) -> bool:
        return self.relation[self.index(a)][self.index(b)]

    def strict_pairs(self) -> List[Tuple[Key, Key]]:
        return [
            (a, b)
            for i, a in enumerate(self.elements)
            for j, b in enumerate(self.elements)
            if i != j and self.relation[i][j]
        ]

    def up_set(self, a: Key) -> List[Key]:
        i = self.index(a)
        return [b for j, b in enumerate(self.elements) if self.relation[i][j]]

    def down_set(self, a: Key) -> List[Key]:
        i = self.index(a)
        return [b for j, b in enumerate(self.elements) if self.relation[j][i]]

    # --------------------------------------------------------
    # Derived posets
    # --------------------------------------------------------

    def restrict(self, subset: Iterable[Key]) -> "FinitePoset":
        """
        The induced order on subset, listed in this poset's order.
        """
        wanted = set(subset)
        for a in wanted:
            self.index(a)
        keep = [i for i, e in enumerate(self.elements) if e in wanted]
        return FinitePoset(
            [self.elements[i] for i in keep],
            [[self.relation[i][j] for j in keep] for i in keep],
            check=False,
        )

    def dual(self) -> "FinitePoset":
        n = len(self)
        return FinitePoset(
            self.elements,
            [[self.relation[j][i] for j in range(n)] for i in range(n)],
            check=False,
        )

    def to_digraph(self) -> nx.DiGraph:
        """
        Directed graph with an edge a -> b for every a < b.
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(self.elements)
        graph.add_edges_from(self.strict_pairs())
        return graph

    # --------------------------------------------------------
    # Extremal elements, meets and joins
    # --------------------------------------------------------

    def minimal(self) -> List[Key]:
        return [a for a in self.elements if self.down_set(a) == [a]]

    def maximal(self) -> List[Key]:
        return [a for a in self.elements if self.up_set(a) == [a]]

    def minimum(self) -> Optional[Key]:
        lows = self.minimal()
        return lows[0] if len(lows) == 1 else None

    def maximum(self) -> Optional[Key]:
        highs = self.maximal()
        return highs[0] if len(highs) == 1 else None

    def meet(self, a: Key, b: Key) -> Optional[Key]:
        lower = set(self.down_set(a)) & set(self.down_set(b))
        for c in lower:
            if all(self.leq(d, c) for d in lower):
                return c
        return None

    def join(self, a: Key, b: Key) -> Optional[Key]:
        upper = set(self.up_set(a)) & set(self.up_set(b))
        for c in upper:
            if all(self.leq(c, d) for d in upper):
                return c
        return None

    def is_lattice(self) -> bool:
        elements = self.elements
        for i, a in enumerate(elements):
            for b in elements[i + 1:]:
                if self.meet(a, b) is None or self.join(a, b) is None:
                    return False
        return bool(elements)

    def linear_extension(self) -> List[Key]:
        """
        A linear extension, ties broken by element position.
        """
        return list(
            nx.lexicographical_topological_sort(self.to_digraph(), key=self.index)
        )

    # --------------------------------------------------------
    # Incidence algebra
    # --------------------------------------------------------

    def incidence_matrix(self) -> Matrix:
        """
        The Cartan matrix of the incidence algebra: C[i, j] = 1 iff i <= j.
        """
        n = len(self)
        return la.matrix(n, n, [[int(v) for v in row] for row in self.relation])

    def mobius(self) -> Matrix:
        """
        Matrix of the Moebius function, the inverse of the incidence matrix.
        """
        if not len(self):
            return la.zeros(0, 0)
        return Matrix(self.incidence_matrix().inv())


def _is_transitive(relation: Sequence[Sequence[bool]]) -> bool:
    n = len(relation)
    for i in range(n):
        above = [j for j in range(n) if relation[i][j]]
        for j in above:
            row = relation[j]
            for k in range(n):
                if row[k] and not relation[i][k]:
                    return False
    return True


# ------------------------------------------------------------
# Order preserving maps
# ------------------------------------------------------------

@dataclass(frozen=True)
class OrderMap:
    """
    A map between the element sets of two posets.
    """

    domain: FinitePoset
    codomain: FinitePoset
    assignment: Mapping[Key, Key]

    def __post_init__(self) -> None:
        if set(self.assignment) != set(self.domain.elements):
            raise ValueError("an order map must be defined on every domain element")
        for a, b in self.assignment.items():
            if b not in self.codomain:
                raise ValueError(f"{a!r} is mapped outside the codomain: {b!r}")

    def __call__(self, a: Key) -> Key:
        return self.assignment[a]

    def violation(self) -> Optional[Tuple[Key, Key]]:
        """
        A pair a <= b with f(a) not <= f(b), or None.
        """
        for a, b in self.domain.strict_pairs():
            if not self.codomain.leq(self(a), self(b)):
                return (a, b)
        return None

    def is_order_preserving(self) -> bool:
        return self.violation() is None


# ------------------------------------------------------------
# Flip-flops
# ------------------------------------------------------------

def flip_flop(X: FinitePoset, Y: FinitePoset, f: OrderMap, sign: str) -> FinitePoset:
    """
    Glue X and Y along f.

    plus:  x <= y iff f(x) <= y, and no y is below any x.
    minus: y <= x iff y <= f(x), and no x is below any y.

    Elements of X come first, then those of Y.

    Raises:
        PreconditionError: f is not an order preserving map X -> Y, or X and
            Y share elements.
        InvariantViolation: The glued relation is not transitive.
    """
    if sign not in (PLUS, MINUS):
        raise ValueError(f"sign must be {PLUS!r} or {MINUS!r}, got {sign!r}")
    if f.domain != X or f.codomain != Y:
        raise PreconditionError("flip_flop map must go from the first poset to the second")
    if set(X.elements) & set(Y.elements):
        raise PreconditionError("flip_flop needs disjoint posets")

    bad = f.violation()
    if bad is not None:
        raise PreconditionError(f"map is not order preserving on {bad[0]!r} <= {bad[1]!r}")

    nx_, ny = len(X), len(Y)
    n = nx_ + ny
    relation = [[False] * n for _ in range(n)]

    for i in range(nx_):
        for j in range(nx_):
            relation[i][j] = X.relation[i][j]
    for i in range(ny):
        for j in range(ny):
            relation[nx_ + i][nx_ + j] = Y.relation[i][j]

    for i, x in enumerate(X.elements):
        fx = f(x)
        for j, y in enumerate(Y.elements):
            if sign == PLUS:
                relation[i][nx_ + j] = Y.leq(fx, y)
            else:
                relation[nx_ + j][i] = Y.leq(y, fx)

    if not _is_transitive(relation):
        raise InvariantViolation("flip-flop relation is not transitive")

    glued = FinitePoset(X.elements + Y.elements, relation)
    logger.debug("flip_flop(%s): %d + %d elements", sign, nx_, ny)
    return glued


# ------------------------------------------------------------
# Hasse diagrams
# ------------------------------------------------------------

def hasse(P: FinitePoset) -> List[Tuple[Key, Key]]:
    """
    Covering pairs (smaller, larger), ordered by element position.
    """
    reduction = nx.transitive_reduction(P.to_digraph())
    return sorted(reduction.edges(), key=lambda e: (P.index(e[0]), P.index(e[1])))


# ------------------------------------------------------------
# Isomorphism
# ------------------------------------------------------------

@dataclass(frozen=True)
class IsomorphismResult:
    found: bool
    witness: Optional[Dict[Key, Key]] = None

    def __bool__(self) -> bool:
        return self.found


def _levels(P: FinitePoset) -> Dict[Key, int]:
    # Length of the longest chain ending at each element.
    level: Dict[Key, int] = {}
    for a in P.linear_extension():
        below = [level[b] for b in P.down_set(a) if b != a]
        level[a] = max(below, default=-1) + 1
    return level


def _signatures(P: FinitePoset) -> Dict[Key, tuple]:
    covers = hasse(P)
    up_covers = Counter(a for a, _ in covers)
    down_covers = Counter(b for _, b in covers)
    level = _levels(P)
    return {
        a: (
            len(P.up_set(a)),
            len(P.down_set(a)),
            up_covers[a],
            down_covers[a],
            level[a],
        )
        for a in P.elements
    }


def is_isomorphism(P: FinitePoset, Q: FinitePoset, witness: Mapping[Key, Key]) -> bool:
    if set(witness) != set(P.elements) or set(witness.values()) != set(Q.elements):
        return False
    if len(set(witness.values())) != len(P):
        return False
    return all(
        P.leq(a, b) == Q.leq(witness[a], witness[b])
        for a in P.elements
        for b in P.elements
    )


def are_isomorphic(
    P: FinitePoset,
    Q: FinitePoset,
    witness: Optional[Mapping[Key, Key]] = None,
) -> IsomorphismResult:
    """
    Decide whether P and Q are order isomorphic.

    With a witness, only that bijection is checked. Otherwise a backtracking
    search runs over candidates with equal signatures (up/down-set sizes,
    cover counts, level), rarest signature first.
    """
    if witness is not None:
        ok = is_isomorphism(P, Q, witness)
        return IsomorphismResult(ok, dict(witness) if ok else None)

    if len(P) != len(Q):
        return IsomorphismResult(False)
    if len(P.strict_pairs()) != len(Q.strict_pairs()):
        return IsomorphismResult(False)
    if not len(P):
        return IsomorphismResult(True, {})

    sig_p = _signatures(P)
    sig_q = _signatures(Q)
    if Counter(sig_p.values()) != Counter(sig_q.values()):
        return IsomorphismResult(False)

    candidates: Dict[tuple, List[Key]] = defaultdict(list)
    for b in Q.elements:
        candidates[sig_q[b]].append(b)

    order = sorted(
        P.elements,
        key=lambda a: (len(candidates[sig_p[a]]), sig_p[a][4], P.index(a)),
    )

    mapping: Dict[Key, Key] = {}
    used: set = set()

    def consistent(a: Key, b: Key) -> bool:
        for a2, b2 in mapping.items():
            if P.leq(a2, a) != Q.leq(b2, b) or P.leq(a, a2) != Q.leq(b, b2):
                return False
        return True

    def backtrack(position: int) -> bool:
        if position == len(order):
            return True
        a = order[position]
        for b in candidates[sig_p[a]]:
            if b in used or not consistent(a, b):
                continue
            mapping[a] = b
            used.add(b)
            if backtrack(position + 1):
                return True
            del mapping[a]
            used.discard(b)
        return False

    if backtrack(0):
        return IsomorphismResult(True, dict(mapping))
    return IsomorphismResult(False)


# ------------------------------------------------------------
# Derived invariant
# ------------------------------------------------------------

def coxeter_matrix(P: FinitePoset) -> Matrix:
    """
    Coxeter transformation -C^{-T} C of the incidence algebra.
    """
    C = P.incidence_matrix()
    if not len(P):
        return C
    return Matrix(-P.mobius().T * C)


def coxeter_polynomial(P: FinitePoset) -> Poly:
    return la.char_poly(coxeter_matrix(P))
