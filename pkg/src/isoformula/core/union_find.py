"""
isoformula.core.union_find
--------------------------
Disjoint-set forest over hashable elements, used for equivalence closures of
occurrence relations.
"""

from typing import Dict, Generic, Hashable, Iterable, List, TypeVar

T = TypeVar("T", bound=Hashable)


class UnionFind(Generic[T]):
    """
    Dictionary-based disjoint-set forest with union by rank and path compression.

    Elements must be registered with ``add`` (or passed to the constructor) so
    that singleton classes are reported by ``classes``.
    """

    def __init__(self, elements: Iterable[T] = ()) -> None:
        self._parents: Dict[T, T] = {}
        self._ranks: Dict[T, int] = {}
        for element in elements:
            self.add(element)

    def add(self, element: T) -> None:
        if element not in self._parents:
            self._parents[element] = element
            self._ranks[element] = 0

    def find(self, element: T) -> T:
        self.add(element)
        root = element
        while self._parents[root] != root:
            root = self._parents[root]
        # compress
        while self._parents[element] != root:
            self._parents[element], element = root, self._parents[element]
        return root

    def union(self, a: T, b: T) -> None:
        root_a, root_b = self.find(a), self.find(b)
        if root_a == root_b:
            return
        if self._ranks[root_a] < self._ranks[root_b]:
            root_a, root_b = root_b, root_a
        self._parents[root_b] = root_a
        if self._ranks[root_a] == self._ranks[root_b]:
            self._ranks[root_a] += 1

    def classes(self) -> List[List[T]]:
        """Equivalence classes, each in insertion order, ordered by first insertion."""
        grouped: Dict[T, List[T]] = {}
        for element in self._parents:
            grouped.setdefault(self.find(element), []).append(element)
        return list(grouped.values())
