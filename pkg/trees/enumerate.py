"""Bounded enumeration of ranked trees for the brute-force oracles."""

from functools import lru_cache
from itertools import product
from typing import Iterator, List, Tuple

from .alphabet import RankedAlphabet
from .tree import Tree, print_tree


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """All ordered ways to write ``total`` as ``parts`` positive integers."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for head in range(1, total - parts + 2):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


def tree_order(t: Tree) -> Tuple[int, str]:
    """Size first, then the printed form."""
    return (t.size, print_tree(t))


@lru_cache(maxsize=None)
def _trees_of_size(alphabet: RankedAlphabet, size: int) -> Tuple[Tree, ...]:
    found = []
    for symbol, arity in alphabet.symbols:
        for sizes in compositions(size - 1, arity):
            pools = [_trees_of_size(alphabet, s) for s in sizes]
            for children in product(*pools):
                found.append(Tree(symbol, children))
    found.sort(key=print_tree)
    return tuple(found)


def trees_of_size(alphabet: RankedAlphabet, size: int) -> Tuple[Tree, ...]:
    if size < 1:
        return ()
    return _trees_of_size(alphabet, size)


def enumerate_trees(alphabet: RankedAlphabet, max_nodes: int) -> List[Tree]:
    """
    Every tree over the alphabet with at most ``max_nodes`` nodes.

    Args:
        alphabet: Ranked alphabet
        max_nodes: Node-count bound, at least 1

    Returns:
        Trees ordered by size, then by printed form; no duplicates
    """
    if max_nodes < 1:
        raise ValueError("max_nodes must be at least 1")
    result: List[Tree] = []
    for size in range(1, max_nodes + 1):
        result.extend(trees_of_size(alphabet, size))
    return result
