"""Ranked alphabets, trees and bounded tree enumeration."""

from .alphabet import EPS, RankedAlphabet
from .tree import Tree, leaf, parse_tree, print_tree, read_tree
from .enumerate import compositions, enumerate_trees, tree_order, trees_of_size

__all__ = [
    'EPS',
    'RankedAlphabet',
    'Tree',
    'leaf',
    'parse_tree',
    'print_tree',
    'read_tree',
    'compositions',
    'enumerate_trees',
    'tree_order',
    'trees_of_size'
]
