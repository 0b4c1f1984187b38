"""Ranked alphabets."""

from typing import Dict, Iterable, Iterator, Mapping, Tuple

from utils.errors import AlphabetError

EPS = "eps"


class RankedAlphabet:
    """
    Finite set of symbols with arities. Always contains the nullary ``eps``.

    Immutable; equal alphabets compare and hash equal.
    """

    __slots__ = ("_arity", "_symbols", "_hash")

    def __init__(self, symbols: Mapping[str, int] | Iterable[Tuple[str, int]] = ()):
        arity: Dict[str, int] = {EPS: 0}
        items = symbols.items() if isinstance(symbols, Mapping) else symbols
        for name, n in items:
            if n < 0:
                raise AlphabetError(f"symbol {name!r} has negative arity {n}")
            if name in arity and arity[name] != n:
                raise AlphabetError(f"symbol {name!r} declared with arities {arity[name]} and {n}")
            arity[name] = n
        self._arity = arity
        # (arity, name) order: leaves first
        self._symbols = tuple(sorted(arity.items(), key=lambda item: (item[1], item[0])))
        self._hash = hash(frozenset(arity.items()))

    @classmethod
    def parse(cls, text: str) -> "RankedAlphabet":
        """Read ``a/1, b/2, eps/0`` (``eps`` may be omitted)."""
        pairs = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            name, _, n = chunk.partition("/")
            if not n.strip().isdigit():
                raise AlphabetError(f"expected name/arity, got {chunk!r}")
            pairs.append((name.strip(), int(n)))
        return cls(pairs)

    def arity(self, name: str) -> int:
        try:
            return self._arity[name]
        except KeyError:
            raise AlphabetError(f"unknown symbol {name!r}") from None

    @property
    def symbols(self) -> Tuple[Tuple[str, int], ...]:
        """(name, arity) pairs ordered by arity, then name."""
        return self._symbols

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(sorted(self._arity))

    @property
    def max_arity(self) -> int:
        return max(self._arity.values())

    def union(self, other: "RankedAlphabet") -> "RankedAlphabet":
        return RankedAlphabet(list(self._arity.items()) + list(other._arity.items()))

    def __contains__(self, name: object) -> bool:
        return name in self._arity

    def __iter__(self) -> Iterator[Tuple[str, int]]:
        return iter(self._symbols)

    def __len__(self) -> int:
        return len(self._arity)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RankedAlphabet) and self._arity == other._arity

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return "RankedAlphabet(" + ", ".join(f"{n}/{k}" for n, k in self._symbols) + ")"
