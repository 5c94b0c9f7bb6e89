"""Finite truncations of ``T = prod_k 2^k``.

At resolution ``n`` a point is a tuple ``(x_0, ..., x_{n-1})`` with
``x_k < 2^k``; there are ``2^(n(n-1)/2)`` of them.  A clopen set is a Python
int used as a bitset over these points, bit ``i`` standing for the point
whose mixed-radix index is ``i`` (``x_0`` most significant, so the order is
lexicographic in ``(x_0, x_1, ...)``).

Atoms of level ``m`` fix ``x_0..x_{m-1}`` and are contiguous blocks of
``2^(m + (m+1) + ... + (n-1))`` bits.  Levels above ``n`` behave like ``n``.

Serialized clopens are big-endian hex strings of the bitset, zero padded
to ``ceil(atomCount / 4)`` digits, prefixed by the resolution:
``"3:f0"`` is the upper half of the 8 points at resolution 3.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, Mapping

__all__ = [
    "MAX_RESOLUTION",
    "AlgebraError",
    "Space",
    "Atom",
    "Clopen",
    "cylinder",
    "closure_m",
    "interior_m",
    "pi_preimage",
    "depends_only_ge",
    "level",
]

MAX_RESOLUTION = 6


class AlgebraError(ValueError):
    pass


def _repunit(copies: int, width: int) -> int:
    """``copies`` ones spaced ``width`` bits apart."""
    return ((1 << (copies * width)) - 1) // ((1 << width) - 1)


class Space:
    """Resolution-``n`` truncation; one shared instance per resolution."""

    _instances: dict[int, "Space"] = {}

    def __new__(cls, n: int):
        if isinstance(n, bool) or not isinstance(n, int) or n < 1 or n > MAX_RESOLUTION:
            raise AlgebraError(f"resolution must be between 1 and {MAX_RESOLUTION}, got {n!r}")
        if n not in cls._instances:
            sp = super().__new__(cls)
            sp._setup(n)
            cls._instances[n] = sp
        return cls._instances[n]

    def _setup(self, n: int):
        self.n = n
        self.atom_count = 1 << (n * (n - 1) // 2)
        self.full = (1 << self.atom_count) - 1
        # block[m] = bits per level-m atom
        self.block = [1 << sum(range(m, n)) for m in range(n + 1)]
        self._fill = [_repunit(self.atom_count // b, b) for b in self.block]

    def __repr__(self):
        return f"Space({self.n})"

    def __reduce__(self):
        return (Space, (self.n,))

    def clamp(self, m: int) -> int:
        if m < 0:
            raise AlgebraError("levels are natural numbers")
        return min(m, self.n)

    def atoms_at(self, m: int) -> int:
        """Number of level-``m`` atoms."""
        m = self.clamp(m)
        return self.atom_count // self.block[m]

    # -- bitset primitives -----------------------------------------------------

    def block_mask(self, m: int, j: int) -> int:
        b = self.block[self.clamp(m)]
        return ((1 << b) - 1) << (j * b)

    def closure(self, X: int, m: int) -> int:
        m = self.clamp(m)
        b = self.block[m]
        if b == 1:
            return X
        ones = (1 << b) - 1
        out = 0
        j = 0
        while X:
            if X & ones:
                out |= ones << (j * b)
            X >>= b
            j += 1
        return out

    def interior(self, X: int, m: int) -> int:
        return self.full & ~self.closure(self.full & ~X, m)

    def pi_preimage(self, X: int, m: int, j: int) -> int:
        """Copy the pattern of ``X`` inside level-``m`` atom ``j`` into every
        level-``m`` atom."""
        m = self.clamp(m)
        b = self.block[m]
        pattern = (X >> (j * b)) & ((1 << b) - 1)
        return pattern * self._fill[m]

    def pattern(self, X: int, m: int, j: int) -> int:
        b = self.block[self.clamp(m)]
        return (X >> (j * b)) & ((1 << b) - 1)

    def replicate(self, pattern: int, m: int) -> int:
        return pattern * self._fill[self.clamp(m)]

    def depends_only_ge(self, X: int, m: int) -> bool:
        m = self.clamp(m)
        return X == self.pi_preimage(X, m, 0)

    def level(self, X: int) -> int:
        """Least ``j`` with ``X`` in ``B_j``."""
        for j in range(self.n + 1):
            if self.closure(X, j) == X:
                return j
        return self.n  # unreachable

    def cylinder(self, u: Mapping[int, int]) -> int:
        for k, v in u.items():
            if k >= self.n:
                raise AlgebraError(f"coordinate {k} is outside resolution {self.n}")
            if not 0 <= v < (1 << k):
                raise AlgebraError(f"value {v} at coordinate {k} must be below 2^{k}")
        pat = 1
        for k in range(self.n - 1, -1, -1):
            width = self.block[k + 1]
            if k in u:
                pat <<= u[k] * width
            else:
                pat *= _repunit(1 << k, width)
        return pat

    def point_index(self, x: Iterable[int]) -> int:
        x = tuple(x)
        if len(x) != self.n:
            raise AlgebraError(f"points have {self.n} coordinates")
        i = 0
        for k, v in enumerate(x):
            if not 0 <= v < (1 << k):
                raise AlgebraError(f"value {v} at coordinate {k} must be below 2^{k}")
            i = (i << k) | v
        return i

    def points(self) -> Iterator[tuple[int, ...]]:
        return product(*(range(1 << k) for k in range(self.n)))

    def atom_index(self, values: Iterable[int]) -> int:
        i = 0
        for k, v in enumerate(values):
            i = (i << k) | v
        return i

    def atoms(self, m: int) -> list["Atom"]:
        m = self.clamp(m)
        return [Atom(self, vals) for vals in product(*(range(1 << k) for k in range(m)))]

    def hex(self, X: int) -> str:
        digits = max(1, (self.atom_count + 3) // 4)
        return f"{self.n}:{X:0{digits}x}"

    def from_hex(self, text: str) -> int:
        head, _, body = text.partition(":")
        if not body or int(head) != self.n:
            raise AlgebraError(f"expected a resolution-{self.n} clopen, got {text!r}")
        X = int(body, 16)
        if X > self.full:
            raise AlgebraError("bitset has bits beyond the atom count")
        return X


class Atom:
    """Level-``m`` atom ``N_u`` with ``dom(u) = {0..m-1}``."""

    __slots__ = ("space", "values", "level", "index")

    def __init__(self, space: Space, values: Iterable[int]):
        values = tuple(values)
        if len(values) > space.n:
            raise AlgebraError("atom level exceeds the resolution")
        for k, v in enumerate(values):
            if not 0 <= v < (1 << k):
                raise AlgebraError(f"value {v} at coordinate {k} must be below 2^{k}")
        self.space = space
        self.values = values
        self.level = len(values)
        self.index = space.atom_index(values)

    @property
    def bits(self) -> int:
        return self.space.block_mask(self.level, self.index)

    def clopen(self) -> "Clopen":
        return Clopen(self.space, self.bits)

    def __eq__(self, other):
        return isinstance(other, Atom) and other.space is self.space and other.values == self.values

    def __hash__(self):
        return hash((self.space.n, self.values))

    def __repr__(self):
        return f"Atom{self.values}"


class Clopen:
    __slots__ = ("space", "bits")

    def __init__(self, space: Space, bits: int = 0):
        if bits < 0 or bits > space.full:
            raise AlgebraError("bitset out of range")
        self.space = space
        self.bits = bits

    @classmethod
    def empty(cls, space: Space) -> "Clopen":
        return cls(space, 0)

    @classmethod
    def full(cls, space: Space) -> "Clopen":
        return cls(space, space.full)

    @classmethod
    def from_hex(cls, text: str) -> "Clopen":
        sp = Space(int(text.partition(":")[0]))
        return cls(sp, sp.from_hex(text))

    def _other(self, other: "Clopen") -> int:
        if other.space is not self.space:
            raise AlgebraError("clopens live in different spaces")
        return other.bits

    def __or__(self, other):
        return Clopen(self.space, self.bits | self._other(other))

    def __and__(self, other):
        return Clopen(self.space, self.bits & self._other(other))

    def __sub__(self, other):
        return Clopen(self.space, self.bits & ~self._other(other))

    def __invert__(self):
        return Clopen(self.space, self.space.full & ~self.bits)

    def __le__(self, other):
        return self.bits & ~self._other(other) == 0

    def __eq__(self, other):
        return isinstance(other, Clopen) and other.space is self.space and other.bits == self.bits

    def __hash__(self):
        return hash((self.space.n, self.bits))

    def __bool__(self):
        return self.bits != 0

    def __len__(self):
        return bin(self.bits).count("1")

    def hex(self) -> str:
        return self.space.hex(self.bits)

    def to_json(self) -> str:
        return self.hex()

    def __repr__(self):
        return f"Clopen({self.hex()})"


def cylinder(u, sp: Space) -> Clopen:
    entries = u.as_dict() if hasattr(u, "as_dict") else dict(u)
    return Clopen(sp, sp.cylinder(entries))


def closure_m(X: Clopen, m: int) -> Clopen:
    return Clopen(X.space, X.space.closure(X.bits, m))


def interior_m(X: Clopen, m: int) -> Clopen:
    return Clopen(X.space, X.space.interior(X.bits, m))


def pi_preimage(X: Clopen, A: Atom) -> Clopen:
    return Clopen(X.space, X.space.pi_preimage(X.bits, A.level, A.index))


def depends_only_ge(X: Clopen, m: int) -> bool:
    return X.space.depends_only_ge(X.bits, m)


def level(X: Clopen) -> int:
    return X.space.level(X.bits)

