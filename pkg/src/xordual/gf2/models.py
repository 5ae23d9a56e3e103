"""Bit-packed GF(2) vectors and matrices.

Rows are stored as Python integers: bit ``j`` of a row is column ``j``. Every
value is an immutable pydantic model, so matrices can be shared freely between
worker processes.
"""

from collections.abc import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator


def _pack(bits: Iterable[int]) -> tuple[int, int]:
    """Pack a 0/1 sequence into (length, integer)."""
    value = 0
    length = 0
    for j, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"GF(2) entries must be 0 or 1, got {b!r}")
        if b:
            value |= 1 << j
        length = j + 1
    return length, value


def iter_bits(value: int) -> Iterable[int]:
    """Yield the positions of the set bits of ``value`` in ascending order."""
    while value:
        low = value & -value
        yield low.bit_length() - 1
        value ^= low


class BitVector(BaseModel):
    """A vector over GF(2) of fixed length."""

    model_config = ConfigDict(frozen=True)

    length: int = Field(ge=0)
    bits: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _check_padding(self) -> "BitVector":
        if self.bits >> self.length:
            raise ValueError("bits beyond length must be zero")
        return self

    @classmethod
    def from_list(cls, values: Sequence[int]) -> "BitVector":
        _, bits = _pack(values)
        return cls(length=len(values), bits=bits)

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        """Parse a string of '0'/'1' characters, column 0 first."""
        text = text.strip()
        if any(c not in "01" for c in text):
            raise ValueError(f"Not a bit string: {text!r}")
        return cls.from_list([int(c) for c in text])

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        bits = 0
        for j in support:
            if not 0 <= j < length:
                raise ValueError(f"Index {j} outside vector of length {length}")
            bits |= 1 << j
        return cls(length=length, bits=bits)

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if other.length != self.length:
            raise ValueError("Length mismatch in GF(2) addition")
        return BitVector(length=self.length, bits=self.bits ^ other.bits)

    def dot(self, other: "BitVector") -> int:
        """Dot product mod 2."""
        if other.length != self.length:
            raise ValueError("Length mismatch in GF(2) dot product")
        return (self.bits & other.bits).bit_count() & 1

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]

    def to_string(self) -> str:
        return "".join(str(b) for b in self.to_list())


class BitMatrix(BaseModel):
    """A dense matrix over GF(2), stored row-major as packed integers."""

    model_config = ConfigDict(frozen=True)

    n_cols: int = Field(ge=0)
    row_bits: tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_rows(self) -> "BitMatrix":
        for value in self.row_bits:
            if value < 0 or value >> self.n_cols:
                raise ValueError("row has bits beyond n_cols")
        return self

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n_cols: int | None = None) -> "BitMatrix":
        packed = []
        width = n_cols
        for row in rows:
            _, value = _pack(row)
            length = len(row)
            if width is None:
                width = length
            elif length != width:
                raise ValueError("All rows must have the same number of columns")
            packed.append(value)
        return cls(n_cols=width or 0, row_bits=tuple(packed))

    @classmethod
    def from_vectors(cls, vectors: Sequence[BitVector], n_cols: int) -> "BitMatrix":
        for v in vectors:
            if v.length != n_cols:
                raise ValueError("All rows must have the same number of columns")
        return cls(n_cols=n_cols, row_bits=tuple(v.bits for v in vectors))

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "BitMatrix":
        return cls.from_rows([[int(c) for c in r.strip()] for r in rows])

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n_cols=n, row_bits=tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "BitMatrix":
        return cls(n_cols=n_cols, row_bits=(0,) * n_rows)

    @property
    def n_rows(self) -> int:
        return len(self.row_bits)

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    def row(self, i: int) -> BitVector:
        return BitVector(length=self.n_cols, bits=self.row_bits[i])

    def rows(self) -> list[BitVector]:
        return [self.row(i) for i in range(self.n_rows)]

    def column(self, j: int) -> BitVector:
        bits = 0
        for i, value in enumerate(self.row_bits):
            if (value >> j) & 1:
                bits |= 1 << i
        return BitVector(length=self.n_rows, bits=bits)

    def entry(self, i: int, j: int) -> int:
        return (self.row_bits[i] >> j) & 1

    def select_rows(self, indices: Sequence[int]) -> "BitMatrix":
        return BitMatrix(n_cols=self.n_cols, row_bits=tuple(self.row_bits[i] for i in indices))

    def transpose(self) -> "BitMatrix":
        return BitMatrix(
            n_cols=self.n_rows,
            row_bits=tuple(self.column(j).bits for j in range(self.n_cols)),
        )

    def matmul(self, other: "BitMatrix") -> "BitMatrix":
        """Matrix product mod 2."""
        if self.n_cols != other.n_rows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        out = []
        for value in self.row_bits:
            acc = 0
            for j in iter_bits(value):
                acc ^= other.row_bits[j]
            out.append(acc)
        return BitMatrix(n_cols=other.n_cols, row_bits=tuple(out))

    def apply(self, x: BitVector) -> BitVector:
        """Matrix-vector product mod 2."""
        if x.length != self.n_cols:
            raise ValueError("Vector length does not match column count")
        bits = 0
        for i, value in enumerate(self.row_bits):
            if (value & x.bits).bit_count() & 1:
                bits |= 1 << i
        return BitVector(length=self.n_rows, bits=bits)

    def is_zero(self) -> bool:
        return not any(self.row_bits)

    def to_lists(self) -> list[list[int]]:
        return [self.row(i).to_list() for i in range(self.n_rows)]

    def to_strings(self) -> list[str]:
        return [self.row(i).to_string() for i in range(self.n_rows)]


class RowBasis(BaseModel):
    """Selection of independent rows of a matrix and the expansion of the others."""

    model_config = ConfigDict(frozen=True)

    independent: tuple[int, ...]
    dependent: tuple[int, ...]
    s_a: BitMatrix
    f: BitMatrix
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.independent)


class SolveResult(BaseModel):
    """Outcome of solving A x = y over GF(2)."""

    model_config = ConfigDict(frozen=True)

    satisfiable: bool
    solution: BitVector | None = None
    kernel: BitMatrix

    @property
    def kernel_dim(self) -> int:
        return self.kernel.n_rows
