"""Symbolic abelian-group descriptions and homotopy groups of sphere wedges.

Groups that arise as the invariants in this package are described
symbolically (trivial, cyclic, free abelian of finite or countable rank,
unevaluated ``pi_n`` of a sphere or wedge, direct sums, or an opaque
symbolic factor).  A :class:`HomotopyTable` resolves ``pi_n(S^m)`` queries:
below-diagonal and diagonal values follow from connectivity, a handful of
classical entries ship as builtins, and further entries can be loaded from
a text file where every line carries a provenance note.  Lookups that miss
the table stay symbolic; the package never fabricates a value.

:func:`hilton_pi` computes the homotopy group of a wedge of spheres by
summing sphere contributions over basic products, one for every Lyndon
word in letters indexed by the wedge summands; a product of letters with
dimensions ``d_1..d_w`` contributes the sphere of dimension
``1 + sum(d_t - 1)``, and spheres above the query dimension are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "GroupDescription",
    "Trivial",
    "Cyclic",
    "FreeAbelian",
    "PiOfSphere",
    "PiOfWedge",
    "SymbolicGroup",
    "DirectSum",
    "direct_sum",
    "SphereWedge",
    "TableEntry",
    "TableFormatError",
    "HomotopyTable",
    "default_table",
    "homotopy_table_lookup",
    "lyndon_words",
    "hilton_pi",
    "COUNTABLE",
]

#: Rank marker for free abelian groups of countably infinite rank.
COUNTABLE = "countable"


class GroupDescription:
    """Base class for symbolic abelian-group descriptions."""

    @property
    def is_concrete(self) -> bool:
        """True when no unevaluated symbolic part remains."""
        return True

    def evaluate(self, table: "HomotopyTable | None" = None) -> "GroupDescription":
        """Resolve symbolic parts against a homotopy table where possible."""
        return self

    def render(self, mark_unknown: bool = False) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class Trivial(GroupDescription):
    def render(self, mark_unknown: bool = False) -> str:
        return "0"


@dataclass(frozen=True)
class Cyclic(GroupDescription):
    """The finite cyclic group of the given order (>= 2)."""

    order: int

    def __post_init__(self) -> None:
        if self.order < 2:
            raise ValueError(f"cyclic order must be >= 2, got {self.order}")

    def render(self, mark_unknown: bool = False) -> str:
        return f"Z/{self.order}"


@dataclass(frozen=True)
class FreeAbelian(GroupDescription):
    """Free abelian of finite rank >= 1 or countably infinite rank."""

    rank: int | str = 1

    def __post_init__(self) -> None:
        if self.rank != COUNTABLE and (not isinstance(self.rank, int) or self.rank < 1):
            raise ValueError(f"rank must be a positive integer or {COUNTABLE!r}")

    def render(self, mark_unknown: bool = False) -> str:
        if self.rank == COUNTABLE:
            return "Z^(countable)"
        return "Z" if self.rank == 1 else f"Z^{self.rank}"


@dataclass(frozen=True)
class SphereWedge:
    """A finite wedge of spheres with an optional aspherical factor.

    ``dims`` lists sphere dimensions (each >= 2, stored sorted); the factor
    is an opaque description such as ``"K(G(d_{1,2}L),1)"`` and is omitted
    when the corresponding sublink is empty.  An empty wedge with no factor
    is a point.
    """

    dims: tuple[int, ...] = ()
    group_factor: str | None = None

    def __post_init__(self) -> None:
        if any(d < 2 for d in self.dims):
            raise ValueError("sphere dimensions must be >= 2")
        object.__setattr__(self, "dims", tuple(sorted(self.dims)))

    def render(self) -> str:
        parts = ([self.group_factor] if self.group_factor else []) + [
            f"S^{d}" for d in self.dims
        ]
        return " v ".join(parts) if parts else "*"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class PiOfSphere(GroupDescription):
    """Unevaluated ``pi_n(S^m)``."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise ValueError("sphere homotopy indices must be >= 1")

    @property
    def is_concrete(self) -> bool:
        return False

    def evaluate(self, table: "HomotopyTable | None" = None) -> GroupDescription:
        table = table or default_table()
        known = table.lookup(self.n, self.m)
        return self if known is None else known

    def render(self, mark_unknown: bool = False) -> str:
        text = f"pi_{self.n}(S^{self.m})"
        return f"{text} [unknown]" if mark_unknown else text


@dataclass(frozen=True)
class PiOfWedge(GroupDescription):
    """Unevaluated ``pi_n`` of a wedge of spheres (with optional factor).

    Evaluates through :func:`hilton_pi` when no aspherical factor is
    present; a bare aspherical factor has no higher homotopy, so an empty
    wedge evaluates to the trivial group either way.
    """

    n: int
    wedge: SphereWedge

    @property
    def is_concrete(self) -> bool:
        return False

    def evaluate(self, table: "HomotopyTable | None" = None) -> GroupDescription:
        if not self.wedge.dims:
            return Trivial() if self.n >= 2 else self
        if self.wedge.group_factor is not None:
            return self
        return hilton_pi(self.n, self.wedge.dims, table)

    def render(self, mark_unknown: bool = False) -> str:
        return f"pi_{self.n}({self.wedge.render()})"


@dataclass(frozen=True)
class SymbolicGroup(GroupDescription):
    """An opaque symbolic description that evaluation never touches."""

    text: str

    @property
    def is_concrete(self) -> bool:
        return False

    def render(self, mark_unknown: bool = False) -> str:
        return self.text


@dataclass(frozen=True)
class DirectSum(GroupDescription):
    parts: tuple[GroupDescription, ...]

    @property
    def is_concrete(self) -> bool:
        return all(part.is_concrete for part in self.parts)

    def evaluate(self, table: "HomotopyTable | None" = None) -> GroupDescription:
        return direct_sum(part.evaluate(table) for part in self.parts)

    def render(self, mark_unknown: bool = False) -> str:
        return " + ".join(part.render(mark_unknown) for part in self.parts)


def direct_sum(parts: Iterable[GroupDescription]) -> GroupDescription:
    """Form a direct sum, flattening nested sums and dropping trivial parts."""
    flat: list[GroupDescription] = []
    for part in parts:
        if isinstance(part, DirectSum):
            flat.extend(part.parts)
        elif not isinstance(part, Trivial):
            flat.append(part)
    if not flat:
        return Trivial()
    if len(flat) == 1:
        return flat[0]
    return DirectSum(tuple(flat))


@dataclass(frozen=True)
class TableEntry:
    group: GroupDescription
    provenance: str


class TableFormatError(ValueError):
    """Malformed homotopy-table file."""


_BUILTIN_ENTRIES: dict[tuple[int, int], TableEntry] = {
    (3, 2): TableEntry(FreeAbelian(1), "builtin"),
    (4, 2): TableEntry(Cyclic(2), "builtin"),
    (5, 2): TableEntry(Cyclic(2), "builtin"),
    (4, 3): TableEntry(Cyclic(2), "builtin"),
    (5, 3): TableEntry(Cyclic(2), "builtin"),
    (6, 3): TableEntry(Cyclic(12), "builtin"),
}


class HomotopyTable:
    """Resolves ``pi_n(S^m)``; misses return ``None`` rather than a guess."""

    def __init__(self, entries: dict[tuple[int, int], TableEntry] | None = None):
        self.entries = dict(_BUILTIN_ENTRIES)
        if entries:
            self.entries.update(entries)

    def entry(self, n: int, m: int) -> TableEntry | None:
        if n < 1 or m < 1:
            raise ValueError("sphere homotopy indices must be >= 1")
        if n < m:
            return TableEntry(Trivial(), "connectivity")
        if n == m:
            return TableEntry(FreeAbelian(1), "top cell degree")
        if m == 1:
            return TableEntry(Trivial(), "contractible universal cover")
        return self.entries.get((n, m))

    def lookup(self, n: int, m: int) -> GroupDescription | None:
        found = self.entry(n, m)
        return None if found is None else found.group

    def load_file(self, path: str) -> None:
        """Extend the table from a text file.

        Each non-comment line reads ``pi <n> <m> <group> <provenance...>``
        where the group token is ``0``, ``Z``, ``Z/k``, ``Z^k``,
        ``Z^(countable)`` or a ``+``-joined sum of those, and the provenance
        text is mandatory.
        """
        with open(path, encoding="utf-8") as handle:
            for number, raw in enumerate(handle, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                fields = line.split()
                if len(fields) < 5 or fields[0] != "pi":
                    raise TableFormatError(
                        f"{path}:{number}: expected 'pi <n> <m> <group> <provenance...>'"
                    )
                try:
                    n, m = int(fields[1]), int(fields[2])
                except ValueError as exc:
                    raise TableFormatError(f"{path}:{number}: bad indices") from exc
                if n < 1 or m < 1:
                    raise TableFormatError(f"{path}:{number}: indices must be >= 1")
                try:
                    group = parse_group_token(fields[3])
                except ValueError as exc:
                    raise TableFormatError(f"{path}:{number}: {exc}") from exc
                provenance = " ".join(fields[4:])
                self.entries[(n, m)] = TableEntry(group, provenance)


def parse_group_token(token: str) -> GroupDescription:
    """Parse a compact group token such as ``Z/12`` or ``Z+Z/2``."""
    parts: list[GroupDescription] = []
    for piece in token.split("+"):
        if piece == "0":
            parts.append(Trivial())
        elif piece == "Z":
            parts.append(FreeAbelian(1))
        elif piece == "Z^(countable)":
            parts.append(FreeAbelian(COUNTABLE))
        elif piece.startswith("Z/"):
            parts.append(Cyclic(int(piece[2:])))
        elif piece.startswith("Z^"):
            parts.append(FreeAbelian(int(piece[2:])))
        else:
            raise ValueError(f"unrecognized group token {piece!r}")
    return direct_sum(parts) if len(parts) != 1 else parts[0]


_DEFAULT_TABLE: HomotopyTable | None = None


def default_table() -> HomotopyTable:
    global _DEFAULT_TABLE
    if _DEFAULT_TABLE is None:
        _DEFAULT_TABLE = HomotopyTable()
    return _DEFAULT_TABLE


def homotopy_table_lookup(
    n: int, m: int, table: HomotopyTable | None = None
) -> GroupDescription | None:
    """Table-backed value of ``pi_n(S^m)``; ``None`` when unknown."""
    return (table or default_table()).lookup(n, m)


def lyndon_words(alphabet_size: int, max_length: int) -> list[tuple[int, ...]]:
    """All Lyndon words over ``0..alphabet_size-1`` of length <= max_length.

    Duval's generation, re-sorted by (length, lexicographic) so that the
    enumeration order matches the weight grading of the free Lie algebra.
    """
    if alphabet_size < 1 or max_length < 1:
        return []
    out: list[tuple[int, ...]] = []
    word = [-1]
    while word:
        word[-1] += 1
        out.append(tuple(word))
        m = len(word)
        while len(word) < max_length:
            word.append(word[len(word) - m])
        while word and word[-1] == alphabet_size - 1:
            word.pop()
    out.sort(key=lambda w: (len(w), w))
    return out


def hilton_pi(
    n: int,
    dims: Sequence[int],
    table: HomotopyTable | None = None,
) -> GroupDescription:
    """``pi_n`` of a wedge of spheres of the given dimensions.

    Sums one sphere contribution per Lyndon word on the wedge letters;
    spheres above dimension ``n`` contribute nothing and are dropped,
    which makes the enumeration finite because every dimension is >= 2.
    Table misses stay in the sum as symbolic ``pi_n(S^m)`` terms.  The
    result does not depend on the order of ``dims``.
    """
    if n < 2:
        raise ValueError(f"wedge homotopy degree must be >= 2, got {n}")
    if any(d < 2 for d in dims):
        raise ValueError("sphere dimensions must be >= 2")
    if not dims:
        return Trivial()
    table = table or default_table()
    sorted_dims = sorted(dims)
    parts: list[GroupDescription] = []
    for word in lyndon_words(len(sorted_dims), n - 1):
        dim = 1 + sum(sorted_dims[letter] - 1 for letter in word)
        if dim > n:
            continue
        known = table.lookup(n, dim)
        parts.append(PiOfSphere(n, dim) if known is None else known)
    return direct_sum(parts)
