"""The degreewise-free simplicial group modelling loops on the 2-sphere.

Degree ``n`` holds the group on generators ``x1 ... x_{n+1}`` subject to the
single relation ``x1 x2 ... x_{n+1} = 1``.  Eliminating the last generator
via ``x_{n+1} = (x1 ... x_n)^-1`` makes the group free of rank ``n``; every
element is stored in that canonical form, so equality of elements is
structural equality of reduced words.  Degree 0 is the trivial group.

Faces and degeneracies act on generators by

    d_i x_j = x_j (j < i+1),   1 (j = i+1),          x_{j-1} (j > i+1)
    s_i x_j = x_j (j < i+1),   x_j x_{j+1} (j = i+1), x_{j+1} (j > i+1)

for ``0 <= i <= n``.  The kernel of ``d_i`` is the normal closure of
``x_{i+1}``, the Moore chains are the intersection of the kernels of
``d_1..d_n``, and the Moore cycles additionally lie in ``Ker d_0``.  The
homology of the Moore complex computes the homotopy groups of the loop
space of the 2-sphere, and the suspension-Hopf composition acts on cycles
by ``z -> [s_0 z, s_1 z]``; iterating it from the degree-1 generator yields
the tower words returned by :func:`eta_tower`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .words import (
    IDENTITY,
    Word,
    apply_map,
    commutator,
    conjugate,
    generator,
    parse_word,
    print_word,
    reduce_word,
)

__all__ = [
    "SimplicialElement",
    "MeridianWord",
    "NotACycleError",
    "element",
    "prefix_product",
    "face",
    "degeneracy",
    "is_moore_chain",
    "is_cycle",
    "eta_word",
    "eta_tower",
    "symmetric_commutator_sample",
    "meridian_word",
    "VARIANT_ETA_DEGREE3",
    "VARIANT_ETA_DEGREE4",
]


class NotACycleError(ValueError):
    """A Moore-cycle precondition failed."""


@dataclass(frozen=True)
class SimplicialElement:
    """An element of the degree-``degree`` group, in canonical form.

    The stored word uses only generators ``x1..x_degree``; construct
    through :func:`element`, which rewrites ``x_{degree+1}`` away.
    """

    degree: int
    word: Word

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError(f"degree must be >= 0, got {self.degree}")
        if self.word.max_generator > self.degree:
            raise ValueError(
                f"word uses x{self.word.max_generator} but canonical degree-"
                f"{self.degree} words use only x1..x{self.degree}"
            )

    @property
    def is_identity(self) -> bool:
        return self.word.is_identity

    def __str__(self) -> str:
        return f"degree={self.degree}; word={print_word(self.word)}"


def prefix_product(k: int) -> Word:
    """The word ``x1 x2 ... xk`` (identity for ``k = 0``)."""
    return reduce_word((i, 1) for i in range(1, k + 1))


def element(degree: int, word: Word | str) -> SimplicialElement:
    """Build an element at ``degree``, rewriting into canonical form.

    ``word`` may use generators up to ``x_{degree+1}``; the last one is
    substituted by ``(x1...x_degree)^-1`` and the result reduced.  At degree
    0 every element collapses to the identity.
    """
    if isinstance(word, str):
        word = parse_word(word)
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    if word.max_generator > degree + 1:
        raise ValueError(
            f"word uses x{word.max_generator}; degree-{degree} elements "
            f"allow at most x{degree + 1}"
        )
    canonical = apply_map({degree + 1: prefix_product(degree).inverse()}, word)
    return SimplicialElement(degree, canonical)


def _face_map(i: int, degree: int) -> dict[int, Word]:
    images: dict[int, Word] = {}
    for j in range(1, degree + 2):
        if j == i + 1:
            images[j] = IDENTITY
        elif j > i + 1:
            images[j] = generator(j - 1)
    return images


def _degeneracy_map(i: int, degree: int) -> dict[int, Word]:
    images: dict[int, Word] = {}
    for j in range(1, degree + 2):
        if j == i + 1:
            images[j] = generator(j) * generator(j + 1)
        elif j > i + 1:
            images[j] = generator(j + 1)
    return images


def face(i: int, e: SimplicialElement) -> SimplicialElement:
    """The ``i``-th face, a homomorphism from degree ``n`` to ``n - 1``."""
    n = e.degree
    if n == 0:
        raise ValueError("degree-0 elements have no faces")
    if not 0 <= i <= n:
        raise ValueError(f"face index {i} out of range 0..{n}")
    return element(n - 1, apply_map(_face_map(i, n), e.word))


def degeneracy(i: int, e: SimplicialElement) -> SimplicialElement:
    """The ``i``-th degeneracy, a homomorphism from degree ``n`` to ``n + 1``."""
    n = e.degree
    if not 0 <= i <= n:
        raise ValueError(f"degeneracy index {i} out of range 0..{n}")
    return element(n + 1, apply_map(_degeneracy_map(i, n), e.word))


def is_moore_chain(e: SimplicialElement) -> bool:
    """True when faces 1..n all kill the element."""
    return all(face(i, e).is_identity for i in range(1, e.degree + 1))


def is_cycle(e: SimplicialElement) -> bool:
    """True when every face (0..n) kills the element.

    Equivalently the element lies in the normal closure of each generator
    ``x1..x_{n+1}`` of the degree-``n`` group; degree 0 is trivially a cycle.
    """
    if e.degree == 0:
        return True
    return e.word.is_identity or all(
        face(i, e).is_identity for i in range(e.degree + 1)
    )


def eta_word(z: SimplicialElement) -> SimplicialElement:
    """One suspension-Hopf step on a Moore cycle: ``z -> [s_0 z, s_1 z]``.

    The result is again a cycle, one degree up.  Raises
    :class:`NotACycleError` on non-cycle input.
    """
    if z.degree < 1:
        raise ValueError("eta_word needs degree >= 1")
    if not is_cycle(z):
        raise NotACycleError(f"not a Moore cycle: {z}")
    word = commutator(degeneracy(0, z).word, degeneracy(1, z).word)
    return element(z.degree + 1, word)


def eta_tower(k: int) -> SimplicialElement:
    """The degree-``k`` iterated tower word.

    ``eta_tower(1)`` is ``x1`` (the degree-1 generator) and each further
    level applies :func:`eta_word`; the result represents the k-fold
    Hopf-composite in the k-th homotopy group of the loop space.
    """
    if k < 1:
        raise ValueError(f"tower degree must be >= 1, got {k}")
    e = element(1, generator(1))
    for _ in range(k - 1):
        e = eta_word(e)
    return e


def _nth_permutation(count: int, index: int) -> list[int]:
    """The ``index``-th permutation of ``0..count-1`` in factorial order."""
    pool = list(range(count))
    out = []
    remaining = factorial(count)
    index %= remaining
    while pool:
        remaining //= len(pool)
        pick, index = divmod(index, remaining)
        out.append(pool.pop(pick))
    return out


_CONJUGATOR_EXPONENTS = (1, -1, 2, -2)
_MAX_CONJUGATOR_SYLLABLES = 4


def _decode_conjugator(index: int, degree: int) -> Word:
    """Deterministically map an integer to a short conjugator word.

    Enumerates words of at most four syllables over ``x1..x_degree`` with
    exponents in ``{1, -1, 2, -2}``; index 0 is the identity.
    """
    choices = len(_CONJUGATOR_EXPONENTS) * degree
    syllables = []
    while index > 0 and len(syllables) < _MAX_CONJUGATOR_SYLLABLES:
        index -= 1
        code = index % choices
        index //= choices
        syllables.append((code // 4 + 1, _CONJUGATOR_EXPONENTS[code % 4]))
    return reduce_word(syllables)


def _conjugator_count(degree: int) -> int:
    choices = len(_CONJUGATOR_EXPONENTS) * degree
    return sum(choices ** length for length in range(_MAX_CONJUGATOR_SYLLABLES + 1))


def symmetric_commutator_sample(degree: int, seed: int) -> SimplicialElement:
    """A seeded element of the symmetric commutator subgroup of the kernels.

    Decodes ``seed`` (any nonnegative integer) into a permutation ``s`` of
    the face indices ``0..degree`` plus an exponent sign and a bounded
    conjugator per entry, then forms the left-normed iterated commutator

        [[g_0, g_1], ..., g_degree],   g_j = c_j x_{s(j)+1}^(+-1) c_j^-1.

    Each entry lies in ``Ker d_{s(j)}``, so the output is always a Moore
    cycle (a boundary, in fact).  Seed 0 gives the identity permutation
    with trivial conjugators, e.g. ``[[x1, x2], x3]`` at degree 2.
    """
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    if seed < 0:
        raise ValueError("seed must be nonnegative")
    entries = degree + 1
    seed, perm_index = seed // factorial(entries), seed % factorial(entries)
    perm = _nth_permutation(entries, perm_index)
    xlast = prefix_product(degree).inverse()  # canonical form of x_{degree+1}
    word: Word | None = None
    conj_count = _conjugator_count(degree)
    for j in range(entries):
        seed, sign_bit = seed // 2, seed % 2
        seed, conj_index = seed // conj_count, seed % conj_count
        kernel_gen = perm[j] + 1
        core = xlast if kernel_gen == degree + 1 else generator(kernel_gen)
        if sign_bit:
            core = core.inverse()
        entry = conjugate(core, _decode_conjugator(conj_index, degree))
        word = entry if word is None else commutator(word, entry)
    assert word is not None
    return element(degree, word)


@dataclass(frozen=True)
class MeridianWord:
    """A word in the meridians ``a1..a_link_size`` of the fibration link.

    The meridians project isomorphically onto the sphere-group generators,
    so tower words transliterate letter-for-letter.
    """

    link_size: int
    word: Word

    def __post_init__(self) -> None:
        if self.word.max_generator > self.link_size:
            raise ValueError("meridian word uses an index beyond the link size")

    def __str__(self) -> str:
        return print_word(self.word, letter="a")


def meridian_word(k: int) -> MeridianWord:
    """The meridian form of the tower word labelling the ``k``-strand link.

    Supported sizes are 4 and 5, the first links whose labelling classes
    are the Hopf classes of order two.
    """
    if k not in (4, 5):
        raise ValueError(f"unsupported link size {k}; expected 4 or 5")
    return MeridianWord(link_size=k, word=eta_tower(k - 1).word)


def _variant(degree: int, text: str) -> SimplicialElement:
    return element(degree, parse_word(text))


#: Variant of the degree-3 tower word with ``[a, x2]`` as the first inner
#: factor in place of the mechanical ``[a, x1 x2]`` (``a = x1 x2 x3``).  This
#: form circulates in the literature; it shares the tower word's
#: lower-central depth and trivial reduced expansion, but it is *not* a
#: Moore cycle (its second face is a nontrivial commutator).
VARIANT_ETA_DEGREE3 = _variant(3, "[[x1 x2 x3, x2], [x1 x2 x3, x1]]")

#: Degree-4 analogue of :data:`VARIANT_ETA_DEGREE3`, read with balanced
#: brackets: ``[[[a,x3],[a,x2]], [[a,x2 x3],[a,x1]]]`` for ``a = x1x2x3x4``.
#: Like the degree-3 variant it fails the cycle test (third face).
VARIANT_ETA_DEGREE4 = _variant(
    4,
    "[[[x1 x2 x3 x4, x3], [x1 x2 x3 x4, x2]],"
    " [[x1 x2 x3 x4, x2 x3], [x1 x2 x3 x4, x1]]]",
)
