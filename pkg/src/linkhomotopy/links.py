"""Combinatorial link model: splitting profiles and their classification.

A link enters the package only through its *splitting profile*: the map
sending each sublink (subset of component labels ``1..n``) to its splitting
genus, the number of nonsplittable factors in its complete splitting
decomposition minus one.  Conventions: the empty sublink has genus -1, a
single component has genus 0, and a k-component sublink has genus between
0 and k-1.  Accepting a profile is *not* a realizability claim; only the
constraints proved for actual links are enforced (see
:func:`realizability_findings`).

From a profile the module computes the deletion inclusion-exclusion
invariants :func:`chi2` and :func:`chi3`, the homotopy types of the
associated double and triple pushout spaces as sphere wedges, and the
classification of the meridian-intersection quotients -- the intersection
of the normal closures of the chosen meridians modulo the symmetric
commutator subgroup -- in terms of homotopy groups of spheres.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .homotopy import (
    COUNTABLE,
    FreeAbelian,
    GroupDescription,
    HomotopyTable,
    PiOfSphere,
    PiOfWedge,
    SphereWedge,
    SymbolicGroup,
    Trivial,
    direct_sum,
)

__all__ = [
    "LinkProfile",
    "ProfileError",
    "ProfileFormatError",
    "UnrealizableProfileError",
    "ClassificationResult",
    "preset_profile",
    "build_profile",
    "parse_profile",
    "parse_subset_token",
    "load_profile",
    "chi2",
    "chi3",
    "delete_component",
    "strongly_nonsplittable",
    "classify_X2",
    "classify_X3",
    "classify_A",
    "realizability_findings",
]

PRESETS = ("hopf", "trivial", "brunnian")


class ProfileError(ValueError):
    """A splitting profile violates the basic genus constraints."""


class ProfileFormatError(ValueError):
    """Malformed profile file; messages carry line numbers."""


class UnrealizableProfileError(ValueError):
    """A profile contradicts a constraint proved for actual links."""


@dataclass(frozen=True, eq=True)
class LinkProfile:
    """Splitting genus of every sublink of an ``size``-component link.

    ``nu`` maps each subset of ``{1..size}`` (as a frozenset) to its genus.
    Instances are validated on construction; treat them as immutable.
    """

    size: int
    nu: Mapping[frozenset[int], int]

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ProfileError(f"component count must be >= 1, got {self.size}")
        full = self.full_set
        expected = 2 ** self.size
        if len(self.nu) != expected:
            raise ProfileError(
                f"profile must assign a genus to all {expected} sublinks, "
                f"got {len(self.nu)}"
            )
        for subset, genus in self.nu.items():
            if not subset <= full:
                raise ProfileError(f"sublink {set(subset)} is not within 1..{self.size}")
            if not subset:
                if genus != -1:
                    raise ProfileError("the empty sublink must have genus -1")
            elif len(subset) == 1:
                if genus != 0:
                    raise ProfileError(
                        f"a single component is a knot and must have genus 0, "
                        f"got {genus} on {set(subset)}"
                    )
            elif not 0 <= genus <= len(subset) - 1:
                raise ProfileError(
                    f"genus of {sorted(subset)} must lie in 0..{len(subset) - 1}, "
                    f"got {genus}"
                )

    @property
    def full_set(self) -> frozenset[int]:
        return frozenset(range(1, self.size + 1))

    def genus(self, subset: Iterable[int]) -> int:
        return self.nu[frozenset(subset)]


def _preset_value(kind: str, subset: frozenset[int], n: int) -> int:
    if not subset:
        return -1
    if kind == "hopf":
        return 0
    if kind == "trivial":
        return len(subset) - 1
    if kind == "brunnian":
        return 0 if len(subset) == n else len(subset) - 1
    raise ValueError(f"unknown preset {kind!r}; expected one of {PRESETS}")


def preset_profile(kind: str, n: int) -> LinkProfile:
    """A named profile family.

    ``hopf``: every sublink nonsplittable (genus 0), as for the fibration
    links. ``trivial``: every sublink splits completely. ``brunnian``: the
    full link is nonsplittable but every proper sublink splits completely.
    """
    if n < 1:
        raise ValueError(f"component count must be >= 1, got {n}")
    nu = {
        frozenset(sub): _preset_value(kind, frozenset(sub), n)
        for r in range(n + 1)
        for sub in combinations(range(1, n + 1), r)
    }
    return LinkProfile(n, nu)


def build_profile(
    n: int,
    preset: str | None = None,
    overrides: Mapping[frozenset[int], int] | None = None,
) -> LinkProfile:
    """Assemble a profile from an optional preset plus explicit values.

    Without a preset the overrides must cover all ``2^n`` sublinks.
    """
    nu: dict[frozenset[int], int] = {}
    if preset is not None:
        nu = dict(preset_profile(preset, n).nu)
    if overrides:
        nu.update({frozenset(k): v for k, v in overrides.items()})
    return LinkProfile(n, nu)


def _check_labels(p: LinkProfile, labels: tuple[int, ...]) -> None:
    if len(set(labels)) != len(labels):
        raise ValueError(f"labels must be distinct, got {labels}")
    for label in labels:
        if not 1 <= label <= p.size:
            raise ValueError(f"label {label} out of range 1..{p.size}")


def chi2(p: LinkProfile, i: int, j: int) -> int:
    """Genus inclusion-exclusion over deleting components ``i`` and ``j``.

    Symmetric in the two labels.
    """
    _check_labels(p, (i, j))
    full = p.full_set
    return (
        p.nu[full - {i, j}]
        - p.nu[full - {i}]
        - p.nu[full - {j}]
        + p.nu[full]
    )


def chi3(p: LinkProfile, i: int, j: int, k: int) -> int:
    """Seven-term inclusion-exclusion over deleting three components.

    Equals ``chi2`` of the profile with ``k`` deleted minus ``chi2`` of the
    profile itself, and is invariant under permuting the labels.
    """
    _check_labels(p, (i, j, k))
    full = p.full_set
    return (
        p.nu[full - {i, j, k}]
        - p.nu[full - {i, j}]
        - p.nu[full - {i, k}]
        - p.nu[full - {j, k}]
        + p.nu[full - {i}]
        + p.nu[full - {j}]
        + p.nu[full - {k}]
        - p.nu[full]
    )


def delete_component(p: LinkProfile, k: int) -> LinkProfile:
    """The profile of the sublink with component ``k`` removed.

    Remaining labels above ``k`` shift down by one.
    """
    _check_labels(p, (k,))

    def old_label(label: int) -> int:
        return label if label < k else label + 1

    nu: dict[frozenset[int], int] = {}
    for r in range(p.size):
        for sub in combinations(range(1, p.size), r):
            nu[frozenset(sub)] = p.nu[frozenset(old_label(s) for s in sub)]
    return LinkProfile(p.size - 1, nu)


def strongly_nonsplittable(p: LinkProfile, base: Iterable[int] = ()) -> bool:
    """True when every sublink strictly containing ``base`` is nonsplittable."""
    base = frozenset(base)
    if not base <= p.full_set:
        raise ValueError("base sublink is not within the profile's components")
    return all(
        genus == 0
        for subset, genus in p.nu.items()
        if base < subset
    )


def _aspherical_factor(deleted: tuple[int, ...], retained: frozenset[int]) -> str | None:
    # The factor is the classifying space of the remaining sublink's group,
    # written in deletion notation; it disappears when nothing remains.
    if not retained:
        return None
    labels = ",".join(str(s) for s in sorted(deleted))
    return f"K(G(d_{{{labels}}}L),1)"


def _wedge_for_chi(chi: int, deleted: tuple[int, ...], retained: frozenset[int]) -> SphereWedge:
    # One sphere of dimension 2 + (|chi| - chi)/2 per unit of |chi|.
    count = abs(chi)
    dim = 2 + (abs(chi) - chi) // 2
    return SphereWedge(
        dims=(dim,) * count,
        group_factor=_aspherical_factor(deleted, retained),
    )


def classify_X2(p: LinkProfile, i: int, j: int) -> SphereWedge:
    """Homotopy type of the double-deletion pushout as a sphere wedge.

    ``chi2 = 0`` gives the aspherical factor alone, ``chi2 = -1`` one
    3-sphere, and ``chi2 > 0`` that many 2-spheres; for two-component
    profiles the factor disappears (the remaining sublink is empty), so
    the nonsplittable case is a bare 3-sphere and the split case a point.
    """
    return _wedge_for_chi(chi2(p, i, j), (i, j), p.full_set - {i, j})


def classify_X3(p: LinkProfile, i: int, j: int, k: int) -> SphereWedge:
    """Homotopy type of the triple-deletion pushout as a sphere wedge.

    Raises :class:`UnrealizableProfileError` when ``chi3 < -1``, which no
    actual link can produce.
    """
    chi = chi3(p, i, j, k)
    if chi < -1:
        raise UnrealizableProfileError(
            f"chi3({i},{j},{k}) = {chi} < -1: no link realizes this profile"
        )
    return _wedge_for_chi(chi, (i, j, k), p.full_set - {i, j, k})


@dataclass(frozen=True)
class ClassificationResult:
    """Outcome of :func:`classify_A`.

    ``group`` is the most-evaluated description (``None`` when no
    implemented criterion applies), ``symbolic_form`` the pre-evaluation
    description when one exists, ``method`` names the route taken, and
    ``notes`` carry caveats such as the bar-quotient flag.
    """

    group: GroupDescription | None
    symbolic_form: GroupDescription | None
    method: str
    notes: tuple[str, ...] = ()

    NOT_CLASSIFIED = "not classified by implemented theorems"

    @property
    def classified(self) -> bool:
        return self.group is not None

    def main_line(self) -> str:
        if self.group is None:
            return self.NOT_CLASSIFIED
        if isinstance(self.group, Trivial):
            return "0 (trivial)"
        if self.group.is_concrete and self.symbolic_form is not None:
            return f"{self.symbolic_form.render()} = {self.group.render()}"
        if self.group.is_concrete:
            return self.group.render()
        return self.group.render(mark_unknown=True)


def _trivial_result(method: str, *notes: str) -> ClassificationResult:
    return ClassificationResult(Trivial(), None, method, tuple(notes))


def classify_A(
    p: LinkProfile,
    l0: Iterable[int],
    sub: Iterable[int],
    table: HomotopyTable | None = None,
) -> ClassificationResult:
    """Classify the meridian-intersection quotient for ``sub`` within ``p``.

    ``sub`` selects the components whose meridian closures are intersected
    (at least two of them); ``l0`` is a disjoint base sublink that is never
    deleted.  The classification quotients the intersection by the
    symmetric commutator subgroup of the closures.  Routes, in order:

    * a strongly nonsplittable pair (every sublink strictly containing
      ``l0`` nonsplittable) is fully classified: proper ``sub`` or a
      nonsplittable nonempty base collapses to the trivial group, an empty
      base gives the ``len(sub)``-th homotopy group of the 3-sphere, and a
      splittable base of genus ``v`` gives the homotopy of a wedge of ``v``
      2-spheres plus a symbolic wedge carrying the base link group;
    * any two-component ``sub`` obeys the dichotomy: trivial unless
      ``chi2 > 0``, in which case free abelian of countable rank (always
      trivial for links of at most three components);
    * a three-component ``sub`` whose complement is exactly ``l0`` is
      classified through the triple pushout, *as the bar-quotient* of the
      intersection (the two agree for 3-component links).

    Anything else returns an explicit not-classified result rather than a
    guess.
    """
    l0 = frozenset(l0)
    sub = frozenset(sub)
    full = p.full_set
    if not l0 <= full or not sub <= full:
        raise ValueError("sublinks must be within the profile's components")
    if l0 & sub:
        raise ValueError("the base sublink and the meridian sublink must be disjoint")
    if len(sub) < 2:
        raise ValueError("the meridian sublink needs at least two components")

    rest = full - l0
    if strongly_nonsplittable(p, l0):
        if sub != rest:
            return _trivial_result(
                "strongly nonsplittable pair, proper sub-intersection",
                "intersection equals the symmetric commutator subgroup",
            )
        if not l0:
            n = len(sub)
            symbolic = PiOfSphere(n, 3)
            return ClassificationResult(
                group=symbolic.evaluate(table),
                symbolic_form=symbolic,
                method="strongly nonsplittable link, full meridian intersection",
            )
        if p.nu[l0] == 0:
            return _trivial_result(
                "strongly nonsplittable pair over a nonsplittable base",
                "intersection equals the symmetric commutator subgroup",
            )
        return _bundle_over_splittable_base(p, l0, sub, table)

    if len(sub) == 2:
        return _two_component_dichotomy(p, sub)

    if len(sub) == 3 and l0 == full - sub:
        return _three_component_bar_quotient(p, sub, table)

    return ClassificationResult(None, None, ClassificationResult.NOT_CLASSIFIED)


def _bundle_over_splittable_base(
    p: LinkProfile,
    l0: frozenset[int],
    sub: frozenset[int],
    table: HomotopyTable | None,
) -> ClassificationResult:
    n = len(sub)
    genus = p.nu[l0]
    sphere_part = PiOfWedge(n, SphereWedge(dims=(2,) * genus))
    tail = SymbolicGroup(
        f"pi_{n}(wedge[m>=1] wedge[{genus}^m] G(L0) smash S^(m+1))"
    )
    symbolic = direct_sum([sphere_part, tail])
    return ClassificationResult(
        group=symbolic.evaluate(table),
        symbolic_form=symbolic,
        method="strongly nonsplittable pair over a splittable base",
        notes=(
            f"contains pi_{n}(S^m) summands with countably infinite "
            f"multiplicity for each 2 <= m <= {n}",
            "G(L0) denotes the base link group, kept symbolic",
        ),
    )


def _two_component_dichotomy(
    p: LinkProfile,
    sub: frozenset[int],
) -> ClassificationResult:
    i, j = sorted(sub)
    method = "two-component meridian intersection"
    if p.size <= 3:
        return _trivial_result(
            method, "links of at most three components give pairwise collapse"
        )
    chi = chi2(p, i, j)
    if chi <= 0:
        return _trivial_result(method)
    wedge = classify_X2(p, i, j)
    return ClassificationResult(
        group=FreeAbelian(COUNTABLE),
        symbolic_form=PiOfWedge(2, wedge),
        method=method,
        notes=(f"chi2 = {chi} > 0 forces infinite rank",),
    )


def _three_component_bar_quotient(
    p: LinkProfile,
    sub: frozenset[int],
    table: HomotopyTable | None,
) -> ClassificationResult:
    i, j, k = sorted(sub)
    wedge = classify_X3(p, i, j, k)
    symbolic = PiOfWedge(3, wedge)
    if p.size == 3:
        notes = (
            "bar-quotient; for 3-component links it equals the full quotient "
            "(pairwise intersections collapse)",
        )
    else:
        notes = (
            "bar-quotient of the meridian intersection; the kernel of the "
            "projection onto it is not determined here",
        )
    return ClassificationResult(
        group=symbolic.evaluate(table),
        symbolic_form=symbolic,
        method="three-component bar-quotient",
        notes=notes,
    )


def realizability_findings(p: LinkProfile) -> list[str]:
    """Constraint violations that rule out any actual link with this profile.

    Checks the proved bound ``chi3 >= -1`` on every label triple and, for
    three-component profiles, rejects ``chi3 = 1`` (excluded by the full
    case analysis of 3-links).  An empty list does not certify
    realizability.
    """
    findings: list[str] = []
    for i, j, k in combinations(range(1, p.size + 1), 3):
        chi = chi3(p, i, j, k)
        if chi < -1:
            findings.append(f"chi3({i},{j},{k}) = {chi} < -1: unrealizable")
    if p.size == 3 and chi3(p, 1, 2, 3) == 1:
        findings.append("chi3(1,2,3) = 1 is not realized by any 3-component link")
    return findings


def parse_subset_token(token: str, n: int) -> frozenset[int]:
    if token == "empty":
        return frozenset()
    if token == "full":
        return frozenset(range(1, n + 1))
    try:
        labels = [int(piece) for piece in token.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad sublink {token!r}") from exc
    if any(not 1 <= s <= n for s in labels):
        raise ValueError(f"sublink {token!r} has labels outside 1..{n}")
    if len(set(labels)) != len(labels):
        raise ValueError(f"sublink {token!r} repeats a label")
    return frozenset(labels)


def parse_profile(text: str, source: str = "<profile>") -> LinkProfile:
    """Parse the line-based profile format.

    ::

        components <n>
        preset <hopf|trivial|brunnian>      # optional, seeds every value
        nu <subset> <integer>               # subset: "empty", "full", "1,3"

    Blank lines and ``#`` comments are ignored.  Duplicate ``nu`` lines,
    unknown directives, missing sublinks (when no preset is given) and
    genus-constraint violations are rejected with line-numbered messages.
    """
    n: int | None = None
    preset: str | None = None
    overrides: dict[frozenset[int], int] = {}
    seen_lines: dict[frozenset[int], int] = {}

    def fail(number: int, message: str) -> ProfileFormatError:
        return ProfileFormatError(f"{source}:{number}: {message}")

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        directive = fields[0]
        if directive == "components":
            if n is not None:
                raise fail(number, "duplicate 'components' line")
            if len(fields) != 2 or not fields[1].isdigit() or int(fields[1]) < 1:
                raise fail(number, "expected 'components <positive integer>'")
            n = int(fields[1])
        elif directive == "preset":
            if n is None:
                raise fail(number, "'preset' must follow 'components'")
            if preset is not None:
                raise fail(number, "duplicate 'preset' line")
            if len(fields) != 2 or fields[1] not in PRESETS:
                raise fail(number, f"expected 'preset <{'|'.join(PRESETS)}>'")
            preset = fields[1]
        elif directive == "nu":
            if n is None:
                raise fail(number, "'nu' must follow 'components'")
            if len(fields) != 3:
                raise fail(number, "expected 'nu <subset> <integer>'")
            try:
                subset = parse_subset_token(fields[1], n)
            except ValueError as exc:
                raise fail(number, str(exc)) from exc
            try:
                genus = int(fields[2])
            except ValueError as exc:
                raise fail(number, f"bad genus {fields[2]!r}") from exc
            if subset in seen_lines:
                raise fail(
                    number,
                    f"duplicate sublink {fields[1]!r} (first given on line "
                    f"{seen_lines[subset]})",
                )
            seen_lines[subset] = number
            overrides[subset] = genus
        else:
            raise fail(number, f"unknown directive {directive!r}")

    if n is None:
        raise ProfileFormatError(f"{source}: missing 'components' line")
    if preset is None:
        expected = 2 ** n
        if len(overrides) != expected:
            raise ProfileFormatError(
                f"{source}: no preset given, so all {expected} sublinks need "
                f"a 'nu' line; got {len(overrides)}"
            )
    try:
        return build_profile(n, preset=preset, overrides=overrides)
    except ProfileError as exc:
        raise ProfileFormatError(f"{source}: {exc}") from exc


def load_profile(path: str) -> LinkProfile:
    """Read a profile file; see :func:`parse_profile` for the format."""
    with open(path, encoding="utf-8") as handle:
        return parse_profile(handle.read(), source=path)
