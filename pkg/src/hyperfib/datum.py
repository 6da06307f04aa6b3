"""Ingest and validate a branch datum h(x, t); scan fibers for branch points.

The input is the local equation of a double cover y^2 = h(x, t) over a disc
in the t-line.  Validation pins down the supported shape: h reduced (square
free), no vertical components, x-degree 2g+1 or 2g+2 with g >= 2.  A fiber
scan classifies every intersection of the branch curve with the fiber line
t = t0: transverse points, smooth tangencies, and singular points, including
the point at infinity in the flipped chart x -> 1/x.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ValidationError
from .polynomials import (
    AffinePoint,
    BiPoly,
    UniPoly,
    discriminant_in_x,
    factor_over_rationals,
    unipoly_content_gcd,
    unipoly_gcd,
)

AUTO_FIBERS = "auto"


@dataclass(frozen=True)
class GenusDatum:
    """A validated branch datum: h, its genus, and the fiber selection."""

    h: BiPoly
    genus: int
    has_branch_at_infinity: bool
    declared_fibers: tuple[Fraction, ...] | str  # explicit t-values or AUTO_FIBERS

    @property
    def branch_degree(self) -> int:
        """Intersection number of the branch curve with a general fiber."""
        return 2 * self.genus + 2

    def flipped(self) -> BiPoly:
        """The branch equation in the chart x -> 1/x, padded to degree 2g+2."""
        return self.h.flip_x(self.branch_degree)


@dataclass(frozen=True)
class ScanEntry:
    """One locus where the branch curve meets the fiber line t = t0.

    Rational points carry ``x``; Galois-conjugate smooth points are kept as a
    single entry carrying the irreducible ``minpoly`` of their x-coordinate.
    The point at infinity carries ``at_infinity=True`` and x = None.
    """

    x: Fraction | None
    minpoly: UniPoly | None
    degree: int
    contact: int
    order: int  # order of vanishing of h at the point (1 = smooth)
    at_infinity: bool = False

    @property
    def is_smooth(self) -> bool:
        return self.order == 1

    def point(self, t0: Fraction) -> AffinePoint:
        return AffinePoint(None if self.at_infinity else self.x, t0)

    def describe(self) -> str:
        if self.at_infinity:
            where = "x=inf"
        elif self.x is not None:
            where = f"x={self.x}"
        else:
            where = f"x:{self.minpoly.format()}"
        return where


@dataclass(frozen=True)
class FiberPointScan:
    """Classification of all branch points on one fiber line."""

    t0: Fraction
    transverse: tuple[ScanEntry, ...]
    tangencies: tuple[ScanEntry, ...]
    singulars: tuple[ScanEntry, ...]
    infinity_record: ScanEntry | None

    @property
    def is_smooth_fiber(self) -> bool:
        if self.tangencies or self.singulars:
            return False
        if self.infinity_record is not None and self.infinity_record.contact > 1:
            return False
        return True

    def total_contact(self) -> int:
        total = sum(e.contact * e.degree for e in self.transverse)
        total += sum(e.contact * e.degree for e in self.tangencies)
        total += sum(e.contact for e in self.singulars)
        if self.infinity_record is not None:
            total += self.infinity_record.contact
        return total

    def all_entries(self) -> tuple[ScanEntry, ...]:
        out = self.transverse + self.tangencies + self.singulars
        if self.infinity_record is not None:
            out = out + (self.infinity_record,)
        return out


def load_datum(h: BiPoly, fibers=AUTO_FIBERS) -> GenusDatum:
    """Validate the branch equation and derive the genus.

    fibers is either the literal "auto" or an iterable of exact rational
    t-values.  Rejects non-reduced h, vertical branch components, and genus
    below 2.
    """
    if h.is_zero:
        raise ValidationError("branch equation is zero")
    coeffs = h.as_x_coefficients()
    content = unipoly_content_gcd(coeffs)
    if content.degree > 0:
        raise ValidationError(
            "vertical branch component unsupported: "
            f"h is divisible by {content.format('t')}"
        )
    deg_x = h.deg_x
    genus = -(-deg_x // 2) - 1  # ceil(deg/2) - 1
    if genus < 2:
        raise ValidationError(f"genus below 2 unsupported (deg_x h = {deg_x})")
    if not _is_square_free_bivariate(h):
        raise ValidationError("non-reduced branch divisor: h has a repeated factor")
    if fibers == AUTO_FIBERS:
        declared = AUTO_FIBERS
    else:
        declared = tuple(sorted({Fraction(v) for v in fibers}))
    return GenusDatum(
        h=h,
        genus=genus,
        has_branch_at_infinity=(deg_x % 2 == 1),
        declared_fibers=declared,
    )


def _is_square_free_bivariate(h: BiPoly) -> bool:
    """Exact square-freeness via specialization witnesses.

    A repeated factor of positive x-degree forces gcd(h, dh/dx) restricted to
    t = t0 to be nonconstant for every t0; conversely for square-free h the
    bad t0 form a finite set bounded by the t-degree of the resultant.  So a
    single witness t0 with squarefree full-degree restriction certifies
    square-freeness, and exhausting the bound certifies the opposite.
    Vertical components must already be excluded.
    """
    deg_x = h.deg_x
    hx = h.dx()
    # bad witnesses: roots of the t-discriminant (degree <= deg_t*(2*deg_x - 1))
    # plus leading-coefficient roots (degree <= deg_t)
    bound = h.deg_t * (2 * deg_x) + 1
    for t0 in range(bound + 1):
        r = h.restrict_t(t0)
        if r.degree < deg_x:
            continue  # leading coefficient vanished; inconclusive witness
        g = unipoly_gcd(r, hx.restrict_t(t0))
        if g.degree == 0:
            return True
    return False


@dataclass(frozen=True)
class SingularFiberLocation:
    fibers: tuple[Fraction, ...]
    notes: tuple[str, ...] = field(default=())


def locate_singular_fibers(d: GenusDatum) -> SingularFiberLocation:
    """Rational t-values of singular fibers.

    Auto mode takes the rational roots of the discriminant in x; declared
    fibers are returned as given, with a note for any declared value whose
    fiber is actually smooth.  Irrational discriminant roots are reported as
    skipped in the notes.
    """
    disc = discriminant_in_x(d.h)
    notes: list[str] = []
    if d.declared_fibers != AUTO_FIBERS:
        for t0 in d.declared_fibers:
            if not disc.eval(t0) == 0:
                notes.append(f"fiber smooth at t={t0}")
        return SingularFiberLocation(tuple(d.declared_fibers), tuple(notes))
    roots: set[Fraction] = set()
    skipped: list[str] = []
    for fac, _ in factor_over_rationals(disc):
        if fac.degree == 1:
            roots.add(-fac[0] / fac[1])
        elif fac.degree > 1:
            skipped.append(fac.format("t"))
    if skipped:
        notes.append("singular fibers at irrational t skipped: " + ", ".join(sorted(skipped)))
    return SingularFiberLocation(tuple(sorted(roots)), tuple(notes))


def scan_fiber_points(d: GenusDatum, t0) -> FiberPointScan:
    """Classify every branch point on the fiber line t = t0.

    Smooth points with irrational x stay grouped by their minimal polynomial;
    singular points must be rational (hard error otherwise).  The flipped
    chart contributes the point at infinity whenever the finite restriction
    drops below degree 2g+2.
    """
    t0 = Fraction(t0)
    h = d.h
    restriction = h.restrict_t(t0)
    if restriction.is_zero:
        raise ValidationError(f"fiber t={t0} is contained in the branch divisor")
    transverse: list[ScanEntry] = []
    tangencies: list[ScanEntry] = []
    singulars: list[ScanEntry] = []
    sing_locus = unipoly_content_gcd(
        [restriction, h.dx().restrict_t(t0), h.dt().restrict_t(t0)]
    )
    for fac, contact in factor_over_rationals(restriction):
        is_singular_locus = fac.degree > 0 and unipoly_gcd(fac, sing_locus).degree > 0
        if is_singular_locus:
            if fac.degree != 1:
                raise ValidationError(
                    f"irrational singular point unsupported at t={t0}: "
                    f"x-locus {fac.format()}"
                )
            x0 = -fac[0] / fac[1]
            order = h.shift(x0, t0).order_at_origin()
            _check_order_bound(order, d.genus, f"({x0}, {t0})")
            singulars.append(
                ScanEntry(x=x0, minpoly=None, degree=1, contact=contact, order=order)
            )
        else:
            x0 = -fac[0] / fac[1] if fac.degree == 1 else None
            entry = ScanEntry(
                x=x0,
                minpoly=None if fac.degree == 1 else fac,
                degree=fac.degree,
                contact=contact,
                order=1,
            )
            (transverse if contact == 1 else tangencies).append(entry)
    infinity = _scan_infinity(d, t0, d.branch_degree - restriction.degree)
    scan = FiberPointScan(
        t0=t0,
        transverse=tuple(sorted(transverse, key=_entry_sort_key)),
        tangencies=tuple(sorted(tangencies, key=_entry_sort_key)),
        singulars=tuple(sorted(singulars, key=_entry_sort_key)),
        infinity_record=infinity,
    )
    total = scan.total_contact()
    if total != d.branch_degree:
        raise AssertionError(
            f"contact sum {total} != {d.branch_degree} on fiber t={t0}"
        )
    return scan


def _scan_infinity(d: GenusDatum, t0: Fraction, contact: int) -> ScanEntry | None:
    if contact <= 0:
        return None
    flipped = d.flipped()
    order = flipped.shift(0, t0).order_at_origin()
    _check_order_bound(order, d.genus, f"(inf, {t0})")
    return ScanEntry(
        x=None,
        minpoly=None,
        degree=1,
        contact=contact,
        order=order,
        at_infinity=True,
    )


def _check_order_bound(order: int, genus: int, where: str) -> None:
    if order > genus + 1:
        raise ValidationError(
            f"singularity of order {order} at {where} exceeds g+1 = {genus + 1}; "
            "not a valid branch datum"
        )


def _entry_sort_key(e: ScanEntry):
    if e.x is not None:
        return (0, e.x, "")
    return (1, Fraction(0), e.minpoly.format() if e.minpoly else "")
