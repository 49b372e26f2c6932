"""Sparse trivariate polynomials over F_2 and projective point counting.

A polynomial is a set of exponent triples (a, b, c) with implicit
coefficient 1; adding a duplicate monomial cancels it (characteristic 2).
Projective points over F_{2^s} are enumerated in the three standard
representative charts, in the fixed order

    (x, y, 1) for all x, y;   (x, 1, 0) for all x;   (1, 0, 0)

so each point is counted exactly once.

Two counters are provided: a generic one that walks the full chart, and a
fast one for curves that are (at most) quadratic in y, which solves the
quadratic per (x, z) via the trace criterion (y^2 + y = beta is solvable
iff Tr(beta) = 0, and then has exactly two roots).
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .gf2m import Field, FieldError, get_field

__all__ = [
    "CurveCatalogEntry",
    "TrivariatePoly",
    "catalog_curve",
    "catalog_curve_names",
    "count_projective_points",
    "count_projective_points_fast",
    "f_k_affine",
    "homogenize",
    "load_curve",
    "singular_points",
]

COUNT_CAP = 12  # generic enumeration costs ~4^s * |monomials|


class TrivariatePoly:
    """Homogeneous-or-not trivariate polynomial over F_2 in x, y, z."""

    __slots__ = ("monomials",)

    def __init__(self, monomials=()):
        mono = set()
        for t in monomials:
            a, b, c = t
            if a < 0 or b < 0 or c < 0:
                raise ValueError(f"negative exponent in monomial {t}")
            t = (a, b, c)
            if t in mono:
                mono.remove(t)  # char 2: duplicates cancel
            else:
                mono.add(t)
        self.monomials = frozenset(mono)

    @property
    def degree(self) -> int:
        return max((a + b + c for a, b, c in self.monomials), default=0)

    def is_homogeneous(self) -> bool:
        degs = {a + b + c for a, b, c in self.monomials}
        return len(degs) <= 1

    def is_zero(self) -> bool:
        return not self.monomials

    def __eq__(self, other) -> bool:
        return isinstance(other, TrivariatePoly) and self.monomials == other.monomials

    def __hash__(self) -> int:
        return hash(self.monomials)

    def __add__(self, other: "TrivariatePoly") -> "TrivariatePoly":
        out = TrivariatePoly.__new__(TrivariatePoly)
        out.monomials = self.monomials ^ other.monomials
        return out

    def __mul__(self, other: "TrivariatePoly") -> "TrivariatePoly":
        acc: set[tuple[int, int, int]] = set()
        for a1, b1, c1 in self.monomials:
            for a2, b2, c2 in other.monomials:
                t = (a1 + a2, b1 + b2, c1 + c2)
                if t in acc:
                    acc.remove(t)
                else:
                    acc.add(t)
        out = TrivariatePoly.__new__(TrivariatePoly)
        out.monomials = frozenset(acc)
        return out

    def __pow__(self, e: int) -> "TrivariatePoly":
        out = TrivariatePoly([(0, 0, 0)])
        for _ in range(e):
            out = out * self
        return out

    def evaluate(self, field: Field, x: int, y: int, z: int) -> int:
        acc = 0
        for a, b, c in self.monomials:
            acc ^= field.mul(field.mul(field.pow(x, a), field.pow(y, b)), field.pow(z, c))
        return acc

    def derivative(self, variable: str) -> "TrivariatePoly":
        """Formal partial in characteristic 2: even exponents vanish."""
        i = "xyz".index(variable)
        out = set()
        for t in self.monomials:
            if t[i] % 2 == 1:
                s = list(t)
                s[i] -= 1
                s = tuple(s)
                if s in out:
                    out.remove(s)
                else:
                    out.add(s)
        p = TrivariatePoly.__new__(TrivariatePoly)
        p.monomials = frozenset(out)
        return p

    def y_degree(self) -> int:
        return max((b for _, b, _ in self.monomials), default=0)

    def __repr__(self) -> str:
        terms = []
        for a, b, c in sorted(self.monomials, reverse=True):
            parts = [f"{v}^{e}" if e > 1 else v for v, e in (("x", a), ("y", b), ("z", c)) if e]
            terms.append("*".join(parts) if parts else "1")
        return " + ".join(terms) if terms else "0"

    # -- file format: one monomial per line, "a b c"; '#' comments ----------

    @classmethod
    def parse(cls, text: str) -> "TrivariatePoly":
        mono = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            a, b, c = (int(v) for v in line.split())
            mono.append((a, b, c))
        return cls(mono)

    def to_text(self) -> str:
        return "\n".join(f"{a} {b} {c}" for a, b, c in sorted(self.monomials, reverse=True)) + "\n"


def load_curve(path: str) -> TrivariatePoly:
    with open(path) as fh:
        return TrivariatePoly.parse(fh.read())


def homogenize(f: TrivariatePoly, degree: int) -> TrivariatePoly:
    """z^degree * f(x/z, y/z); restriction to z = 1 recovers f."""
    if any(c != 0 for _, _, c in f.monomials):
        raise ValueError("homogenize expects a bivariate polynomial (all z-exponents 0)")
    if degree < f.degree:
        raise ValueError(f"target degree {degree} below total degree {f.degree}")
    return TrivariatePoly([(a, b, degree - a - b) for a, b, _ in f.monomials])


def f_k_affine(k: int) -> TrivariatePoly:
    """The affine curve x^(2^k) + 1 + (y^2+y)(x^(2^2k) + x^(2^2k-2^k+1) + x^(2^k) + x)."""
    q = 1 << k
    q2 = 1 << (2 * k)
    mono = [(q, 0, 0), (0, 0, 0)]
    for b in (2, 1):
        mono += [(q2, b, 0), (q2 - q + 1, b, 0), (q, b, 0), (1, b, 0)]
    return TrivariatePoly(mono)


def _check_cap(P: TrivariatePoly, s: int, cap: int) -> Field:
    if s > cap:
        raise FieldError(
            f"s={s} exceeds cap {cap} (~{4**s * max(1, len(P.monomials))} monomial evaluations)"
        )
    return get_field(s)


def count_projective_points(P: TrivariatePoly, s: int, cap: int = COUNT_CAP) -> int:
    """Projective zeros of a homogeneous P over F_{2^s}, generic chart walk."""
    if not P.is_homogeneous():
        raise ValueError("point counting requires a homogeneous polynomial")
    field = _check_cap(P, s, cap)
    n = 0
    for x in field.elements():
        for y in field.elements():
            if P.evaluate(field, x, y, 1) == 0:
                n += 1
    for x in field.elements():
        if P.evaluate(field, x, 1, 0) == 0:
            n += 1
    if P.evaluate(field, 1, 0, 0) == 0:
        n += 1
    return n


def _y_decompose(P: TrivariatePoly):
    """Split P = y^2 A(x,z) + y B(x,z) + C(x,z); requires y-degree <= 2."""
    if P.y_degree() > 2:
        raise ValueError("fast counter requires a polynomial quadratic in y")
    parts = {0: [], 1: [], 2: []}
    for a, b, c in P.monomials:
        parts[b].append((a, c))
    return parts[2], parts[1], parts[0]


def _eval_xz(field: Field, terms: list[tuple[int, int]], x: int, z: int) -> int:
    acc = 0
    for a, c in terms:
        acc ^= field.mul(field.pow(x, a), field.pow(z, c))
    return acc


def count_projective_points_fast(P: TrivariatePoly, s: int, cap: int = 20) -> int:
    """Same count as count_projective_points, for curves quadratic in y.

    Solves a y^2 + b y + c = 0 per chart point: for a != 0, b != 0 the
    substitution y = (b/a) w turns it into w^2 + w = c a / b^2 with 2 or 0
    roots by Tr(c a / b^2); a != 0, b = 0 gives the unique square root;
    a = 0 is linear.
    """
    if not P.is_homogeneous():
        raise ValueError("point counting requires a homogeneous polynomial")
    if s > cap:
        raise FieldError(f"s={s} exceeds cap {cap}")
    field = get_field(s)
    A2, B1, C0 = _y_decompose(P)
    n = 0
    for x in field.elements():
        a = _eval_xz(field, A2, x, 1)
        b = _eval_xz(field, B1, x, 1)
        c = _eval_xz(field, C0, x, 1)
        if a == 0:
            if b == 0:
                n += field.size if c == 0 else 0
            else:
                n += 1
        elif b == 0:
            n += 1  # y^2 = c/a, Frobenius is a bijection
        else:
            beta = field.mul(field.mul(c, a), field.inv(field.sqr(b)))
            n += 2 if field.trace(beta) == 0 else 0
    for x in field.elements():
        if P.evaluate(field, x, 1, 0) == 0:
            n += 1
    if P.evaluate(field, 1, 0, 0) == 0:
        n += 1
    return n


def singular_points(P: TrivariatePoly, s: int, cap: int = COUNT_CAP) -> list[tuple[int, int, int]]:
    """Projective points over F_{2^s} where P and all three partials vanish.

    Representatives in the standard charts; the search is exhaustive over
    F_{2^s} only (no algebraic closure).
    """
    if not P.is_homogeneous():
        raise ValueError("singular-point search requires a homogeneous polynomial")
    field = _check_cap(P, s, cap)
    polys = [P, P.derivative("x"), P.derivative("y"), P.derivative("z")]
    out = []

    def is_sing(x, y, z):
        return all(q.evaluate(field, x, y, z) == 0 for q in polys)

    for x in field.elements():
        for y in field.elements():
            if is_sing(x, y, 1):
                out.append((x, y, 1))
    for x in field.elements():
        if is_sing(x, 1, 0):
            out.append((x, 1, 0))
    if is_sing(1, 0, 0):
        out.append((1, 0, 0))
    return out


# -- catalog ---------------------------------------------------------------


@dataclass(frozen=True)
class CurveCatalogEntry:
    name: str
    polynomial: TrivariatePoly
    l_polynomial_name: str | None
    # Count over F_{2^s} of this (possibly singular) model, in terms of the
    # nonsingular-model count n predicted by the L-polynomial:
    #   "exact"      -> n        (curve is nonsingular)
    #   "minus_one"  -> n - 1    (one F_2-rational singular point)
    #   "minus_s1"   -> n - S_s  (S_s = 2^(1+delta), delta = 2 iff 3 | s)
    correction: str | None
    genus: int | None
    expected_singular_points: tuple[tuple[int, int, int], ...]

    def corrected_prediction(self, n: int, s: int) -> int:
        from .zeta import singular_correction

        if self.correction == "exact":
            return n
        if self.correction == "minus_one":
            return n - 1
        if self.correction == "minus_s1":
            return n - singular_correction(s)
        raise ValueError(f"no count prediction for curve {self.name!r}")


_CATALOG_META = {
    # name: (lpoly, correction, genus, singular points over F_2)
    "fbar3": (None, None, None, ()),
    "p1tilde": ("z1", "minus_s1", 31, None),  # singular locus not pinned here
    "kloosterman": ("z2", "exact", 1, ()),
    "p3": ("z3", "minus_one", 5, ((0, 1, 0),)),
    "p4": ("z4", "minus_one", 2, ((0, 1, 0),)),
}


def catalog_curve_names() -> tuple[str, ...]:
    return tuple(_CATALOG_META)


def catalog_curve(name: str) -> CurveCatalogEntry:
    if name not in _CATALOG_META:
        raise ValueError(f"unknown catalog curve {name!r} (have {tuple(_CATALOG_META)})")
    text = resources.files("char2kit.catalog").joinpath(f"{name}.curve").read_text()
    poly = TrivariatePoly.parse(text)
    lname, corr, genus, sing = _CATALOG_META[name]
    return CurveCatalogEntry(name, poly, lname, corr, genus,
                             tuple(sing) if sing is not None else ())
