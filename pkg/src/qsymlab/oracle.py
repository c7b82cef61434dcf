"""Brute-force truncated polynomials in finitely many variables.

This is the ground truth for the QSym product: expand ``M_alpha`` in ``N``
variables, multiply exponent vectors directly, and read the monomial-basis
coefficients back off the packed monomials.  It deliberately shares no code
with :mod:`qsymlab.qsym`.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .compositions import Composition, compositions_of
from .config import degree_cap
from .errors import ReconstructionError
from .lincomb import LinComb
from .rings import ZZ, CoefficientRing


@dataclass(frozen=True)
class TruncPoly:
    nvars: int
    terms: dict  # exponent tuple of length nvars -> nonzero coefficient
    ring: CoefficientRing = ZZ
    cap: int | None = None

    @classmethod
    def build(cls, nvars, terms, ring=ZZ, cap=None) -> "TruncPoly":
        cap = degree_cap() if cap is None else cap
        clean = {}
        for e, c in terms.items():
            if len(e) != nvars:
                raise ValueError("exponent vector has the wrong length")
            c = ring.normalize(c)
            if c != 0 and sum(e) <= cap:
                clean[tuple(e)] = c
        return cls(nvars, clean, ring, cap)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncPoly):
            return NotImplemented
        return (self.nvars, self.terms, self.ring) == (other.nvars, other.terms, other.ring)

    def __sub__(self, other: "TruncPoly") -> "TruncPoly":
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, 0) - c
        return TruncPoly.build(self.nvars, acc, self.ring, self.cap)


def expand_M(alpha, nvars: int, ring: CoefficientRing = ZZ, cap: int | None = None) -> TruncPoly:
    """Sum of ``x_{i1}^{a1} ... x_{il}^{al}`` over ``i1 < ... < il <= nvars``."""
    alpha = tuple(alpha)
    terms = {}
    for idx in combinations(range(nvars), len(alpha)):
        e = [0] * nvars
        for i, a in zip(idx, alpha):
            e[i] = a
        terms[tuple(e)] = 1
    return TruncPoly.build(nvars, terms, ring, cap)


def poly_mul(p: TruncPoly, q: TruncPoly) -> TruncPoly:
    if p.nvars != q.nvars:
        raise ValueError("variable counts differ")
    acc: dict = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            acc[e] = acc.get(e, 0) + c1 * c2
    return TruncPoly.build(p.nvars, acc, p.ring, p.cap)


def poly_add(p: TruncPoly, q: TruncPoly) -> TruncPoly:
    acc = dict(p.terms)
    for e, c in q.terms.items():
        acc[e] = acc.get(e, 0) + c
    return TruncPoly.build(p.nvars, acc, p.ring, p.cap)


def extract_M_coeffs(p: TruncPoly) -> LinComb:
    """Monomial-basis coordinates of a quasisymmetric ``p``.

    Reads the coefficient of each packed monomial ``x_1^{a1} ... x_l^{al}``,
    then re-expands and raises :class:`ReconstructionError` unless the result
    reproduces ``p`` exactly.
    """
    if p.degree() > p.nvars:
        raise ValueError(f"degree {p.degree()} exceeds the {p.nvars} variables; extraction is not faithful")
    coeffs = {}
    for e, c in p.terms.items():
        ell = sum(1 for x in e if x)
        if all(x for x in e[:ell]):
            coeffs[Composition(e[:ell])] = c
    rebuilt = TruncPoly.build(p.nvars, {}, p.ring, p.cap)
    for alpha, c in coeffs.items():
        term = expand_M(alpha, p.nvars, p.ring, p.cap)
        rebuilt = poly_add(rebuilt, TruncPoly.build(p.nvars, {e: c * v for e, v in term.terms.items()}, p.ring, p.cap))
    if rebuilt != p:
        raise ReconstructionError("polynomial is not quasisymmetric in the given variables")
    return LinComb(p.ring, coeffs)


def oracle_product(alpha, beta, ring: CoefficientRing = ZZ) -> LinComb:
    """``M_alpha * M_beta`` computed in ``|alpha| + |beta|`` variables."""
    n = max(sum(alpha) + sum(beta), 1)
    return extract_M_coeffs(poly_mul(expand_M(alpha, n, ring), expand_M(beta, n, ring)))


def oracle_pairs(max_degree: int):
    """All ``(alpha, beta)`` with ``|alpha| + |beta| <= max_degree``."""
    for d1 in range(max_degree + 1):
        for d2 in range(max_degree - d1 + 1):
            for a in compositions_of(d1):
                for b in compositions_of(d2):
                    yield a, b
