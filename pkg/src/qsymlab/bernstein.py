"""ABS morphisms and the Bernstein homomorphism.

For a connected graded Hopf algebra ``H`` and a character ``zeta``, the
coefficient maps ``zeta_alpha`` assemble the unique graded coalgebra morphism
``Psi: H -> QSym`` with ``eps_P o Psi = zeta``.  When ``H`` is commutative the
same construction with ``H`` itself as the coefficient algebra gives

    beta_H(h) = sum_alpha xi_alpha(h) (x) M_alpha,
    xi_alpha  = m^(k-1) o pi_alpha o Delta^(k-1).

Each of ``zeta_alpha`` and ``xi_alpha`` has two implementations, the literal
composite and the convolution product of projections; tests compare them.
Elements of ``H (x) QSym`` are :class:`LinComb` objects keyed by
``(h_key, composition)``.
"""
from __future__ import annotations

from typing import Any, Callable, Sequence

from . import qsym
from .compositions import Composition, compositions_of
from .errors import NotCommutativeError
from .hopf import (
    HopfPresentation,
    convolve_many,
    ground,
    iterated_coprod,
    iterated_prod,
    memoized,
    proj_alpha,
)
from .instances import Character, get_instance
from .lincomb import Accumulator, LinComb
from .rings import ZZ, CoefficientRing


def _alpha(alpha: Sequence[int]) -> Composition:
    return alpha if isinstance(alpha, Composition) else Composition(alpha)


def _homogeneous_support(H: HopfPresentation, h: LinComb):
    by_degree: dict = {}
    for k, c in h.items():
        by_degree.setdefault(H.degree(k), []).append((k, c))
    return by_degree


# -- zeta_alpha and Psi ---------------------------------------------------------

def zeta_alpha(H: HopfPresentation, zeta: Callable, alpha: Sequence[int], h: LinComb):
    """``zeta^{(x)k} o pi_alpha o Delta^(k-1)`` evaluated at ``h``."""
    alpha = _alpha(alpha)
    t = proj_alpha(H, iterated_coprod(H, h, len(alpha)), alpha)
    total = 0
    for key, c in t.items():
        for x in key:
            c = c * zeta(x)
            if c == 0:
                break
        total += c
    return H.ring.normalize(total)


def _zeta_projection(H: HopfPresentation, zeta: Callable, a: int, K: HopfPresentation):
    def f(key):
        if H.degree(key) != a:
            return K.zero()
        return K.one().scale(zeta(key))

    return f


def zeta_alpha_convolution(H: HopfPresentation, zeta: Callable, alpha: Sequence[int], h: LinComb):
    """``(zeta o pi_a1) * ... * (zeta o pi_ak)`` in the convolution algebra ``Hom(H, k)``."""
    K = ground(H.ring)
    maps = [_zeta_projection(H, zeta, a, K) for a in _alpha(alpha)]
    conv = convolve_many(H, maps, K)
    total = 0
    for key, c in h.items():
        total += c * conv(key).coeff(())
    return H.ring.normalize(total)


def abs_morphism(H: HopfPresentation, zeta: Callable, h: LinComb) -> LinComb:
    """``Psi(h) = sum_alpha zeta_alpha(h) M_alpha``, summed degree by degree."""
    out = Accumulator(H.ring)
    for n, terms in _homogeneous_support(H, h).items():
        part = LinComb(H.ring, dict(terms))
        for alpha in compositions_of(n):
            c = zeta_alpha(H, zeta, alpha, part)
            if c != 0:
                out.add(alpha, c)
    return out.result()


def abs_on_key(H: HopfPresentation, zeta: Character, key) -> LinComb:
    return H.memo(("psi", zeta.name), key, lambda: abs_morphism(H, zeta, H.elem(key)))


# -- xi_alpha -------------------------------------------------------------------

def xi_alpha(H: HopfPresentation, alpha: Sequence[int], h: LinComb) -> LinComb:
    """``m^(k-1) o pi_alpha o Delta^(k-1)`` evaluated at ``h``."""
    alpha = _alpha(alpha)
    return iterated_prod(H, proj_alpha(H, iterated_coprod(H, h, len(alpha)), alpha))


def _projection(H: HopfPresentation, a: int):
    return lambda key: H.elem(key) if H.degree(key) == a else H.zero()


def xi_alpha_convolution(H: HopfPresentation, alpha: Sequence[int], h: LinComb) -> LinComb:
    """``pi_a1 * pi_a2 * ... * pi_ak`` in the convolution algebra ``Hom(H, H)``."""
    conv = convolve_many(H, [_projection(H, a) for a in _alpha(alpha)], H)
    out = Accumulator(H.ring)
    for key, c in h.items():
        out.add_lc(conv(key), c)
    return out.result()


def xi_alpha_general(
    H: HopfPresentation,
    xi: Callable[[Any], LinComb],
    A: HopfPresentation,
    alpha: Sequence[int],
    h: LinComb,
) -> LinComb:
    """``m_A^(k-1) o xi^{(x)k} o pi_alpha o Delta^(k-1)`` for an algebra map ``xi: H -> A``.

    ``A`` must be commutative.  With ``A = H`` and ``xi = id`` this is
    :func:`xi_alpha`; with ``A`` the ground ring it is :func:`zeta_alpha`.
    """
    if not A.commutative:
        raise NotCommutativeError(f"target algebra {A.name} is not declared commutative")
    alpha = _alpha(alpha)
    xi = memoized(xi)
    t = proj_alpha(H, iterated_coprod(H, h, len(alpha)), alpha)
    out = Accumulator(A.ring)
    for key, c in t.items():
        value = A.one()
        for x in key:
            value = A.mul(value, xi(x))
            if not value:
                break
        out.add_lc(value, c)
    return out.result()


def character_as_map(zeta: Callable, ring: CoefficientRing) -> Callable[[Any], LinComb]:
    """View a character ``H -> k`` as an algebra map into :func:`ground`."""
    return lambda key: LinComb(ring, {(): zeta(key)})


# -- Bernstein homomorphism ------------------------------------------------------

def require_commutative(H: HopfPresentation) -> None:
    if not H.commutative:
        raise NotCommutativeError(
            f"{H.name} is not declared commutative; the Bernstein map needs a commutative H"
        )


def _bernstein_key(H: HopfPresentation, key) -> LinComb:
    def compute():
        out = Accumulator(H.ring)
        x = H.elem(key)
        for alpha in compositions_of(H.degree(key)):
            for k, c in xi_alpha(H, alpha, x).items():
                out.add((k, alpha), c)
        return out.result()

    return H.memo("beta", key, compute)


def bernstein_map(H: HopfPresentation, h: LinComb) -> LinComb:
    """``beta_H(h)`` as an element of ``H (x) QSym`` keyed by ``(h_key, alpha)``."""
    require_commutative(H)
    out = Accumulator(H.ring)
    for key, c in h.items():
        out.add_lc(_bernstein_key(H, key), c)
    return out.result()


def bernstein_on_qsym(gamma: Sequence[int], ring: CoefficientRing = ZZ) -> LinComb:
    """``beta_QSym(M_gamma)`` through products and deconcatenations only."""
    Q = get_instance("qsym", ring)
    return bernstein_map(Q, Q.elem(_alpha(gamma)))


def qsym_leg_map(t: LinComb, f: Callable[[LinComb], Any]) -> LinComb:
    """Apply ``id (x) f`` to an element of ``H (x) QSym``.

    ``f`` maps a QSym element either to QSym (result keyed by pairs) or to
    the base ring (result keyed by ``H`` keys).
    """
    out = Accumulator(t.ring)
    for (h, alpha), c in t.items():
        img = f(LinComb.monomial(t.ring, alpha))
        if isinstance(img, LinComb):
            for k, d in img.items():
                out.add((h,) + (k if type(k) is tuple else (k,)), c * d)
        else:
            out.add(h, c * img)
    return out.result()


def counit_leg(t: LinComb) -> LinComb:
    """``(id (x) eps_P)`` applied to an element of ``H (x) QSym``."""
    return qsym_leg_map(t, qsym.eps_P)


def legs(t: LinComb) -> dict:
    """Split ``sum h (x) q`` into ``{h_key: QSym element}``."""
    parts: dict = {}
    for (h, alpha), c in t.items():
        parts.setdefault(h, {})[alpha] = c
    return {h: LinComb._trusted(t.ring, d) for h, d in parts.items()}


def beta_then_beta(H: HopfPresentation, h: LinComb) -> LinComb:
    """``(beta_H (x) id) o beta_H``, keyed by ``(h_key, alpha, gamma)``."""
    out = Accumulator(H.ring)
    for (key, gamma), c in bernstein_map(H, h).items():
        for (k2, alpha), d in _bernstein_key(H, key).items():
            out.add((k2, alpha, gamma), c * d)
    return out.result()


def beta_then_delta_P_prime(H: HopfPresentation, h: LinComb) -> LinComb:
    """``(id (x) Delta'_P) o beta_H``, keyed by ``(h_key, alpha, gamma)``."""
    return qsym_leg_map(bernstein_map(H, h), qsym.delta_P_prime)


def antipode_via_bernstein(H: HopfPresentation, h: LinComb) -> LinComb:
    """``S_H = (id (x) (eps_P o S_QSym)) o beta_H``."""
    return qsym_leg_map(bernstein_map(H, h), lambda f: qsym.eps_P(qsym.qsym_antipode(f)))
