"""The convolution algebra of functionals dual to a finite quantum group.

A functional omega is stored by its values on the basis; the product is dual
to the coproduct, the unit is the counit, and two involutions matter:

    omega*      <x, omega*>  = conj <x*, omega>        (conjugate-linear homomorphism)
    omega#      <x, omega#>  = conj <S(x)*, omega>     (the *-algebra involution)

The antipode is everywhere defined here, so the sharp involution is total.
The dual norm is computed exactly through the Wedderburn blocks: pushing
omega to trace-pairing matrices W_k per block, the norm is the sum of the
per-block trace norms.
"""

from __future__ import annotations

import numpy as np

from .errors import OwnerMismatchError, StructuralError
from .qgroup import AlgebraElement, FiniteQuantumGroup


class Functional:
    """Element of the convolution algebra, stored as values on the owner basis."""

    __slots__ = ("owner", "coeffs")

    def __init__(self, owner, coeffs):
        self.owner = owner
        c = np.asarray(coeffs, dtype=complex)
        if c.shape != (owner.dim,):
            raise StructuralError("functional vector has shape %s, expected (%d,)"
                                  % (c.shape, owner.dim))
        self.coeffs = c

    def _check_owner(self, other):
        if self.owner is not other.owner:
            raise OwnerMismatchError("functionals belong to different instances")

    def __call__(self, x) -> complex:
        if isinstance(x, AlgebraElement):
            if self.owner is not x.owner:
                raise OwnerMismatchError("functional applied to a foreign element")
            return complex(np.dot(self.coeffs, x.coeffs))
        return complex(np.dot(self.coeffs, np.asarray(x, dtype=complex)))

    def __add__(self, other):
        self._check_owner(other)
        return Functional(self.owner, self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check_owner(other)
        return Functional(self.owner, self.coeffs - other.coeffs)

    def __mul__(self, other):
        if isinstance(other, Functional):
            return convolve(self, other)
        return Functional(self.owner, self.coeffs * complex(other))

    def __rmul__(self, scalar):
        return Functional(self.owner, self.coeffs * complex(scalar))

    def __neg__(self):
        return Functional(self.owner, -self.coeffs)

    def __repr__(self):
        return "Functional(%r, %s)" % (self.owner.name, self.coeffs)


def basis_functional(G: FiniteQuantumGroup, i: int) -> Functional:
    v = np.zeros(G.dim, dtype=complex)
    v[i] = 1.0
    return Functional(G, v)


def counit_functional(G: FiniteQuantumGroup) -> Functional:
    return Functional(G, G.counit)


def haar_functional(G: FiniteQuantumGroup) -> Functional:
    return Functional(G, G.haar)


def convolve(w1: Functional, w2: Functional) -> Functional:
    """(w1 w2)(x) = (w1 (x) w2)(Delta x)."""
    w1._check_owner(w2)
    G = w1.owner
    return Functional(G, np.einsum("ijk,j,k->i", G.coproduct, w1.coeffs, w2.coeffs))


def star_l1(w: Functional) -> Functional:
    """omega* with <x, omega*> = conj <x*, omega>."""
    G = w.owner
    return Functional(G, np.conj(G.star @ w.coeffs))


def sharp(w: Functional) -> Functional:
    """omega# with <x, omega#> = conj <S(x)*, omega>."""
    G = w.owner
    return Functional(G, G.antipode @ np.conj(G.star @ w.coeffs))


def module_action(x: AlgebraElement, w: Functional) -> Functional:
    """The left module action (x.omega)(y) = omega(y x)."""
    if x.owner is not w.owner:
        raise OwnerMismatchError("module action across instances")
    G = x.owner
    # (x w)_i = w(e_i x) = sum_{j,k} M[i,j,k] x_j w_k
    return Functional(G, np.einsum("ijk,j,k->i", G.mult, x.coeffs, w.coeffs))


def l1_norm(w: Functional) -> float:
    return l1_norm_witness(w)[0]


def l1_norm_witness(w: Functional):
    """Exact dual norm plus a norm-one element attaining it.

    omega(x) = sum_k tr(W_k x_k) through the block decomposition, so
    ||omega||_1 = sum_k ||W_k||_S1, attained at the partial-isometry blocks
    from the polar decompositions of the W_k.
    """
    G = w.owner
    bd = G.block_decomposition()
    pair = bd.pairing_blocks(w.coeffs)
    total = 0.0
    witness_blocks = []
    for Wk in pair:
        U, s, Vh = np.linalg.svd(Wk)
        total += float(np.sum(s))
        witness_blocks.append(Vh.conj().T @ U.conj().T)
    witness = bd.backward(witness_blocks)
    return total, witness
