"""GNS-level duality: the multiplicative unitary, the left regular
representation, the dual quantum group, Pontryagin biduality, and
coefficient-induced left multipliers of the dual convolution algebra.

Everything is anchored at the unitary W on H_h (x) H_h determined by
W*(Lambda(a) (x) Lambda(b)) = (Lambda (x) Lambda)(Delta(b)(a (x) 1)).  The
left regular representation is lambda(omega) = (omega (x) id)W, the dual
algebra is the span of its image, and the dual structure tensors are
extracted by solving linear systems in this concrete picture.  The dual
side of Tomita theory is trivialized by traciality: the adjoint of the
dual Tomita map equals the dual modular conjugation.
"""

from __future__ import annotations

import numpy as np

from .convolution import Functional, convolve, module_action
from .corep import Corepresentation, cb_norm, coefficient, generator_of, is_corep
from .errors import InvalidInstanceError, NotInvertibleError, OwnerMismatchError
from .qgroup import (
    AlgebraElement,
    FiniteQuantumGroup,
    adjoint,
    multiply,
    operator_norm,
    validate,
)


def _swap_matrix(n):
    S = np.zeros((n * n, n * n))
    for i in range(n):
        for j in range(n):
            S[i * n + j, j * n + i] = 1.0
    return S


class MultiplicativeUnitary:
    """W on H_h (x) H_h with its leg-one expansion over the algebra basis."""

    def __init__(self, owner, W, leg1_slices, expansion_residual,
                 unitarity_residual, pentagon_residual, coproduct_residual):
        self.owner = owner
        self.W = W
        self.leg1_slices = leg1_slices      # W = sum_i lambda(e_i) (x) Z_i
        self.expansion_residual = float(expansion_residual)
        self.unitarity_residual = float(unitarity_residual)
        self.pentagon_residual = float(pentagon_residual)
        self.coproduct_residual = float(coproduct_residual)

    def lambda_of(self, w: Functional) -> np.ndarray:
        """lambda(omega) = (omega (x) id)W on H_h."""
        if w.owner is not self.owner:
            raise OwnerMismatchError("functional belongs to a different instance")
        return np.einsum("m,mij->ij", w.coeffs, self.leg1_slices)


def _leg1_expand(owner, X, rtol=1e-8):
    """Write X on H (x) H as sum_i lambda(e_i) (x) Z_i; return (Z, residual)."""
    gd = owner.gns()
    n = owner.dim
    Lmat = np.stack([gd.left_action(owner.basis_element(i)).reshape(-1)
                     for i in range(n)], axis=1)
    B = X.reshape(n, n, n, n).transpose(0, 2, 1, 3).reshape(n * n, n * n)
    C, *_ = np.linalg.lstsq(Lmat, B, rcond=None)
    resid = float(np.linalg.norm(Lmat @ C - B) / max(1.0, np.linalg.norm(B)))
    Z = C.reshape(n, n, n)
    return Z, resid


def build_w(G: FiniteQuantumGroup) -> MultiplicativeUnitary:
    if getattr(G, "_mult_unitary", None) is not None:
        return G._mult_unitary
    gd = G.gns()
    n = G.dim
    # W* on coefficients: (a (x) b) -> Delta(b)(a (x) 1)
    wstar_c = np.einsum("mjq,jip->pqim", G.coproduct, G.mult).reshape(n * n, n * n)
    lam2 = np.kron(gd.lambda_map, gd.lambda_map)
    lam2_inv = np.kron(gd.lambda_inv, gd.lambda_inv)
    Wstar = lam2 @ wstar_c @ lam2_inv
    W = Wstar.conj().T
    eye2 = np.eye(n * n)
    unit_resid = max(np.linalg.norm(W @ Wstar - eye2, 2),
                     np.linalg.norm(Wstar @ W - eye2, 2))
    if unit_resid > 1e-8:
        raise InvalidInstanceError(
            "fundamental operator is not unitary (residual %.3e)" % unit_resid)
    eye = np.eye(n)
    swap = _swap_matrix(n)
    W12 = np.kron(W, eye)
    W23 = np.kron(eye, W)
    S23 = np.kron(eye, swap)
    W13 = S23 @ W12 @ S23
    pent = float(np.linalg.norm(W12 @ W13 @ W23 - W23 @ W12, 2))
    lam_basis = [gd.left_action(G.basis_element(i)) for i in range(n)]
    cop_resid = 0.0
    for i in range(n):
        lhs = sum(G.coproduct[i, j, k] * np.kron(lam_basis[j], lam_basis[k])
                  for j in range(n) for k in range(n))
        rhs = Wstar @ np.kron(eye, lam_basis[i]) @ W
        cop_resid = max(cop_resid, float(np.linalg.norm(lhs - rhs, 2)))
    Z, exp_resid = _leg1_expand(G, W)
    out = MultiplicativeUnitary(G, W, Z, exp_resid, unit_resid, pent, cop_resid)
    G._mult_unitary = out
    return out


def _e(n, i):
    v = np.zeros(n, dtype=complex)
    v[i] = 1.0
    return v


def lambda_rep(Wd: MultiplicativeUnitary, w: Functional) -> np.ndarray:
    return Wd.lambda_of(w)


class DualQuantumGroup:
    """The dual instance plus its concrete identification inside B(H_h)."""

    def __init__(self, owner, group, Wd, Z, What, What_slices, Lambda_hat_mat,
                 phihat_one, extraction_residual):
        self.owner = owner                  # primal G
        self.group = group                  # abstract dual instance
        self.Wd = Wd
        self.Z = Z                          # Z[mu] = lambda(omega_mu) on H
        self.What = What                    # Sigma W* Sigma
        self.What_slices = What_slices      # What = sum_mu Z_mu (x) Yhat_mu
        self.Lambda_hat_mat = Lambda_hat_mat  # columns Lambda^(lambda(omega_mu))
        self.phihat_one = float(phihat_one)
        self.extraction_residual = float(extraction_residual)
        n = owner.dim
        self._zpinv = np.linalg.pinv(
            np.stack([z.reshape(-1) for z in Z], axis=1))
        self.Jhat_mat = (Lambda_hat_mat @ group.star.T
                         @ np.conj(np.linalg.inv(Lambda_hat_mat)))

    # -- concrete maps ------------------------------------------------------

    def functional(self, coeffs) -> Functional:
        return Functional(self.group, coeffs)

    def lambda_of(self, w: Functional) -> np.ndarray:
        return self.Wd.lambda_of(w)

    def lambda_hat(self, what: Functional) -> np.ndarray:
        """lambda-hat(omega-hat) = (omega-hat (x) id)W-hat, an element of M."""
        if what.owner is not self.group:
            raise OwnerMismatchError("functional does not live on the dual")
        return np.einsum("m,mij->ij", what.coeffs, self.What_slices)

    def expand_in_dual(self, m: np.ndarray, rtol=1e-7):
        """Coefficients of m in the basis lambda(omega_mu) of the dual algebra."""
        c = self._zpinv @ m.reshape(-1)
        resid = np.linalg.norm(
            sum(c[k] * self.Z[k] for k in range(len(c))) - m)
        if resid > rtol * max(1.0, np.linalg.norm(m)):
            raise InvalidInstanceError(
                "matrix is not in the dual algebra (residual %.3e)" % resid)
        return c

    def Lambda_hat(self, what_element_coeffs) -> np.ndarray:
        return self.Lambda_hat_mat @ np.asarray(what_element_coeffs, dtype=complex)

    def Lambda_hat_of_functional(self, w: Functional) -> np.ndarray:
        """Lambda^(lambda(omega)) from <x*, omega> = (Lambda^(lambda(omega)) | Lambda(x))."""
        if w.owner is not self.owner:
            raise OwnerMismatchError("functional belongs to a different instance")
        gd = self.owner.gns()
        return gd.lambda_inv @ (self.owner.star @ w.coeffs)

    def apply_Jhat(self, v: np.ndarray) -> np.ndarray:
        return self.Jhat_mat @ np.conj(v)

    def vector_functional(self, xi, eta) -> Functional:
        """omega-hat_{xi,eta}: y-hat -> (y-hat xi | eta) as a dual functional."""
        vals = np.array([np.vdot(eta, z @ xi) for z in self.Z])
        return Functional(self.group, vals)


def build_dual(G: FiniteQuantumGroup) -> DualQuantumGroup:
    if getattr(G, "_dual", None) is not None:
        return G._dual
    Wd = build_w(G)
    gd = G.gns()
    n = G.dim
    Z = [Wd.lambda_of(Functional(G, _e(n, mu))) for mu in range(n)]
    zmat = np.stack([z.reshape(-1) for z in Z], axis=1)
    if np.linalg.matrix_rank(zmat, tol=1e-9) < n:
        raise InvalidInstanceError("left regular representation is not injective")
    zpinv = np.linalg.pinv(zmat)
    resid = 0.0

    def expand(m):
        nonlocal resid
        c = zpinv @ m.reshape(-1)
        resid = max(resid, float(np.linalg.norm(zmat @ c - m.reshape(-1))))
        return c

    # multiplication and coproduct through the GNS picture
    mult_hat = np.zeros((n, n, n), dtype=complex)
    for mu in range(n):
        for nu in range(n):
            mult_hat[mu, nu] = expand(Z[mu] @ Z[nu])
    swap = _swap_matrix(n)
    What = swap @ Wd.W.conj().T @ swap
    What_star = What.conj().T
    zz = np.stack([np.kron(Z[a], Z[b]).reshape(-1)
                   for a in range(n) for b in range(n)], axis=1)
    zz_pinv = np.linalg.pinv(zz)
    cop_hat = np.zeros((n, n, n), dtype=complex)
    eye = np.eye(n)
    for mu in range(n):
        target = What_star @ np.kron(eye, Z[mu]) @ What
        c = zz_pinv @ target.reshape(-1)
        resid = max(resid, float(np.linalg.norm(zz @ c - target.reshape(-1))))
        cop_hat[mu] = c.reshape(n, n)
    # unit, counit
    unit_hat = G.counit.copy()
    counit_hat = G.unit.copy()
    # antipode: S-hat((omega (x) id)W) = (omega (x) id)(W*)
    Zstar_slices, exp_resid = _leg1_expand(G, Wd.W.conj().T)
    resid = max(resid, exp_resid)
    antipode_hat = np.zeros((n, n), dtype=complex)
    for mu in range(n):
        antipode_hat[mu] = expand(Zstar_slices[mu])
    # star: the sharp involution implemented by the concrete adjoint
    star_hat = np.zeros((n, n), dtype=complex)
    for mu in range(n):
        star_hat[mu] = expand(Z[mu].conj().T)
    # dual GNS map and Haar: <x*, omega> = (Lambda^(lambda(omega)) | Lambda(x))
    Lhat = np.stack([gd.lambda_inv @ (G.star @ _e(n, mu)) for mu in range(n)],
                    axis=1)
    xi_one = Lhat @ unit_hat
    phihat_one = float(np.real(np.vdot(xi_one, xi_one)))
    haar_hat = np.array([np.vdot(xi_one, Lhat[:, mu]) for mu in range(n)])
    haar_hat = haar_hat / phihat_one
    dual_group = FiniteQuantumGroup(
        "%s_dual" % G.name, mult_hat, unit_hat, cop_hat, counit_hat,
        antipode_hat, star_hat, haar_hat,
        basis_labels=["w[%s]" % lbl for lbl in G.basis_labels])
    rep = validate(dual_group, tol=1e-9)
    if not rep.passed:
        raise InvalidInstanceError(
            "extracted dual instance fails validation (max violation %.3e)"
            % rep.max_violation)
    B = What.reshape(n, n, n, n).transpose(0, 2, 1, 3).reshape(n * n, n * n)
    Cc, *_ = np.linalg.lstsq(zmat, B, rcond=None)
    resid = max(resid, float(np.linalg.norm(zmat @ Cc - B)
                             / max(1.0, np.linalg.norm(B))))
    What_slices = Cc.reshape(n, n, n)
    out = DualQuantumGroup(G, dual_group, Wd, Z, What, What_slices, Lhat,
                           phihat_one, resid)
    G._dual = out
    return out


# ---------------------------------------------------------------------------
# Pontryagin biduality


def biduality(G: FiniteQuantumGroup) -> dict:
    """Exhibit the canonical *-isomorphism of the double dual onto G.

    The double dual's concrete left regular image is transported to H_h by
    the GNS unitary between the two realizations of the dual Haar weight and
    matched against the left regular image of G by solving linear systems;
    the report carries the worst violation over all structural checks.
    """
    d1 = build_dual(G)
    Ghat = d1.group
    d2 = build_dual(Ghat)
    gd = G.gns()
    n = G.dim
    lam_dual = Ghat.gns().lambda_map
    U = (d1.Lambda_hat_mat / np.sqrt(d1.phihat_one)) @ np.linalg.inv(lam_dual)
    viol = float(np.linalg.norm(U @ U.conj().T - np.eye(n), 2))
    phi = np.zeros((n, n), dtype=complex)   # double-dual coeffs -> G coeffs
    for rho in range(n):
        X = U @ d2.Z[rho] @ U.conj().T
        a = gd.left_action_inv(X, rtol=1e-7)
        phi[rho] = a.coeffs
        viol = max(viol, float(np.linalg.norm(
            gd.left_action(a) - X) / max(1.0, np.linalg.norm(X))))
    Gdd = d2.group

    def push(coeffs):
        return AlgebraElement(G, coeffs @ phi)

    viol = max(viol, float(np.max(np.abs(push(Gdd.unit).coeffs - G.unit))))
    for i in range(n):
        xi = Gdd.basis_element(i)
        viol = max(viol, float(np.max(np.abs(
            push(Gdd.star_coeffs(xi.coeffs)).coeffs
            - adjoint(push(xi.coeffs)).coeffs))))
        viol = max(viol, abs(np.dot(phi[i], G.counit) - Gdd.counit[i]))
        viol = max(viol, abs(np.dot(phi[i], G.haar) - Gdd.haar[i]))
        for j in range(n):
            xj = Gdd.basis_element(j)
            lhs = push(Gdd.mult_coeffs(xi.coeffs, xj.coeffs)).coeffs
            rhs = multiply(push(xi.coeffs), push(xj.coeffs)).coeffs
            viol = max(viol, float(np.max(np.abs(lhs - rhs))))
        dd = Gdd.coproduct_coeffs(xi.coeffs)
        lhs2 = np.einsum("ab,ap,bq->pq", dd, phi, phi)
        rhs2 = G.coproduct_coeffs(push(xi.coeffs).coeffs)
        viol = max(viol, float(np.max(np.abs(lhs2 - rhs2))))
    return {"isomorphism": phi, "max_violation": viol}


# ---------------------------------------------------------------------------
# Coefficient-induced multipliers


def apply_multiplier(Lmat: np.ndarray, what: Functional) -> Functional:
    """(L omega)(y) = omega(L*(y)) on dual functional coefficients."""
    return Functional(what.owner, Lmat @ what.coeffs)


class MultiplierData:
    def __init__(self, Lmat, x, residual_action, residual_w, norm_bound,
                 factorization_norm, cb_bound):
        self.Lmat = Lmat                    # action on dual functional coefficients
        self.x = x                          # the implementing algebra element
        self.residual_action = float(residual_action)
        self.residual_w = float(residual_w)
        self.norm_bound = float(norm_bound)
        self.factorization_norm = float(factorization_norm)
        self.cb_bound = float(cb_bound)


def multiplier_from_coefficient(V: Corepresentation, alpha, beta,
                                basis: np.ndarray | None = None) -> MultiplierData:
    """Left multiplier of the dual convolution algebra induced by the
    coefficient x = T^{pi~}_{alpha,beta} of an invertible corepresentation.

    With sigma Delta(x) = sum_i b_i (x) a_i read off the coefficient
    expansion over an orthonormal basis (f_i), the adjoint acts as
    L*(y) = sum_i S(b_i*)* y a_i, and lambda-hat(L omega) = x lambda-hat(omega).
    """
    G = V.owner
    chk = is_corep(V)
    if not chk:
        raise NotInvertibleError("input fails the corepresentation identity "
                                 "(violation %.3e)" % chk.violation)
    dual = build_dual(G)
    gd = G.gns()
    d = V.d
    if basis is None:
        basis = np.eye(d, dtype=complex)
    Vt = generator_of("tilde", V)
    Vs = generator_of("star", V)
    x = coefficient(Vt, alpha, beta)
    a_els = [coefficient(Vt, alpha, basis[:, i]) for i in range(d)]
    c_els = [coefficient(Vs, basis[:, i], beta) for i in range(d)]
    a_mats = [gd.left_action(a) for a in a_els]
    c_mats = [gd.left_action(c) for c in c_els]
    lx = gd.left_action(x)
    n = G.dim

    def Lstar(m):
        return sum(c_mats[i] @ m @ a_mats[i] for i in range(d))

    Lmat = np.zeros((n, n), dtype=complex)
    for mu in range(n):
        Lmat[mu] = dual.expand_in_dual(Lstar(dual.Z[mu]))
    residual_action = 0.0
    for nu in range(n):
        what = Functional(dual.group, _e(n, nu))
        lhs = dual.lambda_hat(apply_multiplier(Lmat, what))
        rhs = lx @ dual.lambda_hat(what)
        residual_action = max(residual_action,
                              float(np.linalg.norm(lhs - rhs, 2)))
    lhs_w = sum(np.kron(Lstar(dual.Z[mu]), dual.What_slices[mu])
                for mu in range(n))
    rhs_w = np.kron(np.eye(n), lx) @ dual.What
    residual_w = float(np.linalg.norm(lhs_w - rhs_w, 2))
    sum_cc = sum((multiply(adjoint(c), c) for c in c_els), start=G.zero())
    sum_aa = sum((multiply(adjoint(a), a) for a in a_els), start=G.zero())
    norm_bound = np.sqrt(operator_norm(sum_cc)) * np.sqrt(operator_norm(sum_aa))
    fact = float(np.linalg.norm(
        sum(np.kron(c_mats[i], a_mats[i].T) for i in range(d)), 2))
    cb_bound = (cb_norm(V) * cb_norm(Vs)
                * float(np.linalg.norm(alpha)) * float(np.linalg.norm(beta)))
    return MultiplierData(Lmat, x, residual_action, residual_w, norm_bound,
                          fact, cb_bound)


# ---------------------------------------------------------------------------
# The concrete pairing identity between the two GNS pictures


def pairing_identity_check(G: FiniteQuantumGroup, x: AlgebraElement,
                           w1: Functional, w2: Functional) -> float:
    """Residual of Lambda(lambda-hat(omega-hat)) = Lambda^(lambda((x w1) w2))
    with omega-hat the vector functional at (lambda(x) xi, J-hat eta),
    xi = Lambda^(lambda(w1)), eta = J-hat Lambda^(lambda(w2))."""
    dual = build_dual(G)
    gd = G.gns()
    xi = dual.Lambda_hat_of_functional(w1)
    eta = dual.apply_Jhat(dual.Lambda_hat_of_functional(w2))
    what = dual.vector_functional(gd.left_action(x) @ xi, eta)
    lam_hat = dual.lambda_hat(what)
    lhs = gd.lambda_map @ gd.left_action_inv(lam_hat, rtol=1e-6).coeffs
    rhs = dual.Lambda_hat_of_functional(convolve(module_action(x, w1), w2))
    return float(np.linalg.norm(lhs - rhs))
