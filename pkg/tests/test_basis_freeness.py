"""All semantics are relative to the stored basis: transporting an instance
through an invertible (non-unitary) change of basis must leave every
pipeline stage working, with the same invariant quantities."""

import numpy as np
import pytest

from qglab.builders import builtin_instance
from qglab.convolution import Functional, l1_norm
from qglab.corep import cb_norm, is_corep, random_invertible_corep, unitarize
from qglab.duality import biduality, build_dual, build_w, multiplier_from_coefficient
from qglab.qgroup import FiniteQuantumGroup, block_decompose, operator_norm, validate


def change_basis(G, B):
    """The same quantum group presented on the basis f_i = sum_j B[i,j] e_j."""
    Binv = np.linalg.inv(B)
    mult = np.einsum("ip,jq,pqk,kl->ijl", B, B, G.mult, Binv)
    cop = np.einsum("ip,pjk,ja,kb->iab", B, G.coproduct, Binv, Binv)
    return FiniteQuantumGroup(
        G.name + "_scrambled",
        mult,
        Binv.T @ G.unit,
        cop,
        B @ G.counit,
        B @ G.antipode @ Binv,
        np.conj(B) @ G.star @ Binv,
        B @ G.haar,
    )


def scrambler(n, seed, cond=3.0):
    rng = np.random.default_rng(seed)
    A = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    U, _, Vh = np.linalg.svd(A)
    s = np.linspace(1.0, 1.0 / cond, n)
    return U @ np.diag(s) @ Vh


@pytest.fixture(scope="module", params=["c_s3", "cg_s3", "kac_paljutkin"])
def scrambled(request):
    G = builtin_instance(request.param)
    H = change_basis(G, scrambler(G.dim, seed=42))
    return G, H


def test_scrambled_instance_validates(scrambled):
    G, H = scrambled
    rep = validate(H, tol=1e-10)
    assert rep.passed, rep


def test_scrambled_norms_agree(scrambled):
    # operator and dual norms are basis-independent isomorphism invariants
    G, H = scrambled
    B = scrambler(G.dim, seed=42)
    rng = np.random.default_rng(1)
    for _ in range(5):
        a_new = rng.standard_normal(G.dim) + 1j * rng.standard_normal(G.dim)
        a_old = B.T @ a_new
        assert abs(operator_norm(H.element(a_new))
                   - operator_norm(G.element(a_old))) < 1e-9
        # functionals transport contravariantly: w_new = B @ w_old
        w_old = rng.standard_normal(G.dim) + 1j * rng.standard_normal(G.dim)
        assert abs(l1_norm(Functional(H, np.linalg.inv(B.T) @ w_old))
                   - l1_norm(Functional(G, w_old))) < 1e-8


def test_scrambled_blocks_match(scrambled):
    G, H = scrambled
    assert sorted(block_decompose(H).sizes) == sorted(block_decompose(G).sizes)


def test_scrambled_duality_pipeline(scrambled):
    G, H = scrambled
    Wd = build_w(H)
    assert Wd.pentagon_residual < 1e-9
    assert Wd.coproduct_residual < 1e-9
    dual = build_dual(H)
    assert validate(dual.group, tol=1e-8).passed
    assert biduality(H)["max_violation"] < 1e-7


def test_scrambled_corep_and_multiplier(scrambled):
    G, H = scrambled
    V, T, V0 = random_invertible_corep(H, 2, seed=3)
    assert is_corep(V).is_corep
    Tav, Vu = unitarize(V)
    g = Vu.gns_matrix()
    assert np.linalg.norm(g.conj().T @ g - np.eye(g.shape[0]), 2) < 1e-8
    rng = np.random.default_rng(2)
    a = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    b = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    md = multiplier_from_coefficient(V, a, b)
    assert md.residual_action < 1e-7
    assert md.residual_w < 1e-7
    assert md.factorization_norm <= md.cb_bound + 1e-6
    assert cb_norm(V0) == pytest.approx(1.0, abs=1e-8)
