"""Catalog atoms, combination rules, and document ingestion."""
from __future__ import annotations

import numpy as np
import pytest
import sympy

from foldcheck.catalog import (
    atom,
    connected_sum,
    cp2_reversed,
    k3,
    load_manifold,
    nonorientable_surface,
    orientable_surface,
    point,
    product,
    real_projective,
    sphere,
    validate_manifold,
)
from foldcheck.errors import DimensionMismatch, InvariantViolation, SchemaError
from foldcheck.tristate import P1Data


# ---------------------------------------------------------------------------
# atoms


@pytest.mark.parametrize(
    "token,dim,orientable,euler,signature",
    [
        ("S1", 1, True, 0, None),
        ("S2", 2, True, 2, None),
        ("S4", 4, True, 2, 0),
        ("RP2", 2, False, 1, None),
        ("RP3", 3, True, 0, None),
        ("RP4", 4, False, 1, None),
        ("CP1", 2, True, 2, None),
        ("CP2", 4, True, 3, 1),
        ("CP2~", 4, True, 3, -1),
        ("CP3", 6, True, 4, None),
        ("K3", 4, True, 24, -16),
        ("Sigma0", 2, True, 2, None),
        ("Sigma2", 2, True, -2, None),
        ("N1", 2, False, 1, None),
        ("N3", 2, False, -1, None),
    ],
)
def test_atom_classical_invariants(token, dim, orientable, euler, signature):
    m = atom(token)
    assert (m.dim, m.orientable, m.euler, m.signature) == (dim, orientable, euler, signature)
    assert m.name == token


def test_sphere_zero_is_disconnected():
    s0 = sphere(0)
    assert s0.euler == 2 and s0.signature == 0
    assert s0.algebra.rank(0) == 2
    assert not s0.connected


def test_point_is_the_product_unit():
    pt = point()
    m = product(pt, real_projective(4))
    rp4 = real_projective(4)
    assert m.dim == 4 and m.euler == rp4.euler
    assert m.algebra.ranks == rp4.algebra.ranks
    assert [str(m.w.component(d)) for d in range(5)] == [
        str(rp4.w.component(d)) for d in range(5)
    ]


def test_spheres_are_stably_parallelizable():
    for n in (1, 2, 3, 4, 7):
        m = sphere(n)
        assert m.stably_parallelizable
        assert all(m.w.component(d).is_zero() for d in range(1, n + 1))


def _rp_whitney_oracle(n: int) -> list[int]:
    """Coefficients of (1+a)^(n+1) mod 2, degrees 0..n, via sympy."""
    a = sympy.Symbol("a")
    poly = sympy.Poly((1 + a) ** (n + 1), a)
    return [int(poly.coeff_monomial(a**d)) % 2 for d in range(n + 1)]


@pytest.mark.parametrize("n", range(1, 11))
def test_rp_whitney_class_oracle(n):
    m = real_projective(n)
    got = [int(m.w.component(d).coords.sum()) % 2 for d in range(n + 1)]
    assert got == _rp_whitney_oracle(n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cp_whitney_class_oracle(n):
    # w(CPn) = (1+h)^(n+1) mod 2 with h in degree 2
    m = atom(f"CP{n}")
    h = sympy.Symbol("h")
    poly = sympy.Poly((1 + h) ** (n + 1), h)
    for d in range(2 * n + 1):
        expected = int(poly.coeff_monomial(h ** (d // 2))) % 2 if d % 2 == 0 else 0
        assert int(m.w.component(d).coords.sum()) % 2 == expected, d


def test_k3_record():
    m = k3()
    assert m.w.component(1).is_zero() and m.w.component(2).is_zero()
    assert m.p1.number == -48 == 3 * m.signature
    assert m.algebra.ranks == (1, 0, 22, 0, 1)
    assert m.torsion_free and not m.stably_parallelizable


def test_rp_p1_parity():
    # p_1(RPn) reduces to C(n+1,2) a^4
    assert real_projective(4).p1.is_known_zero  # C(5,2) = 10 even
    assert real_projective(5).p1.is_known_nonzero  # C(6,2) = 15 odd
    assert real_projective(7).p1.is_known_zero  # C(8,2) = 28 even
    assert real_projective(3).p1.is_known_zero  # H^4 = 0


def test_surface_families():
    torus = orientable_surface(1)
    assert torus.euler == 0 and torus.algebra.ranks == (1, 2, 1)
    klein = nonorientable_surface(2)
    assert klein.euler == 0 and not klein.orientable
    assert klein.w.component(2).is_zero()
    assert not nonorientable_surface(1).w.component(2).is_zero()  # chi(N1) odd


def test_atom_token_errors():
    with pytest.raises(ValueError, match="unknown atom"):
        atom("T2")
    with pytest.raises(ValueError, match="out of range"):
        atom("RP0")
    with pytest.raises(ValueError, match="out of range"):
        atom("N0")
    with pytest.raises(ValueError, match="out of range"):
        atom("CP0")
    assert atom("Sigma0").name == "Sigma0"


# ---------------------------------------------------------------------------
# combinations


def test_connected_sum_invariants():
    m = connected_sum(real_projective(4), real_projective(4))
    assert m.name == "RP4 # RP4"
    assert m.euler == 0 and not m.orientable and m.signature is None
    assert m.algebra.ranks == (1, 2, 2, 2, 1)


def test_connected_sum_signature_additivity():
    m = connected_sum(atom("CP2"), cp2_reversed())
    assert m.signature == 0 and m.euler == 4
    assert m.p1.number == 0
    n = connected_sum(atom("CP2"), atom("CP2"))
    assert n.signature == 2 and n.p1.number == 6


def test_connected_sum_dimension_mismatch():
    with pytest.raises(DimensionMismatch, match="cannot sum dimensions"):
        connected_sum(real_projective(4), sphere(3))


def test_connected_sum_rejects_disconnected():
    with pytest.raises(ValueError):
        connected_sum(sphere(0), sphere(0))


def test_connected_sum_odd_dimension_euler():
    m = connected_sum(sphere(3), real_projective(3))
    assert m.euler == 0  # chi additivity has no -2 correction in odd dims


def test_product_invariants():
    m = product(real_projective(2), sphere(2))
    assert m.name == "RP2 x S2"
    assert m.dim == 4 and m.euler == 2 and not m.orientable
    assert m.signature is None


def test_product_signature_rules():
    zero = product(sphere(2), sphere(2))
    assert zero.signature == 0  # neither factor is 4k-dimensional
    cp = product(atom("CP2"), atom("CP2"))
    assert cp.signature == 1  # multiplicativity on the 4k lattice
    assert product(sphere(4), sphere(4)).signature == 0


def test_product_name_parenthesizes_sums():
    m = product(connected_sum(atom("CP2"), atom("CP2")), sphere(2))
    assert m.name == "(CP2 # CP2) x S2"


def test_product_p1_from_parallelizable_factor():
    m = product(real_projective(5), sphere(3))
    assert m.p1.is_known_nonzero  # pulled back from RP5
    n = product(sphere(3), real_projective(7))
    assert n.p1.is_known_zero  # pulled back from RP7


def test_product_p1_w2_square_rule():
    m = product(real_projective(4), real_projective(4))
    assert m.p1.is_known_nonzero  # w_2^2 != 0 upstairs


def test_stable_parallelizability_propagates():
    assert product(sphere(1), sphere(3)).stably_parallelizable
    assert connected_sum(sphere(4), sphere(4)).stably_parallelizable
    assert not product(sphere(1), real_projective(3)).stably_parallelizable


def test_torsion_free_flag_on_combinations():
    assert product(sphere(2), sphere(2)).torsion_free
    # non-orientable 4-manifolds always have 2-torsion at the top
    assert not product(real_projective(2), sphere(2)).torsion_free
    assert not connected_sum(real_projective(4), real_projective(4)).torsion_free


# ---------------------------------------------------------------------------
# validation


def test_validate_manifold_passes_on_catalog():
    for token in ("S3", "RP4", "CP2", "K3", "N2"):
        validate_manifold(atom(token))  # no exception


def test_validate_rejects_forged_euler():
    m = real_projective(4)
    forged = type(m)(
        name=m.name,
        dim=m.dim,
        orientable=m.orientable,
        euler=3,
        signature=m.signature,
        algebra=m.algebra,
        w=m.w,
        p1=m.p1,
        w3_twisted=m.w3_twisted,
    )
    with pytest.raises(InvariantViolation, match="euler-rank"):
        validate_manifold(forged)


def test_validate_rejects_orientability_lie():
    m = real_projective(4)
    forged = type(m)(
        name=m.name,
        dim=m.dim,
        orientable=True,
        euler=m.euler,
        signature=m.signature,
        algebra=m.algebra,
        w=m.w,
        p1=m.p1,
        w3_twisted=m.w3_twisted,
    )
    with pytest.raises(InvariantViolation, match="orientability"):
        validate_manifold(forged)


def test_validate_rejects_bad_signature_parity():
    m = k3()
    forged = type(m)(
        name=m.name,
        dim=m.dim,
        orientable=m.orientable,
        euler=m.euler,
        signature=-15,
        algebra=m.algebra,
        w=m.w,
        p1=m.p1,
        w3_twisted=m.w3_twisted,
    )
    with pytest.raises(InvariantViolation, match="signature"):
        validate_manifold(forged)


def test_validate_rejects_p1_signature_mismatch():
    m = k3()
    forged = type(m)(
        name=m.name,
        dim=m.dim,
        orientable=m.orientable,
        euler=m.euler,
        signature=m.signature,
        algebra=m.algebra,
        w=m.w,
        p1=P1Data.integer(0),
        w3_twisted=m.w3_twisted,
    )
    with pytest.raises(InvariantViolation, match="p1-signature"):
        validate_manifold(forged)


def test_validate_rejects_sp_with_nonzero_w():
    m = real_projective(3)  # parallelizable, but force orientable sp check
    forged = type(m)(
        name="RP5-forged",
        dim=5,
        orientable=True,
        euler=0,
        signature=None,
        algebra=real_projective(5).algebra,
        w=real_projective(5).w,
        p1=real_projective(5).p1,
        w3_twisted=real_projective(5).w3_twisted,
        stably_parallelizable=True,
    )
    with pytest.raises(InvariantViolation, match="stable-parallelizability"):
        validate_manifold(forged)


# ---------------------------------------------------------------------------
# documents


def rp2_document() -> dict:
    return {
        "name": "RP2",
        "dim": 2,
        "orientable": False,
        "euler": 1,
        "basis": [["1"], ["a"], ["a^2"]],
        "mult": [[1, 0, 1, 0, [1]]],
        "sq": [[1, 1, 0, [1]]],
        "w": [[1], [1], [1]],
        "p1": "zero",
    }


def test_load_manifold_round_trip():
    doc = rp2_document()
    m = load_manifold(doc)
    ref = real_projective(2)
    assert m.name == ref.name and m.dim == ref.dim
    assert m.euler == ref.euler and m.orientable == ref.orientable
    assert m.algebra.ranks == ref.algebra.ranks
    for d in range(3):
        assert np.array_equal(m.w.component(d).coords, ref.w.component(d).coords)
    assert m.p1.is_known_zero and m.w3_twisted.is_zero


def test_load_manifold_infers_w_when_absent():
    doc = rp2_document()
    del doc["w"]
    m = load_manifold(doc)
    assert str(m.w) == "1 + a + a^2"


def test_load_manifold_mirror_fills_mult():
    doc = rp2_document()
    m = load_manifold(doc)
    blk = m.algebra.mult_block(1, 1)
    assert blk[0, 0, 0] == 1


def test_load_manifold_normalizes_redundant_zero_signature():
    doc = rp2_document()
    doc["signature"] = 0
    m = load_manifold(doc)
    assert m.signature is None


def test_load_manifold_completes_p1_from_signature():
    doc = {
        "name": "S4",
        "dim": 4,
        "orientable": True,
        "euler": 2,
        "signature": 0,
        "basis": [["1"], [], [], [], ["s"]],
        "p1": "unknown",
    }
    m = load_manifold(doc)
    assert m.p1.kind.name == "INTEGER" and m.p1.number == 0


def test_load_manifold_completes_p1_from_w2_square():
    doc = rp4_document()
    doc["p1"] = "unknown"
    m = load_manifold(doc)
    assert m.p1.is_known_zero  # w_2(RP4) = 0, so w_2^2 = 0


def test_load_manifold_rejects_p1_reduction_conflict():
    doc = rp4_document()
    doc["p1"] = "nonzero"
    with pytest.raises(InvariantViolation, match="p1-reduction"):
        load_manifold(doc)


def rp4_document() -> dict:
    mult = []
    for d1 in range(1, 4):
        for d2 in range(1, 5 - d1):
            mult.append([d1, 0, d2, 0, [1]])
    # Sq^k(a^d) = C(d,k) a^(d+k)
    sq = [[1, 1, 0, [1]], [1, 2, 0, [0]], [2, 2, 0, [1]], [1, 3, 0, [1]]]
    return {
        "name": "RP4",
        "dim": 4,
        "orientable": False,
        "euler": 1,
        "basis": [["1"], ["a"], ["a^2"], ["a^3"], ["a^4"]],
        "mult": mult,
        "sq": sq,
        "w": [[1], [1], [0], [0], [1]],
        "p1": "zero",
    }


def test_load_manifold_rp4_document():
    m = load_manifold(rp4_document())
    ref = real_projective(4)
    assert str(m.w) == str(ref.w) == "1 + a + a^4"
    assert m.w3_twisted.is_zero


@pytest.mark.parametrize(
    "mutate,error,match",
    [
        (lambda d: d.update(euler=2), InvariantViolation, "Euler parity"),
        (lambda d: d.update(orientable=True), InvariantViolation, "orientability"),
        (lambda d: d.update(dim="2"), SchemaError, "integer"),
        (lambda d: d.update(extra=1), SchemaError, "unknown document fields"),
        (lambda d: d.pop("p1"), SchemaError, "missing required field"),
        (lambda d: d.update(basis=[["1"], ["a"]]), SchemaError, "basis"),
        (lambda d: d.update(basis=[["1", "u"], ["a"], ["a^2"]]), SchemaError, "exactly one"),
        (lambda d: d.update(mult=[[1, 0, 1, 0, [1, 1]]]), SchemaError, "length 1"),
        (lambda d: d.update(mult=[[1, 0, 9, 0, [1]]]), SchemaError, "degree out of range"),
        (lambda d: d.update(mult=[[1, 5, 1, 0, [1]]]), SchemaError, "index out of range"),
        (lambda d: d.update(mult=[[1, 0, 2, 0, [1]]]), SchemaError, "exceeds dim"),
        (lambda d: d.update(sq=[[1, 1, 0, [2]]]), SchemaError, "0 or 1"),
        (lambda d: d.update(sq=[[2, 1, 0, [1]]]), SchemaError, "vanishes"),
        (lambda d: d.update(w=[[1], [1]]), SchemaError, "per degree"),
        (lambda d: d.update(p1="maybe"), SchemaError, "p1 must be"),
        (lambda d: d.update(p1={"int": 3, "note": ""}), SchemaError, "p1 must be"),
        (lambda d: d.update(w3_twisted="sometimes"), SchemaError, "w3_twisted"),
        (lambda d: d.update(w=[[1], [0], [1]]), InvariantViolation, "wu-consistency"),
    ],
)
def test_load_manifold_rejections(mutate, error, match):
    doc = rp2_document()
    mutate(doc)
    with pytest.raises(error, match=match):
        load_manifold(doc)


def test_load_manifold_rejects_conflicting_mult_entries():
    doc = rp2_document()
    doc["mult"] = [[1, 0, 1, 0, [1]], [1, 0, 1, 0, [0]]]
    with pytest.raises(SchemaError, match="conflicts"):
        load_manifold(doc)


def test_load_manifold_rejects_degenerate_pairing():
    doc = rp2_document()
    doc["mult"] = []
    doc["sq"] = []
    doc["w"] = None
    doc.pop("w")
    doc["euler"] = 1
    with pytest.raises(InvariantViolation, match="pairing"):
        load_manifold(doc)


def test_load_manifold_rejects_non_mapping():
    with pytest.raises(SchemaError, match="mapping"):
        load_manifold([1, 2, 3])
