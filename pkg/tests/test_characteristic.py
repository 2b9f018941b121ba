"""Wu classes, Stiefel-Whitney derivation, W_3, bundle data, z-status."""
from __future__ import annotations

import numpy as np
import pytest

from foldcheck.algebra import TotalClass, total_sq
from foldcheck.catalog import atom, k3, product, real_projective, sphere
from foldcheck.characteristic import (
    BundleDescriptor,
    StructureFlags,
    dual_classes,
    structure_flags,
    tangent_descriptor,
    trivial_descriptor,
    virtual_difference,
    w3_shadow,
    w3_twisted_status,
    wu_classes,
    wu_total,
    z_status,
)
from foldcheck.errors import InvariantViolation
from foldcheck.tristate import P1Data, TriState


def test_wu_rp4_frozen_oracle():
    # v(RP4) = 1 + a + a^2 and w = Sq(v) = 1 + a + a^4
    m = real_projective(4)
    v = wu_total(m.algebra)
    assert str(v) == "1 + a + a^2"
    assert str(total_sq(v)) == "1 + a + a^4"


def test_wu_vanishes_above_middle_degree():
    m = real_projective(6)
    v = wu_total(m.algebra)
    for d in range(4, 7):
        assert v.component(d).is_zero()


def test_wu_k3_is_trivial():
    m = k3()
    v = wu_total(m.algebra)
    assert str(v) == "1"  # even intersection form: v_2 = 0
    assert m.w.component(2).is_zero()


def test_stored_w_matches_wu_derivation_on_record():
    from foldcheck.characteristic import stiefel_whitney_from_wu

    m = real_projective(5)
    w = stiefel_whitney_from_wu(m)
    assert w == m.w


def test_wu_accepts_bare_algebra():
    m = sphere(3)
    assert str(wu_classes(m.algebra)) == "1"


def test_dual_classes_inverts():
    m = real_projective(4)
    wbar = dual_classes(m)
    assert str(wbar) == "1 + a + a^2 + a^3"
    assert str(m.w * wbar) == "1"
    # also accepts a raw total class
    assert dual_classes(m.w) == wbar


def test_structure_flags_table():
    assert structure_flags(sphere(4)) == StructureFlags(orientable=True, spin=True, pin=True)
    rp4 = real_projective(4)
    flags = structure_flags(rp4)
    assert not flags.orientable and flags.pin and not flags.spin
    rp2 = real_projective(2)
    flags2 = structure_flags(rp2)
    assert not flags2.orientable and not flags2.pin and not flags2.spin
    cp2 = atom("CP2")
    flags3 = structure_flags(cp2)
    assert flags3.orientable and not flags3.spin and not flags3.pin


# ---------------------------------------------------------------------------
# W_3


def test_w3_shadow_zero_when_spin():
    assert w3_shadow(sphere(4).w).is_zero()


def test_w3_shadow_nonzero_on_rp2_squared():
    m = product(real_projective(2), real_projective(2))
    assert not w3_shadow(m.w).is_zero()
    assert m.w3_twisted.is_nonzero


def test_w3_status_low_dimensions():
    status = w3_twisted_status(real_projective(2).w)
    assert status.is_zero and status.note == "H^3 = 0"


def test_w3_status_rejects_contradictions():
    m = product(real_projective(2), real_projective(2))
    with pytest.raises(InvariantViolation, match="w3-twisted"):
        w3_twisted_status(m.w, TriState.zero("bogus"))
    spin = sphere(4)
    with pytest.raises(InvariantViolation, match="w3-twisted"):
        w3_twisted_status(spin.w, TriState.nonzero("bogus"))
    low = real_projective(2)
    with pytest.raises(InvariantViolation, match="H\\^3"):
        w3_twisted_status(low.w, TriState.nonzero("bogus"))


def test_w3_status_passthrough_when_undecided():
    # RP4: w_2 = 0 forces W_3 = 0 regardless of any recorded value
    rp4 = real_projective(4)
    assert w3_twisted_status(rp4.w).is_zero
    # CP2: w_2 = h != 0 with vanishing shadow; a recorded status is trusted
    cp2 = atom("CP2")
    assert w3_twisted_status(cp2.w).is_unknown
    recorded = TriState.zero("H^3 = 0")
    assert w3_twisted_status(cp2.w, recorded) == recorded


# ---------------------------------------------------------------------------
# bundle descriptors and virtual differences


def test_trivial_descriptor_shape():
    m = sphere(4)
    xi = trivial_descriptor(m.algebra, 4)
    assert xi.rank == 4 and xi.orientable
    assert str(xi.w_total) == "1"
    assert xi.p1.is_known_zero


def test_descriptor_rejects_inconsistent_orientability():
    m = real_projective(4)
    with pytest.raises(InvariantViolation, match="w_1"):
        BundleDescriptor(rank=4, w_total=m.w, p1=P1Data.unknown(), orientable=True)


def test_descriptor_rejects_negative_rank_and_bad_unit():
    m = sphere(2)
    with pytest.raises(InvariantViolation, match="rank"):
        BundleDescriptor(rank=-1, w_total=m.w, p1=P1Data.unknown(), orientable=True)
    broken = TotalClass.from_components(m.algebra, [[0], [], [0]])
    with pytest.raises(InvariantViolation, match="unit"):
        BundleDescriptor(rank=2, w_total=broken, p1=P1Data.unknown(), orientable=True)


def test_virtual_difference_of_tangent_with_itself():
    m = atom("CP2")
    w_diff, p1_diff = virtual_difference(m, tangent_descriptor(m))
    assert str(w_diff) == "1"
    assert p1_diff.kind.name == "INTEGER" and p1_diff.number == 0


def test_virtual_difference_against_trivial():
    m = real_projective(4)
    w_diff, p1_diff = virtual_difference(m, trivial_descriptor(m.algebra, 4))
    assert w_diff == m.w
    assert p1_diff.is_known_zero == m.p1.is_known_zero


def test_virtual_difference_rejects_foreign_algebra():
    m = real_projective(4)
    other = sphere(4)
    with pytest.raises(ValueError, match="cohomology"):
        virtual_difference(m, trivial_descriptor(other.algebra, 4))


# ---------------------------------------------------------------------------
# z-status


def test_z_status_requires_pin():
    m = atom("CP2")  # w_2 = h != 0
    with pytest.raises(InvariantViolation, match="pin structure required"):
        z_status(4, True, m.w, m.p1)


def test_z_status_dim4_oriented_reads_p1():
    m = k3()
    w_diff, p1_diff = virtual_difference(m, trivial_descriptor(m.algebra, 4))
    status = z_status(4, True, w_diff, p1_diff)
    assert status.is_nonzero and "p_1" in status.note
    s = sphere(4)
    assert z_status(4, True, s.w, s.p1).is_zero


def test_z_status_dim4_nonorientable_reads_w4():
    m = real_projective(4)
    assert z_status(4, False, m.w, m.p1).is_nonzero
    flat = product(atom("N2"), atom("Sigma1"))
    assert z_status(4, False, flat.w, flat.p1).is_zero


def test_z_status_mid_dimensions():
    m5 = product(real_projective(4), sphere(1))
    status = z_status(5, False, m5.w, m5.p1)
    assert status.is_nonzero and status.note == "z = w_4 mod 2 and w_4 != 0"

    cp3 = atom("CP3")
    w_diff, p1_diff = virtual_difference(cp3, trivial_descriptor(cp3.algebra, 6))
    status = z_status(6, True, w_diff, p1_diff, torsion_free=cp3.torsion_free)
    assert status.is_nonzero and status.note == "2z = p_1 != 0"

    s6 = product(sphere(3), sphere(3))
    status = z_status(6, True, s6.w, s6.p1, torsion_free=s6.torsion_free)
    assert status.is_zero

    # w_4 = 0 and p_1 = 0 but possible torsion: undetermined
    status = z_status(6, True, s6.w, s6.p1, torsion_free=False)
    assert status.is_unknown


def test_z_status_low_and_high_dimensions():
    s3 = sphere(3)
    assert z_status(3, True, s3.w, s3.p1).is_zero
    s8 = product(sphere(4), sphere(4))
    assert z_status(8, True, s8.w, s8.p1).is_unknown
