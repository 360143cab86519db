import pytest

from ybx.core import diagonal_image, lambda_word
from ybx.fixtures import (ALL_FIXTURES, SOL_PROJ3, SOL_SWAP2, SOL_TRIV,
                          SOL_Z2, SOL_Z3INV)
from ybx.invariants import (Descriptor, check_fineq, component_of, descriptor,
                            diagonal_data, fineq_holds, partition, phi_maps,
                            q_image_in_idempotents, reconstruct, roundtrip,
                            semigroup, structure_discrepancies, torsion,
                            torsion_iso)
from ybx.perms import identity, inverse


def test_component_of_examples():
    assert component_of(SOL_SWAP2, 1, 0) == 1
    assert component_of(SOL_SWAP2, 2, 0) == 0
    for k in range(1, 5):
        for x in range(2):
            assert component_of(SOL_Z2, k, x) == 0
    with pytest.raises(ValueError):
        component_of(SOL_Z2, 0, 0)


def test_component_is_inverse_word_image():
    for s in ALL_FIXTURES.values():
        for k in range(1, 2 * s.d + 1):
            for x in range(s.n):
                u = component_of(s, k, x)
                assert inverse(lambda_word(s, x, k))[x] == u
                assert u in diagonal_image(s)


def test_diagonal_data():
    dd = diagonal_data(SOL_SWAP2)
    assert dd.image == (0, 1) and dd.d == 2
    assert dict(((k, x), u) for k, x, u in dd.components) == {
        (1, 0): 1, (1, 1): 0, (2, 0): 0, (2, 1): 1}


def test_partition_examples():
    assert partition(SOL_SWAP2) == {0: (0,), 1: (1,)}
    assert partition(SOL_Z2) == {0: (0, 1)}
    assert partition(SOL_TRIV) == {0: (0,)}
    assert partition(SOL_Z3INV) == {0: (0, 1, 2)}
    assert partition(SOL_PROJ3) == {0: (0,), 1: (1,), 2: (2,)}


def test_semigroup_examples():
    sg = semigroup(SOL_SWAP2)
    assert sg.op == ((0, 1), (0, 1))          # right-zero table
    assert sg.rees_base == 0
    assert sg.coords_dict() == {0: (0, 0), 1: (0, 1)}
    assert not sg.discrepancies

    sg = semigroup(SOL_Z2)
    assert sg.op == ((0, 1), (1, 0))          # addition mod 2
    assert sg.left_identities == (0,)

    sg = semigroup(SOL_Z3INV)
    assert sg.op == tuple(tuple((x + y) % 3 for y in range(3))
                          for x in range(3))  # addition mod 3


def test_semigroup_structure_everywhere():
    for s in ALL_FIXTURES.values():
        sg = semigroup(s)
        assert not sg.discrepancies
        image = diagonal_image(s)
        assert sg.left_identities == image
        assert sg.idempotents == image
        parts = sg.xu_dict()
        sizes = {len(v) for v in parts.values()}
        assert len(sizes) == 1
        assert s.n == len(image) * sizes.pop()


def test_torsion_examples():
    t = torsion(SOL_Z2, 0)
    assert t.elements == (0, 1)
    assert t.op == ((0, 1), (1, 0))
    assert dict(t.orders) == {0: 1, 1: 2}

    t = torsion(SOL_SWAP2, 0)
    assert t.elements == (0,)

    t = torsion(SOL_Z3INV, 0)
    assert t.op == tuple(tuple((x + y) % 3 for y in range(3)) for x in range(3))
    assert dict(t.orders) == {0: 1, 1: 3, 2: 3}
    assert all(SOL_Z3INV.d % k == 0 for _, k in t.orders)

    with pytest.raises(ValueError):
        torsion(SOL_Z2, 1)


def test_torsion_iso_examples():
    f, bad = torsion_iso(SOL_SWAP2, 0, 1)
    assert f == {0: 1} and not bad
    f, bad = torsion_iso(SOL_Z2, 0, 0)
    assert f == {0: 0, 1: 1} and not bad
    f, bad = torsion_iso(SOL_PROJ3, 0, 2)
    assert f == {0: 2} and not bad


def test_phi_maps_examples():
    phi, bad = phi_maps(SOL_Z3INV)
    assert not bad
    assert phi == ((0, 2, 1),) * 3            # negation for every point
    phi, bad = phi_maps(SOL_SWAP2)
    assert phi == ((1, 0), (1, 0))
    phi, bad = phi_maps(SOL_PROJ3)
    assert phi == (identity(3),) * 3


def test_descriptor_examples():
    dsc = descriptor(SOL_Z2)
    assert dsc.op == ((0, 1), (1, 0))
    assert dsc.q == (0, 0)
    assert dsc.phi == (identity(2),) * 2

    dsc = descriptor(SOL_SWAP2)
    assert dsc.op == ((0, 1), (0, 1))
    assert dsc.q == (1, 0)
    assert dsc.phi == ((1, 0), (1, 0))


def test_check_fineq_on_fixtures():
    for s in ALL_FIXTURES.values():
        rep = check_fineq(descriptor(s))
        assert rep.ok
        assert rep.counterexamples == ()
    rep = check_fineq(descriptor(SOL_Z2))
    assert rep.allphi is not None
    assert rep.allphi.automorphism and rep.allphi.phi_q_is_q2


def test_check_fineq_special_instance():
    # right-zero table on 4 points with a non-surjective idempotent fold
    op = tuple(tuple(y for y in range(4)) for _ in range(4))
    q = (0, 1, 0, 1)
    phi = (identity(4),) * 4
    dsc = Descriptor(4, op, q, phi)
    rep = check_fineq(dsc)
    assert rep.fineq1 and rep.fineq4
    assert rep.fineq2 and rep.fineq3          # computed, all hold here
    info = q_image_in_idempotents(dsc)
    assert info["contained"] and not info["onto"]
    m, ver = reconstruct(dsc)
    assert m.lam == (identity(4),) * 4
    assert ver.ybe1 and ver.ybe2 and ver.ybe3 and ver.left_nondegenerate
    assert not ver.idempotent                 # the identities do not force r2 = r
    name, points = ver.first_counterexample
    from ybx.core import identity_holds
    assert not identity_holds(m, name, points)


def test_fineq_counterexamples_reproduce():
    op = tuple(tuple(y for y in range(4)) for _ in range(4))
    dsc = Descriptor(4, op, (0, 1, 2, 0), ((1, 0, 2, 3),) * 4)
    rep = check_fineq(dsc)
    for name, points in rep.counterexamples:
        assert not fineq_holds(dsc, name, points)


def test_reconstruct_round_trips():
    for s in ALL_FIXTURES.values():
        m, rep = reconstruct(descriptor(s))
        assert rep.ok
        assert m.lam == s.lam and m.rho == s.rho
        assert roundtrip(s)


def test_no_structure_discrepancies_on_fixtures():
    for s in ALL_FIXTURES.values():
        assert structure_discrepancies(s) == ()
