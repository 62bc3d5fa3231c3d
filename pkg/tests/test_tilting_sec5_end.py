from tiltbench import corpus
from tiltbench.presentation import presentations_match
from tiltbench.tilting import TiltingContext, construct_tpq


def test_end_algebra_of_constructed_sec5_matches_reference():
    a = corpus.sec5_algebra()
    built = construct_tpq(a, ["1"], ["3", "4"], 1, 1)
    ctx = TiltingContext(a, built.complex, proved_by_construction=True)
    end = ctx.end_data()
    pres = end.presentation
    assert pres.algebra.dim == 15
    assert len(pres.quiver.vertices) == 4
    assert len(pres.quiver.arrows) == 5
    ref_q = corpus.sec5_b_quiver()
    match = presentations_match(pres.quiver, pres.relations, ref_q, corpus.sec5_b_relations(ref_q))
    assert match is not None
    ref = corpus.sec5_b_algebra()
    perm = [ref.quiver.vertex_index[match["vertices"][v]] for v in pres.quiver.vertices]
    cm_new, cm_ref = pres.algebra.cartan_matrix(), ref.cartan_matrix()
    for i in range(4):
        for j in range(4):
            assert cm_new.data[i][j] == cm_ref.data[perm[i]][perm[j]]


def test_sec5_simple_images_witness_for_p2():
    a = corpus.sec5_algebra()
    built = construct_tpq(a, ["1"], ["3", "4"], 1, 1)
    ctx = TiltingContext(a, built.complex, proved_by_construction=True)
    rep = ctx.check_simple_images()
    # vertex 2 is the only projective outside the stable part
    assert sorted(rep["per_projective"]) == ["2"]
    assert rep["per_projective"]["2"]["concentrated"] is True
    assert rep["per_projective"]["2"]["simple"] is True
    assert rep["verdict"] is True


def test_construct_tpq_other_parameters_still_tilting():
    a = corpus.sec5_algebra()
    for r, s in ((2, 1), (1, 2), (2, 2)):
        built = construct_tpq(a, ["1"], ["3", "4"], r, s)
        ctx = TiltingContext(a, built.complex, proved_by_construction=True)
        rep = ctx.tilting_report()
        assert rep.self_orthogonal_ok
        assert rep.basic
        assert rep.summand_count == 4
        assert ctx.check_iterated_nu_stable()["verdict"] is True
