import pytest

from rectrep import (CatalogueItem, NotFaithfulError, NotRectangularError,
                     SemisimpleAlgebra, canonical_form, catalogue_closure,
                     catalogue_lengths, catalogue_spec, character_of,
                     decompose, detect_rectangular, enumerate_rectangular,
                     from_character, is_faithful, item_dimension, item_rank,
                     iter_catalogue_items, lengths, long_roots_3space_census,
                     multiplicity_free_irreps, roots_in_plane_census,
                     verify_classification, verify_howe, weyl_dimension)
from rectrep.charcalc import RepSpec
from rectrep.liealg import SimpleType

from oracles import prune_free_rectangular


def spec_of(label, summands):
    alg = SemisimpleAlgebra.parse(label)
    return RepSpec.make(alg, [(c, m) for c, m in summands])


def test_item_validation():
    with pytest.raises(ValueError, match="unknown"):
        CatalogueItem("Nope")
    with pytest.raises(ValueError):
        CatalogueItem("A1Sym", (0,))
    with pytest.raises(ValueError):
        CatalogueItem("A1PairSym", (3, 1))
    with pytest.raises(ValueError):
        CatalogueItem("BmSpin", (1,))
    with pytest.raises(ValueError):
        CatalogueItem("DmSpin", (4,))
    with pytest.raises(ValueError, match="no parameters"):
        CatalogueItem("D2Spin", (1,))


def test_a1_pair_canonical_order():
    assert CatalogueItem("A1PairSym", (1, 2)).params == (2, 1)
    assert CatalogueItem("A1PairSym", (1, 0)).params == (1, 0)


def test_item_tables_consistent():
    # closed-form dimension and rank tables agree with the actual spec
    for item in iter_catalogue_items(6, 128):
        alg, spec = catalogue_spec(item)
        assert item_rank(item) == alg.rank
        dim = sum(weyl_dimension(alg, c) * m for c, m in spec.summands)
        assert dim == item_dimension(item)
        assert len(catalogue_lengths(item)) == alg.rank
        assert is_faithful(spec)


def test_iter_catalogue_bounds():
    items = list(iter_catalogue_items(6, 128))
    assert all(item_rank(i) <= 6 and item_dimension(i) <= 128 for i in items)
    assert len(items) == len(set(items))
    kinds = {i.kind for i in items}
    assert kinds == {"A1Sym", "A1PairSym", "D2Spin", "B2StdSpin", "BmSpin",
                     "A3StdDual", "D4Spin", "D4StdSpinPlus", "D4StdSpinMinus",
                     "DmSpin"}
    # spot items
    assert CatalogueItem("BmSpin", (6,)) in items      # dim 64
    assert CatalogueItem("DmSpin", (6,)) in items      # dim 64
    assert CatalogueItem("BmSpin", (7,)) not in items  # rank 7


def test_decompose_catalogue_items_are_indecomposable():
    for item in iter_catalogue_items(4, 64):
        alg, spec = catalogue_spec(item)
        dec = decompose(spec)
        assert len(dec.parts) == 1
        positions, got = dec.parts[0]
        assert got == item
        assert positions == tuple(range(len(alg.factors)))


def test_decompose_tensor_of_two_items():
    # Spin(D2) on the outer A1 pair times (Std + Spin)(B2) in the middle:
    # Spin(D2) = (std x triv) + (triv x std), so the product has 4 summands
    alg = SemisimpleAlgebra.parse("A1*B2*A1")
    spec = RepSpec.make(alg, [((1, 1, 0, 0), 1), ((1, 0, 1, 0), 1),
                              ((0, 1, 0, 1), 1), ((0, 0, 1, 1), 1)])
    dec = decompose(spec)
    by_item = {item.kind: positions for positions, item in dec.parts}
    assert by_item == {"D2Spin": (0, 2), "B2StdSpin": (1,)}


def test_decompose_pairs_up_a1_quadruple():
    # Spin(D2) x Spin(D2): the cross-support test must pair {0,1} and
    # {2,3}, never {0,2}, because (1,0,1,0) appears in the support
    alg = SemisimpleAlgebra.parse("A1*A1*A1*A1")
    spec = RepSpec.make(alg, [((1, 0, 1, 0), 1), ((1, 0, 0, 1), 1),
                              ((0, 1, 1, 0), 1), ((0, 1, 0, 1), 1)])
    dec = decompose(spec)
    assert sorted((pos, item.kind) for pos, item in dec.parts) == [
        ((0, 1), "D2Spin"), ((2, 3), "D2Spin")]


def test_decompose_full_tensor_of_stds_is_all_singletons():
    # std x std x std x std is the tensor of four 1-factor chains, so no
    # D2 pair forms: restriction to any factor pair has the full square
    # support, not the diamond
    alg = SemisimpleAlgebra.parse("A1*A1*A1*A1")
    spec = RepSpec.make(alg, [((1, 1, 1, 1), 1)])
    dec = decompose(spec)
    assert [(pos, item.label) for pos, item in dec.parts] == [
        ((0,), "A1Sym(1)"), ((1,), "A1Sym(1)"),
        ((2,), "A1Sym(1)"), ((3,), "A1Sym(1)")]


def test_decompose_mixed_sym_factors():
    # sym3 x sym2 tensor: two 1-factor parts
    alg = SemisimpleAlgebra.parse("A1*A1")
    spec = RepSpec.make(alg, [((3, 2), 1)])
    dec = decompose(spec)
    items = sorted((positions, item.label) for positions, item in dec.parts)
    assert items == [((0,), "A1Sym(3)"), ((1,), "A1Sym(2)")]


def test_decompose_rejections():
    with pytest.raises(NotFaithfulError):
        decompose(spec_of("A1", [((0,), 1)]))
    with pytest.raises(NotFaithfulError):
        decompose(spec_of("A1*A1", [((1, 0), 1)]))
    with pytest.raises(NotRectangularError) as e:
        decompose(spec_of("A1", [((2,), 2)]))
    assert e.value.reason == "multiplicity"
    with pytest.raises(NotRectangularError) as e:
        decompose(spec_of("A2", [((1, 0), 1)]))
    assert e.value.reason == "asymmetry"
    with pytest.raises(NotRectangularError) as e:
        decompose(spec_of("B2", [((1, 0), 1)]))
    assert e.value.reason == "box mismatch"


def test_decompose_reassembly_matches_lengths():
    for item in iter_catalogue_items(4, 32):
        alg, spec = catalogue_spec(item)
        cert = detect_rectangular(from_character(character_of(spec)))
        assert cert is not None
        assert lengths(cert) == tuple(sorted(catalogue_lengths(item)))


def test_canonical_form_is_order_invariant():
    a = SemisimpleAlgebra.parse("A1*B2")
    sa = RepSpec.make(a, [((1, 0, 1), 1), ((1, 1, 0), 1)])
    b = SemisimpleAlgebra.parse("B2*A1")
    sb = RepSpec.make(b, [((0, 1, 1), 1), ((1, 0, 1), 1)])
    assert canonical_form(a, sa) == canonical_form(b, sb)


def test_canonical_form_identifies_equal_a1_pairs():
    a = SemisimpleAlgebra.parse("A1*A1")
    s1 = RepSpec.make(a, [((3, 1), 1)])
    s2 = RepSpec.make(a, [((1, 3), 1)])
    assert canonical_form(a, s1) == canonical_form(a, s2)


def test_multiplicity_free_irreps_small():
    a1 = multiplicity_free_irreps(SimpleType.parse("A1"), 4)
    assert a1 == ((0,), (1,), (2,), (3,))
    b2 = multiplicity_free_irreps(SimpleType.parse("B2"), 10)
    assert (1, 0) in b2 and (0, 1) in b2 and (1, 1) not in b2


def test_enumerate_bounds_are_enforced():
    with pytest.raises(ValueError):
        enumerate_rectangular(5, 64)
    with pytest.raises(ValueError):
        enumerate_rectangular(2, 512)
    with pytest.raises(ValueError):
        enumerate_rectangular(0, 64)


@pytest.mark.parametrize("label,max_dim", [("A1*A1", 18), ("A1*A1*A1", 12),
                                           ("A1*B2", 40)])
def test_enumerate_matches_prune_free_oracle(label, max_dim):
    # the production search prunes aggressively; the oracle does not
    alg = SemisimpleAlgebra.parse(label)
    raw = prune_free_rectangular(alg, max_dim)
    got = set(enumerate_rectangular(alg.rank, max_dim, algebras=[alg]))
    assert got == raw


def test_closure_contains_singletons_and_tensors():
    pairs = catalogue_closure(2, 64)
    keys = {(a.label, s) for a, s in pairs}
    b2 = catalogue_spec(CatalogueItem("B2StdSpin"))
    assert (b2[0].label, b2[1]) in keys
    d2 = catalogue_spec(CatalogueItem("D2Spin"))
    assert (d2[0].label, d2[1]) in keys
    # tensor of two A1 chains lands on a product algebra
    assert any(a == "A1*A1" for a, _ in keys)


def test_verify_classification_small():
    rep = verify_classification(2, 32)
    assert rep["ok"]
    assert rep["missing_from_catalogue"] == []
    assert rep["unexpected_in_catalogue"] == []
    assert rep["roundtrip_failures"] == []
    assert rep["corollary_violations"] == []
    assert rep["unimodular_failures"] == []
    assert rep["unimodular_spot_checks"] > 0


def test_verify_classification_detects_missing_item():
    # drop one catalogue family: the report must flag the gap, not hide it
    items = [i for i in iter_catalogue_items(2, 64) if i.kind != "B2StdSpin"]
    rep = verify_classification(2, 64, items=items)
    assert not rep["ok"]
    assert rep["missing_from_catalogue"]


def test_verify_howe_small():
    rep = verify_howe(SimpleType.parse("B2"), 64)
    assert rep["ok"]
    flagged = {tuple(c) for c in rep["flagged"]}
    assert flagged == {(0, 0), (1, 0), (0, 1)}
    rep = verify_howe(SimpleType.parse("C3"), 128)
    assert rep["ok"]
    assert (0, 0, 1) in {tuple(c) for c in rep["flagged"]}  # the 14-dim one


def test_verify_howe_rejects_bad_bounds():
    with pytest.raises(ValueError):
        verify_howe(SimpleType.parse("B2"), 1024)


def test_root_censuses_clean():
    for n in (2, 3, 4):
        rep = roots_in_plane_census(n)
        assert rep["ok"] and rep["violations"] == []
        assert rep["rich_planes"] == n * (n - 1) // 2
    for n in (3, 4):
        rep = long_roots_3space_census(n)
        assert rep["ok"] and rep["violations"] == []
    assert long_roots_3space_census(4)["rich_spaces"] == 12
