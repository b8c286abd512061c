import pytest

from coxlow import (
    BATTERY,
    BipGraph,
    IDENTITY,
    INF,
    build_gbip,
    build_root_system,
    check_acyclic,
    check_simplex_edge_condition,
    construct_low_from_lambda,
    dihedral_matrix,
    elements_up_to_length,
    inversion_set,
    is_low,
    left_descents,
    normalize,
    small_inversion_mask,
    small_roots,
    source_generators,
    sources,
    verify_bijection,
    verify_inversion_polytopes,
)
from coxlow.errors import CyclicGraph, RankNotThree

RANK3_SAMPLE = ("A3", "affine-3-3-3", "hyperbolic-3-3-4", "universal-override")


def test_battery_is_fixed():
    assert len(BATTERY) == 16
    names = [name for name, _, _ in BATTERY]
    assert names[0] == "2-2-2" and "hyperbolic-2-3-7" in names


# -- synthetic graphs ---------------------------------------------------

def test_check_acyclic_synthetic():
    empty = BipGraph([], [], [])
    assert check_acyclic(empty) == (True, None)
    two_cycle = BipGraph(["a"], ["x"],
                         [(("g", "a"), ("r", "x")), (("r", "x"), ("g", "a"))])
    ok, witness = check_acyclic(two_cycle)
    assert not ok
    assert set(witness) == {("g", "a"), ("r", "x")}


def test_sources_synthetic():
    assert sources(BipGraph([], [], [])) == ()
    chain = BipGraph(["a", "c"], ["b"],
                     [(("g", "a"), ("r", "b")), (("r", "b"), ("g", "c"))])
    assert sources(chain) == (("g", "a"),)
    assert source_generators(chain) == ("a",)
    cyclic = BipGraph(["a"], ["x"],
                      [(("g", "a"), ("r", "x")), (("r", "x"), ("g", "a"))])
    with pytest.raises(CyclicGraph):
        sources(cyclic)


def test_bipgraph_rejects_same_class_edges():
    with pytest.raises(ValueError):
        BipGraph(["a", "b"], [], [(("g", "a"), ("g", "b"))])


# -- the graph on real elements -----------------------------------------

def test_gbip_identity(battery):
    rs, _, _ = battery.get("hyperbolic-3-3-4")
    graph = build_gbip(rs, IDENTITY)
    assert graph.vertices == ()


def test_gbip_requires_rank3():
    rs = build_root_system(dihedral_matrix(3))
    with pytest.raises(RankNotThree):
        build_gbip(rs, IDENTITY)


def test_gbip_acyclic_and_sources_are_descents(battery):
    # acceptance pushes to length 12 on (3,3,4); here a broad short sweep
    for name in RANK3_SAMPLE:
        rs, _, _ = battery.get(name)
        for elem, _, _ in elements_up_to_length(rs, 6):
            graph = build_gbip(rs, elem)
            ok, witness = check_acyclic(graph)
            assert ok, (name, elem, witness)
            srcs = set(source_generators(graph))
            assert srcs <= left_descents(rs, elem), (name, elem)


def test_gbip_sources_are_exactly_descents_on_lows(battery):
    rs, sigma, _ = battery.get("hyperbolic-3-3-4")
    for elem, _, _ in elements_up_to_length(rs, 6):
        if is_low(rs, sigma, elem) and elem.length:
            assert set(source_generators(build_gbip(rs, elem))) \
                == left_descents(rs, elem)


def test_peeling_a_source_keeps_lowness(battery):
    rs, sigma, _ = battery.get("affine-4-4-2")
    for elem, _, _ in elements_up_to_length(rs, 7):
        if not elem.length or not is_low(rs, sigma, elem):
            continue
        for s in source_generators(build_gbip(rs, elem)):
            peeled = normalize(rs, (s,) + elem.word)
            assert peeled.length == elem.length - 1
            assert is_low(rs, sigma, peeled), (elem, s)


# -- the bijection ------------------------------------------------------

def test_bijection_infinite_dihedral():
    rs = build_root_system(dihedral_matrix(INF))
    sigma = small_roots(rs)
    from coxlow import build_automaton
    aut = build_automaton(rs, sigma)
    rep = verify_bijection(rs, sigma, aut, 6)
    assert rep.n_lambda == 3 and rep.n_low == 3
    assert rep.bijective


def test_bijection_m3_dihedral():
    rs = build_root_system(dihedral_matrix(3))
    sigma = small_roots(rs)
    from coxlow import build_automaton
    aut = build_automaton(rs, sigma)
    rep = verify_bijection(rs, sigma, aut, 5)
    assert rep.n_lambda == 6 and rep.n_low == 6 and rep.bijective


def test_bijection_universal(battery):
    rs, sigma, aut = battery.get("universal")
    rep = verify_bijection(rs, sigma, aut, 4)
    assert rep.n_lambda == 4 and rep.n_low == 4 and rep.bijective


def test_bijection_reports_unresolved_not_false(battery):
    # truncated search: missing lambdas are unresolved, never a disproof
    rs, sigma, aut = battery.get("H3")
    rep = verify_bijection(rs, sigma, aut, 3)
    assert not rep.surjective
    assert rep.unresolved_masks
    assert rep.injective  # the found ones still map injectively


# -- constructive builder -----------------------------------------------

def test_construct_identity(battery):
    rs, sigma, _ = battery.get("A3")
    assert construct_low_from_lambda(rs, sigma, 0) == IDENTITY


def test_construct_rank2():
    rs = build_root_system(dihedral_matrix(INF))
    sigma = small_roots(rs)
    lam = 1 << sigma.simple_index[0]
    got = construct_low_from_lambda(rs, sigma, lam)
    assert got.word == (0,)


def test_construct_all_lambdas(battery):
    for name in RANK3_SAMPLE:
        rs, sigma, aut = battery.get(name)
        memo = {}
        for mask in aut.states:
            x = construct_low_from_lambda(rs, sigma, mask, _memo=memo)
            assert is_low(rs, sigma, x)
            assert small_inversion_mask(rs, sigma, x) == mask


# -- polytopes ----------------------------------------------------------

def test_simplex_edge_condition(battery):
    rs, sigma, _ = battery.get("universal")
    assert check_simplex_edge_condition(rs, sigma)
    rs2, sigma2, _ = battery.get("2-inf-inf")
    assert check_simplex_edge_condition(rs2, sigma2)
    rs3, sigma3, _ = battery.get("B3")
    assert not check_simplex_edge_condition(rs3, sigma3)


def test_polytopes_universal(battery):
    rs, sigma, aut = battery.get("universal")
    rep = verify_inversion_polytopes(rs, sigma, aut, 4)
    assert rep.hypothesis_met and rep.matched_all
    assert len(rep.witnesses) == 4


def test_polytopes_edge_groups(battery):
    for name, bound in (("hyperbolic-3-3-4", 12), ("inf-3-3", 8)):
        rs, sigma, aut = battery.get(name)
        assert check_simplex_edge_condition(rs, sigma)
        rep = verify_inversion_polytopes(rs, sigma, aut, bound)
        assert rep.hypothesis_met and rep.matched_all, name


def test_polytope_symmetry_3_3_3(battery):
    # the (3,3,3) form is generator-symmetric: lambda counts per hull shape
    # must be invariant under cyclically relabeling the generators
    rs, sigma, aut = battery.get("affine-3-3-3")
    from coxlow import projective_hull
    sizes = {}
    for mask in aut.states:
        hull = projective_hull(rs, sigma.mask_to_roots(mask))
        sizes[len(hull)] = sizes.get(len(hull), 0) + 1
    # relabeled system is the same matrix, so the multiset must reproduce
    sizes2 = {}
    for mask in aut.states:
        roots = sigma.mask_to_roots(mask)
        rolled = [rs.make_root(r.coords[1:] + r.coords[:1], r.depth)
                  for r in roots]
        hull = projective_hull(rs, rolled)
        sizes2[len(hull)] = sizes2.get(len(hull), 0) + 1
    assert sizes == sizes2
