import pytest
from hypothesis import given, settings, strategies as st

from chorbifold import grouptheory as gt
from chorbifold.grouptheory import GroupPresentation, Word, parse_word

letters = st.lists(st.tuples(st.integers(0, 2), st.sampled_from([1, -1])), max_size=20)


def pres(text, name=""):
    return gt.parse_presentation(text, name)


S3 = "gens: a b\nrel: a^3\nrel: b^2\nrel: (a b)^2\n"


# --- words -----------------------------------------------------------------------

@given(letters)
def test_free_reduction_idempotent_and_shorter(ls):
    w = Word(ls)
    r = w.reduce()
    assert r.reduce() == r
    assert len(r) <= len(Word(ls))
    assert all(not (a[0] == b[0] and a[1] == -b[1]) for a, b in zip(r.letters, r.letters[1:]))


@given(letters, st.integers(0, 19))
def test_cyclic_reduction_of_rotations(ls, k):
    w = Word(ls).cyclic_reduce()
    if len(w):
        rot = w.rotations()[k % len(w)]
        assert gt.same_relator(rot.cyclic_reduce(), w)
        assert gt.same_relator(w.inverse(), w)


@given(letters)
def test_inverse(ls):
    w = Word(ls)
    assert len(Word(w.letters + w.inverse().letters).reduce()) == 0


def test_parse_word():
    names = ["a", "b", "ab"]
    assert parse_word("ab^-1", names).letters == ((2, -1),)
    assert parse_word("(a b)^2", names).letters == ((0, 1), (1, 1), (0, 1), (1, 1))
    assert parse_word("a^(-2)", names).letters == ((0, -1), (0, -1))
    assert parse_word("aba", names).letters == ((2, 1), (0, 1))
    assert parse_word("1", names).letters == ()
    with pytest.raises(ValueError):
        parse_word("c", names)


def test_presentation_file_roundtrip(tmp_path):
    p = pres(S3, "S3")
    f = tmp_path / "s3.txt"
    f.write_text(p.format())
    q = gt.load_presentation(str(f))
    assert q.gens == p.gens and all(gt.same_relator(a, b) for a, b in zip(p.relators, q.relators))
    with pytest.raises(ValueError):
        pres("rel: a\n")


# --- abelianization and Tietze ------------------------------------------------------

def test_smith_normal_form():
    assert gt.smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    assert gt.smith_normal_form([[0, 0], [0, 0]]) == []


@pytest.mark.parametrize("text, torsion, rank", [
    (S3, (2,), 0),
    ("gens: a b\n", (), 2),
    ("gens: a b\nrel: a b a^-1 b^-1\n", (), 2),
    ("gens: a b\nrel: a^2\nrel: b^3\n", (6,), 0),          # Z/2 x Z/3 = Z/6
    ("gens: a b\nrel: a^2\nrel: b^4\n", (2, 4), 0),
    ("gens: x y\nrel: x y x y^-1 x^-1 y^-1\n", (), 1),   # trefoil
])
def test_abelianization(text, torsion, rank):
    ab = gt.abelianization(pres(text))
    assert ab.free_rank == rank
    assert ab.torsion == torsion


def test_abelian_invariants_text():
    assert str(gt.abelianization(gt.orbifold_edge_presentation())) == "(Z/3)^6"
    assert str(gt.abelianization(pres("gens: a b\n"))) == "Z^2"


def test_tietze_elimination():
    p = pres("gens: a b c\nrel: c a^-1 b^-1\nrel: a^2\nrel: c^3\n")
    q = gt.tietze_eliminate(p, "c")
    assert q.gens == ["a", "b"]
    assert gt.abelianization(q) == gt.abelianization(p)
    with pytest.raises(gt.NotEliminable):
        gt.tietze_eliminate(pres(S3), "b")


def test_elimination_chain_preserves_abelianization():
    steps = gt.eliminate_chain(check=True)
    assert len(steps) == 7
    assert [len(s.gens) for s in steps] == list(range(13, 6, -1))
    ab = gt.abelianization(steps[0])
    assert all(gt.abelianization(s) == ab for s in steps)
    dir7 = gt.dirichlet_presentation()
    assert all(any(gt.same_relator(r, s) for s in dir7.relators) for r in steps[-1].relators)


def test_s_readings():
    ok = {r: good for r, ab, good in gt.s_reading_report()}
    assert ok == {"s1": True, "s2": False, "s3": False, "s4": False, "s5": False, "s6": False}


# --- coset enumeration ------------------------------------------------------------------

def test_todd_coxeter_examples():
    assert gt.subgroup_index(gt.whitehead_filling(), gt.SUBGROUP_Q) == 6
    assert gt.subgroup_index(pres("gens: a\nrel: a^3\n")) == 3
    assert gt.subgroup_index(pres("gens: a b\n"), ("a", "b")) == 1
    assert gt.subgroup_index(pres(S3)) == 6
    assert gt.subgroup_index(pres(S3), ("b",)) == 3
    # H_{6,3} contains the polygon group as the normal closure of a0, index 6
    assert gt.subgroup_index(gt.polygon_supergroup(), [f"r^{k} a0 r^-{k}" if k else "a0" for k in range(6)]) == 6


def test_todd_coxeter_overflow():
    with pytest.raises(gt.Overflow):
        gt.todd_coxeter(pres("gens: a b\n"), (), max_cosets=50)


def test_complete_tables_satisfy_relators():
    p = gt.whitehead_filling()
    t = gt.todd_coxeter(p, gt.SUBGROUP_Q)
    assert t.is_complete()
    for r in p.relators:
        assert all(t.trace(c, r) == c for c in range(t.index))


# --- low-index subgroups ---------------------------------------------------------------------

def test_low_index_examples():
    assert len(gt.low_index_subgroups(gt.whitehead_filling(), 6)) == 11
    assert len(gt.low_index_subgroups(pres("gens: a\nrel: a^3\n"), 3)) == 1
    assert len(gt.low_index_subgroups(pres("gens: a b\n"), 2)) == 3


@pytest.mark.parametrize("text, n", [(S3, 2), (S3, 3), (S3, 6), ("gens: a b\n", 3),
                                     ("gens: a b\nrel: a^2\nrel: b^3\n", 4)])
def test_low_index_matches_brute_force(text, n):
    p = pres(text)
    assert len(gt.low_index_subgroups(p, n)) == gt.brute_force_class_count(p, n)


def test_low_index_q_matches_brute_force():
    p = gt.whitehead_filling()
    for n in (2, 3, 4):
        assert len(gt.low_index_subgroups(p, n)) == gt.brute_force_class_count(p, n)


def test_low_index_invariant_under_tietze():
    p = pres("gens: a b c\nrel: c b^-1 a^-1\nrel: a^2\nrel: b^3\nrel: c^4\n")
    q = gt.tietze_eliminate(p, "c")
    assert gt.low_index_counts(p, 4) == gt.low_index_counts(q, 4)


def test_low_index_max_count():
    assert len(gt.low_index_subgroups(gt.whitehead_filling(), 6, max_count=4)) == 4
    with pytest.raises(ValueError):
        gt.low_index_subgroups(gt.whitehead_filling(), 0)


# --- Reidemeister-Schreier ------------------------------------------------------------------------

def test_rs_trivial_subgroup_of_cyclic_group():
    p = pres("gens: a\nrel: a^3\n")
    q = gt.reidemeister_schreier(p, gt.todd_coxeter(p), simplify_result=True)
    ab = gt.abelianization(q)
    assert ab.free_rank == 0 and not ab.torsion


def test_rs_nielsen_schreier():
    p = pres("gens: a b\n")
    q = gt.reidemeister_schreier(p, gt.todd_coxeter(p, ("a", "b^2", "b a b^-1")))
    assert gt.abelianization(q).free_rank == 1 + 2 * (2 - 1)


def test_rs_of_s3_subgroups():
    p = pres(S3)
    q = gt.reidemeister_schreier(p, gt.todd_coxeter(p, ("a",)), simplify_result=True)
    assert str(gt.abelianization(q)) == "Z/3"


def test_rs_incomplete_table():
    t = gt.CosetTable([[None, None, None, None]], ["a", "b"])
    with pytest.raises(gt.IncompleteTable):
        gt.reidemeister_schreier(pres("gens: a b\n"), t)


def test_rs_of_the_q_subgroup():
    q = gt.reidemeister_schreier(gt.whitehead_filling(), gt.q_subgroup_table())
    assert gt.abelianization(q) == gt.abelianization(gt.orbifold_edge_presentation())


# --- Wirtinger and generator maps -----------------------------------------------------------------

TREFOIL = "x a c b 1\nx b a c 1\nx c b a 1\n"


def test_wirtinger_trefoil():
    d = gt.parse_link_diagram(TREFOIL, "trefoil")
    assert len(d.components()) == 1
    p = gt.wirtinger(d)
    ab = gt.abelianization(p)
    assert ab.free_rank == 1 and not ab.torsion
    # the trefoil group surjects onto S3: three transitive index-3 classes
    assert len(gt.low_index_subgroups(p, 3)) >= 1


def test_wirtinger_hopf_link():
    d = gt.parse_link_diagram("x a b b 1\nx b a a 1\n")
    assert len(d.components()) == 2
    assert gt.abelianization(gt.wirtinger(d)).free_rank == 2


def test_invalid_diagrams():
    with pytest.raises(gt.InvalidDiagram):
        gt.parse_link_diagram("x a b c 1\n").validate()
    with pytest.raises(ValueError):
        gt.parse_link_diagram("x a b 1\n")
    with pytest.raises(ValueError):
        gt.parse_link_diagram("x a b c 2\n")


def test_link_diagram_roundtrip():
    d = gt.chain_link()
    e = gt.parse_link_diagram(gt.format_link_diagram(d))
    assert e.crossings == d.crossings


def test_chain_link_table():
    rows = gt.chain_table_comparison("z6")
    assert [k for k, _, _, ok in rows if not ok] == [13]
    d = gt.chain_link("z6")
    assert len(d.components()) == 6
    assert gt.abelianization(gt.wirtinger(d)).free_rank == 6


def test_crossing_13_variants_by_low_index():
    ridge = gt.low_index_counts(gt.orbifold_edge_presentation(), 4)
    assert ridge == {1: 1, 2: 0, 3: 364, 4: 194}
    z6 = gt.compare_groups(gt.orbifold_edge_presentation(), gt.add_torsion(gt.wirtinger(gt.chain_link("z6")), 3),
                           counts=ridge)
    z5 = gt.compare_groups(gt.orbifold_edge_presentation(), gt.add_torsion(gt.wirtinger(gt.chain_link("z5")), 3),
                           counts=ridge)
    assert z6.consistent and not z5.consistent


def test_generator_map_f():
    rep = gt.check_generator_map(gt.link_presentation(), gt.u_presentation(), gt.F_MAP)
    assert rep.homomorphism and rep.counts()[gt.MATCHES] == 12


def test_s_to_u_is_a_homomorphism_but_not_conversely():
    assert gt.check_generator_map(gt.magma_presentation("s1"), gt.u_presentation(), gt.s_from_u()).homomorphism
    back = gt.check_generator_map(gt.u_presentation(), gt.magma_presentation("s1"), gt.u_from_s())
    assert back.counts()[gt.UNRESOLVED] == 5


def test_generator_map_needs_every_image():
    with pytest.raises(ValueError):
        gt.check_generator_map(gt.link_presentation(), gt.u_presentation(), {"t1": "u1"})


def test_rewritten_forms_are_quotients():
    ev = gt.compare_groups(gt.orbifold_edge_presentation(), gt.u_presentation(),
                           counts={1: 1, 2: 0, 3: 364, 4: 194})
    assert not ev.consistent
    assert ev.counts[1][4] == 178 and gt.brute_force_class_count(gt.u_presentation(), 4) == 178
    assert "178" in ev.verdict


def test_add_torsion():
    p = gt.add_torsion(pres("gens: a b\n"), 3)
    assert str(gt.abelianization(p)) == "(Z/3)^2"
    with pytest.raises(ValueError):
        gt.add_torsion(p, 1)
