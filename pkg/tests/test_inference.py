import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncdigraph import cfg
from ncdigraph.digraphs import (PropertyId, check_property,
                                enumerate_noncrossing_digraphs, is_noncrossing,
                                parse_property_set)
from ncdigraph.fileio import parse_lexicon, parse_weights
from ncdigraph.inference import (LexicalConstraint, NoParseError, WeightMatrix,
                                 brute_force_max, build_intersection_grammar,
                                 count_family_strings, family_automaton,
                                 parse_max, vertex_language)
from ncdigraph.latent import latent_encode
from ncdigraph.ontology import count_family


def random_weights(rng, n, hi=60):
    return WeightMatrix(n, {(i, j): rng.randrange(0, hi)
                            for i in range(1, n + 1)
                            for j in range(1, n + 1) if i != j})


def test_vertex_language_trivia():
    g1 = vertex_language(1)
    assert g1.accepts(())
    g2 = vertex_language(2)
    assert g2.accepts(latent_encode(next(enumerate_noncrossing_digraphs(2))))
    assert not g2.accepts(())


def test_vertex_language_composition_acyclic_n5():
    # Id(Reg_lat ∩ A_D ∩ G_5) decodes to exactly the 5-vertex dags
    want = count_family(5, frozenset({PropertyId.ACYC_D}))
    assert count_family_strings(5, {PropertyId.ACYC_D}) == want
    auto = family_automaton(5, {PropertyId.ACYC_D})
    for g in enumerate_noncrossing_digraphs(5):
        s = latent_encode(g)
        assert auto.accepts(s) == check_property(g, PropertyId.ACYC_D)


def test_intersection_grammar_language_sizes():
    assert count_family_strings(5) == 62464
    for n in (1, 2, 3, 4):
        assert count_family_strings(n) == count_family(n, frozenset())


def test_intersection_grammar_object():
    g = build_intersection_grammar(2)
    assert g.start == ("S0",)
    # language = four 2-vertex digraphs; count derivations by length
    total = sum(cfg.string_counts_by_length(g, 8))
    assert total == 4


def test_intersection_grammar_empty_family():
    lex = LexicalConstraint({1: frozenset(), 2: frozenset()})
    g = build_intersection_grammar(2, {PropertyId.CONN_W}, lex)
    assert sum(cfg.string_counts_by_length(g, 10)) == 0


def _grammar_strings(g, max_len=60):
    table = g.by_lhs()
    out = set()
    stack = [((g.start,), ())]
    while stack:
        syms, acc = stack.pop()
        while syms and syms[0] not in table:
            acc = acc + (syms[0],)
            syms = syms[1:]
        if not syms:
            out.add(acc)
            continue
        if len(acc) > max_len:
            continue
        for rhs in table[syms[0]]:
            stack.append((tuple(rhs) + tuple(syms[1:]), acc))
    return out


def test_intersection_grammar_language_is_family():
    from ncdigraph.latent import latent_to_str

    fams = (frozenset(), frozenset({PropertyId.ACYC_D}),
            frozenset({PropertyId.CONN_W, PropertyId.ACYC_U}))
    for fam in fams:
        for n in (1, 2, 3):
            g = build_intersection_grammar(n, fam)
            got = {"".join(b.token for b in s) for s in _grammar_strings(g)}
            want = {latent_to_str(latent_encode(d))
                    for d in enumerate_noncrossing_digraphs(n)
                    if all(check_property(d, p) for p in fam)}
            assert got == want


def test_parse_max_all_ones_n3():
    w = WeightMatrix(3, {(i, j): 1 for i in range(1, 4)
                         for j in range(1, 4) if i != j})
    res = parse_max(w)
    assert res.weight == 6
    assert res.digraph.arcs == frozenset(
        {(1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1)})


def test_out_tree_has_n_minus_1_arcs():
    rng = random.Random(2)
    fam = parse_property_set("out-tree")
    for n in (2, 3, 4, 5):
        w = WeightMatrix(n, {(i, j): rng.randrange(1, 50)
                             for i in range(1, n + 1)
                             for j in range(1, n + 1) if i != j})
        res = parse_max(w, fam)
        assert len(res.digraph.arcs) == n - 1
        assert all(check_property(res.digraph, p) for p in fam)


def test_parse_matches_brute_random():
    rng = random.Random(4)
    fams = [frozenset(), frozenset({PropertyId.ACYC_D}),
            frozenset({PropertyId.OUT}), parse_property_set("polytree")]
    for n in (2, 3, 4):
        for fam in fams:
            for _ in range(5):
                w = random_weights(rng, n)
                pm = parse_max(w, fam)
                bm = brute_force_max(w, fam)
                assert pm.weight == bm.weight
                assert is_noncrossing(pm.digraph)
                assert all(check_property(pm.digraph, p) for p in fam)


def test_zero_matrix_tie_breaking():
    w = WeightMatrix(4, {})
    res = parse_max(w)
    assert res.weight == 0
    assert res.digraph.arcs == frozenset()
    res = brute_force_max(w)
    assert res.digraph.arcs == frozenset()


def test_monotone_in_constraints():
    rng = random.Random(9)
    for _ in range(10):
        w = random_weights(rng, 4)
        w_all = parse_max(w).weight
        w_dag = parse_max(w, {PropertyId.ACYC_D}).weight
        w_tree = parse_max(w, parse_property_set("out-tree")).weight
        assert w_tree <= w_dag <= w_all


def test_scale_invariance_of_argmax():
    rng = random.Random(10)
    for _ in range(10):
        w = random_weights(rng, 4)
        scaled = WeightMatrix(4, {k: 7 * v for k, v in w.w.items()})
        assert parse_max(w).digraph == parse_max(scaled).digraph


def test_lexical_in_degree_zero():
    rng = random.Random(12)
    lex = LexicalConstraint({2: frozenset({"out-left", "out-right"})})
    for _ in range(5):
        w = random_weights(rng, 4)
        res = parse_max(w, (), lex)
        assert all(v != 2 for (_u, v) in res.digraph.arcs)


def test_no_parse_error():
    w = WeightMatrix(2, {(1, 2): 3})
    with pytest.raises(NoParseError):
        parse_max(w, {PropertyId.CONN_W, PropertyId.INV, PropertyId.ORIENTED})
    with pytest.raises(NoParseError):
        brute_force_max(w, {PropertyId.CONN_W, PropertyId.INV,
                            PropertyId.ORIENTED})


def test_fraction_weights_and_files():
    text = "n 3\n1 2 1.5\n2 3 0.25\n3 1 2\n"
    w = parse_weights(text)
    assert w.get(1, 2) == Fraction(3, 2)
    res = parse_max(w, {PropertyId.ACYC_D})
    brute = brute_force_max(w, {PropertyId.ACYC_D})
    assert res.weight == brute.weight
    assert isinstance(res.weight, Fraction) or res.weight == brute.weight


def test_lexicon_parsing():
    lex = parse_lexicon("1 out-left,out-right\n3 bidir in-left\n")
    assert lex.allowed(1) == frozenset({"out-left", "out-right"})
    assert lex.allowed(2) == frozenset({"in-left", "in-right", "out-left",
                                        "out-right", "bidir"})


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=20, deadline=None)
def test_parse_weight_is_arc_sum(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    w = random_weights(rng, n) if n > 1 else WeightMatrix(1, {})
    res = parse_max(w)
    assert res.weight == sum(w.get(i, j) for (i, j) in res.digraph.arcs)
