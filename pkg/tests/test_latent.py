import itertools
import warnings

from ncdigraph import cfg
from ncdigraph.chains import (BACKWARD, BIDIRECTIONAL, FORWARD, LOOSE, ONE,
                              ZERO, chain_step)
from ncdigraph.codec import encode_digraph
from ncdigraph.digraphs import (ALL_PROPERTIES, PropertyId,
                                check_property, enumerate_noncrossing_digraphs,
                                make_digraph)
from ncdigraph.latent import (alphabet, bracket_classes, constraint_accepts,
                              constraint_dfa, d55, h_lat, latent_encode,
                              latent_to_str, maximal_chains, parse_latent,
                              preimage_count, reg_lat)


def test_chain_step_glosses():
    f2 = chain_step(chain_step(ZERO, FORWARD), FORWARD)
    assert f2.name == "F"
    i2 = chain_step(chain_step(ZERO, BIDIRECTIONAL), BIDIRECTIONAL)
    assert i2.name == "I"
    assert chain_step(ZERO, BACKWARD).name == "f"
    assert chain_step(chain_step(ZERO, FORWARD), BACKWARD).name == "C"
    assert chain_step(ONE, FORWARD) == LOOSE


def test_chain_step_case_swap_symmetry():
    comp = {FORWARD: BACKWARD, BACKWARD: FORWARD,
            BIDIRECTIONAL: BIDIRECTIONAL}
    for length in range(1, 5):
        for seq in itertools.product((FORWARD, BACKWARD, BIDIRECTIONAL),
                                     repeat=length):
            st = ZERO
            for d in seq:
                st = chain_step(st, d)
            mirrored = ZERO
            for d in seq:
                mirrored = chain_step(mirrored, comp[d])
            assert mirrored == st.mirror()
            expected = st.name if st.mirror() == st else st.name.swapcase()
            assert mirrored.name == expected


def test_six_chain_decomposition():
    arcs = [(1, 2), (1, 7), (2, 3), (2, 4), (3, 4), (4, 5), (4, 7), (6, 7),
            (7, 10), (8, 9)]
    chains = maximal_chains(make_digraph(10, arcs))
    grouping = {frozenset(edges): loose for edges, loose in chains}
    assert grouping == {
        frozenset({(1, 7), (7, 10)}): False,
        frozenset({(1, 2), (2, 4), (4, 7)}): False,
        frozenset({(2, 3), (3, 4)}): False,
        frozenset({(4, 5)}): False,
        frozenset({(6, 7)}): True,
        frozenset({(8, 9)}): True,
    }


def test_single_arc_chain():
    s = latent_encode(make_digraph(2, [(1, 2)]))
    assert latent_to_str(s) == "/F'{}>F'"
    chains = maximal_chains(make_digraph(2, [(1, 2)]))
    assert chains == [(((1, 2),), False)]


def test_cycle_ambiguity_disconnection_example():
    # directed cycle 1->2->7->1, ambiguous paths 2->1 and 2->7->1,
    # vertices 5,6 disconnected from the rest
    g = make_digraph(7, [(7, 1), (1, 2), (2, 1), (2, 3), (2, 7), (7, 4),
                         (5, 6)])
    s = latent_encode(g)
    assert h_lat(s) == encode_digraph(g) == "<[{}]//{}>{}<{}/{}>{}\\>\\"
    assert not constraint_accepts(PropertyId.ACYC_D, s)
    assert not constraint_accepts(PropertyId.UNAMB_S, s)
    assert not constraint_accepts(PropertyId.CONN_W, s)


def test_h_lat_trivial():
    assert h_lat(()) == ""


def test_latent_round_trip_tokens():
    for n in range(1, 4):
        for g in enumerate_noncrossing_digraphs(n):
            s = latent_encode(g)
            assert parse_latent(latent_to_str(s)) == s


def test_reg_lat_rejects_garbage():
    reg = reg_lat()
    for token in (">F'", "\\.", "]I'"):
        assert not reg.accepts(parse_latent(token))
    # loose-marked bracket at string start
    assert not reg.accepts(parse_latent("/.{}>."))
    # well-formed image accepted
    assert reg.accepts(parse_latent("/F'{}>F'"))


def test_reg_lat_accepts_images_small():
    reg = reg_lat()
    spec = d55()
    for n in range(1, 5):
        for g in enumerate_noncrossing_digraphs(n):
            s = latent_encode(g)
            assert reg.accepts(s)
            assert cfg.dyck_check(spec, s)


def test_constraint_trivials():
    assert all(constraint_accepts(p, ()) for p in ALL_PROPERTIES)
    pair = latent_encode(make_digraph(2, [(1, 2), (2, 1)]))
    assert constraint_accepts(PropertyId.INV, pair)
    assert not constraint_accepts(PropertyId.ORIENTED, pair)


def test_axiom_equivalence_small():
    for n in range(1, 5):
        for g in enumerate_noncrossing_digraphs(n):
            s = latent_encode(g)
            for p in ALL_PROPERTIES:
                assert constraint_accepts(p, s) == check_property(g, p), \
                    (sorted(g.arcs), p, latent_to_str(s))


def test_preimage_uniqueness_small():
    for n in range(1, 4):
        for g in enumerate_noncrossing_digraphs(n):
            assert preimage_count(encode_digraph(g), limit=3) == 1


def test_preimage_uniqueness_sampled_n5_n6():
    import random

    from conftest import random_noncrossing_digraph
    rng = random.Random(17)
    for _ in range(12):
        g = random_noncrossing_digraph(rng, 6)
        assert preimage_count(encode_digraph(g), limit=2) == 1


def test_axiom_equivalence_randomized_n8():
    import random

    from conftest import random_noncrossing_digraph
    rng = random.Random(23)
    for _ in range(150):
        g = random_noncrossing_digraph(rng, 8)
        s = latent_encode(g)
        for p in ALL_PROPERTIES:
            assert constraint_accepts(p, s) == check_property(g, p), \
                (sorted(g.arcs), p)


def test_intersected_preimage_uniqueness_small():
    extras = [constraint_dfa(PropertyId.ACYC_D),
              constraint_dfa(PropertyId.ACYC_U)]
    for n in range(1, 4):
        for g in enumerate_noncrossing_digraphs(n):
            expect = 1 if (check_property(g, PropertyId.ACYC_D)
                           and check_property(g, PropertyId.ACYC_U)) else 0
            got = preimage_count(encode_digraph(g), extra=extras, limit=3)
            assert got == expect


def test_conjunction_is_intersection_small(digraphs_by_n):
    import itertools as it
    props = (PropertyId.ACYC_D, PropertyId.CONN_W, PropertyId.OUT)
    for g in digraphs_by_n[4]:
        s = latent_encode(g)
        for k in (2, 3):
            for combo in it.combinations(props, k):
                assert all(constraint_accepts(p, s) for p in combo) == \
                    all(check_property(g, p) for p in combo)


def test_bracket_classes_are_fixed_sets():
    classes = bracket_classes()
    assert classes["R"] >= classes["R_>"] - classes["B"]
    assert classes["Sigma_in"] == classes["L_<"] | classes["R_>"]
    assert classes["R_nonloose"] == classes["R"] - classes["R_loose"]
    for b in classes["R_loose"]:
        assert b.base == "}" or b.is_closer


def test_alphabet_size_regression_warning():
    """A tighter annotation folding gets by with 54 bracket pairs; ours
    carries the cover class explicitly and may use more.  Count the pairs
    actually used on digraphs with n <= 5 and warn beyond the target."""
    marks = set()
    for n in range(1, 6):
        for g in enumerate_noncrossing_digraphs(n):
            for b in latent_encode(g):
                if b.is_opener:
                    marks.add((b.orientation, b.chain, b.primed, b.cover))
    if len(marks) > 54:
        warnings.warn(f"reachable edge-pair inventory has {len(marks)} pairs "
                      "(folded target is 54)")
    assert len(marks) <= len(alphabet())


def test_reg_lat_state_count_regression_warning():
    reg = reg_lat()
    seen = {reg.start}
    frontier = [reg.start]
    syms = alphabet()
    while frontier:
        q = frontier.pop()
        for b in syms:
            q2 = reg.step(q, b)
            if q2 is not None and q2 not in seen:
                seen.add(q2)
                frontier.append(q2)
    if len(seen) > 24:
        warnings.warn(f"Reg_lat uses {len(seen)} reachable states "
                      "(folded target is 24)")
    assert len(seen) < 500
