import json

from fundom.cosets import theta0, verify
from fundom.domain import (
    RHO,
    RenderOptions,
    cusp_class_rep,
    cusp_equivalent,
    cusp_table,
    cusp_tables_csv,
    cusp_tables_text,
    cusp_width,
    cusps_of,
    render_json,
    render_svg,
    triangle_of,
)
from fundom.residues import Level
from fundom.words import Cusp, cusp, make_word, st, word_identity

from oracles import matrix_search_witness, oracle_cusp_equivalent, oracle_width

L30 = Level(30)


def test_triangle_of_identity():
    t = triangle_of(word_identity())
    v1, v2, vc = t.vertices
    assert abs(v1.value() - RHO) < 1e-12
    assert abs(v2.value() - RHO * RHO) < 1e-12
    assert vc.cusp == Cusp(1, 0)


def test_triangle_of_s():
    t = triangle_of(make_word(("S",)))
    assert t.cusp == Cusp(0, 1)
    # S maps rho to -1/rho = rho^2 - 1 ... check numerically
    z = t.vertices[0].value()
    assert abs(z - (-1 / RHO)) < 1e-12


def test_triangle_cusp_minus_one_over_j():
    for j in (2, 3, -2, 5):
        t = triangle_of(st(j) * st(1))
        assert t.cusp == cusp(-1, j)


def test_triangle_vertices_distinct():
    for w in theta0(Level(6)).reps:
        t = triangle_of(w)
        zs = [v.value() for v in t.vertices]
        finite = [z for z in zs if z is not None]
        for i in range(len(finite)):
            for k in range(i + 1, len(finite)):
                assert abs(finite[i] - finite[k]) > 1e-9


def test_cusps_of_theta0():
    lst = theta0(L30)
    cusps = cusps_of(lst)
    assert cusps.count(cusp(-1, 3)) == 4  # M_3 + 1
    assert cusps.count(Cusp(0, 1)) == 30  # one per ST^i
    assert cusps.count(Cusp(1, 0)) == 1  # j = 0 (the word SS)


def test_cusp_equivalent_paper_examples():
    assert cusp_equivalent(cusp(-1, 4), cusp(1, 2), L30)
    assert cusp_equivalent(cusp(-1, 5), cusp(1, 5), L30)
    assert not cusp_equivalent(cusp(-1, 5), cusp(1, 2), L30)
    for c in (cusp(-1, 7), Cusp(1, 0), Cusp(0, 1)):
        assert cusp_equivalent(c, c, L30)


def test_cusp_rep_table_n30():
    # the paper's "cusp rep" row, keyed by j
    expected = {
        2: "1/2", 3: "1/3", 4: "1/2", 5: "1/5", 6: "1/6", 8: "1/2",
        9: "1/3", 10: "1/10", 12: "1/6", 14: "1/2", 15: "1/15",
        -14: "1/2", -12: "1/6", -10: "1/10", -9: "1/3", -8: "1/2",
        -6: "1/6", -5: "1/5", -4: "1/2", -3: "1/3", -2: "1/2",
    }
    for j, rep in expected.items():
        assert str(cusp_class_rep(cusp(-1, j), L30)) == rep


def test_cusp_table_n30():
    table = cusp_table(L30)
    got = {str(cl.rep): cl.width for cl in table.classes}
    assert got == {
        "1/2": 15, "1/3": 10, "1/5": 6, "1/6": 5, "1/10": 3,
        "1/15": 2, "oo": 1, "0/1": 30,
    }
    assert table.total_width() == 72


def test_cusp_table_order_follows_paper():
    reps = [str(cl.rep) for cl in cusp_table(L30).classes]
    assert reps == ["1/2", "1/3", "1/5", "1/6", "1/10", "1/15", "oo", "0/1"]


def test_cusp_table_n4():
    table = cusp_table(Level(4))
    got = {str(cl.rep): cl.width for cl in table.classes}
    assert got == {"oo": 1, "0/1": 4, "1/2": 1}


def test_width_examples():
    assert cusp_width(Cusp(1, 0), L30) == 1
    assert cusp_width(Cusp(0, 1), L30) == 30
    for n in (4, 6, 8, 30):
        lvl = Level(n)
        assert cusp_width(Cusp(1, 0), lvl) == 1
        assert cusp_width(Cusp(0, 1), lvl) == n


def test_width_against_stabilizer_oracle():
    for n in (2, 4, 6, 8, 12, 30):
        lvl = Level(n)
        seen = set(cusps_of(theta0(lvl))) | {Cusp(1, 0)}
        for c in seen:
            assert cusp_width(c, lvl) == oracle_width(c, lvl)


def test_equivalence_against_double_coset_oracle():
    for n in range(2, 31):
        lvl = Level(n)
        seen = sorted(set(cusps_of(theta0(lvl))) | {Cusp(1, 0)})
        for c1 in seen:
            for c2 in seen:
                assert cusp_equivalent(c1, c2, lvl) == oracle_cusp_equivalent(
                    c1, c2, lvl
                ), (n, c1, c2)


def test_equivalence_witnessed_by_matrix_search():
    # positive pairs from the N=30 table have small witnesses in
    # Gamma_0(30); grow the bound until each one is found
    pairs = [
        (cusp(-1, 4), cusp(1, 2)),
        (cusp(-1, 9), cusp(1, 3)),
        (cusp(-1, 15), cusp(1, 15)),
        (cusp(-1, 12), cusp(1, 6)),
    ]
    for c1, c2 in pairs:
        witness = None
        for bound in (8, 32, 128, 256):
            witness = matrix_search_witness(c1, c2, L30, bound)
            if witness is not None:
                break
        assert witness is not None, (c1, c2)
        assert witness.c % 30 == 0


def test_class_multiplicities_sum_to_width():
    # per class, the number of Theta_0 cusps landing in it equals its
    # width; this is the paper's M_j + 1 bookkeeping
    for n in (6, 8, 12, 30):
        lvl = Level(n)
        table = cusp_table(lvl)
        cusps = cusps_of(theta0(lvl))
        for cl in table.classes:
            count = sum(
                1 for c in cusps if cusp_equivalent(c, cl.rep, lvl)
            )
            assert count == cl.width, (n, str(cl.rep))


def test_widths_sum_to_index():
    from fundom.projline import psi

    for n in (2, 4, 6, 8, 12, 30):
        lvl = Level(n)
        assert cusp_table(lvl).total_width() == psi(lvl)


def test_render_svg_counts_and_determinism():
    lst = theta0(Level(6))
    verify(lst)
    svg1 = render_svg(lst, RenderOptions(labels=True))
    svg2 = render_svg(lst, RenderOptions(labels=True))
    assert svg1 == svg2
    assert svg1.count("<path ") == 12
    assert svg1.count("<text ") == 12
    assert "ST^3ST" in svg1


def test_render_svg_single_triangle():
    from fundom.cosets import CosetList, Group

    lst = CosetList(Level(6), Group.GAMMA0, [word_identity()])
    svg = render_svg(lst)
    assert svg.count("<path ") == 1


def test_render_svg_n30():
    lst = theta0(L30)
    assert render_svg(lst).count("<path ") == 72


def test_render_json_schema():
    lst = theta0(Level(6))
    doc = json.loads(render_json(lst))
    assert doc["N"] == 6 and doc["group"] == "gamma0"
    assert len(doc["triangles"]) == 12
    for rec in doc["triangles"]:
        assert set(rec) == {"word", "cusp", "vertices"}
        assert len(rec["vertices"]) == 3
        for v in rec["vertices"]:
            if v["type"] == "cusp":
                assert set(v) == {"type", "p", "q"}
            else:
                assert set(v) == {"type", "matrix", "base"}
                assert v["base"] in ("rho", "rho2")


def test_render_json_n30_count():
    doc = json.loads(render_json(theta0(L30)))
    assert len(doc["triangles"]) == 72


def test_adjacent_triangles_share_edge():
    # adjacent graph vertices give triangles sharing two vertices
    from fundom.cayley import build_graph

    lvl = Level(6)
    lst = theta0(lvl)
    g = build_graph(lst)
    tris = [triangle_of(w) for w in lst.reps]

    def vertex_set(t):
        out = set()
        for v in t.vertices:
            z = v.value()
            out.add("oo" if z is None else (round(z.real, 9), round(z.imag, 9)))
        return out

    for i in range(len(g)):
        for j in g.adj[i]:
            shared = vertex_set(tris[i]) & vertex_set(tris[j])
            assert len(shared) == 2, (str(g.words[i]), str(g.words[j]))


def test_cusp_tables_text_n30():
    text = cusp_tables_text(L30)
    assert "3\t-1/3\t4\t1/3" in text
    assert "1/2\t15" in text
    assert "total\t72" in text
    csv = cusp_tables_csv(L30)
    assert "3,-1/3,4,1/3" in csv
    assert "1/2,15,," in csv
