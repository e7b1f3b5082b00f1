"""The twelve acceptance criteria, one test each.

Every test records its outcome through ``acceptance_log.criterion`` so the
session summary prints one PASS/FAIL line per criterion.
"""
import re
import time
from itertools import combinations

from expgraph import coloring, dfvs, mis, mvc
from expgraph import from_edges
from expgraph.bmatrix import b_matrix
from expgraph.generators import (barabasi_albert, eppstein_power_law, erdos_renyi, grid_2d,
                                 k_regular_random, k_regular_ring, kleinberg, watts_strogatz)
from expgraph.io import read_net, write_net
from expgraph.named import (cocktail_party, complete_bipartite, complete_digraph,
                            complete_graph, cycle_graph, listing_graph, path_graph,
                            petersen_graph, star_graph)
from expgraph.ops import is_acyclic, is_regular, remove_vertices
from expgraph import separators as sep

import oracles
from acceptance_log import criterion
from corpus import digraph_corpus, er_corpus
from fixtures import LISTING, LISTING_GOLDEN

CORPUS = er_corpus(200)
DIGRAPHS = digraph_corpus(120) + digraph_corpus(64, loops=True)

EXACT_MIS = {
    "brute_force": mis.mis_brute_force,
    "max_degree": mis.mis_max_degree_branching,
    "moon_moser_recursive": lambda g: mis.mis_moon_moser(g, "recursive"),
    "moon_moser_iterative": lambda g: mis.mis_moon_moser(g, "iterative"),
    "fgk": mis.mis_fgk,
}
DECIDERS = (mvc.k_vertex_cover_brute_force, mvc.k_vertex_cover_dbs,
            mvc.k_vertex_cover_niedermeier, mvc.k_vertex_cover_buss_goldsmith)


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [e for i, e in enumerate(pairs) if mask >> i & 1]
        yield from_edges(n, edges), edges


def test_01_mis_oracle_suite():
    with criterion(1, "MIS solvers agree with the 2^n oracle on 200 ER graphs"):
        start = time.perf_counter()
        for g, n, edges in CORPUS:
            opt = oracles.alpha(n, edges)
            for name, solve in EXACT_MIS.items():
                s = solve(g)
                assert len(s) == opt, (name, n, edges)
                assert mis.is_independent_set(g, s) and mis.is_maximal_independent_set(g, s)
            greedy = mis.mis_greedy(g)
            assert mis.is_maximal_independent_set(g, greedy) and len(greedy) <= opt
        assert time.perf_counter() - start < 60


def test_02_mvc_oracle_suite():
    with criterion(2, "MVC deciders agree with the oracle for every k; 2-approx <= 2 OPT"):
        checked = 0
        for g, n, edges in CORPUS:
            if n > 10:
                continue
            opt = oracles.min_vertex_cover(n, edges)
            for k in range(n + 1):
                want = k >= opt
                assert oracles.has_vertex_cover(n, edges, k) == want
                assert [d(g, k) for d in DECIDERS] == [want] * 4, (n, edges, k)
            approx = mvc.two_approximation_cover(g)
            assert mvc.is_vertex_cover(g, approx) and len(approx) <= 2 * opt
            checked += 1
        assert checked >= 140


def test_03_duality():
    with criterion(3, "|max IS| + |min VC| = n"):
        named = [listing_graph(), petersen_graph(), cocktail_party(4), complete_graph(6),
                 complete_bipartite(3, 4), cycle_graph(7), path_graph(6), star_graph(5)]
        graphs = [g for g, _, _ in CORPUS] + named
        for g in graphs:
            assert len(mis.mis_fgk(g)) + len(mvc.minimum_vertex_cover(g)) == len(g)
        for g, n, edges in CORPUS[:100]:
            assert oracles.alpha(n, edges) + oracles.min_vertex_cover(n, edges) == n


def test_04_coloring():
    with criterion(4, "chromatic number equals the oracle for n <= 8 and fixed values"):
        start = time.perf_counter()
        for g, n, edges in CORPUS:
            if n <= 8:
                assert coloring.chromatic_number(g) == oracles.chromatic_number(n, edges)
        for n in range(6):
            for g, edges in all_graphs(n):
                assert coloring.chromatic_number(g) == oracles.chromatic_number(n, edges)
        for seed in range(40):
            g = erdos_renyi(8, 0.5, seed=seed)
            assert coloring.chromatic_number(g) == oracles.chromatic_number(8, g.edges())
        pet = petersen_graph()
        assert oracles.chromatic_number(10, pet.edges()) == 3
        assert coloring.chromatic_number(complete_graph(5)) == 5
        assert coloring.chromatic_number(complete_bipartite(3, 3)) == 2
        assert coloring.chromatic_number(cycle_graph(5)) == 3
        assert coloring.chromatic_number(pet) == 3
        assert time.perf_counter() - start < 30


def test_05_dfvs():
    with criterion(5, "minimum DFVS equals the oracle; residuals acyclic"):
        for g, n, arcs in DIGRAPHS:
            exact = dfvs.minimum_directed_fvs(g)
            assert len(exact) == oracles.min_fvs(n, arcs), (n, arcs)
            for s in (exact, dfvs.greedy_min_fvs(g)):
                assert oracles.is_acyclic(n, arcs, s)
                assert is_acyclic(remove_vertices(g, s))


def test_06_circuits():
    with criterion(6, "circuit enumeration matches brute force; K*_4 has 20"):
        for g, n, arcs in DIGRAPHS:
            if n > 6:
                continue
            got = dfvs.enum_all_circuits(g)
            assert len(got) == len(set(map(tuple, got)))
            assert set(map(tuple, got)) == oracles.circuits(n, arcs)
        k4 = dfvs.enum_all_circuits(complete_digraph(4))
        assert len(k4) == oracles.closed_form_circuits_complete_digraph(4) == 20
        assert set(map(tuple, k4)) == oracles.circuits(4, complete_digraph(4).edges())


def test_07_separators():
    with criterion(7, "ab-separators equal exhaustive enumeration for n <= 8"):
        graphs = [(g, n, e) for g, n, e in CORPUS if n <= 8]
        graphs += [(g, n, g.edges()) for n in range(2, 9)
                   for g in (path_graph(n), cycle_graph(n), erdos_renyi(n, 0.3, seed=n))]
        for g, n, edges in graphs:
            for a, b in combinations(range(n), 2):
                got = sep.get_ab_separators(g, a, b)
                assert {frozenset(s) for s in got} == oracles.ab_separators(n, edges, a, b)
                assert len(got) == len({frozenset(s) for s in got})
                for s in got:
                    assert sep.is_ab_separator(g, s, a, b)
                    assert sep.is_minimal_ab_separator(g, s, a, b)


def test_08_cocktail_party():
    with criterion(8, "K_{4x2}: V:8 E:24, MISFGK size 2"):
        g = cocktail_party(4)
        assert (len(g), g.number_of_edges()) == (8, 24)
        assert len(mis.mis_fgk(g)) == 2
        assert oracles.alpha(8, g.edges()) == 2


def test_09_io():
    with criterion(9, "four-vertex fixture parses; round trips preserve structure; writes are stable"):
        g = read_net(LISTING)
        assert len(g) == 4
        assert g.labelled_edges() == {("a", "b"), ("b", "c"), ("b", "d"), ("c", "d")}
        for seed in range(100):
            h = erdos_renyi(1 + seed % 20, 0.3, seed=seed)
            text = write_net(h)
            back = read_net(text)
            assert back == h
            assert write_net(back) == text
            assert write_net(h) == text


def test_10_cli_golden(tmp_path):
    from test_cli import MS, run_cli
    with criterion(10, "CLI golden blocks and directory mode"):
        path = tmp_path / "listing.net"
        path.write_text(LISTING)
        for acronym, (size, members) in LISTING_GOLDEN.items():
            code, out = run_cli(str(path), acronym)
            assert code == 0
            lines = out.rstrip("\n").split("\n")
            assert lines[0] == "V:4 E:4" and MS.match(lines[1])
            assert lines[2:] == [f"Size: {size}", members], acronym
        folder = tmp_path / "dir"
        folder.mkdir()
        (folder / "zeta.net").write_text(LISTING)
        (folder / "16cell.net").write_text(write_net(cocktail_party(4)))
        (folder / "alpha.net").write_text(write_net(path_graph(3)))
        code, out = run_cli(str(folder), "MISFGK")
        assert code == 0
        blocks = out.rstrip("\n").split("\n\n")
        assert [b.split("\n")[0] for b in blocks] == ["16cell.net", "alpha.net", "zeta.net"]
        for block in blocks:
            lines = block.split("\n")
            assert len(lines) == 5 and re.match(r"^V:\d+ E:\d+$", lines[1])
            assert MS.match(lines[2]) and lines[3].startswith("Size: ")
        assert blocks[0].split("\n")[1] == "V:8 E:24"
        assert blocks[0].split("\n")[3] == "Size: 2"


def test_11_generators():
    with criterion(11, "generator structure and determinism"):
        for n, k in ((10, 2), (12, 3), (7, 1)):
            assert set(watts_strogatz(n, k, 0.0, seed=5).edges()) == \
                set(k_regular_ring(n, k).edges())
        g = grid_2d(3, 3)
        assert (len(g), g.number_of_edges()) == (9, 12)
        r = k_regular_random(10, 3, seed=2)
        assert is_regular(r) and all(r.degree(v) == 3 for v in r)
        seeded = [
            lambda s: erdos_renyi(20, 0.3, s),
            lambda s: barabasi_albert(4, 2, 15, s),
            lambda s: watts_strogatz(20, 2, 0.3, s),
            lambda s: kleinberg(4, 5, 2.0, s),
            lambda s: eppstein_power_law(20, 30, 200, s),
            lambda s: k_regular_random(12, 3, s),
        ]
        for make in seeded:
            for seed in (0, 7, 123):
                a, b = make(seed), make(seed)
                assert a == b and write_net(a) == write_net(b)


def test_12_bmatrix():
    with criterion(12, "B-matrix hand values and row sums"):
        p3 = b_matrix(path_graph(3))
        assert p3.rows == [[0, 3, 0], [0, 2, 1], [1, 2, 0]]
        k4 = b_matrix(complete_graph(4))
        assert k4.depth == 1 and k4[1, 3] == 4 and k4[0, 1] == 4
        for seed in range(50):
            g = erdos_renyi(3 + seed % 18, (0.1, 0.25, 0.5)[seed % 3], seed=seed)
            assert all(sum(row) == len(g) for row in b_matrix(g).rows)
