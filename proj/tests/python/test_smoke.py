"""Smoke test for the python bindings; runs standalone with PYTHONPATH set."""

import trichrome


def main():
    rep = trichrome.analyze("Bw")  # triangle
    assert rep["n"] == 3 and rep["m"] == 3
    assert (rep["omega"], rep["chi"], rep["gamma"], rep["psi"]) == (3, 3, 3, 3)
    assert sorted(set(rep["witnesses"]["chi"])) == [1, 2, 3]

    assert trichrome.is_realizable(2, 3, 3)
    assert not trichrome.is_realizable(2, 2, 3)
    assert trichrome.min_order(3, 4, 6) == 9
    assert trichrome.min_order(5, 5, 6) == 8

    g6 = trichrome.realize(2, 3, 3)
    rep = trichrome.analyze(g6)
    assert (rep["chi"], rep["gamma"], rep["psi"]) == (2, 3, 3)

    assert trichrome.analyze(trichrome.g_star(4, 5))["gamma"] == 4
    assert trichrome.analyze(trichrome.l_graph(5, 1))["psi"] == 5
    assert trichrome.analyze(trichrome.basic_bipartite(4))["chi"] == 2
    assert trichrome.analyze(trichrome.reduced_graph(3))["n"] == 6
    assert trichrome.analyze(trichrome.extended_graph(3))["m"] == 3

    assert trichrome.count_connected(6) == 112
    assert len(trichrome.connected_graphs(5)) == 21

    check = trichrome.verify_min_order(2, 3, 3)
    assert check["agrees"] and check["formula"] == 4
    assert len(check["realizers"]) == 1

    cert = trichrome.certify("Cs", h_set=[1], s_set=[0], k=1)
    assert cert["ok"] and cert["implied_lower_bound"] == 2
    cert = trichrome.certify("Cs", h_set=[1], s_set=[1], k=1)
    assert not cert["ok"] and cert["reason"] == "not disjoint"

    try:
        trichrome.min_order(2, 2, 4)
    except ValueError:
        pass
    else:
        raise AssertionError("unrealizable triple must raise")

    print("ok")


if __name__ == "__main__":
    main()
