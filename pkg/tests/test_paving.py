import itertools
import json

import pytest

from hesspave.hessenberg import (
    HessFunction,
    borel_space,
    enumerate_spaces,
    from_h,
    full_space,
    peterson_space,
)
from hesspave.operators import (
    RegularNilpotent,
    SemisimpleClassical,
    TypeAGeneral,
    TypeANilpotent,
)
from hesspave.paving import (
    CellReport,
    OracleDisagreement,
    PoincarePolynomial,
    cell_report,
    hess_label,
    pave,
    poincare,
    result_to_json,
    spec_label,
)
from hesspave.rootsys import RootSystemId, positive_roots
from hesspave.weyl import WeylElement, enumerate_weyl, identity


def test_cell_report_invariants():
    system = RootSystemId("A", 2)
    e = identity(system)
    with pytest.raises(ValueError):
        CellReport(e, True, None, "x")
    with pytest.raises(ValueError):
        CellReport(e, False, 0, "x")
    with pytest.raises(ValueError):
        CellReport(e, True, 1, "x")  # identity has no inversions


def test_polynomial_validation_and_accessors():
    p = PoincarePolynomial(((0, 1), (2, 3), (4, 1)))
    assert p.coeff(2) == 3 and p.coeff(6) == 0
    assert p.euler_characteristic() == 5
    assert p.as_list() == [1, 0, 3, 0, 1]
    assert str(p) == "1 + 3x^2 + x^4"
    with pytest.raises(ValueError):
        PoincarePolynomial(((1, 1),))
    with pytest.raises(ValueError):
        PoincarePolynomial(((2, -1),))


def test_poincare_requires_exact_coverage():
    system = RootSystemId("A", 2)
    reports = [CellReport(w, True, w.length(), "t") for w in enumerate_weyl(system)]
    assert str(poincare(reports, system)) == "1 + 2x^2 + 2x^4 + x^6"
    with pytest.raises(ValueError):
        poincare(reports[:-1], system)
    with pytest.raises(ValueError):
        poincare(reports + [reports[0]], system)


@pytest.mark.parametrize("system", [
    RootSystemId("A", 2), RootSystemId("B", 2),
    RootSystemId("C", 2), RootSystemId("D", 3),
], ids=str)
def test_regular_springer_fiber_is_a_point(system):
    result = pave(RegularNilpotent(), system, borel_space(system))
    assert result.polynomial == PoincarePolynomial(((0, 1),))


@pytest.mark.parametrize("system", [
    RootSystemId("A", 2), RootSystemId("B", 2),
    RootSystemId("C", 2), RootSystemId("D", 3),
], ids=str)
def test_full_space_gives_flag_variety(system):
    # whole flag variety: cell dims are the Bruhat lengths
    expected = {}
    for w in enumerate_weyl(system):
        expected[2 * w.length()] = expected.get(2 * w.length(), 0) + 1
    result = pave(RegularNilpotent(), system, full_space(system))
    assert result.polynomial == PoincarePolynomial(tuple(sorted(expected.items())))


def test_peterson_variety_betti_numbers():
    a2 = RootSystemId("A", 2)
    result = pave(RegularNilpotent(), a2, peterson_space(a2))
    assert str(result.polynomial) == "1 + 2x^2 + x^4"
    a3 = RootSystemId("A", 3)
    result = pave(RegularNilpotent(), a3, peterson_space(a3))
    assert str(result.polynomial) == "1 + 3x^2 + 3x^4 + x^6"


def test_regular_semisimple_peterson_counts_descents():
    # h = (2, 3, ..., n, n): Betti numbers are the Eulerian numbers
    a2 = RootSystemId("A", 2)
    result = pave(SemisimpleClassical(()), a2, peterson_space(a2))
    assert result.polynomial.as_list() == [1, 0, 4, 0, 1]


def test_semisimple_levi_block_dims():
    # S with a1(S) = 0 in A2, H = Borel: dims alternate over the six cells
    a2 = RootSystemId("A", 2)
    result = pave(SemisimpleClassical(((1,),)), a2, borel_space(a2))
    dims = [r.dim for r in result.reports]
    assert sorted(dims) == [0, 0, 0, 1, 1, 1]
    assert all(r.nonempty for r in result.reports)


def test_three_paths_agree_on_a_nilpotent_paving():
    system = RootSystemId("A", 3)
    spec = TypeANilpotent((2, 2))
    H = from_h(HessFunction((2, 3, 4, 4)))
    by_formula = pave(spec, system, H, method="formula")
    by_tableau = pave(spec, system, H, method="tableau")
    by_oracle = pave(spec, system, H, method="oracle", trials=3, seed=11)
    key = lambda res: [(r.pi, r.nonempty, r.dim) for r in res.reports]
    assert key(by_formula) == key(by_tableau) == key(by_oracle)
    assert by_formula.polynomial == by_tableau.polynomial == by_oracle.polynomial


def test_typeA_general_equal_blocks_are_interchangeable():
    system = RootSystemId("A", 3)
    H = from_h(HessFunction((2, 3, 4, 4)))
    p1 = pave(TypeAGeneral((("x", (2,)), ("y", (1, 1)))), system, H)
    p2 = pave(TypeAGeneral((("y", (1, 1)), ("x", (2,)))), system, H)
    assert p1.polynomial == p2.polynomial


def test_monotonicity_in_the_hessenberg_space():
    # growing H keeps nonempty cells nonempty and never shrinks them
    system = RootSystemId("A", 2)
    spec = RegularNilpotent()
    spaces = enumerate_spaces(system)
    results = {H: pave(spec, system, H) for H in spaces}
    for H, K in itertools.product(spaces, spaces):
        if not set(H.roots) <= set(K.roots):
            continue
        for rh, rk in zip(results[H].reports, results[K].reports):
            if rh.nonempty:
                assert rk.nonempty and rh.dim <= rk.dim


def test_parallel_pave_matches_serial():
    system = RootSystemId("B", 2)
    H = peterson_space(system)
    serial = pave(RegularNilpotent(), system, H, jobs=1)
    parallel = pave(RegularNilpotent(), system, H, jobs=2)
    assert serial == parallel


def test_oracle_disagreement_carries_pi(monkeypatch):
    import hesspave.paving as paving_mod
    from hesspave.orbit_oracle import INCONSISTENT

    system = RootSystemId("A", 2)
    monkeypatch.setattr(paving_mod, "cell_dim_oracle",
                        lambda *a, **k: INCONSISTENT)
    w = WeylElement(system, (2, 1, 3))
    with pytest.raises(OracleDisagreement) as err:
        paving_mod.cell_oracle(RegularNilpotent(), system,
                               borel_space(system), w)
    assert err.value.pi == w


def test_labels():
    assert spec_label(RegularNilpotent()) == "regular-nilpotent"
    assert spec_label(TypeANilpotent((2, 1))) == "nilpotent:2,1"
    assert spec_label(SemisimpleClassical(())) == "semisimple:regular"
    assert spec_label(SemisimpleClassical(((1, 2), (4,)))) == "semisimple:1,2;4"
    assert spec_label(TypeAGeneral((("x", (2,)),))) == "general:x:2"
    a2 = RootSystemId("A", 2)
    assert hess_label(borel_space(a2)) == {"h": "1,2,3"}
    b2 = RootSystemId("B", 2)
    assert "M_H" in hess_label(borel_space(b2))


def test_result_json_shape():
    system = RootSystemId("A", 2)
    H = peterson_space(system)
    result = pave(RegularNilpotent(), system, H)
    obj = json.loads(result_to_json(RegularNilpotent(), H, result))
    assert obj["type"] == "A" and obj["rank"] == 2
    assert obj["operator"] == "regular-nilpotent"
    assert obj["h"] == "2,3,3"
    assert len(obj["cells"]) == 6
    assert obj["poincare"] == [1, 0, 2, 0, 1]
    empty = [c for c in obj["cells"] if not c["nonempty"]]
    assert all("dim" not in c for c in empty)


def test_unknown_method_rejected():
    system = RootSystemId("A", 2)
    with pytest.raises(ValueError):
        cell_report(RegularNilpotent(), system, borel_space(system),
                    identity(system), method="guess")
