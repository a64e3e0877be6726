"""End-to-end smoke tests for the python bindings.

These keep runs tiny; the heavy numerical validation lives in the C++ unit
and acceptance suites. What is checked here is that the bound surface works:
catalog, initialization from a Python callable, advancement, limiting,
moments, and error measurement against a closed form.
"""

import math

import pytest

import pbedg


def test_catalog_lists_all_cases():
    ids = pbedg.case_ids()
    assert len(ids) == 8
    assert "sum-agg" in ids and "coupled-steady" in ids
    for case_id in ids:
        case = pbedg.make_case(case_id)
        assert case.id == case_id
        assert case.description


def test_unknown_case_raises():
    with pytest.raises(pbedg.SolverError):
        pbedg.make_case("no-such-case")


def test_geometric_mesh_shape():
    mesh = pbedg.Mesh.geometric(15, 1e-3)
    assert mesh.cells == 15
    assert mesh.interface(0) == 0.0
    assert mesh.interface(1) == pytest.approx(1e-3)
    # constant ratio between successive interior interfaces
    r = mesh.interface(2) / mesh.interface(1)
    for i in range(2, 15):
        assert mesh.interface(i + 1) / mesh.interface(i) == pytest.approx(r)


def test_initialize_projects_callable():
    mesh = pbedg.Mesh.geometric(20, 1e-3)
    rule = pbedg.QuadratureRule.gauss(2)
    state = pbedg.initialize(lambda x: x * math.exp(-x), mesh, 1, rule)
    assert state.cells == 20
    assert all(a > 0.0 for a in state.averages())
    # total mass of x e^{-x} on (0, inf) is 1; the truncated mesh holds
    # essentially all of it
    mass = pbedg.moments(state, mesh)[1]
    assert mass == pytest.approx(1.0, rel=1e-6)


def test_advance_conserves_breakage_mass():
    case = pbedg.make_case("binlin-brk")
    mesh = pbedg.Mesh.geometric(20, case.x_min)
    rule = pbedg.QuadratureRule.gauss(2)
    tables = pbedg.build_breakage_tables(mesh, rule, case.kernels)
    state = pbedg.initialize(case.initial, mesh, 1, rule)

    config = pbedg.RunConfig()
    config.t_end = 1e-3
    config.dt_initial = 1e-4
    state, trace = pbedg.advance(state, mesh, rule, case.kernels, tables, config)
    assert state.time == pytest.approx(1e-3)
    assert trace.steps >= 10
    assert trace.final_mass == pytest.approx(trace.initial_mass, rel=1e-12)
    assert trace.boundary_outflux == 0.0


def test_error_against_closed_form_shrinks_with_resolution():
    case = pbedg.make_case("coupled-steady")
    rule = pbedg.QuadratureRule.gauss(2)
    errors = []
    for cells in (15, 30):
        mesh = pbedg.Mesh.geometric(cells, case.x_min)
        tables = pbedg.build_breakage_tables(mesh, rule, case.kernels)
        state = pbedg.initialize(case.initial, mesh, 1, rule)
        config = pbedg.RunConfig()
        config.t_end = 1e-3
        config.dt_initial = 1e-4
        state, _ = pbedg.advance(state, mesh, rule, case.kernels, tables, config)
        errors.append(
            pbedg.error_continuous(state, mesh, lambda x: case.solution(x, state.time))
        )
    assert errors[1] < errors[0]
    assert pbedg.eoc(errors[0], errors[1]) > 1.0


def test_limiter_restores_nonnegativity():
    mesh = pbedg.Mesh.from_interfaces([0.0, 1.0])
    rule = pbedg.QuadratureRule.gauss(2)
    state = pbedg.DGState(1, 1)
    state.set_coefficient(0, 0, 1.0)
    state.set_coefficient(0, 1, 2.0)  # dips to -1 at the left edge
    limited, report = pbedg.limit_state(state, mesh, rule)
    assert report.touched == 1
    assert report.min_theta == pytest.approx(0.5)
    assert limited.cell_average(0) == 1.0
    assert limited.eval_ref(0, -1.0) >= -1e-15


def test_cfl_bound_keeps_step_positive():
    case = pbedg.make_case("sum-agg")
    mesh = pbedg.Mesh.geometric(15, case.x_min)
    rule = pbedg.QuadratureRule.gauss(2)
    tables = pbedg.build_breakage_tables(mesh, rule, case.kernels)
    state = pbedg.initialize(case.initial, mesh, 1, rule)
    bound = pbedg.cfl_max_dt(state, mesh, rule, case.kernels, tables)
    assert bound > 1e-5


def test_nonconvergent_run_raises_solver_error():
    case = pbedg.make_case("sum-agg")
    mesh = pbedg.Mesh.geometric(15, case.x_min)
    rule = pbedg.QuadratureRule.gauss(2)
    tables = pbedg.build_breakage_tables(mesh, rule, case.kernels)
    state = pbedg.initialize(case.initial, mesh, 1, rule)
    config = pbedg.RunConfig()
    config.t_end = 1e6
    config.dt_initial = 1e6  # absurdly above the positivity bound
    config.max_halvings = 1  # and no budget to halve back below it
    with pytest.raises(pbedg.SolverError):
        pbedg.advance(state, mesh, rule, case.kernels, tables, config)
