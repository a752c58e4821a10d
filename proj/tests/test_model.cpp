#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ocdd/csv.hpp"
#include "ocdd/model.hpp"

#include "support/oracle_constants.hpp"

#include <cmath>
#include <random>
#include <sstream>

using namespace ocdd;

namespace {

GridFunction1D random_field(const Mesh1D& mesh, std::mt19937_64& rng, bool pin_boundary) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    GridFunction1D f(mesh.n_nodes());
    for (int j = 0; j < mesh.n_nodes(); ++j) f(j) = unif(rng);
    if (pin_boundary) f(0) = f(mesh.n_cells) = 0.0;
    return f;
}

double manufactured_error_1d(double nu, int n) {
    const Mesh1D mesh{n};
    GridFunction1D target(mesh.n_nodes());
    for (int j = 0; j < mesh.n_nodes(); ++j)
        target(j) = (nu * M_PI * M_PI + 1.0) * std::sin(M_PI * mesh.node(j));
    const Problem1D problem{nu, uniform_kappa(mesh), target};
    const GridFunction1D y = solve_monolithic_h1(problem, mesh);
    double err = 0.0;
    for (int j = 0; j < mesh.n_nodes(); ++j)
        err = std::max(err, std::abs(y(j) - std::sin(M_PI * mesh.node(j))));
    return err;
}

double manufactured_error_2d(double nu, int n) {
    const Mesh2D mesh{n};
    GridFunction2D target(mesh.n_nodes(), mesh.n_nodes());
    for (int i = 0; i < mesh.n_nodes(); ++i)
        for (int j = 0; j < mesh.n_nodes(); ++j)
            target(i, j) = (2.0 * nu * M_PI * M_PI + 1.0) * std::sin(M_PI * mesh.node(i)) *
                           std::sin(M_PI * mesh.node(j));
    const Problem2D problem{nu, uniform_kappa(mesh), target};
    const GridFunction2D y = solve_monolithic_h1(problem, mesh);
    double err = 0.0;
    for (int i = 0; i < mesh.n_nodes(); ++i)
        for (int j = 0; j < mesh.n_nodes(); ++j)
            err = std::max(err, std::abs(y(i, j) - std::sin(M_PI * mesh.node(i)) *
                                                       std::sin(M_PI * mesh.node(j))));
    return err;
}

} // namespace

TEST_CASE("zero target gives the zero state") {
    const Mesh1D mesh{32};
    const Problem1D problem = make_problem(mesh, 0.37, "zero");
    CHECK(solve_monolithic_h1(problem, mesh).cwiseAbs().maxCoeff() == 0.0);

    const Mesh2D mesh2{12};
    const Problem2D problem2 = make_problem(mesh2, 2.0, "zero");
    CHECK(solve_monolithic_h1(problem2, mesh2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("manufactured solution converges at second order") {
    for (double nu : {1.0, 0.25}) {
        const double ratio = manufactured_error_1d(nu, 64) / manufactured_error_1d(nu, 128);
        CHECK(ratio == doctest::Approx(4.0).epsilon(0.10));
    }
    const double ratio2 = manufactured_error_2d(1.0, 16) / manufactured_error_2d(1.0, 32);
    CHECK(ratio2 == doctest::Approx(4.0).epsilon(0.10));
}

TEST_CASE("operator is positive definite across nu") {
    const Mesh1D mesh{32};
    std::mt19937_64 rng(5);
    for (double nu : {1e-6, 1.0, 1e6}) {
        const Problem1D problem{nu, uniform_kappa(mesh), make_target(mesh, "zero")};
        for (int trial = 0; trial < 50; ++trial) {
            const GridFunction1D v = random_field(mesh, rng, true);
            const GridFunction1D lv = apply_diffusion(problem.kappa, mesh, v);
            double q = 0.0;
            for (int j = 1; j < mesh.n_cells; ++j) q += v(j) * (nu * lv(j) + v(j));
            CHECK(q > 0.0);
        }
    }
}

TEST_CASE("coupled solve: zero target gives zero triple") {
    const Mesh1D mesh{24};
    const Problem1D problem = make_problem(mesh, 1.0, "zero");
    const KktSolution1D sol = solve_monolithic_l2_kkt(problem, mesh);
    CHECK(sol.y.cwiseAbs().maxCoeff() == 0.0);
    CHECK(sol.p.cwiseAbs().maxCoeff() == 0.0);
    CHECK(sol.u.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("coupled solve satisfies its three rows") {
    const Mesh1D mesh{80};
    std::mt19937_64 rng(11);
    Problem1D problem{0.7, uniform_kappa(mesh), random_field(mesh, rng, false)};
    const KktSolution1D sol = solve_monolithic_l2_kkt(problem, mesh);

    const GridFunction1D state_res = apply_diffusion(problem.kappa, mesh, sol.y) - sol.u;
    const GridFunction1D adj_res =
        apply_diffusion(problem.kappa, mesh, sol.p) - (sol.y - problem.target);
    const double scale = sol.u.cwiseAbs().maxCoeff() + 1.0;
    for (int j = 1; j < mesh.n_cells; ++j) {
        CHECK(std::abs(state_res(j)) <= 1e-10 * scale);
        CHECK(std::abs(adj_res(j)) <= 1e-10 * scale);
        CHECK(std::abs(sol.p(j) + problem.nu * sol.u(j)) <= 1e-10 * scale);
    }
}

TEST_CASE("coupled solve minimizes the discrete cost") {
    const Mesh1D mesh{64};
    const Problem1D problem = make_problem(mesh, 0.5, "bump");
    const KktSolution1D sol = solve_monolithic_l2_kkt(problem, mesh);
    const double best = cost(problem, mesh, sol.y, sol.u, CostMode::L2);

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        GridFunction1D du = GridFunction1D::Zero(mesh.n_nodes());
        const double scale = trial % 2 == 0 ? 0.5 : 1e-3;
        for (int j = 1; j < mesh.n_cells; ++j) du(j) = scale * unif(rng);
        const GridFunction1D u_try = sol.u + du;
        const GridFunction1D y_try = solve_state(problem.kappa, mesh, u_try);
        CHECK(cost(problem, mesh, y_try, u_try, CostMode::L2) >= best - 1e-12);
    }
}

TEST_CASE("control recovery") {
    const Mesh1D mesh{48};
    SUBCASE("zero case") {
        const Problem1D problem = make_problem(mesh, 1.0, "zero");
        const GridFunction1D u =
            recover_control_h1(problem, mesh, GridFunction1D::Zero(mesh.n_nodes()));
        CHECK(u.cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("pointwise definition") {
        Problem1D problem = make_problem(mesh, 2.0, "zero");
        problem.target = GridFunction1D::Ones(mesh.n_nodes());
        const GridFunction1D u =
            recover_control_h1(problem, mesh, GridFunction1D::Zero(mesh.n_nodes()));
        CHECK(u(mesh.n_cells / 2) == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("recovered control equals the applied operator") {
        for (const char* target : {"bump", "sine"}) {
            Problem1D problem = make_problem(mesh, 0.35, target);
            // non-uniform conductivity as well
            for (int c = 0; c < mesh.n_cells; ++c)
                problem.kappa(c) = c < mesh.n_cells / 2 ? 2.0 : 0.5;
            const GridFunction1D y = solve_monolithic_h1(problem, mesh);
            const GridFunction1D u = recover_control_h1(problem, mesh, y);
            const GridFunction1D lu = apply_diffusion(problem.kappa, mesh, y);
            for (int j = 1; j < mesh.n_cells; ++j) CHECK(std::abs(lu(j) - u(j)) <= 1e-10);
        }
    }
}

TEST_CASE("cost evaluation") {
    const Mesh1D mesh{64};
    SUBCASE("perfect match with no control costs nothing") {
        const Problem1D problem = make_problem(mesh, 1.0, "bump");
        CHECK(cost(problem, mesh, problem.target, GridFunction1D::Zero(mesh.n_nodes()),
                   CostMode::L2) == 0.0);
        CHECK(cost(problem, mesh, problem.target, GridFunction1D::Zero(mesh.n_nodes()),
                   CostMode::Hminus1) == 0.0);
    }
    SUBCASE("trapezoid is exact for a constant control") {
        const Problem1D problem = make_problem(mesh, 2.0, "bump");
        const double j = cost(problem, mesh, problem.target, GridFunction1D::Ones(mesh.n_nodes()),
                              CostMode::L2);
        CHECK(std::abs(j - 1.0) <= 1e-12);
    }
    SUBCASE("energy norm of a manufactured control") {
        // u = pi^2 sin(pi x) drives w = sin(pi x); energy integral is pi^2/2
        auto energy_of = [](int n) {
            const Mesh1D m{n};
            const Problem1D problem = make_problem(m, 2.0, "zero");
            GridFunction1D u(m.n_nodes());
            for (int j = 0; j < m.n_nodes(); ++j)
                u(j) = M_PI * M_PI * std::sin(M_PI * m.node(j));
            const double c = cost(problem, m, problem.target, u, CostMode::Hminus1);
            return 2.0 * c / problem.nu;  // strip the nu/2 weight
        };
        const double e1 = energy_of(64), e2 = energy_of(128);
        const double gap1 = std::abs(e1 - oracle::half_pi_squared);
        const double gap2 = std::abs(e2 - oracle::half_pi_squared);
        CHECK(gap1 / gap2 == doctest::Approx(4.0).epsilon(0.10));
        CHECK(gap2 < 1e-3);
    }
}

TEST_CASE("the two regularizations recover different controls") {
    const Mesh1D mesh{256};
    const Problem1D problem = make_problem(mesh, 1.0, "bump");
    const KktSolution1D l2 = solve_monolithic_l2_kkt(problem, mesh);
    const GridFunction1D y_h1 = solve_monolithic_h1(problem, mesh);
    const GridFunction1D u_h1 = recover_control_h1(problem, mesh, y_h1);
    CHECK(l2_norm(mesh, l2.u - u_h1) > 1e-3);
}

TEST_CASE("input validation") {
    const Mesh1D mesh{16};
    CHECK_THROWS_AS(Mesh1D{3}.validate(), std::invalid_argument);
    CHECK_THROWS_AS(Decomposition{1}.validate(16), std::invalid_argument);
    CHECK_THROWS_AS(Decomposition{15}.validate(16), std::invalid_argument);

    Problem1D bad = make_problem(mesh, 1.0, "zero");
    bad.target(3) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(solve_monolithic_h1(bad, mesh), std::invalid_argument);

    Problem1D neg = make_problem(mesh, 1.0, "zero");
    neg.kappa(2) = -1.0;
    CHECK_THROWS_AS(solve_monolithic_h1(neg, mesh), std::invalid_argument);

    Problem1D wrong = make_problem(mesh, 1.0, "zero");
    CHECK_THROWS_AS(recover_control_h1(wrong, mesh, GridFunction1D::Zero(7)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_target(mesh, "plateau"), std::invalid_argument);
    CHECK_THROWS_AS((Problem1D{-1.0, uniform_kappa(mesh), make_target(mesh, "zero")}.validate(mesh)),
                    std::invalid_argument);
}

TEST_CASE("grid-function CSV round trip is bit exact") {
    std::mt19937_64 rng(31);
    const Mesh1D mesh{20};
    const GridFunction1D g = random_field(mesh, rng, false);
    std::stringstream ss;
    csv::write_grid_function(ss, mesh, g);
    const GridFunction1D back = csv::read_grid_function(ss, mesh);
    for (int j = 0; j < mesh.n_nodes(); ++j) CHECK(back(j) == g(j));

    const Mesh2D mesh2{7};
    GridFunction2D g2(mesh2.n_nodes(), mesh2.n_nodes());
    std::uniform_real_distribution<double> unif(-10.0, 10.0);
    for (int i = 0; i < mesh2.n_nodes(); ++i)
        for (int j = 0; j < mesh2.n_nodes(); ++j) g2(i, j) = unif(rng);
    std::stringstream ss2;
    csv::write_grid_function(ss2, mesh2, g2);
    const GridFunction2D back2 = csv::read_grid_function(ss2, mesh2);
    CHECK((back2 - g2).cwiseAbs().maxCoeff() == 0.0);
}
