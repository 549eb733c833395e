#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gauge.hpp"

using namespace lgt;

namespace {
Factor C(int n) { return {FactorKind::CYCLE, n}; }
Factor P(int n) { return {FactorKind::PATH, n}; }
Factor T(int n) { return {FactorKind::TIME, n}; }

SpacetimeObject obj(std::vector<Factor> fs, int k, int l, std::vector<Rat> flux = {}) {
    auto cx = std::make_shared<CubicalComplex>(std::move(fs), 1);
    return make_object("test", cx, make_group(k, l), flux);
}

std::uint64_t rng_state = 0xa4093822299f31d0ull;
std::uint64_t rnd() {
    rng_state ^= rng_state >> 12;
    rng_state ^= rng_state << 25;
    rng_state ^= rng_state >> 27;
    return rng_state * 0x2545f4914f6cdd1dull;
}
}  // namespace

TEST_CASE("obstruction group vanishes for G = R") {
    SpacetimeObject o = obj({T(4), C(5)}, 0, 1);
    ObstructionGroup a = gauge_group_obstruction(o);
    CHECK(a.free_rank == 0);
    CHECK(a.torsion.empty());
}

TEST_CASE("obstruction group of U(1) on TIME(6)xCYCLE(8) has free rank 1") {
    SpacetimeObject o = obj({T(6), C(8)}, 1, 0);
    CHECK(gauge_group_obstruction(o).free_rank == 1);
}

TEST_CASE("obstruction group of U(1)^2 on the spatial torus has free rank 4") {
    SpacetimeObject o = obj({T(4), C(4), C(4)}, 2, 0);
    CHECK(gauge_group_obstruction(o).free_rank == 4);
}

TEST_CASE("curvature: A = 0 gives F0, exact A gives F0, and dF = 0 always") {
    SpacetimeObject o = obj({T(4), C(4), C(4)}, 1, 0, {Rat(1)});
    Connection ref = reference_connection(o);
    CHECK(curvature(ref).comp[0] == o.F0.comp[0]);
    Cochain chi(*o.cx, 0, 1);
    for (int i = 0; i < o.cx->num_cells(0); ++i)
        chi.comp[0][i] = Rat(static_cast<long>(rnd() % 11) - 5);
    Connection gauged = ref;
    gauged.A = d(chi);
    CHECK(curvature(gauged).comp[0] == o.F0.comp[0]);
    Connection random = ref;
    for (int i = 0; i < o.n1(); ++i)
        random.A.comp[0][i] = Rat(static_cast<long>(rnd() % 11) - 5);
    CHECK(is_zero(o.cx->d(2).apply(curvature(random).comp[0])));
}

TEST_CASE("maxwell: zero at the reference, zero for closed A, assembled two ways otherwise") {
    SpacetimeObject o = obj({T(4), C(4), C(4)}, 1, 0, {Rat(2)});
    Connection ref = reference_connection(o);
    CHECK(maxwell(ref).zero());
    Connection random = ref;
    for (int i = 0; i < o.n1(); ++i)
        random.A.comp[0][i] = Rat(static_cast<long>(rnd() % 11) - 5);
    DVec independent = o.ops->delta(2).apply(o.F0.comp[0]);
    DVec dda = o.ops->delta(2).apply(o.cx->d(1).apply(random.A.comp[0]));
    for (int i = 0; i < o.n1(); ++i) independent[i] += dda[i];
    CHECK(maxwell(random).comp[0] == independent);
}

TEST_CASE("background curvature carries the prescribed flux and is closed and coclosed") {
    SpacetimeObject o = obj({T(4), C(4), C(4)}, 1, 0, {Rat(2)});
    CHECK(is_zero(o.cx->d(2).apply(o.F0.comp[0])));
    CHECK(is_zero(o.ops->delta(2).apply(o.F0.comp[0])));
    HomologyGroup h2 = homology(*o.cx, 2, Coefficients::RAT);
    REQUIRE(h2.free_rank == 1);
    Rat val = deRham_J(*o.ops, 2, o.F0.comp[0], h2.cycle_reps[0]);
    CHECK((val == 2 || val == -2));
}

TEST_CASE("gauge transformations: exact directions keep holonomy, integral ones shift by 2pi") {
    SpacetimeObject o = obj({T(5), C(6)}, 1, 0);
    GaugeDirections gd = gauge_directions(o);
    REQUIRE(!gd.integral_closed.empty());
    HomologyGroup h1 = homology(*o.cx, 1, Coefficients::RAT);
    REQUIRE(h1.free_rank == 1);
    DVec sigma = h1.cycle_reps[0];
    Connection ref = reference_connection(o);
    Rat before = deRham_J(*o.ops, 1, ref.A.comp[0], sigma);
    Connection shifted = apply_gauge(ref, 0, gd.integral_closed[0]);
    Rat after = deRham_J(*o.ops, 1, shifted.A.comp[0], sigma);
    // 2pi units: an integral generator moves the holonomy by a whole unit
    Rat diff = after - before;
    CHECK(diff != 0);
    CHECK(diff.get_den() == 1);
    // exact directions change nothing
    Cochain chi(*o.cx, 0, 1);
    chi.comp[0][o.cx->num_cells(0) / 2] = 3;
    Connection exact = ref;
    exact.A = d(chi);
    CHECK(deRham_J(*o.ops, 1, exact.A.comp[0], sigma) == before);
}

TEST_CASE("make_object validates flux integrality on torus components") {
    auto cx = std::make_shared<CubicalComplex>(std::vector<Factor>{T(4), C(4), C(4)}, 1);
    CHECK_THROWS(make_object("bad", cx, make_group(1, 0), {Rat(1, 3)}));
}
