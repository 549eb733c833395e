#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "functor.hpp"

using namespace lgt;

namespace {
Factor C(int n) { return {FactorKind::CYCLE, n}; }
Factor P(int n) { return {FactorKind::PATH, n}; }
Factor T(int n) { return {FactorKind::TIME, n}; }

SpacetimeObject obj(std::vector<Factor> fs, int k, int l, std::vector<Rat> flux = {}) {
    auto cx = std::make_shared<CubicalComplex>(std::move(fs), 1);
    return make_object("test", cx, make_group(k, l), flux);
}

std::uint64_t rng_state = 0x082efa98ec4e6c89ull;
std::uint64_t rnd() {
    rng_state ^= rng_state >> 12;
    rng_state ^= rng_state << 25;
    rng_state ^= rng_state >> 27;
    return rng_state * 0x2545f4914f6cdd1dull;
}
CRat crnd() {
    return CRat(Rat(static_cast<long>(rnd() % 7) - 3), Rat(static_cast<long>(rnd() % 7) - 3));
}
}  // namespace

TEST_CASE("morphisms require matching group signatures") {
    SpacetimeObject a = obj({T(4), C(5)}, 1, 0);
    SpacetimeObject b = obj({T(6), C(5)}, 0, 1);
    CHECK_THROWS_AS(make_morphism(a, b, {1, 0}), std::invalid_argument);
}

TEST_CASE("pushforward: zero maps to zero, restriction then pushforward is the identity") {
    SpacetimeObject sub = obj({T(4), C(5)}, 1, 0);
    SpacetimeObject amb = obj({T(7), C(5)}, 1, 0);
    Morphism f = make_morphism(sub, amb, {2, 0});
    Observable z;
    z.c = 0;
    z.alpha = Cochain(*sub.cx, 1, 1);
    CHECK(is_zero(push_flat(f, flatten(sub, z))));
    // an ambient observable supported on the image pulls back and pushes back
    Observable amb_o;
    amb_o.c = Rat(2);
    amb_o.alpha = Cochain(*amb.cx, 1, 1);
    for (int i = 0; i < sub.n1(); ++i)
        amb_o.alpha.comp[0][f.embedding.cell_map[1][i]] = Rat(static_cast<long>(rnd() % 7) - 3);
    Observable restricted;
    restricted.c = amb_o.c;
    restricted.alpha = f.embedding.pull(1, amb_o.alpha);
    Observable back = pushforward(f, restricted);
    CHECK(back.c == amb_o.c);
    CHECK(back.alpha.comp[0] == amb_o.alpha.comp[0]);
}

TEST_CASE("identity morphism induces the identity phase-space map") {
    SpacetimeObject o = obj({T(5), C(4)}, 1, 0);
    Morphism f = make_morphism(o, o, {0, 0});
    PhaseSpace ps = phase_space(o, Variant::STANDARD);
    PhspMap m = phsp_map(f, ps, ps);
    int n = static_cast<int>(ps.coset_reps.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(m.matrix.get(i, j) == (i == j ? 1 : 0));
    CHECK(m.kernel_dim() == 0);
    CHECK(m.preserves_tau());
}

TEST_CASE("functoriality: the map of a composite is the composite of the maps") {
    SpacetimeObject a = obj({T(3), C(5)}, 1, 0);
    SpacetimeObject b = obj({T(5), C(5)}, 1, 0);
    SpacetimeObject c = obj({T(8), C(5)}, 1, 0);
    Morphism f = make_morphism(a, b, {1, 0});
    Morphism g = make_morphism(b, c, {2, 0});
    Morphism gf = make_morphism(a, c, {3, 0});
    PhaseSpace pa = phase_space(a, Variant::STANDARD);
    PhaseSpace pb = phase_space(b, Variant::STANDARD);
    PhaseSpace pc = phase_space(c, Variant::STANDARD);
    RatMatrix lhs = phsp_map(gf, pa, pc).matrix;
    RatMatrix rhs = phsp_map(g, pb, pc).matrix.mul(phsp_map(f, pa, pb).matrix);
    CHECK(lhs.rows == rhs.rows);
    CHECK(lhs.cols == rhs.cols);
    for (int i = 0; i < lhs.rows; ++i)
        for (int j = 0; j < lhs.cols; ++j) CHECK(lhs.get(i, j) == rhs.get(i, j));
}

TEST_CASE("slab embeddings preserve tau in both variants") {
    SpacetimeObject sub = obj({T(4), C(5)}, 1, 0);
    SpacetimeObject amb = obj({T(8), C(5)}, 1, 0);
    Morphism f = make_morphism(sub, amb, {2, 0});
    for (auto var : {Variant::STANDARD, Variant::CHARGE_ZERO}) {
        PhaseSpace ps = phase_space(sub, var);
        PhaseSpace pa = phase_space(amb, var);
        PhspMap m = phsp_map(f, ps, pa);
        CHECK(m.preserves_tau());
        CHECK(m.kernel_dim() == 0);
    }
}

TEST_CASE("overlapping images are rejected by the causality check") {
    SpacetimeObject blk = obj({T(4), C(5)}, 1, 0);
    SpacetimeObject amb = obj({T(8), C(5)}, 1, 0);
    Morphism f1 = make_morphism(blk, amb, {1, 0});
    Morphism f2 = make_morphism(blk, amb, {2, 0});
    PhaseSpace p = phase_space(blk, Variant::STANDARD);
    CHECK_THROWS_AS(check_causality(f1, f2, p, p), std::invalid_argument);
}

TEST_CASE("CCR: defining relation on generator pairs") {
    SpacetimeObject o = obj({T(5), C(4)}, 1, 0);
    PhaseSpace ps = phase_space(o, Variant::STANDARD);
    CCRAlgebra alg(ps);
    int n = alg.generators();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CCRElement lhs = alg.commutator(alg.generator(i), alg.generator(j));
            CCRElement rhs = alg.scale(alg.unit(), CRat(Rat(0), alg.tau(i, j)));
            CHECK(alg.add(lhs, alg.scale(rhs, CRat(Rat(-1)))).terms.empty());
        }
}

TEST_CASE("CCR: associativity and star anti-homomorphism on random elements") {
    SpacetimeObject o = obj({T(5), C(4)}, 1, 0);
    PhaseSpace ps = phase_space(o, Variant::STANDARD);
    CCRAlgebra alg(ps);
    int n = alg.generators();
    REQUIRE(n >= 1);
    auto rand_elem = [&]() {
        CCRElement e;
        e.alg = &alg;
        for (int t = 0; t < 3; ++t) {
            CCRElement term = alg.scale(alg.unit(), crnd());
            for (int g = 0; g < static_cast<int>(rnd() % 3); ++g)
                term = alg.multiply(term, alg.generator(static_cast<int>(rnd() % n)));
            e = alg.add(e, term);
        }
        return e;
    };
    for (int s = 0; s < 25; ++s) {
        CCRElement a = rand_elem(), b = rand_elem(), c = rand_elem();
        CCRElement lhs = alg.multiply(alg.multiply(a, b), c);
        CCRElement rhs = alg.multiply(a, alg.multiply(b, c));
        CHECK(alg.add(lhs, alg.scale(rhs, CRat(Rat(-1)))).terms.empty());
        CCRElement star_ab = alg.star(alg.multiply(a, b));
        CCRElement ba = alg.multiply(alg.star(b), alg.star(a));
        CHECK(alg.add(star_ab, alg.scale(ba, CRat(Rat(-1)))).terms.empty());
        CCRElement ss = alg.star(alg.star(a));
        CHECK(alg.add(ss, alg.scale(a, CRat(Rat(-1)))).terms.empty());
    }
}
