#include <doctest.h>

#include "oracles.hpp"
#include "vw/finposet.hpp"

using namespace vw;

TEST_CASE("from_pairs closes a chain") {
    FinPoset p = FinPoset::from_pairs(3, {{0, 1}, {1, 2}});
    CHECK(p.leq(0, 2)); // transitive closure
    CHECK(p == FinPoset::chain(3));
}

TEST_CASE("from_pairs with no generators is discrete") {
    FinPoset p = FinPoset::from_pairs(2, {});
    CHECK(p.is_discrete());
    CHECK_FALSE(p.leq(0, 1));
}

TEST_CASE("from_pairs rejects cycles") {
    CHECK_THROWS_AS(FinPoset::from_pairs(2, {{0, 1}, {1, 0}}), CycleError);
    CHECK_THROWS_AS(FinPoset::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}}), CycleError);
}

TEST_CASE("from_pairs rejects out-of-range generators") {
    CHECK_THROWS_AS(FinPoset::from_pairs(2, {{0, 5}}), ParseError);
}

TEST_CASE("closures on the 3-chain") {
    FinPoset p = FinPoset::chain(3);
    CHECK(p.up(0b010) == 0b110); // up of {1} is {1,2}
    CHECK(p.down(0b010) == 0b011);
    CHECK(p.convex(0b101) == 0b111); // {0,2} fills in the middle
    CHECK(p.up(0) == 0);
    CHECK(p.convex(0b011) == 0b011); // already convex
}

TEST_CASE("closures on a discrete poset do nothing") {
    FinPoset p = FinPoset::discrete(4);
    for (Mask s = 0; s <= p.universe(); ++s) {
        CHECK(p.up(s) == s);
        CHECK(p.down(s) == s);
        CHECK(p.convex(s) == s);
    }
}

TEST_CASE("closures agree with the definition scan on every small poset") {
    for (int n = 0; n <= 4; ++n)
        for (const FinPoset& p : enumerate_posets(n))
            for (Mask s = 0;; ++s) {
                CHECK(p.up(s) == oracle::up(p, s));
                CHECK(p.down(s) == oracle::down(p, s));
                CHECK(p.convex(s) == oracle::convex_hull(p, s));
                CHECK(p.is_convex(s) == oracle::is_convex(p, s));
                CHECK(p.is_upset(s) == oracle::is_upset(p, s));
                CHECK(p.is_downset(s) == oracle::is_downset(p, s));
                if (s == p.universe()) break;
            }
}

TEST_CASE("order-reflecting maps") {
    FinPoset two = FinPoset::discrete(2);
    FinPoset one = FinPoset::discrete(1);
    CHECK(MonotoneMap::identity(two).is_order_reflecting());
    MonotoneMap collapse = MonotoneMap::constant(two, one, 0);
    CHECK_FALSE(collapse.is_order_reflecting()); // f(a) <= f(b) but a, b incomparable
    FinPoset c2 = FinPoset::chain(2), c4 = FinPoset::chain(4);
    MonotoneMap incl(c2, c4, {1, 2});
    CHECK(incl.is_order_reflecting());
}

TEST_CASE("monotone map construction rejects bad tables") {
    FinPoset c2 = FinPoset::chain(2);
    FinPoset a2 = FinPoset::discrete(2);
    CHECK_THROWS_AS(MonotoneMap(c2, a2, {1, 0}), StructureError); // 0<=1 but 1 incomparable to 0
    CHECK_THROWS_AS(MonotoneMap(c2, c2, {0}), StructureError);    // short table
    CHECK_THROWS_AS(MonotoneMap(c2, c2, {0, 7}), StructureError); // out of range
}

TEST_CASE("equalizer of equal maps is everything") {
    FinPoset p = FinPoset::chain(3);
    MonotoneMap f = MonotoneMap::identity(p);
    EqualizerResult eq = equalizer(f, f);
    CHECK(eq.sub == p);
    CHECK(eq.inclusion.tbl == std::vector<int>{0, 1, 2});
}

TEST_CASE("equalizer can be empty") {
    FinPoset two = FinPoset::discrete(2);
    MonotoneMap f(two, two, {0, 0});
    MonotoneMap g(two, two, {1, 1});
    EqualizerResult eq = equalizer(f, g);
    CHECK(eq.sub.size() == 0);
}

TEST_CASE("equalizer picks out the agreement sub-poset") {
    FinPoset dom = FinPoset::chain(3);
    FinPoset cod = FinPoset::chain(4);
    MonotoneMap f(dom, cod, {0, 1, 3});
    MonotoneMap g(dom, cod, {0, 2, 3}); // agree exactly on {0, 2}
    EqualizerResult eq = equalizer(f, g);
    CHECK(eq.elements == std::vector<int>{0, 2});
    CHECK(eq.sub == FinPoset::chain(2));
    CHECK(eq.inclusion.is_order_reflecting());
}

TEST_CASE("opposite is an involution and swaps the closures") {
    for (int n = 0; n <= 4; ++n)
        for (const FinPoset& p : enumerate_posets(n)) {
            CHECK(p.opposite().opposite() == p);
            for (Mask s = 0;; ++s) {
                CHECK(p.opposite().up(s) == p.down(s));
                if (s == p.universe()) break;
            }
        }
    FinPoset c3 = FinPoset::chain(3);
    CHECK(c3.opposite().leq(2, 0));
    CHECK_FALSE(c3.opposite().leq(0, 2));
    FinPoset a3 = FinPoset::discrete(3);
    CHECK(a3.opposite() == a3);
}

TEST_CASE("coreflexive generator satisfies its contract") {
    for (std::uint64_t seed : {1ull, 7ull, 42ull, 1234567ull}) {
        CoreflexiveInstance inst = generate_coreflexive_pair(seed, 6);
        inst.require_valid();
        CHECK(inst.y.size() >= inst.x.size());
        CHECK(inst.y.size() <= 6);
        CoreflexiveInstance again = generate_coreflexive_pair(seed, 6);
        CHECK(inst.f == again.f);
        CHECK(inst.g == again.g);
        CHECK(inst.retraction == again.retraction);
    }
    CHECK_THROWS_AS(generate_coreflexive_pair(1, 0), GenerationError);
    CoreflexiveInstance tiny = generate_coreflexive_pair(3, 1);
    CHECK(tiny.x.size() == 1);
    CHECK(tiny.y.size() == 1);
}

TEST_CASE("hand-built coreflexive pair on a two-point fiber") {
    FinPoset x = FinPoset::discrete(1);
    FinPoset y = FinPoset::discrete(2);
    MonotoneMap f(x, y, {0});
    MonotoneMap g(x, y, {1});
    MonotoneMap k(y, x, {0, 0});
    CoreflexiveInstance inst{x, y, f, g, k};
    inst.require_valid();
}

TEST_CASE("require_valid rejects a broken retraction") {
    FinPoset x = FinPoset::discrete(2);
    FinPoset y = FinPoset::discrete(2);
    MonotoneMap f = MonotoneMap::identity(x);
    MonotoneMap g(x, y, {1, 0});
    MonotoneMap k(y, x, {0, 1});
    CoreflexiveInstance broken{x, y, f, g, k}; // k.g is the swap, not the identity
    CHECK_THROWS_AS(broken.require_valid(), PreconditionError);
}

TEST_CASE("labeled poset counts match the known sequence") {
    CHECK(enumerate_posets(0).size() == 1);
    CHECK(enumerate_posets(1).size() == 1);
    CHECK(enumerate_posets(2).size() == 3);
    CHECK(enumerate_posets(3).size() == 19);
    CHECK(enumerate_posets(4).size() == 219);
}

TEST_CASE("monotone table enumeration") {
    FinPoset c2 = FinPoset::chain(2);
    CHECK(enumerate_monotone_tables(c2, c2).size() == 3); // 00, 01, 11
    FinPoset a2 = FinPoset::discrete(2);
    CHECK(enumerate_monotone_tables(a2, a2).size() == 4);
    CHECK(enumerate_monotone_tables(FinPoset::discrete(0), c2).size() == 1);
    CHECK(enumerate_monotone_tables(c2, FinPoset::discrete(0)).empty());
}

TEST_CASE("product carries the componentwise order") {
    FinPoset c2 = FinPoset::chain(2);
    FinPoset prod = product(c2, c2);
    CHECK(prod.size() == 4);
    CHECK(prod.leq(0, 3));       // (0,0) <= (1,1)
    CHECK_FALSE(prod.leq(1, 2)); // (0,1) vs (1,0)
    CHECK(prod.leq(1, 3));
}

TEST_CASE("empty poset is legal everywhere") {
    FinPoset e = FinPoset::discrete(0);
    CHECK(e.size() == 0);
    CHECK(e.universe() == 0);
    CHECK(e.up(0) == 0);
    CHECK(e == FinPoset());
    CHECK(product(e, FinPoset::chain(2)).size() == 0);
}
