#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "vw/hyperspace.hpp"

using namespace vw;

TEST_CASE("convex hyperspace of the 3-chain") {
    Hyperspace h = build_hyperspace(Variant::Convex, FinPoset::chain(3));
    // every subset except {0,2}
    CHECK(h.elems == std::vector<Mask>{0b000, 0b001, 0b010, 0b011, 0b100, 0b110, 0b111});
    CHECK(h.elems == oracle::hyperspace_elems(Variant::Convex, FinPoset::chain(3)));
}

TEST_CASE("upper hyperspace of the V-shaped poset") {
    FinPoset v = FinPoset::from_pairs(3, {{0, 1}, {0, 2}});
    Hyperspace h = build_hyperspace(Variant::Upper, v);
    CHECK(h.elems == std::vector<Mask>{0b000, 0b010, 0b100, 0b110, 0b111});
    CHECK(h.elems == oracle::hyperspace_elems(Variant::Upper, v));
}

TEST_CASE("classical hyperspace is the powerset with a discrete order") {
    Hyperspace h = build_hyperspace(Variant::Classical, FinPoset::discrete(2));
    CHECK(h.elems.size() == 4);
    CHECK(h.order.is_discrete());
}

TEST_CASE("classical rejects ordered bases") {
    CHECK_THROWS_AS(build_hyperspace(Variant::Classical, FinPoset::chain(2)), VariantError);
}

TEST_CASE("size caps throw predictably") {
    CHECK_THROWS_AS(build_hyperspace(Variant::Convex, FinPoset::discrete(11)), SizeError);
    CHECK_THROWS_AS(build_hyperspace(Variant::Upper, FinPoset::discrete(13)), SizeError);
    HyperLimits tight;
    tight.max_base_convex = 2;
    CHECK_THROWS_AS(build_hyperspace(Variant::Convex, FinPoset::chain(3), tight), SizeError);
}

TEST_CASE("memory cap honors the byte bound") {
    HyperLimits lim;
    lim.max_bytes = 16; // far too small for any real order matrix
    CHECK_THROWS_AS(build_hyperspace(Variant::Upper, FinPoset::discrete(8), lim), SizeError);
}

TEST_CASE("enumeration agrees with the oracle on all small posets") {
    for (int n = 0; n <= 4; ++n)
        for (const FinPoset& p : enumerate_posets(n))
            for (Variant v : {Variant::Convex, Variant::Upper, Variant::Lower}) {
                Hyperspace h = build_hyperspace(v, p);
                CHECK(h.elems == oracle::hyperspace_elems(v, p));
            }
}

TEST_CASE("egli-milner order matches its quantifier form") {
    for (int n = 0; n <= 4; ++n)
        for (const FinPoset& p : enumerate_posets(n))
            for (Mask k = 0;; ++k) {
                for (Mask l = 0;; ++l) {
                    CHECK(egli_milner_leq(p, k, l) == oracle::em_leq(p, k, l));
                    if (l == p.universe()) break;
                }
                if (k == p.universe()) break;
            }
}

TEST_CASE("functor action on the identity is the identity") {
    FinPoset p = FinPoset::chain(3);
    MonotoneMap vid = hyper_map(Variant::Convex, MonotoneMap::identity(p));
    for (std::size_t i = 0; i < vid.tbl.size(); ++i) CHECK(vid.tbl[i] == static_cast<int>(i));
}

TEST_CASE("upper action up-closes the image") {
    FinPoset a2 = FinPoset::discrete(2);
    FinPoset one = FinPoset::discrete(1);
    MonotoneMap f = MonotoneMap::constant(a2, one, 0);
    MonotoneMap vf = hyper_map(Variant::Upper, f);
    Hyperspace hd = build_hyperspace(Variant::Upper, a2);
    Hyperspace hc = build_hyperspace(Variant::Upper, one);
    int from = hd.index_of(0b01);
    CHECK(vf.tbl[from] == hc.index_of(0b1)); // {a} lands on the whole point set
}

TEST_CASE("classical action is the direct image") {
    FinPoset a2 = FinPoset::discrete(2);
    FinPoset one = FinPoset::discrete(1);
    MonotoneMap f = MonotoneMap::constant(a2, one, 0);
    MonotoneMap vf = hyper_map(Variant::Classical, f);
    Hyperspace hd = build_hyperspace(Variant::Classical, a2);
    Hyperspace hc = build_hyperspace(Variant::Classical, one);
    CHECK(vf.tbl[hd.index_of(0b11)] == hc.index_of(0b1));
    CHECK(vf.tbl[hd.index_of(0b00)] == hc.index_of(0b0));
}

TEST_CASE("de groot square on the 2-chain") {
    DeGrootWitness w = degroot_square(FinPoset::chain(2));
    CHECK(w.order_isomorphism);
    CHECK(w.upper.elems.size() == 3);
    CHECK(w.lower.elems.size() == 3);
    // identity on masks
    for (std::size_t i = 0; i < w.upper.elems.size(); ++i)
        CHECK(w.lower.elems[w.forward[i]] == w.upper.elems[i]);
}

TEST_CASE("de groot square on a point and an antichain") {
    DeGrootWitness point = degroot_square(FinPoset::discrete(1));
    CHECK(point.order_isomorphism);
    CHECK(point.upper.elems.size() == 2);
    DeGrootWitness anti = degroot_square(FinPoset::discrete(3));
    CHECK(anti.order_isomorphism);
    CHECK(anti.upper.elems.size() == 8);
    for (std::size_t i = 0; i < anti.forward.size(); ++i)
        CHECK(anti.forward[i] == static_cast<int>(i));
}

TEST_CASE("singleton embeddings") {
    FinPoset c2 = FinPoset::chain(2);
    MonotoneMap conv = singleton_embedding(Variant::Convex, c2);
    Hyperspace hc = build_hyperspace(Variant::Convex, c2);
    CHECK(conv.tbl == std::vector<int>{hc.index_of(0b01), hc.index_of(0b10)});
    CHECK(hc.order.leq(hc.index_of(0b01), hc.index_of(0b10))); // {0} below {1}

    MonotoneMap up = singleton_embedding(Variant::Upper, c2);
    Hyperspace hu = build_hyperspace(Variant::Upper, c2);
    CHECK(up.tbl == std::vector<int>{hu.index_of(0b11), hu.index_of(0b10)});
    CHECK(hu.order.leq(hu.index_of(0b11), hu.index_of(0b10))); // reverse inclusion

    MonotoneMap cls = singleton_embedding(Variant::Classical, FinPoset::discrete(3));
    std::set<int> images(cls.tbl.begin(), cls.tbl.end());
    CHECK(images.size() == 3);
}

TEST_CASE("empty base gives the one-point hyperspace") {
    for (Variant v : {Variant::Classical, Variant::Convex, Variant::Upper, Variant::Lower}) {
        Hyperspace h = build_hyperspace(v, FinPoset::discrete(0));
        CHECK(h.elems == std::vector<Mask>{0});
        CHECK(h.order.size() == 1);
    }
}

TEST_CASE("variant names round-trip") {
    for (Variant v : {Variant::Classical, Variant::Convex, Variant::Upper, Variant::Lower})
        CHECK(variant_from_name(variant_name(v)) == v);
    CHECK_THROWS_AS(variant_from_name("fancy"), VariantError);
}
