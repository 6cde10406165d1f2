#include <doctest.h>

#include "vw/dualalg.hpp"

using namespace vw;

namespace {

Coalgebra frame(std::vector<Mask> succ) {
    int n = static_cast<int>(succ.size());
    return Coalgebra(Variant::Classical, FinPoset::discrete(n), std::move(succ));
}

} // namespace

TEST_CASE("complex algebra of the step-deadlock frame") {
    // 0 -> {1}, 1 -> {}
    ModalAlgebra a = complex_modal(frame({0b10, 0b00}));
    CHECK(a.atoms == 2);
    CHECK(a.box == std::vector<Mask>{0b10, 0b10, 0b11, 0b11});
    CHECK(a.diamond(0b10) == 0b01); // can step into {1} only from 0
    CHECK(check_axioms(a).ok());
}

TEST_CASE("atoms_frame inverts the complex algebra") {
    Coalgebra c = frame({0b10, 0b00});
    Coalgebra back = atoms_frame(complex_modal(c));
    CHECK(back.succ == c.succ);
}

TEST_CASE("atoms_frame on the identity and constant boxes") {
    ModalAlgebra idbox;
    idbox.atoms = 2;
    idbox.box = {0b00, 0b01, 0b10, 0b11};
    Coalgebra diag = atoms_frame(idbox);
    CHECK(diag.succ == std::vector<Mask>{0b01, 0b10}); // diagonal relation

    ModalAlgebra allbox;
    allbox.atoms = 2;
    allbox.box = {0b11, 0b11, 0b11, 0b11};
    Coalgebra empty = atoms_frame(allbox);
    CHECK(empty.succ == std::vector<Mask>{0, 0});
}

TEST_CASE("convex complex algebra on the 2-chain") {
    Coalgebra c(Variant::Convex, FinPoset::chain(2), {0b01, 0b10});
    PositiveModalAlgebra a = complex_positive(c);
    CHECK(a.upsets == std::vector<Mask>{0b00, 0b10, 0b11});
    int bot = a.index_of(0b00), mid = a.index_of(0b10), top = a.index_of(0b11);
    CHECK(a.box[mid] == mid);     // box {1} = {1}
    CHECK(a.diamond[mid] == mid); // diamond {1} = {1}
    CHECK(a.box[bot] == bot);
    CHECK(a.box[top] == top);
    CHECK(a.diamond[bot] == bot);
    CHECK(a.diamond[top] == top);
    CHECK(check_axioms(a).ok());
}

TEST_CASE("primes_frame inverts the convex complex algebra") {
    Coalgebra c(Variant::Convex, FinPoset::chain(2), {0b01, 0b10});
    Coalgebra back = primes_frame(complex_positive(c));
    CHECK(back.succ == c.succ);
    CHECK(back.carrier == c.carrier);
}

TEST_CASE("identity operators give the singleton frame") {
    FinPoset q = FinPoset::chain(2);
    PositiveModalAlgebra a;
    a.base = q;
    a.upsets = q.all_upsets();
    for (std::size_t u = 0; u < a.upsets.size(); ++u) {
        a.box.push_back(static_cast<int>(u));
        a.diamond.push_back(static_cast<int>(u));
    }
    Coalgebra f = primes_frame(a);
    CHECK(f.succ == std::vector<Mask>{0b01, 0b10});
}

TEST_CASE("axiom-violating tables are rejected with named axioms") {
    // on the one-point base: box(bottom) = top together with diamond(top) = top
    // breaks the box-diamond interaction law
    FinPoset q = FinPoset::discrete(1);
    PositiveModalAlgebra a;
    a.base = q;
    a.upsets = q.all_upsets(); // {}, {0}
    a.box = {1, 1};
    a.diamond = {0, 1};
    AxiomReport rep = check_axioms(a);
    CHECK_FALSE(rep.ok());
    bool interaction_failed = false;
    for (const AxiomResult& ax : rep.axioms)
        if (ax.name == "box-diamond-meet" && !ax.holds && ax.witness) interaction_failed = true;
    CHECK(interaction_failed);
    CHECK_THROWS_AS(primes_frame(a), StructureError);
}

TEST_CASE("one-element algebras pass vacuously") {
    ModalAlgebra trivial;
    trivial.atoms = 0;
    trivial.box = {0};
    CHECK(check_axioms(trivial).ok());
    Coalgebra c = atoms_frame(trivial);
    CHECK(c.states() == 0);
}

TEST_CASE("interdefinability holds for frames and fails for corrupted tables") {
    Coalgebra c = frame({0b10, 0b00});
    CHECK(interdefinability_check(c));
    ModalAlgebra a = complex_modal(c);
    std::vector<Mask> dia(a.elements());
    for (Mask u = 0; u < a.elements(); ++u) dia[u] = a.diamond(u);
    CHECK(interdefinability_check(a, dia));
    dia[1] ^= 0b11; // corrupt one entry
    CHECK_FALSE(interdefinability_check(a, dia));
}

TEST_CASE("boolean generation by atoms, and a family that cannot separate") {
    GenerationClosure atoms = separating_generates_boolean({0b001, 0b010, 0b100}, 3);
    CHECK(atoms.separates);
    CHECK(atoms.full);
    GenerationClosure trivial = separating_generates_boolean({0b00, 0b11}, 2);
    CHECK_FALSE(trivial.separates);
    CHECK_FALSE(trivial.full);
    CHECK(trivial.closure == std::vector<Mask>{0b11}); // one block, closure is {0, S}
}

TEST_CASE("principal up-sets order-separate and generate") {
    FinPoset q = FinPoset::from_pairs(3, {{0, 1}});
    std::vector<Mask> fam;
    for (int x = 0; x < q.size(); ++x) fam.push_back(q.up_row(x));
    GenerationClosure r = separating_generates_ordered(fam, q);
    CHECK(r.separates);
    CHECK(r.full);
    CHECK(r.closure.size() == q.all_upsets().size());
}

TEST_CASE("generation check across the variants") {
    GenerationReport classical = generation_check(Variant::Classical, FinPoset::discrete(2));
    CHECK(classical.ok()); // 16-element ambient reached from the box family

    GenerationReport upper = generation_check(Variant::Upper, FinPoset::chain(2));
    CHECK(upper.ok()); // Up(H) has 4 members, all generated

    GenerationReport convex = generation_check(Variant::Convex, FinPoset::discrete(1));
    CHECK(convex.ok()); // all four up-sets of the two-element hyperspace

    CHECK_THROWS_AS(generation_check(Variant::Convex, FinPoset::discrete(4)), SizeError);
}

TEST_CASE("morphism duality on a sample pair") {
    Coalgebra c1 = frame({0b10, 0b00});
    Coalgebra c2 = frame({0b0});
    MonotoneMap g = MonotoneMap::constant(c1.carrier, c2.carrier, 0);
    CHECK(is_coalg_morphism(g, c1, c2) == preimage_is_box_hom(g, c1, c2));
    Coalgebra dead = frame({0b00, 0b00});
    MonotoneMap h = MonotoneMap::constant(dead.carrier, c2.carrier, 0);
    CHECK(is_coalg_morphism(h, dead, c2));
    CHECK(preimage_is_box_hom(h, dead, c2));
}

TEST_CASE("birkhoff canonicalization recovers the up-set form") {
    // present the four-element diamond lattice of up-sets of a 2-antichain
    FinPoset lat = FinPoset::from_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    LatticePresentation lp;
    lp.order = lat;
    for (int i = 0; i < 4; ++i) {
        lp.box.push_back(i);
        lp.diamond.push_back(i);
    }
    PositiveModalAlgebra a = birkhoff_canonicalize(lp);
    CHECK(a.base.size() == 2);
    CHECK(a.base.is_discrete());
    CHECK(a.upsets.size() == 4);
    CHECK(check_axioms(a).ok());
}

TEST_CASE("non-distributive lattices are refused") {
    // the five-element diamond M3: bottom 0, top 4, three incomparable middles
    FinPoset m3 = FinPoset::from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
    LatticePresentation lp;
    lp.order = m3;
    lp.box.assign(5, 4);
    lp.diamond.assign(5, 0);
    CHECK_THROWS_AS(birkhoff_canonicalize(lp), StructureError);
}

TEST_CASE("modal algebra enumeration is exactly the coatom assignments") {
    CHECK(enumerate_modal_algebras(0).size() == 1);
    CHECK(enumerate_modal_algebras(1).size() == 2);
    CHECK(enumerate_modal_algebras(2).size() == 16);
    CHECK(enumerate_modal_algebras(3).size() == 512);
    for (const ModalAlgebra& a : enumerate_modal_algebras(2)) CHECK(check_axioms(a).ok());
}

TEST_CASE("positive algebra enumeration filters the interaction axioms") {
    FinPoset point = FinPoset::discrete(1);
    std::vector<PositiveModalAlgebra> algs = enumerate_positive_algebras(point);
    // on the two-element lattice only the identity-like and the deadlock
    // operator pairs survive the interaction axioms
    CHECK(algs.size() == 2);
    for (const PositiveModalAlgebra& a : algs) {
        Coalgebra f = primes_frame(a);
        CHECK(complex_positive(f) == a);
    }
}
