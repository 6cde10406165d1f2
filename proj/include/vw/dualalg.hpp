#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vw/coalg.hpp"

namespace vw {

/// A finite modal algebra in canonical form: the Boolean algebra is the full
/// powerset of an atom set, elements are bit masks, and the box table has
/// one entry per element. Diamond is never stored; it is derived as
/// complement-box-complement.
struct ModalAlgebra {
    int atoms = 0;
    std::vector<Mask> box; // 2^atoms entries

    Mask top() const { return atoms == 0 ? 0 : (atoms == 64 ? ~0ull : (1ull << atoms) - 1); }
    std::size_t elements() const { return box.size(); }
    Mask diamond(Mask a) const { return ~box[(~a) & top()] & top(); }

    bool operator==(const ModalAlgebra& o) const { return atoms == o.atoms && box == o.box; }
};

/// A finite positive modal algebra in Birkhoff canonical form: the bounded
/// distributive lattice of up-sets of a base poset, with box and diamond as
/// index tables over the canonical (mask-ascending) up-set list.
struct PositiveModalAlgebra {
    FinPoset base;
    std::vector<Mask> upsets;
    std::vector<int> box;
    std::vector<int> diamond;

    int index_of(Mask upset) const;
    bool operator==(const PositiveModalAlgebra& o) const {
        return base == o.base && upsets == o.upsets && box == o.box && diamond == o.diamond;
    }
};

/// Up-set lattice with only a box table (dual side of the upper variant).
struct BoxAlgebra {
    FinPoset base;
    std::vector<Mask> upsets;
    std::vector<int> box;

    int index_of(Mask upset) const;
    bool operator==(const BoxAlgebra& o) const {
        return base == o.base && upsets == o.upsets && box == o.box;
    }
};

/// Up-set lattice with only a diamond table (dual side of the lower variant).
struct DiamondAlgebra {
    FinPoset base;
    std::vector<Mask> upsets;
    std::vector<int> diamond;

    int index_of(Mask upset) const;
    bool operator==(const DiamondAlgebra& o) const {
        return base == o.base && upsets == o.upsets && diamond == o.diamond;
    }
};

using AnyAlgebra = std::variant<ModalAlgebra, PositiveModalAlgebra, BoxAlgebra, DiamondAlgebra>;

/// The algebra of subsets (Classical) or up-sets (ordered variants) of the
/// carrier, with box U = {x | succ(x) within U} and diamond U =
/// {x | succ(x) meets U}, as the variant admits.
ModalAlgebra complex_modal(const Coalgebra& c);            // Classical
PositiveModalAlgebra complex_positive(const Coalgebra& c); // Convex
BoxAlgebra complex_box(const Coalgebra& c);                // Upper
DiamondAlgebra complex_diamond(const Coalgebra& c);        // Lower
AnyAlgebra complex_algebra(const Coalgebra& c);

/// Recovers a Classical coalgebra from a modal algebra: states are atoms and
/// succ(x) is the intersection of all U with x in box U.
Coalgebra atoms_frame(const ModalAlgebra& a);

/// Recovers a Convex coalgebra from a positive modal algebra over its base
/// poset. Throws StructureError when the algebra fails its axioms.
Coalgebra primes_frame(const PositiveModalAlgebra& a);

struct AxiomResult {
    std::string name;
    bool holds = false;
    std::optional<std::pair<Mask, Mask>> witness; // element pair that broke it
};

struct AxiomReport {
    std::vector<AxiomResult> axioms;
    bool ok() const;
};

AxiomReport check_axioms(const ModalAlgebra& a);
AxiomReport check_axioms(const PositiveModalAlgebra& a);
AxiomReport check_axioms(const BoxAlgebra& a);
AxiomReport check_axioms(const DiamondAlgebra& a);

/// diamond = not box not and box = not diamond not, against an explicit
/// diamond table.
bool interdefinability_check(const ModalAlgebra& a, const std::vector<Mask>& diamond_table);

/// Same check with both operators read off a Classical coalgebra.
bool interdefinability_check(const Coalgebra& classical);

/// Result of closing a generator family inside its ambient algebra.
/// In the Boolean case `closure` holds the atoms of the generated
/// subalgebra (profile blocks); the subalgebra is exactly their unions.
/// In the ordered case `closure` holds every reachable lattice element.
struct GenerationClosure {
    bool separates = false;
    bool full = false;
    std::vector<Mask> closure;
};

/// Boolean closure (meet, join, complement, bounds) of a family of subsets
/// of a `point_count`-element set, plus point separation.
GenerationClosure separating_generates_boolean(const std::vector<Mask>& family, int point_count);

/// Lattice closure (meet, join, bounds) of a family of up-sets of `s`, plus
/// order separation.
GenerationClosure separating_generates_ordered(const std::vector<Mask>& family, const FinPoset& s);

struct GenerationReport {
    Variant variant = Variant::Classical;
    bool generators_in_ambient = false;
    bool separates = false;
    bool full = false;
    bool kernel_ok = false; // ordered case: meets of closure members recover principal up-sets

    bool ok() const { return generators_in_ambient && separates && full && kernel_ok; }
};

/// Builds the variant hyperspace of `p`, forms the box/diamond generator
/// family over it, and checks that the family separates and generates the
/// ambient algebra.
GenerationReport generation_check(Variant v, const FinPoset& p, const HyperLimits& lim = {});

/// Is the preimage map of g a box-preserving Boolean homomorphism from the
/// complex algebra of c2 to that of c1? Classically equivalent to g being a
/// coalgebra morphism.
bool preimage_is_box_hom(const MonotoneMap& g, const Coalgebra& c1, const Coalgebra& c2);

/// A bounded lattice presented by its full order, with operator tables as
/// element indices; input form for Birkhoff canonicalization.
struct LatticePresentation {
    FinPoset order;
    std::vector<int> box;
    std::vector<int> diamond;
};

/// Checks the presentation is a distributive lattice, extracts the poset of
/// join-irreducibles, and rewrites elements and tables over its up-set
/// lattice.
PositiveModalAlgebra birkhoff_canonicalize(const LatticePresentation& lp);

/// Every modal algebra on the given atom count (meet-preserving box tables
/// are exactly the coatom assignments). Practical for atoms <= 3.
std::vector<ModalAlgebra> enumerate_modal_algebras(int atoms);

/// Every positive modal algebra over a base poset, deduplicated and filtered
/// by the six axioms. Practical for bases of at most 2 elements.
std::vector<PositiveModalAlgebra> enumerate_positive_algebras(const FinPoset& q);

} // namespace vw
