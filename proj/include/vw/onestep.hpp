#pragma once

#include <string>
#include <vector>

#include "vw/error.hpp"
#include "vw/finposet.hpp"

namespace vw {

/// The free Boolean algebra on a generator list, realized concretely:
/// elements are sets of valuations (assignments generators -> {0,1}), so the
/// algebra is the powerset of a 2^|gens|-point set and Boolean operations
/// are bitwise. Caps at 3 generators.
struct FreeBA {
    std::vector<std::string> gens;

    int valuations() const { return 1 << gens.size(); }
    Mask universe() const { return valuations() == 64 ? ~0ull : (1ull << valuations()) - 1; }
    /// The valuation set where generator i is true.
    Mask eta(int i) const;

    bool operator==(const FreeBA& o) const { return gens == o.gens; }
};

FreeBA free_ba(std::vector<std::string> gens); // SizeError past 3 generators

/// A Boolean homomorphism between powerset algebras, tabulated on every
/// element of the domain.
struct BaHom {
    int dom_atoms = 0;
    int cod_atoms = 0;
    std::vector<Mask> tbl; // 2^dom_atoms entries

    Mask operator()(Mask b) const { return tbl[b]; }
};

/// The unique homomorphism FreeBA(X) -> (powerset BA with cod_atoms atoms)
/// sending each generator to rho[i]: elements evaluate as the join over
/// their valuations of the meet of generator images and complements.
BaHom extend(const FreeBA& dom, int cod_atoms, const std::vector<Mask>& rho);

/// Validates the homomorphism laws on a table, throwing StructureError.
void require_hom(const BaHom& h);

/// One modal layer over a powerset BA with atom set A: elements are sets of
/// subsets of A (masks of width 2^|A|), and boxhat(b) collects the subsets
/// contained in b. Caps at 4 atoms so elements stay within a 16-bit width.
struct OneStepAlgebra {
    int base_atoms = 0;

    int points() const { return 1 << base_atoms; } // subsets of the atom set
    Mask universe() const { return points() == 64 ? ~0ull : (1ull << points()) - 1; }
    Mask boxhat(Mask b) const;
    Mask diamondhat(Mask b) const { return ~boxhat(~b & base_top()) & universe(); }
    Mask base_top() const { return base_atoms == 64 ? ~0ull : (1ull << base_atoms) - 1; }
};

OneStepAlgebra one_step(int base_atoms); // SizeError past 4 atoms

/// The functorial action on a homomorphism, acting through the dual map on
/// atoms: the image of W contains those subsets of the codomain atoms whose
/// dual image lies in W.
struct OneStepMap {
    int dom_atoms = 0; // atoms of B
    int cod_atoms = 0; // atoms of C
    std::vector<int> atom_dual; // atom of C -> atom of B

    Mask operator()(Mask w) const;
};

OneStepMap lift(const BaHom& h); // StructureError when h is not a homomorphism

/// Terms of rank 0: an element of the free Boolean algebra on the arity.
struct Rank0Term {
    std::vector<std::string> arity;
    Mask vals = 0; // valuation-set element of FreeBA(arity)

    bool operator==(const Rank0Term& o) const { return arity == o.arity && vals == o.vals; }
};

/// Terms of pure rank 1: an element of the one-step algebra over the free
/// Boolean algebra on the arity.
struct Rank1Term {
    std::vector<std::string> arity;
    Mask elem = 0; // subset of P(atoms of FreeBA(arity))

    bool operator==(const Rank1Term& o) const { return arity == o.arity && elem == o.elem; }
};

Rank0Term rank0_generator(const std::vector<std::string>& arity, int i);
Rank1Term rank1_box(const Rank0Term& t); // boxhat applied to a rank-0 payload

/// Substitute rank-0 terms into a rank-0 term.
Rank0Term compose_00(const Rank0Term& tau, const std::vector<Rank0Term>& rho);
/// Substitute rank-1 terms into a rank-0 term (evaluated inside the one-step
/// algebra, which is itself Boolean).
Rank1Term compose_01(const Rank0Term& tau, const std::vector<Rank1Term>& rho);
/// Substitute rank-0 terms into a rank-1 term via the lifted homomorphism.
Rank1Term compose_10(const Rank1Term& gamma, const std::vector<Rank0Term>& rho);

/// diamondhat coincides with complement-boxhat-complement on every element.
bool interdef_onestep(int base_atoms);

/// The boxhat images Boolean-generate the whole one-step algebra.
bool generation_onestep(int base_atoms);

} // namespace vw
