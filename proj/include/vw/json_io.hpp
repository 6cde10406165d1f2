#pragma once

#include <json.hpp>

#include "vw/coalg.hpp"
#include "vw/dualalg.hpp"
#include "vw/onestep.hpp"

namespace vw::io {

using json = nlohmann::json;

// Posets travel as {"n": int, "leq": [[i, j], ...]}; the pairs are
// generators and the closure is applied on load. Emission writes the
// covering pairs, which regenerate the same order.
json poset_to_json(const FinPoset& p);
FinPoset poset_from_json(const json& j);

// {"dom": poset, "cod": poset, "tbl": [...]}
json map_to_json(const MonotoneMap& m);
MonotoneMap map_from_json(const json& j);

// Subsets are sorted index lists.
json subset_to_json(Mask m);
Mask subset_from_json(const json& j, int n);

json hyperspace_to_json(const Hyperspace& h);

// {"variant": ..., "carrier": poset, "succ": [[...], ...]}
json coalgebra_to_json(const Coalgebra& c);
Coalgebra coalgebra_from_json(const json& j);

json modal_to_json(const ModalAlgebra& a);
ModalAlgebra modal_from_json(const json& j);

// Up-set-lattice algebras key their operator tables by the decimal value of
// the canonical up-set mask. A positive algebra may alternatively arrive as
// {"lattice": poset, "box": [indices], "diamond": [indices]} and is then
// canonicalized through its join-irreducibles.
json positive_to_json(const PositiveModalAlgebra& a);
PositiveModalAlgebra positive_from_json(const json& j);
json boxalg_to_json(const BoxAlgebra& a);
BoxAlgebra boxalg_from_json(const json& j);
json diamondalg_to_json(const DiamondAlgebra& a);
DiamondAlgebra diamondalg_from_json(const json& j);

json algebra_to_json(const AnyAlgebra& a);
AnyAlgebra algebra_from_json(const json& j); // dispatches on the fields present

json partition_to_json(const Partition& p);
json chain_to_json(const ChainResult& r);
json preservation_to_json(const PreservationReport& r);
json axiom_report_to_json(const AxiomReport& r);
json generation_report_to_json(const GenerationReport& r);

// Terms parse from formula trees ({"var": name}, {"op": "and"|"or"|"not"|
// "top"|"bot", "args": [...]}, rank-1 adds {"op": "box", "args": [rank-0]})
// or from the canonical forms written by the emitters.
Rank0Term rank0_from_json(const json& j);
json rank0_to_json(const Rank0Term& t);
Rank1Term rank1_from_json(const json& j);
json rank1_to_json(const Rank1Term& t);

// Hasse diagrams in DOT. Hyperspace nodes are labeled with their masks.
std::string poset_dot(const FinPoset& p);
std::string hyperspace_dot(const Hyperspace& h);

// FNV-1a digest string carried by command outputs for provenance.
std::string digest(const std::string& payload);

} // namespace vw::io
