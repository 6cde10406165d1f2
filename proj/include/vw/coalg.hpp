#pragma once

#include <optional>
#include <vector>

#include "vw/hyperspace.hpp"

namespace vw {

/// A coalgebra for one of the hyperspace functors: a carrier poset and a
/// structure map sending each state to a qualifying subset of the carrier.
/// Construction validates variant closure of every successor set and
/// monotonicity of the structure map into the variant order (and a discrete
/// carrier for Classical). For Classical this is exactly a Kripke frame:
/// x R y iff y is in succ[x].
struct Coalgebra {
    Variant variant;
    FinPoset carrier;
    std::vector<Mask> succ;

    Coalgebra(Variant v, FinPoset carrier_, std::vector<Mask> succ_);

    int states() const { return carrier.size(); }
};

/// Does g make the coalgebra square commute: succ2(g(x)) equals the variant
/// closure of g[succ1(x)] for every state x?
bool is_coalg_morphism(const MonotoneMap& g, const Coalgebra& c1, const Coalgebra& c2);

/// A partition of the carrier into behavioral blocks, normalized so block
/// ids appear in first-occurrence order.
struct Partition {
    std::vector<int> block_of;
    int block_count = 0;

    static Partition normalized(std::vector<int> raw);
    std::vector<std::vector<int>> blocks() const;
    bool operator==(const Partition& o) const {
        return block_of == o.block_of && block_count == o.block_count;
    }
};

/// One stage of behavioral refinement: class ids per state plus the variant
/// order among the classes. The order is what makes the ordered variants
/// work: their successor images are compared after closure in the behavior
/// order (where, say, the empty upper behavior sits on top), not in the
/// carrier order.
struct BehaviorClasses {
    std::vector<int> id;
    int classes = 0;
    std::vector<char> leq; // classes x classes, row-major

    bool class_leq(int a, int b) const { return leq[static_cast<std::size_t>(a) * classes + b]; }
    Partition partition() const;
    /// Same state partition and same lifted order.
    bool same_as(const BehaviorClasses& o) const;
};

BehaviorClasses behavior_refine_init(const Coalgebra& c);
BehaviorClasses behavior_refine_step(const Coalgebra& c, const BehaviorClasses& prev);

/// Coarsest stable partition under behavioral refinement; for Classical this
/// is plain partition-refinement bisimilarity, and for the ordered variants
/// each round agrees with the kernel of the depth-k canonical map.
Partition bisim_quotient(const Coalgebra& c);

/// The quotient of a Classical coalgebra by a stable partition, with the
/// projection map. Throws VariantError for ordered variants and
/// PreconditionError if the partition is not stable.
struct QuotientResult {
    Coalgebra quotient;
    MonotoneMap projection;
};
QuotientResult quotient_coalgebra(const Coalgebra& c, const Partition& p);

/// One level of the dualized chain Z_0 = 1, Z_{i+1} = V(Z_i) x output.
struct ChainLevel {
    int index = 0;
    FinPoset space;
    std::optional<Hyperspace> hyper;    // V(Z_{i-1}) for index >= 1
    std::optional<MonotoneMap> proj;    // z_{i,i-1} for index >= 1
};

struct ChainLimits {
    int max_level_size = 4096;
    int max_depth = 64;
    HyperLimits hyper{};
};

struct Convergence {
    bool converged = false;
    int at = -1;    // k with z_{k+1,k} an order isomorphism
    int depth = 0;  // requested depth when not converged
};

struct ChainResult {
    Variant variant;
    std::optional<FinPoset> output;
    std::vector<ChainLevel> levels;
    Convergence convergence;

    const FinPoset& space(int i) const { return levels[static_cast<std::size_t>(i)].space; }
};

/// Builds the chain up to `depth` levels past Z_0, stopping early when a
/// connecting projection is an order isomorphism. Levels that would exceed
/// the caps raise SizeError.
ChainResult terminal_chain(Variant v, const std::optional<FinPoset>& output, int depth,
                           const ChainLimits& lim = {});

/// The n-step behavior of each state as an element index of Z_n. When the
/// chain carries an output component, `obs` must be supplied with matching
/// carrier and output posets.
std::vector<int> canonical_map(const Coalgebra& c, int depth, const ChainResult& chain,
                               const std::optional<MonotoneMap>& obs = {});

/// Kernel of the depth-n behavior of a Classical coalgebra, computed by
/// hash-consing behavior values instead of materializing chain levels
/// (level sizes grow as iterated powersets, so materialization is hopeless
/// past depth 3). Optional observation labels refine the kernel.
Partition canonical_kernel(const Coalgebra& c, int depth,
                           const std::optional<std::vector<int>>& obs = {});

/// Per-clause result of the coreflexive-equalizer preservation check.
struct PreservationReport {
    Variant variant = Variant::Classical;
    bool equalized = false;        // V f . V h = V g . V h
    bool order_reflecting = false; // V h reflects the hyperspace order
    bool image = false;            // every K with V f(K) = V g(K) is hit by V h
    bool witness = false;          // the canonical preimage closure recovers each such K
    std::optional<Mask> counterexample;

    bool ok() const { return equalized && order_reflecting && image; }
};

/// Verifies that the variant functor carries a coreflexive equalizer to an
/// equalizer: h = eq(f, g) is mapped to V h with the three clauses above.
PreservationReport check_coreflexive_preservation(Variant v, const CoreflexiveInstance& inst,
                                                  const HyperLimits& lim = {});

/// For every subset K of X: if the up-closures of f[K] and g[K] agree then
/// the up-closure of K equals that of K restricted to the equalizer (and
/// the down- and convex-closure forms of the same statement).
struct EqualizerLemmaReport {
    bool up_ok = false;
    bool down_ok = false;
    bool convex_ok = false;
    std::optional<Mask> counterexample;

    bool ok() const { return up_ok && down_ok && convex_ok; }
};

EqualizerLemmaReport check_equalizer_lemma(const CoreflexiveInstance& inst);

/// Every coalgebra of the variant on the given carrier (all qualifying,
/// monotone structure maps). Exponential in the carrier; keep it tiny.
std::vector<Coalgebra> enumerate_coalgebras(Variant v, const FinPoset& carrier);

/// A random coalgebra on the carrier. Ordered variants sample monotone
/// structure maps constructively where possible and fall back to the
/// constant full map when rejection runs out of attempts.
Coalgebra random_coalgebra(Variant v, const FinPoset& carrier, Rng& rng);

} // namespace vw
