#pragma once

#include <string>
#include <vector>

#include "vw/finposet.hpp"

namespace vw {

/// The four hyperspace constructions.
///
///   Classical: all subsets of a discrete base, discrete order.
///   Convex:    convex subsets, Egli-Milner order.
///   Upper:     up-sets, reverse inclusion.
///   Lower:     down-sets, inclusion.
enum class Variant { Classical, Convex, Upper, Lower };

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name); // throws VariantError

/// Construction caps. Hyperspace cardinality is exponential in the base, so
/// failures must be predictable: exceeding a cap raises SizeError before any
/// large allocation. `max_bytes` additionally bounds the order-relation
/// storage and honors the VW_MAX_BYTES environment variable.
struct HyperLimits {
    int max_base_classical = 12;
    int max_base_convex = 10;
    int max_base_upper_lower = 12;
    std::size_t max_bytes = 0; // 0 = read VW_MAX_BYTES, default 512 MiB

    static constexpr int hard_max_base = 20;

    int cap_for(Variant v) const;
    std::size_t byte_cap() const;
};

/// The hyperspace of a finite poset: the qualifying subsets in ascending
/// mask order together with the variant order on their indices.
struct Hyperspace {
    Variant variant;
    FinPoset base;
    std::vector<Mask> elems;
    FinPoset order;

    /// Index of a subset among elems, or -1 when it does not qualify.
    int index_of(Mask m) const;

    /// The variant closure of an arbitrary subset of the base (identity for
    /// Classical).
    Mask closure(Mask m) const;
};

/// Does a subset qualify as an element of the variant hyperspace?
bool variant_qualifies(Variant v, const FinPoset& base, Mask m);

/// Variant closure of a subset of `base`.
Mask variant_closure(Variant v, const FinPoset& base, Mask m);

/// The variant order between two qualifying subsets, computed directly from
/// the base (no hyperspace needed).
bool variant_leq(Variant v, const FinPoset& base, Mask k, Mask l);

/// Egli-Milner comparison on arbitrary subsets: up(l) within up(k) and
/// down(k) within down(l).
bool egli_milner_leq(const FinPoset& base, Mask k, Mask l);

/// Enumerates the hyperspace. Throws VariantError for Classical on a
/// non-discrete base and SizeError past the caps.
Hyperspace build_hyperspace(Variant v, const FinPoset& base, const HyperLimits& lim = {});

/// The functorial action on a monotone map: the table sends each element K
/// of the domain hyperspace to the variant closure of f[K]. The result is
/// monotone for the variant orders (validated on construction).
MonotoneMap hyper_map(Variant v, const MonotoneMap& f, const HyperLimits& lim = {});

/// Matches the upper hyperspace of a poset with the lower hyperspace of its
/// opposite: up-sets of P are exactly the down-sets of the opposite, so the
/// bijection is the identity on masks, and it inverts the order.
struct DeGrootWitness {
    Hyperspace upper;         // over P
    Hyperspace lower;         // over opposite(P)
    std::vector<int> forward; // index bijection upper.elems -> lower.elems
    bool order_isomorphism;   // opposite(upper.order) matches lower.order
};

DeGrootWitness degroot_square(const FinPoset& p, const HyperLimits& lim = {});

/// x -> {x} (Classical, Convex), x -> up{x} (Upper), x -> down{x} (Lower),
/// as a monotone map from the base into the hyperspace order.
MonotoneMap singleton_embedding(Variant v, const FinPoset& p, const HyperLimits& lim = {});

} // namespace vw
