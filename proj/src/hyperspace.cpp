#include "vw/hyperspace.hpp"

#include <algorithm>
#include <cstdlib>

namespace vw {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::Classical: return "classical";
        case Variant::Convex: return "convex";
        case Variant::Upper: return "upper";
        case Variant::Lower: return "lower";
    }
    return "?";
}

Variant variant_from_name(const std::string& name) {
    if (name == "classical") return Variant::Classical;
    if (name == "convex") return Variant::Convex;
    if (name == "upper") return Variant::Upper;
    if (name == "lower") return Variant::Lower;
    throw VariantError("unknown variant '" + name + "' (expected classical|convex|upper|lower)");
}

int HyperLimits::cap_for(Variant v) const {
    int cap = v == Variant::Convex ? max_base_convex
              : v == Variant::Classical ? max_base_classical
                                        : max_base_upper_lower;
    return std::min(cap, hard_max_base);
}

std::size_t HyperLimits::byte_cap() const {
    if (max_bytes != 0) return max_bytes;
    if (const char* env = std::getenv("VW_MAX_BYTES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 512ull << 20;
}

int Hyperspace::index_of(Mask m) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), m);
    if (it == elems.end() || *it != m) return -1;
    return static_cast<int>(it - elems.begin());
}

Mask Hyperspace::closure(Mask m) const { return variant_closure(variant, base, m); }

bool variant_qualifies(Variant v, const FinPoset& base, Mask m) {
    switch (v) {
        case Variant::Classical: return true;
        case Variant::Convex: return base.is_convex(m);
        case Variant::Upper: return base.is_upset(m);
        case Variant::Lower: return base.is_downset(m);
    }
    return false;
}

Mask variant_closure(Variant v, const FinPoset& base, Mask m) {
    switch (v) {
        case Variant::Classical: return m;
        case Variant::Convex: return base.convex(m);
        case Variant::Upper: return base.up(m);
        case Variant::Lower: return base.down(m);
    }
    return m;
}

bool egli_milner_leq(const FinPoset& base, Mask k, Mask l) {
    Mask uk = base.up(k), ul = base.up(l);
    Mask dk = base.down(k), dl = base.down(l);
    return (ul & ~uk) == 0 && (dk & ~dl) == 0;
}

bool variant_leq(Variant v, const FinPoset& base, Mask k, Mask l) {
    switch (v) {
        case Variant::Classical: return k == l;
        case Variant::Convex: return egli_milner_leq(base, k, l);
        case Variant::Upper: return (l & ~k) == 0; // reverse inclusion
        case Variant::Lower: return (k & ~l) == 0; // inclusion
    }
    return false;
}

Hyperspace build_hyperspace(Variant v, const FinPoset& base, const HyperLimits& lim) {
    if (v == Variant::Classical && !base.is_discrete())
        throw VariantError("classical hyperspace requires a discrete base");
    int cap = lim.cap_for(v);
    if (base.size() > cap)
        throw SizeError("base has " + std::to_string(base.size()) + " elements, cap for " +
                        variant_name(v) + " is " + std::to_string(cap));

    std::vector<Mask> elems;
    Mask full = base.universe();
    for (Mask s = 0;; ++s) {
        if (variant_qualifies(v, base, s)) elems.push_back(s);
        if (s == full) break;
    }

    std::size_t n = elems.size();
    std::size_t relation_bytes = 2 * n * ((n + 63) / 64) * 8;
    if (relation_bytes > lim.byte_cap())
        throw SizeError("hyperspace order would need " + std::to_string(relation_bytes) +
                        " bytes; raise VW_MAX_BYTES to allow it");

    // precompute the closures each comparison needs
    std::vector<Mask> ups(n), downs(n);
    for (std::size_t i = 0; i < n; ++i) {
        ups[i] = base.up(elems[i]);
        downs[i] = base.down(elems[i]);
    }
    auto leq = [&](int a, int b) {
        switch (v) {
            case Variant::Classical: return a == b;
            case Variant::Convex:
                return (ups[b] & ~ups[a]) == 0 && (downs[a] & ~downs[b]) == 0;
            case Variant::Upper: return (elems[b] & ~elems[a]) == 0;
            case Variant::Lower: return (elems[a] & ~elems[b]) == 0;
        }
        return false;
    };
    FinPoset order = FinPoset::from_relation(static_cast<int>(n), leq);
    return Hyperspace{v, base, std::move(elems), std::move(order)};
}

MonotoneMap hyper_map(Variant v, const MonotoneMap& f, const HyperLimits& lim) {
    Hyperspace hd = build_hyperspace(v, f.dom, lim);
    Hyperspace hc = build_hyperspace(v, f.cod, lim);
    std::vector<int> tbl(hd.elems.size());
    for (std::size_t i = 0; i < hd.elems.size(); ++i) {
        Mask img = variant_closure(v, f.cod, f.image(hd.elems[i]));
        int idx = hc.index_of(img);
        if (idx < 0) throw StructureError("closure of an image escaped the hyperspace");
        tbl[i] = idx;
    }
    return MonotoneMap(hd.order, hc.order, std::move(tbl));
}

DeGrootWitness degroot_square(const FinPoset& p, const HyperLimits& lim) {
    Hyperspace upper = build_hyperspace(Variant::Upper, p, lim);
    Hyperspace lower = build_hyperspace(Variant::Lower, p.opposite(), lim);
    std::vector<int> forward(upper.elems.size());
    bool ok = upper.elems.size() == lower.elems.size();
    for (std::size_t i = 0; ok && i < upper.elems.size(); ++i) {
        int j = lower.index_of(upper.elems[i]);
        if (j < 0) {
            ok = false;
            break;
        }
        forward[i] = j;
    }
    if (ok) {
        FinPoset flipped = upper.order.opposite();
        for (int a = 0; ok && a < flipped.size(); ++a)
            for (int b = 0; b < flipped.size(); ++b)
                if (flipped.leq(a, b) != lower.order.leq(forward[a], forward[b])) {
                    ok = false;
                    break;
                }
    }
    return DeGrootWitness{std::move(upper), std::move(lower), std::move(forward), ok};
}

MonotoneMap singleton_embedding(Variant v, const FinPoset& p, const HyperLimits& lim) {
    Hyperspace h = build_hyperspace(v, p, lim);
    std::vector<int> tbl(p.size());
    for (int x = 0; x < p.size(); ++x) {
        Mask m = variant_closure(v, p, 1ull << x);
        int idx = h.index_of(m);
        if (idx < 0) throw StructureError("closed singleton escaped the hyperspace");
        tbl[x] = idx;
    }
    return MonotoneMap(p, h.order, std::move(tbl));
}

} // namespace vw
