#include "vw/coalg.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace vw {

Coalgebra::Coalgebra(Variant v, FinPoset carrier_, std::vector<Mask> succ_)
    : variant(v), carrier(std::move(carrier_)), succ(std::move(succ_)) {
    if (static_cast<int>(succ.size()) != carrier.size())
        throw StructureError("structure map has " + std::to_string(succ.size()) +
                             " entries for " + std::to_string(carrier.size()) + " states");
    if (variant == Variant::Classical && !carrier.is_discrete())
        throw VariantError("classical coalgebras need a discrete carrier");
    Mask full = carrier.universe();
    for (int x = 0; x < carrier.size(); ++x) {
        if (succ[x] & ~full)
            throw StructureError("state " + std::to_string(x) + ": successor set out of range");
        if (!variant_qualifies(variant, carrier, succ[x]))
            throw StructureError("state " + std::to_string(x) + ": successor set is not " +
                                 (variant == Variant::Convex  ? "convex"
                                  : variant == Variant::Upper ? "an up-set"
                                                              : "a down-set"));
    }
    for (int x = 0; x < carrier.size(); ++x)
        for (int y = 0; y < carrier.size(); ++y)
            if (x != y && carrier.leq(x, y) &&
                !variant_leq(variant, carrier, succ[x], succ[y]))
                throw StructureError("structure map not monotone between states " +
                                     std::to_string(x) + " and " + std::to_string(y));
}

bool is_coalg_morphism(const MonotoneMap& g, const Coalgebra& c1, const Coalgebra& c2) {
    if (c1.variant != c2.variant)
        throw VariantMismatch("coalgebras have different variants");
    if (!(g.dom == c1.carrier) || !(g.cod == c2.carrier))
        throw StructureError("map endpoints do not match the coalgebra carriers");
    for (int x = 0; x < c1.states(); ++x) {
        Mask lhs = c2.succ[g(x)];
        Mask rhs = variant_closure(c1.variant, c2.carrier, g.image(c1.succ[x]));
        if (lhs != rhs) return false;
    }
    return true;
}

Partition Partition::normalized(std::vector<int> raw) {
    Partition p;
    p.block_of.assign(raw.size(), -1);
    std::map<int, int> rename;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto [it, fresh] = rename.emplace(raw[i], p.block_count);
        if (fresh) ++p.block_count;
        p.block_of[i] = it->second;
    }
    return p;
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(block_count);
    for (std::size_t i = 0; i < block_of.size(); ++i)
        out[block_of[i]].push_back(static_cast<int>(i));
    return out;
}

Partition BehaviorClasses::partition() const {
    Partition p;
    p.block_of = id;
    p.block_count = classes;
    return p;
}

bool BehaviorClasses::same_as(const BehaviorClasses& o) const {
    if (id != o.id || classes != o.classes) return false;
    return leq == o.leq;
}

BehaviorClasses behavior_refine_init(const Coalgebra& c) {
    BehaviorClasses b;
    b.id.assign(static_cast<std::size_t>(c.states()), 0);
    b.classes = c.states() > 0 ? 1 : 0;
    b.leq.assign(static_cast<std::size_t>(b.classes) * b.classes, 1);
    return b;
}

BehaviorClasses behavior_refine_step(const Coalgebra& c, const BehaviorClasses& prev) {
    int n = c.states();
    // canonical key of each state's successor image, up to variant closure
    // in the class order: minima determine up-closures, maxima down-closures
    auto minima = [&](Mask raw) {
        Mask m = 0;
        for (int a : bits_of(raw)) {
            bool minimal = true;
            for (int b : bits_of(raw))
                if (b != a && prev.class_leq(b, a)) {
                    minimal = false;
                    break;
                }
            if (minimal) m |= 1ull << a;
        }
        return m;
    };
    auto maxima = [&](Mask raw) {
        Mask m = 0;
        for (int a : bits_of(raw)) {
            bool maximal = true;
            for (int b : bits_of(raw))
                if (b != a && prev.class_leq(a, b)) {
                    maximal = false;
                    break;
                }
            if (maximal) m |= 1ull << a;
        }
        return m;
    };

    std::vector<std::pair<Mask, Mask>> key(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        Mask raw = 0;
        for (int y : bits_of(c.succ[x])) raw |= 1ull << prev.id[y];
        switch (c.variant) {
            case Variant::Classical: key[x] = {raw, raw}; break;
            case Variant::Upper: key[x] = {minima(raw), 0}; break;
            case Variant::Lower: key[x] = {0, maxima(raw)}; break;
            case Variant::Convex: key[x] = {minima(raw), maxima(raw)}; break;
        }
    }

    BehaviorClasses next;
    next.id.assign(static_cast<std::size_t>(n), 0);
    std::map<std::pair<Mask, Mask>, int> fresh;
    std::vector<std::pair<Mask, Mask>> rep;
    for (int x = 0; x < n; ++x) {
        auto [it, added] = fresh.emplace(key[x], static_cast<int>(fresh.size()));
        if (added) rep.push_back(key[x]);
        next.id[x] = it->second;
    }
    next.classes = static_cast<int>(rep.size());

    // the order among the new classes, decided through the old one:
    // up-closures compare by minima having lower bounds, down-closures by
    // maxima having upper bounds
    auto lower_bounded = [&](Mask lows, Mask highs) {
        for (int b : bits_of(highs)) {
            bool found = false;
            for (int a : bits_of(lows))
                if (prev.class_leq(a, b)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
        return true;
    };
    auto upper_bounded = [&](Mask lows, Mask highs) {
        for (int a : bits_of(lows)) {
            bool found = false;
            for (int b : bits_of(highs))
                if (prev.class_leq(a, b)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
        return true;
    };
    next.leq.assign(static_cast<std::size_t>(next.classes) * next.classes, 0);
    for (int a = 0; a < next.classes; ++a)
        for (int b = 0; b < next.classes; ++b) {
            bool le = false;
            switch (c.variant) {
                case Variant::Classical:
                    le = rep[static_cast<std::size_t>(a)] == rep[static_cast<std::size_t>(b)];
                    break;
                case Variant::Upper:
                    le = lower_bounded(rep[static_cast<std::size_t>(a)].first,
                                       rep[static_cast<std::size_t>(b)].first);
                    break;
                case Variant::Lower:
                    le = upper_bounded(rep[static_cast<std::size_t>(a)].second,
                                       rep[static_cast<std::size_t>(b)].second);
                    break;
                case Variant::Convex:
                    le = lower_bounded(rep[static_cast<std::size_t>(a)].first,
                                       rep[static_cast<std::size_t>(b)].first) &&
                         upper_bounded(rep[static_cast<std::size_t>(a)].second,
                                       rep[static_cast<std::size_t>(b)].second);
                    break;
            }
            next.leq[static_cast<std::size_t>(a) * next.classes + b] = le ? 1 : 0;
        }
    return next;
}

Partition bisim_quotient(const Coalgebra& c) {
    BehaviorClasses cur = behavior_refine_init(c);
    int guard = c.states() * c.states() + c.states() + 2;
    for (int round = 0; round <= guard; ++round) {
        BehaviorClasses next = behavior_refine_step(c, cur);
        if (next.same_as(cur)) return Partition::normalized(cur.id);
        cur = std::move(next);
    }
    throw StructureError("behavioral refinement failed to stabilize");
}

QuotientResult quotient_coalgebra(const Coalgebra& c, const Partition& p) {
    if (c.variant != Variant::Classical)
        throw VariantError("quotient construction is classical-only");
    FinPoset q = FinPoset::discrete(p.block_count);
    std::vector<Mask> qsucc(p.block_count, 0);
    std::vector<bool> seen(p.block_count, false);
    for (int x = 0; x < c.states(); ++x) {
        Mask hit = 0;
        for (int y : bits_of(c.succ[x])) hit |= 1ull << p.block_of[y];
        int b = p.block_of[x];
        if (seen[b] && qsucc[b] != hit)
            throw PreconditionError("partition is not stable at state " + std::to_string(x));
        qsucc[b] = hit;
        seen[b] = true;
    }
    Coalgebra quot(Variant::Classical, q, std::move(qsucc));
    MonotoneMap proj(c.carrier, q, p.block_of);
    return QuotientResult{std::move(quot), std::move(proj)};
}

ChainResult terminal_chain(Variant v, const std::optional<FinPoset>& output, int depth,
                           const ChainLimits& lim) {
    if (depth < 0) throw ConfigError("chain depth must be nonnegative");
    if (depth > lim.max_depth)
        throw SizeError("chain depth " + std::to_string(depth) + " exceeds the cap of " +
                        std::to_string(lim.max_depth));
    if (v == Variant::Classical && output && !output->is_discrete())
        throw VariantError("classical chain needs a discrete output poset");

    ChainResult res;
    res.variant = v;
    res.output = output;
    res.convergence = Convergence{false, -1, depth};

    ChainLevel z0;
    z0.index = 0;
    z0.space = FinPoset::discrete(1);
    res.levels.push_back(std::move(z0));

    for (int i = 0; i < depth; ++i) {
        const FinPoset& prev = res.space(i);
        Hyperspace h = build_hyperspace(v, prev, lim.hyper);
        int out_n = output ? output->size() : 1;
        long long size = static_cast<long long>(h.elems.size()) * out_n;
        if (size > lim.max_level_size)
            throw SizeError("chain level " + std::to_string(i + 1) + " would have " +
                            std::to_string(size) + " elements, cap is " +
                            std::to_string(lim.max_level_size));

        ChainLevel lvl;
        lvl.index = i + 1;
        lvl.space = output ? product(h.order, *output) : h.order;

        std::vector<int> proj_tbl(static_cast<std::size_t>(std::max<long long>(size, 0)));
        if (i == 0) {
            std::fill(proj_tbl.begin(), proj_tbl.end(), 0);
        } else {
            const ChainLevel& prev_lvl = res.levels[static_cast<std::size_t>(i)];
            const Hyperspace& prev_hyper = *prev_lvl.hyper;
            const MonotoneMap& prev_proj = *prev_lvl.proj;
            const FinPoset& below = res.space(i - 1);
            for (std::size_t k = 0; k < h.elems.size(); ++k) {
                Mask img = 0;
                for (int e : bits_of(h.elems[k])) img |= 1ull << prev_proj(e);
                int kidx = prev_hyper.index_of(variant_closure(v, below, img));
                if (kidx < 0) throw StructureError("projected element escaped the hyperspace");
                for (int o = 0; o < out_n; ++o)
                    proj_tbl[k * out_n + o] = output ? kidx * out_n + o : kidx;
            }
        }
        lvl.proj = MonotoneMap(lvl.space, prev, std::move(proj_tbl));
        lvl.hyper = std::move(h);
        res.levels.push_back(std::move(lvl));

        if (res.levels.back().proj->is_order_isomorphism()) {
            res.convergence = Convergence{true, i, depth};
            break;
        }
    }
    return res;
}

std::vector<int> canonical_map(const Coalgebra& c, int depth, const ChainResult& chain,
                               const std::optional<MonotoneMap>& obs) {
    if (chain.variant != c.variant) throw VariantMismatch("chain variant differs from coalgebra");
    if (depth >= static_cast<int>(chain.levels.size()))
        throw PreconditionError("chain was not built to depth " + std::to_string(depth));
    if (chain.output) {
        if (!obs) throw PreconditionError("chain has an output component, observation map required");
        if (!(obs->dom == c.carrier) || !(obs->cod == *chain.output))
            throw PreconditionError("observation map endpoints do not match");
    }
    int n = c.states();
    std::vector<int> beta(n, 0); // everything lands on the point of Z_0
    for (int i = 0; i < depth; ++i) {
        const ChainLevel& lvl = chain.levels[static_cast<std::size_t>(i + 1)];
        const Hyperspace& h = *lvl.hyper;
        int out_n = chain.output ? chain.output->size() : 1;
        std::vector<int> next(n);
        for (int x = 0; x < n; ++x) {
            Mask img = 0;
            for (int y : bits_of(c.succ[x])) img |= 1ull << beta[y];
            int kidx = h.index_of(variant_closure(c.variant, chain.space(i), img));
            if (kidx < 0) throw StructureError("behavior value escaped the hyperspace");
            next[x] = chain.output ? kidx * out_n + (*obs)(x) : kidx;
        }
        beta = std::move(next);
    }
    return beta;
}

Partition canonical_kernel(const Coalgebra& c, int depth,
                           const std::optional<std::vector<int>>& obs) {
    if (c.variant != Variant::Classical)
        throw VariantError("behavior hashing is classical-only; ordered variants go through "
                           "materialized chain levels");
    int n = c.states();
    std::vector<int> id(n, 0);
    for (int r = 0; r < depth; ++r) {
        std::map<std::pair<Mask, int>, int> fresh;
        std::vector<int> next(n);
        for (int x = 0; x < n; ++x) {
            Mask hit = 0;
            for (int y : bits_of(c.succ[x])) hit |= 1ull << id[y];
            int label = obs ? (*obs)[x] : 0;
            auto [it, added] = fresh.emplace(std::make_pair(hit, label),
                                             static_cast<int>(fresh.size()));
            (void)added;
            next[x] = it->second;
        }
        id = std::move(next);
    }
    return Partition::normalized(std::move(id));
}

PreservationReport check_coreflexive_preservation(Variant v, const CoreflexiveInstance& inst,
                                                  const HyperLimits& lim) {
    inst.require_valid();
    PreservationReport rep;
    rep.variant = v;

    EqualizerResult eq = equalizer(inst.f, inst.g);
    MonotoneMap vh = hyper_map(v, eq.inclusion, lim);
    MonotoneMap vf = hyper_map(v, inst.f, lim);
    MonotoneMap vg = hyper_map(v, inst.g, lim);

    rep.equalized = compose(vf, vh).tbl == compose(vg, vh).tbl;
    rep.order_reflecting = vh.is_order_reflecting();

    Hyperspace hx = build_hyperspace(v, inst.x, lim);
    Hyperspace he = build_hyperspace(v, eq.sub, lim);

    rep.image = true;
    rep.witness = true;
    for (std::size_t ki = 0; ki < hx.elems.size(); ++ki) {
        if (vf.tbl[ki] != vg.tbl[ki]) continue;
        Mask k = hx.elems[ki];
        // canonical preimage along the inclusion
        Mask pre = 0;
        for (std::size_t e = 0; e < eq.elements.size(); ++e)
            if (k & (1ull << eq.elements[e])) pre |= 1ull << e;
        int pidx = he.index_of(variant_closure(v, eq.sub, pre));
        bool via_witness = pidx >= 0 && vh.tbl[pidx] == static_cast<int>(ki);
        if (!via_witness) {
            rep.witness = false;
            bool hit = std::find(vh.tbl.begin(), vh.tbl.end(), static_cast<int>(ki)) != vh.tbl.end();
            if (!hit) {
                rep.image = false;
                if (!rep.counterexample) rep.counterexample = k;
            }
        }
    }
    return rep;
}

std::vector<Coalgebra> enumerate_coalgebras(Variant v, const FinPoset& carrier) {
    std::vector<Mask> candidates;
    Mask full = carrier.universe();
    for (Mask s = 0;; ++s) {
        if (variant_qualifies(v, carrier, s)) candidates.push_back(s);
        if (s == full) break;
    }
    std::vector<Coalgebra> out;
    int n = carrier.size();
    if (n == 0) {
        out.emplace_back(v, carrier, std::vector<Mask>{});
        return out;
    }
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    while (true) {
        bool mono = true;
        for (int x = 0; x < n && mono; ++x)
            for (int y = 0; y < n && mono; ++y)
                if (x != y && carrier.leq(x, y) &&
                    !variant_leq(v, carrier, candidates[pick[x]], candidates[pick[y]]))
                    mono = false;
        if (mono) {
            std::vector<Mask> succ(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x) succ[x] = candidates[pick[x]];
            out.emplace_back(v, carrier, std::move(succ));
        }
        std::size_t pos = 0;
        while (pos < pick.size() && pick[pos] == candidates.size() - 1) pick[pos++] = 0;
        if (pos == pick.size()) break;
        ++pick[pos];
    }
    return out;
}

Coalgebra random_coalgebra(Variant v, const FinPoset& carrier, Rng& rng) {
    int n = carrier.size();
    Mask full = carrier.universe();
    auto random_subset = [&]() { return n == 0 ? 0 : (rng.next() & full); };
    std::vector<Mask> succ(static_cast<std::size_t>(n));
    switch (v) {
        case Variant::Classical:
            for (int x = 0; x < n; ++x) succ[x] = random_subset();
            break;
        case Variant::Lower: {
            // accumulating down-closures of seeds below each state is
            // monotone by construction
            std::vector<Mask> seed(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x) seed[x] = random_subset();
            for (int x = 0; x < n; ++x) {
                Mask acc = 0;
                for (int z = 0; z < n; ++z)
                    if (carrier.leq(z, x)) acc |= seed[z];
                succ[x] = carrier.down(acc);
            }
            break;
        }
        case Variant::Upper: {
            std::vector<Mask> seed(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x) seed[x] = carrier.up(random_subset());
            for (int x = 0; x < n; ++x) {
                Mask acc = full;
                for (int z = 0; z < n; ++z)
                    if (carrier.leq(z, x)) acc &= seed[z];
                succ[x] = acc;
            }
            break;
        }
        case Variant::Convex: {
            for (int attempt = 0; attempt < 64; ++attempt) {
                for (int x = 0; x < n; ++x) succ[x] = carrier.convex(random_subset());
                bool mono = true;
                for (int x = 0; x < n && mono; ++x)
                    for (int y = 0; y < n && mono; ++y)
                        if (x != y && carrier.leq(x, y) &&
                            !egli_milner_leq(carrier, succ[x], succ[y]))
                            mono = false;
                if (mono) return Coalgebra(v, carrier, std::move(succ));
            }
            std::fill(succ.begin(), succ.end(), full); // constant full map
            break;
        }
    }
    return Coalgebra(v, carrier, std::move(succ));
}

EqualizerLemmaReport check_equalizer_lemma(const CoreflexiveInstance& inst) {
    inst.require_valid();
    EqualizerLemmaReport rep;
    rep.up_ok = rep.down_ok = rep.convex_ok = true;

    EqualizerResult eq = equalizer(inst.f, inst.g);
    Mask im_h = eq.inclusion.image(eq.sub.universe());
    const FinPoset& x = inst.x;
    const FinPoset& y = inst.y;
    Mask full = x.universe();
    for (Mask k = 0;; ++k) {
        Mask fk = inst.f.image(k), gk = inst.g.image(k);
        if (y.up(fk) == y.up(gk) && x.up(k) != x.up(k & im_h)) {
            rep.up_ok = false;
            if (!rep.counterexample) rep.counterexample = k;
        }
        if (y.down(fk) == y.down(gk) && x.down(k) != x.down(k & im_h)) {
            rep.down_ok = false;
            if (!rep.counterexample) rep.counterexample = k;
        }
        if (y.convex(fk) == y.convex(gk) && x.convex(k) != x.convex(k & im_h)) {
            rep.convex_ok = false;
            if (!rep.counterexample) rep.counterexample = k;
        }
        if (k == full) break;
    }
    return rep;
}

} // namespace vw
