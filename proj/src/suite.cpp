#include "vw/suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace vw {

using io::json;

HyperLimits SuiteConfig::limits() const {
    HyperLimits lim;
    if (max_n > 0) {
        int capped = std::min(max_n, HyperLimits::hard_max_base);
        lim.max_base_classical = capped;
        lim.max_base_convex = capped;
        lim.max_base_upper_lower = capped;
    }
    return lim;
}

void SuiteConfig::validate() const {
    if (trials < 1) throw ConfigError("trial count must be at least 1");
    if (max_n < 0 || max_n > HyperLimits::hard_max_base)
        throw ConfigError("max-n must lie in 1.." + std::to_string(HyperLimits::hard_max_base));
    if (format != "text" && format != "json")
        throw ConfigError("format must be text or json");
    auto names = suite_names();
    if (suite != "all" && suite != "selftest" &&
        std::find(names.begin(), names.end(), suite) == names.end())
        throw ConfigError("unknown suite '" + suite + "'");
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    int workers = static_cast<int>(std::min<unsigned>(hw ? hw : 1, 8));
    if (n < 64 || workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < n; i += workers) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

namespace {

constexpr Variant kVariants[] = {Variant::Classical, Variant::Convex, Variant::Upper,
                                 Variant::Lower};

struct PropCtx {
    const SuiteConfig& cfg;
    PropertyResult& res;
    std::uint64_t prop_seed;
    HyperLimits lim;

    void check(bool ok, const std::function<json()>& payload = nullptr) {
        ++res.checks;
        if (!ok) {
            ++res.failures;
            if (res.counterexample.is_null())
                res.counterexample = payload ? payload() : json{{"detail", "unrecorded"}};
        }
    }

    Rng rng(std::uint64_t salt) const { return Rng(prop_seed ^ (salt * 0x9e3779b97f4a7c15ull)); }
};

using PropFn = void (*)(PropCtx&);

struct Property {
    const char* suite;
    const char* name;
    PropFn fn;
};

// ---------------------------------------------------------------- helpers

const std::vector<FinPoset>& posets_up_to(int n) {
    static std::map<int, std::vector<FinPoset>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<FinPoset> all;
    for (int k = 0; k <= n; ++k)
        for (FinPoset& p : enumerate_posets(k)) all.push_back(std::move(p));
    return cache.emplace(n, std::move(all)).first->second;
}

std::vector<FinPoset> discrete_posets_up_to(int n) {
    std::vector<FinPoset> out;
    for (int k = 0; k <= n; ++k) out.push_back(FinPoset::discrete(k));
    return out;
}

json poset_payload(const FinPoset& p) { return io::poset_to_json(p); }

// hyper-map table straight from prebuilt hyperspaces
std::vector<int> hyper_tbl(Variant v, const Hyperspace& hd, const Hyperspace& hc,
                           const std::vector<int>& base_tbl) {
    std::vector<int> t(hd.elems.size());
    for (std::size_t k = 0; k < hd.elems.size(); ++k) {
        Mask img = 0;
        for (int i : bits_of(hd.elems[k])) img |= 1ull << base_tbl[static_cast<std::size_t>(i)];
        t[k] = hc.index_of(variant_closure(v, hc.base, img));
    }
    return t;
}

Partition refine_rounds(const Coalgebra& c, int rounds) {
    BehaviorClasses b = behavior_refine_init(c);
    for (int r = 0; r < rounds; ++r) b = behavior_refine_step(c, b);
    return Partition::normalized(b.id);
}

// ---------------------------------------------------------------- finposet

void prop_closure_laws(PropCtx& ctx) {
    using ClosureOp = Mask (*)(const FinPoset&, Mask);
    static constexpr ClosureOp ops[] = {
        [](const FinPoset& q, Mask s) { return q.up(s); },
        [](const FinPoset& q, Mask s) { return q.down(s); },
        [](const FinPoset& q, Mask s) { return q.convex(s); }};
    for (const FinPoset& p : posets_up_to(4)) {
        Mask full = p.universe();
        for (Mask s = 0;; ++s) {
            for (ClosureOp op : ops) {
                Mask cs = op(p, s);
                ctx.check((s & ~cs) == 0, [&] { return poset_payload(p); });  // extensive
                ctx.check(op(p, cs) == cs, [&] { return poset_payload(p); }); // idempotent
            }
            for (Mask t = s;; ++t) {
                if ((s & ~t) == 0)
                    for (ClosureOp op : ops)
                        ctx.check((op(p, s) & ~op(p, t)) == 0,
                                  [&] { return poset_payload(p); }); // monotone
                if (t == full) break;
            }
            ctx.check(p.convex(s) == (p.up(s) & p.down(s)), [&] { return poset_payload(p); });
            if (s == full) break;
        }
    }
}

void prop_equalizer_order_reflecting(PropCtx& ctx) {
    const auto& posets = posets_up_to(3);
    for (const FinPoset& p : posets)
        for (const FinPoset& q : posets) {
            auto tables = enumerate_monotone_tables(p, q);
            for (const auto& ft : tables)
                for (const auto& gt : tables) {
                    MonotoneMap f(p, q, ft), g(p, q, gt);
                    EqualizerResult eq = equalizer(f, g);
                    ctx.check(eq.inclusion.is_order_reflecting(), [&] {
                        return json{{"dom", poset_payload(p)}, {"f", ft}, {"g", gt}};
                    });
                }
        }
}

void prop_coreflexive_generator(PropCtx& ctx) {
    Rng rng = ctx.rng(11);
    for (int t = 0; t < ctx.cfg.trials; ++t) {
        std::uint64_t seed = rng.next();
        bool discrete = (t % 4) == 0;
        CoreflexiveInstance a = generate_coreflexive_pair(seed, 6, discrete);
        CoreflexiveInstance b = generate_coreflexive_pair(seed, 6, discrete);
        bool same = a.x == b.x && a.y == b.y && a.f == b.f && a.g == b.g &&
                    a.retraction == b.retraction;
        ctx.check(same, [&] { return json{{"seed", seed}}; });
        MonotoneMap kf = compose(a.retraction, a.f);
        MonotoneMap kg = compose(a.retraction, a.g);
        MonotoneMap id = MonotoneMap::identity(a.x);
        ctx.check(kf == id && kg == id, [&] { return json{{"seed", seed}}; });
    }
}

void prop_opposite_involution(PropCtx& ctx) {
    for (const FinPoset& p : posets_up_to(4)) {
        ctx.check(p.opposite().opposite() == p, [&] { return poset_payload(p); });
        FinPoset op = p.opposite();
        Mask full = p.universe();
        for (Mask s = 0;; ++s) {
            ctx.check(op.up(s) == p.down(s) && op.down(s) == p.up(s),
                      [&] { return poset_payload(p); });
            if (s == full) break;
        }
    }
}

// -------------------------------------------------------------- hyperspace

void prop_functor_laws(PropCtx& ctx) {
    const auto& all = posets_up_to(3);
    for (Variant v : kVariants) {
        std::vector<FinPoset> posets =
            v == Variant::Classical ? discrete_posets_up_to(3) : all;
        std::vector<Hyperspace> hs;
        hs.reserve(posets.size());
        for (const FinPoset& p : posets) hs.push_back(build_hyperspace(v, p, ctx.lim));

        for (std::size_t i = 0; i < posets.size(); ++i) {
            std::vector<int> idt(static_cast<std::size_t>(posets[i].size()));
            for (int x = 0; x < posets[i].size(); ++x) idt[static_cast<std::size_t>(x)] = x;
            std::vector<int> vt = hyper_tbl(v, hs[i], hs[i], idt);
            bool ok = true;
            for (std::size_t k = 0; k < vt.size(); ++k)
                if (vt[k] != static_cast<int>(k)) ok = false;
            ctx.check(ok, [&] {
                return json{{"variant", variant_name(v)}, {"poset", poset_payload(posets[i])}};
            });
        }

        std::vector<std::vector<std::vector<std::vector<int>>>> maps(posets.size());
        for (std::size_t i = 0; i < posets.size(); ++i) {
            maps[i].resize(posets.size());
            for (std::size_t j = 0; j < posets.size(); ++j)
                maps[i][j] = enumerate_monotone_tables(posets[i], posets[j]);
        }
        for (std::size_t i = 0; i < posets.size(); ++i)
            for (std::size_t j = 0; j < posets.size(); ++j) {
                if (maps[i][j].empty()) continue;
                std::vector<std::vector<int>> vf_tbls;
                vf_tbls.reserve(maps[i][j].size());
                for (const auto& ft : maps[i][j])
                    vf_tbls.push_back(hyper_tbl(v, hs[i], hs[j], ft));
                for (std::size_t k = 0; k < posets.size(); ++k) {
                    if (maps[j][k].empty()) continue;
                    for (const auto& gt : maps[j][k]) {
                        std::vector<int> vg = hyper_tbl(v, hs[j], hs[k], gt);
                        for (std::size_t fi = 0; fi < maps[i][j].size(); ++fi) {
                            const auto& ft = maps[i][j][fi];
                            std::vector<int> gf(ft.size());
                            for (std::size_t x = 0; x < ft.size(); ++x)
                                gf[x] = gt[static_cast<std::size_t>(ft[x])];
                            std::vector<int> direct = hyper_tbl(v, hs[i], hs[k], gf);
                            bool ok = true;
                            for (std::size_t e = 0; e < direct.size(); ++e)
                                if (direct[e] != vg[static_cast<std::size_t>(vf_tbls[fi][e])])
                                    ok = false;
                            ctx.check(ok, [&] {
                                return json{{"variant", variant_name(v)},
                                            {"f", ft},
                                            {"g", gt},
                                            {"dom", poset_payload(posets[i])}};
                            });
                        }
                    }
                }
            }
    }
}

void prop_em_partial_order(PropCtx& ctx) {
    for (int n = 0; n <= 5; ++n)
        for (const FinPoset& p : enumerate_posets(n)) {
            std::vector<Mask> convex;
            Mask full = p.universe();
            for (Mask s = 0;; ++s) {
                if (p.is_convex(s)) convex.push_back(s);
                if (s == full) break;
            }
            for (Mask k : convex)
                for (Mask l : convex) {
                    bool both = egli_milner_leq(p, k, l) && egli_milner_leq(p, l, k);
                    ctx.check(!both || k == l, [&] {
                        return json{{"poset", poset_payload(p)},
                                    {"k", io::subset_to_json(k)},
                                    {"l", io::subset_to_json(l)}};
                    });
                }
        }
}

void prop_em_preorder_witness(PropCtx& ctx) {
    // a two-element chain has convex subsets only, so the collapse needs the
    // chain with three points
    FinPoset two = FinPoset::chain(2);
    bool broken_on_two = false;
    for (Mask k = 0; k <= two.universe(); ++k) {
        ctx.check(two.is_convex(k));
        for (Mask l = 0; l <= two.universe(); ++l)
            if (k != l && egli_milner_leq(two, k, l) && egli_milner_leq(two, l, k))
                broken_on_two = true;
    }
    ctx.check(!broken_on_two);

    FinPoset three = FinPoset::chain(3);
    bool witness = false;
    for (Mask k = 0; k <= three.universe(); ++k)
        for (Mask l = 0; l <= three.universe(); ++l)
            if (k != l && egli_milner_leq(three, k, l) && egli_milner_leq(three, l, k) &&
                (!three.is_convex(k) || !three.is_convex(l)))
                witness = true;
    ctx.check(witness, [] { return json{{"detail", "no preorder witness on the 3-point chain"}}; });
}

void prop_em_empty_isolated(PropCtx& ctx) {
    for (const FinPoset& p : posets_up_to(4)) {
        Mask full = p.universe();
        for (Mask k = 0;; ++k) {
            bool comparable = egli_milner_leq(p, k, 0) || egli_milner_leq(p, 0, k);
            ctx.check(!comparable || k == 0, [&] {
                return json{{"poset", poset_payload(p)}, {"k", io::subset_to_json(k)}};
            });
            if (k == full) break;
        }
    }
}

void prop_regmono_preserved(PropCtx& ctx) {
    const auto& all = posets_up_to(3);
    for (Variant v : kVariants) {
        std::vector<FinPoset> posets =
            v == Variant::Classical ? discrete_posets_up_to(3) : all;
        for (const FinPoset& p : posets)
            for (const FinPoset& q : posets)
                for (const auto& t : enumerate_monotone_tables(p, q)) {
                    MonotoneMap f(p, q, t);
                    if (!f.is_order_reflecting()) continue;
                    MonotoneMap vf = hyper_map(v, f, ctx.lim);
                    ctx.check(vf.is_order_reflecting(), [&] {
                        return json{{"variant", variant_name(v)},
                                    {"dom", poset_payload(p)},
                                    {"cod", poset_payload(q)},
                                    {"tbl", t}};
                    });
                }
    }
}

void prop_regmono_closure_equivalences(PropCtx& ctx) {
    const auto& all = posets_up_to(4);
    for (const FinPoset& p : all)
        for (const FinPoset& q : all)
            for (const auto& t : enumerate_monotone_tables(p, q)) {
                MonotoneMap f(p, q, t);
                if (!f.is_order_reflecting()) continue;
                Mask full = p.universe();
                for (Mask k = 0;; ++k) {
                    for (Mask l = 0;; ++l) {
                        Mask fk = f.image(k), fl = f.image(l);
                        bool up_src = (p.up(k) & ~p.up(l)) == 0;
                        bool up_img = (q.up(fk) & ~q.up(fl)) == 0;
                        bool dn_src = (p.down(k) & ~p.down(l)) == 0;
                        bool dn_img = (q.down(fk) & ~q.down(fl)) == 0;
                        bool em_src = egli_milner_leq(p, p.convex(k), p.convex(l));
                        bool em_img = egli_milner_leq(q, q.convex(fk), q.convex(fl));
                        ctx.check(up_src == up_img && dn_src == dn_img && em_src == em_img, [&] {
                            return json{{"dom", poset_payload(p)},
                                        {"tbl", t},
                                        {"k", io::subset_to_json(k)},
                                        {"l", io::subset_to_json(l)}};
                        });
                        if (l == full) break;
                    }
                    if (k == full) break;
                }
            }
}

void prop_degroot(PropCtx& ctx) {
    for (const FinPoset& p : posets_up_to(4)) {
        DeGrootWitness w = degroot_square(p, ctx.lim);
        ctx.check(w.order_isomorphism, [&] { return poset_payload(p); });
    }
    const auto& posets = posets_up_to(3);
    for (const FinPoset& p : posets)
        for (const FinPoset& q : posets)
            for (const auto& t : enumerate_monotone_tables(p, q)) {
                MonotoneMap f(p, q, t);
                MonotoneMap upper = hyper_map(Variant::Upper, f, ctx.lim);
                MonotoneMap lower = hyper_map(Variant::Lower, f.opposite(), ctx.lim);
                ctx.check(upper.tbl == lower.tbl,
                          [&] { return json{{"dom", poset_payload(p)}, {"tbl", t}}; });
            }
}

void prop_singleton_embedding(PropCtx& ctx) {
    for (Variant v : kVariants) {
        std::vector<FinPoset> posets =
            v == Variant::Classical ? discrete_posets_up_to(4) : posets_up_to(4);
        for (const FinPoset& p : posets) {
            MonotoneMap e = singleton_embedding(v, p, ctx.lim);
            bool reflect = e.is_order_reflecting();
            bool inject = true;
            std::set<int> seen;
            for (int x = 0; x < p.size(); ++x)
                if (!seen.insert(e(x)).second) inject = false;
            ctx.check(reflect && inject, [&] {
                return json{{"variant", variant_name(v)}, {"poset", poset_payload(p)}};
            });
        }
    }
}

// ------------------------------------------------------------------ coalg

void prop_bisim_fixpoint(PropCtx& ctx) {
    for (int n = 0; n <= 4; ++n) {
        FinPoset carrier = FinPoset::discrete(n);
        std::vector<Coalgebra> all = enumerate_coalgebras(Variant::Classical, carrier);
        std::vector<char> okv(all.size(), 1);
        parallel_for(static_cast<int>(all.size()), [&](int i) {
            const Coalgebra& c = all[static_cast<std::size_t>(i)];
            Partition p = bisim_quotient(c);
            bool ok = p == refine_rounds(c, c.states() + 1);
            QuotientResult qr = quotient_coalgebra(c, p);
            ok = ok && is_coalg_morphism(qr.projection, c, qr.quotient);
            ok = ok && bisim_quotient(qr.quotient).block_count == qr.quotient.states();
            okv[static_cast<std::size_t>(i)] = ok ? 1 : 0;
        });
        for (std::size_t i = 0; i < all.size(); ++i)
            ctx.check(okv[i], [&] { return io::coalgebra_to_json(all[i]); });
    }
}

void prop_canonical_kernel_oracle(PropCtx& ctx) {
    for (int n = 0; n <= 4; ++n) {
        FinPoset carrier = FinPoset::discrete(n);
        std::vector<Coalgebra> all = enumerate_coalgebras(Variant::Classical, carrier);
        std::vector<char> okv(all.size(), 1);
        parallel_for(static_cast<int>(all.size()), [&](int i) {
            const Coalgebra& c = all[static_cast<std::size_t>(i)];
            okv[static_cast<std::size_t>(i)] =
                canonical_kernel(c, c.states()) == bisim_quotient(c) ? 1 : 0;
        });
        for (std::size_t i = 0; i < all.size(); ++i)
            ctx.check(okv[i], [&] { return io::coalgebra_to_json(all[i]); });
    }
    Rng rng = ctx.rng(23);
    int samples = std::max(ctx.cfg.trials, 500);
    for (int t = 0; t < samples; ++t) {
        int n = 5 + rng.below(2);
        FinPoset carrier = FinPoset::discrete(n);
        Coalgebra c = random_coalgebra(Variant::Classical, carrier, rng);
        ctx.check(canonical_kernel(c, n) == bisim_quotient(c),
                  [&] { return io::coalgebra_to_json(c); });
    }
}

void prop_chain_sizes(PropCtx& ctx) {
    ChainResult r = terminal_chain(Variant::Classical, std::nullopt, 3);
    std::vector<int> sizes;
    for (const ChainLevel& l : r.levels) sizes.push_back(l.space.size());
    ctx.check(sizes == std::vector<int>({1, 2, 4, 16}), [&] { return json{{"sizes", sizes}}; });
    ctx.check(!r.convergence.converged);

    ChainResult conv = terminal_chain(Variant::Convex, FinPoset::discrete(1), 1);
    ctx.check(conv.space(1).size() == 2, [&] { return json{{"size", conv.space(1).size()}}; });

    ChainResult zero = terminal_chain(Variant::Upper, std::nullopt, 0);
    ctx.check(zero.levels.size() == 1 && zero.space(0).size() == 1 &&
              !zero.convergence.converged);
}

void prop_cone_coherence(PropCtx& ctx) {
    Rng rng = ctx.rng(31);
    for (Variant v : kVariants) {
        ChainResult chain = terminal_chain(v, std::nullopt, 3);
        int depth = static_cast<int>(chain.levels.size()) - 1;
        for (int t = 0; t < std::max(8, ctx.cfg.trials / 8); ++t) {
            int n = 1 + rng.below(3);
            FinPoset carrier = random_poset(rng, n, v == Variant::Classical);
            Coalgebra c = random_coalgebra(v, carrier, rng);
            std::vector<int> prev = canonical_map(c, 0, chain);
            for (int d = 1; d <= depth; ++d) {
                std::vector<int> cur = canonical_map(c, d, chain);
                const MonotoneMap& proj = *chain.levels[static_cast<std::size_t>(d)].proj;
                bool ok = true;
                for (int x = 0; x < c.states(); ++x)
                    if (proj(cur[x]) != prev[x]) ok = false;
                ctx.check(ok, [&] { return io::coalgebra_to_json(c); });
                prev = std::move(cur);
            }
        }
    }
    // observed chain: the output coordinate rides through the projections
    FinPoset out2 = FinPoset::discrete(2);
    ChainResult chain = terminal_chain(Variant::Classical, out2, 2);
    FinPoset carrier = FinPoset::discrete(2);
    Coalgebra c(Variant::Classical, carrier, {0b10, 0b00});
    MonotoneMap obs = MonotoneMap::identity(carrier);
    std::vector<int> b1 = canonical_map(c, 1, chain, obs);
    std::vector<int> b2 = canonical_map(c, 2, chain, obs);
    const MonotoneMap& proj = *chain.levels[2].proj;
    ctx.check(proj(b2[0]) == b1[0] && proj(b2[1]) == b1[1]);
    ctx.check(b2[0] != b2[1]); // deadlock splits from the stepping state
}

void prop_preservation(PropCtx& ctx) {
    for (Variant v : kVariants) {
        int trials = ctx.cfg.trials;
        std::vector<std::uint64_t> seeds(static_cast<std::size_t>(trials));
        Rng rng = ctx.rng(41 + static_cast<std::uint64_t>(v));
        for (auto& s : seeds) s = rng.next();
        std::vector<char> okv(static_cast<std::size_t>(trials), 1);
        int max_size = v == Variant::Convex ? 6 : 7;
        parallel_for(trials, [&](int t) {
            CoreflexiveInstance inst = generate_coreflexive_pair(
                seeds[static_cast<std::size_t>(t)], max_size, v == Variant::Classical);
            PreservationReport rep = check_coreflexive_preservation(v, inst, ctx.lim);
            okv[static_cast<std::size_t>(t)] = (rep.ok() && rep.witness) ? 1 : 0;
        });
        for (int t = 0; t < trials; ++t)
            ctx.check(okv[static_cast<std::size_t>(t)], [&] {
                return json{{"variant", variant_name(v)},
                            {"seed", seeds[static_cast<std::size_t>(t)]}};
            });
    }
}

void prop_equalizer_lemma(PropCtx& ctx) {
    int per_class = std::max(1, ctx.cfg.trials / 4);
    Rng rng = ctx.rng(53);
    for (int cls = 0; cls < 4; ++cls)
        for (int t = 0; t < per_class; ++t) {
            std::uint64_t seed = rng.next();
            CoreflexiveInstance inst = generate_coreflexive_pair(seed, 6, cls == 0);
            EqualizerLemmaReport rep = check_equalizer_lemma(inst);
            ctx.check(rep.ok(), [&] {
                return json{{"seed", seed},
                            {"counterexample",
                             rep.counterexample ? io::subset_to_json(*rep.counterexample)
                                                : json(nullptr)}};
            });
        }
}

void prop_ordered_refinement_matches_kernel(PropCtx& ctx) {
    Rng rng = ctx.rng(61);
    for (Variant v : {Variant::Convex, Variant::Upper, Variant::Lower}) {
        ChainResult chain = terminal_chain(v, std::nullopt, 3);
        int depth = static_cast<int>(chain.levels.size()) - 1;
        for (int t = 0; t < std::max(16, ctx.cfg.trials / 4); ++t) {
            int n = 1 + rng.below(3);
            FinPoset carrier = random_poset(rng, n, false);
            Coalgebra c = random_coalgebra(v, carrier, rng);
            for (int d = 0; d <= depth; ++d) {
                Partition kernel = Partition::normalized(canonical_map(c, d, chain));
                Partition rounds = refine_rounds(c, d);
                ctx.check(kernel == rounds, [&] {
                    return json{{"variant", variant_name(v)},
                                {"depth", d},
                                {"coalgebra", io::coalgebra_to_json(c)}};
                });
            }
        }
    }
}

// ---------------------------------------------------------------- dualalg

void prop_roundtrip_modal(PropCtx& ctx) {
    for (int atoms = 0; atoms <= 3; ++atoms)
        for (const ModalAlgebra& a : enumerate_modal_algebras(atoms)) {
            ctx.check(check_axioms(a).ok(), [&] { return io::modal_to_json(a); });
            ModalAlgebra back = complex_modal(atoms_frame(a));
            ctx.check(back == a, [&] { return io::modal_to_json(a); });
        }
}

void prop_roundtrip_classical_frames(PropCtx& ctx) {
    for (int n = 0; n <= 4; ++n) {
        FinPoset carrier = FinPoset::discrete(n);
        std::vector<Coalgebra> all = enumerate_coalgebras(Variant::Classical, carrier);
        std::vector<char> okv(all.size(), 1);
        parallel_for(static_cast<int>(all.size()), [&](int i) {
            const Coalgebra& c = all[static_cast<std::size_t>(i)];
            Coalgebra back = atoms_frame(complex_modal(c));
            okv[static_cast<std::size_t>(i)] = back.succ == c.succ ? 1 : 0;
        });
        for (std::size_t i = 0; i < all.size(); ++i)
            ctx.check(okv[i], [&] { return io::coalgebra_to_json(all[i]); });
    }
}

void prop_roundtrip_convex_frames(PropCtx& ctx) {
    for (const FinPoset& p : posets_up_to(3))
        for (const Coalgebra& c : enumerate_coalgebras(Variant::Convex, p)) {
            Coalgebra back = primes_frame(complex_positive(c));
            ctx.check(back.succ == c.succ && back.carrier == c.carrier,
                      [&] { return io::coalgebra_to_json(c); });
        }
}

void prop_roundtrip_positive_algebras(PropCtx& ctx) {
    for (const FinPoset& q : posets_up_to(2))
        for (const PositiveModalAlgebra& a : enumerate_positive_algebras(q)) {
            PositiveModalAlgebra back = complex_positive(primes_frame(a));
            ctx.check(back == a, [&] { return io::positive_to_json(a); });
        }
}

void prop_morphism_duality(PropCtx& ctx) {
    struct Entry {
        Coalgebra c;
        std::vector<Mask> box;
    };
    std::vector<Entry> entries;
    for (int n = 0; n <= 3; ++n) {
        FinPoset carrier = FinPoset::discrete(n);
        for (Coalgebra& c : enumerate_coalgebras(Variant::Classical, carrier)) {
            ModalAlgebra a = complex_modal(c);
            entries.push_back(Entry{std::move(c), std::move(a.box)});
        }
    }
    std::vector<long long> checks(entries.size(), 0), fails(entries.size(), 0);
    std::vector<json> cex(entries.size(), json(nullptr));
    parallel_for(static_cast<int>(entries.size()), [&](int idx) {
        const Entry& e1 = entries[static_cast<std::size_t>(idx)];
        int n1 = e1.c.states();
        for (const Entry& e2 : entries) {
            int n2 = e2.c.states();
            if (n1 > 0 && n2 == 0) continue;
            std::vector<int> g(static_cast<std::size_t>(n1), 0);
            while (true) {
                bool morph = true;
                for (int x = 0; x < n1 && morph; ++x) {
                    Mask img = 0;
                    for (int y : bits_of(e1.c.succ[x])) img |= 1ull << g[static_cast<std::size_t>(y)];
                    if (e2.c.succ[static_cast<std::size_t>(g[static_cast<std::size_t>(x)])] != img)
                        morph = false;
                }
                bool dual = true;
                for (Mask u = 0; u < e2.box.size() && dual; ++u) {
                    Mask pre_u = 0, pre_box = 0;
                    for (int x = 0; x < n1; ++x) {
                        Mask bit = 1ull << g[static_cast<std::size_t>(x)];
                        if (u & bit) pre_u |= 1ull << x;
                        if (e2.box[u] & bit) pre_box |= 1ull << x;
                    }
                    if (pre_box != e1.box[pre_u]) dual = false;
                }
                ++checks[static_cast<std::size_t>(idx)];
                if (morph != dual) {
                    ++fails[static_cast<std::size_t>(idx)];
                    if (cex[static_cast<std::size_t>(idx)].is_null())
                        cex[static_cast<std::size_t>(idx)] =
                            json{{"c1", io::coalgebra_to_json(e1.c)},
                                 {"c2", io::coalgebra_to_json(e2.c)},
                                 {"g", g}};
                }
                if (n1 == 0) break;
                int pos = 0;
                while (pos < n1 && g[static_cast<std::size_t>(pos)] == n2 - 1)
                    g[static_cast<std::size_t>(pos++)] = 0;
                if (pos == n1) break;
                ++g[static_cast<std::size_t>(pos)];
            }
        }
    });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        ctx.res.checks += checks[i];
        ctx.res.failures += fails[i];
        if (ctx.res.counterexample.is_null() && !cex[i].is_null())
            ctx.res.counterexample = cex[i];
    }
}

void prop_axioms_exhaustive(PropCtx& ctx) {
    for (int n = 0; n <= 3; ++n)
        for (const Coalgebra& c :
             enumerate_coalgebras(Variant::Classical, FinPoset::discrete(n))) {
            ctx.check(check_axioms(complex_modal(c)).ok(),
                      [&] { return io::coalgebra_to_json(c); });
            ctx.check(interdefinability_check(c), [&] { return io::coalgebra_to_json(c); });
        }
    for (const FinPoset& p : posets_up_to(3)) {
        for (const Coalgebra& c : enumerate_coalgebras(Variant::Convex, p))
            ctx.check(check_axioms(complex_positive(c)).ok(),
                      [&] { return io::coalgebra_to_json(c); });
        for (const Coalgebra& c : enumerate_coalgebras(Variant::Upper, p))
            ctx.check(check_axioms(complex_box(c)).ok(),
                      [&] { return io::coalgebra_to_json(c); });
        for (const Coalgebra& c : enumerate_coalgebras(Variant::Lower, p))
            ctx.check(check_axioms(complex_diamond(c)).ok(),
                      [&] { return io::coalgebra_to_json(c); });
    }
}

void prop_axioms_sampled(PropCtx& ctx) {
    int total = std::max(1000, ctx.cfg.trials);
    Rng seeder = ctx.rng(73);
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(total));
    for (auto& s : seeds) s = seeder.next();
    std::vector<char> okv(static_cast<std::size_t>(total), 1);
    parallel_for(total, [&](int t) {
        Rng r(seeds[static_cast<std::size_t>(t)]);
        Variant v = kVariants[t % 4];
        int n = v == Variant::Classical ? 5 + r.below(4) : 4 + r.below(3);
        FinPoset carrier = random_poset(r, n, v == Variant::Classical);
        Coalgebra c = random_coalgebra(v, carrier, r);
        bool ok = true;
        switch (v) {
            case Variant::Classical:
                ok = check_axioms(complex_modal(c)).ok() && interdefinability_check(c);
                break;
            case Variant::Convex: ok = check_axioms(complex_positive(c)).ok(); break;
            case Variant::Upper: ok = check_axioms(complex_box(c)).ok(); break;
            case Variant::Lower: ok = check_axioms(complex_diamond(c)).ok(); break;
        }
        okv[static_cast<std::size_t>(t)] = ok ? 1 : 0;
    });
    for (int t = 0; t < total; ++t)
        ctx.check(okv[static_cast<std::size_t>(t)],
                  [&] { return json{{"seed", seeds[static_cast<std::size_t>(t)]}}; });
}

void prop_generation(PropCtx& ctx) {
    for (int n = 0; n <= 3; ++n) {
        GenerationReport r = generation_check(Variant::Classical, FinPoset::discrete(n), ctx.lim);
        ctx.check(r.ok(), [&] { return io::generation_report_to_json(r); });
    }
    for (const FinPoset& p : posets_up_to(3)) {
        GenerationReport r = generation_check(Variant::Convex, p, ctx.lim);
        ctx.check(r.ok(), [&] {
            return json{{"poset", poset_payload(p)}, {"report", io::generation_report_to_json(r)}};
        });
    }
    for (const FinPoset& p : posets_up_to(4))
        for (Variant v : {Variant::Upper, Variant::Lower}) {
            GenerationReport r = generation_check(v, p, ctx.lim);
            ctx.check(r.ok(), [&] {
                return json{{"variant", variant_name(v)}, {"poset", poset_payload(p)}};
            });
        }
}

void prop_separating_basics(PropCtx& ctx) {
    for (int n = 0; n <= 4; ++n) {
        std::vector<Mask> atoms;
        for (int i = 0; i < n; ++i) atoms.push_back(1ull << i);
        GenerationClosure r = separating_generates_boolean(atoms, n);
        ctx.check(r.separates && r.full, [&] { return json{{"n", n}}; });
        if (n >= 2) {
            Mask full = n == 64 ? ~0ull : (1ull << n) - 1;
            GenerationClosure r2 = separating_generates_boolean({0, full}, n);
            ctx.check(!r2.separates && !r2.full && r2.closure == std::vector<Mask>{full},
                      [&] { return json{{"n", n}}; });
        }
    }
    for (const FinPoset& p : posets_up_to(4)) {
        std::vector<Mask> fam;
        for (int q = 0; q < p.size(); ++q) fam.push_back(p.up_row(q));
        GenerationClosure r = separating_generates_ordered(fam, p);
        ctx.check(r.separates && r.full, [&] { return poset_payload(p); });
        for (int q = 0; q < p.size(); ++q) {
            Mask meet = p.universe();
            for (Mask u : r.closure)
                if (u & (1ull << q)) meet &= u;
            ctx.check(meet == p.up_row(q), [&] { return poset_payload(p); });
        }
    }
}

// ---------------------------------------------------------------- onestep

std::vector<std::string> arity_names(int k) {
    static const char* pool[] = {"p", "q", "r"};
    std::vector<std::string> out;
    for (int i = 0; i < k; ++i) out.emplace_back(pool[i]);
    return out;
}

void prop_onestep_units(PropCtx& ctx) {
    for (int nx = 0; nx <= 1; ++nx) {
        std::vector<std::string> xa = arity_names(nx);
        FreeBA fx = free_ba(xa);
        std::vector<Rank0Term> eta_x;
        for (int i = 0; i < nx; ++i) eta_x.push_back(rank0_generator(xa, i));
        for (Mask vals = 0; vals <= fx.universe(); ++vals) {
            Rank0Term tau{xa, vals};
            ctx.check(compose_00(tau, eta_x) == tau, [&] { return io::rank0_to_json(tau); });
        }
        for (int ny = 0; ny <= 1; ++ny) {
            std::vector<std::string> ya = arity_names(ny);
            // prop the generator law over every rank-0 tuple
            FreeBA fy = free_ba(ya);
            std::vector<Mask> choice(static_cast<std::size_t>(nx), 0);
            while (true) {
                std::vector<Rank0Term> rho;
                for (int i = 0; i < nx; ++i) rho.push_back(Rank0Term{ya, choice[static_cast<std::size_t>(i)]});
                for (int i = 0; i < nx; ++i)
                    ctx.check(compose_00(eta_x[static_cast<std::size_t>(i)], rho) ==
                                  rho[static_cast<std::size_t>(i)],
                              [&] { return io::rank0_to_json(rho[static_cast<std::size_t>(i)]); });
                if (nx == 0) break;
                std::size_t pos = 0;
                while (pos < choice.size() && choice[pos] == fy.universe()) choice[pos++] = 0;
                if (pos == choice.size()) break;
                ++choice[pos];
            }
            // rank-1 generator law on a sample of tuples
            OneStepAlgebra alg_y = one_step(fy.valuations());
            Rng rng = ctx.rng(81);
            for (int t = 0; t < 16; ++t) {
                std::vector<Rank1Term> rho1;
                for (int i = 0; i < nx; ++i)
                    rho1.push_back(Rank1Term{ya, rng.next() & alg_y.universe()});
                for (int i = 0; i < nx; ++i)
                    ctx.check(compose_01(eta_x[static_cast<std::size_t>(i)], rho1) ==
                                  rho1[static_cast<std::size_t>(i)],
                              [&] { return io::rank1_to_json(rho1[static_cast<std::size_t>(i)]); });
            }
        }
        // gamma composed with the identity substitution
        OneStepAlgebra alg_x = one_step(fx.valuations());
        for (Mask e = 0; e <= alg_x.universe(); ++e) {
            Rank1Term gamma{xa, e};
            ctx.check(compose_10(gamma, eta_x) == gamma, [&] { return io::rank1_to_json(gamma); });
            if (e == alg_x.universe()) break;
        }
    }
    // top and bottom pass through the one-step substitution
    std::vector<std::string> xa = arity_names(1);
    FreeBA fx = free_ba(xa);
    OneStepAlgebra alg = one_step(fx.valuations());
    std::vector<Rank1Term> rho1{Rank1Term{xa, 5}};
    Rank1Term top_out = compose_01(Rank0Term{xa, fx.universe()}, rho1);
    Rank1Term bot_out = compose_01(Rank0Term{xa, 0}, rho1);
    ctx.check(top_out.elem == alg.universe());
    ctx.check(bot_out.elem == 0);
}

void prop_onestep_assoc(PropCtx& ctx) {
    // exhaustive at arity one
    std::vector<std::string> xa = arity_names(1), ya = {"u"}, za = {"w"};
    FreeBA fx = free_ba(xa), fy = free_ba(ya), fz = free_ba(za);
    OneStepAlgebra alg_x = one_step(fx.valuations());
    for (Mask tv = 0; tv <= fx.universe(); ++tv)
        for (Mask rv = 0; rv <= fy.universe(); ++rv)
            for (Mask sv = 0; sv <= fz.universe(); ++sv) {
                Rank0Term tau{xa, tv};
                std::vector<Rank0Term> rho{Rank0Term{ya, rv}};
                std::vector<Rank0Term> sigma{Rank0Term{za, sv}};
                std::vector<Rank0Term> rs{compose_00(rho[0], sigma)};
                ctx.check(compose_00(compose_00(tau, rho), sigma) == compose_00(tau, rs),
                          [&] { return io::rank0_to_json(tau); });
                for (Mask gv = 0; gv <= alg_x.universe(); ++gv) {
                    Rank1Term gamma{xa, gv};
                    ctx.check(compose_10(compose_10(gamma, rho), sigma) == compose_10(gamma, rs),
                              [&] { return io::rank1_to_json(gamma); });
                    if (gv == alg_x.universe()) break;
                }
            }
    // sampled at arity two
    std::vector<std::string> x2 = {"p", "q"}, y2 = {"u", "v"}, z2 = {"w", "z"};
    FreeBA fx2 = free_ba(x2), fy2 = free_ba(y2), fz2 = free_ba(z2);
    OneStepAlgebra alg_x2 = one_step(fx2.valuations());
    Rng rng = ctx.rng(83);
    int samples = std::max(1000, ctx.cfg.trials);
    for (int t = 0; t < samples; ++t) {
        Rank0Term tau{x2, rng.next() & fx2.universe()};
        std::vector<Rank0Term> rho{Rank0Term{y2, rng.next() & fy2.universe()},
                                   Rank0Term{y2, rng.next() & fy2.universe()}};
        std::vector<Rank0Term> sigma{Rank0Term{z2, rng.next() & fz2.universe()},
                                     Rank0Term{z2, rng.next() & fz2.universe()}};
        std::vector<Rank0Term> rs{compose_00(rho[0], sigma), compose_00(rho[1], sigma)};
        ctx.check(compose_00(compose_00(tau, rho), sigma) == compose_00(tau, rs),
                  [&] { return io::rank0_to_json(tau); });
        Rank1Term gamma{x2, rng.next() & alg_x2.universe()};
        ctx.check(compose_10(compose_10(gamma, rho), sigma) == compose_10(gamma, rs),
                  [&] { return io::rank1_to_json(gamma); });
    }
}

void prop_boxhat_naturality(PropCtx& ctx) {
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            FreeBA fa = free_ba(arity_names(a));
            FreeBA fb = free_ba(arity_names(b));
            OneStepAlgebra ta = one_step(fa.valuations());
            OneStepAlgebra tb = one_step(fb.valuations());
            std::vector<Mask> rho(static_cast<std::size_t>(a), 0);
            while (true) {
                BaHom h = extend(fa, fb.valuations(), rho);
                OneStepMap th = lift(h);
                std::size_t elems = std::size_t(1) << fa.valuations();
                for (Mask e = 0; e < elems; ++e)
                    ctx.check(th(ta.boxhat(e)) == tb.boxhat(h(e)), [&] {
                        return json{{"a", a}, {"b", b}, {"element", static_cast<std::uint64_t>(e)}};
                    });
                if (a == 0) break;
                std::size_t pos = 0;
                while (pos < rho.size() && rho[pos] == fb.universe()) rho[pos++] = 0;
                if (pos == rho.size()) break;
                ++rho[pos];
            }
        }
    // lift respects identities and composition
    FreeBA f1 = free_ba(arity_names(1));
    std::vector<Mask> id_rho{f1.eta(0)};
    OneStepMap ident = lift(extend(f1, f1.valuations(), id_rho));
    OneStepAlgebra t1 = one_step(f1.valuations());
    for (Mask e = 0; e <= t1.universe(); ++e) {
        ctx.check(ident(e) == e);
        if (e == t1.universe()) break;
    }
    Rng rng = ctx.rng(91);
    for (int t = 0; t < 64; ++t) {
        FreeBA fb2 = free_ba(arity_names(2));
        std::vector<Mask> r1{rng.next() & fb2.universe()};
        std::vector<Mask> r2{rng.next() & f1.universe(), rng.next() & f1.universe()};
        BaHom h = extend(f1, fb2.valuations(), r1);  // F(1) -> F(2)
        BaHom g = extend(fb2, f1.valuations(), r2);  // F(2) -> F(1)
        BaHom gh;
        gh.dom_atoms = h.dom_atoms;
        gh.cod_atoms = g.cod_atoms;
        gh.tbl.resize(h.tbl.size());
        for (std::size_t e = 0; e < h.tbl.size(); ++e) gh.tbl[e] = g(h(e));
        OneStepMap lhs = lift(gh);
        OneStepMap lh = lift(h), lg = lift(g);
        std::size_t elems = std::size_t(1) << h.dom_atoms;
        for (int probe = 0; probe < 8; ++probe) {
            Mask w = rng.next() & ((elems == 64 ? ~0ull : (1ull << elems) - 1));
            ctx.check(lhs(w) == lg(lh(w)), [&] { return json{{"w", static_cast<std::uint64_t>(w)}}; });
        }
    }
}

void prop_onestep_interdef_generation(PropCtx& ctx) {
    for (int m = 0; m <= 4; ++m) {
        ctx.check(interdef_onestep(m), [&] { return json{{"atoms", m}}; });
        ctx.check(generation_onestep(m), [&] { return json{{"atoms", m}}; });
        OneStepAlgebra alg = one_step(m);
        ctx.check(popcount(alg.universe()) == alg.points(), [&] { return json{{"atoms", m}}; });
    }
}

// -------------------------------------------------------------------- cli

void prop_json_roundtrips(PropCtx& ctx) {
    for (const FinPoset& p : posets_up_to(4))
        ctx.check(io::poset_from_json(io::poset_to_json(p)) == p,
                  [&] { return poset_payload(p); });
    Rng rng = ctx.rng(97);
    for (int t = 0; t < std::max(32, ctx.cfg.trials / 4); ++t) {
        Variant v = kVariants[t % 4];
        int n = 1 + rng.below(4);
        FinPoset carrier = random_poset(rng, n, v == Variant::Classical);
        Coalgebra c = random_coalgebra(v, carrier, rng);
        Coalgebra back = io::coalgebra_from_json(io::coalgebra_to_json(c));
        ctx.check(back.succ == c.succ && back.carrier == c.carrier && back.variant == c.variant,
                  [&] { return io::coalgebra_to_json(c); });

        MonotoneMap id = MonotoneMap::identity(carrier);
        ctx.check(io::map_from_json(io::map_to_json(id)) == id,
                  [&] { return io::map_to_json(id); });

        Mask s = rng.next() & carrier.universe();
        ctx.check(io::subset_from_json(io::subset_to_json(s), carrier.size()) == s);

        if (v == Variant::Classical) {
            ModalAlgebra a = complex_modal(c);
            ctx.check(io::modal_from_json(io::modal_to_json(a)) == a,
                      [&] { return io::modal_to_json(a); });
        }
        if (v == Variant::Convex && n <= 3) {
            PositiveModalAlgebra a = complex_positive(c);
            PositiveModalAlgebra back_a = io::positive_from_json(io::positive_to_json(a));
            ctx.check(back_a == a, [&] { return io::positive_to_json(a); });
        }
        if (v == Variant::Upper && n <= 4) {
            BoxAlgebra a = complex_box(c);
            ctx.check(io::boxalg_from_json(io::boxalg_to_json(a)) == a);
        }
        if (v == Variant::Lower && n <= 4) {
            DiamondAlgebra a = complex_diamond(c);
            ctx.check(io::diamondalg_from_json(io::diamondalg_to_json(a)) == a);
        }

        int arity = 1 + rng.below(2);
        FreeBA f = free_ba(arity_names(arity));
        Rank0Term r0{f.gens, rng.next() & f.universe()};
        ctx.check(io::rank0_from_json(io::rank0_to_json(r0)) == r0,
                  [&] { return io::rank0_to_json(r0); });
        OneStepAlgebra alg = one_step(f.valuations());
        Rank1Term r1{f.gens, rng.next() & alg.universe()};
        ctx.check(io::rank1_from_json(io::rank1_to_json(r1)) == r1,
                  [&] { return io::rank1_to_json(r1); });
    }
}

void prop_report_determinism(PropCtx& ctx) {
    SuiteConfig sub;
    sub.suite = "selftest";
    sub.seed = ctx.cfg.seed;
    sub.trials = 5;
    Report r1 = run_suite(sub);
    Report r2 = run_suite(sub);
    ctx.check(report_to_json(r1).dump() == report_to_json(r2).dump());
    ctx.check(!r1.ok); // the deliberate failure must fire
    bool has_cex = false;
    for (const auto& p : r1.properties)
        if (p.failures > 0 && !p.counterexample.is_null()) has_cex = true;
    ctx.check(has_cex);
}

// --------------------------------------------------------------- selftest

void prop_selftest_pass(PropCtx& ctx) {
    for (int t = 0; t < ctx.cfg.trials; ++t) ctx.check(true);
}

void prop_selftest_expected_failure(PropCtx& ctx) {
    Rng rng = ctx.rng(99);
    for (int t = 0; t < ctx.cfg.trials; ++t) {
        std::uint64_t v = rng.next();
        ctx.check(t != 3, [&] { return json{{"trial", t}, {"value", v}}; });
    }
}

const std::vector<Property>& registry() {
    static const std::vector<Property> props = {
        {"finposet", "closure_laws", prop_closure_laws},
        {"finposet", "equalizer_inclusion_order_reflecting", prop_equalizer_order_reflecting},
        {"finposet", "coreflexive_generator_contract", prop_coreflexive_generator},
        {"finposet", "opposite_involution_swaps_closures", prop_opposite_involution},
        {"hyperspace", "functor_laws", prop_functor_laws},
        {"hyperspace", "egli_milner_partial_order_on_convex", prop_em_partial_order},
        {"hyperspace", "egli_milner_preorder_witness", prop_em_preorder_witness},
        {"hyperspace", "empty_set_em_isolated", prop_em_empty_isolated},
        {"hyperspace", "order_reflecting_maps_preserved", prop_regmono_preserved},
        {"hyperspace", "closure_inclusions_transfer", prop_regmono_closure_equivalences},
        {"hyperspace", "degroot_square", prop_degroot},
        {"hyperspace", "singleton_embedding", prop_singleton_embedding},
        {"coalg", "bisim_fixpoint_and_quotient", prop_bisim_fixpoint},
        {"coalg", "canonical_kernel_matches_bisim", prop_canonical_kernel_oracle},
        {"coalg", "chain_level_sizes", prop_chain_sizes},
        {"coalg", "cone_coherence", prop_cone_coherence},
        {"coalg", "coreflexive_equalizer_preservation", prop_preservation},
        {"coalg", "equalizer_restriction_lemma", prop_equalizer_lemma},
        {"coalg", "ordered_refinement_matches_kernel", prop_ordered_refinement_matches_kernel},
        {"dualalg", "modal_algebra_roundtrip", prop_roundtrip_modal},
        {"dualalg", "classical_frame_roundtrip", prop_roundtrip_classical_frames},
        {"dualalg", "convex_frame_roundtrip", prop_roundtrip_convex_frames},
        {"dualalg", "positive_algebra_roundtrip", prop_roundtrip_positive_algebras},
        {"dualalg", "morphism_duality", prop_morphism_duality},
        {"dualalg", "complex_algebra_axioms", prop_axioms_exhaustive},
        {"dualalg", "complex_algebra_axioms_sampled", prop_axioms_sampled},
        {"dualalg", "generation_theorems", prop_generation},
        {"dualalg", "separation_and_generation_basics", prop_separating_basics},
        {"onestep", "substitution_units", prop_onestep_units},
        {"onestep", "substitution_associativity", prop_onestep_assoc},
        {"onestep", "boxhat_naturality", prop_boxhat_naturality},
        {"onestep", "interdefinability_and_generation", prop_onestep_interdef_generation},
        {"cli", "json_roundtrips", prop_json_roundtrips},
        {"cli", "report_determinism_and_replay", prop_report_determinism},
        {"selftest", "always_passes", prop_selftest_pass},
        {"selftest", "expected_failure", prop_selftest_expected_failure},
    };
    return props;
}

} // namespace

Report run_suite(const SuiteConfig& cfg) {
    cfg.validate();
    Report rep;
    rep.suite = cfg.suite;
    rep.seed = cfg.seed;
    rep.trials = cfg.trials;
    auto t0 = std::chrono::steady_clock::now();
    for (const Property& p : registry()) {
        bool include = cfg.suite == "all" ? std::string(p.suite) != "selftest"
                                          : cfg.suite == p.suite;
        if (!include) continue;
        PropertyResult res;
        res.suite = p.suite;
        res.name = p.name;
        res.counterexample = json(nullptr);
        PropCtx ctx{cfg, res, fnv1a(std::string(p.suite) + "/" + p.name) ^ cfg.seed,
                    cfg.limits()};
        auto p0 = std::chrono::steady_clock::now();
        try {
            p.fn(ctx);
        } catch (const std::exception& e) {
            ++res.checks;
            ++res.failures;
            if (res.counterexample.is_null()) res.counterexample = json{{"error", e.what()}};
        }
        res.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - p0)
                .count();
        rep.properties.push_back(std::move(res));
    }
    rep.ok = true;
    for (const auto& p : rep.properties)
        if (p.failures > 0) rep.ok = false;
    rep.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

json report_to_json(const Report& r, bool include_timing) {
    json props = json::array();
    for (const PropertyResult& p : r.properties) {
        json e{{"suite", p.suite},
               {"name", p.name},
               {"checks", p.checks},
               {"failures", p.failures},
               {"counterexample", p.counterexample}};
        if (include_timing) e["wall_ms"] = p.wall_ms;
        props.push_back(std::move(e));
    }
    json out{{"suite", r.suite},
             {"seed", r.seed},
             {"trials", r.trials},
             {"ok", r.ok},
             {"properties", props}};
    if (include_timing) out["wall_ms"] = r.wall_ms;
    return out;
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    for (const PropertyResult& p : r.properties) {
        os << (p.failures == 0 ? "PASS" : "FAIL") << "  " << p.suite << "/" << p.name
           << "  checks=" << p.checks << " failures=" << p.failures;
        os.setf(std::ios::fixed);
        os.precision(1);
        os << "  (" << p.wall_ms << " ms)\n";
        if (p.failures > 0) os << "      counterexample: " << p.counterexample.dump() << "\n";
    }
    os << (r.ok ? "OK" : "FAILED") << "  suite=" << r.suite << " seed=" << r.seed
       << " properties=" << r.properties.size();
    os.setf(std::ios::fixed);
    os.precision(1);
    os << " (" << r.wall_ms << " ms)\n";
    return os.str();
}

std::vector<std::string> suite_names() {
    return {"finposet", "hyperspace", "coalg", "dualalg", "onestep", "cli"};
}

} // namespace vw
