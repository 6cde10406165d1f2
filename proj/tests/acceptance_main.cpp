// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Counts, caps and tolerances are pinned here; every check is exact.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "vw/dualalg.hpp"
#include "vw/json_io.hpp"
#include "vw/onestep.hpp"
#include "vw/suite.hpp"

using namespace vw;

namespace {

std::vector<FinPoset> posets_up_to(int n) {
    std::vector<FinPoset> all;
    for (int k = 0; k <= n; ++k)
        for (FinPoset& p : enumerate_posets(k)) all.push_back(std::move(p));
    return all;
}

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

constexpr Variant kVariants[] = {Variant::Classical, Variant::Convex, Variant::Upper,
                                 Variant::Lower};

std::string g_cli_path;

// ---- criterion bodies ----------------------------------------------------

bool functor_laws(std::string& detail) {
    const std::vector<FinPoset> all = posets_up_to(3);
    long long pairs = 0;
    for (Variant v : kVariants) {
        std::vector<FinPoset> posets;
        if (v == Variant::Classical)
            for (int k = 0; k <= 3; ++k) posets.push_back(FinPoset::discrete(k));
        else
            posets = all;
        std::vector<Hyperspace> hs;
        for (const FinPoset& p : posets) hs.push_back(build_hyperspace(v, p));
        std::vector<std::vector<std::vector<std::vector<int>>>> maps(posets.size());
        for (std::size_t i = 0; i < posets.size(); ++i) {
            maps[i].resize(posets.size());
            for (std::size_t j = 0; j < posets.size(); ++j)
                maps[i][j] = enumerate_monotone_tables(posets[i], posets[j]);
        }
        for (std::size_t i = 0; i < posets.size(); ++i) {
            std::vector<int> idt(static_cast<std::size_t>(posets[i].size()));
            for (int x = 0; x < posets[i].size(); ++x) idt[static_cast<std::size_t>(x)] = x;
            std::vector<int> vt = hyper_tbl(v, hs[i], hs[i], idt);
            for (std::size_t k = 0; k < vt.size(); ++k)
                if (vt[k] != static_cast<int>(k)) return false;
        }
        for (std::size_t i = 0; i < posets.size(); ++i)
            for (std::size_t j = 0; j < posets.size(); ++j) {
                if (maps[i][j].empty()) continue;
                std::vector<std::vector<int>> vf;
                for (const auto& ft : maps[i][j]) vf.push_back(hyper_tbl(v, hs[i], hs[j], ft));
                for (std::size_t k = 0; k < posets.size(); ++k)
                    for (const auto& gt : maps[j][k]) {
                        std::vector<int> vg = hyper_tbl(v, hs[j], hs[k], gt);
                        for (std::size_t fi = 0; fi < maps[i][j].size(); ++fi) {
                            const auto& ft = maps[i][j][fi];
                            std::vector<int> gf(ft.size());
                            for (std::size_t x = 0; x < ft.size(); ++x)
                                gf[x] = gt[static_cast<std::size_t>(ft[x])];
                            std::vector<int> direct = hyper_tbl(v, hs[i], hs[k], gf);
                            ++pairs;
                            for (std::size_t e = 0; e < direct.size(); ++e)
                                if (direct[e] != vg[static_cast<std::size_t>(vf[fi][e])])
                                    return false;
                        }
                    }
            }
    }
    detail = std::to_string(pairs) + " composable pairs";
    return true;
}

bool em_partial_order(std::string& detail) {
    long long convex_pairs = 0;
    for (int n = 0; n <= 5; ++n)
        for (const FinPoset& p : enumerate_posets(n)) {
            std::vector<Mask> convex;
            for (Mask s = 0;; ++s) {
                if (p.is_convex(s)) convex.push_back(s);
                if (s == p.universe()) break;
            }
            for (Mask k : convex)
                for (Mask l : convex) {
                    ++convex_pairs;
                    if (k != l && egli_milner_leq(p, k, l) && egli_milner_leq(p, l, k))
                        return false;
                }
        }
    // two points admit no non-convex subsets, so the collapse needs three
    FinPoset two = FinPoset::chain(2);
    for (Mask k = 0; k <= two.universe(); ++k)
        if (!two.is_convex(k)) return false;
    FinPoset three = FinPoset::chain(3);
    bool witness = false;
    Mask wk = 0, wl = 0;
    for (Mask k = 0; k <= three.universe(); ++k)
        for (Mask l = 0; l <= three.universe(); ++l)
            if (k != l && egli_milner_leq(three, k, l) && egli_milner_leq(three, l, k)) {
                witness = true;
                wk = k;
                wl = l;
            }
    if (!witness) return false;
    std::ostringstream os;
    os << convex_pairs << " convex pairs antisymmetric; preorder witness K=" << wk
       << " L=" << wl << " on the 3-point chain";
    detail = os.str();
    return true;
}

bool preservation(std::string& detail) {
    const int per_variant = 200;
    long long done = 0;
    for (Variant v : kVariants) {
        Rng rng(0xACCE5501ull + static_cast<std::uint64_t>(v));
        for (int t = 0; t < per_variant; ++t) {
            CoreflexiveInstance inst = generate_coreflexive_pair(
                rng.next(), v == Variant::Convex ? 6 : 7, v == Variant::Classical);
            PreservationReport rep = check_coreflexive_preservation(v, inst);
            if (!rep.ok() || !rep.witness) return false;
            ++done;
        }
    }
    detail = std::to_string(done) + " instances, all three clauses";
    return true;
}

bool equalizer_lemma(std::string& detail) {
    const int per_variant = 50;
    long long subsets = 0;
    for (int cls = 0; cls < 4; ++cls) {
        Rng rng(0xACCE5502ull + static_cast<std::uint64_t>(cls));
        for (int t = 0; t < per_variant; ++t) {
            CoreflexiveInstance inst = generate_coreflexive_pair(rng.next(), 6, cls == 0);
            EqualizerLemmaReport rep = check_equalizer_lemma(inst);
            if (!rep.ok()) return false;
            subsets += (1ll << inst.x.size());
        }
    }
    detail = std::to_string(subsets) + " subsets across 200 instances";
    return true;
}

bool regmono_preserved(std::string& detail) {
    const std::vector<FinPoset> all = posets_up_to(3);
    long long maps = 0;
    for (Variant v : kVariants) {
        std::vector<FinPoset> posets;
        if (v == Variant::Classical)
            for (int k = 0; k <= 3; ++k) posets.push_back(FinPoset::discrete(k));
        else
            posets = all;
        for (const FinPoset& p : posets)
            for (const FinPoset& q : posets)
                for (const auto& t : enumerate_monotone_tables(p, q)) {
                    MonotoneMap f(p, q, t);
                    if (!f.is_order_reflecting()) continue;
                    ++maps;
                    if (!hyper_map(v, f).is_order_reflecting()) return false;
                }
    }
    detail = std::to_string(maps) + " order-reflecting maps";
    return true;
}

bool degroot(std::string& detail) {
    long long count = 0;
    for (const FinPoset& p : posets_up_to(4)) {
        if (!degroot_square(p).order_isomorphism) return false;
        ++count;
    }
    detail = std::to_string(count) + " posets";
    return true;
}

bool duality_roundtrips(std::string& detail) {
    long long trips = 0;
    for (int n = 0; n <= 4; ++n)
        for (const Coalgebra& c : enumerate_coalgebras(Variant::Classical, FinPoset::discrete(n))) {
            if (atoms_frame(complex_modal(c)).succ != c.succ) return false;
            ++trips;
        }
    for (int atoms = 0; atoms <= 3; ++atoms)
        for (const ModalAlgebra& a : enumerate_modal_algebras(atoms)) {
            if (!(complex_modal(atoms_frame(a)) == a)) return false;
            ++trips;
        }
    for (const FinPoset& p : posets_up_to(3))
        for (const Coalgebra& c : enumerate_coalgebras(Variant::Convex, p)) {
            Coalgebra back = primes_frame(complex_positive(c));
            if (back.succ != c.succ) return false;
            ++trips;
        }
    detail = std::to_string(trips) + " exact round trips, identity witnesses";
    return true;
}

bool axiom_suites(std::string& detail) {
    long long algebras = 0;
    for (int n = 0; n <= 3; ++n)
        for (const Coalgebra& c : enumerate_coalgebras(Variant::Classical, FinPoset::discrete(n))) {
            if (!check_axioms(complex_modal(c)).ok()) return false;
            if (!interdefinability_check(c)) return false;
            ++algebras;
        }
    for (const FinPoset& p : posets_up_to(3)) {
        for (const Coalgebra& c : enumerate_coalgebras(Variant::Convex, p))
            if (!check_axioms(complex_positive(c)).ok()) return false;
        for (const Coalgebra& c : enumerate_coalgebras(Variant::Upper, p))
            if (!check_axioms(complex_box(c)).ok()) return false;
        for (const Coalgebra& c : enumerate_coalgebras(Variant::Lower, p))
            if (!check_axioms(complex_diamond(c)).ok()) return false;
    }
    Rng rng(0xACCE5508ull);
    for (int t = 0; t < 1000; ++t) {
        Variant v = kVariants[t % 4];
        int n = v == Variant::Classical ? 5 + rng.below(4) : 4 + rng.below(3);
        FinPoset carrier = random_poset(rng, n, v == Variant::Classical);
        Coalgebra c = random_coalgebra(v, carrier, rng);
        bool ok = true;
        switch (v) {
            case Variant::Classical:
                ok = check_axioms(complex_modal(c)).ok() && interdefinability_check(c);
                break;
            case Variant::Convex: ok = check_axioms(complex_positive(c)).ok(); break;
            case Variant::Upper: ok = check_axioms(complex_box(c)).ok(); break;
            case Variant::Lower: ok = check_axioms(complex_diamond(c)).ok(); break;
        }
        if (!ok) return false;
        ++algebras;
    }
    detail = std::to_string(algebras) + " algebras (exhaustive small + 1000 sampled)";
    return true;
}

bool generation_theorems(std::string& detail) {
    long long checks = 0;
    for (int n = 0; n <= 3; ++n) {
        if (!generation_check(Variant::Classical, FinPoset::discrete(n)).ok()) return false;
        ++checks;
    }
    for (const FinPoset& p : posets_up_to(3)) {
        if (!generation_check(Variant::Convex, p).ok()) return false;
        ++checks;
    }
    for (const FinPoset& p : posets_up_to(4))
        for (Variant v : {Variant::Upper, Variant::Lower}) {
            if (!generation_check(v, p).ok()) return false;
            ++checks;
        }
    for (int m = 0; m <= 4; ++m) {
        if (!interdef_onestep(m) || !generation_onestep(m)) return false;
        ++checks;
    }
    detail = std::to_string(checks) + " generation checks";
    return true;
}

bool chain_oracle(std::string& detail) {
    long long frames = 0;
    for (int n = 0; n <= 4; ++n)
        for (const Coalgebra& c : enumerate_coalgebras(Variant::Classical, FinPoset::discrete(n))) {
            if (!(canonical_kernel(c, c.states()) == bisim_quotient(c))) return false;
            ++frames;
        }
    Rng rng(0xACCE550Aull);
    for (int t = 0; t < 500; ++t) {
        int n = 5 + rng.below(2);
        Coalgebra c = random_coalgebra(Variant::Classical, FinPoset::discrete(n), rng);
        if (!(canonical_kernel(c, n) == bisim_quotient(c))) return false;
        ++frames;
    }
    ChainResult r = terminal_chain(Variant::Classical, std::nullopt, 3);
    std::vector<int> sizes;
    for (const ChainLevel& l : r.levels) sizes.push_back(l.space.size());
    if (sizes != std::vector<int>{1, 2, 4, 16}) return false;
    detail = std::to_string(frames) + " frames; level sizes 1,2,4,16";
    return true;
}

bool term_calculus(std::string& detail) {
    long long laws = 0;
    // exhaustive unit and associativity at arity <= 1
    for (int nx = 0; nx <= 1; ++nx) {
        std::vector<std::string> xa(nx, "p");
        FreeBA fx = free_ba(xa);
        std::vector<Rank0Term> eta;
        for (int i = 0; i < nx; ++i) eta.push_back(rank0_generator(xa, i));
        for (Mask tv = 0; tv <= fx.universe(); ++tv) {
            if (!(compose_00(Rank0Term{xa, tv}, eta) == Rank0Term{xa, tv})) return false;
            ++laws;
        }
        OneStepAlgebra ax = one_step(fx.valuations());
        for (Mask gv = 0; gv <= ax.universe(); ++gv) {
            if (!(compose_10(Rank1Term{xa, gv}, eta) == Rank1Term{xa, gv})) return false;
            ++laws;
            if (gv == ax.universe()) break;
        }
        // generators pick out their substituted terms
        for (int ny = 0; ny <= 1; ++ny) {
            std::vector<std::string> ya(ny, "q");
            FreeBA fy = free_ba(ya);
            std::vector<Mask> choice(static_cast<std::size_t>(nx), 0);
            while (true) {
                std::vector<Rank0Term> rho;
                for (int i = 0; i < nx; ++i)
                    rho.push_back(Rank0Term{ya, choice[static_cast<std::size_t>(i)]});
                for (int i = 0; i < nx; ++i) {
                    if (!(compose_00(eta[static_cast<std::size_t>(i)], rho) ==
                          rho[static_cast<std::size_t>(i)]))
                        return false;
                    ++laws;
                }
                if (nx == 0) break;
                std::size_t pos = 0;
                while (pos < choice.size() && choice[pos] == fy.universe()) choice[pos++] = 0;
                if (pos == choice.size()) break;
                ++choice[pos];
            }
        }
    }
    {
        std::vector<std::string> xa = {"p"}, ya = {"q"}, za = {"r"};
        FreeBA fx = free_ba(xa), fy = free_ba(ya), fz = free_ba(za);
        OneStepAlgebra ax = one_step(fx.valuations());
        for (Mask tv = 0; tv <= fx.universe(); ++tv)
            for (Mask rv = 0; rv <= fy.universe(); ++rv)
                for (Mask sv = 0; sv <= fz.universe(); ++sv) {
                    std::vector<Rank0Term> rho{Rank0Term{ya, rv}}, sigma{Rank0Term{za, sv}};
                    std::vector<Rank0Term> rs{compose_00(rho[0], sigma)};
                    if (!(compose_00(compose_00(Rank0Term{xa, tv}, rho), sigma) ==
                          compose_00(Rank0Term{xa, tv}, rs)))
                        return false;
                    ++laws;
                    for (Mask gv = 0; gv <= ax.universe(); ++gv) {
                        if (!(compose_10(compose_10(Rank1Term{xa, gv}, rho), sigma) ==
                              compose_10(Rank1Term{xa, gv}, rs)))
                            return false;
                        ++laws;
                        if (gv == ax.universe()) break;
                    }
                }
    }
    // 1000 sampled instances at arity 2
    {
        std::vector<std::string> x2 = {"p", "q"}, y2 = {"u", "v"}, z2 = {"w", "z"};
        FreeBA fx = free_ba(x2), fy = free_ba(y2), fz = free_ba(z2);
        OneStepAlgebra ax = one_step(fx.valuations());
        Rng rng(0xACCE550Bull);
        for (int t = 0; t < 1000; ++t) {
            std::vector<Rank0Term> rho{Rank0Term{y2, rng.next() & fy.universe()},
                                       Rank0Term{y2, rng.next() & fy.universe()}};
            std::vector<Rank0Term> sigma{Rank0Term{z2, rng.next() & fz.universe()},
                                         Rank0Term{z2, rng.next() & fz.universe()}};
            std::vector<Rank0Term> rs{compose_00(rho[0], sigma), compose_00(rho[1], sigma)};
            Rank0Term tau{x2, rng.next() & fx.universe()};
            if (!(compose_00(compose_00(tau, rho), sigma) == compose_00(tau, rs))) return false;
            Rank1Term gamma{x2, rng.next() & ax.universe()};
            if (!(compose_10(compose_10(gamma, rho), sigma) == compose_10(gamma, rs)))
                return false;
            laws += 2;
        }
    }
    // naturality over every homomorphism between free algebras on <= 2 gens
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            std::vector<std::string> an, bn;
            for (int i = 0; i < a; ++i) an.push_back(std::string(1, char('p' + i)));
            for (int i = 0; i < b; ++i) bn.push_back(std::string(1, char('p' + i)));
            FreeBA fa = free_ba(an), fb = free_ba(bn);
            OneStepAlgebra ta = one_step(fa.valuations()), tb = one_step(fb.valuations());
            std::vector<Mask> rho(static_cast<std::size_t>(a), 0);
            while (true) {
                BaHom h = extend(fa, fb.valuations(), rho);
                OneStepMap th = lift(h);
                std::size_t elems = std::size_t(1) << fa.valuations();
                for (Mask e = 0; e < elems; ++e) {
                    if (th(ta.boxhat(e)) != tb.boxhat(h(e))) return false;
                    ++laws;
                }
                if (a == 0) break;
                std::size_t pos = 0;
                while (pos < rho.size() && rho[pos] == fb.universe()) rho[pos++] = 0;
                if (pos == rho.size()) break;
                ++rho[pos];
            }
        }
    detail = std::to_string(laws) + " law instances";
    return true;
}

bool determinism(std::string& detail) {
    if (g_cli_path.empty()) {
        detail = "no CLI path supplied";
        return false;
    }
    auto capture = [&](const std::string& cmd) -> std::string {
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) return "";
        std::string out;
        char buf[4096];
        while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
        pclose(pipe);
        return out;
    };
    std::string cmd = g_cli_path + " check --seed 424242 --format json 2>/dev/null";
    std::string r1 = capture(cmd);
    std::string r2 = capture(cmd);
    if (r1.empty() || r1 != r2) return false;
    detail = std::to_string(r1.size()) + " bytes, byte-identical";
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];
    else if (const char* env = std::getenv("VW_CLI")) g_cli_path = env;
#ifdef VW_CLI_PATH
    if (g_cli_path.empty()) g_cli_path = VW_CLI_PATH;
#endif

    struct Criterion {
        int num;
        const char* label;
        std::function<bool(std::string&)> fn;
        double budget_ms; // 0 = no stated runtime bound
    };
    std::vector<Criterion> criteria = {
        {1, "functor laws, all variants, posets up to 3 elements", functor_laws, 60000},
        {2, "Egli-Milner antisymmetry up to 5 elements, preorder witness", em_partial_order, 0},
        {3, "coreflexive-equalizer preservation, 200 instances per variant", preservation,
         300000},
        {4, "equalizer restriction lemma over all subsets, 50 instances per variant",
         equalizer_lemma, 0},
        {5, "order-reflecting maps preserved by every variant", regmono_preserved, 0},
        {6, "de Groot square order isomorphism up to 4 elements", degroot, 0},
        {7, "duality round trips, frames up to 4 states and algebras up to 3 atoms",
         duality_roundtrips, 0},
        {8, "operator axioms and interdefinability on every complex algebra", axiom_suites, 0},
        {9, "generation theorems within the caps", generation_theorems, 600000},
        {10, "terminal-chain kernel equals the bisimulation oracle", chain_oracle, 0},
        {11, "term-calculus unit, associativity and naturality laws", term_calculus, 0},
        {12, "byte-identical check reports under a fixed seed", determinism, 0},
    };

    bool all_ok = true;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        if (ok && c.budget_ms > 0 && ms > c.budget_ms) {
            ok = false;
            detail += " -- exceeded the runtime bound";
        }
        std::printf("%s  criterion %2d: %s%s%s  (%.0f ms)\n", ok ? "PASS" : "FAIL", c.num,
                    c.label, detail.empty() ? "" : " -- ", detail.c_str(), ms);
        all_ok = all_ok && ok;
    }
    std::printf("%s\n", all_ok ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES");
    return all_ok ? 0 : 1;
}
