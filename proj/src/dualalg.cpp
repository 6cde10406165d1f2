#include "vw/dualalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace vw {

namespace {

int upset_index(const std::vector<Mask>& upsets, Mask m) {
    auto it = std::lower_bound(upsets.begin(), upsets.end(), m);
    if (it == upsets.end() || *it != m) return -1;
    return static_cast<int>(it - upsets.begin());
}

int require_upset_index(const std::vector<Mask>& upsets, Mask m, const char* what) {
    int i = upset_index(upsets, m);
    if (i < 0) throw StructureError(std::string(what) + " is not an up-set of the base");
    return i;
}

constexpr int kMaxComplexAtoms = 20;

} // namespace

int PositiveModalAlgebra::index_of(Mask m) const { return upset_index(upsets, m); }
int BoxAlgebra::index_of(Mask m) const { return upset_index(upsets, m); }
int DiamondAlgebra::index_of(Mask m) const { return upset_index(upsets, m); }

ModalAlgebra complex_modal(const Coalgebra& c) {
    if (c.variant != Variant::Classical)
        throw VariantMismatch("modal complex algebra needs a classical coalgebra");
    int n = c.states();
    if (n > kMaxComplexAtoms) throw SizeError("complex algebra capped at 20 atoms");
    ModalAlgebra a;
    a.atoms = n;
    a.box.resize(std::size_t(1) << n);
    for (Mask u = 0; u < a.box.size(); ++u) {
        Mask b = 0;
        for (int x = 0; x < n; ++x)
            if ((c.succ[x] & ~u) == 0) b |= 1ull << x;
        a.box[u] = b;
    }
    return a;
}

PositiveModalAlgebra complex_positive(const Coalgebra& c) {
    if (c.variant != Variant::Convex)
        throw VariantMismatch("positive complex algebra needs a convex coalgebra");
    PositiveModalAlgebra a;
    a.base = c.carrier;
    a.upsets = c.carrier.all_upsets();
    a.box.resize(a.upsets.size());
    a.diamond.resize(a.upsets.size());
    for (std::size_t u = 0; u < a.upsets.size(); ++u) {
        Mask bx = 0, dm = 0;
        for (int x = 0; x < c.states(); ++x) {
            if ((c.succ[x] & ~a.upsets[u]) == 0) bx |= 1ull << x;
            if (c.succ[x] & a.upsets[u]) dm |= 1ull << x;
        }
        a.box[u] = require_upset_index(a.upsets, bx, "box value");
        a.diamond[u] = require_upset_index(a.upsets, dm, "diamond value");
    }
    return a;
}

BoxAlgebra complex_box(const Coalgebra& c) {
    if (c.variant != Variant::Upper)
        throw VariantMismatch("box algebra needs an upper coalgebra");
    BoxAlgebra a;
    a.base = c.carrier;
    a.upsets = c.carrier.all_upsets();
    a.box.resize(a.upsets.size());
    for (std::size_t u = 0; u < a.upsets.size(); ++u) {
        Mask bx = 0;
        for (int x = 0; x < c.states(); ++x)
            if ((c.succ[x] & ~a.upsets[u]) == 0) bx |= 1ull << x;
        a.box[u] = require_upset_index(a.upsets, bx, "box value");
    }
    return a;
}

DiamondAlgebra complex_diamond(const Coalgebra& c) {
    if (c.variant != Variant::Lower)
        throw VariantMismatch("diamond algebra needs a lower coalgebra");
    DiamondAlgebra a;
    a.base = c.carrier;
    a.upsets = c.carrier.all_upsets();
    a.diamond.resize(a.upsets.size());
    for (std::size_t u = 0; u < a.upsets.size(); ++u) {
        Mask dm = 0;
        for (int x = 0; x < c.states(); ++x)
            if (c.succ[x] & a.upsets[u]) dm |= 1ull << x;
        a.diamond[u] = require_upset_index(a.upsets, dm, "diamond value");
    }
    return a;
}

AnyAlgebra complex_algebra(const Coalgebra& c) {
    switch (c.variant) {
        case Variant::Classical: return complex_modal(c);
        case Variant::Convex: return complex_positive(c);
        case Variant::Upper: return complex_box(c);
        case Variant::Lower: return complex_diamond(c);
    }
    throw VariantError("unknown variant");
}

Coalgebra atoms_frame(const ModalAlgebra& a) {
    int n = a.atoms;
    std::vector<Mask> succ(static_cast<std::size_t>(n));
    Mask full = a.top();
    for (int x = 0; x < n; ++x) {
        Mask acc = full;
        for (Mask u = 0; u < a.box.size(); ++u)
            if (a.box[u] & (1ull << x)) acc &= u;
        succ[x] = acc;
    }
    return Coalgebra(Variant::Classical, FinPoset::discrete(n), std::move(succ));
}

Coalgebra primes_frame(const PositiveModalAlgebra& a) {
    AxiomReport rep = check_axioms(a);
    if (!rep.ok()) {
        std::string bad;
        for (const auto& ax : rep.axioms)
            if (!ax.holds) bad += (bad.empty() ? "" : ", ") + ax.name;
        throw StructureError("positive modal algebra fails axiom(s): " + bad);
    }
    const FinPoset& q = a.base;
    int n = q.size();
    std::vector<Mask> succ(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        Mask via_box = q.universe();
        for (std::size_t u = 0; u < a.upsets.size(); ++u)
            if (a.upsets[a.box[u]] & (1ull << x)) via_box &= a.upsets[u];
        Mask via_dia = 0;
        for (int y = 0; y < n; ++y) {
            int up_y = upset_index(a.upsets, q.up_row(y));
            if (up_y >= 0 && (a.upsets[a.diamond[up_y]] & (1ull << x))) via_dia |= 1ull << y;
        }
        succ[x] = via_box & via_dia;
    }
    return Coalgebra(Variant::Convex, q, std::move(succ));
}

bool AxiomReport::ok() const {
    for (const auto& a : axioms)
        if (!a.holds) return false;
    return true;
}

namespace {

AxiomResult pairwise_axiom(const std::string& name, std::size_t count,
                           const std::function<bool(Mask, Mask)>& holds) {
    AxiomResult r{name, true, std::nullopt};
    for (Mask x = 0; x < count && r.holds; ++x)
        for (Mask y = 0; y < count; ++y)
            if (!holds(x, y)) {
                r.holds = false;
                r.witness = {x, y};
                break;
            }
    return r;
}

} // namespace

AxiomReport check_axioms(const ModalAlgebra& a) {
    AxiomReport rep;
    Mask top = a.top();
    AxiomResult unit{"box-top", a.box[top] == top, std::nullopt};
    if (!unit.holds) unit.witness = {top, top};
    rep.axioms.push_back(unit);
    rep.axioms.push_back(pairwise_axiom("box-meet", a.elements(), [&](Mask x, Mask y) {
        return a.box[x & y] == (a.box[x] & a.box[y]);
    }));
    return rep;
}

namespace {

// shared pairwise loop for the up-set-lattice operators
AxiomResult lattice_axiom(const std::string& name, const std::vector<Mask>& upsets,
                          const std::function<bool(int, int)>& holds) {
    AxiomResult r{name, true, std::nullopt};
    int n = static_cast<int>(upsets.size());
    for (int x = 0; x < n && r.holds; ++x)
        for (int y = 0; y < n; ++y)
            if (!holds(x, y)) {
                r.holds = false;
                r.witness = {upsets[x], upsets[y]};
                break;
            }
    return r;
}

} // namespace

AxiomReport check_axioms(const PositiveModalAlgebra& a) {
    AxiomReport rep;
    const auto& us = a.upsets;
    auto idx = [&](Mask m) { return upset_index(us, m); };
    int bot = idx(0);
    int top = idx(a.base.universe());

    rep.axioms.push_back(lattice_axiom("box-meet", us, [&](int x, int y) {
        return a.box[idx(us[x] & us[y])] == idx(us[a.box[x]] & us[a.box[y]]);
    }));
    rep.axioms.push_back({"box-top", a.box[top] == top, std::nullopt});
    rep.axioms.push_back(lattice_axiom("diamond-join", us, [&](int x, int y) {
        return a.diamond[idx(us[x] | us[y])] == idx(us[a.diamond[x]] | us[a.diamond[y]]);
    }));
    rep.axioms.push_back({"diamond-bottom", a.diamond[bot] == bot, std::nullopt});
    rep.axioms.push_back(lattice_axiom("box-diamond-meet", us, [&](int x, int y) {
        Mask lhs = us[a.box[x]] & us[a.diamond[y]];
        Mask rhs = us[a.box[x]] & us[a.diamond[idx(us[x] & us[y])]];
        return lhs == rhs;
    }));
    rep.axioms.push_back(lattice_axiom("diamond-box-join", us, [&](int x, int y) {
        Mask lhs = us[a.diamond[x]] | us[a.box[y]];
        Mask rhs = us[a.diamond[x]] | us[a.box[idx(us[x] | us[y])]];
        return lhs == rhs;
    }));
    return rep;
}

AxiomReport check_axioms(const BoxAlgebra& a) {
    AxiomReport rep;
    const auto& us = a.upsets;
    auto idx = [&](Mask m) { return upset_index(us, m); };
    int top = idx(a.base.universe());
    rep.axioms.push_back({"box-top", a.box[top] == top, std::nullopt});
    rep.axioms.push_back(lattice_axiom("box-meet", us, [&](int x, int y) {
        return a.box[idx(us[x] & us[y])] == idx(us[a.box[x]] & us[a.box[y]]);
    }));
    return rep;
}

AxiomReport check_axioms(const DiamondAlgebra& a) {
    AxiomReport rep;
    const auto& us = a.upsets;
    auto idx = [&](Mask m) { return upset_index(us, m); };
    int bot = idx(0);
    rep.axioms.push_back({"diamond-bottom", a.diamond[bot] == bot, std::nullopt});
    rep.axioms.push_back(lattice_axiom("diamond-join", us, [&](int x, int y) {
        return a.diamond[idx(us[x] | us[y])] == idx(us[a.diamond[x]] | us[a.diamond[y]]);
    }));
    return rep;
}

bool interdefinability_check(const ModalAlgebra& a, const std::vector<Mask>& diamond_table) {
    if (diamond_table.size() != a.elements()) return false;
    Mask top = a.top();
    for (Mask x = 0; x < a.elements(); ++x) {
        if (diamond_table[x] != a.diamond(x)) return false;
        if (a.box[x] != ((~diamond_table[(~x) & top]) & top)) return false;
    }
    return true;
}

bool interdefinability_check(const Coalgebra& classical) {
    ModalAlgebra a = complex_modal(classical);
    std::vector<Mask> dia(a.elements());
    for (Mask u = 0; u < a.elements(); ++u) {
        Mask d = 0;
        for (int x = 0; x < classical.states(); ++x)
            if (classical.succ[x] & u) d |= 1ull << x;
        dia[u] = d;
    }
    return interdefinability_check(a, dia);
}

GenerationClosure separating_generates_boolean(const std::vector<Mask>& family, int point_count) {
    if (family.size() > 64) throw SizeError("generator family capped at 64 members");
    GenerationClosure out;
    // profile of each point across the family; the generated subalgebra is
    // exactly the unions of profile blocks
    std::map<Mask, Mask> block_by_profile;
    for (int p = 0; p < point_count; ++p) {
        Mask profile = 0;
        for (std::size_t g = 0; g < family.size(); ++g)
            if (family[g] & (1ull << p)) profile |= 1ull << g;
        block_by_profile[profile] |= 1ull << p;
    }
    out.separates = true;
    for (const auto& [profile, block] : block_by_profile)
        if (popcount(block) > 1) out.separates = false;
    out.full = static_cast<int>(block_by_profile.size()) == point_count;
    for (const auto& [profile, block] : block_by_profile) out.closure.push_back(block);
    std::sort(out.closure.begin(), out.closure.end());
    return out;
}

GenerationClosure separating_generates_ordered(const std::vector<Mask>& family, const FinPoset& s) {
    GenerationClosure out;
    std::set<Mask> reached;
    reached.insert(0);
    reached.insert(s.universe());
    std::vector<Mask> queue(family.begin(), family.end());
    for (Mask f : family)
        if (!s.is_upset(f)) throw StructureError("family member is not an up-set");
    while (!queue.empty()) {
        Mask m = queue.back();
        queue.pop_back();
        if (!reached.insert(m).second) continue;
        std::vector<Mask> snapshot(reached.begin(), reached.end());
        for (Mask r : snapshot) {
            if (reached.find(m & r) == reached.end()) queue.push_back(m & r);
            if (reached.find(m | r) == reached.end()) queue.push_back(m | r);
        }
    }
    out.separates = true;
    for (int i = 0; i < s.size() && out.separates; ++i)
        for (int j = 0; j < s.size(); ++j) {
            if (s.leq(i, j) || i == j) continue;
            bool split = false;
            for (Mask f : family)
                if ((f & (1ull << i)) && !(f & (1ull << j))) {
                    split = true;
                    break;
                }
            if (!split) {
                out.separates = false;
                break;
            }
        }
    std::size_t total = s.all_upsets().size();
    out.full = reached.size() == total;
    out.closure.assign(reached.begin(), reached.end());
    return out;
}

GenerationReport generation_check(Variant v, const FinPoset& p, const HyperLimits& lim) {
    int cap = v == Variant::Convex ? 3 : 4;
    if (p.size() > cap)
        throw SizeError("generation check capped at " + std::to_string(cap) + " elements for " +
                        variant_name(v));
    Hyperspace h = build_hyperspace(v, p, lim);
    int hn = static_cast<int>(h.elems.size());

    auto box_gen = [&](Mask u) {
        Mask g = 0;
        for (int k = 0; k < hn; ++k)
            if ((h.elems[k] & ~u) == 0) g |= 1ull << k;
        return g;
    };
    auto dia_gen = [&](Mask u) {
        Mask g = 0;
        for (int k = 0; k < hn; ++k)
            if (h.elems[k] & u) g |= 1ull << k;
        return g;
    };

    std::vector<Mask> family;
    if (v == Variant::Classical) {
        for (Mask u = 0;; ++u) {
            family.push_back(box_gen(u));
            if (u == p.universe()) break;
        }
    } else {
        for (Mask u : p.all_upsets()) {
            if (v == Variant::Convex || v == Variant::Upper) family.push_back(box_gen(u));
            if (v == Variant::Convex || v == Variant::Lower) family.push_back(dia_gen(u));
        }
    }

    GenerationReport rep;
    rep.variant = v;
    if (v == Variant::Classical) {
        rep.generators_in_ambient = true;
        GenerationClosure cl = separating_generates_boolean(family, hn);
        rep.separates = cl.separates;
        rep.full = cl.full;
        rep.kernel_ok = true; // principal up-sets are singletons in the discrete case
    } else {
        rep.generators_in_ambient = true;
        for (Mask f : family)
            if (!h.order.is_upset(f)) rep.generators_in_ambient = false;
        GenerationClosure cl = separating_generates_ordered(family, h.order);
        rep.separates = cl.separates;
        rep.full = cl.full;
        // the finite Birkhoff kernel: meeting every closure member through a
        // point recovers its principal up-set
        rep.kernel_ok = true;
        for (int q = 0; q < hn; ++q) {
            Mask meet = h.order.universe();
            for (Mask u : cl.closure)
                if (u & (1ull << q)) meet &= u;
            if (meet != h.order.up_row(q)) rep.kernel_ok = false;
        }
    }
    return rep;
}

bool preimage_is_box_hom(const MonotoneMap& g, const Coalgebra& c1, const Coalgebra& c2) {
    if (c1.variant != Variant::Classical || c2.variant != Variant::Classical)
        throw VariantError("dual homomorphism check is classical-only");
    ModalAlgebra a1 = complex_modal(c1);
    ModalAlgebra a2 = complex_modal(c2);
    auto preimage = [&](Mask u) {
        Mask r = 0;
        for (int x = 0; x < c1.states(); ++x)
            if (u & (1ull << g(x))) r |= 1ull << x;
        return r;
    };
    for (Mask u = 0; u < a2.elements(); ++u)
        if (preimage(a2.box[u]) != a1.box[preimage(u)]) return false;
    return true;
}

PositiveModalAlgebra birkhoff_canonicalize(const LatticePresentation& lp) {
    const FinPoset& l = lp.order;
    int n = l.size();
    if (n == 0) throw StructureError("a bounded lattice needs at least one element");
    if (n > kMaskBits) throw SizeError("lattice canonicalization capped at 64 elements");
    if (static_cast<int>(lp.box.size()) != n || static_cast<int>(lp.diamond.size()) != n)
        throw StructureError("operator tables must cover every lattice element");

    // binary meets and joins must exist and be unique
    std::vector<std::vector<int>> meet(n, std::vector<int>(n, -1));
    std::vector<std::vector<int>> join(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Mask lower = l.down_row(a) & l.down_row(b);
            Mask upper = l.up_row(a) & l.up_row(b);
            for (int c : bits_of(lower))
                if ((lower & ~l.down_row(c)) == 0) meet[a][b] = c;
            for (int c : bits_of(upper))
                if ((upper & ~l.up_row(c)) == 0) join[a][b] = c;
            if (meet[a][b] < 0 || join[a][b] < 0)
                throw StructureError("order is not a lattice: elements " + std::to_string(a) +
                                     " and " + std::to_string(b) + " lack a meet or join");
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]])
                    throw StructureError("lattice is not distributive");

    int bottom = 0;
    for (int a = 0; a < n; ++a)
        if ((l.down_row(a) & ~(1ull << a)) == 0) bottom = a;

    // join-irreducible: nonzero and not the join of two strictly smaller elements
    std::vector<int> irr;
    for (int j = 0; j < n; ++j) {
        if (j == bottom) continue;
        bool is_irr = true;
        for (int a = 0; a < n && is_irr; ++a)
            for (int b = 0; b < n; ++b)
                if (a != j && b != j && join[a][b] == j) {
                    is_irr = false;
                    break;
                }
        if (is_irr) irr.push_back(j);
    }

    // base poset: join-irreducibles under the reversed lattice order, so
    // each element becomes the up-set of irreducibles below it
    int m = static_cast<int>(irr.size());
    FinPoset q = FinPoset::from_relation(m, [&](int a, int b) { return l.leq(irr[b], irr[a]); });
    auto embed = [&](int a) {
        Mask mask = 0;
        for (int i = 0; i < m; ++i)
            if (l.leq(irr[i], a)) mask |= 1ull << i;
        return mask;
    };

    PositiveModalAlgebra out;
    out.base = q;
    out.upsets = q.all_upsets();
    if (out.upsets.size() != static_cast<std::size_t>(n))
        throw StructureError("Birkhoff embedding is not bijective; lattice is not distributive");
    std::vector<int> elem_of_upset(out.upsets.size(), -1);
    for (int a = 0; a < n; ++a) {
        int u = upset_index(out.upsets, embed(a));
        if (u < 0) throw StructureError("element image is not an up-set of the irreducibles");
        elem_of_upset[u] = a;
    }
    out.box.resize(out.upsets.size());
    out.diamond.resize(out.upsets.size());
    for (std::size_t u = 0; u < out.upsets.size(); ++u) {
        if (elem_of_upset[u] < 0)
            throw StructureError("Birkhoff embedding is not surjective; lattice is not distributive");
        out.box[u] = upset_index(out.upsets, embed(lp.box[elem_of_upset[u]]));
        out.diamond[u] = upset_index(out.upsets, embed(lp.diamond[elem_of_upset[u]]));
        if (out.box[u] < 0 || out.diamond[u] < 0)
            throw StructureError("operator value escaped the lattice");
    }
    return out;
}

std::vector<ModalAlgebra> enumerate_modal_algebras(int atoms) {
    if (atoms < 0 || atoms > 3) throw SizeError("modal-algebra enumeration capped at 3 atoms");
    std::vector<ModalAlgebra> out;
    std::size_t elems = std::size_t(1) << atoms;
    Mask top = atoms == 0 ? 0 : (1ull << atoms) - 1;
    // a meet-preserving box is exactly an assignment on the coatoms
    std::vector<Mask> coatoms;
    for (int i = 0; i < atoms; ++i) coatoms.push_back(top & ~(1ull << i));
    std::vector<std::size_t> pick(coatoms.size(), 0);
    while (true) {
        ModalAlgebra a;
        a.atoms = atoms;
        a.box.resize(elems);
        for (Mask u = 0; u < elems; ++u) {
            Mask b = top;
            for (std::size_t c = 0; c < coatoms.size(); ++c)
                if ((u & ~coatoms[c]) == 0) b &= static_cast<Mask>(pick[c]);
            a.box[u] = b;
        }
        out.push_back(std::move(a));
        std::size_t pos = 0;
        while (pos < pick.size() && pick[pos] == elems - 1) pick[pos++] = 0;
        if (pos == pick.size()) break;
        ++pick[pos];
    }
    return out;
}

std::vector<PositiveModalAlgebra> enumerate_positive_algebras(const FinPoset& q) {
    if (q.size() > 2) throw SizeError("positive-algebra enumeration capped at 2-element bases");
    std::vector<Mask> upsets = q.all_upsets();
    int n = q.size();
    std::size_t un = upsets.size();

    std::vector<PositiveModalAlgebra> out;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;

    // meet-preserving boxes arise from assignments on the co-principal
    // up-sets, join-preserving diamonds from assignments on the principal ones
    std::vector<std::size_t> bpick(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<int> box(un);
        for (std::size_t u = 0; u < un; ++u) {
            Mask acc = q.universe();
            for (int p = 0; p < n; ++p)
                if (!(upsets[u] & (1ull << p))) acc &= upsets[bpick[p]];
            box[u] = upset_index(upsets, acc);
        }
        std::vector<std::size_t> dpick(static_cast<std::size_t>(n), 0);
        while (true) {
            std::vector<int> dia(un);
            for (std::size_t u = 0; u < un; ++u) {
                Mask acc = 0;
                for (int p = 0; p < n; ++p)
                    if (upsets[u] & (1ull << p)) acc |= upsets[dpick[p]];
                dia[u] = upset_index(upsets, acc);
            }
            if (seen.emplace(box, dia).second) {
                PositiveModalAlgebra a;
                a.base = q;
                a.upsets = upsets;
                a.box = box;
                a.diamond = dia;
                if (check_axioms(a).ok()) out.push_back(std::move(a));
            }
            std::size_t pos = 0;
            while (pos < dpick.size() && dpick[pos] == un - 1) dpick[pos++] = 0;
            if (pos == dpick.size()) break;
            ++dpick[pos];
        }
        std::size_t pos = 0;
        while (pos < bpick.size() && bpick[pos] == un - 1) bpick[pos++] = 0;
        if (pos == bpick.size()) break;
        ++bpick[pos];
    }
    return out;
}

} // namespace vw
