#include "vw/onestep.hpp"

#include <algorithm>

namespace vw {

namespace {

constexpr int kMaxFreeGens = 3;
constexpr int kMaxOneStepAtoms = 4;

std::string arity_label(const std::vector<std::string>& arity) {
    std::string s = "{";
    for (std::size_t i = 0; i < arity.size(); ++i) s += (i ? "," : "") + arity[i];
    return s + "}";
}

void require_same_arity(const std::vector<std::string>& expected,
                        const std::vector<std::string>& got, const char* what) {
    if (expected != got)
        throw ArityError(std::string(what) + ": arity " + arity_label(got) +
                         " does not match " + arity_label(expected));
}

} // namespace

Mask FreeBA::eta(int i) const {
    Mask m = 0;
    for (int v = 0; v < valuations(); ++v)
        if ((v >> i) & 1) m |= 1ull << v;
    return m;
}

FreeBA free_ba(std::vector<std::string> gens) {
    if (gens.size() > kMaxFreeGens)
        throw SizeError("free Boolean algebras capped at 3 generators");
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i] == gens[j]) throw StructureError("duplicate generator '" + gens[i] + "'");
    return FreeBA{std::move(gens)};
}

BaHom extend(const FreeBA& dom, int cod_atoms, const std::vector<Mask>& rho) {
    if (static_cast<int>(rho.size()) != static_cast<int>(dom.gens.size()))
        throw ArityError("generator images do not match the generator list");
    Mask cod_top = cod_atoms == 64 ? ~0ull : (1ull << cod_atoms) - 1;
    BaHom h;
    h.dom_atoms = dom.valuations(); // the atoms of FreeBA(X) are its valuations
    h.cod_atoms = cod_atoms;
    std::size_t elems = std::size_t(1) << dom.valuations();
    h.tbl.resize(elems);
    // image of each atom (single valuation) first
    std::vector<Mask> atom_img(static_cast<std::size_t>(dom.valuations()));
    for (int v = 0; v < dom.valuations(); ++v) {
        Mask meet = cod_top;
        for (std::size_t i = 0; i < rho.size(); ++i)
            meet &= ((v >> i) & 1) ? rho[i] : (~rho[i] & cod_top);
        atom_img[v] = meet;
    }
    for (std::size_t e = 0; e < elems; ++e) {
        Mask join = 0;
        for (int v : bits_of(static_cast<Mask>(e))) join |= atom_img[v];
        h.tbl[e] = join;
    }
    return h;
}

void require_hom(const BaHom& h) {
    std::size_t elems = std::size_t(1) << h.dom_atoms;
    if (h.tbl.size() != elems) throw StructureError("homomorphism table has the wrong size");
    Mask dom_top = h.dom_atoms == 64 ? ~0ull : (1ull << h.dom_atoms) - 1;
    Mask cod_top = h.cod_atoms == 64 ? ~0ull : (1ull << h.cod_atoms) - 1;
    if (h.tbl[dom_top] != cod_top) throw StructureError("homomorphism does not preserve top");
    for (Mask a = 0; a < elems; ++a) {
        if (h.tbl[(~a) & dom_top] != ((~h.tbl[a]) & cod_top))
            throw StructureError("homomorphism does not preserve complement");
        for (Mask b = a; b < elems; ++b)
            if (h.tbl[a & b] != (h.tbl[a] & h.tbl[b]))
                throw StructureError("homomorphism does not preserve meets");
    }
}

Mask OneStepAlgebra::boxhat(Mask b) const {
    Mask w = 0;
    for (int s = 0; s < points(); ++s)
        if ((static_cast<Mask>(s) & ~b) == 0) w |= 1ull << s;
    return w;
}

OneStepAlgebra one_step(int base_atoms) {
    if (base_atoms < 0 || base_atoms > kMaxOneStepAtoms)
        throw SizeError("one-step algebras capped at 4 base atoms");
    return OneStepAlgebra{base_atoms};
}

Mask OneStepMap::operator()(Mask w) const {
    Mask out = 0;
    int cod_points = 1 << cod_atoms;
    for (int s = 0; s < cod_points; ++s) {
        Mask pulled = 0;
        for (int j : bits_of(static_cast<Mask>(s))) pulled |= 1ull << atom_dual[j];
        if (w & (1ull << pulled)) out |= 1ull << s;
    }
    return out;
}

OneStepMap lift(const BaHom& h) {
    require_hom(h);
    OneStepMap m;
    m.dom_atoms = h.dom_atoms;
    m.cod_atoms = h.cod_atoms;
    m.atom_dual.resize(static_cast<std::size_t>(h.cod_atoms));
    for (int j = 0; j < h.cod_atoms; ++j) {
        int found = -1;
        for (int i = 0; i < h.dom_atoms; ++i)
            if (h.tbl[1ull << i] & (1ull << j)) {
                found = i;
                break;
            }
        if (found < 0)
            throw StructureError("codomain atom " + std::to_string(j) +
                                 " lies under no generator-atom image");
        m.atom_dual[j] = found;
    }
    return m;
}

Rank0Term rank0_generator(const std::vector<std::string>& arity, int i) {
    FreeBA f = free_ba(arity);
    if (i < 0 || i >= static_cast<int>(arity.size()))
        throw ArityError("generator index out of range");
    return Rank0Term{arity, f.eta(i)};
}

Rank1Term rank1_box(const Rank0Term& t) {
    FreeBA f = free_ba(t.arity);
    OneStepAlgebra alg = one_step(f.valuations());
    return Rank1Term{t.arity, alg.boxhat(t.vals)};
}

Rank0Term compose_00(const Rank0Term& tau, const std::vector<Rank0Term>& rho) {
    if (rho.size() != tau.arity.size())
        throw ArityError("substitution tuple size does not match the arity");
    if (rho.empty()) {
        FreeBA dom = free_ba(tau.arity);
        (void)dom;
        return Rank0Term{{}, tau.vals}; // nullary: payload is already 0 or 1
    }
    const std::vector<std::string>& y = rho.front().arity;
    for (const auto& r : rho) require_same_arity(y, r.arity, "rank-0 substitution");
    FreeBA dom = free_ba(tau.arity);
    FreeBA cod = free_ba(y);
    std::vector<Mask> images;
    images.reserve(rho.size());
    for (const auto& r : rho) images.push_back(r.vals);
    BaHom h = extend(dom, cod.valuations(), images);
    return Rank0Term{y, h(tau.vals)};
}

Rank1Term compose_01(const Rank0Term& tau, const std::vector<Rank1Term>& rho) {
    if (rho.size() != tau.arity.size())
        throw ArityError("substitution tuple size does not match the arity");
    std::vector<std::string> y;
    if (!rho.empty()) {
        y = rho.front().arity;
        for (const auto& r : rho) require_same_arity(y, r.arity, "rank-1 substitution");
    }
    FreeBA dom = free_ba(tau.arity);
    FreeBA fy = free_ba(y);
    OneStepAlgebra alg = one_step(fy.valuations());
    std::vector<Mask> images;
    images.reserve(rho.size());
    for (const auto& r : rho) images.push_back(r.elem);
    BaHom h = extend(dom, alg.points(), images);
    return Rank1Term{y, h(tau.vals)};
}

Rank1Term compose_10(const Rank1Term& gamma, const std::vector<Rank0Term>& rho) {
    if (rho.size() != gamma.arity.size())
        throw ArityError("substitution tuple size does not match the arity");
    std::vector<std::string> y;
    if (!rho.empty()) {
        y = rho.front().arity;
        for (const auto& r : rho) require_same_arity(y, r.arity, "rank-0 substitution");
    }
    FreeBA dom = free_ba(gamma.arity);
    FreeBA cod = free_ba(y);
    std::vector<Mask> images;
    images.reserve(rho.size());
    for (const auto& r : rho) images.push_back(r.vals);
    OneStepMap t = lift(extend(dom, cod.valuations(), images));
    return Rank1Term{y, t(gamma.elem)};
}

bool interdef_onestep(int base_atoms) {
    OneStepAlgebra alg = one_step(base_atoms);
    Mask top = alg.base_top();
    for (Mask b = 0;; ++b) {
        Mask meets = 0;
        for (int s = 0; s < alg.points(); ++s)
            if (static_cast<Mask>(s) & b) meets |= 1ull << s;
        if (meets != alg.diamondhat(b)) return false;
        if (b == top) break;
    }
    return true;
}

bool generation_onestep(int base_atoms) {
    OneStepAlgebra alg = one_step(base_atoms);
    // profiles of the points of P(A) across all boxhat images; Boolean
    // generation is exactly profile distinctness
    int pts = alg.points();
    std::vector<Mask> profile(static_cast<std::size_t>(pts), 0);
    Mask top = alg.base_top();
    int g = 0;
    for (Mask b = 0;; ++b, ++g) {
        Mask w = alg.boxhat(b);
        for (int s = 0; s < pts; ++s)
            if (w & (1ull << s)) profile[s] |= 1ull << g;
        if (b == top) break;
    }
    std::vector<Mask> sorted = profile;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

} // namespace vw
