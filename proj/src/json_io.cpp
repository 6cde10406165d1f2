#include "vw/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace vw::io {

namespace {

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

int int_field(const json& j, const char* name) {
    const json& f = field(j, name);
    if (!f.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
    return f.get<int>();
}

} // namespace

json poset_to_json(const FinPoset& p) {
    json pairs = json::array();
    for (auto [i, j] : p.cover_pairs()) pairs.push_back(json::array({i, j}));
    return json{{"n", p.size()}, {"leq", pairs}};
}

FinPoset poset_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("poset must be an object with fields n and leq");
    int n = int_field(j, "n");
    std::vector<std::pair<int, int>> pairs;
    const json& leq = field(j, "leq");
    if (!leq.is_array()) throw ParseError("field 'leq' must be an array of pairs");
    for (const json& e : leq) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("each 'leq' entry must be a pair [i, j]");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return FinPoset::from_pairs(n, pairs);
}

json map_to_json(const MonotoneMap& m) {
    return json{{"dom", poset_to_json(m.dom)}, {"cod", poset_to_json(m.cod)}, {"tbl", m.tbl}};
}

MonotoneMap map_from_json(const json& j) {
    FinPoset dom = poset_from_json(field(j, "dom"));
    FinPoset cod = poset_from_json(field(j, "cod"));
    std::vector<int> tbl = field(j, "tbl").get<std::vector<int>>();
    return MonotoneMap(std::move(dom), std::move(cod), std::move(tbl));
}

json subset_to_json(Mask m) {
    json a = json::array();
    for (int i : bits_of(m)) a.push_back(i);
    return a;
}

Mask subset_from_json(const json& j, int n) {
    if (!j.is_array()) throw ParseError("subset must be an index list");
    Mask m = 0;
    for (const json& e : j) {
        int i = e.get<int>();
        if (i < 0 || i >= n)
            throw ParseError("subset index " + std::to_string(i) + " out of range for n=" +
                             std::to_string(n));
        m |= 1ull << i;
    }
    return m;
}

json hyperspace_to_json(const Hyperspace& h) {
    json elems = json::array();
    for (Mask m : h.elems) elems.push_back(subset_to_json(m));
    return json{{"variant", variant_name(h.variant)},
                {"base", poset_to_json(h.base)},
                {"elems", elems},
                {"order", poset_to_json(h.order)}};
}

json coalgebra_to_json(const Coalgebra& c) {
    json succ = json::array();
    for (Mask m : c.succ) succ.push_back(subset_to_json(m));
    return json{{"variant", variant_name(c.variant)},
                {"carrier", poset_to_json(c.carrier)},
                {"succ", succ}};
}

Coalgebra coalgebra_from_json(const json& j) {
    Variant v = variant_from_name(field(j, "variant").get<std::string>());
    FinPoset carrier = poset_from_json(field(j, "carrier"));
    const json& succ_json = field(j, "succ");
    if (!succ_json.is_array() || static_cast<int>(succ_json.size()) != carrier.size())
        throw ParseError("'succ' must list one successor set per state");
    std::vector<Mask> succ;
    succ.reserve(succ_json.size());
    int state = 0;
    for (const json& s : succ_json) {
        try {
            succ.push_back(subset_from_json(s, carrier.size()));
        } catch (const ParseError& e) {
            throw ParseError("state " + std::to_string(state) + ": " + e.what());
        }
        ++state;
    }
    return Coalgebra(v, std::move(carrier), std::move(succ));
}

json modal_to_json(const ModalAlgebra& a) {
    json box = json::array();
    for (Mask b : a.box) box.push_back(static_cast<std::uint64_t>(b));
    return json{{"atoms", a.atoms}, {"box", box}};
}

ModalAlgebra modal_from_json(const json& j) {
    ModalAlgebra a;
    a.atoms = int_field(j, "atoms");
    if (a.atoms < 0 || a.atoms > 20) throw ParseError("atom count out of range");
    const json& box = field(j, "box");
    if (!box.is_array() || box.size() != (std::size_t(1) << a.atoms))
        throw ParseError("'box' must have one entry per element (2^atoms)");
    Mask top = a.top();
    for (const json& e : box) {
        std::uint64_t v = e.get<std::uint64_t>();
        if (v & ~top) throw ParseError("box value out of range");
        a.box.push_back(v);
    }
    return a;
}

namespace {

std::vector<int> upset_table_from_json(const json& j, const char* name, const FinPoset& base,
                                       const std::vector<Mask>& upsets) {
    const json& tbl = field(j, name);
    if (!tbl.is_object())
        throw ParseError(std::string("'") + name + "' must map up-set masks to up-set masks");
    if (tbl.size() != upsets.size())
        throw ParseError(std::string("'") + name + "' must cover all " +
                         std::to_string(upsets.size()) + " up-sets");
    auto index_of = [&](Mask m) {
        auto it = std::lower_bound(upsets.begin(), upsets.end(), m);
        if (it == upsets.end() || *it != m) return -1;
        return static_cast<int>(it - upsets.begin());
    };
    std::vector<int> out(upsets.size(), -1);
    for (auto it = tbl.begin(); it != tbl.end(); ++it) {
        Mask key = 0;
        try {
            key = std::stoull(it.key());
        } catch (...) {
            throw ParseError(std::string("'") + name + "' key '" + it.key() +
                             "' is not a mask value");
        }
        int ki = index_of(key);
        if (ki < 0 || !base.is_upset(key))
            throw ParseError(std::string("'") + name + "' key " + it.key() +
                             " is not an up-set of the base");
        Mask val = it.value().get<std::uint64_t>();
        int vi = index_of(val);
        if (vi < 0)
            throw ParseError(std::string("'") + name + "' value for key " + it.key() +
                             " is not an up-set of the base");
        out[ki] = vi;
    }
    return out;
}

json upset_table_to_json(const std::vector<Mask>& upsets, const std::vector<int>& tbl) {
    json out = json::object();
    for (std::size_t u = 0; u < upsets.size(); ++u)
        out[std::to_string(upsets[u])] = static_cast<std::uint64_t>(upsets[tbl[u]]);
    return out;
}

} // namespace

json positive_to_json(const PositiveModalAlgebra& a) {
    return json{{"base", poset_to_json(a.base)},
                {"box", upset_table_to_json(a.upsets, a.box)},
                {"diamond", upset_table_to_json(a.upsets, a.diamond)}};
}

PositiveModalAlgebra positive_from_json(const json& j) {
    if (j.contains("lattice")) {
        LatticePresentation lp;
        lp.order = poset_from_json(field(j, "lattice"));
        lp.box = field(j, "box").get<std::vector<int>>();
        lp.diamond = field(j, "diamond").get<std::vector<int>>();
        for (int v : lp.box)
            if (v < 0 || v >= lp.order.size()) throw ParseError("box index out of range");
        for (int v : lp.diamond)
            if (v < 0 || v >= lp.order.size()) throw ParseError("diamond index out of range");
        return birkhoff_canonicalize(lp);
    }
    PositiveModalAlgebra a;
    a.base = poset_from_json(field(j, "base"));
    a.upsets = a.base.all_upsets();
    a.box = upset_table_from_json(j, "box", a.base, a.upsets);
    a.diamond = upset_table_from_json(j, "diamond", a.base, a.upsets);
    return a;
}

json boxalg_to_json(const BoxAlgebra& a) {
    return json{{"base", poset_to_json(a.base)}, {"box", upset_table_to_json(a.upsets, a.box)}};
}

BoxAlgebra boxalg_from_json(const json& j) {
    BoxAlgebra a;
    a.base = poset_from_json(field(j, "base"));
    a.upsets = a.base.all_upsets();
    a.box = upset_table_from_json(j, "box", a.base, a.upsets);
    return a;
}

json diamondalg_to_json(const DiamondAlgebra& a) {
    return json{{"base", poset_to_json(a.base)},
                {"diamond", upset_table_to_json(a.upsets, a.diamond)}};
}

DiamondAlgebra diamondalg_from_json(const json& j) {
    DiamondAlgebra a;
    a.base = poset_from_json(field(j, "base"));
    a.upsets = a.base.all_upsets();
    a.diamond = upset_table_from_json(j, "diamond", a.base, a.upsets);
    return a;
}

json algebra_to_json(const AnyAlgebra& a) {
    return std::visit(
        [](const auto& alg) -> json {
            using T = std::decay_t<decltype(alg)>;
            if constexpr (std::is_same_v<T, ModalAlgebra>) return modal_to_json(alg);
            else if constexpr (std::is_same_v<T, PositiveModalAlgebra>) return positive_to_json(alg);
            else if constexpr (std::is_same_v<T, BoxAlgebra>) return boxalg_to_json(alg);
            else return diamondalg_to_json(alg);
        },
        a);
}

AnyAlgebra algebra_from_json(const json& j) {
    if (j.contains("atoms")) return modal_from_json(j);
    if (j.contains("lattice")) return positive_from_json(j);
    bool has_box = j.contains("box"), has_dia = j.contains("diamond");
    if (has_box && has_dia) return positive_from_json(j);
    if (has_box) return boxalg_from_json(j);
    if (has_dia) return diamondalg_from_json(j);
    throw ParseError("unrecognized algebra: expected modal, positive, box or diamond fields");
}

json partition_to_json(const Partition& p) {
    json blocks = json::array();
    for (const auto& b : p.blocks()) blocks.push_back(b);
    return json{{"blocks", blocks}};
}

json chain_to_json(const ChainResult& r) {
    json levels = json::array();
    for (const ChainLevel& lvl : r.levels) {
        json l{{"index", lvl.index},
               {"size", lvl.space.size()},
               {"order", poset_to_json(lvl.space)}};
        l["projection"] = lvl.proj ? json(lvl.proj->tbl) : json(nullptr);
        levels.push_back(std::move(l));
    }
    json conv{{"converged", r.convergence.converged}};
    if (r.convergence.converged)
        conv["at"] = r.convergence.at;
    else
        conv["depth"] = r.convergence.depth;
    return json{{"variant", variant_name(r.variant)},
                {"output", r.output ? poset_to_json(*r.output) : json(nullptr)},
                {"levels", levels},
                {"convergence", conv}};
}

json preservation_to_json(const PreservationReport& r) {
    return json{{"variant", variant_name(r.variant)},
                {"clauses",
                 {{"equalized", r.equalized},
                  {"order_reflecting", r.order_reflecting},
                  {"image", r.image},
                  {"witness", r.witness}}},
                {"counterexample", r.counterexample ? subset_to_json(*r.counterexample) : json(nullptr)},
                {"ok", r.ok()}};
}

json axiom_report_to_json(const AxiomReport& r) {
    json axioms = json::array();
    for (const AxiomResult& a : r.axioms) {
        json e{{"name", a.name}, {"holds", a.holds}};
        e["witness"] = a.witness
                           ? json::array({subset_to_json(a.witness->first),
                                          subset_to_json(a.witness->second)})
                           : json(nullptr);
        axioms.push_back(std::move(e));
    }
    return json{{"axioms", axioms}, {"ok", r.ok()}};
}

json generation_report_to_json(const GenerationReport& r) {
    return json{{"variant", variant_name(r.variant)},
                {"generators_in_ambient", r.generators_in_ambient},
                {"separates", r.separates},
                {"full", r.full},
                {"kernel", r.kernel_ok},
                {"ok", r.ok()}};
}

namespace {

std::vector<std::string> arity_from_json(const json& j) {
    std::vector<std::string> arity;
    for (const json& g : field(j, "arity")) arity.push_back(g.get<std::string>());
    return arity;
}

int gen_index(const std::vector<std::string>& arity, const std::string& name) {
    for (std::size_t i = 0; i < arity.size(); ++i)
        if (arity[i] == name) return static_cast<int>(i);
    throw ParseError("unknown generator '" + name + "'");
}

// Evaluates a formula tree; `leaf` interprets {"var"} / {"op":"box"} nodes,
// connectives are bitwise over the given universe.
Mask eval_tree(const json& node, Mask top, const std::function<Mask(const json&)>& leaf) {
    if (node.contains("var")) return leaf(node);
    std::string op = field(node, "op").get<std::string>();
    if (op == "top") return top;
    if (op == "bot") return 0;
    if (op == "box") return leaf(node);
    const json& args = field(node, "args");
    if (op == "not") {
        if (args.size() != 1) throw ParseError("'not' takes one argument");
        return ~eval_tree(args[0], top, leaf) & top;
    }
    if (op == "and" || op == "or") {
        Mask acc = op == "and" ? top : 0;
        for (const json& a : args) {
            Mask v = eval_tree(a, top, leaf);
            acc = op == "and" ? (acc & v) : (acc | v);
        }
        return acc;
    }
    throw ParseError("unknown operator '" + op + "'");
}

int valuation_from_json(const json& names, const std::vector<std::string>& arity) {
    int v = 0;
    for (const json& n : names) v |= 1 << gen_index(arity, n.get<std::string>());
    return v;
}

json valuation_to_json(int v, const std::vector<std::string>& arity) {
    json names = json::array();
    for (std::size_t i = 0; i < arity.size(); ++i)
        if ((v >> i) & 1) names.push_back(arity[i]);
    return names;
}

} // namespace

Rank0Term rank0_from_json(const json& j) {
    std::vector<std::string> arity = arity_from_json(j);
    FreeBA f = free_ba(arity);
    if (j.contains("valuations")) {
        Mask vals = 0;
        for (const json& v : field(j, "valuations"))
            vals |= 1ull << valuation_from_json(v, arity);
        return Rank0Term{arity, vals};
    }
    const json& tree = field(j, "term");
    Mask vals = eval_tree(tree, f.universe(), [&](const json& node) -> Mask {
        if (!node.contains("var")) throw ParseError("rank-0 terms admit no box leaves");
        return f.eta(gen_index(arity, field(node, "var").get<std::string>()));
    });
    return Rank0Term{arity, vals};
}

json rank0_to_json(const Rank0Term& t) {
    json vals = json::array();
    for (int v : bits_of(t.vals)) vals.push_back(valuation_to_json(v, t.arity));
    return json{{"rank", 0}, {"arity", t.arity}, {"valuations", vals}};
}

Rank1Term rank1_from_json(const json& j) {
    std::vector<std::string> arity = arity_from_json(j);
    FreeBA f = free_ba(arity);
    OneStepAlgebra alg = one_step(f.valuations());
    if (j.contains("elements")) {
        Mask elem = 0;
        for (const json& atomset : field(j, "elements")) {
            Mask s = 0;
            for (const json& v : atomset) s |= 1ull << valuation_from_json(v, arity);
            elem |= 1ull << s;
        }
        return Rank1Term{arity, elem};
    }
    const json& tree = field(j, "term");
    Mask elem = eval_tree(tree, alg.universe(), [&](const json& node) -> Mask {
        if (node.contains("var"))
            throw ParseError("rank-1 terms must keep every variable under a box");
        const json& args = field(node, "args");
        if (args.size() != 1) throw ParseError("'box' takes one argument");
        Mask inner = eval_tree(args[0], f.universe(), [&](const json& leaf_node) -> Mask {
            if (!leaf_node.contains("var")) throw ParseError("nested box is not pure rank 1");
            return f.eta(gen_index(arity, field(leaf_node, "var").get<std::string>()));
        });
        return alg.boxhat(inner);
    });
    return Rank1Term{arity, elem};
}

json rank1_to_json(const Rank1Term& t) {
    json elements = json::array();
    for (int s : bits_of(t.elem)) {
        json atomset = json::array();
        for (int v : bits_of(static_cast<Mask>(s))) atomset.push_back(valuation_to_json(v, t.arity));
        elements.push_back(std::move(atomset));
    }
    return json{{"rank", 1}, {"arity", t.arity}, {"elements", elements}};
}

namespace {

std::string mask_label(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int i : bits_of(m)) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

} // namespace

std::string poset_dot(const FinPoset& p) {
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (int i = 0; i < p.size(); ++i) os << "  n" << i << " [label=\"" << i << "\"];\n";
    for (auto [i, j] : p.cover_pairs()) os << "  n" << i << " -> n" << j << ";\n";
    os << "}\n";
    return os.str();
}

std::string hyperspace_dot(const Hyperspace& h) {
    std::ostringstream os;
    os << "digraph hyperspace {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t k = 0; k < h.elems.size(); ++k)
        os << "  n" << k << " [label=\"" << mask_label(h.elems[k]) << "\"];\n";
    for (auto [i, j] : h.order.cover_pairs()) os << "  n" << i << " -> n" << j << ";\n";
    os << "}\n";
    return os.str();
}

std::string digest(const std::string& payload) {
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << fnv1a(payload);
    return os.str();
}

} // namespace vw::io
