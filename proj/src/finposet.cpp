#include "vw/finposet.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace vw {

int bits_of::iterator::operator*() const { return std::countr_zero(m_); }

int popcount(Mask m) { return std::popcount(m); }

namespace {

int words_for(int n) { return n == 0 ? 1 : (n + 63) / 64; }

} // namespace

FinPoset FinPoset::unchecked_from_up_rows(int n, std::vector<std::uint64_t> up, int words) {
    FinPoset p;
    p.n_ = n;
    p.words_ = words;
    p.up_ = std::move(up);
    p.finish_rows();
    return p;
}

void FinPoset::finish_rows() {
    down_.assign(up_.size(), 0);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (leq(i, j))
                down_[static_cast<std::size_t>(j) * words_ + (i >> 6)] |= 1ull << (i & 63);
        }
    }
}

void FinPoset::validate() const {
    for (int i = 0; i < n_; ++i) {
        if (!leq(i, i))
            throw StructureError("relation is not reflexive at element " + std::to_string(i));
    }
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (i != j && leq(i, j) && leq(j, i))
                throw StructureError("relation is not antisymmetric on elements " +
                                     std::to_string(i) + " and " + std::to_string(j));
        }
    }
    // transitivity: every row above j must sit inside every row above i with i <= j
    for (int i = 0; i < n_; ++i) {
        const std::uint64_t* ri = up_.data() + static_cast<std::size_t>(i) * words_;
        for (int j = 0; j < n_; ++j) {
            if (!leq(i, j) || i == j) continue;
            const std::uint64_t* rj = up_.data() + static_cast<std::size_t>(j) * words_;
            for (int w = 0; w < words_; ++w) {
                if (rj[w] & ~ri[w])
                    throw StructureError("relation is not transitive through element " +
                                         std::to_string(j));
            }
        }
    }
}

FinPoset FinPoset::discrete(int n) {
    if (n < 0) throw StructureError("negative element count");
    int w = words_for(n);
    std::vector<std::uint64_t> up(static_cast<std::size_t>(std::max(n, 1)) * w, 0);
    for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i) * w + (i >> 6)] |= 1ull << (i & 63);
    FinPoset p = unchecked_from_up_rows(n, std::move(up), w);
    return p;
}

FinPoset FinPoset::chain(int n) {
    if (n < 0) throw StructureError("negative element count");
    int w = words_for(n);
    std::vector<std::uint64_t> up(static_cast<std::size_t>(std::max(n, 1)) * w, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            up[static_cast<std::size_t>(i) * w + (j >> 6)] |= 1ull << (j & 63);
    return unchecked_from_up_rows(n, std::move(up), w);
}

FinPoset FinPoset::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw StructureError("negative element count");
    for (auto [i, j] : pairs) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw ParseError("generator pair (" + std::to_string(i) + "," + std::to_string(j) +
                             ") out of range for n=" + std::to_string(n));
    }
    int w = words_for(n);
    std::vector<std::uint64_t> up(static_cast<std::size_t>(std::max(n, 1)) * w, 0);
    auto set = [&](int i, int j) { up[static_cast<std::size_t>(i) * w + (j >> 6)] |= 1ull << (j & 63); };
    auto get = [&](int i, int j) {
        return (up[static_cast<std::size_t>(i) * w + (j >> 6)] >> (j & 63)) & 1u;
    };
    for (int i = 0; i < n; ++i) set(i, i);
    for (auto [i, j] : pairs) set(i, j);
    // Warshall closure on bit rows
    for (int k = 0; k < n; ++k) {
        const std::size_t rk = static_cast<std::size_t>(k) * w;
        for (int i = 0; i < n; ++i) {
            if (!get(i, k)) continue;
            const std::size_t ri = static_cast<std::size_t>(i) * w;
            for (int x = 0; x < w; ++x) up[ri + x] |= up[rk + x];
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (get(i, j) && get(j, i))
                throw CycleError("generators create a cycle through elements " +
                                 std::to_string(i) + " and " + std::to_string(j));
    return unchecked_from_up_rows(n, std::move(up), w);
}

FinPoset FinPoset::from_relation(int n, const std::function<bool(int, int)>& leq) {
    if (n < 0) throw StructureError("negative element count");
    int w = words_for(n);
    std::vector<std::uint64_t> up(static_cast<std::size_t>(std::max(n, 1)) * w, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq(i, j)) up[static_cast<std::size_t>(i) * w + (j >> 6)] |= 1ull << (j & 63);
    FinPoset p = unchecked_from_up_rows(n, std::move(up), w);
    p.validate();
    return p;
}

bool FinPoset::is_discrete() const {
    for (int i = 0; i < n_; ++i)
        for (int w = 0; w < words_; ++w) {
            std::uint64_t row = up_[static_cast<std::size_t>(i) * words_ + w];
            std::uint64_t self = (w == (i >> 6)) ? (1ull << (i & 63)) : 0;
            if (row != self) return false;
        }
    return true;
}

Mask FinPoset::up_row(int i) const {
    if (n_ > kMaskBits) throw SizeError("subset operations require at most 64 elements");
    return up_[static_cast<std::size_t>(i) * words_];
}

Mask FinPoset::down_row(int i) const {
    if (n_ > kMaskBits) throw SizeError("subset operations require at most 64 elements");
    return down_[static_cast<std::size_t>(i) * words_];
}

Mask FinPoset::universe() const {
    if (n_ > kMaskBits) throw SizeError("subset operations require at most 64 elements");
    return n_ == 64 ? ~0ull : ((1ull << n_) - 1);
}

Mask FinPoset::up(Mask s) const {
    Mask r = 0;
    for (int i : bits_of(s)) r |= up_row(i);
    return r;
}

Mask FinPoset::down(Mask s) const {
    Mask r = 0;
    for (int i : bits_of(s)) r |= down_row(i);
    return r;
}

FinPoset FinPoset::opposite() const {
    FinPoset p;
    p.n_ = n_;
    p.words_ = words_;
    p.up_ = down_;
    p.down_ = up_;
    return p;
}

std::vector<std::pair<int, int>> FinPoset::cover_pairs() const {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (i == j || !leq(i, j)) continue;
            bool covered = true;
            for (int k = 0; k < n_ && covered; ++k)
                if (k != i && k != j && leq(i, k) && leq(k, j)) covered = false;
            if (covered) covers.emplace_back(i, j);
        }
    }
    return covers;
}

std::vector<Mask> FinPoset::all_upsets() const {
    std::vector<Mask> out;
    if (n_ > 24) throw SizeError("up-set enumeration capped at 24 elements");
    Mask full = universe();
    for (Mask s = 0;; ++s) {
        if (is_upset(s)) out.push_back(s);
        if (s == full) break;
    }
    return out;
}

std::string FinPoset::key() const {
    std::ostringstream os;
    os << n_ << ':';
    for (std::uint64_t w : up_) os << std::hex << w << ',';
    return os.str();
}

FinPoset product(const FinPoset& a, const FinPoset& b) {
    int n = a.size() * b.size();
    int w = words_for(n);
    std::vector<std::uint64_t> up(static_cast<std::size_t>(std::max(n, 1)) * w, 0);
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j) {
            int from = i * b.size() + j;
            for (int i2 = 0; i2 < a.size(); ++i2) {
                if (!a.leq(i, i2)) continue;
                for (int j2 = 0; j2 < b.size(); ++j2) {
                    if (!b.leq(j, j2)) continue;
                    int to = i2 * b.size() + j2;
                    up[static_cast<std::size_t>(from) * w + (to >> 6)] |= 1ull << (to & 63);
                }
            }
        }
    return FinPoset::unchecked_from_up_rows(n, std::move(up), w);
}

MonotoneMap::MonotoneMap(FinPoset dom_, FinPoset cod_, std::vector<int> tbl_)
    : dom(std::move(dom_)), cod(std::move(cod_)), tbl(std::move(tbl_)) {
    if (static_cast<int>(tbl.size()) != dom.size())
        throw StructureError("map table length " + std::to_string(tbl.size()) +
                             " does not match domain size " + std::to_string(dom.size()));
    for (int v : tbl)
        if (v < 0 || v >= cod.size())
            throw StructureError("map value " + std::to_string(v) + " outside codomain");
    for (int i = 0; i < dom.size(); ++i)
        for (int j = 0; j < dom.size(); ++j)
            if (dom.leq(i, j) && !cod.leq(tbl[i], tbl[j]))
                throw StructureError("table is not monotone: " + std::to_string(i) + " <= " +
                                     std::to_string(j) + " but " + std::to_string(tbl[i]) +
                                     " !<= " + std::to_string(tbl[j]));
}

MonotoneMap MonotoneMap::identity(const FinPoset& p) {
    std::vector<int> t(p.size());
    for (int i = 0; i < p.size(); ++i) t[i] = i;
    return MonotoneMap(p, p, std::move(t));
}

MonotoneMap MonotoneMap::constant(const FinPoset& dom_, const FinPoset& cod_, int value) {
    return MonotoneMap(dom_, cod_, std::vector<int>(dom_.size(), value));
}

Mask MonotoneMap::image(Mask s) const {
    Mask r = 0;
    for (int i : bits_of(s)) r |= 1ull << tbl[i];
    return r;
}

bool MonotoneMap::is_order_reflecting() const {
    for (int i = 0; i < dom.size(); ++i)
        for (int j = 0; j < dom.size(); ++j)
            if (cod.leq(tbl[i], tbl[j]) && !dom.leq(i, j)) return false;
    return true;
}

bool MonotoneMap::is_bijective() const {
    if (dom.size() != cod.size()) return false;
    std::vector<char> hit(tbl.size(), 0);
    for (int v : tbl) {
        if (hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

MonotoneMap MonotoneMap::opposite() const { return MonotoneMap(dom.opposite(), cod.opposite(), tbl); }

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
    if (!(f.cod == g.dom)) throw StructureError("composition domains do not line up");
    std::vector<int> t(f.tbl.size());
    for (std::size_t i = 0; i < f.tbl.size(); ++i) t[i] = g.tbl[f.tbl[i]];
    return MonotoneMap(f.dom, g.cod, std::move(t));
}

EqualizerResult equalizer(const MonotoneMap& f, const MonotoneMap& g) {
    if (!(f.dom == g.dom) || !(f.cod == g.cod))
        throw StructureError("equalizer needs a parallel pair");
    std::vector<int> elems;
    for (int i = 0; i < f.dom.size(); ++i)
        if (f.tbl[i] == g.tbl[i]) elems.push_back(i);
    FinPoset sub = FinPoset::from_relation(
        static_cast<int>(elems.size()),
        [&](int a, int b) { return f.dom.leq(elems[a], elems[b]); });
    MonotoneMap incl(sub, f.dom, elems);
    return EqualizerResult{std::move(sub), std::move(incl), std::move(elems)};
}

void CoreflexiveInstance::require_valid() const {
    MonotoneMap kf = compose(retraction, f);
    MonotoneMap kg = compose(retraction, g);
    MonotoneMap id = MonotoneMap::identity(x);
    if (!(kf == id) || !(kg == id))
        throw PreconditionError("retraction equations fail: k.f and k.g must both be the identity");
}

FinPoset random_poset(Rng& rng, int n, bool discrete) {
    if (discrete || n <= 1) return FinPoset::discrete(n);
    // random relation compatible with the identity labeling: i < j only
    std::vector<std::pair<int, int>> pairs;
    int budget = rng.below(2 * n + 1);
    for (int t = 0; t < budget; ++t) {
        int i = rng.below(n);
        int j = rng.below(n);
        if (i == j) continue;
        pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
    return FinPoset::from_pairs(n, pairs);
}

CoreflexiveInstance generate_coreflexive_pair(std::uint64_t seed, int max_size, bool discrete) {
    if (max_size < 1) throw GenerationError("max_size must be at least 1");
    Rng rng(seed ^ 0x5eedc0ffee123457ull);

    int nx = 1 + rng.below(std::max(1, max_size));
    FinPoset x = random_poset(rng, nx, discrete);

    // fresh points hang above or below one base point each
    int fresh = rng.below(std::max(1, max_size - nx + 1));
    int ny = nx + fresh;
    std::vector<std::pair<int, int>> ypairs = [&] {
        std::vector<std::pair<int, int>> ps;
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < nx; ++j)
                if (i != j && x.leq(i, j)) ps.emplace_back(i, j);
        return ps;
    }();
    std::vector<int> anchor(fresh);
    for (int p = 0; p < fresh; ++p) {
        int base = rng.below(nx);
        anchor[p] = base;
        if (!discrete) {
            if (rng.coin())
                ypairs.emplace_back(base, nx + p); // fresh point above its anchor
            else
                ypairs.emplace_back(nx + p, base);
        }
    }
    FinPoset y = FinPoset::from_pairs(ny, ypairs);

    std::vector<int> ktbl(ny);
    for (int i = 0; i < nx; ++i) ktbl[i] = i;
    for (int p = 0; p < fresh; ++p) ktbl[nx + p] = anchor[p];
    MonotoneMap k(y, x, std::move(ktbl));

    // fibers of k, per base point
    std::vector<std::vector<int>> fiber(nx);
    for (int i = 0; i < nx; ++i) fiber[i].push_back(i);
    for (int p = 0; p < fresh; ++p) fiber[anchor[p]].push_back(nx + p);

    auto random_section = [&]() -> std::optional<MonotoneMap> {
        for (int attempt = 0; attempt < 32; ++attempt) {
            std::vector<int> t(nx);
            for (int i = 0; i < nx; ++i) t[i] = fiber[i][rng.below(static_cast<int>(fiber[i].size()))];
            bool mono = true;
            for (int i = 0; i < nx && mono; ++i)
                for (int j = 0; j < nx && mono; ++j)
                    if (x.leq(i, j) && !y.leq(t[i], t[j])) mono = false;
            if (mono) return MonotoneMap(x, y, std::move(t));
        }
        return std::nullopt;
    };

    std::vector<int> idtbl(nx);
    for (int i = 0; i < nx; ++i) idtbl[i] = i;
    MonotoneMap embed(x, y, idtbl);

    auto pick = [&]() { return random_section().value_or(embed); };
    MonotoneMap f = pick();
    MonotoneMap g = pick();

    CoreflexiveInstance inst{std::move(x), std::move(y), std::move(f), std::move(g), std::move(k)};
    inst.require_valid();
    return inst;
}

std::vector<FinPoset> enumerate_posets(int n) {
    if (n < 0) throw StructureError("negative element count");
    if (n > 5) throw SizeError("poset enumeration capped at 5 elements");
    std::vector<FinPoset> out;
    if (n == 0) {
        out.push_back(FinPoset::discrete(0));
        return out;
    }
    // strict pairs (i, j), i != j, indexed in row-major order minus diagonal
    int bits = n * (n - 1);
    std::vector<std::pair<int, int>> slot(bits);
    {
        int b = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) slot[b++] = {i, j};
    }
    for (std::uint64_t code = 0; code < (1ull << bits); ++code) {
        std::vector<Mask> row(n);
        for (int i = 0; i < n; ++i) row[i] = 1ull << i;
        for (int b = 0; b < bits; ++b) {
            if (!((code >> b) & 1)) continue;
            auto [i, j] = slot[b];
            row[i] |= 1ull << j;
        }
        bool anti = true;
        for (int i = 0; i < n && anti; ++i)
            for (int j : bits_of(row[i] & ~(1ull << i)))
                if (row[j] & (1ull << i)) {
                    anti = false;
                    break;
                }
        if (!anti) continue;
        bool trans = true;
        for (int i = 0; i < n && trans; ++i)
            for (int j : bits_of(row[i])) {
                if (row[j] & ~row[i]) {
                    trans = false;
                    break;
                }
            }
        if (!trans) continue;
        out.push_back(FinPoset::from_relation(
            n, [&](int i, int j) { return (row[i] >> j) & 1; }));
    }
    return out;
}

std::vector<std::vector<int>> enumerate_monotone_tables(const FinPoset& dom, const FinPoset& cod) {
    std::vector<std::vector<int>> out;
    int n = dom.size(), m = cod.size();
    if (n == 0) {
        out.push_back({});
        return out;
    }
    if (m == 0) return out; // no maps into the empty poset from a nonempty one
    std::vector<int> t(n, 0);
    while (true) {
        bool mono = true;
        for (int i = 0; i < n && mono; ++i)
            for (int j = 0; j < n && mono; ++j)
                if (dom.leq(i, j) && !cod.leq(t[i], t[j])) mono = false;
        if (mono) out.push_back(t);
        int pos = n - 1;
        while (pos >= 0 && t[pos] == m - 1) t[pos--] = 0;
        if (pos < 0) break;
        ++t[pos];
    }
    return out;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace vw
