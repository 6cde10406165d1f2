#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vw/error.hpp"

namespace vw {

/// A subset of a poset's carrier, one bit per element index.
/// Subset-level operations require the host poset to have at most 64
/// elements; larger posets (hyperspace orders, chain levels) only support
/// pointwise relation queries.
using Mask = std::uint64_t;

constexpr int kMaskBits = 64;

/// Iterates the set bits of a mask: `for (int i : bits_of(m)) ...`.
class bits_of {
public:
    explicit bits_of(Mask m) : m_(m) {}
    class iterator {
    public:
        explicit iterator(Mask m) : m_(m) {}
        int operator*() const;
        iterator& operator++() {
            m_ &= m_ - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return m_ != o.m_; }

    private:
        Mask m_;
    };
    iterator begin() const { return iterator(m_); }
    iterator end() const { return iterator(0); }

private:
    Mask m_;
};

int popcount(Mask m);

/// A finite poset on elements 0..n-1.
///
/// The relation is stored as bit rows in both directions, so `leq` is a
/// single bit probe and the closure operators are word-parallel. The
/// constructor validates reflexivity, antisymmetry and transitivity; every
/// FinPoset in the system is a genuine partial order.
class FinPoset {
public:
    FinPoset() : n_(0), words_(1), up_(1, 0), down_(1, 0) {}

    /// The discrete order (antichain) on n elements.
    static FinPoset discrete(int n);

    /// The linear order 0 < 1 < ... < n-1.
    static FinPoset chain(int n);

    /// Reflexive-transitive closure of generator pairs (i <= j per pair).
    /// Throws CycleError if the closure violates antisymmetry.
    static FinPoset from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

    /// Builds from a complete relation predicate and validates the poset
    /// laws, throwing StructureError on violation.
    static FinPoset from_relation(int n, const std::function<bool(int, int)>& leq);

    int size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool leq(int i, int j) const {
        return (up_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
    }

    bool is_discrete() const;

    /// {j | i <= j} as a mask. Requires n <= 64.
    Mask up_row(int i) const;
    /// {j | j <= i} as a mask. Requires n <= 64.
    Mask down_row(int i) const;

    Mask universe() const;

    /// Up-closure of a subset. Requires n <= 64.
    Mask up(Mask s) const;
    /// Down-closure of a subset. Requires n <= 64.
    Mask down(Mask s) const;
    /// Convex closure: up(s) & down(s).
    Mask convex(Mask s) const { return up(s) & down(s); }

    bool is_upset(Mask s) const { return up(s) == s; }
    bool is_downset(Mask s) const { return down(s) == s; }
    bool is_convex(Mask s) const { return convex(s) == s; }

    /// Same carrier, order reversed.
    FinPoset opposite() const;

    /// Covering pairs (i, j) with i < j and nothing strictly between;
    /// these regenerate the poset through from_pairs.
    std::vector<std::pair<int, int>> cover_pairs() const;

    /// All up-sets in ascending mask order. Requires n <= 64 and is only
    /// sensible for small n.
    std::vector<Mask> all_upsets() const;

    bool operator==(const FinPoset& o) const { return n_ == o.n_ && up_ == o.up_; }
    bool operator!=(const FinPoset& o) const { return !(*this == o); }

    /// Stable text key for memo tables.
    std::string key() const;

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> up_;   // row i: everything above i
    std::vector<std::uint64_t> down_; // row i: everything below i

    void finish_rows(); // fills down_ from up_
    static FinPoset unchecked_from_up_rows(int n, std::vector<std::uint64_t> up, int words);
    void validate() const;

    friend FinPoset product(const FinPoset&, const FinPoset&);
};

/// Componentwise order on pairs, indexed a * b.size() + b.
FinPoset product(const FinPoset& a, const FinPoset& b);

/// An order-preserving map between finite posets, stored as a full table.
/// The constructor rejects non-monotone tables.
struct MonotoneMap {
    FinPoset dom;
    FinPoset cod;
    std::vector<int> tbl;

    MonotoneMap(FinPoset dom_, FinPoset cod_, std::vector<int> tbl_);

    static MonotoneMap identity(const FinPoset& p);
    static MonotoneMap constant(const FinPoset& dom_, const FinPoset& cod_, int value);

    int operator()(int i) const { return tbl[static_cast<std::size_t>(i)]; }

    /// Direct image of a subset of the domain. Requires cod.size() <= 64.
    Mask image(Mask s) const;

    /// f(x) <= f(y) implies x <= y. Characterizes the regular monos of the
    /// finite model.
    bool is_order_reflecting() const;

    bool is_bijective() const;
    bool is_order_isomorphism() const { return is_bijective() && is_order_reflecting(); }

    /// Same carrier on both sides but with the opposite orders.
    MonotoneMap opposite() const;

    bool operator==(const MonotoneMap& o) const {
        return dom == o.dom && cod == o.cod && tbl == o.tbl;
    }
};

/// g after f.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

struct EqualizerResult {
    FinPoset sub;          // induced order on {x | f(x) = g(x)}
    MonotoneMap inclusion; // order-reflecting by construction
    std::vector<int> elements;
};

/// The equalizer {x | f(x) = g(x)} with its inclusion. May be empty.
EqualizerResult equalizer(const MonotoneMap& f, const MonotoneMap& g);

/// A parallel pair f, g : X -> Y with a common retraction k (k.f = k.g = id).
struct CoreflexiveInstance {
    FinPoset x;
    FinPoset y;
    MonotoneMap f;
    MonotoneMap g;
    MonotoneMap retraction;

    /// Checks the retraction equations, throwing PreconditionError if they
    /// fail.
    void require_valid() const;
};

/// Deterministic-per-seed random coreflexive instance. Y extends X with
/// fresh points hung above or below existing ones, the retraction collapses
/// them back, and f, g are monotone sections. `discrete` restricts both
/// posets to antichains (the classical-variant regime).
CoreflexiveInstance generate_coreflexive_pair(std::uint64_t seed, int max_size,
                                              bool discrete = false);

/// All partial orders on n labeled elements (n <= 5 is practical).
std::vector<FinPoset> enumerate_posets(int n);

struct Rng;

/// A random poset on n elements whose order is compatible with the index
/// order (generator pairs only point upward, so no cycles arise).
FinPoset random_poset(Rng& rng, int n, bool discrete = false);

/// All monotone tables dom -> cod.
std::vector<std::vector<int>> enumerate_monotone_tables(const FinPoset& dom,
                                                        const FinPoset& cod);

/// Small deterministic PRNG (splitmix64); identical streams on every
/// platform for a given seed.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n).
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    bool coin() { return next() & 1u; }
};

/// FNV-1a hash of a byte string; used for provenance digests and
/// per-property seed derivation.
std::uint64_t fnv1a(const std::string& s);

} // namespace vw
