#pragma once

// Intersection poset of a central arrangement, its Moebius function, and the
// cone / essentialization constructions.

#include <hyparr/errors.hpp>
#include <hyparr/exactlin.hpp>

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace hyparr {

// d hyperplanes in P^n, given by the rows of a d x (n+1) rational matrix.
class Arrangement {
public:
    Arrangement(std::size_t n, RatMatrix forms) : n_(n), forms_(std::move(forms)) {
        validate();
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t d() const noexcept { return forms_.rows(); }
    std::size_t ambient_dim() const noexcept { return n_ + 1; }
    const RatMatrix& forms() const noexcept { return forms_; }
    std::span<const Rational> form(std::size_t i) const { return forms_.row(i); }

    friend bool operator==(const Arrangement&, const Arrangement&) = default;

private:
    void validate() const {
        if (forms_.rows() == 0)
            throw InputError("arrangement needs at least one hyperplane");
        if (forms_.cols() != n_ + 1)
            throw InputError("forms have " + std::to_string(forms_.cols()) +
                             " columns, expected n+1 = " + std::to_string(n_ + 1));
        std::map<std::string, std::size_t> seen;
        for (std::size_t i = 0; i < forms_.rows(); ++i) {
            if (forms_.row_is_zero(i))
                throw InputError("form " + std::to_string(i) + " is zero");
            std::size_t one = i;
            auto key = canonical_key(forms_.select_rows({&one, 1}));
            auto [it, fresh] = seen.emplace(std::move(key), i);
            if (!fresh)
                throw InputError("forms " + std::to_string(it->second) + " and " +
                                 std::to_string(i) + " define the same hyperplane");
        }
    }

    std::size_t n_;
    RatMatrix forms_;
};

// An intersection of hyperplanes, viewed as a linear subspace of k^{n+1}.
struct Flat {
    RatMatrix span;                   // RREF basis of the forms vanishing on the flat
    std::size_t codim = 0;
    std::size_t dim = 0;              // codim + dim = n + 1
    std::vector<std::size_t> members; // sorted indices i with flat inside H_i
    Integer mobius = 0;               // mu(V, flat)
};

class IntersectionLattice {
public:
    std::size_t n() const noexcept { return n_; }
    std::size_t d() const noexcept { return d_; }
    std::size_t size() const noexcept { return flats_.size(); }
    const std::vector<Flat>& flats() const noexcept { return flats_; }
    const Flat& flat(std::size_t i) const { return flats_[i]; }

    // Indices of flats strictly below flat i (subspaces strictly containing it).
    const std::vector<std::uint32_t>& below(std::size_t i) const { return below_[i]; }

    bool leq(std::size_t y, std::size_t x) const {
        if (y == x)
            return true;
        const auto& b = below_[x];
        return std::binary_search(b.begin(), b.end(), static_cast<std::uint32_t>(y));
    }

    std::size_t max_codim() const {
        std::size_t m = 0;
        for (const auto& f : flats_)
            m = std::max(m, f.codim);
        return m;
    }

    std::vector<std::size_t> level(std::size_t codim) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < flats_.size(); ++i)
            if (flats_[i].codim == codim)
                out.push_back(i);
        return out;
    }

    // Index of the flat whose defining span equals row-space(span), if any.
    std::optional<std::size_t> find(const RatMatrix& span) const {
        auto it = index_.find(canonical_key(span));
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

private:
    friend IntersectionLattice build_order(std::size_t, std::size_t, std::vector<Flat>,
                                           std::unordered_map<std::string, std::size_t>);
    friend IntersectionLattice mobius_assign(IntersectionLattice);

    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<Flat> flats_; // nondecreasing codim; flats_[0] is V
    std::vector<std::vector<std::uint32_t>> below_;
    std::unordered_map<std::string, std::size_t> index_;
};

namespace detail {

inline boost::dynamic_bitset<> member_bits(const Flat& f, std::size_t d) {
    boost::dynamic_bitset<> bits(d);
    for (auto i : f.members)
        bits.set(i);
    return bits;
}

inline std::vector<std::size_t> members_of(const RowEchelon& span, const RatMatrix& forms) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < forms.rows(); ++i)
        if (in_row_space(span, forms.row(i)))
            out.push_back(i);
    return out;
}

} // namespace detail

// Fills in the order relation. Flats are closed under membership, so y <= x
// iff members(y) is a subset of members(x); tests cross-check this against
// span_contains.
inline IntersectionLattice build_order(std::size_t n, std::size_t d, std::vector<Flat> flats,
                                       std::unordered_map<std::string, std::size_t> index) {
    IntersectionLattice l;
    l.n_ = n;
    l.d_ = d;
    std::vector<boost::dynamic_bitset<>> bits;
    bits.reserve(flats.size());
    for (const auto& f : flats)
        bits.push_back(detail::member_bits(f, d));
    l.below_.assign(flats.size(), {});
    for (std::size_t x = 0; x < flats.size(); ++x)
        for (std::size_t y = 0; y < x; ++y)
            if (flats[y].codim < flats[x].codim && bits[y].is_subset_of(bits[x]))
                l.below_[x].push_back(static_cast<std::uint32_t>(y));
    l.flats_ = std::move(flats);
    l.index_ = std::move(index);
    return l;
}

// mu(V) = 1 and mu(x) = -sum_{y < x} mu(y).
inline IntersectionLattice mobius_assign(IntersectionLattice l) {
    for (std::size_t x = 0; x < l.flats_.size(); ++x) {
        Integer s = 0;
        for (auto y : l.below_[x])
            s += l.flats_[y].mobius;
        l.flats_[x].mobius = x == 0 ? Integer(1) : Integer(-s);
    }
    return l;
}

// Breadth-first by codimension: intersect each frontier flat with every
// hyperplane not already containing it, canonicalize, dedup globally.
inline IntersectionLattice build_lattice(const Arrangement& a) {
    const std::size_t n = a.n(), d = a.d();
    std::vector<Flat> flats;
    std::unordered_map<std::string, std::size_t> index;

    Flat top;
    top.span = RatMatrix(0, n + 1);
    top.codim = 0;
    top.dim = n + 1;
    index.emplace(canonical_key(top.span), 0);
    flats.push_back(std::move(top));

    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (auto fi : frontier) {
            const std::vector<std::size_t> members = flats[fi].members;
            const RatMatrix span = flats[fi].span;
            for (std::size_t i = 0; i < d; ++i) {
                if (std::binary_search(members.begin(), members.end(), i))
                    continue;
                RowEchelon e = rref(span.stacked_row(a.form(i)));
                RatMatrix basis = e.basis();
                std::string key = canonical_key(basis);
                if (index.contains(key))
                    continue;
                Flat f;
                f.codim = e.rank;
                f.dim = n + 1 - e.rank;
                f.members = detail::members_of(e, a.forms());
                f.span = std::move(basis);
                index.emplace(std::move(key), flats.size());
                next.push_back(flats.size());
                flats.push_back(std::move(f));
            }
        }
        frontier = std::move(next);
    }
    return mobius_assign(build_order(n, d, std::move(flats), std::move(index)));
}

// The common intersection of all hyperplanes.
inline Flat center(const Arrangement& a) {
    RowEchelon e = rref(a.forms());
    Flat f;
    f.codim = e.rank;
    f.dim = a.ambient_dim() - e.rank;
    f.members = detail::members_of(e, a.forms());
    f.span = e.basis();
    return f;
}

inline bool is_essential(const Arrangement& a) { return center(a).dim == 0; }

// The same forms in P^{n+k}, ignoring the k new coordinates.
inline Arrangement cone(const Arrangement& a, std::size_t k) {
    return Arrangement(a.n() + k, a.forms().padded(k));
}

struct Essentialization {
    Arrangement arrangement; // essential, in P^{n-k}
    std::size_t k = 0;       // dimension of the center
};

// Quotient by the center: every form lies in the row space of the forms, so
// its coordinates in the RREF basis are its entries at the pivot columns.
inline Essentialization essentialize(const Arrangement& a) {
    RowEchelon e = rref(a.forms());
    return {Arrangement(e.rank - 1, a.forms().select_cols(e.pivots)),
            a.ambient_dim() - e.rank};
}

// Flat count and sorted Moebius values for one codimension.
struct LevelSummary {
    std::size_t codim = 0;
    std::size_t count = 0;
    std::vector<Integer> mobius;

    Integer mobius_sum() const {
        Integer s = 0;
        for (const auto& m : mobius)
            s += m;
        return s;
    }

    friend bool operator==(const LevelSummary&, const LevelSummary&) = default;
};

inline std::vector<LevelSummary> level_summary(const IntersectionLattice& l) {
    std::vector<LevelSummary> out(l.max_codim() + 1);
    for (std::size_t c = 0; c < out.size(); ++c)
        out[c].codim = c;
    for (const auto& f : l.flats()) {
        ++out[f.codim].count;
        out[f.codim].mobius.push_back(f.mobius);
    }
    for (auto& s : out)
        std::sort(s.mobius.begin(), s.mobius.end());
    return out;
}

} // namespace hyparr
