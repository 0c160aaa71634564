#pragma once

// Point counting over F_p: reduce the forms mod p, enumerate P^n(F_p) and
// F_p^{n+1}, and count points off every hyperplane. The enumerated counts are
// compared with chibar(p) and chi(p).

#include <hyparr/charpoly.hpp>
#include <hyparr/errors.hpp>
#include <hyparr/lattice.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hyparr {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Default enumeration budget; HYPARR_BUDGET overrides it.
inline std::uint64_t default_budget() {
    if (const char* env = std::getenv("HYPARR_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0')
            return v;
    }
    return kDefaultBudget;
}

inline bool is_prime(std::uint64_t p) {
    if (p < 2)
        return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime(p) || p >= (1ULL << 31))
            throw InputError(std::to_string(p) + " is not a supported prime");
    }

    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        for (a %= p_; e; e >>= 1, a = mul(a, a))
            if (e & 1)
                r = mul(r, a);
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }

    std::uint64_t from_integer(const Integer& v) const {
        Integer r = v % p_;
        if (r < 0)
            r += p_;
        return static_cast<std::uint64_t>(r);
    }

    // nullopt if the denominator vanishes mod p.
    std::optional<std::uint64_t> from_rational(const Rational& v) const {
        const std::uint64_t den = from_integer(boost::multiprecision::denominator(v));
        if (den == 0)
            return std::nullopt;
        return mul(from_integer(boost::multiprecision::numerator(v)), inv(den));
    }

private:
    std::uint64_t p_;
};

using ModRow = std::vector<std::uint64_t>;

// Canonical RREF of a span over F_p, nonzero rows only.
inline std::vector<ModRow> rref_mod(std::vector<ModRow> rows, const PrimeField& f) {
    if (rows.empty())
        return rows;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[r]);
        const std::uint64_t inv = f.inv(rows[r][c]);
        for (auto& v : rows[r])
            v = f.mul(v, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            const std::uint64_t m = rows[i][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(m, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

inline std::size_t rank_mod(std::vector<ModRow> rows, const PrimeField& f) {
    return rref_mod(std::move(rows), f).size();
}

// The forms of an arrangement reduced modulo p.
class ModArrangement {
public:
    // nullopt if some denominator is divisible by p.
    static std::optional<ModArrangement> reduce(const Arrangement& a, const PrimeField& f) {
        ModArrangement m(f);
        m.n_ = a.n();
        for (std::size_t i = 0; i < a.d(); ++i) {
            ModRow row;
            for (const auto& v : a.form(i)) {
                auto r = f.from_rational(v);
                if (!r)
                    return std::nullopt;
                row.push_back(*r);
            }
            m.forms_.push_back(std::move(row));
        }
        return m;
    }

    const PrimeField& field() const noexcept { return field_; }
    std::uint64_t p() const noexcept { return field_.p(); }
    std::size_t n() const noexcept { return n_; }
    std::size_t d() const noexcept { return forms_.size(); }
    const ModRow& form(std::size_t i) const { return forms_[i]; }

    // Removes coordinates on which no form depends; returns how many went.
    std::size_t drop_free_columns() {
        std::vector<std::size_t> keep;
        for (std::size_t c = 0; c <= n_; ++c)
            if (std::any_of(forms_.begin(), forms_.end(), [c](const ModRow& r) { return r[c] != 0; }))
                keep.push_back(c);
        const std::size_t dropped = n_ + 1 - keep.size();
        if (dropped == 0 || keep.empty())
            return 0;
        for (auto& r : forms_) {
            ModRow kept;
            for (auto c : keep)
                kept.push_back(r[c]);
            r = std::move(kept);
        }
        n_ = keep.size() - 1;
        return dropped;
    }

    std::vector<ModRow> rows(const std::vector<std::size_t>& idx) const {
        std::vector<ModRow> out;
        for (auto i : idx)
            out.push_back(forms_[i]);
        return out;
    }

private:
    explicit ModArrangement(const PrimeField& f) : field_(f) {}

    PrimeField field_;
    std::size_t n_ = 0;
    std::vector<ModRow> forms_;
};

// True iff reduction mod p keeps the intersection lattice:
//  - rows stay nonzero and pairwise non-proportional;
//  - each flat keeps its codimension (rank of its member rows);
//  - no further hyperplane falls into a flat's span mod p;
//  - distinct flats keep distinct spans.
inline bool good_prime_check(const Arrangement& a, const IntersectionLattice& l,
                             std::uint64_t p) {
    if (!is_prime(p))
        return false;
    const PrimeField f(p);
    const auto m = ModArrangement::reduce(a, f);
    if (!m)
        return false;

    std::set<std::vector<ModRow>> points;
    for (std::size_t i = 0; i < m->d(); ++i) {
        auto r = rref_mod({m->form(i)}, f);
        if (r.empty() || !points.insert(r).second)
            return false;
    }

    std::set<std::vector<ModRow>> spans;
    for (const Flat& x : l.flats()) {
        auto span = rref_mod(m->rows(x.members), f);
        if (span.size() != x.codim)
            return false;
        for (std::size_t i = 0; i < m->d(); ++i) {
            if (std::binary_search(x.members.begin(), x.members.end(), i))
                continue;
            auto with = span;
            with.push_back(m->form(i));
            if (rank_mod(std::move(with), f) == span.size())
                return false;
        }
        if (!spans.insert(std::move(span)).second)
            return false;
    }
    return true;
}

inline bool good_prime_check(const Arrangement& a, std::uint64_t p) {
    return good_prime_check(a, build_lattice(a), p);
}

struct CountOptions {
    std::uint64_t budget = default_budget();
    unsigned threads = 1; // 1 = single-threaded reference path
};

namespace detail {

// p^e, saturating at UINT64_MAX.
inline std::uint64_t saturating_pow(std::uint64_t p, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > UINT64_MAX / p)
            return UINT64_MAX;
        r *= p;
    }
    return r;
}

// Counts points with coordinates fixed on [0, first) by `prefix` and free on
// [first, n]. Every odometer step increments a run of low digits by one mod
// p, so each form value moves by the sum of those digits' coefficients.
inline std::uint64_t count_stratum(const ModArrangement& m, const ModRow& prefix,
                                   std::size_t first) {
    const PrimeField& f = m.field();
    const std::size_t cols = m.n() + 1, d = m.d();
    const std::uint64_t p = f.p();
    std::vector<std::uint64_t> value(d, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t c = 0; c < first; ++c)
            value[i] = f.add(value[i], f.mul(prefix[c], m.form(i)[c]));

    auto off_all = [&] {
        for (std::size_t i = 0; i < d; ++i)
            if (value[i] == 0)
                return false;
        return true;
    };
    if (first == cols)
        return off_all() ? 1 : 0;

    std::vector<std::uint64_t> digit(cols, 0);
    std::uint64_t count = 0;
    while (true) {
        count += off_all();
        for (std::size_t c = cols - 1;; --c) {
            for (std::size_t i = 0; i < d; ++i)
                value[i] = f.add(value[i], m.form(i)[c]);
            if (++digit[c] < p)
                break;
            digit[c] = 0;
            if (c == first)
                return count;
        }
    }
}

inline ModArrangement reduce_or_throw(const Arrangement& a, std::uint64_t p) {
    const PrimeField f(p);
    auto m = ModArrangement::reduce(a, f);
    if (!m)
        throw BadPrime("a denominator vanishes mod " + std::to_string(p));
    return std::move(*m);
}

inline std::uint64_t run_strata(const ModArrangement& m,
                                const std::vector<std::pair<ModRow, std::size_t>>& strata,
                                unsigned threads) {
    std::uint64_t total = 0;
    if (threads <= 1) {
        for (const auto& [prefix, first] : strata)
            total += count_stratum(m, prefix, first);
        return total;
    }
    std::vector<std::future<std::uint64_t>> jobs;
    for (unsigned t = 0; t < threads; ++t)
        jobs.push_back(std::async(std::launch::async, [&, t] {
            std::uint64_t sub = 0;
            for (std::size_t s = t; s < strata.size(); s += threads)
                sub += count_stratum(m, strata[s].first, strata[s].second);
            return sub;
        }));
    for (auto& j : jobs)
        total += j.get();
    return total;
}

// count * p^z; the product must fit in 64 bits.
inline std::uint64_t scale_by_free(std::uint64_t count, std::uint64_t p, std::size_t z) {
    const std::uint64_t f = saturating_pow(p, z);
    if (f == UINT64_MAX || (count != 0 && count > UINT64_MAX / f))
        throw BudgetExceeded("point count does not fit in 64 bits");
    return count * f;
}

} // namespace detail

// Points of P^n(F_p) on no hyperplane. Coordinates no form depends on are
// split off as a factor p^z. Representatives are normalized with first
// nonzero coordinate 1; stratum j has that coordinate at position j.
inline std::uint64_t count_projective_complement(const Arrangement& a, std::uint64_t p,
                                                 const CountOptions& opt = {}) {
    ModArrangement m = detail::reduce_or_throw(a, p);
    const std::size_t z = m.drop_free_columns();
    const std::size_t cols = m.n() + 1;
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < cols; ++j) {
        const std::uint64_t stratum = detail::saturating_pow(p, cols - 1 - j);
        total = stratum > UINT64_MAX - total ? UINT64_MAX : total + stratum;
    }
    if (total > opt.budget)
        throw BudgetExceeded("P^" + std::to_string(m.n()) + "(F_" + std::to_string(p) +
                             ") has more points than the budget " +
                             std::to_string(opt.budget));
    std::vector<std::pair<ModRow, std::size_t>> strata;
    for (std::size_t j = 0; j < cols; ++j) {
        ModRow prefix(cols, 0);
        prefix[j] = 1;
        strata.emplace_back(std::move(prefix), j + 1);
    }
    return detail::scale_by_free(detail::run_strata(m, strata, opt.threads), p, z);
}

// Points of F_p^{n+1} on no hyperplane, stratified by the first coordinate.
inline std::uint64_t count_affine_complement(const Arrangement& a, std::uint64_t p,
                                             const CountOptions& opt = {}) {
    ModArrangement m = detail::reduce_or_throw(a, p);
    const std::size_t z = m.drop_free_columns();
    const std::size_t cols = m.n() + 1;
    if (detail::saturating_pow(p, cols) > opt.budget)
        throw BudgetExceeded("F_" + std::to_string(p) + "^" + std::to_string(cols) +
                             " has more points than the budget " +
                             std::to_string(opt.budget));
    std::vector<std::pair<ModRow, std::size_t>> strata;
    for (std::uint64_t v = 0; v < p; ++v) {
        ModRow prefix(cols, 0);
        prefix[0] = v;
        strata.emplace_back(std::move(prefix), 1);
    }
    return detail::scale_by_free(detail::run_strata(m, strata, opt.threads), p, z);
}

struct PointCountReport {
    std::uint64_t p = 0;
    Integer reduced_char_at_p;  // chibar(p)
    std::uint64_t projective_count = 0;
    Integer char_at_p;          // chi(p)
    std::uint64_t affine_count = 0;
    bool projective_ok = false;
    bool affine_ok = false;

    bool passed() const { return projective_ok && affine_ok; }
    friend bool operator==(const PointCountReport&, const PointCountReport&) = default;
};

// Throws BadPrime (distinct from a mismatch, which is reported) and
// BudgetExceeded.
inline PointCountReport verify_point_count(const Arrangement& a, const IntersectionLattice& l,
                                           std::uint64_t p, const CountOptions& opt = {}) {
    if (!good_prime_check(a, l, p))
        throw BadPrime(std::to_string(p) + " is a bad prime for this arrangement");
    const IntPoly chi = char_poly(l);
    const IntPoly chibar = reduced_char(chi);
    PointCountReport r;
    r.p = p;
    r.reduced_char_at_p = chibar(Integer(p));
    r.char_at_p = chi(Integer(p));
    r.projective_count = count_projective_complement(a, p, opt);
    r.affine_count = count_affine_complement(a, p, opt);
    r.projective_ok = r.reduced_char_at_p == Integer(r.projective_count);
    r.affine_ok = r.char_at_p == Integer(r.affine_count);
    return r;
}

inline PointCountReport verify_point_count(const Arrangement& a, std::uint64_t p,
                                           const CountOptions& opt = {}) {
    return verify_point_count(a, build_lattice(a), p, opt);
}

// The first `count` good primes from `candidates`.
inline std::vector<std::uint64_t> good_primes(const Arrangement& a, const IntersectionLattice& l,
                                              std::size_t count,
                                              const std::vector<std::uint64_t>& candidates = {
                                                  2, 3, 5, 7, 11, 13}) {
    std::vector<std::uint64_t> out;
    for (auto p : candidates) {
        if (out.size() == count)
            break;
        if (good_prime_check(a, l, p))
            out.push_back(p);
    }
    return out;
}

} // namespace hyparr
