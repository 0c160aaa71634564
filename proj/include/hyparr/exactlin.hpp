#pragma once

// Exact rational linear algebra: canonical row reduction, rank and row-space
// containment. Everything here is exact; there is no floating point.

#include <hyparr/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyparr {

using Integer = boost::multiprecision::cpp_int;
// Always stored in lowest terms with a positive denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
    const Integer& den = boost::multiprecision::denominator(v);
    if (den == 1)
        return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" + den.str();
}

// Parses "-3", "+7", "3/4", "-12/8" (reduced on construction).
inline Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(),
                                          [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!digits(num) || !digits(den))
        throw InputError("malformed rational '" + std::string(text) + "'");
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0)
        throw InputError("zero denominator in '" + std::string(text) + "'");
    if (negative)
        n = -n;
    return Rational(n, d);
}

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    RatMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw InputError("ragged matrix literal");
            for (long long v : r)
                entries_.emplace_back(v);
        }
    }

    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows,
                               std::size_t cols) {
        RatMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw InputError("row " + std::to_string(i) + " has " +
                                 std::to_string(rows[i].size()) + " entries, expected " +
                                 std::to_string(cols));
            std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + i * cols);
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Rational& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    std::span<const Rational> entries() const { return entries_; }

    bool row_is_zero(std::size_t r) const {
        auto rr = row(r);
        return std::all_of(rr.begin(), rr.end(), [](const Rational& v) { return v == 0; });
    }

    // This matrix with the rows of `below` appended.
    RatMatrix stacked(const RatMatrix& below) const {
        if (below.cols_ != cols_ && below.rows_ != 0 && rows_ != 0)
            throw std::invalid_argument("stacked: column count mismatch");
        RatMatrix out(rows_ + below.rows_, std::max(cols_, below.cols_));
        std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
        std::copy(below.entries_.begin(), below.entries_.end(),
                  out.entries_.begin() + entries_.size());
        return out;
    }

    RatMatrix stacked_row(std::span<const Rational> r) const {
        if (r.size() != cols_)
            throw std::invalid_argument("stacked_row: column count mismatch");
        RatMatrix out(rows_ + 1, cols_);
        std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
        std::copy(r.begin(), r.end(), out.entries_.begin() + entries_.size());
        return out;
    }

    RatMatrix select_rows(std::span<const std::size_t> idx) const {
        RatMatrix out(idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            auto src = row(idx[i]);
            std::copy(src.begin(), src.end(), out.entries_.begin() + i * cols_);
        }
        return out;
    }

    RatMatrix select_cols(std::span<const std::size_t> idx) const {
        RatMatrix out(rows_, idx.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < idx.size(); ++c)
                out(r, c) = (*this)(r, idx[c]);
        return out;
    }

    // Appends `k` zero columns.
    RatMatrix padded(std::size_t k) const {
        RatMatrix out(rows_, cols_ + k);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out(r, c) = (*this)(r, c);
        return out;
    }

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

struct RowEchelon {
    RatMatrix matrix; // same shape as the input; zero rows at the bottom
    std::size_t rank = 0;
    std::vector<std::size_t> pivots; // pivot column of each nonzero row

    // The nonzero rows only: the canonical basis of the row space.
    RatMatrix basis() const {
        std::vector<std::size_t> idx(rank);
        for (std::size_t i = 0; i < rank; ++i)
            idx[i] = i;
        return matrix.select_rows(idx);
    }
};

// Gauss-Jordan elimination to the unique reduced row echelon form.
inline RowEchelon rref(RatMatrix m) {
    RowEchelon out;
    std::size_t lead = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t piv = lead;
        while (piv < rows && m(piv, c) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != lead)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(piv, j), m(lead, j));
        const Rational inv = 1 / m(lead, c);
        for (std::size_t j = c; j < cols; ++j)
            m(lead, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead || m(i, c) == 0)
                continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                m(i, j) -= f * m(lead, j);
        }
        out.pivots.push_back(c);
        ++lead;
    }
    out.rank = lead;
    out.matrix = std::move(m);
    return out;
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

// True iff `v` lies in the row space of the echelon form `e`.
inline bool in_row_space(const RowEchelon& e, std::span<const Rational> v) {
    std::vector<Rational> rem(v.begin(), v.end());
    for (std::size_t i = 0; i < e.rank; ++i) {
        const std::size_t pc = e.pivots[i];
        if (rem[pc] == 0)
            continue;
        const Rational f = rem[pc];
        auto r = e.matrix.row(i);
        for (std::size_t j = pc; j < rem.size(); ++j)
            rem[j] -= f * r[j];
    }
    return std::all_of(rem.begin(), rem.end(), [](const Rational& x) { return x == 0; });
}

// True iff row-space(b) is contained in row-space(a).
inline bool span_contains(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("span_contains: column count mismatch (" +
                                    std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.cols()) + ")");
    return rank(a) == rank(a.stacked(b));
}

// Hashable exact key for a row space: nonzero RREF rows, row-major, reduced
// fractions. Equal keys iff equal row spaces (for a fixed column count).
inline std::string canonical_key(const RatMatrix& m) {
    const RowEchelon e = rref(m);
    std::string key = std::to_string(m.cols()) + ":";
    for (std::size_t i = 0; i < e.rank; ++i) {
        if (i)
            key += ';';
        auto r = e.matrix.row(i);
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j)
                key += ',';
            key += to_string(r[j]);
        }
    }
    return key;
}

} // namespace hyparr
