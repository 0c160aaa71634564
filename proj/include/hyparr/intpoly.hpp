#pragma once

#include <hyparr/exactlin.hpp>

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace hyparr {

// Dense univariate polynomial with arbitrary-precision integer coefficients,
// coefficient index = degree. Never stores trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long long> coeffs) {
        for (long long v : coeffs)
            c_.emplace_back(v);
        trim();
    }

    static IntPoly monomial(std::size_t k, const Integer& coef = 1) {
        std::vector<Integer> c(k + 1);
        c[k] = coef;
        return IntPoly(std::move(c));
    }

    // (t + a)^k
    static IntPoly binomial_power(const Integer& a, std::size_t k) {
        IntPoly out{1};
        const IntPoly lin(std::vector<Integer>{a, 1});
        for (std::size_t i = 0; i < k; ++i)
            out = out * lin;
        return out;
    }

    bool is_zero() const noexcept { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<Integer>& coeffs() const noexcept { return c_; }

    Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
    const Integer& leading() const { return c_.back(); }

    // Coefficients 0..len-1, zero padded.
    std::vector<Integer> padded(std::size_t len) const {
        std::vector<Integer> out(len);
        for (std::size_t k = 0; k < std::min(len, c_.size()); ++k)
            out[k] = c_[k];
        return out;
    }

    Integer operator()(const Integer& t) const {
        Integer acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * t + *it;
        return acc;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Integer> c = a.padded(std::max(a.size(), b.size()));
        for (std::size_t k = 0; k < b.size(); ++k)
            c[k] += b.c_[k];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator-(const IntPoly& a) {
        std::vector<Integer> c = a.c_;
        for (auto& v : c)
            v = -v;
        return IntPoly(std::move(c));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Integer> c(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(c));
    }

    // p(t + a), by repeated synthetic division.
    IntPoly taylor_shift(const Integer& a) const {
        std::vector<Integer> c = c_;
        const std::size_t m = c.size();
        for (std::size_t i = 0; i + 1 < m; ++i)
            for (std::size_t j = m - 1; j > i; --j)
                c[j - 1] += a * c[j];
        return IntPoly(std::move(c));
    }

    // Division by (t - root): quotient and remainder p(root).
    std::pair<IntPoly, Integer> divide_linear(const Integer& root) const {
        if (c_.empty())
            return {IntPoly{}, Integer(0)};
        std::vector<Integer> q(c_.size() - 1);
        Integer carry = 0;
        for (std::size_t k = c_.size(); k-- > 0;) {
            carry = carry * root + c_[k];
            if (k > 0)
                q[k - 1] = carry;
        }
        return {IntPoly(std::move(q)), carry};
    }

    // Coefficients of t^k * p(-1/t) read off for fixed top degree `top`:
    // out_k = (-1)^k c_{top-k}.
    IntPoly sign_reversed(std::size_t top) const {
        std::vector<Integer> out(top + 1);
        for (std::size_t k = 0; k <= top; ++k)
            out[k] = (k % 2 ? -1 : 1) * coeff(top - k);
        return IntPoly(std::move(out));
    }

    // Drops every term of degree >= k.
    IntPoly truncated(std::size_t k) const {
        return IntPoly(std::vector<Integer>(c_.begin(), c_.begin() + std::min(k, c_.size())));
    }

    std::string to_string(const std::string& var = "t") const {
        if (c_.empty())
            return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const Integer& v = c_[k];
            if (v == 0)
                continue;
            const bool neg = v < 0;
            const Integer mag = neg ? Integer(-v) : v;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            const bool show_coef = mag != 1 || k == 0;
            if (show_coef)
                out += mag.str();
            if (k > 0) {
                if (show_coef)
                    out += "*";
                out += var;
                if (k > 1)
                    out += "^" + std::to_string(k);
            }
        }
        return out;
    }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Integer> c_;
};

} // namespace hyparr
