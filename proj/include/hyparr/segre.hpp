#pragma once

// Binomial transform between the Segre coefficients sigma of the singularity
// subscheme and the reduced Poincare polynomial:
//
//   b_k = sum_{i<=k} C(k,i) (d-1)^{k-i} sigma_i
//   sigma_k = sum_{i<=k} C(k,i) (-(d-1))^{k-i} b_i
//
// where [P^n] - i_* s(S, P^n) = sum_i sigma_i h^i cap [P^n].

#include <hyparr/classes.hpp>
#include <hyparr/errors.hpp>
#include <hyparr/intpoly.hpp>

#include <vector>

namespace hyparr {

struct SigmaVector {
    std::size_t n = 0;
    std::vector<Integer> sigma; // sigma_0..sigma_n, sigma_0 = 1

    SigmaVector() = default;
    SigmaVector(std::size_t n_, std::vector<Integer> s) : n(n_), sigma(std::move(s)) {
        if (sigma.size() != n + 1)
            throw std::invalid_argument("SigmaVector needs n+1 entries");
        if (sigma[0] != 1)
            throw std::invalid_argument("SigmaVector requires sigma_0 = 1");
    }

    friend bool operator==(const SigmaVector&, const SigmaVector&) = default;
};

namespace detail {

// out_k = sum_{i<=k} C(k,i) shift^{k-i} in_i
inline std::vector<Integer> binomial_transform(const std::vector<Integer>& in,
                                               const Integer& shift) {
    std::vector<Integer> out(in.size());
    std::vector<Integer> pow{1};
    for (std::size_t k = 1; k < in.size(); ++k)
        pow.push_back(pow.back() * shift);
    for (std::size_t k = 0; k < in.size(); ++k)
        for (std::size_t i = 0; i <= k; ++i)
            out[k] += binomial(k, i) * pow[k - i] * in[i];
    return out;
}

inline void require_degree(std::size_t d) {
    if (d < 1)
        throw std::invalid_argument("Segre transform needs d >= 1");
}

} // namespace detail

inline IntPoly pi_from_sigma(const SigmaVector& s, std::size_t d) {
    detail::require_degree(d);
    return IntPoly(detail::binomial_transform(s.sigma, Integer(d) - 1));
}

inline SigmaVector sigma_from_pi(const IntPoly& pibar, std::size_t d, std::size_t n) {
    detail::require_degree(d);
    if (pibar.degree() > static_cast<long>(n))
        throw std::invalid_argument("sigma_from_pi: deg(pibar) > n");
    return SigmaVector(n, detail::binomial_transform(pibar.padded(n + 1), 1 - Integer(d)));
}

// i_* s(S, P^n) = sum_i s_i [P^i] with s_i = -sigma_{n-i}, s_n = 0.
inline ChowClass segre_pushforward(const SigmaVector& s) {
    ChowClass out(s.n);
    for (std::size_t i = 0; i < s.n; ++i)
        out[i] = -s.sigma[s.n - i];
    return out;
}

// Betti numbers of the complement from sigma; throws NegativeBetti when the
// vector cannot come from an arrangement.
inline BettiVector betti_from_sigma(const SigmaVector& s, std::size_t d) {
    detail::require_degree(d);
    return detail::checked_betti(detail::binomial_transform(s.sigma, Integer(d) - 1),
                                 "betti_from_sigma");
}

} // namespace hyparr
