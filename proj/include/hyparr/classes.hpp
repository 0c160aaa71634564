#pragma once

// Grothendieck class, Chern-Schwartz-MacPherson classes, effectivity,
// Betti numbers and related invariants, all read off the reduced
// characteristic polynomial or the intersection lattice.

#include <hyparr/charpoly.hpp>
#include <hyparr/errors.hpp>
#include <hyparr/intpoly.hpp>
#include <hyparr/lattice.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace hyparr {

inline Integer binomial(std::size_t n, std::size_t k) {
    if (k > n)
        return 0;
    Integer r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// sum_k coeffs[k] [P^k] in the Chow group of P^n.
class ChowClass {
public:
    ChowClass() : ChowClass(0) {}
    explicit ChowClass(std::size_t n) : n_(n), c_(n + 1) {}
    ChowClass(std::size_t n, std::vector<Integer> coeffs) : n_(n), c_(std::move(coeffs)) {
        if (c_.size() != n + 1)
            throw std::invalid_argument("ChowClass needs n+1 coefficients");
    }

    // a(h) cap [P^n], using h^j cap [P^n] = [P^{n-j}] and h^j = 0 for j > n.
    static ChowClass from_h_poly(std::size_t n, const IntPoly& a) {
        ChowClass out(n);
        for (std::size_t j = 0; j <= n; ++j)
            out.c_[n - j] = a.coeff(j);
        return out;
    }

    // [P^k] -> t^k.
    static ChowClass from_t_poly(std::size_t n, const IntPoly& p) {
        if (p.degree() > static_cast<long>(n))
            throw std::invalid_argument("polynomial degree exceeds ambient dimension");
        return ChowClass(n, p.padded(n + 1));
    }

    std::size_t n() const noexcept { return n_; }
    const std::vector<Integer>& coeffs() const noexcept { return c_; }
    const Integer& operator[](std::size_t k) const { return c_[k]; }
    Integer& operator[](std::size_t k) { return c_[k]; }

    bool is_effective() const {
        return std::all_of(c_.begin(), c_.end(), [](const Integer& v) { return v >= 0; });
    }
    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Integer& v) { return v == 0; });
    }

    friend ChowClass operator+(ChowClass a, const ChowClass& b) {
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            a.c_[k] += b.c_[k];
        return a;
    }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) {
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            a.c_[k] -= b.c_[k];
        return a;
    }
    friend bool operator==(const ChowClass&, const ChowClass&) = default;

    std::string to_string() const {
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k] == 0)
                continue;
            const bool neg = c_[k] < 0;
            const Integer mag = neg ? Integer(-c_[k]) : c_[k];
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (mag != 1)
                out += mag.str();
            out += "[P^" + std::to_string(k) + "]";
        }
        return out.empty() ? "0" : out;
    }

private:
    std::size_t n_;
    std::vector<Integer> c_;
};

// c(TP^n) cap [P^n] = (1+h)^{n+1} cap [P^n].
inline ChowClass tangent_class(std::size_t n) {
    ChowClass out(n);
    for (std::size_t k = 0; k <= n; ++k)
        out[k] = binomial(n + 1, k + 1);
    return out;
}

// Class of P^{m-1} embedded linearly in P^n, i.e. (1+h)^m h^{n+1-m}.
inline ChowClass linear_subspace_csm(std::size_t n, std::size_t m) {
    ChowClass out(n);
    for (std::size_t k = 1; k <= m; ++k)
        out[k - 1] = binomial(m, k);
    return out;
}

// A polynomial in the class L of the affine line.
struct GrothClass {
    IntPoly in_L;

    // Class of the affine complement: (L - 1) * [M].
    IntPoly affine() const { return in_L * IntPoly{-1, 1}; }
    Integer evaluate(const Integer& q) const { return in_L(q); }

    friend bool operator==(const GrothClass&, const GrothClass&) = default;
};

inline GrothClass grothendieck_class(const IntPoly& chibar) { return {chibar}; }

// Expand chibar(t+1) and replace t^k by [P^k].
inline ChowClass csm_complement(const IntPoly& chibar, std::size_t n) {
    if (chibar.degree() > static_cast<long>(n))
        throw std::invalid_argument("csm_complement: deg(chibar) > n");
    return ChowClass::from_t_poly(n, chibar.taylor_shift(1));
}

// The same class as h^n chibar(1 + 1/h) cap [P^n]:
// sum_j b_j (1+h)^j h^{n-j}.
inline ChowClass csm_complement_h_form(const IntPoly& chibar, std::size_t n) {
    IntPoly acc;
    for (std::size_t j = 0; j < chibar.size(); ++j)
        acc = acc + IntPoly::binomial_power(1, j) * IntPoly::monomial(n - j, chibar.coeff(j));
    return ChowClass::from_h_poly(n, acc);
}

// (1+h)^n pibar(-h/(1+h)) cap [P^n] = sum_k b_k (-h)^k (1+h)^{n-k}.
inline ChowClass csm_complement_poincare_form(const IntPoly& pibar, std::size_t n) {
    IntPoly acc;
    for (std::size_t k = 0; k < pibar.size(); ++k) {
        const Integer sign = k % 2 ? -1 : 1;
        acc = acc + IntPoly::monomial(k, sign * pibar.coeff(k)) *
                        IntPoly::binomial_power(1, n - k);
    }
    return ChowClass::from_h_poly(n, acc);
}

// For chibar = prod (t - alpha_i): prod (1 + (1 - alpha_i) h) cap [P^n].
inline ChowClass csm_complement_from_roots(const std::vector<Integer>& roots, std::size_t n) {
    IntPoly acc{1};
    for (const auto& a : roots)
        acc = acc * IntPoly(std::vector<Integer>{1, 1 - a});
    return ChowClass::from_h_poly(n, acc);
}

// c_SM(A) = c(TP^n) cap [P^n] - c_SM(M).
inline ChowClass csm_arrangement_by_complement(const IntersectionLattice& l) {
    const IntPoly chibar = reduced_char(char_poly(l));
    return tangent_class(l.n()) - csm_complement(chibar, l.n());
}

// c_SM(A) = -sum_{x != V} mu(x) c_SM(projectivized x).
inline ChowClass csm_arrangement_by_mobius(const IntersectionLattice& l) {
    ChowClass out(l.n());
    for (std::size_t i = 1; i < l.size(); ++i) {
        const Flat& f = l.flat(i);
        const ChowClass term = linear_subspace_csm(l.n(), f.dim);
        for (std::size_t k = 0; k <= l.n(); ++k)
            out[k] -= f.mobius * term[k];
    }
    return out;
}

// Both routes; throws InternalError if they disagree.
inline ChowClass csm_arrangement(const IntersectionLattice& l) {
    ChowClass a = csm_arrangement_by_mobius(l);
    const ChowClass b = csm_arrangement_by_complement(l);
    if (a != b)
        throw InternalError("CSM class of the arrangement: Moebius sum " + a.to_string() +
                            " != complement route " + b.to_string());
    return a;
}

// -sum_{x != V} mu(x) (t+1)^{dim x}
inline IntPoly effectivity_poly(const IntersectionLattice& l) {
    std::vector<Integer> by_dim(l.n() + 2);
    for (std::size_t i = 1; i < l.size(); ++i)
        by_dim[l.flat(i).dim] -= l.flat(i).mobius;
    IntPoly acc;
    for (std::size_t m = 0; m < by_dim.size(); ++m)
        if (by_dim[m] != 0)
            acc = acc + IntPoly::binomial_power(1, m) * IntPoly::monomial(0, by_dim[m]);
    return acc;
}

inline bool is_effective(const IntPoly& eff) {
    return std::all_of(eff.coeffs().begin(), eff.coeffs().end(),
                       [](const Integer& v) { return v >= 0; });
}

// Ranks r_0..r_n.
struct BettiVector {
    std::vector<Integer> ranks;
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

namespace detail {
inline BettiVector checked_betti(std::vector<Integer> ranks, const char* what) {
    for (std::size_t k = 0; k < ranks.size(); ++k)
        if (ranks[k] < 0)
            throw NegativeBetti(std::string(what) + ": negative rank " + ranks[k].str() +
                                    " in degree " + std::to_string(k),
                                k);
    return {std::move(ranks)};
}
} // namespace detail

// Betti numbers of the projective complement: coefficients of pibar, padded to n+1.
inline BettiVector betti(const IntPoly& pibar, std::size_t n) {
    return detail::checked_betti(pibar.padded(n + 1), "betti");
}

// Betti numbers of the affine complement: coefficients of (1+t) pibar.
inline BettiVector affine_betti(const IntPoly& pibar, std::size_t n) {
    return detail::checked_betti((pibar * IntPoly{1, 1}).padded(n + 2), "affine betti");
}

// chibar(uv): univariate in the product symbol uv.
struct HodgeDeligne {
    IntPoly in_uv;
    std::string to_string() const { return in_uv.to_string("(uv)"); }
    friend bool operator==(const HodgeDeligne&, const HodgeDeligne&) = default;
};

inline HodgeDeligne hodge_deligne(const IntPoly& chibar) { return {chibar}; }

// Class of the hyperplane union in Z[SB]: 1 - chibar(0).
inline Integer stable_birational_constant(const IntPoly& chibar) { return 1 - chibar.coeff(0); }

// The same constant through the top Betti number: 1 - (-1)^n r_n.
inline Integer stable_birational_from_betti(const BettiVector& b, std::size_t n) {
    const Integer top = b.ranks.at(n);
    return 1 - (n % 2 ? -top : top);
}

// Effectivity of c_SM(A) for d generic hyperplanes in P^n.
inline bool generic_effectivity(std::size_t n, std::size_t d) {
    if (n == 1)
        return true;
    return n % 2 == 0 ? d <= n + 3 : d <= n + 4;
}

} // namespace hyparr
