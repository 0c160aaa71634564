#pragma once

// Characteristic and Poincare polynomials of the central arrangement, their
// reductions by the trivial factor, and integer splitting of the reduced
// characteristic polynomial.

#include <hyparr/errors.hpp>
#include <hyparr/intpoly.hpp>
#include <hyparr/lattice.hpp>

#include <algorithm>
#include <optional>
#include <vector>

namespace hyparr {

// sum over flats of mu(x) t^{dim x}
inline IntPoly char_poly(const IntersectionLattice& l) {
    std::vector<Integer> c(l.n() + 2);
    for (const auto& f : l.flats())
        c[f.dim] += f.mobius;
    return IntPoly(std::move(c));
}

// chi(t) / (t - 1). A nonzero remainder means the lattice is corrupt.
inline IntPoly reduced_char(const IntPoly& chi) {
    auto [q, r] = chi.divide_linear(1);
    if (r != 0)
        throw InternalError("characteristic polynomial " + chi.to_string() +
                            " does not vanish at t = 1");
    return q;
}

// pi(t) = (-t)^{n+1} chi(-1/t) for monic chi of degree n+1.
inline IntPoly poincare(const IntPoly& chi) {
    if (chi.is_zero())
        throw InternalError("poincare: zero characteristic polynomial");
    return chi.sign_reversed(static_cast<std::size_t>(chi.degree()));
}

// pi(t) / (1 + t).
inline IntPoly reduced_poincare(const IntPoly& pi) {
    auto [q, r] = pi.divide_linear(-1);
    if (r != 0)
        throw InternalError("Poincare polynomial " + pi.to_string() +
                            " does not vanish at t = -1");
    return q;
}

struct SplitResult {
    bool split = false;
    // Integer roots of the reduced polynomial with multiplicity, descending.
    std::vector<Integer> roots;
    // roots plus the root 1 of the removed factor (t - 1), descending.
    std::vector<Integer> exponents;
    // Set when a hyperplane count was supplied: sum(exponents) == d.
    std::optional<bool> sum_matches_d;

    friend bool operator==(const SplitResult&, const SplitResult&) = default;
};

// Tries to factor a monic integer polynomial into monic linear factors over Z.
// Candidate roots are divisors of the constant term bounded by the Cauchy
// bound; t^k factors are stripped first.
inline SplitResult split_over_Z(const IntPoly& chibar,
                                std::optional<std::size_t> d = std::nullopt) {
    SplitResult out;
    if (chibar.is_zero() || chibar.leading() != 1)
        return out;

    IntPoly p = chibar;
    std::vector<Integer> roots;
    while (p.degree() > 0 && p.coeff(0) == 0) {
        p = p.divide_linear(0).first;
        roots.push_back(0);
    }

    auto abs_int = [](const Integer& v) { return v < 0 ? Integer(-v) : v; };
    Integer bound = 0;
    for (const auto& c : p.coeffs())
        bound = std::max(bound, abs_int(c));
    bound += 1;

    for (Integer r = 1; p.degree() > 0 && r <= bound; ++r) {
        const Integer c0 = abs_int(p.coeff(0));
        if (r > c0)
            break;
        if (c0 % r != 0)
            continue;
        for (const Integer& cand : {r, Integer(-r)}) {
            while (p.degree() > 0) {
                auto [q, rem] = p.divide_linear(cand);
                if (rem != 0)
                    break;
                p = std::move(q);
                roots.push_back(cand);
            }
        }
    }
    if (p.degree() > 0)
        return out;

    std::sort(roots.begin(), roots.end(), std::greater<>());
    out.split = true;
    out.roots = roots;
    out.exponents = roots;
    out.exponents.push_back(1);
    std::sort(out.exponents.begin(), out.exponents.end(), std::greater<>());
    if (d) {
        Integer s = 0;
        for (const auto& e : out.exponents)
            s += e;
        out.sum_matches_d = s == Integer(*d);
    }
    return out;
}

} // namespace hyparr
