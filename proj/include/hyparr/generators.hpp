#pragma once

// Builtin arrangements.

#include <hyparr/errors.hpp>
#include <hyparr/lattice.hpp>

#include <string>
#include <vector>

namespace hyparr::builtin {

namespace detail {
inline void require(bool ok, const std::string& msg) {
    if (!ok)
        throw InputError(msg);
}
} // namespace detail

// The n+1 coordinate hyperplanes of P^n.
inline Arrangement boolean(std::size_t n) {
    detail::require(n >= 1, "boolean: n must be >= 1");
    RatMatrix m(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        m(i, i) = 1;
    return Arrangement(n, std::move(m));
}

// d hyperplanes on the moment curve: row i = (1, i, i^2, ..., i^n), i = 1..d.
// Any n+1 rows form a nonsingular Vandermonde matrix, so the arrangement has
// normal crossings.
inline Arrangement generic(std::size_t d, std::size_t n) {
    detail::require(d >= 1, "generic: d must be >= 1");
    detail::require(n >= 1, "generic: n must be >= 1");
    RatMatrix m(d, n + 1);
    for (std::size_t i = 0; i < d; ++i) {
        Integer pw = 1;
        for (std::size_t j = 0; j <= n; ++j, pw *= (i + 1))
            m(i, j) = Rational(pw);
    }
    return Arrangement(n, std::move(m));
}

// d hyperplanes x_0 + i x_1 (i = 0..d-1) through the codimension-2 subspace
// x_0 = x_1 = 0.
inline Arrangement pencil(std::size_t d, std::size_t n) {
    detail::require(d >= 1, "pencil: d must be >= 1");
    detail::require(n >= 1, "pencil: n must be >= 1");
    RatMatrix m(d, n + 1);
    for (std::size_t i = 0; i < d; ++i) {
        m(i, 0) = 1;
        m(i, 1) = static_cast<long long>(i);
    }
    return Arrangement(n, std::move(m));
}

// The nine lines x0 x1 x2 (x0-x1)(x0-x2)(x1-x2)(x0+x1)(x0+x2)(x1+x2) = 0 in
// P^2: a free arrangement with exponents 1, 3, 5.
inline Arrangement counterexample() {
    return Arrangement(2, RatMatrix{{1, 0, 0},
                                    {0, 1, 0},
                                    {0, 0, 1},
                                    {1, -1, 0},
                                    {1, 0, -1},
                                    {0, 1, -1},
                                    {1, 1, 0},
                                    {1, 0, 1},
                                    {0, 1, 1}});
}

inline const std::vector<std::string>& names() {
    static const std::vector<std::string> n{"boolean", "generic", "pencil", "counterexample"};
    return n;
}

// Dispatch by name; params are boolean(n), generic(d, n), pencil(d, n),
// counterexample().
inline Arrangement generate(const std::string& name, const std::vector<std::size_t>& params) {
    auto expect = [&](std::size_t k, const char* sig) {
        detail::require(params.size() == k, name + " takes parameters " + sig + ", got " +
                                                std::to_string(params.size()));
    };
    if (name == "boolean") {
        expect(1, "(n)");
        return boolean(params[0]);
    }
    if (name == "generic") {
        expect(2, "(d, n)");
        return generic(params[0], params[1]);
    }
    if (name == "pencil") {
        expect(2, "(d, n)");
        return pencil(params[0], params[1]);
    }
    if (name == "counterexample") {
        expect(0, "()");
        return counterexample();
    }
    throw InputError("unknown builtin '" + name + "'");
}

} // namespace hyparr::builtin
