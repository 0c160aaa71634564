#pragma once

#include <hyparr/generators.hpp>
#include <hyparr/lattice.hpp>

namespace fixture {

// Three concurrent lines x, y, x+y plus the transversal z in P^2.
inline hyparr::Arrangement four_lines() {
    return hyparr::Arrangement(2, hyparr::RatMatrix{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
}

// xyz = 0 in P^3.
inline hyparr::Arrangement xyz() {
    return hyparr::Arrangement(3, hyparr::RatMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
}

inline hyparr::Arrangement single(std::size_t n) {
    hyparr::RatMatrix m(1, n + 1);
    m(0, 0) = 1;
    return hyparr::Arrangement(n, std::move(m));
}

} // namespace fixture
