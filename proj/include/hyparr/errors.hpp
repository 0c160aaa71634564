#pragma once

#include <stdexcept>
#include <string>

namespace hyparr {

// Malformed or invalid user input (bad rationals, zero rows, duplicate
// hyperplanes, bad generator parameters).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A mathematical identity that must hold failed; signals a bug upstream.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// The prime does not preserve the intersection lattice of the arrangement.
class BadPrime : public std::runtime_error {
public:
    explicit BadPrime(const std::string& what) : std::runtime_error(what) {}
};

// Point enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A vector that should hold Betti numbers has a negative entry.
class NegativeBetti : public std::domain_error {
public:
    NegativeBetti(const std::string& what, std::size_t index)
        : std::domain_error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

} // namespace hyparr
