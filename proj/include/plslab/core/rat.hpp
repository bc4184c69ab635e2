#pragma once

#include "plslab/core/int.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace plslab {

/// Exact rational number, always held in lowest terms with a positive denominator.
///
/// Ordering is decided by cross-multiplication; nothing here ever touches floating point.
class Rat {
public:
    Rat() = default;
    Rat(Int value); // NOLINT(google-explicit-constructor): integers embed into rationals
    Rat(long long value) : num_(value) {} // NOLINT(google-explicit-constructor)
    Rat(int value) : num_(value) {}       // NOLINT(google-explicit-constructor)
    Rat(Int num, Int den);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }

    Rat operator-() const;
    Rat& operator+=(const Rat& rhs);
    Rat& operator-=(const Rat& rhs);
    Rat& operator*=(const Rat& rhs);
    Rat& operator/=(const Rat& rhs);

    friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
    friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
    friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
    friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

    /// Canonical "num/den" rendering, e.g. "3/2", "-4/1".
    std::string to_string() const;

    /// Accepts "num/den" or a bare integer.
    static Rat parse(std::string_view text);

private:
    void normalize();

    Int num_{0};
    Int den_{1};
};

} // namespace plslab
