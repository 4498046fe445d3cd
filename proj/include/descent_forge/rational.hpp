#pragma once

#include "descent_forge/int_ops.hpp"

namespace descent_forge {

/// Fraction kept in lowest terms with a positive denominator; reduction
/// happens at construction.
class Rational {
public:
    Rational(Int num, Int den);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    /// "num/den", e.g. "-2/1".
    std::string str() const;

private:
    Int num_;
    Int den_;
};

}  // namespace descent_forge
