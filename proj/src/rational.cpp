#include "descent_forge/rational.hpp"

namespace descent_forge {

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
    } else {
        Int g = gcd(num_, den_);
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
}

std::string Rational::str() const {
    return num_.get_str() + "/" + den_.get_str();
}

}  // namespace descent_forge
