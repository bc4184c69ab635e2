#include "plslab/core/rat.hpp"

#include "plslab/core/error.hpp"

#include <boost/multiprecision/integer.hpp>

namespace plslab {

Rat::Rat(Int value) : num_(std::move(value)) {}

Rat::Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) {
        throw UndefinedObjectiveError("rational with zero denominator");
    }
    normalize();
}

void Rat::normalize()
{
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_ == 1) {
        return;
    }
    Int g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rat Rat::operator-() const
{
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
}

Rat& Rat::operator+=(const Rat& rhs)
{
    if (den_ == 1 && rhs.den_ == 1) {
        num_ += rhs.num_;
        return *this;
    }
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rat& Rat::operator-=(const Rat& rhs)
{
    return *this += -rhs;
}

Rat& Rat::operator*=(const Rat& rhs)
{
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rat& Rat::operator/=(const Rat& rhs)
{
    if (rhs.is_zero()) {
        throw UndefinedObjectiveError("division by zero rational");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b)
{
    const Int lhs = a.num_ * b.den_;
    const Int rhs = b.num_ * a.den_;
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    if (lhs > rhs) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Rat::to_string() const
{
    return num_.str() + "/" + den_.str();
}

Rat Rat::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(parse_int(text));
    }
    Int den = parse_int(text.substr(slash + 1));
    if (den.is_zero()) {
        throw ValidationError("rational with zero denominator: '" + std::string(text) + "'");
    }
    return Rat(parse_int(text.substr(0, slash)), std::move(den));
}

} // namespace plslab
