#include "plslab/core/int.hpp"

#include "plslab/core/error.hpp"

#include <limits>

namespace plslab {

Int parse_int(std::string_view text)
{
    std::size_t pos = 0;
    if (!text.empty() && text[0] == '-') {
        pos = 1;
    }
    if (pos == text.size()) {
        throw ValidationError("malformed integer: '" + std::string(text) + "'");
    }
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw ValidationError("malformed integer: '" + std::string(text) + "'");
        }
    }
    return Int(std::string(text));
}

std::string to_string(const Int& value)
{
    return value.str();
}

Int ipow(const Int& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

bool fits_int64(const Int& value)
{
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    return value >= lo && value <= hi;
}

} // namespace plslab
