#include "ulrich/integer.hpp"

#include <limits>
#include <stdexcept>

namespace ulrich {

Integer isqrt(const Integer& v) {
    if (v < 0) throw std::domain_error("isqrt of a negative integer");
    if (v < 2) return v;
    Integer r = boost::multiprecision::sqrt(v);
    // guard against any off-by-one in the library routine
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

bool is_square(const Integer& v) {
    if (v < 0) return false;
    Integer r = isqrt(v);
    return r * r == v;
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("division by zero");
    Integer q = a / b;
    Integer r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

bool ge_scaled_sqrt(const Integer& a, const Integer& c, const Integer& s) {
    if (c < 0 || s < 0) throw std::domain_error("ge_scaled_sqrt expects c, s >= 0");
    if (a < 0) return false;
    return a * a >= c * c * s;
}

std::int64_t to_int64(const Integer& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("integer " + v.str() + " does not fit in 64 bits");
    }
    return v.convert_to<std::int64_t>();
}

Integer binomial(const Integer& n, const Integer& k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer kk = k > n - k ? n - k : k;
    Integer result = 1;
    for (Integer i = 1; i <= kk; ++i) {
        result = result * (n - kk + i) / i;
    }
    return result;
}

}  // namespace ulrich
