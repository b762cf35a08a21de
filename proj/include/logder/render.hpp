#ifndef LOGDER_RENDER_HPP
#define LOGDER_RENDER_HPP

#include <string>

#include "logder/primefield.hpp"
#include "logder/rat.hpp"

namespace logder {

// How a coefficient renders inside a larger term ("coeff*var^k").
struct CoeffRepr {
    bool negative = false;  // pull the sign into the separator
    bool is_unit = false;   // magnitude 1: omit the "1*" prefix
    std::string body;       // magnitude, safe to follow with "*..."
};

inline CoeffRepr coeff_repr(const Rat& c) {
    CoeffRepr r;
    r.negative = c.is_negative();
    Rat mag = r.negative ? -c : c;
    r.is_unit = mag.is_one();
    r.body = mag.str();
    return r;
}

inline CoeffRepr coeff_repr(const PrimeField& c) {
    CoeffRepr r;
    r.is_unit = c.is_one();
    r.body = c.str();
    return r;
}

}  // namespace logder

#endif
