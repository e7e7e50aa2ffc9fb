#include "quadsurd/real.hpp"

#include <cstdio>
#include <vector>

namespace quadsurd {

std::string Real::str(unsigned digits) const {
    if (is_nan()) return "nan";
    if (!is_finite()) return sgn() > 0 ? "inf" : "-inf";
    std::vector<char> buf(digits + 32);
    // %.*Re: scientific notation, mpfr-rendered, deterministic.
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits - 1), v_);
    return std::string(buf.data());
}

}  // namespace quadsurd
