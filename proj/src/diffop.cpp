#include "commop/diffop.hpp"

namespace commop {

XOp substitute_eps(const XOp& a, const Rational& eps) {
    return a.map_coefficients([&](const XLaurent& c) { return c.substitute_eps(eps); });
}

SeriesOp to_series_op(const XOp& a) {
    return a.map_coefficients([](const XLaurent& c) { return ZSeries(c); });
}

}  // namespace commop
