#include "ihg/weyl_operator.hpp"

#include <sstream>

namespace ihg {

NumericOperator substitute(const WeylOperator &op, std::span<const Complex> values)
{
    NumericOperator r(op.cols());
    for (const auto &[m, c] : op.terms()) {
        r.addTerm(m, c.substitute(values));
    }
    return r;
}

std::string coefficientString(const ParamPoly &c)
{
    return c.str();
}

std::string coefficientString(const Complex &c)
{
    std::ostringstream os;
    os << c.real();
    if (c.imag() != 0.0) {
        os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << 'i';
    }
    return os.str();
}

} // namespace ihg
