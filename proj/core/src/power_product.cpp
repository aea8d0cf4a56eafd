#include "ihg/power_product.hpp"

namespace ihg {

PowerProductContext<ParamPoly> symbolicContext(int n)
{
    PowerProductContext<ParamPoly> ctx;
    ctx.n = n;
    for (int k = 0; k < n; ++k) {
        ctx.alpha.push_back(ParamPoly::alpha(n, k));
    }
    ctx.gamma = ParamPoly::gamma(n);
    return ctx;
}

Complex evaluate(const PowerProductContext<Complex> &ctx, const PowerProductSum<Complex> &g, Complex t,
                 const Point &x)
{
    const int n = g.cols();
    if (x.cols() != n || ctx.n != n) {
        throw DomainError("evaluate: size mismatch");
    }
    Complex sum{};
    for (const auto &term : g.terms()) {
        Complex v = term.coeff * principalPow(t, ctx.gamma + 1.0 + static_cast<double>(term.tOffset));
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < n; ++j) {
                if (term.monomial(i, j) != 0) {
                    v *= intPow(x(i, j), term.monomial(i, j));
                }
            }
        }
        for (int k = 0; k < n; ++k) {
            const Complex form = x(0, k) + x(1, k) * t;
            v *= principalPow(form, ctx.alpha[static_cast<std::size_t>(k)] +
                                        static_cast<double>(term.formOffsets[static_cast<std::size_t>(k)]));
        }
        sum += v;
    }
    return sum;
}

} // namespace ihg
