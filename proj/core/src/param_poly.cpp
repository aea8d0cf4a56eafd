#include "ihg/param_poly.hpp"

#include <sstream>

#include "ihg/pochhammer.hpp"

namespace ihg {

ParamPoly::ParamPoly(Rational c)
{
    if (c.numerator() != 0) {
        terms_.emplace(Exponents{}, c);
    }
}

ParamPoly ParamPoly::symbol(int nsym, int index)
{
    if (index < 0 || index >= nsym) {
        throw DomainError("ParamPoly::symbol: index out of range");
    }
    ParamPoly p;
    p.nsym_ = nsym;
    Exponents e(static_cast<std::size_t>(nsym), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

void ParamPoly::promote(int nsym)
{
    if (nsym == nsym_) {
        return;
    }
    if (nsym_ != 0) {
        throw DomainError("ParamPoly: mixing polynomials over different symbol sets");
    }
    std::map<Exponents, Rational> t;
    for (auto &[e, c] : terms_) {
        t.emplace(Exponents(static_cast<std::size_t>(nsym), 0), c);
    }
    terms_ = std::move(t);
    nsym_ = nsym;
}

void ParamPoly::addTerm(Exponents e, const Rational &c)
{
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
        it->second += c;
    }
    if (it->second.numerator() == 0) {
        terms_.erase(it);
    }
}

ParamPoly &ParamPoly::operator+=(const ParamPoly &o)
{
    const int ns = std::max(nsym_, o.nsym_);
    promote(ns);
    ParamPoly rhs = o;
    rhs.promote(ns);
    for (const auto &[e, c] : rhs.terms_) {
        addTerm(e, c);
    }
    return *this;
}

ParamPoly &ParamPoly::operator-=(const ParamPoly &o)
{
    return *this += -o;
}

ParamPoly &ParamPoly::operator*=(const ParamPoly &o)
{
    const int ns = std::max(nsym_, o.nsym_);
    promote(ns);
    ParamPoly rhs = o;
    rhs.promote(ns);
    ParamPoly r;
    r.nsym_ = ns;
    for (const auto &[e1, c1] : terms_) {
        for (const auto &[e2, c2] : rhs.terms_) {
            Exponents e = e1;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] += e2[i];
            }
            r.addTerm(std::move(e), c1 * c2);
        }
    }
    *this = std::move(r);
    return *this;
}

bool operator==(const ParamPoly &a, const ParamPoly &b)
{
    return (a - b).isZero();
}

Complex ParamPoly::substitute(std::span<const Complex> values) const
{
    if (nsym_ != 0 && static_cast<int>(values.size()) != nsym_) {
        throw DomainError("ParamPoly::substitute: expected " + std::to_string(nsym_) + " values");
    }
    Complex sum{};
    for (const auto &[e, c] : terms_) {
        Complex t(static_cast<double>(c.numerator()) / static_cast<double>(c.denominator()), 0.0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) {
                t *= intPow(values[i], e[i]);
            }
        }
        sum += t;
    }
    return sum;
}

std::string ParamPoly::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[e, c] = *it;
        os << (first ? "" : " + ") << c;
        first = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (static_cast<int>(i) + 1 == nsym_) {
                os << "*d";
            } else {
                os << "*a" << i + 1;
            }
            if (e[i] > 1) {
                os << '^' << e[i];
            }
        }
    }
    return os.str();
}

} // namespace ihg
