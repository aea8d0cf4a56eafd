#pragma once

#include <sstream>
#include <vector>

namespace ihg {

namespace detail {

// C(b, r) * c! / (c - r)!: coefficient of x^{c-r} d^{b-r} in d^b x^c.
inline std::int64_t leibnizCoefficient(int b, int c, int r)
{
    std::int64_t binom = 1;
    for (int i = 0; i < r; ++i) {
        binom = binom * (b - i) / (i + 1);
    }
    std::int64_t falling = 1;
    for (int i = 0; i < r; ++i) {
        falling *= c - i;
    }
    return binom * falling;
}

} // namespace detail

template <class C>
BasicWeylOperator<C> BasicWeylOperator<C>::scalar(int n, const C &c)
{
    BasicWeylOperator r(n);
    r.addTerm({ExponentOffset(n), ExponentOffset(n)}, c);
    return r;
}

template <class C>
BasicWeylOperator<C> BasicWeylOperator<C>::x(int n, int i, int j)
{
    if (i < 0 || i > 1 || j < 0 || j >= n) {
        throw DomainError("WeylOperator::x: index out of range");
    }
    BasicWeylOperator r(n);
    r.addTerm({ExponentOffset::unit(n, i, j), ExponentOffset(n)}, C(1));
    return r;
}

template <class C>
BasicWeylOperator<C> BasicWeylOperator<C>::d(int n, int i, int j)
{
    if (i < 0 || i > 1 || j < 0 || j >= n) {
        throw DomainError("WeylOperator::d: index out of range");
    }
    BasicWeylOperator r(n);
    r.addTerm({ExponentOffset(n), ExponentOffset::unit(n, i, j)}, C(1));
    return r;
}

template <class C>
void BasicWeylOperator<C>::addTerm(const WeylMonomial &m, const C &c)
{
    if (coeffIsZero(c)) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (coeffIsZero(it->second)) {
            terms_.erase(it);
        }
    }
}

template <class C>
int BasicWeylOperator<C>::derivativeDegree() const
{
    int deg = 0;
    for (const auto &[m, c] : terms_) {
        deg = std::max(deg, m.d.absSum());
    }
    return deg;
}

template <class C>
BasicWeylOperator<C> &BasicWeylOperator<C>::operator+=(const BasicWeylOperator &o)
{
    checkSame(o);
    for (const auto &[m, c] : o.terms_) {
        addTerm(m, c);
    }
    return *this;
}

template <class C>
BasicWeylOperator<C> &BasicWeylOperator<C>::operator-=(const BasicWeylOperator &o)
{
    checkSame(o);
    for (const auto &[m, c] : o.terms_) {
        addTerm(m, C(-1) * c);
    }
    return *this;
}

template <class C>
BasicWeylOperator<C> BasicWeylOperator<C>::multiply(const BasicWeylOperator &p, const BasicWeylOperator &q)
{
    p.checkSame(q);
    const int n = p.n_;
    BasicWeylOperator r(n);
    // (x^a d^b)(x^c d^e) = x^a (d^b x^c) d^e, expanded variable by variable.
    struct Partial {
        ExponentOffset x, d;
        std::int64_t coeff;
    };
    for (const auto &[mp, cp] : p.terms_) {
        for (const auto &[mq, cq] : q.terms_) {
            std::vector<Partial> acc{{mp.x, mq.d, 1}};
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < n; ++j) {
                    const int b = mp.d(i, j);
                    const int c = mq.x(i, j);
                    std::vector<Partial> next;
                    for (const Partial &part : acc) {
                        for (int rr = 0; rr <= std::min(b, c); ++rr) {
                            Partial np = part;
                            Mat2xN<int> xm = np.x.matrix();
                            Mat2xN<int> dm = np.d.matrix();
                            xm(i, j) += c - rr;
                            dm(i, j) += b - rr;
                            np.x = ExponentOffset(xm);
                            np.d = ExponentOffset(dm);
                            np.coeff *= detail::leibnizCoefficient(b, c, rr);
                            next.push_back(std::move(np));
                        }
                    }
                    acc = std::move(next);
                }
            }
            const C pq = cp * cq;
            for (const Partial &part : acc) {
                r.addTerm({part.x, part.d}, C(part.coeff) * pq);
            }
        }
    }
    return r;
}

template <class C>
std::string BasicWeylOperator<C>::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        os << (first ? "" : " + ") << '(' << coefficientString(c) << ')';
        first = false;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < n_; ++j) {
                if (m.x(i, j) > 0) {
                    os << "*x" << i + 1 << j + 1 << (m.x(i, j) > 1 ? "^" + std::to_string(m.x(i, j)) : "");
                }
            }
        }
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < n_; ++j) {
                if (m.d(i, j) > 0) {
                    os << "*d" << i + 1 << j + 1 << (m.d(i, j) > 1 ? "^" + std::to_string(m.d(i, j)) : "");
                }
            }
        }
    }
    return os.str();
}

} // namespace ihg
