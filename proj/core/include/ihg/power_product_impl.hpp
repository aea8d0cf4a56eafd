#pragma once

#include <algorithm>

namespace ihg {

template <class C>
PowerProductSum<C> PowerProductSum<C>::boundaryFunction(int n)
{
    PowerProductSum s(n);
    s.add({C(1), 0, ExponentOffset(n), std::vector<int>(static_cast<std::size_t>(n), 0)});
    return s;
}

template <class C>
PowerProductSum<C> PowerProductSum<C>::integrand(int n)
{
    PowerProductSum s(n);
    s.add({C(1), -1, ExponentOffset(n), std::vector<int>(static_cast<std::size_t>(n), 0)});
    return s;
}

template <class C>
void PowerProductSum<C>::add(Term t)
{
    if (coeffIsZero(t.coeff)) {
        return;
    }
    if (t.monomial.cols() != n_ || static_cast<int>(t.formOffsets.size()) != n_) {
        throw DomainError("PowerProductSum: term size mismatch");
    }
    for (Term &u : terms_) {
        if (u.key() == t.key()) {
            u.coeff += t.coeff;
            if (coeffIsZero(u.coeff)) {
                u = std::move(terms_.back());
                terms_.pop_back();
            }
            return;
        }
    }
    terms_.push_back(std::move(t));
}

template <class C>
PowerProductSum<C> &PowerProductSum<C>::operator+=(const PowerProductSum &o)
{
    if (o.n_ != n_) {
        throw DomainError("PowerProductSum: size mismatch");
    }
    for (const Term &t : o.terms_) {
        add(t);
    }
    return *this;
}

template <class C>
PowerProductSum<C> &PowerProductSum<C>::operator-=(const PowerProductSum &o)
{
    return *this += o.scaled(C(-1));
}

template <class C>
PowerProductSum<C> PowerProductSum<C>::scaled(const C &c) const
{
    PowerProductSum r(n_);
    for (Term t : terms_) {
        t.coeff = t.coeff * c;
        r.add(std::move(t));
    }
    return r;
}

template <class C>
PowerProductSum<C> PowerProductSum<C>::multipliedByX(int i, int j) const
{
    PowerProductSum r(n_);
    const ExponentOffset e = ExponentOffset::unit(n_, i, j);
    for (Term t : terms_) {
        t.monomial += e;
        r.add(std::move(t));
    }
    return r;
}

template <class C>
PowerProductSum<C> PowerProductSum<C>::multipliedByT(int power) const
{
    PowerProductSum r(n_);
    for (Term t : terms_) {
        t.tOffset += power;
        r.add(std::move(t));
    }
    return r;
}

template <class C>
PowerProductSum<C> PowerProductSum<C>::partial(const PowerProductContext<C> &ctx, int i, int j) const
{
    if (i < 0 || i > 1 || j < 0 || j >= n_) {
        throw DomainError("PowerProductSum::partial: index out of range");
    }
    PowerProductSum r(n_);
    const ExponentOffset e = ExponentOffset::unit(n_, i, j);
    for (const Term &t : terms_) {
        if (const int mu = t.monomial(i, j); mu > 0) {
            Term u = t;
            u.coeff = t.coeff * C(mu);
            u.monomial -= e;
            r.add(std::move(u));
        }
        // d/dx_{ij} (x_{1j} + x_{2j} t)^{alpha_j + d_j}
        Term u = t;
        const int dj = t.formOffsets[static_cast<std::size_t>(j)];
        u.coeff = t.coeff * (ctx.alpha[static_cast<std::size_t>(j)] + C(dj));
        u.formOffsets[static_cast<std::size_t>(j)] = dj - 1;
        if (i == 1) {
            u.tOffset += 1;
        }
        r.add(std::move(u));
    }
    return r;
}

template <class C>
PowerProductSum<C> PowerProductSum<C>::normalized() const
{
    if (terms_.empty()) {
        return PowerProductSum(n_);
    }
    std::vector<int> low = terms_.front().formOffsets;
    for (const Term &t : terms_) {
        for (int k = 0; k < n_; ++k) {
            low[static_cast<std::size_t>(k)] =
                std::min(low[static_cast<std::size_t>(k)], t.formOffsets[static_cast<std::size_t>(k)]);
        }
    }
    PowerProductSum r(n_);
    for (const Term &t : terms_) {
        std::vector<Term> acc{t};
        acc.front().formOffsets = low;
        for (int k = 0; k < n_; ++k) {
            const int e = t.formOffsets[static_cast<std::size_t>(k)] - low[static_cast<std::size_t>(k)];
            if (e == 0) {
                continue;
            }
            std::vector<Term> next;
            std::int64_t binom = 1;
            for (int rr = 0; rr <= e; ++rr) {
                // (x_{1k} + x_{2k} t)^e = sum_r C(e, r) x_{1k}^{e-r} x_{2k}^r t^r
                for (const Term &a : acc) {
                    Term u = a;
                    u.coeff = a.coeff * C(binom);
                    Mat2xN<int> m = u.monomial.matrix();
                    m(0, k) += e - rr;
                    m(1, k) += rr;
                    u.monomial = ExponentOffset(m);
                    u.tOffset += rr;
                    next.push_back(std::move(u));
                }
                binom = binom * (e - rr) / (rr + 1);
            }
            acc = std::move(next);
        }
        for (Term &u : acc) {
            r.add(std::move(u));
        }
    }
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term &a, const Term &b) { return a.key() < b.key(); });
    return r;
}

template <class C>
PowerProductSum<C> applyG(const PowerProductContext<C> &ctx, const BasicWeylOperator<C> &op,
                          const PowerProductSum<C> &g)
{
    if (op.cols() != g.cols() || ctx.n != g.cols()) {
        throw DomainError("applyG: size mismatch");
    }
    const int n = g.cols();
    PowerProductSum<C> out(n);
    for (const auto &[mono, c] : op.terms()) {
        PowerProductSum<C> cur = g;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < n; ++j) {
                for (int r = 0; r < mono.d(i, j); ++r) {
                    cur = cur.partial(ctx, i, j);
                }
            }
        }
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < n; ++j) {
                for (int r = 0; r < mono.x(i, j); ++r) {
                    cur = cur.multipliedByX(i, j);
                }
            }
        }
        out += cur.scaled(c);
    }
    return out.normalized();
}

} // namespace ihg
