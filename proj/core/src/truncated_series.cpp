#include "ihg/truncated_series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ihg/pochhammer.hpp"

namespace ihg {

std::string ExponentOffset::str() const
{
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < 2; ++i) {
        os << (i == 0 ? "[" : ",[");
        for (int j = 0; j < cols(); ++j) {
            os << (j == 0 ? "" : ",") << m_(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

TruncatedSeries::TruncatedSeries(Mat2xN<Complex> base, ExponentOffset grading, int order)
    : base_(std::move(base)), grading_(std::move(grading)), order_(order), reliable_(order)
{
    if (grading_.cols() != base_.cols()) {
        throw DomainError("TruncatedSeries: grading and base exponent differ in size");
    }
    for (int v : grading_.matrix().data()) {
        if (v != 0 && v != 1) {
            throw DomainError("TruncatedSeries: grading weights must be 0 or 1");
        }
    }
    for (const Complex &c : base_.data()) {
        if (std::isnan(c.real()) || std::isnan(c.imag())) {
            throw DomainError("TruncatedSeries: NaN in base exponent");
        }
    }
    if (order < 0) {
        throw DomainError("TruncatedSeries: negative truncation order");
    }
}

Complex TruncatedSeries::coefficient(const ExponentOffset &k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? Complex{} : it->second;
}

void TruncatedSeries::add(const ExponentOffset &k, Complex c)
{
    if (std::isnan(c.real()) || std::isnan(c.imag())) {
        throw DomainError("TruncatedSeries: NaN coefficient at offset " + k.str());
    }
    if (k.cols() != cols()) {
        throw DomainError("TruncatedSeries: offset size mismatch");
    }
    if (grade(k) > order_) {
        throw DomainError("TruncatedSeries: offset " + k.str() + " beyond truncation order");
    }
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
    }
    if (std::abs(it->second) < kDropBelow) {
        terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::emptyLike(int order, int reliable) const
{
    TruncatedSeries r(base_, grading_, std::max(order, 0));
    r.order_ = order;
    r.reliable_ = reliable;
    return r;
}

void TruncatedSeries::checkCompatible(const TruncatedSeries &o) const
{
    if (!(o.base_ == base_) || !(o.grading_ == grading_)) {
        throw DomainError("TruncatedSeries: incompatible base exponent or grading");
    }
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &o)
{
    checkCompatible(o);
    order_ = std::max(order_, o.order_);
    reliable_ = std::min(reliable_, o.reliable_);
    for (const auto &[k, c] : o.terms_) {
        add(k, c);
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &o)
{
    checkCompatible(o);
    order_ = std::max(order_, o.order_);
    reliable_ = std::min(reliable_, o.reliable_);
    for (const auto &[k, c] : o.terms_) {
        add(k, -c);
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(Complex c)
{
    if (c == Complex{}) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        it = std::abs(it->second) < kDropBelow ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

TruncatedSeries TruncatedSeries::relabelColumns(const std::vector<int> &perm) const
{
    const int n = cols();
    if (static_cast<int>(perm.size()) != n) {
        throw DomainError("relabelColumns: permutation size mismatch");
    }
    std::vector<int> inv(static_cast<std::size_t>(n), -1);
    for (int j = 0; j < n; ++j) {
        const int pj = perm[static_cast<std::size_t>(j)];
        if (pj < 0 || pj >= n || inv[static_cast<std::size_t>(pj)] != -1) {
            throw DomainError("relabelColumns: not a permutation");
        }
        inv[static_cast<std::size_t>(pj)] = j;
    }
    // result column c takes source column inv[c]
    TruncatedSeries r(permuteColumns(base_, inv), grading_.permutedColumns(inv), order_);
    r.reliable_ = reliable_;
    for (const auto &[k, c] : terms_) {
        r.terms_.emplace(k.permutedColumns(inv), c);
    }
    return r;
}

TruncatedSeries applyEuler(const TruncatedSeries &series, int i, int j)
{
    TruncatedSeries r = series.emptyLike(series.order(), series.reliableOrder());
    for (const auto &[k, c] : series.terms()) {
        r.add(k, c * (series.base()(i, j) + static_cast<double>(k(i, j))));
    }
    return r;
}

TruncatedSeries applyPartial(const TruncatedSeries &series, int i, int j)
{
    TruncatedSeries r = series.emptyLike(series.order(), series.reliableOrder() - 1);
    const ExponentOffset e = ExponentOffset::unit(series.cols(), i, j);
    for (const auto &[k, c] : series.terms()) {
        r.add(k - e, c * (series.base()(i, j) + static_cast<double>(k(i, j))));
    }
    return r;
}

TruncatedSeries multiplyX(const TruncatedSeries &series, int i, int j)
{
    const int w = series.grading()(i, j);
    TruncatedSeries r = series.emptyLike(series.order() + w, series.reliableOrder());
    const ExponentOffset e = ExponentOffset::unit(series.cols(), i, j);
    for (const auto &[k, c] : series.terms()) {
        r.add(k + e, c);
    }
    return r;
}

Complex evaluate(const TruncatedSeries &series, const Point &x)
{
    const int n = series.cols();
    if (x.cols() != n) {
        throw DomainError("evaluate: point size mismatch");
    }
    if (series.isZero()) {
        return {};
    }
    // x^{s+k} = x^s * x^k with integer k; principal branch for x^s.
    Complex basePower(1.0, 0.0);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < n; ++j) {
            basePower *= principalPow(x(i, j), series.base()(i, j));
        }
    }
    Complex sum{};
    for (const auto &[k, c] : series.terms()) {
        Complex t = c;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < n; ++j) {
                if (k(i, j) != 0) {
                    t *= intPow(x(i, j), k(i, j));
                }
            }
        }
        sum += t;
    }
    return sum * basePower;
}

} // namespace ihg
