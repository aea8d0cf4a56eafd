#include "ihg/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace ihg {

namespace {

// Kronrod abscissae (descending) and weights; Gauss weights for the odd entries.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
    double lo, hi;
    Complex value;
    double error;
    bool operator<(const Piece &o) const { return error < o.error; }
};

template <class G>
Piece gk15(const G &g, double lo, double hi)
{
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const Complex fc = g(c);
    Complex kron = fc * kWgk[7];
    Complex gauss = fc * kWg[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[static_cast<std::size_t>(i)];
        const Complex s = g(c - dx) + g(c + dx);
        kron += s * kWgk[static_cast<std::size_t>(i)];
        if (i % 2 == 1) {
            gauss += s * kWg[static_cast<std::size_t>(i / 2)];
        }
    }
    kron *= h;
    gauss *= h;
    return {lo, hi, kron, std::abs(kron - gauss)};
}

} // namespace

QuadratureResult integrateSegment(const std::function<Complex(Complex)> &f, Complex a, Complex b,
                                  const QuadratureOptions &opts)
{
    QuadratureResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    const Complex span = b - a;
    // u in [0, 1] after optional endpoint grading; dt = span * du.
    auto g = [&](double v) -> Complex {
        double u = v;
        double jac = 1.0;
        if (opts.gradeStart && opts.gradeEnd) {
            // symmetric grading on both ends: u = v^4 on [0, 1/2] mirrored
            if (v < 0.5) {
                const double w = 2.0 * v;
                u = 0.5 * w * w * w * w;
                jac = 4.0 * w * w * w;
            } else {
                const double w = 2.0 * (1.0 - v);
                u = 1.0 - 0.5 * w * w * w * w;
                jac = 4.0 * w * w * w;
            }
        } else if (opts.gradeStart) {
            u = v * v * v * v;
            jac = 4.0 * v * v * v;
        } else if (opts.gradeEnd) {
            const double w = 1.0 - v;
            u = 1.0 - w * w * w * w;
            jac = 4.0 * w * w * w;
        }
        if (jac == 0.0) {
            return {};
        }
        return f(a + span * u) * span * jac;
    };

    std::priority_queue<Piece> heap;
    Complex total{};
    double err = 0.0;
    {
        Piece p = gk15(g, 0.0, 1.0);
        total = p.value;
        err = p.error;
        heap.push(p);
    }
    while (err > opts.absTol && static_cast<int>(heap.size()) < opts.maxIntervals) {
        Piece worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            heap.push(worst);
            break;
        }
        Piece left = gk15(g, worst.lo, mid);
        Piece right = gk15(g, mid, worst.hi);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum in a fixed order to drop accumulated update error.
    std::vector<Piece> pieces;
    pieces.reserve(heap.size());
    while (!heap.empty()) {
        pieces.push_back(heap.top());
        heap.pop();
    }
    std::sort(pieces.begin(), pieces.end(), [](const Piece &x, const Piece &y) { return x.lo < y.lo; });
    total = {};
    err = 0.0;
    for (const Piece &p : pieces) {
        total += p.value;
        err += p.error;
    }
    res.value = total;
    res.errorEstimate = err;
    res.intervals = static_cast<int>(pieces.size());
    res.converged = err <= opts.absTol;
    return res;
}

} // namespace ihg
