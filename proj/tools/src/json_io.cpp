#include "ihg_cli/json_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ihg/gkz_basis.hpp"

namespace ihg::cli {

namespace {

double finite(double v, const std::string &what)
{
    if (!std::isfinite(v)) {
        throw InputError(what + ": non-finite number");
    }
    return v;
}

bool parseDouble(const std::string &s, double &out)
{
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) {
        return false;
    }
    const char *first = s.data() + b;
    const char *last = s.data() + e + 1;
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

} // namespace

Complex complexFromJson(const Json &j, const std::string &what)
{
    if (j.is_number()) {
        return {finite(j.get<double>(), what), 0.0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {finite(j[0].get<double>(), what), finite(j[1].get<double>(), what)};
    }
    throw InputError(what + ": expected a number or [re, im]");
}

Json complexToJson(Complex z)
{
    return Json::array({z.real(), z.imag()});
}

std::vector<Complex> complexVectorFromJson(const Json &j, const std::string &what)
{
    if (!j.is_array()) {
        throw InputError(what + ": expected an array");
    }
    std::vector<Complex> v;
    for (std::size_t i = 0; i < j.size(); ++i) {
        v.push_back(complexFromJson(j[i], what + "[" + std::to_string(i) + "]"));
    }
    return v;
}

Json complexVectorToJson(const std::vector<Complex> &v)
{
    Json a = Json::array();
    for (const Complex &z : v) {
        a.push_back(complexToJson(z));
    }
    return a;
}

Point pointFromJson(const Json &j, int n, const std::string &what)
{
    if (!j.is_array() || j.size() != 2) {
        throw InputError(what + ": expected [[x11..x1n], [x21..x2n]]");
    }
    const auto r0 = complexVectorFromJson(j[0], what + "[0]");
    const auto r1 = complexVectorFromJson(j[1], what + "[1]");
    if (static_cast<int>(r0.size()) != n || static_cast<int>(r1.size()) != n) {
        throw InputError(what + ": rows must have n = " + std::to_string(n) + " entries");
    }
    return Point(r0, r1);
}

Json pointToJson(const Point &x)
{
    Json rows = Json::array();
    for (int i = 0; i < 2; ++i) {
        Json row = Json::array();
        for (int j = 0; j < x.cols(); ++j) {
            row.push_back(complexToJson(x(i, j)));
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<Point> pointsFromCsv(const std::string &path, int n)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open points file " + path);
    }
    std::vector<Point> pts;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::vector<double> vals;
        std::stringstream ss(line);
        std::string cell;
        bool numeric = true;
        while (std::getline(ss, cell, ',')) {
            double v = 0.0;
            if (!parseDouble(cell, v)) {
                numeric = false;
                break;
            }
            vals.push_back(finite(v, path + ":" + std::to_string(lineNo)));
        }
        if (!numeric) {
            if (pts.empty() && lineNo == 1) {
                continue; // header
            }
            throw InputError(path + ":" + std::to_string(lineNo) + ": non-numeric cell");
        }
        const auto un = static_cast<std::size_t>(n);
        Point x(n);
        if (vals.size() == 2 * un) {
            for (int j = 0; j < n; ++j) {
                x(0, j) = vals[static_cast<std::size_t>(j)];
                x(1, j) = vals[un + static_cast<std::size_t>(j)];
            }
        } else if (vals.size() == 4 * un) {
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < n; ++j) {
                    const std::size_t at = 2 * (static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j));
                    x(i, j) = Complex(vals[at], vals[at + 1]);
                }
            }
        } else {
            throw InputError(path + ":" + std::to_string(lineNo) + ": expected 2n or 4n columns");
        }
        pts.push_back(x);
    }
    return pts;
}

std::vector<int> parsePermutation(const std::string &s, int n)
{
    std::vector<int> perm;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        double v = 0.0;
        if (!parseDouble(cell, v) || v != std::floor(v)) {
            throw InputError("permutation: bad entry '" + cell + "'");
        }
        perm.push_back(static_cast<int>(v) - 1);
    }
    try {
        checkPermutation(perm, n);
    } catch (const DomainError &e) {
        throw InputError(std::string("permutation: ") + e.what());
    }
    return perm;
}

std::string formatDouble(double v)
{
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

} // namespace ihg::cli
