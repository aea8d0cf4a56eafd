#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ihg/matrix.hpp"

namespace ihg::cli {

using Json = nlohmann::ordered_json;

/// Bad user input; maps to exit status 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Accepts [re, im] or a plain number. NaN and infinities are rejected.
Complex complexFromJson(const Json &j, const std::string &what);
Json complexToJson(Complex z);

std::vector<Complex> complexVectorFromJson(const Json &j, const std::string &what);
Json complexVectorToJson(const std::vector<Complex> &v);

/// [[x11, ..., x1n], [x21, ..., x2n]]
Point pointFromJson(const Json &j, int n, const std::string &what);
Json pointToJson(const Point &x);

/// One point per line: 2n real columns (x11..x1n, x21..x2n) or 4n columns of re,im
/// pairs in the same order. Lines starting with '#' and a non-numeric header are skipped.
std::vector<Point> pointsFromCsv(const std::string &path, int n);

/// 1-based comma separated permutation "2,1,3" -> 0-based vector.
std::vector<int> parsePermutation(const std::string &s, int n);

std::string formatDouble(double v);

} // namespace ihg::cli
