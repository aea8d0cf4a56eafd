#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ihg/system.hpp"
#include "ihg/weyl_operator.hpp"

namespace ihg {

/// The relations along a_{1k}, a_{2k} and the two composites along e_{n+1}.
enum class Relation { Down1k, Up1k, Down2k, Up2k, UpEn1, DownEn1 };

std::string relationName(Relation r); // "down1k", "up1k", "down2k", "up2k", "up-en1", "down-en1"
std::optional<Relation> parseRelation(const std::string &s);
const std::vector<Relation> &allRelations();
/// Second-order (composite) relations along e_{n+1}.
bool isComposite(Relation r);

/// Parameter shifts beta -> beta +- a_{1k}, beta +- a_{2k}, beta +- e_{n+1}.
enum class Shift { MinusA1k, PlusA1k, MinusA2k, PlusA2k, MinusEn1, PlusEn1 };
/// a_{1k} moves alpha_k; a_{2k} moves alpha_k and delta; e_{n+1} moves delta (gamma the other way).
SystemParams shiftedParams(const SystemParams &p, Shift s, int k = 0);

/// Shift operator of a relation with the parameters of beta substituted, built directly
/// from numbers. k is 0-based.
struct ShiftOperator {
    Relation relation = Relation::Down1k;
    int k = 0;
    NumericOperator op;
};
ShiftOperator buildShiftOperator(Relation r, int k, const SystemParams &beta);

/// The same operator from the exact weyl module (alpha and delta symbolic).
WeylOperator symbolicShiftOperator(Relation r, int n, int k);

/// S f(source) = phiCoeff f(target) + gCoeff [g(target)]_a^b with target = beta.
struct RelationSides {
    SystemParams source;
    SystemParams target;
    Complex phiCoeff;
    Complex gCoeff;
};
/// falsifyDelta replaces delta by -delta on the right-hand side of up2k and up-en1.
RelationSides relationSides(Relation r, int k, const SystemParams &beta, bool falsifyDelta = false);

enum class Representation { Integral, Series };
std::string representationName(Representation r);

struct ContiguityOptions {
    int K = 30;
    double quadTol = 1e-11;
    bool falsifyDelta = false;
};

/// Value of op applied to Phi(source) or F(source) at x. Derivatives are exact: closed
/// form on the integrand, termwise on the series.
Complex applyShift(const NumericOperator &op, Representation rep, const SystemParams &source, const Point &x,
                   const ContiguityOptions &opts = {});

struct ContiguitySample {
    Complex lhs;
    Complex rhs;
    double absGap = 0.0;
    double relGap = 0.0;
};

struct ContiguityReport {
    Relation relation = Relation::Down1k;
    int k = 0;
    Representation representation = Representation::Integral;
    std::vector<ContiguitySample> samples;
    double maxRelGap = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

/// 1e-6 for first-order relations, 1e-5 for the composites.
double contiguityThreshold(Relation r);

ContiguityReport verifyContiguity(const SystemParams &beta, const std::vector<Point> &samples, Relation r, int k,
                                  Representation rep, const ContiguityOptions &opts = {});

} // namespace ihg
