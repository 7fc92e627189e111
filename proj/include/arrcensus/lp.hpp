#pragma once

// Exact two-phase simplex over rationals with Bland's anti-cycling rule,
// plus the strict sign-feasibility query built on it.

#include "arrcensus/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace arrcensus {

enum class Sign : signed char { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_from(int s) { return s > 0 ? Sign::Positive : (s < 0 ? Sign::Negative : Sign::Zero); }
inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline char sign_char(Sign s) { return s == Sign::Positive ? '+' : (s == Sign::Negative ? '-' : '0'); }

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    RationalVector point;   // meaningful when status == Optimal
    Rational objective;
};

/// maximize objective . x  subject to  rows,  x free unless marked nonnegative.
class LinearProgram {
public:
    explicit LinearProgram(Eigen::Index variables);

    void add_constraint(RationalVector coeffs, Relation relation, Rational rhs);
    void set_nonnegative(Eigen::Index variable);
    void set_objective(RationalVector objective);

    Eigen::Index variables() const { return variables_; }

    LpResult solve() const;

private:
    struct Row {
        RationalVector coeffs;
        Relation relation;
        Rational rhs;
    };

    Eigen::Index variables_;
    std::vector<bool> nonnegative_;
    RationalVector objective_;
    std::vector<Row> rows_;
};

/// Returns x with sign(A.row(i) . x) == signs[i] for every row, or nullopt.
/// Strict rows are solved as signs[i] * A.row(i) . x >= 1 (cones are scale
/// invariant); Zero entries become equalities. Deterministic for fixed input.
std::optional<RationalVector> find_point_with_signs(const RationalMatrix& a, std::span<const Sign> signs);

/// Strict-only variant; every entry of `signs` must be Positive or Negative.
std::optional<RationalVector> find_interior_point(const RationalMatrix& a, std::span<const Sign> signs);

}  // namespace arrcensus
