#include "arrcensus/lp.hpp"

#include "arrcensus/errors.hpp"

#include <algorithm>

namespace arrcensus {

namespace {

// Dense simplex tableau in equality form: tableau * z = rhs, z >= 0.
class Tableau {
public:
    Tableau(Matrix<Rational> body, RationalVector rhs, std::vector<Index> basis)
        : body_(std::move(body)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

    // Bland's rule: lowest-index improving column enters; ties in the ratio
    // test leave by lowest basic variable index. Returns false on unbounded.
    bool optimise(const RationalVector& cost, const std::vector<bool>& blocked) {
        const Index cols = body_.cols();
        while (true) {
            Index entering = -1;
            for (Index j = 0; j < cols; ++j) {
                if (blocked[static_cast<std::size_t>(j)]) continue;
                Rational reduced = cost(j);
                for (Index i = 0; i < body_.rows(); ++i) {
                    if (!body_(i, j).is_zero()) reduced -= cost(basis_[static_cast<std::size_t>(i)]) * body_(i, j);
                }
                if (reduced > 0) {
                    entering = j;
                    break;
                }
            }
            if (entering < 0) return true;

            Index leaving = -1;
            Rational best_ratio;
            for (Index i = 0; i < body_.rows(); ++i) {
                if (body_(i, entering) <= 0) continue;
                Rational ratio = rhs_(i) / body_(i, entering);
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[static_cast<std::size_t>(i)] <
                                                basis_[static_cast<std::size_t>(leaving)])) {
                    leaving = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (leaving < 0) return false;
            pivot(leaving, entering);
        }
    }

    void pivot(Index row, Index col) {
        const Rational inv = Rational(1) / body_(row, col);
        body_.row(row) *= inv;
        rhs_(row) *= inv;
        for (Index i = 0; i < body_.rows(); ++i) {
            if (i == row || body_(i, col).is_zero()) continue;
            const Rational factor = body_(i, col);
            for (Index j = 0; j < body_.cols(); ++j) {
                if (!body_(row, j).is_zero()) body_(i, j) -= factor * body_(row, j);
            }
            rhs_(i) -= factor * rhs_(row);
        }
        basis_[static_cast<std::size_t>(row)] = col;
    }

    void drop_row(Index row) {
        const Index last = body_.rows() - 1;
        if (row != last) {
            body_.row(row).swap(body_.row(last));
            std::swap(rhs_(row), rhs_(last));
            std::swap(basis_[static_cast<std::size_t>(row)], basis_[static_cast<std::size_t>(last)]);
        }
        body_.conservativeResize(last, Eigen::NoChange);
        rhs_.conservativeResize(last);
        basis_.pop_back();
    }

    Rational value(const RationalVector& cost) const {
        Rational total;
        for (Index i = 0; i < body_.rows(); ++i) total += cost(basis_[static_cast<std::size_t>(i)]) * rhs_(i);
        return total;
    }

    RationalVector solution() const {
        RationalVector z = RationalVector::Zero(body_.cols());
        for (Index i = 0; i < body_.rows(); ++i) z(basis_[static_cast<std::size_t>(i)]) = rhs_(i);
        return z;
    }

    const Matrix<Rational>& body() const { return body_; }
    const std::vector<Index>& basis() const { return basis_; }

private:
    Matrix<Rational> body_;
    RationalVector rhs_;
    std::vector<Index> basis_;
};

struct NormalRow {
    RationalVector coeffs;  // over the structural (split) columns
    bool needs_slack;       // <= row with slack basic
    bool needs_surplus;     // >= row: surplus plus artificial
    Rational rhs;
};

}  // namespace

LinearProgram::LinearProgram(Index variables)
    : variables_(variables),
      nonnegative_(static_cast<std::size_t>(variables), false),
      objective_(RationalVector::Zero(variables)) {}

void LinearProgram::add_constraint(RationalVector coeffs, Relation relation, Rational rhs) {
    if (coeffs.size() != variables_) throw ShapeError("constraint width does not match variable count");
    rows_.push_back({std::move(coeffs), relation, std::move(rhs)});
}

void LinearProgram::set_nonnegative(Index variable) { nonnegative_.at(static_cast<std::size_t>(variable)) = true; }

void LinearProgram::set_objective(RationalVector objective) {
    if (objective.size() != variables_) throw ShapeError("objective width does not match variable count");
    objective_ = std::move(objective);
}

LpResult LinearProgram::solve() const {
    // Structural columns: one per nonnegative variable, a (+, -) pair per free one.
    std::vector<Index> plus_col(static_cast<std::size_t>(variables_));
    std::vector<Index> minus_col(static_cast<std::size_t>(variables_), -1);
    Index structural = 0;
    for (Index v = 0; v < variables_; ++v) {
        plus_col[static_cast<std::size_t>(v)] = structural++;
        if (!nonnegative_[static_cast<std::size_t>(v)]) minus_col[static_cast<std::size_t>(v)] = structural++;
    }
    auto expand = [&](const RationalVector& coeffs) {
        RationalVector out = RationalVector::Zero(structural);
        for (Index v = 0; v < variables_; ++v) {
            out(plus_col[static_cast<std::size_t>(v)]) = coeffs(v);
            if (minus_col[static_cast<std::size_t>(v)] >= 0) out(minus_col[static_cast<std::size_t>(v)]) = -coeffs(v);
        }
        return out;
    };

    // Normalise to rhs >= 0. Homogeneous equalities split into two <= rows so
    // that the all-slack basis is feasible whenever no rhs is positive on a >=.
    std::vector<NormalRow> normal;
    auto push_le = [&](RationalVector c, Rational rhs) {
        normal.push_back({std::move(c), true, false, std::move(rhs)});
    };
    for (const auto& row : rows_) {
        RationalVector c = expand(row.coeffs);
        Rational rhs = row.rhs;
        Relation rel = row.relation;
        if (rhs < 0) {
            c = -c;
            rhs = -rhs;
            if (rel == Relation::LessEqual) rel = Relation::GreaterEqual;
            else if (rel == Relation::GreaterEqual) rel = Relation::LessEqual;
        }
        if (rel == Relation::LessEqual) {
            push_le(std::move(c), std::move(rhs));
        } else if (rhs.is_zero()) {
            if (rel == Relation::Equal) push_le(c, Rational(0));
            push_le(-c, Rational(0));
        } else if (rel == Relation::GreaterEqual) {
            normal.push_back({std::move(c), false, true, std::move(rhs)});
        } else {
            normal.push_back({std::move(c), false, false, std::move(rhs)});
        }
    }

    const auto rows = static_cast<Index>(normal.size());
    Index slack_count = 0;
    Index artificial_count = 0;
    for (const auto& r : normal) {
        if (r.needs_slack || r.needs_surplus) ++slack_count;
        if (!r.needs_slack) ++artificial_count;
    }
    const Index total = structural + slack_count + artificial_count;
    Matrix<Rational> body = Matrix<Rational>::Zero(rows, total);
    RationalVector rhs(rows);
    std::vector<Index> basis(static_cast<std::size_t>(rows));
    std::vector<bool> is_artificial(static_cast<std::size_t>(total), false);
    Index next_slack = structural;
    Index next_artificial = structural + slack_count;
    for (Index i = 0; i < rows; ++i) {
        const auto& r = normal[static_cast<std::size_t>(i)];
        body.row(i).head(structural) = r.coeffs.transpose();
        rhs(i) = r.rhs;
        if (r.needs_slack) {
            body(i, next_slack) = 1;
            basis[static_cast<std::size_t>(i)] = next_slack++;
        } else {
            if (r.needs_surplus) body(i, next_slack++) = -1;
            body(i, next_artificial) = 1;
            is_artificial[static_cast<std::size_t>(next_artificial)] = true;
            basis[static_cast<std::size_t>(i)] = next_artificial++;
        }
    }

    Tableau tableau(std::move(body), std::move(rhs), std::move(basis));
    std::vector<bool> blocked(static_cast<std::size_t>(total), false);

    if (artificial_count > 0) {
        RationalVector phase_one = RationalVector::Zero(total);
        for (Index j = 0; j < total; ++j) {
            if (is_artificial[static_cast<std::size_t>(j)]) phase_one(j) = -1;
        }
        tableau.optimise(phase_one, blocked);
        if (tableau.value(phase_one) < 0) return {LpStatus::Infeasible, {}, {}};

        // Drive zero-level artificials out of the basis; drop redundant rows.
        for (Index i = tableau.body().rows() - 1; i >= 0; --i) {
            if (!is_artificial[static_cast<std::size_t>(tableau.basis()[static_cast<std::size_t>(i)])]) continue;
            Index replacement = -1;
            for (Index j = 0; j < total; ++j) {
                if (!is_artificial[static_cast<std::size_t>(j)] && !tableau.body()(i, j).is_zero()) {
                    replacement = j;
                    break;
                }
            }
            if (replacement >= 0) tableau.pivot(i, replacement);
            else tableau.drop_row(i);
        }
        for (Index j = 0; j < total; ++j) blocked[static_cast<std::size_t>(j)] = is_artificial[static_cast<std::size_t>(j)];
    }

    RationalVector cost = RationalVector::Zero(total);
    cost.head(structural) = expand(objective_);
    if (!tableau.optimise(cost, blocked)) return {LpStatus::Unbounded, {}, {}};

    const RationalVector z = tableau.solution();
    RationalVector x(variables_);
    for (Index v = 0; v < variables_; ++v) {
        x(v) = z(plus_col[static_cast<std::size_t>(v)]);
        if (minus_col[static_cast<std::size_t>(v)] >= 0) x(v) -= z(minus_col[static_cast<std::size_t>(v)]);
    }
    return {LpStatus::Optimal, std::move(x), tableau.value(cost)};
}

std::optional<RationalVector> find_point_with_signs(const RationalMatrix& a, std::span<const Sign> signs) {
    if (static_cast<Index>(signs.size()) != a.rows()) {
        throw LengthMismatchError("sign vector length " + std::to_string(signs.size()) + " does not match " +
                                  std::to_string(a.rows()) + " rows");
    }
    const Index d = a.cols();
    // Variables: x (free) and the common slack t >= 0 in the last slot.
    LinearProgram lp(d + 1);
    lp.set_nonnegative(d);
    for (Index i = 0; i < a.rows(); ++i) {
        const Sign s = signs[static_cast<std::size_t>(i)];
        RationalVector row = RationalVector::Zero(d + 1);
        if (s == Sign::Zero) {
            row.head(d) = a.row(i).transpose();
            lp.add_constraint(std::move(row), Relation::Equal, Rational(0));
        } else {
            row.head(d) = (s == Sign::Positive) ? RationalVector(a.row(i).transpose())
                                                : RationalVector(-a.row(i).transpose());
            row(d) = -1;
            lp.add_constraint(std::move(row), Relation::GreaterEqual, Rational(0));
        }
    }
    RationalVector cap = RationalVector::Zero(d + 1);
    cap(d) = 1;
    lp.add_constraint(cap, Relation::LessEqual, Rational(1));
    lp.set_objective(cap);

    // The origin is always feasible and t is capped, so the LP is never
    // infeasible or unbounded; strict feasibility is exactly t* > 0.
    const LpResult result = lp.solve();
    if (result.status != LpStatus::Optimal) return std::nullopt;
    if (result.objective.is_zero()) return std::nullopt;
    return RationalVector(result.point.head(d));
}

std::optional<RationalVector> find_interior_point(const RationalMatrix& a, std::span<const Sign> signs) {
    for (Sign s : signs) {
        if (s == Sign::Zero) throw ShapeError("find_interior_point takes strict signs only");
    }
    return find_point_with_signs(a, signs);
}

}  // namespace arrcensus
