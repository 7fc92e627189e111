#include "doctest.h"

#include "arrcensus/discriminantal.hpp"
#include "arrcensus/errors.hpp"
#include "arrcensus/exact_linalg.hpp"
#include "arrcensus/lp.hpp"
#include "fixtures.hpp"

#include <vector>

using namespace arrcensus;

namespace {

Rational cofactor_determinant(const RationalMatrix& a) {
    const Index n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    Rational total = 0;
    for (Index j = 0; j < n; ++j) {
        RationalMatrix minor(n - 1, n - 1);
        for (Index r = 1; r < n; ++r) {
            Index c2 = 0;
            for (Index c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, c2++) = a(r, c);
            }
        }
        const Rational term = a(0, j) * cofactor_determinant(minor);
        total += (j % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

// Rays that can bound {x : A'x >= 0} in dimension 2 or 3.
std::vector<RationalVector> candidate_rays(const RationalMatrix& a) {
    std::vector<RationalVector> rays;
    const Index d = a.cols();
    for (Index i = 0; i < a.rows(); ++i) {
        if (d == 2) {
            RationalVector r(2);
            r << -a(i, 1), a(i, 0);
            rays.push_back(r);
            rays.push_back(-r);
            continue;
        }
        for (Index j = i + 1; j < a.rows(); ++j) {
            RationalVector r(3);
            r << a(i, 1) * a(j, 2) - a(i, 2) * a(j, 1), a(i, 2) * a(j, 0) - a(i, 0) * a(j, 2),
                a(i, 0) * a(j, 1) - a(i, 1) * a(j, 0);
            if (r.isZero()) continue;
            rays.push_back(r);
            rays.push_back(-r);
        }
    }
    return rays;
}

// For full column rank A the closed cone is pointed; if the open cone is
// nonempty the sum of all rays lying in the closed cone is interior.
bool brute_force_feasible(const RationalMatrix& a, const std::vector<Sign>& signs) {
    RationalMatrix oriented = a;
    for (Index i = 0; i < a.rows(); ++i) {
        if (signs[static_cast<std::size_t>(i)] == Sign::Negative) oriented.row(i) *= -1;
    }
    RationalVector sum = RationalVector::Zero(a.cols());
    for (const auto& r : candidate_rays(oriented)) {
        const RationalVector v = oriented * r;
        if ((v.array() >= 0).all()) sum += r;
    }
    const RationalVector v = oriented * sum;
    return (v.array() > 0).all();
}

}  // namespace

TEST_CASE("rationals are canonical and round trip as p/q") {
    CHECK(format_rational(parse_rational("6/4")) == "3/2");
    CHECK(format_rational(parse_rational("-10/5")) == "-2");
    CHECK(format_rational(parse_rational(" 7 ")) == "7");
    CHECK(format_rational(parse_rational("0/9")) == "0");
    CHECK(parse_rational("-3/6") == Rational(-1) / 2);
    CHECK_THROWS_AS(parse_rational("3/-6"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("2/"), ParseError);
    const Rational x = parse_rational("2/3") * parse_rational("9/4");
    CHECK(x.str() == "3/2");
    CHECK(parse_rational_list("0,-2,3/4").size() == 3);
}

TEST_CASE("rank on small fixed matrices") {
    CHECK(rank(RationalMatrix::Identity(3, 3)) == 3);
    CHECK(rank(RationalMatrix::Zero(4, 2)) == 0);
    RationalMatrix dup = matrix_from_rows({{1, 2, 3}, {4, 5, 6}, {1, 2, 3}});
    CHECK(rank(dup) == 2);
    CHECK(rank(RationalMatrix(0, 3)) == 0);
}

TEST_CASE("rank of the perpendicular-pairs discriminantal normals is 4") {
    const auto da = build_discriminantal(fixtures::perpendicular_pairs());
    CHECK(da.normals().rows() == 20);
    CHECK(rank(da.normals()) == 4);
    const RationalMatrix kernel = nullspace_basis(da.normals());
    CHECK(kernel.cols() == 2);
    CHECK((da.normals() * kernel).isZero());
}

TEST_CASE("rank agrees with the transpose and with the nullspace dimension") {
    fixtures::Random rnd(11);
    for (int trial = 0; trial < 200; ++trial) {
        const long rows = rnd.uniform(1, 12);
        const long cols = rnd.uniform(1, 12);
        RationalMatrix a = rnd.matrix(rows, cols, 3);
        // Plant dependencies in some trials.
        if (trial % 3 == 0 && rows > 2) a.row(rows - 1) = a.row(0) * Rational(2) - a.row(1);
        const Index r = rank(a);
        CHECK(r == rank(RationalMatrix(a.transpose())));
        const RationalMatrix kernel = nullspace_basis(a);
        CHECK(kernel.cols() == cols - r);
        CHECK((a * kernel).isZero());
        CHECK(rank(kernel) == kernel.cols());
    }
}

TEST_CASE("nullspace of zero and of full rank matrices") {
    CHECK(nullspace_basis(RationalMatrix::Zero(3, 3)).cols() == 3);
    CHECK(nullspace_basis(RationalMatrix::Identity(4, 4)).cols() == 0);
}

TEST_CASE("Bareiss determinant matches cofactor expansion") {
    fixtures::Random rnd(5);
    for (int trial = 0; trial < 150; ++trial) {
        const long n = rnd.uniform(1, 5);
        RationalMatrix a(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) a(i, j) = rnd.rational(5);
        CHECK(determinant(a) == cofactor_determinant(a));
    }
    CHECK(determinant(RationalMatrix::Identity(4, 4)) == 1);
    CHECK_THROWS_AS(determinant(RationalMatrix::Zero(2, 3)), ShapeError);
}

TEST_CASE("determinant is alternating under a row swap") {
    fixtures::Random rnd(6);
    for (int trial = 0; trial < 50; ++trial) {
        RationalMatrix a = rnd.matrix(4, 4, 6);
        RationalMatrix b = a;
        b.row(0).swap(b.row(2));
        CHECK(determinant(b) == -determinant(a));
    }
}

TEST_CASE("determinant expansion in the last column gives the concurrency functional") {
    // det [[1,0,y1],[2,3,y2],[3,2,y3]] = -5 y1 - 2 y2 + 3 y3.
    const RationalMatrix rows = matrix_from_rows({{1, 0}, {2, 3}, {3, 2}});
    std::vector<Rational> coeffs;
    for (int k = 0; k < 3; ++k) {
        RationalMatrix a(3, 3);
        a.leftCols(2) = rows;
        a.col(2).setZero();
        a(k, 2) = 1;
        coeffs.push_back(determinant(a));
    }
    CHECK(coeffs == std::vector<Rational>{-5, -2, 3});
}

TEST_CASE("interior point examples") {
    RationalMatrix one = matrix_from_rows({{1}});
    const std::vector<Sign> plus{Sign::Positive};
    auto x = find_interior_point(one, plus);
    REQUIRE(x);
    CHECK((*x)(0) > 0);

    RationalMatrix opposite = matrix_from_rows({{1}, {-1}});
    const std::vector<Sign> both{Sign::Positive, Sign::Positive};
    CHECK_FALSE(find_interior_point(opposite, both));
    const std::vector<Sign> zero{Sign::Zero};
    CHECK_THROWS_AS(find_interior_point(one, zero), ShapeError);
    CHECK_THROWS_AS(find_interior_point(one, both), LengthMismatchError);
}

TEST_CASE("a perturbed constant vector of the six-line system has a witness") {
    const auto da = build_discriminantal(fixtures::perpendicular_pairs());
    RationalVector b = fixtures::perpendicular_pairs_b();
    b(0) += Rational(1, 97);
    b(3) -= Rational(1, 89);
    const RationalVector values = da.normals() * b;
    std::vector<Sign> signs;
    for (Index h = 0; h < values.size(); ++h) signs.push_back(sign_from(values(h).sign()));
    REQUIRE(std::none_of(signs.begin(), signs.end(), [](Sign s) { return s == Sign::Zero; }));
    const auto w = find_interior_point(da.normals(), signs);
    REQUIRE(w);
    const RationalVector at = da.normals() * *w;
    for (Index h = 0; h < at.size(); ++h) CHECK(sign_from(at(h).sign()) == signs[static_cast<std::size_t>(h)]);
}

TEST_CASE("strict feasibility agrees with ray enumeration in 2 and 3 dimensions") {
    fixtures::Random rnd(23);
    int feasible = 0;
    int infeasible = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const long d = rnd.uniform(2, 3);
        const long rows = rnd.uniform(d, 6);
        const RationalMatrix a = rnd.matrix(rows, d, 4);
        if (rank(a) < d) continue;
        bool zero_row = false;
        for (long i = 0; i < rows; ++i) zero_row = zero_row || a.row(i).isZero();
        if (zero_row) continue;
        std::vector<Sign> signs;
        for (long i = 0; i < rows; ++i) signs.push_back(rnd.coin() ? Sign::Positive : Sign::Negative);

        const auto w = find_interior_point(a, signs);
        const bool expected = brute_force_feasible(a, signs);
        CHECK(w.has_value() == expected);
        if (w) {
            const RationalVector v = a * *w;
            for (long i = 0; i < rows; ++i) CHECK(sign_from(v(i).sign()) == signs[static_cast<std::size_t>(i)]);
            ++feasible;
        } else {
            ++infeasible;
        }
    }
    CHECK(feasible > 20);
    CHECK(infeasible > 20);
}

TEST_CASE("general LP: bounded, unbounded and infeasible programs") {
    // maximize x + y  s.t.  x + 2y <= 4, 3x + y <= 6, x, y >= 0  -> (8/5, 6/5).
    LinearProgram lp(2);
    lp.set_nonnegative(0);
    lp.set_nonnegative(1);
    lp.add_constraint(vector_from({1, 2}), Relation::LessEqual, 4);
    lp.add_constraint(vector_from({3, 1}), Relation::LessEqual, 6);
    lp.set_objective(vector_from({1, 1}));
    const auto r = lp.solve();
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == Rational(14, 5));
    CHECK(r.point(0) == Rational(8, 5));

    LinearProgram up(1);
    up.add_constraint(vector_from({1}), Relation::GreaterEqual, 1);
    up.set_objective(vector_from({1}));
    CHECK(up.solve().status == LpStatus::Unbounded);

    LinearProgram none(1);
    none.add_constraint(vector_from({1}), Relation::GreaterEqual, 2);
    none.add_constraint(vector_from({1}), Relation::LessEqual, 1);
    CHECK(none.solve().status == LpStatus::Infeasible);

    LinearProgram eq(2);
    eq.add_constraint(vector_from({1, 1}), Relation::Equal, 3);
    eq.add_constraint(vector_from({1, -1}), Relation::Equal, 1);
    const auto e = eq.solve();
    REQUIRE(e.status == LpStatus::Optimal);
    CHECK(e.point(0) == 2);
    CHECK(e.point(1) == 1);
}

TEST_CASE("results are identical across repeated runs") {
    fixtures::Random rnd(3);
    const RationalMatrix a = rnd.matrix(7, 3, 5);
    std::vector<Sign> signs(7, Sign::Positive);
    const auto first = find_point_with_signs(a, signs);
    for (int k = 0; k < 5; ++k) CHECK(find_point_with_signs(a, signs) == first);
}
