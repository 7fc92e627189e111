#include "arrcensus/affine_geometry.hpp"

#include "arrcensus/errors.hpp"
#include "arrcensus/exact_linalg.hpp"

#include <algorithm>
#include <map>

namespace arrcensus {

namespace {

// Rows of the arrangement indexed by `s`, augmented with -b: the determinant
// of the (m+1) x (m+1) case vanishes iff those hyperplanes share a point.
RationalMatrix augmented(const Arrangement& arr, LineSet s) {
    const auto idx = s.elements();
    RationalMatrix out(static_cast<Index>(idx.size()), arr.m() + 1);
    for (std::size_t r = 0; r < idx.size(); ++r) {
        const Index i = idx[r] - 1;
        out.row(static_cast<Index>(r)).head(arr.m()) = arr.system.coeffs().row(i);
        out(static_cast<Index>(r), arr.m()) = -arr.b(i);
    }
    return out;
}

// The unique point on the m hyperplanes in `s`.
RationalVector vertex(const Arrangement& arr, LineSet s) {
    const auto echelon = reduced_row_echelon(augmented(arr, s));
    return -echelon.reduced.col(arr.m());
}

std::string key_of(const std::vector<Sign>& signs) {
    std::string out;
    for (Sign s : signs) out += sign_char(s);
    return out;
}

bool recession_cone_trivial(const Arrangement& arr, const std::vector<Sign>& signs) {
    const Index m = arr.m();
    LinearProgram lp(m);
    RationalVector total = RationalVector::Zero(m);
    for (Index i = 0; i < arr.n(); ++i) {
        const RationalVector row = (signs[static_cast<std::size_t>(i)] == Sign::Positive)
                                       ? RationalVector(arr.system.coeffs().row(i).transpose())
                                       : RationalVector(-arr.system.coeffs().row(i).transpose());
        total += row;
        lp.add_constraint(row, Relation::GreaterEqual, Rational(0));
    }
    lp.add_constraint(total, Relation::Equal, Rational(1));
    lp.set_objective(RationalVector::Zero(m));
    return lp.solve().status == LpStatus::Infeasible;
}

// Counterclockwise order of directions within the half-open upper half plane.
RationalVector upper_direction(const RationalVector& normal) {
    RationalVector d(2);
    d << -normal(1), normal(0);
    if (d(1) < 0 || (d(1) == 0 && d(0) < 0)) d = -d;
    return d;
}

}  // namespace

bool is_generic(const Arrangement& arr) {
    for (LineSet s : combinations(arr.n(), arr.m() + 1)) {
        if (determinant(augmented(arr, s)) == 0) return false;
    }
    return true;
}

void require_generic(const Arrangement& arr) {
    for (LineSet s : combinations(arr.n(), arr.m() + 1)) {
        if (determinant(augmented(arr, s)) == 0) {
            throw NotGenericError(s.elements(), "hyperplanes {" + s.label() + "} pass through a common point");
        }
    }
}

VertexOrderTable vertex_orders(const Arrangement& arr) {
    require_generic(arr);
    const int n = arr.n();
    const int m = arr.m();
    VertexOrderTable table;
    for (LineSet a : combinations(n, m - 1)) {
        LineOrder order;
        order.line = a;
        const RationalMatrix kernel = nullspace_basis(arr.system.rows(a));
        RationalVector d = kernel.col(0);
        Index lead = 0;
        while (d(lead) == 0) ++lead;
        d /= Rational(d(lead));
        order.direction = d;

        std::vector<std::pair<Rational, LineSet>> params;
        for (int j = 1; j <= n; ++j) {
            if (a.contains(j)) continue;
            const LineSet v = a.with(j);
            params.emplace_back(d.dot(vertex(arr, v)), v);
        }
        std::sort(params.begin(), params.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& [t, v] : params) order.vertices.push_back(v);
        table.push_back(std::move(order));
    }
    return table;
}

bool are_isomorphic_trivial(const Arrangement& a1, const Arrangement& a2) {
    if (a1.n() != a2.n() || a1.m() != a2.m()) throw ShapeError("arrangements differ in n or m");
    const auto t1 = vertex_orders(a1);
    const auto t2 = vertex_orders(a2);
    for (std::size_t k = 0; k < t1.size(); ++k) {
        const auto& v1 = t1[k].vertices;
        const auto& v2 = t2[k].vertices;
        if (v1 != v2 && !std::equal(v1.begin(), v1.end(), v2.rbegin())) return false;
    }
    return true;
}

std::vector<AffineRegion> affine_regions(const Arrangement& arr, RegionLimits limits) {
    require_generic(arr);
    const int n = arr.n();
    const int m = arr.m();

    // Homogenise: y = (x, s) with s > 0 and row i reading a_i . x - b_i s.
    RationalMatrix h(n + 1, m + 1);
    h.setZero();
    h(0, m) = 1;
    for (Index i = 0; i < n; ++i) {
        h.row(i + 1).head(m) = arr.system.coeffs().row(i);
        h(i + 1, m) = -arr.b(i);
    }

    struct Cell {
        std::vector<Sign> signs;
        RationalVector witness;
    };
    RationalVector start = RationalVector::Zero(m + 1);
    start(m) = 1;
    std::vector<Cell> cells{{{Sign::Positive}, start}};
    for (Index i = 1; i <= n; ++i) {
        std::vector<Cell> next;
        for (const auto& cell : cells) {
            const Rational value = h.row(i).dot(cell.witness);
            for (Sign side : {Sign::Positive, Sign::Negative}) {
                auto signs = cell.signs;
                signs.push_back(side);
                if (sign_from(value.sign()) == side) {
                    next.push_back({std::move(signs), cell.witness});
                } else if (auto p = find_interior_point(h.topRows(i + 1), signs)) {
                    next.push_back({std::move(signs), std::move(*p)});
                }
            }
        }
        if (next.size() > limits.max_regions) {
            throw TooLargeError("more than " + std::to_string(limits.max_regions) + " regions");
        }
        cells = std::move(next);
    }

    std::vector<AffineRegion> regions;
    for (auto& cell : cells) {
        AffineRegion r;
        r.signs.assign(cell.signs.begin() + 1, cell.signs.end());
        r.witness = cell.witness.head(m) / cell.witness(m);
        r.bounded = recession_cone_trivial(arr, r.signs);
        regions.push_back(std::move(r));
    }
    std::sort(regions.begin(), regions.end(),
              [](const AffineRegion& x, const AffineRegion& y) { return key_of(x.signs) < key_of(y.signs); });

    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < regions.size(); ++k) index.emplace(key_of(regions[k].signs), k);
    for (auto& r : regions) {
        for (int i = 0; i < n; ++i) {
            auto flipped = r.signs;
            flipped[static_cast<std::size_t>(i)] = -flipped[static_cast<std::size_t>(i)];
            if (index.contains(key_of(flipped))) r.facets.push_back(i + 1);
        }
    }
    return regions;
}

RegionCensus region_census(const Arrangement& arr, RegionLimits limits) {
    RegionCensus census;
    for (const auto& r : affine_regions(arr, limits)) {
        ++census.total;
        if (r.bounded) ++census.bounded;
    }
    census.unbounded = census.total - census.bounded;
    return census;
}

RegionCensus generic_region_formulas(int n, int m) {
    RegionCensus census;
    for (int i = 0; i <= m; ++i) census.total += binomial(n, i);
    census.bounded = binomial(n - 1, m);
    for (int i = 0; i <= m - 1; ++i) census.unbounded += binomial(n, i);
    census.unbounded += binomial(n - 1, m - 1);
    return census;
}

std::vector<LineSet> simplex_signature(const Arrangement& arr) {
    if (arr.m() != 2) throw UnsupportedDimensionError("triangle signatures need m = 2");
    std::vector<LineSet> out;
    for (const auto& r : affine_regions(arr)) {
        if (r.bounded && r.facets.size() == 3) out.push_back(LineSet::of(r.facets));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> angle_ranks(const NormalSystem& ns) {
    if (ns.m() != 2) throw UnsupportedDimensionError("line angles need m = 2");
    const int n = ns.n();
    std::vector<RationalVector> dirs;
    for (Index i = 0; i < n; ++i) dirs.push_back(upper_direction(ns.coeffs().row(i).transpose()));
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    // Both directions lie in [0, pi), so u precedes v iff u x v > 0.
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const auto& u = dirs[static_cast<std::size_t>(i)];
        const auto& v = dirs[static_cast<std::size_t>(j)];
        return u(0) * v(1) - u(1) * v(0) > 0;
    });
    std::vector<int> ranks(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) ranks[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r + 1;
    return ranks;
}

LineSet relabel(LineSet s, const std::vector<int>& ranks) {
    LineSet out;
    for (int e : s.elements()) out = out.with(ranks[static_cast<std::size_t>(e - 1)]);
    return out;
}

SpecialPoint special_point(const Arrangement& arr) {
    if (arr.n() != 4 || arr.m() != 2) throw WrongShapeError("special points are defined for four lines in the plane");
    const auto table = vertex_orders(arr);
    // Line i meets the other three; its middle vertex is {i, j} for one j.
    std::vector<LineSet> middle;
    for (const auto& line : table) middle.push_back(line.vertices[1]);
    for (std::size_t i = 0; i < middle.size(); ++i) {
        for (std::size_t j = i + 1; j < middle.size(); ++j) {
            if (middle[i] == middle[j]) return {middle[i], relabel(middle[i], angle_ranks(arr.system))};
        }
    }
    throw GivesUpError("no vertex is central on both of its lines");
}

SwapReport swap_check(const NormalSystem& ns, const DiscriminantalArrangement& da, const ChamberCatalog& catalog,
                      std::size_t from, std::size_t to) {
    const SignString& s1 = catalog[from].signs;
    const SignString& s2 = catalog[to].signs;
    std::size_t wall = s1.size();
    for (std::size_t h = 0; h < s1.size(); ++h) {
        if (s1[h] == s2[h]) continue;
        if (wall != s1.size()) throw NotAdjacentError("chambers differ in more than one sign");
        wall = h;
    }
    if (wall == s1.size()) throw NotAdjacentError("chambers coincide");

    SwapReport report;
    report.wall = da.subset(static_cast<Index>(wall));
    const auto t1 = vertex_orders(arrangement_from_b(ns, catalog[from].witness));
    const auto t2 = vertex_orders(arrangement_from_b(ns, catalog[to].witness));
    auto fail = [&](const std::string& why) {
        if (report.holds) report.detail = why;
        report.holds = false;
    };
    for (std::size_t k = 0; k < t1.size(); ++k) {
        const LineSet line = t1[k].line;
        const auto& v1 = t1[k].vertices;
        const auto& v2 = t2[k].vertices;
        if (v1 != v2) report.changed.push_back(line);
        if (!line.is_subset_of(report.wall)) {
            if (v1 != v2) fail("line {" + line.label() + "} changed but lies outside the wall");
            continue;
        }
        const auto rest = LineSet(report.wall.bits() & ~line.bits()).elements();
        const LineSet p = line.with(rest[0]);
        const LineSet q = line.with(rest[1]);
        const auto ip = static_cast<std::size_t>(std::find(v1.begin(), v1.end(), p) - v1.begin());
        const auto iq = static_cast<std::size_t>(std::find(v1.begin(), v1.end(), q) - v1.begin());
        if (std::max(ip, iq) - std::min(ip, iq) != 1) {
            fail("vertices {" + p.label() + "} and {" + q.label() + "} are not neighbours on line {" + line.label() + "}");
            continue;
        }
        auto expected = v1;
        std::swap(expected[ip], expected[iq]);
        if (expected != v2) fail("line {" + line.label() + "} did not swap {" + p.label() + "} and {" + q.label() + "}");
    }
    return report;
}

}  // namespace arrcensus
