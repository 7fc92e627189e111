#include "arrcensus/chambers.hpp"

#include "arrcensus/errors.hpp"
#include "arrcensus/exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace arrcensus {

namespace {

struct Cell {
    std::vector<Sign> signs;
    RationalVector witness;  // in quotient coordinates
};

// The candidate children of `cell` once row h of `a` is inserted.
std::vector<Cell> split(const RationalMatrix& a, const Cell& cell, Index h) {
    const Rational value = a.row(h).dot(cell.witness);
    std::vector<Cell> out;
    for (Sign side : {Sign::Positive, Sign::Negative}) {
        std::vector<Sign> signs = cell.signs;
        signs.push_back(side);
        if (sign_from(value.sign()) == side) {
            out.push_back({std::move(signs), cell.witness});
            continue;
        }
        auto point = find_interior_point(a.topRows(h + 1), signs);
        if (point) out.push_back({std::move(signs), std::move(*point)});
    }
    return out;
}

template <typename F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
    threads = std::max(1u, threads);
    if (threads == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += threads) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

SignString negate(const SignString& signs) {
    SignString out = signs;
    for (char& c : out) {
        if (c == '+') c = '-';
        else if (c == '-') c = '+';
    }
    return out;
}

SignString sign_vector_at(const DiscriminantalArrangement& da, const RationalVector& b) {
    if (b.size() != da.n()) {
        throw LengthMismatchError("b has " + std::to_string(b.size()) + " entries, expected " + std::to_string(da.n()));
    }
    const RationalVector values = da.normals() * b;
    SignString out;
    for (Index h = 0; h < values.size(); ++h) out += sign_char(sign_from(values(h).sign()));
    return out;
}

ChamberCatalog::ChamberCatalog(int n, int m, std::vector<Chamber> chambers)
    : n_(n), m_(m), chambers_(std::move(chambers)) {
    std::sort(chambers_.begin(), chambers_.end(), [](const Chamber& a, const Chamber& b) { return a.signs < b.signs; });
    antipode_.resize(chambers_.size());
    for (std::size_t i = 0; i < chambers_.size(); ++i) {
        const auto j = find(negate(chambers_[i].signs));
        if (!j || *j == i) throw UnpairedChamberError("chamber " + chambers_[i].signs + " has no antipode");
        antipode_[i] = *j;
    }
    int next_id = 0;
    for (std::size_t i = 0; i < chambers_.size(); ++i) {
        if (!chambers_[i].signs.empty() && chambers_[i].signs[0] == '+') chambers_[i].class_id = next_id++;
    }
    for (std::size_t i = 0; i < chambers_.size(); ++i) {
        if (chambers_[i].signs.empty() || chambers_[i].signs[0] != '+') {
            chambers_[i].class_id = chambers_[antipode_[i]].class_id;
        }
    }
    class_count_ = next_id;
}

std::optional<std::size_t> ChamberCatalog::find(const SignString& signs) const {
    auto it = std::lower_bound(chambers_.begin(), chambers_.end(), signs,
                               [](const Chamber& c, const SignString& s) { return c.signs < s; });
    if (it == chambers_.end() || it->signs != signs) return std::nullopt;
    return static_cast<std::size_t>(it - chambers_.begin());
}

ChamberCatalog enumerate_chambers(const DiscriminantalArrangement& da, ChamberOptions options) {
    const RationalMatrix& normals = da.normals();
    const auto echelon = reduced_row_echelon(normals);
    const auto& pivots = echelon.pivots;

    // b is supported on the pivot coordinates only; that coordinate subspace
    // maps isomorphically onto the space of functional values.
    RationalMatrix a(normals.rows(), static_cast<Index>(pivots.size()));
    for (std::size_t k = 0; k < pivots.size(); ++k) a.col(static_cast<Index>(k)) = normals.col(pivots[k]);

    std::vector<Cell> cells{{{}, RationalVector::Zero(a.cols())}};
    for (Index h = 0; h < a.rows(); ++h) {
        std::vector<std::vector<Cell>> children(cells.size());
        parallel_for(cells.size(), options.threads, [&](std::size_t i) { children[i] = split(a, cells[i], h); });
        std::vector<Cell> next;
        for (auto& group : children) {
            for (auto& c : group) next.push_back(std::move(c));
        }
        if (next.size() > options.max_chambers) {
            throw TooLargeError("more than " + std::to_string(options.max_chambers) + " chambers");
        }
        cells = std::move(next);
    }

    std::vector<Chamber> chambers;
    chambers.reserve(cells.size());
    for (const auto& cell : cells) {
        Chamber c;
        for (Sign s : cell.signs) c.signs += sign_char(s);
        c.witness = RationalVector::Zero(da.n());
        for (std::size_t k = 0; k < pivots.size(); ++k) c.witness(pivots[k]) = cell.witness(static_cast<Index>(k));
        chambers.push_back(std::move(c));
    }
    return ChamberCatalog(da.n(), da.m(), std::move(chambers));
}

std::vector<AntipodalClass> antipodal_classes(const ChamberCatalog& catalog) {
    std::vector<AntipodalClass> out(static_cast<std::size_t>(catalog.class_count()));
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const Chamber& c = catalog[i];
        if (c.signs[0] != '+') continue;
        out[static_cast<std::size_t>(c.class_id)] = {c.class_id, i, catalog.antipode(i)};
    }
    return out;
}

Classification classify_b(const DiscriminantalArrangement& da, const ChamberCatalog& catalog, const RationalVector& b) {
    const SignString signs = sign_vector_at(da, b);
    if (signs.find('0') != SignString::npos) {
        OnWall wall{signs, {}};
        for (std::size_t h = 0; h < signs.size(); ++h) {
            if (signs[h] == '0') wall.vanishing.push_back(da.subset(static_cast<Index>(h)));
        }
        return wall;
    }
    const auto i = catalog.find(signs);
    if (!i) throw NotInCatalogError("sign vector " + signs + " is not in the catalog");
    return Classified{catalog[*i].class_id, *i, signs};
}

std::vector<AdjacencyEdge> adjacency(const DiscriminantalArrangement& da, const ChamberCatalog& catalog) {
    const RationalMatrix& normals = da.normals();
    std::vector<AdjacencyEdge> edges;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const SignString& signs = catalog[i].signs;
        for (std::size_t h = 0; h < signs.size(); ++h) {
            SignString flipped = signs;
            flipped[h] = signs[h] == '+' ? '-' : '+';
            const auto j = catalog.find(flipped);
            if (!j || *j < i) continue;
            std::vector<Sign> pattern;
            for (std::size_t k = 0; k < signs.size(); ++k) {
                pattern.push_back(k == h ? Sign::Zero : (signs[k] == '+' ? Sign::Positive : Sign::Negative));
            }
            if (find_point_with_signs(normals, pattern)) edges.push_back({i, *j, static_cast<Index>(h)});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const AdjacencyEdge& x, const AdjacencyEdge& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    return edges;
}

}  // namespace arrcensus
