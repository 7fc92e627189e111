#include "arrcensus/charpoly.hpp"

#include "arrcensus/concurrency.hpp"
#include "arrcensus/errors.hpp"
#include "arrcensus/exact_linalg.hpp"
#include "arrcensus/lattice.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace arrcensus {

namespace {

std::string term(const Integer& magnitude, int power) {
    std::string out;
    if (magnitude != 1 || power == 0) out += magnitude.str();
    if (power >= 1) out += "x";
    if (power >= 2) out += "^" + std::to_string(power);
    return out;
}

// Polynomial text from ascending coefficients.
std::string render(const std::vector<Integer>& ascending) {
    std::string out;
    for (int p = static_cast<int>(ascending.size()) - 1; p >= 0; --p) {
        const Integer& c = ascending[static_cast<std::size_t>(p)];
        if (c == 0) continue;
        if (out.empty()) {
            out += (c < 0 ? "-" : "") + term(abs(c), p);
        } else {
            out += (c < 0 ? " - " : " + ") + term(abs(c), p);
        }
    }
    return out.empty() ? "0" : out;
}

// Divides `ascending` by (x - r) when r is a root; returns false otherwise.
bool divide_root(std::vector<Integer>& ascending, const Integer& r) {
    const std::size_t d = ascending.size() - 1;
    std::vector<Integer> quotient(d);
    Integer carry = 0;
    for (std::size_t i = d; i >= 1; --i) {
        carry = ascending[i] + carry * r;
        quotient[i - 1] = carry;
    }
    if (ascending[0] + carry * r != 0) return false;
    ascending = std::move(quotient);
    return true;
}

std::vector<Integer> divisors(Integer value) {
    value = abs(value);
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= value; ++d) {
        if (value % d != 0) continue;
        small.push_back(d);
        if (d * d != value) large.push_back(value / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Row-space states of the subset-sum oracle: each state is a reduced echelon
// form; `next[state * count + h]` is the state after adding normal h.
struct SpanAutomaton {
    std::vector<int> ranks;
    std::vector<std::int32_t> next;
};

std::string key_of(const RationalMatrix& reduced) {
    std::string key;
    for (Index i = 0; i < reduced.rows(); ++i) {
        for (Index j = 0; j < reduced.cols(); ++j) {
            key += format_rational(reduced(i, j));
            key += ',';
        }
        key += ';';
    }
    return key;
}

bool in_row_space(const EchelonForm<Rational>& echelon, RationalVector v) {
    for (std::size_t r = 0; r < echelon.pivots.size(); ++r) {
        const Index p = echelon.pivots[r];
        if (v(p) == 0) continue;
        const Rational factor = v(p);
        v -= factor * echelon.reduced.row(static_cast<Index>(r)).transpose();
    }
    return v.isZero();
}

SpanAutomaton build_automaton(const RationalMatrix& normals) {
    const Index count = normals.rows();
    const Index n = normals.cols();
    SpanAutomaton automaton;
    std::vector<EchelonForm<Rational>> states;
    std::unordered_map<std::string, std::int32_t> ids;

    states.push_back({RationalMatrix(0, n), {}});
    automaton.ranks.push_back(0);
    ids.emplace(key_of(states[0].reduced), 0);
    for (std::size_t s = 0; s < states.size(); ++s) {
        automaton.next.resize((s + 1) * static_cast<std::size_t>(count));
        for (Index h = 0; h < count; ++h) {
            std::int32_t target = static_cast<std::int32_t>(s);
            if (!in_row_space(states[s], normals.row(h).transpose())) {
                RationalMatrix stacked(states[s].reduced.rows() + 1, n);
                stacked << states[s].reduced, normals.row(h);
                auto echelon = reduced_row_echelon(stacked);
                auto key = key_of(echelon.reduced);
                auto found = ids.find(key);
                if (found == ids.end()) {
                    target = static_cast<std::int32_t>(states.size());
                    ids.emplace(std::move(key), target);
                    automaton.ranks.push_back(static_cast<int>(echelon.pivots.size()));
                    states.push_back(std::move(echelon));
                } else {
                    target = found->second;
                }
            }
            automaton.next[s * static_cast<std::size_t>(count) + static_cast<std::size_t>(h)] = target;
        }
    }
    return automaton;
}

// Walks every subset of hyperplanes [from, count) on top of `state`, adding
// (-1)^|B| to the bucket of the final rank.
void walk_subsets(const SpanAutomaton& automaton, std::size_t count, std::size_t from, std::int32_t state,
                  bool odd, std::vector<std::int64_t>& by_rank) {
    if (from == count) {
        by_rank[static_cast<std::size_t>(automaton.ranks[static_cast<std::size_t>(state)])] += odd ? -1 : 1;
        return;
    }
    walk_subsets(automaton, count, from + 1, state, odd, by_rank);
    const auto next = automaton.next[static_cast<std::size_t>(state) * count + from];
    walk_subsets(automaton, count, from + 1, next, !odd, by_rank);
}

CharPolynomial from_moebius(const FlatLattice& lattice, int n) {
    const auto mu = moebius_from_bottom(lattice);
    std::vector<Integer> descending(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t f = 0; f < lattice.flats.size(); ++f) {
        descending[static_cast<std::size_t>(lattice.ranks[f])] += mu[f];
    }
    return CharPolynomial(std::move(descending));
}

}  // namespace

CharPolynomial::CharPolynomial(std::vector<Integer> descending) : coeffs_(std::move(descending)) {}

Integer CharPolynomial::coefficient(int power) const {
    const int d = degree();
    if (power < 0 || power > d) return 0;
    return coeffs_[static_cast<std::size_t>(d - power)];
}

Integer CharPolynomial::evaluate(const Integer& x) const {
    Integer value = 0;
    for (const auto& c : coeffs_) value = value * x + c;
    return value;
}

std::string CharPolynomial::to_string() const {
    return render(std::vector<Integer>(coeffs_.rbegin(), coeffs_.rend()));
}

std::string CharPolynomial::factored() const {
    std::vector<Integer> ascending(coeffs_.rbegin(), coeffs_.rend());
    while (ascending.size() > 1 && ascending.back() == 0) ascending.pop_back();
    if (ascending.size() == 1) return render(ascending);

    std::size_t low = 0;
    while (ascending[low] == 0) ++low;
    ascending.erase(ascending.begin(), ascending.begin() + static_cast<std::ptrdiff_t>(low));

    std::vector<std::pair<Integer, int>> roots;
    std::vector<Integer> candidates;
    for (const auto& d : divisors(ascending[0])) {
        candidates.push_back(-d);
        candidates.push_back(d);
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& r : candidates) {
        int multiplicity = 0;
        while (ascending.size() > 1 && divide_root(ascending, r)) ++multiplicity;
        if (multiplicity > 0) roots.emplace_back(r, multiplicity);
    }

    std::string out;
    if (ascending.size() == 1 && ascending[0] != 1) {
        out += ascending[0] == -1 ? "-" : ascending[0].str();
    }
    if (low > 0) out += low == 1 ? "x" : "x^" + std::to_string(low);
    for (const auto& [r, k] : roots) {
        out += "(x ";
        out += r > 0 ? "- " + r.str() : "+ " + Integer(-r).str();
        out += ")";
        if (k > 1) out += "^" + std::to_string(k);
    }
    if (ascending.size() > 1) out += "(" + render(ascending) + ")";
    return out.empty() ? "1" : out;
}

CharPolynomial whitney_charpoly(const DiscriminantalArrangement& da, WhitneyOptions options) {
    const auto count = static_cast<std::size_t>(da.size());
    if (count >= 63 || (std::uint64_t{1} << count) > options.max_subsets) {
        throw TooLargeError("subset sum over 2^" + std::to_string(count) + " subsets exceeds the limit of " +
                            std::to_string(options.max_subsets));
    }
    const SpanAutomaton automaton = build_automaton(da.normals());
    const auto n = static_cast<std::size_t>(da.n());

    // Split on the first `prefix` hyperplanes; each prefix is one task.
    const unsigned threads = std::max(1u, options.threads);
    std::size_t prefix = 0;
    while (prefix < count && (std::size_t{1} << prefix) < 4 * threads) ++prefix;
    const std::size_t tasks = std::size_t{1} << prefix;

    std::vector<std::vector<std::int64_t>> partial(threads, std::vector<std::int64_t>(n + 1, 0));
    auto work = [&](unsigned worker) {
        for (std::size_t task = worker; task < tasks; task += threads) {
            std::int32_t state = 0;
            bool odd = false;
            for (std::size_t h = 0; h < prefix; ++h) {
                if (!((task >> h) & 1u)) continue;
                state = automaton.next[static_cast<std::size_t>(state) * count + h];
                odd = !odd;
            }
            walk_subsets(automaton, count, prefix, state, odd, partial[worker]);
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& t : pool) t.join();
    }

    std::vector<Integer> descending(n + 1, 0);
    for (const auto& bucket : partial) {
        for (std::size_t r = 0; r <= n; ++r) descending[r] += bucket[r];
    }
    return CharPolynomial(std::move(descending));
}

CharPolynomial poset_charpoly(const DiscriminantalArrangement& da, PosetOptions options) {
    const RationalMatrix& normals = da.normals();
    const auto ground = static_cast<std::size_t>(da.size());
    const FlatLattice lattice = crawl_flats(
        ground,
        [&](const std::vector<std::size_t>& basis) {
            IndexSet flat(ground);
            if (basis.empty()) {
                for (std::size_t g = 0; g < ground; ++g)
                    if (normals.row(static_cast<Index>(g)).isZero()) flat.set(g);
                return flat;
            }
            RationalMatrix rows(static_cast<Index>(basis.size()), normals.cols());
            for (std::size_t i = 0; i < basis.size(); ++i)
                rows.row(static_cast<Index>(i)) = normals.row(static_cast<Index>(basis[i]));
            const RationalMatrix kernel = nullspace_basis(rows);
            for (std::size_t g = 0; g < ground; ++g) {
                if ((normals.row(static_cast<Index>(g)) * kernel).isZero()) flat.set(g);
            }
            return flat;
        },
        options.max_flats);
    return from_moebius(lattice, da.n());
}

CharPolynomial combinatorial_charpoly(int n, int m, PosetOptions options) {
    return from_moebius(concurrency_lattice(n, m, {options.max_flats}), n);
}

Integer zaslavsky_regions(const CharPolynomial& p) {
    const Integer value = p.evaluate(-1);
    return p.degree() % 2 == 0 ? value : Integer(-value);
}

Integer iso_class_count(const CharPolynomial& p) {
    const Integer regions = zaslavsky_regions(p);
    if (regions % 2 != 0) throw OddRegionCountError("region count " + regions.str() + " is odd");
    return regions / 2;
}

}  // namespace arrcensus
