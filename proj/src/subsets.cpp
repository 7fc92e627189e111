#include "arrcensus/subsets.hpp"

#include "arrcensus/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace arrcensus {

LineSet LineSet::of(std::initializer_list<int> elements) {
    return of(std::vector<int>(elements));
}

LineSet LineSet::of(const std::vector<int>& elements) {
    std::uint32_t bits = 0;
    for (int e : elements) {
        if (e < 1 || e > 32) throw ShapeError("line index out of range: " + std::to_string(e));
        bits |= (1u << (e - 1));
    }
    return LineSet(bits);
}

std::vector<int> LineSet::elements() const {
    std::vector<int> out;
    std::uint32_t b = bits_;
    while (b) {
        out.push_back(std::countr_zero(b) + 1);
        b &= b - 1;
    }
    return out;
}

std::string LineSet::label() const {
    const auto e = elements();
    const bool compact = std::all_of(e.begin(), e.end(), [](int x) { return x < 10; });
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!compact && i > 0) out += ',';
        out += std::to_string(e[i]);
    }
    return out;
}

bool operator<(LineSet a, LineSet b) {
    const auto ea = a.elements();
    const auto eb = b.elements();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::vector<LineSet> combinations(int n, int k) {
    std::vector<LineSet> out;
    if (k < 0 || k > n) return out;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(LineSet::of(c));
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

SubsetUniverse::SubsetUniverse(int n, int k) : n_(n), k_(k), members_(combinations(n, k)) {
    index_.reserve(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i].bits(), static_cast<int>(i));
}

int SubsetUniverse::index_of(LineSet s) const {
    const auto it = index_.find(s.bits());
    return it == index_.end() ? -1 : it->second;
}

std::shared_ptr<const SubsetUniverse> subset_universe(int n, int k) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const SubsetUniverse>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, k}];
    if (!slot) slot = std::make_shared<const SubsetUniverse>(n, k);
    return slot;
}

bool operator<(const IndexSet& a, const IndexSet& b) {
    const auto ia = a.indices();
    const auto ib = b.indices();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

}  // namespace arrcensus
