#pragma once

// Triangle sets of the generic five-line arrangements, one family per
// orbit under the cyclic relabelling i -> i+1 (mod 5).

#include "arrcensus/subsets.hpp"

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace fixtures {

using arrcensus::LineSet;

using Signature = std::set<LineSet>;

inline LineSet label(const std::string& digits) {
    LineSet s;
    for (char c : digits) s = s.with(c - '0');
    return s;
}

inline Signature signature_of(std::initializer_list<const char*> labels) {
    Signature out;
    for (const char* l : labels) out.insert(label(l));
    return out;
}

// Triangle sets of the seven five-line families, as listed (first entry of
// each family followed by its cyclic translates).
inline std::vector<std::vector<Signature>> five_line_families() {
    return {
        {signature_of({"124", "245", "235", "135", "134"})},
        {signature_of({"123", "235", "245", "145"}), signature_of({"234", "134", "135", "125"}),
         signature_of({"345", "245", "124", "123"}), signature_of({"145", "135", "235", "234"}),
         signature_of({"125", "124", "134", "345"})},
        {signature_of({"135", "125", "124"}), signature_of({"124", "123", "235"}), signature_of({"235", "234", "134"}),
         signature_of({"134", "345", "245"}), signature_of({"245", "145", "135"})},
        {signature_of({"123", "125", "145"}), signature_of({"234", "123", "125"}), signature_of({"345", "234", "123"}),
         signature_of({"145", "345", "234"}), signature_of({"125", "145", "345"})},
        {signature_of({"134", "235", "245"}), signature_of({"245", "134", "135"}), signature_of({"135", "245", "124"}),
         signature_of({"124", "135", "235"}), signature_of({"235", "124", "134"})},
        {signature_of({"345", "123", "245"}), signature_of({"145", "234", "135"}), signature_of({"125", "345", "124"}),
         signature_of({"123", "145", "235"}), signature_of({"234", "125", "134"})},
        {signature_of({"235", "234", "145"}), signature_of({"134", "345", "125"}), signature_of({"245", "145", "123"}),
         signature_of({"135", "125", "234"}), signature_of({"124", "123", "345"})},
    };
}

inline Signature shift(const Signature& sig) {
    Signature out;
    for (LineSet t : sig) {
        LineSet u;
        for (int e : t.elements()) u = u.with(e % 5 + 1);
        out.insert(u);
    }
    return out;
}

}  // namespace fixtures
