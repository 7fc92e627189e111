#pragma once

// Characteristic polynomials of discriminantal arrangements.
//
//   chi(x) = sum over subsets B of the hyperplanes of (-1)^|B| x^(n - rank B)
//          = sum over flats F of mu(0, F) x^(n - rank F).
//
// Three routes compute it: the raw subset sum (an oracle, small inputs only),
// the Moebius sum over the flats of the linear matroid of normals, and the
// Moebius sum over closed collections, which needs no matrix at all and is
// correct for concurrency free systems.

#include "arrcensus/discriminantal.hpp"
#include "arrcensus/rational.hpp"

#include <string>
#include <vector>

namespace arrcensus {

class CharPolynomial {
public:
    CharPolynomial() = default;
    /// Coefficients from degree coefficients.size()-1 down to 0.
    explicit CharPolynomial(std::vector<Integer> descending);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of x^power (zero outside the stored range).
    Integer coefficient(int power) const;
    const std::vector<Integer>& descending() const { return coeffs_; }

    Integer evaluate(const Integer& x) const;

    /// "x^4 - 4x^3 + 3x^2"
    std::string to_string() const;
    /// Powers of x and integer linear factors pulled out, e.g. "x^2(x - 1)(x - 3)".
    std::string factored() const;

    friend bool operator==(const CharPolynomial&, const CharPolynomial&) = default;

private:
    std::vector<Integer> coeffs_;
};

struct WhitneyOptions {
    std::uint64_t max_subsets = std::uint64_t{1} << 22;
    unsigned threads = 1;
};

/// Full subset sum; throws TooLargeError when 2^C(n,m+1) exceeds max_subsets.
CharPolynomial whitney_charpoly(const DiscriminantalArrangement& da, WhitneyOptions options = {});

struct PosetOptions {
    std::size_t max_flats = 1u << 20;
};

/// Moebius sum over flats spanned by the normals.
CharPolynomial poset_charpoly(const DiscriminantalArrangement& da, PosetOptions options = {});

/// Moebius sum over concurrency closed collections of (m+1)-subsets of {1..n}.
CharPolynomial combinatorial_charpoly(int n, int m, PosetOptions options = {});

/// (-1)^n chi(-1).
Integer zaslavsky_regions(const CharPolynomial& p);

/// Half the region count; throws OddRegionCountError on an odd count.
Integer iso_class_count(const CharPolynomial& p);

}  // namespace arrcensus
