#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace arrcensus {

/// Base of every domain error. `kind()` is the stable machine-readable name
/// used in the CLI's JSON error objects.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& message) : Error("BadShape", message) {}
};

class DependentRowsError : public Error {
public:
    DependentRowsError(std::vector<int> subset, const std::string& message)
        : Error("DependentRows", message), subset_(std::move(subset)) {}

    /// 1-based row indices of the first dependent subset in lexicographic order.
    const std::vector<int>& subset() const noexcept { return subset_; }

private:
    std::vector<int> subset_;
};

class LengthMismatchError : public Error {
public:
    explicit LengthMismatchError(const std::string& message)
        : Error("LengthMismatch", message) {}
};

class GivesUpError : public Error {
public:
    explicit GivesUpError(const std::string& message) : Error("GivesUp", message) {}
};

class TooLargeError : public Error {
public:
    explicit TooLargeError(const std::string& message) : Error("TooLarge", message) {}
};

class BadSubsetSizeError : public Error {
public:
    explicit BadSubsetSizeError(const std::string& message) : Error("BadSubsetSize", message) {}
};

class NotClosedError : public Error {
public:
    explicit NotClosedError(const std::string& message) : Error("NotClosed", message) {}
};

class NotGenericError : public Error {
public:
    NotGenericError(std::vector<int> subset, const std::string& message)
        : Error("NotGeneric", message), subset_(std::move(subset)) {}

    /// 1-based indices of a concurrent (m+1)-subset.
    const std::vector<int>& subset() const noexcept { return subset_; }

private:
    std::vector<int> subset_;
};

class OddRegionCountError : public Error {
public:
    explicit OddRegionCountError(const std::string& message) : Error("OddRegionCount", message) {}
};

class UnpairedChamberError : public Error {
public:
    explicit UnpairedChamberError(const std::string& message) : Error("UnpairedChamber", message) {}
};

class NotInCatalogError : public Error {
public:
    explicit NotInCatalogError(const std::string& message) : Error("NotInCatalog", message) {}
};

class NotAdjacentError : public Error {
public:
    explicit NotAdjacentError(const std::string& message) : Error("NotAdjacent", message) {}
};

class UnsupportedDimensionError : public Error {
public:
    explicit UnsupportedDimensionError(const std::string& message)
        : Error("UnsupportedDimension", message) {}
};

class WrongShapeError : public Error {
public:
    explicit WrongShapeError(const std::string& message) : Error("WrongShape", message) {}
};

}  // namespace arrcensus
