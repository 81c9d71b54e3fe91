#ifndef CELL24_ERRORS_HPP
#define CELL24_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cell24 {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in Q(sqrt 2)") {}
};

// Raised by parse_code(). `kind` distinguishes the three documented outcomes.
struct ParseError : Error {
    enum class Kind { BadLength, BadCharacter, FixedSideCharacter };
    Kind kind;
    std::size_t position;  // offending character index, 0-based (0 for BadLength)

    ParseError(Kind k, std::size_t pos, const std::string& what)
        : Error(what), kind(k), position(pos) {}
};

// Acting on a side that neither is the transformation's source nor carries
// into a side incident to the target: the face would leave the polytope.
struct NotIncident : Error {
    explicit NotIncident(const std::string& what) : Error(what) {}
};

// A ridge walk that does not return to its start state in exactly 4 steps.
struct CycleNotClosed : Error {
    int length;  // number of steps after which the walk first re-entered its start, 0 if never
    CycleNotClosed(int len, const std::string& what) : Error(what), length(len) {}
};

// A codimension-3 orbit whose size is not 8.
struct OrbitSizeMismatch : Error {
    int size;
    OrbitSizeMismatch(int sz, const std::string& what) : Error(what), size(sz) {}
};

struct DegenerateSegment : Error {
    explicit DegenerateSegment(const std::string& what) : Error(what) {}
};

struct SphereThroughPole : Error {
    explicit SphereThroughPole(const std::string& what) : Error(what) {}
};

struct PoleDifferential : Error {
    explicit PoleDifferential(const std::string& what) : Error(what) {}
};

// The transported offset lost its tracked transverse component.
struct OffsetDegenerate : Error {
    explicit OffsetDegenerate(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace cell24

#endif
