#ifndef CYCLECERT_ERRORS_HPP
#define CYCLECERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclecert {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (edge lists, model specs). Carries a 1-based line
// number when the source is line-oriented, 0 otherwise.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line(line) {}
    int line;
};

// A documented precondition of an operation does not hold. `condition`
// names the first violated inequality or requirement.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& condition)
        : Error("precondition violated: " + condition), condition(condition) {}
    std::string condition;
};

// Conditioned generation ran out of trials.
class GenerationError : public Error {
public:
    GenerationError(const std::string& msg, int trials)
        : Error(msg), trials(trials) {}
    int trials;
};

// A Menger fan query asked for more disjoint paths than exist.
class FanDeficitError : public Error {
public:
    FanDeficitError(int requested, int achieved)
        : Error("fan deficit: requested " + std::to_string(requested) +
                " disjoint paths, max achievable is " + std::to_string(achieved)),
          requested(requested), achieved(achieved) {}
    int requested;
    int achieved;
};

// The greedy triangulated-path builder found no edge inside the candidate
// neighbourhood set. Signals a violated precondition or a wrong alpha bound.
class GrowthStuckError : public Error {
public:
    using Error::Error;
};

// A path-surgery search exhausted its rewiring family without landing in
// the required window.
class WindowEmptyError : public Error {
public:
    using Error::Error;
};

// augment_path found no lengthening splice although its preconditions were
// verified. Treated as a correctness failure, not a recoverable state.
class NoSpliceError : public Error {
public:
    using Error::Error;
};

// The Hamilton rotation loop found no usable edge in the successor set.
class NoAugmentingEdgeError : public Error {
public:
    using Error::Error;
};

// Some neighbourhood lacks the matching the partition argument guarantees.
class MatchingDeficitError : public Error {
public:
    using Error::Error;
};

// Exact enumeration requested beyond its hard size cap.
class SizeCapError : public Error {
public:
    using Error::Error;
};

// Segments handed to combine_segments share an internal vertex.
class DisjointnessError : public Error {
public:
    DisjointnessError(const std::string& msg, int vertex)
        : Error(msg), vertex(vertex) {}
    int vertex;
};

// A structural guarantee was violated (iteration caps, impossible states).
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace cyclecert

#endif
