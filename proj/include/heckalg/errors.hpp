#pragma once

#include <stdexcept>
#include <string>

namespace heckalg {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error("parse error: " + msg) {}
};

struct ValidationError : std::runtime_error {
    std::string axiom;
    ValidationError(std::string axiom_, const std::string& msg)
        : std::runtime_error("validation error [" + axiom_ + "]: " + msg), axiom(std::move(axiom_)) {}
};

struct NotASubspace : std::runtime_error {
    explicit NotASubspace(const std::string& msg) : std::runtime_error("not a subspace: " + msg) {}
};

struct DegreeOutOfRange : std::out_of_range {
    explicit DegreeOutOfRange(const std::string& msg) : std::out_of_range("degree out of range: " + msg) {}
};

struct WindowUnderflow : std::runtime_error {
    explicit WindowUnderflow(const std::string& msg)
        : std::runtime_error("window underflow: " + msg + " (enlarge the truncation window L)") {}
};

struct UnstableTruncation : std::runtime_error {
    int degree;
    UnstableTruncation(int degree_, const std::string& msg)
        : std::runtime_error("unstable truncation at degree " + std::to_string(degree_) + ": " + msg +
                             " (raise L)"),
          degree(degree_) {}
};

struct NotAHomotopyEquivalence : std::runtime_error {
    explicit NotAHomotopyEquivalence(const std::string& msg)
        : std::runtime_error("not a homotopy equivalence: " + msg) {}
};

struct RankMismatch : std::runtime_error {
    explicit RankMismatch(const std::string& msg) : std::runtime_error("rank mismatch: " + msg) {}
};

struct InvalidLieAction : std::runtime_error {
    explicit InvalidLieAction(const std::string& msg) : std::runtime_error("invalid Lie action: " + msg) {}
};

}  // namespace heckalg
