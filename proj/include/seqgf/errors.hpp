#pragma once

#include <stdexcept>
#include <string>

namespace seqgf {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& what) : Error("invalid parameter: " + what) {}
};

struct ScaleMismatch : Error {
    explicit ScaleMismatch(const std::string& what) : Error("scale mismatch: " + what) {}
};

struct DegenerateScale : Error {
    explicit DegenerateScale(const std::string& what) : Error("degenerate scale: " + what) {}
};

struct AmbiguousDominance : Error {
    explicit AmbiguousDominance(const std::string& what) : Error("ambiguous dominance: " + what) {}
};

struct NotModerate : Error {
    explicit NotModerate(const std::string& what) : Error("not moderate: " + what) {}
};

struct NotCauchy : Error {
    explicit NotCauchy(const std::string& what) : Error("not Cauchy: " + what) {}
};

struct Unsupported : Error {
    explicit Unsupported(const std::string& what) : Error("unsupported: " + what) {}
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& what) : Error("precondition failed: " + what) {}
};

} // namespace seqgf
