#pragma once

#include <stdexcept>
#include <string>

namespace plap {

struct EmptyDomain : std::invalid_argument {
    EmptyDomain() : std::invalid_argument("omega is empty") {}
};

struct UnknownVertex : std::invalid_argument {
    explicit UnknownVertex(const std::string& id)
        : std::invalid_argument("unknown vertex: " + id) {}
};

struct DisconnectedDomain : std::runtime_error {
    DisconnectedDomain() : std::runtime_error("domain interior is not connected") {}
};

struct DimensionMismatch : std::invalid_argument {
    DimensionMismatch(std::size_t expected, std::size_t got)
        : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) +
                                ", got " + std::to_string(got)) {}
};

struct InvalidP : std::invalid_argument {
    explicit InvalidP(double p, const char* need)
        : std::invalid_argument("invalid p = " + std::to_string(p) + " (need " + need + ")") {}
};

struct ZeroFunction : std::invalid_argument {
    ZeroFunction() : std::invalid_argument("function is identically zero") {}
};

struct NoConvergence : std::runtime_error {
    NoConvergence(double residual, double tol)
        : std::runtime_error("solver did not converge: residual " + std::to_string(residual) +
                             " above tolerance " + std::to_string(tol)),
          residual(residual) {}
    double residual;
};

struct NotBipartite : std::runtime_error {
    NotBipartite() : std::runtime_error("domain interior is not bipartite") {}
};

struct InvalidBipartition : std::invalid_argument {
    explicit InvalidBipartition(const std::string& why)
        : std::invalid_argument("invalid bipartition: " + why) {}
};

struct NotNormalized : std::invalid_argument {
    explicit NotNormalized(const std::string& id)
        : std::invalid_argument("vertex measure is not the weighted degree at " + id) {}
};

struct TooLarge : std::invalid_argument {
    TooLarge(std::size_t n, std::size_t cap)
        : std::invalid_argument("size " + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap)) {}
};

struct InvalidPartition : std::invalid_argument {
    explicit InvalidPartition(const std::string& why)
        : std::invalid_argument("invalid partition: " + why) {}
};

struct NotEquitable : std::runtime_error {
    explicit NotEquitable(const std::string& why)
        : std::runtime_error("partition is not equitable: " + why) {}
};

struct InvalidSpec : std::invalid_argument {
    explicit InvalidSpec(const std::string& why)
        : std::invalid_argument("invalid model spec: " + why) {}
};

struct HorizonExceeded : std::out_of_range {
    HorizonExceeded(long long r, int horizon)
        : std::out_of_range("index " + std::to_string(r) + " beyond horizon " +
                            std::to_string(horizon)) {}
};

} // namespace plap
