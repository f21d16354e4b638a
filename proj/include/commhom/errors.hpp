#pragma once

#include <stdexcept>
#include <string>

namespace commhom {

/* All domain errors derive from Error so callers can catch the library
 * failures separately from std ones. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* A connected induced subgraph of an extended Dynkin diagram failed to match
 * any finite Coxeter type. Always indicates a catalog bug. */
class UnclassifiableSubgraph : public Error {
public:
    explicit UnclassifiableSubgraph(const std::string& msg) : Error(msg) {}
};

/* A supplied vertex permutation is not an automorphism of the diagram. */
class AutomorphismMismatch : public Error {
public:
    explicit AutomorphismMismatch(const std::string& msg) : Error(msg) {}
};

/* A computed value disagrees with the closed form or theorem it must match. */
class ComputationMismatch : public Error {
public:
    explicit ComputationMismatch(const std::string& msg) : Error(msg) {}
};

/* A matching references a face name that is not in the complex. */
class UnknownFace : public Error {
public:
    explicit UnknownFace(const std::string& msg) : Error(msg) {}
};

/* Weyl group enumeration would exceed the element cap. */
class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

/* A Poincare series coefficient came out negative; Betti numbers cannot be. */
class NegativeCoefficient : public Error {
public:
    explicit NegativeCoefficient(const std::string& msg) : Error(msg) {}
};

class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

}  // namespace commhom
