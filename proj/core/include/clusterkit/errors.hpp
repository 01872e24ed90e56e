#pragma once

#include <stdexcept>
#include <string>

namespace clusterkit {

// Base class for all domain errors raised by the library.
class ClusterError : public std::runtime_error {
public:
    explicit ClusterError(const std::string& what) : std::runtime_error(what) {}
};

class ArityMismatch : public ClusterError {
public:
    using ClusterError::ClusterError;
};

// A substitution or exchange-relation division left the Laurent ring.
class NonLaurentResult : public ClusterError {
public:
    using ClusterError::ClusterError;
};

class NotSkewSymmetrizable : public ClusterError {
public:
    using ClusterError::ClusterError;
};

class NotHomogeneous : public ClusterError {
public:
    using ClusterError::ClusterError;
};

class SingularCMatrix : public ClusterError {
public:
    using ClusterError::ClusterError;
};

class NonIntegerResult : public ClusterError {
public:
    using ClusterError::ClusterError;
};

class IndexOutOfRange : public ClusterError {
public:
    using ClusterError::ClusterError;
};

class IncompleteGraph : public ClusterError {
public:
    using ClusterError::ClusterError;
};

class InvalidSpec : public ClusterError {
public:
    using ClusterError::ClusterError;
};

class NotASubalgebra : public ClusterError {
public:
    using ClusterError::ClusterError;
};

class NotACluster : public ClusterError {
public:
    using ClusterError::ClusterError;
};

class NotAnAutomorphism : public ClusterError {
public:
    using ClusterError::ClusterError;
};

class MixedAmbient : public ClusterError {
public:
    using ClusterError::ClusterError;
};

class KerPhiInput : public ClusterError {
public:
    using ClusterError::ClusterError;
};

class NotAscending : public ClusterError {
public:
    using ClusterError::ClusterError;
};

class NoOutsideVariable : public ClusterError {
public:
    using ClusterError::ClusterError;
};

class ExcludedSurface : public ClusterError {
public:
    using ClusterError::ClusterError;
};

class InvalidCase : public ClusterError {
public:
    using ClusterError::ClusterError;
};

class NotInTriangulation : public ClusterError {
public:
    using ClusterError::ClusterError;
};

class UnregisteredQuasiVariable : public ClusterError {
public:
    using ClusterError::ClusterError;
};

// An internal cross-check that should never fail on valid inputs did fail.
class ContractViolation : public ClusterError {
public:
    using ClusterError::ClusterError;
};

} // namespace clusterkit
