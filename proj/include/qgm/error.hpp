#ifndef QGM_ERROR_HPP
#define QGM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qgm {

// Machine-readable failure kinds; the CLI maps every one of these to exit
// code 2 with the kind name in the diagnostic.
enum class ErrorKind {
    InvalidInput,
    CycleLimitExceeded,
    CapExceeded,
    SearchCapExceeded,
    GraphBalanced,
    ImproperTripartition,
    ImproperChi,
    DisconnectedGraph,
    DegenerateTripartition,
    GroundSetTooLarge,
    LoopContraction,
    BasepointNotLink,
    BasepointNotUnbalancedLoop,
    EdgeSetCollision,
    NotAFourCycle,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace qgm

#endif
