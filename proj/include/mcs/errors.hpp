#ifndef MCS_ERRORS_HPP
#define MCS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mcs {

enum class ErrorCode {
    // graph-core
    DisconnectedGraph,
    SelfLoop,
    DuplicateEdge,
    ColorGap,
    InvalidVertex,
    EmptySubset,
    // exact-solver
    InstanceTooLarge,
    BudgetExhausted,
    // tree-fpt-solver
    NotATree,
    ColorCapExceeded,
    NonCanonicalKey,
    // reductions
    KOutOfRange,
    MTooSmall,
    BadAssignmentLength,
    MalformedSolution,
    NotCubic,
    NotACover,
    ContainsUniversalInterval,
    PartialGadget,
    NotACoverAfterDecode,
    // io
    IoError,
    ParseError,
    NotTwoCnf,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

} // namespace mcs

#endif
