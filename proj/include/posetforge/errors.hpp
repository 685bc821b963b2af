#pragma once

#include <stdexcept>
#include <string>

namespace posetforge {

// Base of every error raised by the library. Each subclass names one failed
// precondition so callers (and the CLI) can map it to a diagnostic.
class PosetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define POSETFORGE_ERROR(Name)                    \
  class Name : public PosetError {                \
   public:                                        \
    using PosetError::PosetError;                 \
  }

POSETFORGE_ERROR(CycleError);
POSETFORGE_ERROR(NoMinimumError);
POSETFORGE_ERROR(NoMaximumError);
POSETFORGE_ERROR(DuplicateLabelError);
POSETFORGE_ERROR(InvalidIndexError);
POSETFORGE_ERROR(NotComparableError);
POSETFORGE_ERROR(NotALatticeError);
POSETFORGE_ERROR(ResourceLimitError);
POSETFORGE_ERROR(SizeLimitError);
POSETFORGE_ERROR(NotRankedError);
POSETFORGE_ERROR(RankBoundError);
POSETFORGE_ERROR(PartitionError);
POSETFORGE_ERROR(NotHomogeneousError);
POSETFORGE_ERROR(HypothesisError);
POSETFORGE_ERROR(NotCoatomError);
POSETFORGE_ERROR(TooSmallError);
POSETFORGE_ERROR(ZeroMissingError);
POSETFORGE_ERROR(NotAtomsError);
POSETFORGE_ERROR(NotCompleteError);
POSETFORGE_ERROR(NotACrosscutError);
POSETFORGE_ERROR(FormatError);

#undef POSETFORGE_ERROR

}  // namespace posetforge
