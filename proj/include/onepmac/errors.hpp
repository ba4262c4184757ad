#pragma once

#include <stdexcept>
#include <string>

namespace onepmac {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define ONEPMAC_ERROR(Name)            \
  struct Name : Error {                \
    using Error::Error;                \
  }

ONEPMAC_ERROR(ShapeMismatch);
ONEPMAC_ERROR(NotStochastic);
ONEPMAC_ERROR(IndexOutOfRange);
ONEPMAC_ERROR(NonBinaryRestriction);
ONEPMAC_ERROR(IncompleteCoords);
ONEPMAC_ERROR(UnsupportedOutputSize);
ONEPMAC_ERROR(BadSubsetSize);
ONEPMAC_ERROR(EmptyInput);
ONEPMAC_ERROR(DegenerateInput);
ONEPMAC_ERROR(DimensionMismatch);
ONEPMAC_ERROR(InvalidDim);
ONEPMAC_ERROR(InvalidState);
ONEPMAC_ERROR(InvalidChannel);
ONEPMAC_ERROR(ChannelCountMismatch);
ONEPMAC_ERROR(InvalidPartition);
ONEPMAC_ERROR(InvalidKraus);
ONEPMAC_ERROR(InvalidPovm);
ONEPMAC_ERROR(NotHermitian);
ONEPMAC_ERROR(RankMismatch);
ONEPMAC_ERROR(NotNormalized);
ONEPMAC_ERROR(UnsupportedDim);
ONEPMAC_ERROR(ParseError);

#undef ONEPMAC_ERROR

}  // namespace onepmac
