#include "lambdamaps/error.hpp"

namespace lambdamaps {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

}  // namespace lambdamaps
