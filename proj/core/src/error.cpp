#include "chg/error.hpp"

#include <utility>

namespace chg {

ExhaustionError::ExhaustionError(const std::string& what,
                                 std::vector<AttemptStats> attempts)
    : Error(what), attempts_(std::move(attempts)) {}

}  // namespace chg
