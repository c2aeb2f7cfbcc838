#include "qfactor/guards.hpp"

#include <cstdlib>
#include <limits>
#include <string_view>

namespace qfactor {

Guards Guards::unlimited()
{
    constexpr auto kMax = std::numeric_limits<std::size_t>::max();
    return Guards{kMax, kMax, kMax, kMax};
}

bool Guards::environment_override()
{
    const char *value = std::getenv("QFACTOR_GUARD_OVERRIDE");
    return value != nullptr && std::string_view(value) == "1";
}

Guards Guards::from_environment() { return environment_override() ? unlimited() : Guards{}; }

} // namespace qfactor
