#pragma once

#include "flatstir/bigcount.hpp"

#include <cstdint>
#include <string_view>

namespace flatstir {

/// Cap on the number of objects a single generator call may produce.
struct EnumerationBudget {
    static constexpr std::uint64_t kDefaultCap = 50'000'000;
    std::uint64_t max_objects = kDefaultCap;
};

/// Throws BudgetExceeded when `projected` objects would exceed the cap.
void require_within_budget(const BigCount& projected, const EnumerationBudget& budget,
                           std::string_view what);

/// Worker count used when callers pass 0.
unsigned default_thread_count();

}  // namespace flatstir
