#pragma once

#include <stdexcept>

namespace quadgraph {

// Refusal to start a computation whose estimated kernel cost exceeds the
// configured vertex-visit budget.  The message carries the estimate and a
// cheaper alternative.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace quadgraph
