#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>

#include "padic/detail/poly_ring.hpp"

namespace padic::detail {

/// Teichmuller representative of one residue class and its inverse, at the
/// full precision of the owning context.
struct TeichmullerEntry {
    Coeffs omega;
    Coeffs omega_inverse;
};

/// Memo tables owned by a context. Entries are immutable once inserted.
struct ContextCaches {
    std::mutex mutex;
    std::unordered_map<long, std::shared_ptr<const TeichmullerEntry>> teichmuller;
};

}  // namespace padic::detail
