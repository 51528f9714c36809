#ifndef HOROCALC_COVER_COUNTING_HPP
#define HOROCALC_COVER_COUNTING_HPP

#include <cstdint>
#include <vector>

#include "horocalc/scalar.hpp"

namespace horocalc {

/**
 * A monotone cover instance: variables are candidate sets, each covering a
 * list of targets. A selection of variables is a model when every target is
 * covered by at least one selected variable.
 */
struct CoverInstance
{
    std::size_t num_targets = 0;
    /// covers[v] lists the targets covered by variable v.
    std::vector<std::vector<std::uint32_t>> covers;

    std::size_t num_vars() const { return covers.size(); }
};

struct CoverCountStats
{
    std::uint64_t nodes = 0;
    std::uint64_t cache_hits = 0;
    std::uint64_t components = 0;
};

/// Default node budget, overridable through the HOROCALC_BUDGET environment variable.
std::uint64_t default_node_budget();

/// Exact number of models. Throws BudgetExceeded after `node_budget` search nodes.
Integer count_covers(const CoverInstance& inst, std::uint64_t node_budget,
                     CoverCountStats* stats = nullptr);
inline Integer count_covers(const CoverInstance& inst)
{
    return count_covers(inst, default_node_budget());
}

/// All models as sorted variable index lists; only for at most 24 variables.
std::vector<std::vector<std::uint32_t>> enumerate_covers(const CoverInstance& inst);

} // namespace horocalc

#endif // HOROCALC_COVER_COUNTING_HPP
