#include "horocalc/cover_counting.hpp"

#include <cstdlib>
#include <map>
#include <string>

#include <boost/dynamic_bitset.hpp>

namespace horocalc {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

class Counter
{
public:
    Counter(const CoverInstance& inst, std::uint64_t budget) : inst_(inst), budget_(budget)
    {
        covered_by_.resize(inst.num_targets);
        for (std::size_t v = 0; v < inst.num_vars(); ++v)
            for (std::uint32_t t : inst.covers[v])
            {
                if (t >= inst.num_targets)
                    throw std::out_of_range("cover target index out of range");
                covered_by_[t].push_back(static_cast<std::uint32_t>(v));
            }
    }

    Integer run()
    {
        Bits vars(inst_.num_vars());
        vars.set();
        Bits targets(inst_.num_targets);
        targets.set();
        return count(std::move(vars), std::move(targets));
    }

    CoverCountStats stats;

private:
    Integer count(Bits vars, Bits targets)
    {
        if (++stats.nodes > budget_)
            throw BudgetExceeded("cover counting exceeded " + std::to_string(budget_) +
                                 " search nodes; count is at most 2^" +
                                 std::to_string(inst_.num_vars()));
        // Variables touching no uncovered target are free.
        unsigned free_vars = 0;
        for (auto v = vars.find_first(); v != Bits::npos; v = vars.find_next(v))
        {
            bool useful = false;
            for (std::uint32_t t : inst_.covers[v])
                if (targets.test(t))
                {
                    useful = true;
                    break;
                }
            if (!useful)
            {
                vars.reset(v);
                ++free_vars;
            }
        }
        Integer factor = Integer(1) << free_vars;
        if (targets.none())
            return factor;
        for (auto t = targets.find_first(); t != Bits::npos; t = targets.find_next(t))
            if (cover_count(t, vars) == 0)
                return 0;

        auto key = std::make_pair(vars, targets);
        if (auto it = memo_.find(key); it != memo_.end())
        {
            ++stats.cache_hits;
            return factor * it->second;
        }

        std::vector<std::pair<Bits, Bits>> parts = components(vars, targets);
        Integer result = 1;
        if (parts.size() > 1)
        {
            stats.components += parts.size();
            for (auto& [pv, pt] : parts)
            {
                result *= count(std::move(pv), std::move(pt));
                if (result == 0)
                    break;
            }
        }
        else
            result = branch(vars, targets);
        memo_.emplace(std::move(key), result);
        return factor * result;
    }

    std::size_t cover_count(std::size_t t, const Bits& vars) const
    {
        std::size_t n = 0;
        for (std::uint32_t v : covered_by_[t])
            n += vars.test(v);
        return n;
    }

    // Target with the fewest live covers; its covers are split into disjoint
    // cases by the first selected one.
    Integer branch(const Bits& vars, const Bits& targets)
    {
        std::size_t best = Bits::npos, best_count = 0;
        for (auto t = targets.find_first(); t != Bits::npos; t = targets.find_next(t))
        {
            std::size_t c = cover_count(t, vars);
            if (best == Bits::npos || c < best_count)
            {
                best = t;
                best_count = c;
            }
        }
        Integer total = 0;
        Bits rest = vars;
        for (std::uint32_t v : covered_by_[best])
        {
            if (!vars.test(v))
                continue;
            rest.reset(v);
            Bits left = targets;
            for (std::uint32_t t : inst_.covers[v])
                left.reset(t);
            total += count(rest, std::move(left));
        }
        return total;
    }

    std::vector<std::pair<Bits, Bits>> components(const Bits& vars, const Bits& targets) const
    {
        std::vector<std::pair<Bits, Bits>> out;
        Bits seen(inst_.num_targets);
        for (auto start = targets.find_first(); start != Bits::npos;
             start = targets.find_next(start))
        {
            if (seen.test(start))
                continue;
            Bits cv(inst_.num_vars()), ct(inst_.num_targets);
            std::vector<std::size_t> stack = {start};
            seen.set(start);
            while (!stack.empty())
            {
                std::size_t t = stack.back();
                stack.pop_back();
                ct.set(t);
                for (std::uint32_t v : covered_by_[t])
                {
                    if (!vars.test(v) || cv.test(v))
                        continue;
                    cv.set(v);
                    for (std::uint32_t u : inst_.covers[v])
                        if (targets.test(u) && !seen.test(u))
                        {
                            seen.set(u);
                            stack.push_back(u);
                        }
                }
            }
            out.emplace_back(std::move(cv), std::move(ct));
        }
        return out;
    }

    const CoverInstance& inst_;
    std::uint64_t budget_;
    std::vector<std::vector<std::uint32_t>> covered_by_;
    std::map<std::pair<Bits, Bits>, Integer> memo_;
};

} // namespace

std::uint64_t default_node_budget()
{
    if (const char* env = std::getenv("HOROCALC_BUDGET"))
    {
        try
        {
            return std::stoull(env);
        }
        catch (const std::exception&)
        {
            throw std::invalid_argument(std::string("HOROCALC_BUDGET is not a number: ") + env);
        }
    }
    return 5'000'000;
}

Integer count_covers(const CoverInstance& inst, std::uint64_t node_budget, CoverCountStats* stats)
{
    Counter counter(inst, node_budget);
    Integer result = counter.run();
    if (stats)
        *stats = counter.stats;
    return result;
}

std::vector<std::vector<std::uint32_t>> enumerate_covers(const CoverInstance& inst)
{
    const std::size_t n = inst.num_vars();
    if (n > 24)
        throw BudgetExceeded("enumeration limited to 24 variables, got " + std::to_string(n));
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<unsigned> hits(inst.num_targets);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask)
    {
        std::fill(hits.begin(), hits.end(), 0u);
        for (std::size_t v = 0; v < n; ++v)
            if (mask >> v & 1)
                for (std::uint32_t t : inst.covers[v])
                    hits[t] = 1;
        if (std::find(hits.begin(), hits.end(), 0u) != hits.end())
            continue;
        std::vector<std::uint32_t> model;
        for (std::size_t v = 0; v < n; ++v)
            if (mask >> v & 1)
                model.push_back(static_cast<std::uint32_t>(v));
        out.push_back(std::move(model));
    }
    return out;
}

} // namespace horocalc
