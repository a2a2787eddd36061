#include <sscodes/errors.hpp>
#include <sscodes/trace.hpp>

#include "detail.hpp"

namespace sscodes
{
    auto trace(const Code & code, const DescendantSet & observation, std::size_t t, std::size_t subset_cap)
        -> TraceResult
    {
        if (t == 0)
            throw InvalidArgument("coalition size bound t must be at least 1");
        if (subset_cap > 40)
            throw InvalidArgument("subset cap above 40 is not supported");

        TraceResult result;
        result.candidates = descendant_members(code, observation, &result.visits);
        const auto & cand = result.candidates.members;
        if (cand.empty())
            throw InvalidArgument("no codeword lies in the observed descendant set; the observation is inconsistent with the code");
        if (cand.size() > subset_cap)
            throw ResourceLimit(std::to_string(cand.size()) + " codewords fit the observation, above the subset cap of "
                + std::to_string(subset_cap));

        const detail::PackedCode packed{code};
        bool unmatched = false;
        const auto target = packed.pack(observation, unmatched);
        // A symbol no codeword carries can never be reproduced.
        if (unmatched)
            return result;

        const auto inter = detail::subset_intersection(packed, cand, target);
        std::vector<std::uint32_t> guilty;
        for (std::size_t b = 0; b < cand.size(); ++b)
            if ((inter >> b) & 1)
                guilty.push_back(cand[b]);
        result.guilty = Coalition{std::move(guilty)};
        result.certified = ! result.guilty.empty() && result.guilty.size() <= t
            && descendant(code, result.guilty) == observation;
        return result;
    }
}
