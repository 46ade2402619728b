#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bredon/cohomology.hpp"

namespace bredon {

/// A degree n at which the quantity entering a dimension formula is nonzero,
/// with the group itself.
struct DegreeWitness {
    int n = 0;
    CohomologyGroup group;
};

/// One row of a dimension table: a poset element J or an Omega class.
struct ClassEntry {
    std::string label;
    std::vector<std::string> members;
    std::vector<DegreeWitness> nonzero;

    std::optional<int> max_degree() const
    {
        std::optional<int> m;
        for (const auto& w : nonzero)
            if (!m || w.n > *m)
                m = w.n;
        return m;
    }
};

/// Result of a "max { n : ... != 0 }" formula. `dimension` is empty only when
/// every entry vanishes in all degrees.
struct DimensionReport {
    std::optional<int> dimension;
    std::vector<ClassEntry> entries;

    void recompute_dimension()
    {
        dimension.reset();
        for (const auto& e : entries)
            if (auto m = e.max_degree(); m && (!dimension || *m > *dimension))
                dimension = m;
    }
};

}  // namespace bredon
