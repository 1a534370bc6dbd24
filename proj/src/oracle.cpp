#include "dissoc/oracle.hpp"

#include "dissoc/errors.hpp"

#include <string>

namespace dissoc::oracle {

namespace {

void check_cap(const Graph& g)
{
    if (g.order() > kMaxOrder)
        throw UnsupportedSize("brute-force oracle supports order <= " + std::to_string(kMaxOrder) + ", got " +
                              std::to_string(g.order()));
}

// Calls visit(F) for every dissociation set F, in increasing mask order.
template <class F> void scan_dissociation_sets(const Graph& g, const Options& options, F&& visit)
{
    check_cap(g);
    const auto deadline = std::chrono::steady_clock::now() + options.time_limit;
    const std::uint64_t limit = std::uint64_t{1} << g.order();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if ((mask & 0xFFFF) == 0xFFFF && std::chrono::steady_clock::now() > deadline)
            throw TimeLimitExceeded("brute-force oracle exceeded its time limit at order " + std::to_string(g.order()));
        const VertexSet f(mask);
        if (is_dissociation(g, f)) visit(f);
    }
}

} // namespace

bool is_dissociation(const Graph& g, VertexSet f)
{
    bool ok = true;
    f.for_each([&](int v) {
        if ((g.rows()[v] & f).size() > 1) ok = false;
    });
    return ok;
}

bool is_maximal(const Graph& g, VertexSet f)
{
    if (!is_dissociation(g, f)) throw ContractError("is_maximal called on a non-dissociation set " + to_string(f));
    bool maximal = true;
    (g.vertices() - f).for_each([&](int w) {
        auto extended = f;
        extended.insert(w);
        if (is_dissociation(g, extended)) maximal = false;
    });
    return maximal;
}

DissociationFamily enumerate_maximal_bruteforce(const Graph& g, const Options& options)
{
    std::vector<VertexSet> sets;
    scan_dissociation_sets(g, options, [&](VertexSet f) {
        if (is_maximal(g, f)) sets.push_back(f);
    });
    return DissociationFamily(std::move(sets), g.order());
}

int dissociation_number(const Graph& g, const Options& options)
{
    int best = 0;
    scan_dissociation_sets(g, options, [&](VertexSet f) { best = std::max(best, f.size()); });
    return best;
}

std::uint64_t count_maximum_bruteforce(const Graph& g, const Options& options)
{
    int best = -1;
    std::uint64_t count = 0;
    scan_dissociation_sets(g, options, [&](VertexSet f) {
        if (f.size() > best) {
            best = f.size();
            count = 0;
        }
        if (f.size() == best) ++count;
    });
    return count;
}

} // namespace dissoc::oracle
