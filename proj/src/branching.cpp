#include "dissoc/branching.hpp"

#include "dissoc/errors.hpp"

#include <string>

namespace dissoc {

void check_enumeration_cap(const Graph& g)
{
    if (g.order() > kEnumerationMaxOrder)
        throw UnsupportedSize("branching enumerator supports order <= " + std::to_string(kEnumerationMaxOrder) +
                              ", got " + std::to_string(g.order()));
}

DissociationFamily enumerate_maximal(const Graph& g)
{
    std::vector<VertexSet> sets;
    for_each_maximal(g, [&](VertexSet f) { sets.push_back(f); });
    return DissociationFamily(std::move(sets), g.order());
}

CountResult count_rows(std::span<const VertexSet> rows)
{
    const auto start = std::chrono::steady_clock::now();
    CountResult r;
    r.psi = -1;
    detail::for_each_maximal_rows(rows, [&](VertexSet f) {
        ++r.phi;
        const int s = f.size();
        if (s > r.psi) {
            r.psi = s;
            r.phi_max = 0;
        }
        if (s == r.psi) ++r.phi_max;
    });
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

CountResult count(const Graph& g)
{
    check_enumeration_cap(g);
    return count_rows(g.rows());
}

PivotPartition classify_by_pivot(const Graph& g, int v)
{
    const auto nv = g.neighbors(v);
    PivotPartition p;
    for_each_maximal(g, [&](VertexSet f) {
        if (!f.contains(v))
            ++p.excluded_count;
        else if (nv.intersects(f))
            ++p.degree1_count;
        else
            ++p.degree0_count;
    });
    return p;
}

namespace {

// Same three-way recursion as the enumerator, abandoning any subtree whose
// partial set plus every residual vertex cannot reach the incumbent size.
class MaximumSearch {
public:
    explicit MaximumSearch(std::span<const VertexSet> rows) : rows_(rows) {}

    VertexSet run(int order)
    {
        recurse(VertexSet::range(order), VertexSet{});
        return best_;
    }

private:
    void offer(VertexSet f)
    {
        if (f.size() > best_.size() || (f.size() == best_.size() && lex_less(f, best_))) best_ = f;
    }

    void recurse(VertexSet alive, VertexSet partial)
    {
        if (partial.size() + alive.size() < best_.size()) return;
        int pivot = -1;
        int best_degree = -1;
        alive.for_each([&](int v) {
            const int d = (rows_[v] & alive).size();
            if (d > best_degree) {
                best_degree = d;
                pivot = v;
            }
        });
        if (best_degree <= 1) {
            offer(partial | alive);
            return;
        }
        const auto v_bit = VertexSet::singleton(pivot);
        const auto nv = rows_[pivot] & alive;
        recurse(alive - v_bit, partial);
        recurse(alive - (nv | v_bit), partial | v_bit);
        nv.for_each([&](int u) {
            recurse(alive - (nv | v_bit | rows_[u] | VertexSet::singleton(u)), partial | v_bit | VertexSet::singleton(u));
        });
    }

    std::span<const VertexSet> rows_;
    VertexSet best_;
};

} // namespace

VertexSet maximum_dissociation_set(const Graph& g)
{
    check_enumeration_cap(g);
    return MaximumSearch(g.rows()).run(g.order());
}

} // namespace dissoc
