#include "dissoc/harness.hpp"

#include "dissoc/canonical.hpp"
#include "dissoc/detail/branching_engine.hpp"
#include "dissoc/errors.hpp"
#include "dissoc/graph6.hpp"
#include "dissoc/random_graphs.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>

namespace dissoc::harness {

namespace {

// Rough single-core throughput used only for the refusal message.
constexpr double kGraphsPerSecond = 1.0e6;

struct Partial {
    std::uint64_t max_value = 0;
    bool any = false;
    std::vector<std::uint64_t> masks;
    std::uint64_t admitted = 0;
    std::vector<std::string> violations;

    void offer(std::uint64_t value, std::uint64_t mask)
    {
        if (!any || value > max_value) {
            any = true;
            max_value = value;
            masks.clear();
        }
        if (value == max_value) masks.push_back(mask);
    }

    void merge(const Partial& other)
    {
        if (other.any) {
            if (!any || other.max_value > max_value) {
                any = true;
                max_value = other.max_value;
                masks.clear();
            }
            if (other.max_value == max_value) masks.insert(masks.end(), other.masks.begin(), other.masks.end());
        }
        admitted += other.admitted;
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

bool rows_triangle_free(std::span<const VertexSet> rows)
{
    for (std::size_t u = 0; u < rows.size(); ++u)
        for (auto b = rows[u].bits() >> (u + 1); b != 0; b &= b - 1) {
            const auto v = u + 1 + static_cast<std::size_t>(std::countr_zero(b));
            if (rows[u].intersects(rows[v])) return false;
        }
    return true;
}

bool rows_connected(std::span<const VertexSet> rows)
{
    const int n = static_cast<int>(rows.size());
    if (n <= 1) return true;
    auto seen = VertexSet::singleton(0);
    auto frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int v) { next |= rows[v]; });
        frontier = next - seen;
        seen |= frontier;
    }
    return seen == VertexSet::range(n);
}

bool rows_bipartite(std::span<const VertexSet> rows)
{
    const int n = static_cast<int>(rows.size());
    std::array<int, kSweepLongOrder> color{};
    color.fill(-1);
    std::array<int, kSweepLongOrder> queue{};
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            const int v = queue[head++];
            bool clash = false;
            rows[v].for_each([&](int w) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    queue[tail++] = w;
                } else if (color[w] == color[v]) {
                    clash = true;
                }
            });
            if (clash) return false;
        }
    }
    return true;
}

void fill_rows(int n, std::uint64_t mask, std::array<VertexSet, kSweepLongOrder>& rows)
{
    rows.fill(VertexSet{});
    int k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if ((mask >> k) & 1U) {
                rows[u].insert(v);
                rows[v].insert(u);
            }
}

bool admits_rows(const SweepFilter& f, std::span<const VertexSet> rows, std::vector<std::string>& violations,
                 std::uint64_t mask)
{
    const bool bip = f.bipartite ? rows_bipartite(rows) : true;
    if (!bip) return false;
    if (f.triangle_free || f.bipartite) {
        const bool tri_free = rows_triangle_free(rows);
        if (!tri_free) {
            if (f.bipartite)
                violations.push_back("bipartite filter admitted a graph with a triangle (edge mask " +
                                     std::to_string(mask) + ")");
            return false;
        }
    }
    if (f.connected_only && !rows_connected(rows)) return false;
    return true;
}

Partial scan_range(int n, std::uint64_t lo, std::uint64_t hi, const SweepFilter& filter, Quantity quantity)
{
    Partial part;
    std::array<VertexSet, kSweepLongOrder> storage{};
    const std::span<const VertexSet> rows(storage.data(), static_cast<std::size_t>(n));
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        fill_rows(n, mask, storage);
        if (!admits_rows(filter, rows, part.violations, mask)) continue;
        ++part.admitted;
        std::uint64_t phi = 0, phi_max = 0;
        int psi = -1;
        detail::for_each_maximal_rows(rows, [&](VertexSet f) {
            ++phi;
            const int s = f.size();
            if (s > psi) {
                psi = s;
                phi_max = 0;
            }
            if (s == psi) ++phi_max;
        });
        part.offer(quantity == Quantity::phi ? phi : phi_max, mask);
    }
    return part;
}

} // namespace

bool SweepFilter::admits(const Graph& g) const
{
    if (bipartite && !is_bipartite(g)) return false;
    if ((triangle_free || bipartite) && !is_triangle_free(g)) return false;
    if (connected_only && !is_connected(g)) return false;
    return true;
}

std::string to_string(const SweepFilter& f)
{
    std::vector<std::string> parts;
    if (f.triangle_free) parts.emplace_back("triangle-free");
    if (f.bipartite) parts.emplace_back("bipartite");
    if (f.connected_only) parts.emplace_back("connected");
    if (parts.empty()) return "all";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "," + parts[i];
    return out;
}

SweepFilter parse_sweep_filter(const std::string& text)
{
    SweepFilter f;
    if (text == "all" || text.empty()) return f;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "triangle-free")
            f.triangle_free = true;
        else if (item == "bipartite")
            f.bipartite = true;
        else if (item == "connected")
            f.connected_only = true;
        else
            throw InvalidSpec("unknown sweep filter '" + item + "' (expected all, triangle-free, bipartite, connected)");
    }
    return f;
}

std::string to_string(Quantity q) { return q == Quantity::phi ? "phi" : "phi_max"; }

Quantity parse_quantity(const std::string& text)
{
    if (text == "phi") return Quantity::phi;
    if (text == "phi_max" || text == "phi-max") return Quantity::phi_max;
    throw InvalidSpec("unknown quantity '" + text + "' (expected phi or phi_max)");
}

std::vector<std::string> ExtremalRecord::canonical_forms() const
{
    std::vector<std::string> out;
    for (const auto& c : extremal) out.push_back(c.canonical);
    return out;
}

ExtremalRecord sweep(int order, const SweepFilter& filter, Quantity quantity, const SweepOptions& options)
{
    if (order < 0) throw InvalidSpec("sweep order must be nonnegative");
    const std::uint64_t total = std::uint64_t{1} << edge_bit_count(order);
    if (order > kSweepLongOrder)
        throw UnsupportedSize("exhaustive sweeps are limited to order <= " + std::to_string(kSweepLongOrder));
    if (order > kSweepMaxOrder && !options.allow_long) {
        std::ostringstream msg;
        msg << "order " << order << " sweep visits " << total << " labeled graphs (estimated ~"
            << static_cast<long long>(static_cast<double>(total) / kGraphsPerSecond / 60.0 + 1)
            << " min on one core); pass --allow-long to run it";
        throw UnsupportedSize(msg.str());
    }

    const auto start = std::chrono::steady_clock::now();
    const unsigned threads =
        options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    const std::uint64_t chunks =
        std::min<std::uint64_t>(total, options.chunks ? options.chunks : std::max<std::uint64_t>(threads * 8, 1));

    std::vector<Partial> partials(chunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
            const auto lo = total * c / chunks;
            const auto hi = total * (c + 1) / chunks;
            partials[c] = scan_range(order, lo, hi, filter, quantity);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    Partial merged;
    for (const auto& p : partials) merged.merge(p);

    ExtremalRecord r;
    r.order = order;
    r.filter = filter;
    r.quantity = quantity;
    r.max_value = merged.max_value;
    r.graphs_scanned = total;
    r.graphs_admitted = merged.admitted;
    r.violations = std::move(merged.violations);

    std::sort(merged.masks.begin(), merged.masks.end());
    std::map<std::string, ExtremalClass> classes;
    for (auto mask : merged.masks) {
        const auto g = graph_from_edge_mask(order, mask);
        auto [it, inserted] = classes.try_emplace(canonical_form(g));
        if (inserted) {
            it->second.canonical = it->first;
            it->second.representative = serialize_graph6(g);
        }
        ++it->second.labeled_count;
    }
    for (auto& [key, cls] : classes) r.extremal.push_back(std::move(cls));

    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

nlohmann::json to_json(const ExtremalRecord& r)
{
    nlohmann::json classes = nlohmann::json::array();
    nlohmann::json g6 = nlohmann::json::array();
    for (const auto& c : r.extremal) {
        g6.push_back(c.canonical);
        classes.push_back({{"canonical", c.canonical},
                           {"representative", c.representative},
                           {"labeled_count", c.labeled_count}});
    }
    return {{"order", r.order},
            {"filter", to_string(r.filter)},
            {"quantity", to_string(r.quantity)},
            {"max_value", r.max_value},
            {"extremal_graph6", g6},
            {"extremal_classes", classes},
            {"graphs_scanned", r.graphs_scanned},
            {"graphs_admitted", r.graphs_admitted},
            {"elapsed_ms", r.elapsed_ms},
            {"violations", r.violations}};
}

nlohmann::json to_json(const Report& r)
{
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"check", v.check}, {"witness_graph6", v.witness}, {"detail", v.detail}});
    return {{"suite", r.suite},
            {"passed", r.passed()},
            {"checks", r.checks},
            {"violations", violations},
            {"elapsed_ms", r.elapsed_ms},
            {"details", r.details}};
}

} // namespace dissoc::harness
