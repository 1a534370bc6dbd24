#pragma once

#include "dissoc/graph.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace dissoc::harness {

/// Growth constants of the general and triangle-free bounds.
struct BoundConstants {
    static inline const double alpha = std::pow(10.0, 0.2);
    static inline const double beta = std::pow(6.0, 0.25);
    static constexpr double path_coefficient = 0.81;
    /// Relative slack applied to the floating-point side of every bound.
    static constexpr double relative_guard = 1e-9;
};

/// lhs <= rhs up to the relative guard.
inline bool within_bound(double lhs, double rhs) { return lhs <= rhs * (1 + BoundConstants::relative_guard); }
/// lhs < rhs with at least the relative guard of room.
inline bool strictly_below(double lhs, double rhs) { return lhs < rhs * (1 - BoundConstants::relative_guard); }
inline bool equal_to_bound(double lhs, double rhs)
{
    return std::abs(lhs - rhs) <= rhs * BoundConstants::relative_guard;
}

struct SweepFilter {
    bool triangle_free = false;
    bool bipartite = false;
    bool connected_only = false;

    bool admits(const Graph& g) const;
    friend bool operator==(const SweepFilter&, const SweepFilter&) = default;
};

/// "all", or a comma list such as "triangle-free,connected".
std::string to_string(const SweepFilter& f);
/// Inverse of to_string; throws InvalidSpec.
SweepFilter parse_sweep_filter(const std::string& text);

enum class Quantity { phi, phi_max };
std::string to_string(Quantity q);
Quantity parse_quantity(const std::string& text);

struct ExtremalClass {
    std::string canonical;      ///< canonical_form of the class
    std::string representative; ///< graph6 of the lowest edge mask attaining it
    std::uint64_t labeled_count = 0;
    friend bool operator==(const ExtremalClass&, const ExtremalClass&) = default;
};

struct ExtremalRecord {
    int order = 0;
    SweepFilter filter;
    Quantity quantity = Quantity::phi;
    std::uint64_t max_value = 0;
    std::vector<ExtremalClass> extremal; ///< sorted by canonical form
    std::uint64_t graphs_scanned = 0;    ///< labeled graphs visited
    std::uint64_t graphs_admitted = 0;   ///< of which passed the filter
    double elapsed_ms = 0;
    std::vector<std::string> violations;

    std::vector<std::string> canonical_forms() const;
};

/// Orders up to this run by default; one more needs allow_long.
inline constexpr int kSweepMaxOrder = 7;
inline constexpr int kSweepLongOrder = 8;

struct SweepOptions {
    bool allow_long = false;
    unsigned threads = 0;     ///< 0: hardware concurrency
    unsigned chunks = 0;      ///< 0: a multiple of the thread count
};

/// Scans all 2^C(order,2) labeled graphs by edge mask and records the
/// maximum of the requested quantity over admitted graphs, with the
/// attaining graphs grouped by isomorphism class. The result does not
/// depend on threads or chunks (except elapsed_ms).
ExtremalRecord sweep(int order, const SweepFilter& filter, Quantity quantity, const SweepOptions& options = {});

nlohmann::json to_json(const ExtremalRecord& r);

/// Outcome of one verification suite.
struct Report {
    std::string suite;
    std::uint64_t checks = 0;
    struct Violation {
        std::string check;
        std::string witness; ///< graph6, empty when not graph-specific
        std::string detail;
    };
    std::vector<Violation> violations;
    double elapsed_ms = 0;
    nlohmann::json details = nlohmann::json::object();

    bool passed() const noexcept { return violations.empty(); }
    void fail(std::string check, std::string witness, std::string detail)
    {
        violations.push_back({std::move(check), std::move(witness), std::move(detail)});
    }
};

nlohmann::json to_json(const Report& r);

/// Closed-form maxima of the exact-value theorems on their extremal families.
Report verify_family_values(int max_t);

struct BoundsOptions {
    std::uint64_t seed = 1;
    int spot_min_order = 8;
    int spot_max_order = 14;
    int spot_samples = 10; ///< per (order, edge probability, class)
    int bipartite_samples = 200;
    int bipartite_order = 12;
    bool allow_long = false; ///< permits an exhaustive pass at order 8
};

/// Upper bounds on phi and phi' with their equality characterizations:
/// exhaustive for orders <= order_max, randomized spot checks beyond.
/// Details include the unfiltered and triangle-free sweeps at order_max.
Report verify_asymptotic_bounds(int order_max, const BoundsOptions& options = {});

struct RecurrenceOptions {
    int trials = 200;
    int min_order = 1;
    int max_order = 10;
    std::uint64_t seed = 1;
};

/// Branching inequalities and multiplicativity over disjoint union.
/// Runs trials graphs for the pivot split, trials/2 leaf instances,
/// trials/4 double-leaf instances and trials/2 disjoint pairs.
Report verify_recurrences(const RecurrenceOptions& options = {});

/// Path and cycle bounds for 1 <= n <= n_max (n_max <= 20).
Report verify_path_cycle_bounds(int n_max);

/// Disjoint union of components each equal to K_5 minus a matching.
bool is_k5star_union(const Graph& g);
/// Disjoint union of 4-cycles.
bool is_c4_union(const Graph& g);

} // namespace dissoc::harness
