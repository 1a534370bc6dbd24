#pragma once

#include "dissoc/graph.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dissoc {

struct FamilySpec;

namespace family {
struct Path { int n; };
struct Cycle { int n; };
struct Complete { int n; };
struct CompleteBipartite { int m; int n; };
/// K_m with the matching {0-1, 2-3, ...} of `deleted` edges removed.
struct KStar { int m; int deleted; };
struct DisjointUnion { std::vector<FamilySpec> parts; };
} // namespace family

/// Declarative description of a named graph family member.
struct FamilySpec {
    std::variant<family::Path, family::Cycle, family::Complete, family::CompleteBipartite,
                 family::KStar, family::DisjointUnion>
        kind;

    static FamilySpec path(int n) { return {family::Path{n}}; }
    static FamilySpec cycle(int n) { return {family::Cycle{n}}; }
    static FamilySpec complete(int n) { return {family::Complete{n}}; }
    static FamilySpec complete_bipartite(int m, int n) { return {family::CompleteBipartite{m, n}}; }
    static FamilySpec k_star(int m, int deleted) { return {family::KStar{m, deleted}}; }
    static FamilySpec disjoint_union(std::vector<FamilySpec> parts) { return {family::DisjointUnion{std::move(parts)}}; }
    /// `copies` disjoint copies of `part`.
    static FamilySpec times(int copies, const FamilySpec& part);
};

/// Throws InvalidSpec naming the violated constraint.
void validate(const FamilySpec& spec);

Graph build(const FamilySpec& spec);

/// Parses the grammar
///   path:N | cycle:N | complete:N | kmn:M,N | kstar:M,I | union:(SPEC;SPEC;...)
/// Throws InvalidSpec quoting the offending token.
FamilySpec parse_family_spec(std::string_view text);

/// Inverse of parse_family_spec.
std::string to_string(const FamilySpec& spec);

/// C_3 x K_2: triangles 0-1-2 and 3-4-5 joined by the rungs i - i+3.
Graph prism();

} // namespace dissoc
