#include "dissoc/families.hpp"

#include "dissoc/errors.hpp"

#include <charconv>
#include <string>

namespace dissoc {

namespace {

template <class... Fs> struct overloaded : Fs... { using Fs::operator()...; };
template <class... Fs> overloaded(Fs...) -> overloaded<Fs...>;

void require(bool ok, const std::string& what)
{
    if (!ok) throw InvalidSpec(what);
}

int order_of(const FamilySpec& spec)
{
    return std::visit(overloaded{
                          [](const family::Path& p) { return p.n; },
                          [](const family::Cycle& c) { return c.n; },
                          [](const family::Complete& c) { return c.n; },
                          [](const family::CompleteBipartite& k) { return k.m + k.n; },
                          [](const family::KStar& k) { return k.m; },
                          [](const family::DisjointUnion& u) {
                              int n = 0;
                              for (const auto& p : u.parts) n += order_of(p);
                              return n;
                          },
                      },
                      spec.kind);
}

Graph complete_minus_matching(int m, int deleted)
{
    std::vector<Edge> edges;
    for (int v = 1; v < m; ++v)
        for (int u = 0; u < v; ++u)
            if (!(u % 2 == 0 && v == u + 1 && u / 2 < deleted)) edges.emplace_back(u, v);
    return Graph(m, edges);
}

} // namespace

FamilySpec FamilySpec::times(int copies, const FamilySpec& part)
{
    return disjoint_union(std::vector<FamilySpec>(static_cast<std::size_t>(copies), part));
}

void validate(const FamilySpec& spec)
{
    std::visit(overloaded{
                   [](const family::Path& p) { require(p.n >= 1, "path requires n >= 1"); },
                   [](const family::Cycle& c) { require(c.n >= 3, "cycle requires n >= 3"); },
                   [](const family::Complete& c) { require(c.n >= 1, "complete requires n >= 1"); },
                   [](const family::CompleteBipartite& k) {
                       require(k.m >= 0 && k.n >= 0 && k.m + k.n >= 1, "kmn requires m, n >= 0 and m + n >= 1");
                   },
                   [](const family::KStar& k) {
                       require(k.m >= 1, "kstar requires m >= 1");
                       require(k.deleted >= 0 && k.deleted <= k.m / 2,
                               "kstar requires 0 <= i <= floor(m/2) (deleted edges must form a matching)");
                   },
                   [](const family::DisjointUnion& u) {
                       for (const auto& p : u.parts) validate(p);
                   },
               },
               spec.kind);
    if (order_of(spec) > kMaxOrder) throw InvalidSpec("family order exceeds 64 vertices");
}

Graph build(const FamilySpec& spec)
{
    validate(spec);
    return std::visit(overloaded{
                          [](const family::Path& p) {
                              std::vector<Edge> e;
                              for (int i = 0; i + 1 < p.n; ++i) e.emplace_back(i, i + 1);
                              return Graph(p.n, e);
                          },
                          [](const family::Cycle& c) {
                              std::vector<Edge> e;
                              for (int i = 0; i < c.n; ++i) e.emplace_back(i, (i + 1) % c.n);
                              return Graph(c.n, e);
                          },
                          [](const family::Complete& c) { return complete_minus_matching(c.n, 0); },
                          [](const family::CompleteBipartite& k) {
                              std::vector<Edge> e;
                              for (int i = 0; i < k.m; ++i)
                                  for (int j = 0; j < k.n; ++j) e.emplace_back(i, k.m + j);
                              return Graph(k.m + k.n, e);
                          },
                          [](const family::KStar& k) { return complete_minus_matching(k.m, k.deleted); },
                          [](const family::DisjointUnion& u) {
                              Graph g(0);
                              for (const auto& p : u.parts) g = disjoint_union(g, build(p));
                              return g;
                          },
                      },
                      spec.kind);
}

Graph prism()
{
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// --- grammar -------------------------------------------------------------

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    FamilySpec parse_all()
    {
        auto spec = parse_one();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return spec;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        auto token = text_.substr(pos_, std::min<std::size_t>(16, text_.size() - pos_));
        throw InvalidSpec(why + " at offset " + std::to_string(pos_) + " near '" + std::string(token) + "'");
    }

    bool accept(char c)
    {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    int number()
    {
        int value = 0;
        auto first = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
        if (ec != std::errc{} || ptr == first) fail("expected a nonnegative integer");
        if (value < 0) fail("expected a nonnegative integer");
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    FamilySpec parse_one()
    {
        const auto start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ':') ++pos_;
        const auto name = text_.substr(start, pos_ - start);
        if (pos_ == text_.size()) {
            pos_ = start;
            fail("expected NAME:ARGS");
        }
        ++pos_;
        if (name == "path") return FamilySpec::path(number());
        if (name == "cycle") return FamilySpec::cycle(number());
        if (name == "complete") return FamilySpec::complete(number());
        if (name == "kmn" || name == "kstar") {
            int a = number();
            expect(',');
            int b = number();
            return name == "kmn" ? FamilySpec::complete_bipartite(a, b) : FamilySpec::k_star(a, b);
        }
        if (name == "union") {
            expect('(');
            std::vector<FamilySpec> parts;
            if (!accept(')')) {
                do parts.push_back(parse_one());
                while (accept(';'));
                expect(')');
            }
            return FamilySpec::disjoint_union(std::move(parts));
        }
        pos_ = start;
        fail("unknown family '" + std::string(name) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

FamilySpec parse_family_spec(std::string_view text)
{
    auto spec = SpecParser(text).parse_all();
    validate(spec);
    return spec;
}

std::string to_string(const FamilySpec& spec)
{
    return std::visit(overloaded{
                          [](const family::Path& p) { return "path:" + std::to_string(p.n); },
                          [](const family::Cycle& c) { return "cycle:" + std::to_string(c.n); },
                          [](const family::Complete& c) { return "complete:" + std::to_string(c.n); },
                          [](const family::CompleteBipartite& k) {
                              return "kmn:" + std::to_string(k.m) + "," + std::to_string(k.n);
                          },
                          [](const family::KStar& k) {
                              return "kstar:" + std::to_string(k.m) + "," + std::to_string(k.deleted);
                          },
                          [](const family::DisjointUnion& u) {
                              std::string out = "union:(";
                              for (std::size_t i = 0; i < u.parts.size(); ++i) {
                                  if (i) out += ';';
                                  out += to_string(u.parts[i]);
                              }
                              return out + ")";
                          },
                      },
                      spec.kind);
}

} // namespace dissoc
