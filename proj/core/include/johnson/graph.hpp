#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "johnson/exact.hpp"

namespace johnson {

/// Parameters (n, w) of the Johnson graph J(n, w). Requires n >= 2w >= 0,
/// the regime in which the whole eigenvalue enumeration lives. n is capped
/// at 64 so a vertex fits one machine word.
struct JohnsonParams {
    int n = 0;
    int w = 0;

    JohnsonParams(int n_, int w_);

    Int vertex_count() const;
    std::uint64_t vertex_count_u64() const;
    int degree() const { return w * (n - w); }

    friend bool operator==(const JohnsonParams&, const JohnsonParams&) = default;
};

/// A binary word of length n. Coordinates are 1-based; coordinate c is bit
/// c-1 of `bits`, and the serialized string puts coordinate 1 leftmost.
struct Vertex {
    int n = 0;
    std::uint64_t bits = 0;

    int weight() const;
    bool get(int coord) const;  // 1-based
    std::vector<int> support() const;

    std::string str() const;
    static Vertex parse(std::string_view s);

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend std::strong_ordering operator<=>(const Vertex&, const Vertex&) = default;
};

/// Colexicographic rank of the support set {c_1 < ... < c_w}:
/// sum_j C(c_j - 1, j). A bijection onto {0, ..., C(n,w)-1}; for fixed n
/// it orders vertices by increasing `bits`.
std::uint64_t rank(const Vertex& v);

/// Exact inverse of rank. Throws on idx >= C(n, w).
Vertex unrank(const JohnsonParams& params, std::uint64_t idx);

/// Half the Hamming weight of the mod-2 sum; equals the path distance.
/// Requires matching length and weight.
int distance(const Vertex& x, const Vertex& y);

/// The w(n-w) vertices at distance 1, in colex order.
std::vector<Vertex> neighbors(const Vertex& x);

/// Every vertex of J(n, w) in colex (rank) order.
std::vector<Vertex> all_vertices(const JohnsonParams& params);

struct SphereSpec {
    Vertex center;
    int radius = 0;
};

/// S_r(center) in colex order. Radius outside [0, w] is rejected rather
/// than returned empty.
std::vector<Vertex> sphere(const SphereSpec& spec);

/// B_r(center) = union of S_0..S_r, in colex order.
std::vector<Vertex> ball(const SphereSpec& spec);

/// |S_r| = C(w, r) C(n-w, r).
Int sphere_size(const JohnsonParams& params, int radius);

/// The normal-form center: w ones followed by n-w zeros (colex rank 0).
Vertex canonical_center(const JohnsonParams& params);

/// Vertex list in rank order with O(log N) bit-pattern lookup; the position
/// of a vertex in `list()` equals its colex rank.
class VertexTable {
public:
    explicit VertexTable(const JohnsonParams& params);

    const JohnsonParams& params() const { return params_; }
    const std::vector<Vertex>& list() const { return list_; }
    std::size_t size() const { return list_.size(); }

    std::size_t index_of(const Vertex& v) const;  // throws if absent

private:
    JohnsonParams params_;
    std::vector<Vertex> list_;
};

}  // namespace johnson
