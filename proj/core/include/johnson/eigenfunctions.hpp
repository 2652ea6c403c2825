#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "johnson/graph.hpp"
#include "johnson/linalg.hpp"

namespace johnson {

/// Exact-rational function on the vertices of J(n, w), stored by colex rank.
class VertexFunction {
public:
    explicit VertexFunction(JohnsonParams params)
        : params_(params), values_(params.vertex_count_u64()) {}

    VertexFunction(JohnsonParams params, std::vector<Rat> values);

    const JohnsonParams& params() const { return params_; }
    std::size_t size() const { return values_.size(); }

    Rat& operator[](std::size_t idx) { return values_[idx]; }
    const Rat& operator[](std::size_t idx) const { return values_[idx]; }

    Rat& at(const Vertex& v) { return values_[rank(v)]; }
    const Rat& at(const Vertex& v) const { return values_[rank(v)]; }

    const std::vector<Rat>& values() const { return values_; }

    bool is_zero() const;

    friend bool operator==(const VertexFunction&, const VertexFunction&) = default;

private:
    JohnsonParams params_;
    std::vector<Rat> values_;
};

/// Exact basis of the lambda_i eigenspace; size always equals
/// multiplicity(i, n).
struct EigenspaceBasis {
    JohnsonParams params;
    int index = 0;
    std::vector<VertexFunction> basis;
};

/// Raised when an identity that must hold fails on concrete input; always a
/// fatal inconsistency, never a recoverable condition.
struct NotProportionalError : std::logic_error {
    using std::logic_error::logic_error;
};
struct ZeroInputError : std::domain_error {
    using std::domain_error::domain_error;
};

/// True iff lambda_i * f(x) equals the neighbor sum at every vertex.
/// The all-zero function passes for every index.
bool is_eigenfunction(const VertexFunction& f, int i);

/// A - lambda_i I over the colex vertex order.
RationalMatrix adjacency_minus_lambda(const JohnsonParams& params, int i);

/// Kernel of A - lambda_i I as a basis (from the canonical RREF, so the
/// result is deterministic). Throws std::logic_error if the dimension does
/// not match multiplicity(i, n).
EigenspaceBasis eigenspace_basis(const JohnsonParams& params, int i);

/// Process-wide cache of eigenspace bases keyed by (n, w, i). Safe for
/// concurrent callers; each basis is computed once.
std::shared_ptr<const EigenspaceBasis> eigenspace_cached(const JohnsonParams& params, int i);

/// f(x) = E_d(i, w, n) / (C(w, d) C(n-w, d)) with d = d(x, center).
/// A lambda_i eigenfunction with value 1 at the center.
VertexFunction radial(const Vertex& center, int i);

/// The minimal-support construction: on vertices whose coordinate pairs
/// (j, i+j), j = 1..i, each hold exactly one 1, the value is
/// (-1)^(x_1+...+x_i); elsewhere 0. A lambda_i eigenfunction.
VertexFunction f0(int i, const JohnsonParams& params);

/// The two-point difference: fix coordinate j1 = 1, j2 = 0 minus the swap,
/// then delete both coordinates (remaining coordinates keep their order).
/// Maps eigen-index i to i-1 on J(n-2, w-1); all-zero for i = 0.
VertexFunction difference(const VertexFunction& f, int j1, int j2);

/// Embed into J(n+2, w+1): +f where the two new coordinates are (1,0),
/// -f where they are (0,1), else 0. Maps eigen-index i to i+1.
VertexFunction lift(const VertexFunction& f);

/// Summing operator between weights: for source weight j <= w sums f over
/// the weight-j subsets of each vertex's support, for j >= w over the
/// weight-j supersets. Preserves the eigen-index.
VertexFunction induce(const VertexFunction& f, int target_w);

/// The exact scalar with induce(induce(f, w_prime), w) == alpha * f.
/// Throws ZeroInputError for f == 0 and NotProportionalError if no single
/// nonzero scalar works (which would contradict the round-trip identity).
Rat proportionality_alpha(const VertexFunction& f, int i, int w_prime);

/// Exact verdict of sum_{d(x,y)=k} f(y) == f(x) * E_k(i, w, n).
bool sphere_sum_check(const VertexFunction& f, int i, const Vertex& x, int k);

/// Linear combination of basis elements, sum_j coeffs[j] * basis[j].
VertexFunction combine(const EigenspaceBasis& basis, const std::vector<Rat>& coeffs);

}  // namespace johnson
