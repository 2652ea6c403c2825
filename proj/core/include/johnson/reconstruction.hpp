#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "johnson/eigenfunctions.hpp"
#include "johnson/graph.hpp"

namespace johnson {

/// An active criterion-polynomial term divides by a zero binomial; the
/// instance is aborted rather than assigned a guessed value.
struct IllPosedError : std::domain_error {
    using std::domain_error::domain_error;
};

/// F_1(k1, k2, i, r, w, n), defined for k1 <= k2: the sphere-restriction
/// value of the reduced radial function, summed over the s-split of the
/// distance budget. Terms whose numerator binomials vanish are inactive.
Rat criterion_f1(int k1, int k2, int i, int r, int w, int n);

/// F_2, the k1 >= k2 counterpart. F2(k, k, ...) == F1(k, k, ...).
Rat criterion_f2(int k1, int k2, int i, int r, int w, int n);

enum class Verdict { Reconstructible, NotReconstructible };

std::string to_string(Verdict v);

struct CriterionEvaluation {
    int k1 = 0;
    int k2 = 0;
    char which = '1';            // '1' or '2'
    std::optional<Rat> value;    // nullopt: the sum divides by a zero binomial
};

struct CriterionReport {
    JohnsonParams params;
    int index = 0;
    int radius = 0;
    bool radius_window_ok = false;  // i <= r <= w - i
    bool hypothesis_ok = false;     // n >= max(w+r+i, 2w, w+2r+2)
    // r > w-i with 2r == w+1: the annihilating pair construction does not
    // fit inside w coordinates, and on the verified grid the restriction has
    // full column rank. The verdict is then decided by the F values alone.
    bool window_corner = false;
    std::vector<CriterionEvaluation> evaluations;
    Verdict verdict = Verdict::Reconstructible;
    std::string reason;  // empty when Reconstructible
    std::optional<std::pair<int, int>> failing_k;
    char failing_which = 0;
};

/// Decides sphere reconstructability of lambda_i eigenfunctions from
/// S_r(x_0). Evaluations cover F1 for k1 = 0..floor(t/2) and F2 for
/// k1 = ceil(t/2)..t, for every t = k1+k2 in 0..i-1. Ill-posed sums are
/// recorded as such; the instance aborts (IllPosedError) only when the
/// verdict would depend on one, which cannot happen inside the radius
/// window under the theorem's hypotheses.
CriterionReport criterion(int i, int r, const JohnsonParams& params);

struct ReconstructionVerdict {
    bool unique = false;
    std::optional<VertexFunction> witness;  // nonzero eigenfunction vanishing on the set
};

/// Exact kernel test of the eigenspace basis restricted to S_r(center).
ReconstructionVerdict oracle_sphere(int i, int r, const JohnsonParams& params, const Vertex& center);

/// Same with B_r(center).
ReconstructionVerdict oracle_ball(int i, int r, const JohnsonParams& params, const Vertex& center);

/// Overloads against an explicit basis (sweeps hold their own instead of
/// going through the process-wide cache).
ReconstructionVerdict oracle_sphere(const EigenspaceBasis& basis, int r, const Vertex& center);
ReconstructionVerdict oracle_ball(const EigenspaceBasis& basis, int r, const Vertex& center);

struct Unique {
    VertexFunction f;
};
struct NotUnique {
    VertexFunction witness;
};
struct Inconsistent {};
using ReconstructionResult = std::variant<Unique, NotUnique, Inconsistent>;

/// Solve for the lambda_i eigenfunction matching `given` on B_r(center).
/// `given` must cover exactly the ball's vertices.
ReconstructionResult reconstruct_from_ball(int i, const SphereSpec& spec,
                                           const std::vector<std::pair<Vertex, Rat>>& given);

ReconstructionResult reconstruct_from_sphere(int i, const SphereSpec& spec,
                                             const std::vector<std::pair<Vertex, Rat>>& given);

/// A nonzero lambda_i eigenfunction vanishing identically on S_r(x_0) for
/// the canonical center. Requires a NotReconstructible criterion verdict;
/// the returned function is re-checked (nonzero, eigenfunction, zero on the
/// sphere) before it is handed out.
VertexFunction counterexample_sphere(int i, int r, const JohnsonParams& params);

}  // namespace johnson
