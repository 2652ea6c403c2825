#include "johnson/reconstruction.hpp"

#include <algorithm>
#include <map>

#include "johnson/combinatorics.hpp"

namespace johnson {

namespace {

Rat criterion_sum(bool second, int k1, int k2, int i, int r, int w, int n) {
    const long t = k1 + k2;
    const long span = second ? (k1 - k2) : (k2 - k1);
    Rat total = 0;
    for (long s = 0; s <= span; ++s) {
        const Int num = second ? binom_ext(w - r - k1, s) * binom_ext(r - k2, span - s)
                               : binom_ext(r - k1, s) * binom_ext(n - w - k2 - r, span - s);
        if (num == 0) continue;  // inactive term
        const long d = second ? (r - k1 + s) : (r - k1 - s);
        const Int d1 = binom_ext(w - 2 * k1, d);
        const Int d2 = binom_ext(n - w - 2 * k2, d);
        if (d1 == 0 || d2 == 0)
            throw IllPosedError("criterion F" + std::string(second ? "2" : "1") + "(" +
                                std::to_string(k1) + "," + std::to_string(k2) +
                                ") divides by a zero binomial at s=" + std::to_string(s));
        total += make_rat(num * eberlein_sum(d, i - t, w - 2 * k1, n - 2 * t), d1 * d2);
    }
    return total;
}

}  // namespace

Rat criterion_f1(int k1, int k2, int i, int r, int w, int n) {
    if (k1 < 0 || k1 > k2) throw std::domain_error("criterion_f1: need 0 <= k1 <= k2");
    return criterion_sum(false, k1, k2, i, r, w, n);
}

Rat criterion_f2(int k1, int k2, int i, int r, int w, int n) {
    if (k2 < 0 || k2 > k1) throw std::domain_error("criterion_f2: need 0 <= k2 <= k1");
    return criterion_sum(true, k1, k2, i, r, w, n);
}

std::string to_string(Verdict v) {
    return v == Verdict::Reconstructible ? "Reconstructible" : "NotReconstructible";
}

CriterionReport criterion(int i, int r, const JohnsonParams& params) {
    const int n = params.n;
    const int w = params.w;
    if (i < 0 || i > w) throw std::domain_error("criterion: need 0 <= i <= w");
    if (r < 0 || r > w) throw std::domain_error("criterion: need 0 <= r <= w");

    CriterionReport rep{params, i, r, false, false, false, {}, Verdict::Reconstructible, "", {}, 0};
    rep.radius_window_ok = (i <= r && r <= w - i);
    rep.hypothesis_ok = n >= std::max({w + r + i, 2 * w, w + 2 * r + 2});
    rep.window_corner = (i <= r && r > w - i && 2 * r == w + 1);

    auto evaluate = [&](char which, int k1, int k2) {
        CriterionEvaluation ev{k1, k2, which, std::nullopt};
        try {
            ev.value = (which == '1') ? criterion_f1(k1, k2, i, r, w, n)
                                      : criterion_f2(k1, k2, i, r, w, n);
        } catch (const IllPosedError&) {
            // recorded as ill-posed; only fatal if the verdict needs it
        }
        rep.evaluations.push_back(std::move(ev));
    };
    for (int t = 0; t <= i - 1; ++t) {
        for (int k1 = 0; k1 <= t / 2; ++k1) evaluate('1', k1, t - k1);
        for (int k1 = (t + 1) / 2; k1 <= t; ++k1) evaluate('2', k1, t - k1);
    }

    if (i > r) {
        rep.verdict = Verdict::NotReconstructible;
        rep.reason = "radius below the lower window bound (i > r)";
        return rep;
    }
    if (r > w - i && !rep.window_corner) {
        rep.verdict = Verdict::NotReconstructible;
        rep.reason = "radius above the upper window bound (r > w - i)";
        return rep;
    }
    for (const CriterionEvaluation& ev : rep.evaluations) {
        if (!ev.value)
            throw IllPosedError(std::string("criterion F") + ev.which + "(" + std::to_string(ev.k1) +
                                "," + std::to_string(ev.k2) + ") divides by a zero binomial at i=" +
                                std::to_string(i) + " r=" + std::to_string(r) + " w=" +
                                std::to_string(w) + " n=" + std::to_string(n));
        if (*ev.value == 0) {
            rep.verdict = Verdict::NotReconstructible;
            rep.failing_k = {ev.k1, ev.k2};
            rep.failing_which = ev.which;
            rep.reason = std::string("F") + ev.which + "(" + std::to_string(ev.k1) + "," +
                         std::to_string(ev.k2) + ") = 0";
            return rep;
        }
    }
    return rep;
}

namespace {

ReconstructionVerdict oracle_on_set(const EigenspaceBasis& basis, const std::vector<Vertex>& set) {
    const std::size_t dim = basis.basis.size();
    RationalMatrix m(set.size(), dim);
    for (std::size_t row = 0; row < set.size(); ++row) {
        const std::uint64_t idx = rank(set[row]);
        for (std::size_t col = 0; col < dim; ++col) m(row, col) = basis.basis[col][idx];
    }
    std::vector<std::vector<Rat>> kernel = nullspace(m);
    if (kernel.empty()) return ReconstructionVerdict{true, std::nullopt};
    return ReconstructionVerdict{false, combine(basis, kernel.front())};
}

}  // namespace

ReconstructionVerdict oracle_sphere(int i, int r, const JohnsonParams& params, const Vertex& center) {
    return oracle_on_set(*eigenspace_cached(params, i), sphere(SphereSpec{center, r}));
}

ReconstructionVerdict oracle_ball(int i, int r, const JohnsonParams& params, const Vertex& center) {
    return oracle_on_set(*eigenspace_cached(params, i), ball(SphereSpec{center, r}));
}

ReconstructionVerdict oracle_sphere(const EigenspaceBasis& basis, int r, const Vertex& center) {
    return oracle_on_set(basis, sphere(SphereSpec{center, r}));
}

ReconstructionVerdict oracle_ball(const EigenspaceBasis& basis, int r, const Vertex& center) {
    return oracle_on_set(basis, ball(SphereSpec{center, r}));
}

namespace {

ReconstructionResult reconstruct_on_set(int i, const JohnsonParams& params,
                                        const std::vector<Vertex>& set,
                                        const std::vector<std::pair<Vertex, Rat>>& given) {
    std::map<Vertex, Rat> by_vertex;
    for (const auto& [v, value] : given)
        if (!by_vertex.emplace(v, value).second)
            throw std::invalid_argument("reconstruct: duplicate vertex in given values");
    if (by_vertex.size() != set.size())
        throw std::invalid_argument("reconstruct: given values do not cover the set exactly");
    for (const Vertex& v : set)
        if (!by_vertex.count(v))
            throw std::invalid_argument("reconstruct: missing value at " + v.str());

    auto basis = eigenspace_cached(params, i);
    const std::size_t dim = basis->basis.size();
    RationalMatrix m(set.size(), dim);
    std::vector<Rat> b(set.size());
    for (std::size_t row = 0; row < set.size(); ++row) {
        const std::uint64_t idx = rank(set[row]);
        for (std::size_t col = 0; col < dim; ++col) m(row, col) = basis->basis[col][idx];
        b[row] = by_vertex.at(set[row]);
    }
    SolveResult res = solve(m, b);
    if (std::holds_alternative<SolveInconsistent>(res)) return Inconsistent{};
    if (auto* u = std::get_if<SolveUnique>(&res)) return Unique{combine(*basis, u->x)};
    auto& und = std::get<SolveUnderdetermined>(res);
    return NotUnique{combine(*basis, und.kernel.front())};
}

}  // namespace

ReconstructionResult reconstruct_from_ball(int i, const SphereSpec& spec,
                                           const std::vector<std::pair<Vertex, Rat>>& given) {
    const JohnsonParams params(spec.center.n, spec.center.weight());
    return reconstruct_on_set(i, params, ball(spec), given);
}

ReconstructionResult reconstruct_from_sphere(int i, const SphereSpec& spec,
                                             const std::vector<std::pair<Vertex, Rat>>& given) {
    const JohnsonParams params(spec.center.n, spec.center.weight());
    return reconstruct_on_set(i, params, sphere(spec), given);
}

namespace {

// f0-type function on arbitrary disjoint coordinate pairs: nonzero exactly
// when every pair holds one 1; the sign counts ones on pair-first coordinates.
VertexFunction pair_function(const JohnsonParams& params,
                             const std::vector<std::pair<int, int>>& pairs) {
    VertexFunction f(params);
    const VertexTable table(params);
    for (std::size_t a = 0; a < table.size(); ++a) {
        const std::uint64_t bits = table.list()[a].bits;
        bool on_support = true;
        int sign_ones = 0;
        for (const auto& [first, second] : pairs) {
            const bool fa = (bits >> (first - 1)) & 1;
            const bool fb = (bits >> (second - 1)) & 1;
            if (fa == fb) {
                on_support = false;
                break;
            }
            if (fa) ++sign_ones;
        }
        if (on_support) f[a] = (sign_ones & 1) ? -1 : 1;
    }
    return f;
}

// take the first `count` coordinates of [1..n] not yet used
std::vector<int> free_coords(int n, const std::vector<std::pair<int, int>>& pairs, int count) {
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (const auto& [a, b] : pairs) used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = true;
    std::vector<int> out;
    for (int c = 1; c <= n && static_cast<int>(out.size()) < count; ++c)
        if (!used[static_cast<std::size_t>(c)]) out.push_back(c);
    if (static_cast<int>(out.size()) != count)
        throw std::domain_error("counterexample: not enough free coordinates");
    return out;
}

// i > r: r+1 pairs inside the zero block make the function vanish on the
// whole ball B_r(x_0); the remaining i-r-1 pairs go to the lowest free slots.
VertexFunction counterexample_low_radius(int i, int r, const JohnsonParams& params) {
    if (params.n - params.w < 2 * (r + 1))
        throw std::domain_error("counterexample: zero block too small (needs n >= w + 2r + 2)");
    std::vector<std::pair<int, int>> pairs;
    for (int j = 0; j < r + 1; ++j)
        pairs.emplace_back(params.w + 2 * j + 1, params.w + 2 * j + 2);
    std::vector<int> rest = free_coords(params.n, pairs, 2 * (i - r - 1));
    for (std::size_t k = 0; k + 1 < rest.size(); k += 2) pairs.emplace_back(rest[k], rest[k + 1]);
    return pair_function(params, pairs);
}

// r > w-i with 2r >= w+2: w-r+1 pairs inside the ones block force a zero at
// every vertex at distance exactly r from x_0.
VertexFunction counterexample_high_radius(int i, int r, const JohnsonParams& params) {
    const int m = params.w - r + 1;
    if (2 * m > params.w)
        throw std::domain_error("counterexample: ones block cannot host the pinned pairs");
    std::vector<std::pair<int, int>> pairs;
    for (int j = 0; j < m; ++j) pairs.emplace_back(2 * j + 1, 2 * j + 2);
    std::vector<int> rest = free_coords(params.n, pairs, 2 * (i - m));
    for (std::size_t k = 0; k + 1 < rest.size(); k += 2) pairs.emplace_back(rest[k], rest[k + 1]);
    return pair_function(params, pairs);
}

// Some F(k1, k2) = 0 inside the window: rebuild the proof's witness. A radial
// function at the reduced parameters is induced up to weight w - k1 - k2 and
// then wrapped in k1 left and k2 right sign pairs.
VertexFunction counterexample_zero_value(int k1, int k2, int i, int r, const JohnsonParams& params) {
    const int n = params.n;
    const int w = params.w;
    const int t = k1 + k2;
    const int ip = i - t;
    const int wp = w - 2 * k1;
    const int np = n - 2 * t;
    if (wp < 0 || np < 2 * wp || ip > wp)
        throw std::domain_error("counterexample: reduced parameters leave the valid regime");

    std::vector<std::pair<int, int>> left, right;
    for (int j = 1; j <= k1; ++j) left.emplace_back(j, k1 + j);
    for (int j = 1; j <= k2; ++j) right.emplace_back(w + j, w + k2 + j);

    std::vector<int> reduced;  // original coordinates carried into the reduced graph
    {
        std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
        for (const auto& [a, b] : left) used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = true;
        for (const auto& [a, b] : right) used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = true;
        for (int c = 1; c <= n; ++c)
            if (!used[static_cast<std::size_t>(c)]) reduced.push_back(c);
    }
    std::vector<int> red_pos(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t k = 0; k < reduced.size(); ++k) red_pos[static_cast<std::size_t>(reduced[k])] = static_cast<int>(k) + 1;

    const JohnsonParams reduced_params(np, wp);
    // coordinates 2k1+1..w land on the first wp reduced positions
    const VertexFunction h = radial(canonical_center(reduced_params), ip);
    const VertexFunction u = induce(h, w - t);

    VertexFunction g(params);
    const VertexTable table(params);
    for (std::size_t a = 0; a < table.size(); ++a) {
        const std::uint64_t bits = table.list()[a].bits;
        bool on_support = true;
        int neg = 0;
        for (const auto& [first, second] : left) {
            const bool fa = (bits >> (first - 1)) & 1;
            const bool fb = (bits >> (second - 1)) & 1;
            if (fa == fb) { on_support = false; break; }
            if (fb) ++neg;
        }
        if (on_support)
            for (const auto& [first, second] : right) {
                const bool fa = (bits >> (first - 1)) & 1;
                const bool fb = (bits >> (second - 1)) & 1;
                if (fa == fb) { on_support = false; break; }
                if (fb) ++neg;
            }
        if (!on_support) continue;
        std::uint64_t rbits = 0;
        for (int c : reduced)
            if ((bits >> (c - 1)) & 1) rbits |= std::uint64_t{1} << (red_pos[static_cast<std::size_t>(c)] - 1);
        const Rat& v = u.at(Vertex{np, rbits});
        if (v != 0) g[a] = (neg & 1) ? -v : v;
    }
    return g;
}

}  // namespace

VertexFunction counterexample_sphere(int i, int r, const JohnsonParams& params) {
    const CriterionReport rep = criterion(i, r, params);
    if (rep.verdict == Verdict::Reconstructible)
        throw std::logic_error("counterexample_sphere: criterion says Reconstructible");

    VertexFunction g(params);
    if (i > r) {
        g = counterexample_low_radius(i, r, params);
    } else if (r > params.w - i && !rep.window_corner) {
        g = counterexample_high_radius(i, r, params);
    } else {
        const auto [k1, k2] = *rep.failing_k;
        g = counterexample_zero_value(k1, k2, i, r, params);
    }

    if (g.is_zero()) throw std::logic_error("counterexample_sphere: produced the zero function");
    if (!is_eigenfunction(g, i))
        throw std::logic_error("counterexample_sphere: produced a non-eigenfunction");
    for (const Vertex& y : sphere(SphereSpec{canonical_center(params), r}))
        if (g.at(y) != 0)
            throw std::logic_error("counterexample_sphere: does not vanish on the sphere");
    return g;
}

}  // namespace johnson
