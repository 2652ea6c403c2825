#include "johnson/eigenfunctions.hpp"

#include <future>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>

#include "johnson/combinatorics.hpp"

namespace johnson {

VertexFunction::VertexFunction(JohnsonParams params, std::vector<Rat> values)
    : params_(params), values_(std::move(values)) {
    if (values_.size() != params_.vertex_count_u64())
        throw std::invalid_argument("VertexFunction: value count != C(n, w)");
}

bool VertexFunction::is_zero() const {
    for (const Rat& v : values_)
        if (v != 0) return false;
    return true;
}

namespace {

// neighbor masks of v within an n-bit universe, unsorted
template <typename Fn>
void for_each_neighbor(std::uint64_t v, int n, Fn&& fn) {
    for (int a = 0; a < n; ++a) {
        if (!((v >> a) & 1)) continue;
        const std::uint64_t without = v & ~(std::uint64_t{1} << a);
        for (int b = 0; b < n; ++b) {
            if ((v >> b) & 1) continue;
            fn(without | (std::uint64_t{1} << b));
        }
    }
}

std::size_t index_of_bits(const std::vector<Vertex>& list, int n, std::uint64_t bits) {
    const Vertex key{n, bits};
    auto it = std::lower_bound(list.begin(), list.end(), key);
    return static_cast<std::size_t>(it - list.begin());
}

}  // namespace

bool is_eigenfunction(const VertexFunction& f, int i) {
    const JohnsonParams& p = f.params();
    const Int lam = eigenvalue(i, p.n, p.w);
    const VertexTable table(p);
    Rat nbr_sum, want;
    for (std::size_t a = 0; a < table.size(); ++a) {
        nbr_sum = 0;
        for_each_neighbor(table.list()[a].bits, p.n, [&](std::uint64_t nb) {
            const Rat& v = f[index_of_bits(table.list(), p.n, nb)];
            if (v != 0) nbr_sum += v;
        });
        want = f[a];
        want *= lam;
        if (nbr_sum != want) return false;
    }
    return true;
}

RationalMatrix adjacency_minus_lambda(const JohnsonParams& params, int i) {
    const Int lam = eigenvalue(i, params.n, params.w);
    const VertexTable table(params);
    const std::size_t N = table.size();
    RationalMatrix m(N, N);
    for (std::size_t a = 0; a < N; ++a) {
        for_each_neighbor(table.list()[a].bits, params.n, [&](std::uint64_t nb) {
            m(a, index_of_bits(table.list(), params.n, nb)) += 1;
        });
        m(a, a) -= lam;
    }
    return m;
}

EigenspaceBasis eigenspace_basis(const JohnsonParams& params, int i) {
    RationalMatrix m = adjacency_minus_lambda(params, i);
    std::vector<std::vector<Rat>> kernel = nullspace(m);
    const Int want = multiplicity(i, params.n);
    if (Int(static_cast<unsigned long>(kernel.size())) != want)
        throw std::logic_error("eigenspace dimension " + std::to_string(kernel.size()) +
                               " != multiplicity " + want.get_str() + " for J(" +
                               std::to_string(params.n) + "," + std::to_string(params.w) +
                               ") i=" + std::to_string(i));
    EigenspaceBasis out{params, i, {}};
    out.basis.reserve(kernel.size());
    for (auto& vec : kernel) out.basis.emplace_back(params, std::move(vec));
    return out;
}

std::shared_ptr<const EigenspaceBasis> eigenspace_cached(const JohnsonParams& params, int i) {
    using Key = std::tuple<int, int, int>;
    static std::mutex mu;
    static std::map<Key, std::shared_future<std::shared_ptr<const EigenspaceBasis>>> cache;

    const Key key{params.n, params.w, i};
    std::promise<std::shared_ptr<const EigenspaceBasis>> promise;
    std::shared_future<std::shared_ptr<const EigenspaceBasis>> fut;
    bool owner = false;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it == cache.end()) {
            fut = promise.get_future().share();
            cache.emplace(key, fut);
            owner = true;
        } else {
            fut = it->second;
        }
    }
    if (owner) {
        try {
            promise.set_value(std::make_shared<const EigenspaceBasis>(eigenspace_basis(params, i)));
        } catch (...) {
            promise.set_exception(std::current_exception());
            std::lock_guard<std::mutex> lock(mu);
            cache.erase(key);
        }
    }
    return fut.get();
}

VertexFunction radial(const Vertex& center, int i) {
    const JohnsonParams p(center.n, center.weight());
    if (i < 0 || i > p.w) throw std::domain_error("radial: eigen-index out of range");
    // value at distance d, normalized so the center value is 1
    std::vector<Rat> by_distance(static_cast<std::size_t>(p.w) + 1);
    for (int d = 0; d <= p.w; ++d)
        by_distance[static_cast<std::size_t>(d)] =
            make_rat(eberlein(d, i, p.w, p.n), binom(p.w, d) * binom(p.n - p.w, d));
    VertexFunction f(p);
    const VertexTable table(p);
    for (std::size_t a = 0; a < table.size(); ++a)
        f[a] = by_distance[static_cast<std::size_t>(distance(table.list()[a], center))];
    return f;
}

VertexFunction f0(int i, const JohnsonParams& params) {
    if (i < 0 || i > params.w || 2 * i > params.n)
        throw std::domain_error("f0: need 0 <= i <= w and 2i <= n");
    VertexFunction f(params);
    const VertexTable table(params);
    for (std::size_t a = 0; a < table.size(); ++a) {
        const std::uint64_t bits = table.list()[a].bits;
        bool on_support = true;
        int sign_ones = 0;
        for (int j = 0; j < i; ++j) {
            const bool left = (bits >> j) & 1;
            const bool right = (bits >> (i + j)) & 1;
            if (left == right) {
                on_support = false;
                break;
            }
            if (left) ++sign_ones;
        }
        if (on_support) f[a] = (sign_ones & 1) ? -1 : 1;
    }
    return f;
}

namespace {

// scatter the bits of `reduced` over the coordinates of [1..n] minus `skip1 < skip2`,
// with fixed values at the two skipped coordinates
std::uint64_t insert_two(std::uint64_t reduced, int n, int skip1, bool v1, int skip2, bool v2) {
    std::uint64_t out = 0;
    int src = 0;
    for (int c = 0; c < n; ++c) {
        bool bit;
        if (c == skip1 - 1)
            bit = v1;
        else if (c == skip2 - 1)
            bit = v2;
        else
            bit = (reduced >> src++) & 1;
        if (bit) out |= std::uint64_t{1} << c;
    }
    return out;
}

}  // namespace

VertexFunction difference(const VertexFunction& f, int j1, int j2) {
    const JohnsonParams& p = f.params();
    if (p.w == 0) throw std::domain_error("difference: w = 0 has no weight w-1 target");
    if (j1 < 1 || j2 <= j1 || j2 > p.n) throw std::domain_error("difference: need 1 <= j1 < j2 <= n");
    const JohnsonParams q(p.n - 2, p.w - 1);
    VertexFunction out(q);
    const VertexTable table(q);
    for (std::size_t a = 0; a < table.size(); ++a) {
        const std::uint64_t y = table.list()[a].bits;
        const Vertex hi{p.n, insert_two(y, p.n, j1, true, j2, false)};
        const Vertex lo{p.n, insert_two(y, p.n, j1, false, j2, true)};
        out[a] = f.at(hi) - f.at(lo);
    }
    return out;
}

VertexFunction lift(const VertexFunction& f) {
    const JohnsonParams& p = f.params();
    const JohnsonParams q(p.n + 2, p.w + 1);
    VertexFunction out(q);
    const VertexTable table(q);
    const std::uint64_t lo_mask = (std::uint64_t{1} << p.n) - 1;
    for (std::size_t a = 0; a < table.size(); ++a) {
        const std::uint64_t z = table.list()[a].bits;
        const bool b1 = (z >> p.n) & 1;
        const bool b2 = (z >> (p.n + 1)) & 1;
        if (b1 == b2) continue;
        const Rat& v = f.at(Vertex{p.n, z & lo_mask});
        out[a] = b1 ? v : -v;
    }
    return out;
}

VertexFunction induce(const VertexFunction& f, int target_w) {
    const JohnsonParams& p = f.params();
    const JohnsonParams q(p.n, target_w);
    const int j = p.w;
    VertexFunction out(q);
    const VertexTable table(q);
    for (std::size_t a = 0; a < table.size(); ++a) {
        const Vertex& x = table.list()[a];
        Rat sum = 0;
        if (j <= target_w) {
            // weight-j sub-supports of x
            std::vector<int> supp = x.support();
            std::vector<int> pick(static_cast<std::size_t>(j));
            auto rec = [&](auto&& self, int pos, int start, std::uint64_t bits) -> void {
                if (pos == j) {
                    const Rat& v = f.at(Vertex{p.n, bits});
                    if (v != 0) sum += v;
                    return;
                }
                for (std::size_t k = static_cast<std::size_t>(start); k < supp.size(); ++k)
                    self(self, pos + 1, static_cast<int>(k) + 1,
                         bits | (std::uint64_t{1} << (supp[k] - 1)));
            };
            rec(rec, 0, 0, 0);
        } else {
            // weight-j super-supports of x
            std::vector<int> comp;
            for (int c = 1; c <= p.n; ++c)
                if (!x.get(c)) comp.push_back(c);
            const int extra = j - target_w;
            auto rec = [&](auto&& self, int pos, int start, std::uint64_t bits) -> void {
                if (pos == extra) {
                    const Rat& v = f.at(Vertex{p.n, bits});
                    if (v != 0) sum += v;
                    return;
                }
                for (std::size_t k = static_cast<std::size_t>(start); k < comp.size(); ++k)
                    self(self, pos + 1, static_cast<int>(k) + 1,
                         bits | (std::uint64_t{1} << (comp[k] - 1)));
            };
            rec(rec, 0, 0, x.bits);
        }
        out[a] = std::move(sum);
    }
    return out;
}

Rat proportionality_alpha(const VertexFunction& f, int i, int w_prime) {
    const JohnsonParams& p = f.params();
    if (f.is_zero()) throw ZeroInputError("proportionality_alpha: zero input");
    if (i < 0 || i > p.w || i > w_prime || 2 * w_prime > p.n)
        throw std::domain_error("proportionality_alpha: need 0 <= i <= min(w, w'), n >= 2w'");
    if (!is_eigenfunction(f, i))
        throw std::domain_error("proportionality_alpha: input is not a lambda_i eigenfunction");
    const VertexFunction g = induce(induce(f, w_prime), p.w);
    Rat alpha;
    bool have = false;
    for (std::size_t a = 0; a < f.size(); ++a) {
        if (f[a] == 0) {
            if (g[a] != 0) throw NotProportionalError("round trip broke a zero of f");
            continue;
        }
        Rat ratio = g[a] / f[a];
        if (!have) {
            alpha = std::move(ratio);
            have = true;
        } else if (ratio != alpha) {
            throw NotProportionalError("round trip is not a single scalar multiple");
        }
    }
    if (alpha == 0) throw NotProportionalError("round trip scalar is zero");
    return alpha;
}

bool sphere_sum_check(const VertexFunction& f, int i, const Vertex& x, int k) {
    const JohnsonParams& p = f.params();
    Rat sum = 0;
    for (const Vertex& y : sphere(SphereSpec{x, k})) {
        const Rat& v = f.at(y);
        if (v != 0) sum += v;
    }
    return sum == f.at(x) * Rat(eberlein(k, i, p.w, p.n));
}

VertexFunction combine(const EigenspaceBasis& basis, const std::vector<Rat>& coeffs) {
    if (coeffs.size() != basis.basis.size())
        throw std::invalid_argument("combine: coefficient count mismatch");
    VertexFunction out(basis.params);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        const VertexFunction& b = basis.basis[j];
        for (std::size_t a = 0; a < out.size(); ++a)
            if (b[a] != 0) out[a] += coeffs[j] * b[a];
    }
    return out;
}

}  // namespace johnson
