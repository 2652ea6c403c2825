#include "johnson/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "johnson/combinatorics.hpp"

namespace johnson {

JohnsonParams::JohnsonParams(int n_, int w_) : n(n_), w(w_) {
    if (w < 0 || n < 2 * w) throw std::domain_error("JohnsonParams: need n >= 2w >= 0");
    if (n > 64) throw std::domain_error("JohnsonParams: n > 64 unsupported");
}

Int JohnsonParams::vertex_count() const { return binom(n, w); }

std::uint64_t JohnsonParams::vertex_count_u64() const {
    Int c = vertex_count();
    if (!c.fits_ulong_p() && mpz_sizeinbase(c.get_mpz_t(), 2) > 63)
        throw std::overflow_error("vertex count exceeds 2^63");
    return mpz_get_ui(c.get_mpz_t());
}

int Vertex::weight() const { return std::popcount(bits); }

bool Vertex::get(int coord) const {
    if (coord < 1 || coord > n) throw std::domain_error("Vertex::get: coordinate out of range");
    return (bits >> (coord - 1)) & 1;
}

std::vector<int> Vertex::support() const {
    std::vector<int> s;
    s.reserve(static_cast<std::size_t>(weight()));
    for (int c = 1; c <= n; ++c)
        if ((bits >> (c - 1)) & 1) s.push_back(c);
    return s;
}

std::string Vertex::str() const {
    std::string out(static_cast<std::size_t>(n), '0');
    for (int c = 0; c < n; ++c)
        if ((bits >> c) & 1) out[static_cast<std::size_t>(c)] = '1';
    return out;
}

Vertex Vertex::parse(std::string_view s) {
    if (s.empty() || s.size() > 64) throw std::invalid_argument("Vertex::parse: bad length");
    Vertex v{static_cast<int>(s.size()), 0};
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == '1')
            v.bits |= std::uint64_t{1} << k;
        else if (s[k] != '0')
            throw std::invalid_argument("Vertex::parse: expected a {0,1} string");
    }
    return v;
}

std::uint64_t rank(const Vertex& v) {
    std::uint64_t r = 0;
    int j = 1;
    for (int c : v.support()) {
        Int b = binom(c - 1, j);
        r += mpz_get_ui(b.get_mpz_t());
        ++j;
    }
    return r;
}

Vertex unrank(const JohnsonParams& params, std::uint64_t idx) {
    if (Int(static_cast<unsigned long>(idx)) >= params.vertex_count())
        throw std::domain_error("unrank: index out of range");
    Vertex v{params.n, 0};
    Int rem(static_cast<unsigned long>(idx));
    for (int j = params.w; j >= 1; --j) {
        // largest c with C(c-1, j) <= rem
        int c = j;  // C(j-1, j) = 0 is always <= rem
        while (c + 1 <= params.n && binom(c, j) <= rem) ++c;
        rem -= binom(c - 1, j);
        v.bits |= std::uint64_t{1} << (c - 1);
    }
    return v;
}

int distance(const Vertex& x, const Vertex& y) {
    if (x.n != y.n || x.weight() != y.weight())
        throw std::invalid_argument("distance: mismatched parameters");
    return std::popcount(x.bits ^ y.bits) / 2;
}

std::vector<Vertex> neighbors(const Vertex& x) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(x.weight() * (x.n - x.weight())));
    for (int a = 0; a < x.n; ++a) {
        if (!((x.bits >> a) & 1)) continue;
        for (int b = 0; b < x.n; ++b) {
            if ((x.bits >> b) & 1) continue;
            out.push_back(Vertex{x.n, (x.bits & ~(std::uint64_t{1} << a)) | (std::uint64_t{1} << b)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> all_vertices(const JohnsonParams& params) {
    const std::uint64_t count = params.vertex_count_u64();
    std::vector<Vertex> out;
    out.reserve(count);
    if (params.w == 0) {
        out.push_back(Vertex{params.n, 0});
        return out;
    }
    // Gosper's hack walks same-popcount masks in increasing order, which is
    // exactly colex order of the support sets.
    std::uint64_t v = (std::uint64_t{1} << params.w) - 1;
    for (std::uint64_t k = 0; k < count; ++k) {
        out.push_back(Vertex{params.n, v});
        if (k + 1 == count) break;
        std::uint64_t t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

std::vector<Vertex> sphere(const SphereSpec& spec) {
    const Vertex& c = spec.center;
    const int w = c.weight();
    const int n = c.n;
    if (spec.radius < 0 || spec.radius > w)
        throw std::domain_error("sphere: radius must lie in [0, w]");
    std::vector<int> in = c.support();
    std::vector<int> out_coords;
    for (int k = 1; k <= n; ++k)
        if (!c.get(k)) out_coords.push_back(k);

    const int r = spec.radius;
    std::vector<Vertex> result;
    // choose r support coordinates to drop and r complement coordinates to add
    std::vector<int> drop(static_cast<std::size_t>(r)), add(static_cast<std::size_t>(r));
    auto rec_add = [&](auto&& self, std::size_t pos, std::size_t start, std::uint64_t bits) -> void {
        if (pos == add.size()) {
            result.push_back(Vertex{n, bits});
            return;
        }
        for (std::size_t k = start; k < out_coords.size(); ++k)
            self(self, pos + 1, k + 1, bits | (std::uint64_t{1} << (out_coords[k] - 1)));
    };
    auto rec_drop = [&](auto&& self, std::size_t pos, std::size_t start, std::uint64_t bits) -> void {
        if (pos == drop.size()) {
            rec_add(rec_add, 0, 0, bits);
            return;
        }
        for (std::size_t k = start; k < in.size(); ++k)
            self(self, pos + 1, k + 1, bits & ~(std::uint64_t{1} << (in[k] - 1)));
    };
    rec_drop(rec_drop, 0, 0, c.bits);
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Vertex> ball(const SphereSpec& spec) {
    if (spec.radius < 0 || spec.radius > spec.center.weight())
        throw std::domain_error("ball: radius must lie in [0, w]");
    std::vector<Vertex> result;
    for (int r = 0; r <= spec.radius; ++r) {
        auto s = sphere(SphereSpec{spec.center, r});
        result.insert(result.end(), s.begin(), s.end());
    }
    std::sort(result.begin(), result.end());
    return result;
}

Int sphere_size(const JohnsonParams& params, int radius) {
    return binom(params.w, radius) * binom(params.n - params.w, radius);
}

Vertex canonical_center(const JohnsonParams& params) {
    return Vertex{params.n, params.w == 0 ? 0 : (std::uint64_t{1} << params.w) - 1};
}

VertexTable::VertexTable(const JohnsonParams& params)
    : params_(params), list_(all_vertices(params)) {}

std::size_t VertexTable::index_of(const Vertex& v) const {
    auto it = std::lower_bound(list_.begin(), list_.end(), v);
    if (it == list_.end() || !(*it == v))
        throw std::invalid_argument("VertexTable::index_of: vertex not in graph");
    return static_cast<std::size_t>(it - list_.begin());
}

}  // namespace johnson
