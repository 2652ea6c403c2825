#include "johnson/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "johnson/combinatorics.hpp"
#include "johnson/reconstruction.hpp"

namespace johnson {

bool VerifyReport::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

const CheckResult* VerifyReport::find(const std::string& name) const {
    for (const CheckResult& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

constexpr int kAgreementCap = 64;   // agreement sweeps follow n_max directly
constexpr int kBallGridCap = 10;    // ball-uniqueness grid
constexpr int kOperatorCap = 8;     // exhaustive operator sweeps
constexpr unsigned kRoundTripSeed = 0x4a6e7531u;

struct Failures {
    std::vector<std::string> items;
    std::size_t done = 0;

    void fail(std::string s) { items.push_back(std::move(s)); }
    void tick() { ++done; }
};

std::string instance_tag(int n, int w, int i, int r) {
    std::ostringstream os;
    os << "J(" << n << "," << w << ") i=" << i << " r=" << r;
    return os.str();
}

bool hypothesis_holds(int n, int w, int i, int r) {
    return n >= std::max({w + r + i, 2 * w, w + 2 * r + 2});
}

// three deterministic distinct centers (fewer on tiny graphs)
std::vector<Vertex> probe_centers(const JohnsonParams& params) {
    const std::uint64_t count = params.vertex_count_u64();
    std::set<std::uint64_t> ranks{0};
    if (count > 1) ranks.insert(count / 2);
    if (count > 2) ranks.insert(count - 1);
    std::vector<Vertex> out;
    for (std::uint64_t rk : ranks) out.push_back(unrank(params, rk));
    return out;
}

struct GroupOutcome {
    Failures spectral, balls, agreement, centers, counterexamples;
    std::vector<VerdictRow> rows;
    std::string error;
};

void run_group(int n, int w, int n_max_balls, GroupOutcome& out) {
    const JohnsonParams params(n, w);
    std::vector<EigenspaceBasis> bases;
    bases.reserve(static_cast<std::size_t>(w) + 1);
    Int dim_sum = 0;
    for (int i = 0; i <= w; ++i) {
        bases.push_back(eigenspace_basis(params, i));  // throws on dimension mismatch
        out.spectral.tick();
        dim_sum += static_cast<unsigned long>(bases.back().basis.size());
    }
    if (dim_sum != params.vertex_count())
        out.spectral.fail("J(" + std::to_string(n) + "," + std::to_string(w) +
                          "): eigenspace dimensions do not sum to C(n,w)");

    const std::vector<Vertex> centers = probe_centers(params);

    if (n <= n_max_balls) {
        for (int i = 0; i <= w; ++i)
            for (int r = i; r < w; ++r)
                for (const Vertex& c : centers) {
                    out.balls.tick();
                    if (!oracle_ball(bases[static_cast<std::size_t>(i)], r, c).unique)
                        out.balls.fail(instance_tag(n, w, i, r) + " ball kernel nontrivial at center " + c.str());
                }
    }

    for (int i = 0; i <= w; ++i)
        for (int r = 0; r <= w; ++r) {
            if (!hypothesis_holds(n, w, i, r)) continue;
            const CriterionReport rep = criterion(i, r, params);
            const auto& basis = bases[static_cast<std::size_t>(i)];

            ReconstructionVerdict first = oracle_sphere(basis, r, centers.front());
            bool centers_agree = true;
            for (std::size_t k = 1; k < centers.size(); ++k) {
                out.centers.tick();
                if (oracle_sphere(basis, r, centers[k]).unique != first.unique) {
                    centers_agree = false;
                    out.centers.fail(instance_tag(n, w, i, r) + " verdict depends on the center");
                }
            }

            VerdictRow row;
            row.n = n;
            row.w = w;
            row.i = i;
            row.r = r;
            row.criterion_verdict = rep.verdict;
            row.oracle_verdict = first.unique ? Verdict::Reconstructible : Verdict::NotReconstructible;
            row.agreement = (rep.verdict == row.oracle_verdict) && centers_agree;
            row.failing_k = rep.failing_k;
            row.failing_which = rep.failing_which;
            out.rows.push_back(row);
            out.agreement.tick();
            if (rep.verdict != row.oracle_verdict)
                out.agreement.fail(instance_tag(n, w, i, r) + " criterion " + to_string(rep.verdict) +
                                   " vs oracle " + to_string(row.oracle_verdict));

            if (!first.unique) {
                const VertexFunction& witness = *first.witness;
                if (witness.is_zero()) out.agreement.fail(instance_tag(n, w, i, r) + " oracle witness is zero");
                for (const Vertex& y : sphere(SphereSpec{centers.front(), r}))
                    if (witness.at(y) != 0) {
                        out.agreement.fail(instance_tag(n, w, i, r) + " oracle witness nonzero on the sphere");
                        break;
                    }
            }

            if (rep.verdict == Verdict::NotReconstructible) {
                out.counterexamples.tick();
                try {
                    const VertexFunction g = counterexample_sphere(i, r, params);
                    if (g.is_zero())
                        out.counterexamples.fail(instance_tag(n, w, i, r) + " counterexample is zero");
                    if (!is_eigenfunction(g, i))
                        out.counterexamples.fail(instance_tag(n, w, i, r) + " counterexample not an eigenfunction");
                    for (const Vertex& y : sphere(SphereSpec{canonical_center(params), r}))
                        if (g.at(y) != 0) {
                            out.counterexamples.fail(instance_tag(n, w, i, r) +
                                                     " counterexample nonzero on the sphere");
                            break;
                        }
                } catch (const std::exception& e) {
                    out.counterexamples.fail(instance_tag(n, w, i, r) + " counterexample failed: " + e.what());
                }
            }
        }
}

CheckResult make_result(const std::string& name, const Failures& f, const std::string& scope) {
    CheckResult r{name, f.items.empty(), ""};
    std::ostringstream os;
    if (f.items.empty()) {
        os << scope << " (" << f.done << " checks)";
    } else {
        os << f.items.size() << " failures; first: " << f.items.front();
    }
    r.detail = os.str();
    return r;
}

// ---- fixed-scope checks ----

CheckResult check_eberlein_identities(int n_max) {
    Failures f;
    const int cap = std::max(n_max, 14);
    for (int n = 0; n <= cap; ++n)
        for (int w = 0; 2 * w <= n; ++w) {
            Int msum = 0;
            for (int i = 0; i <= w; ++i) {
                msum += multiplicity(i, n);
                if (w >= 1 && eberlein(1, i, w, n) != eigenvalue(i, n, w))
                    f.fail("E_1 != lambda at (i,w,n)=(" + std::to_string(i) + "," + std::to_string(w) +
                           "," + std::to_string(n) + ")");
                Int total = 0;
                for (int k = 0; k <= w; ++k) total += eberlein(k, i, w, n);
                const Int want = (i == 0) ? binom(n, w) : Int(0);
                if (total != want)
                    f.fail("sum_k E_k wrong at (i,w,n)=(" + std::to_string(i) + "," + std::to_string(w) +
                           "," + std::to_string(n) + ")");
                f.tick();
            }
            if (msum != binom(n, w))
                f.fail("sum of multiplicities != C(n,w) at (n,w)=(" + std::to_string(n) + "," +
                       std::to_string(w) + ")");
        }
    return make_result("eberlein-identities", f, "E_1 = lambda_i, distance sums, multiplicity totals, n <= " + std::to_string(cap));
}

CheckResult check_sphere_sum(int n_max) {
    Failures f;
    const int cap = std::min(n_max, kOperatorCap);
    for (int n = 2; n <= cap; ++n)
        for (int w = 1; 2 * w <= n; ++w) {
            const JohnsonParams params(n, w);
            const VertexTable table(params);
            for (int i = 0; i <= w; ++i) {
                auto basis = eigenspace_cached(params, i);
                for (const VertexFunction& fn : basis->basis)
                    for (const Vertex& x : table.list())
                        for (int k = 0; k <= w; ++k) {
                            f.tick();
                            if (!sphere_sum_check(fn, i, x, k)) {
                                f.fail(instance_tag(n, w, i, k) + " sphere sum != E_k * f(x) at " + x.str());
                                if (f.items.size() > 4) return make_result("sphere-sum-identity", f, "");
                            }
                        }
            }
        }
    return make_result("sphere-sum-identity", f, "all bases, vertices and distances, n <= " + std::to_string(cap));
}

CheckResult check_operator_maps(int n_max) {
    Failures f;
    const int cap = std::min(n_max, kOperatorCap);
    for (int n = 2; n <= cap; ++n)
        for (int w = 1; 2 * w <= n; ++w) {
            const JohnsonParams params(n, w);
            for (int i = 0; i <= w; ++i) {
                auto basis = eigenspace_cached(params, i);
                for (const VertexFunction& fn : basis->basis) {
                    // difference: every coordinate pair, index drops by one
                    for (int j1 = 1; j1 <= n; ++j1)
                        for (int j2 = j1 + 1; j2 <= n; ++j2) {
                            const VertexFunction d = difference(fn, j1, j2);
                            f.tick();
                            const bool ok = (i == 0) ? d.is_zero() : is_eigenfunction(d, i - 1);
                            if (!ok)
                                f.fail(instance_tag(n, w, i, 0) + " difference(" + std::to_string(j1) +
                                       "," + std::to_string(j2) + ") index map failed");
                        }
                    // lift: index rises by one
                    f.tick();
                    if (!is_eigenfunction(lift(fn), i + 1))
                        f.fail(instance_tag(n, w, i, 0) + " lift index map failed");
                    // induce: index preserved; all-zero once the target cannot hold it
                    for (int wt = 0; 2 * wt <= n; ++wt) {
                        const VertexFunction ind = induce(fn, wt);
                        f.tick();
                        const bool ok = (i <= wt) ? is_eigenfunction(ind, i) : ind.is_zero();
                        if (!ok)
                            f.fail(instance_tag(n, w, i, 0) + " induce to w'=" + std::to_string(wt) +
                                   " index map failed");
                    }
                    if (f.items.size() > 4) return make_result("operator-index-maps", f, "");
                }
            }
        }
    return make_result("operator-index-maps", f, "difference/lift/induce over all bases, n <= " + std::to_string(cap));
}

CheckResult check_composition_identity(int n_max) {
    Failures f;
    if (n_max >= 8) {
        const JohnsonParams params(8, 2);
        for (int i = 0; i <= 2; ++i) {
            auto basis = eigenspace_cached(params, i);
            for (const VertexFunction& fn : basis->basis) {
                f.tick();
                VertexFunction direct = induce(fn, 4);
                VertexFunction chained = induce(induce(fn, 3), 4);
                bool ok = true;
                for (std::size_t a = 0; a < direct.size(); ++a)
                    if (Rat(2) * direct[a] != chained[a]) {
                        ok = false;
                        break;
                    }
                if (!ok) f.fail("(w-j)! I^{2,4} != I^{3,4} I^{2,3} on a J(8,2) basis element, i=" + std::to_string(i));
            }
        }
    }
    return make_result("composition-identity", f, "2! I^{2,4} = I^{3,4} I^{2,3} over J(8,2) bases");
}

CheckResult check_theorem1_item2(int n_max) {
    Failures f;
    if (n_max >= 8) {
        for (int w : {3, 4}) {
            const JohnsonParams params(8, w);
            for (int i = 0; i <= w; ++i) {
                auto basis = eigenspace_cached(params, i);
                for (const VertexFunction& fn : basis->basis) {
                    f.tick();
                    const bool is_zero = induce(fn, w - 1).is_zero();
                    if (is_zero != (i == w))
                        f.fail("J(8," + std::to_string(w) + ") i=" + std::to_string(i) +
                               ": one-step down-induction zero iff top index violated");
                }
            }
        }
    }
    return make_result("theorem1-item2", f, "down-induction kernel is exactly the top eigenspace, J(8,3) and J(8,4)");
}

CheckResult check_proposition1(int n_max) {
    Failures f;
    for (int n = 2; n <= n_max; ++n)
        for (int w = 1; 2 * w <= n; ++w)
            for (int i = 0; i <= w; ++i)
                for (int r = 0; r <= w; ++r) {
                    // case 1: i > r, n >= w + 2r + 2; zeros pinned at
                    // {1..r+1} and {i+1..i+r+1}, ball vanishing
                    if (i > r && n >= w + 2 * r + 2) {
                        const JohnsonParams params(n, w);
                        const VertexFunction fn = f0(i, params);
                        std::uint64_t zeros = 0;
                        for (int c = 1; c <= r + 1; ++c) zeros |= std::uint64_t{1} << (c - 1);
                        for (int c = i + 1; c <= i + r + 1; ++c) zeros |= std::uint64_t{1} << (c - 1);
                        for (bool from_top : {true, false}) {
                            std::uint64_t bits = 0;
                            int placed = 0;
                            for (int step = 0; step < n && placed < w; ++step) {
                                const int c = from_top ? (n - step) : (step + 1);
                                if ((zeros >> (c - 1)) & 1) continue;
                                bits |= std::uint64_t{1} << (c - 1);
                                ++placed;
                            }
                            f.tick();
                            const Vertex x{n, bits};
                            for (const Vertex& y : ball(SphereSpec{x, r}))
                                if (fn.at(y) != 0) {
                                    f.fail(instance_tag(n, w, i, r) + " case-1 ball value nonzero at " + y.str());
                                    break;
                                }
                        }
                    }
                    // case 2: i <= r, r > w - i, pairs fit: ones pinned at
                    // {1..w-r+1} and {i+1..i+w-r+1}, sphere vanishing
                    if (i <= r && r > w - i && 2 * (w - r + 1) <= w) {
                        const JohnsonParams params(n, w);
                        const VertexFunction fn = f0(i, params);
                        std::uint64_t ones = 0;
                        for (int c = 1; c <= w - r + 1; ++c) ones |= std::uint64_t{1} << (c - 1);
                        for (int c = i + 1; c <= i + w - r + 1; ++c) ones |= std::uint64_t{1} << (c - 1);
                        const int pinned = 2 * (w - r + 1);
                        for (bool from_top : {true, false}) {
                            std::uint64_t bits = ones;
                            int placed = pinned;
                            for (int step = 0; step < n && placed < w; ++step) {
                                const int c = from_top ? (n - step) : (step + 1);
                                if ((ones >> (c - 1)) & 1) continue;
                                bits |= std::uint64_t{1} << (c - 1);
                                ++placed;
                            }
                            f.tick();
                            const Vertex x{n, bits};
                            for (const Vertex& y : sphere(SphereSpec{x, r}))
                                if (fn.at(y) != 0) {
                                    f.fail(instance_tag(n, w, i, r) + " case-2 sphere value nonzero at " + y.str());
                                    break;
                                }
                        }
                    }
                }
    return make_result("proposition1-vanishing", f, "both pinned-center vanishing patterns, n <= " + std::to_string(n_max));
}

CheckResult check_round_trip(int n_max) {
    Failures f;
    if (n_max >= 8) {
        const JohnsonParams params(8, 3);
        std::mt19937 rng(kRoundTripSeed);
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 6);
        const Vertex center = canonical_center(params);
        for (int i = 0; i <= 3; ++i) {
            auto basis = eigenspace_cached(params, i);
            for (int sample = 0; sample < 5; ++sample) {
                VertexFunction fn(params);
                do {
                    std::vector<Rat> coeffs(basis->basis.size());
                    for (Rat& c : coeffs) c = make_rat(num(rng), den(rng));
                    fn = combine(*basis, coeffs);
                } while (fn.is_zero());

                std::vector<std::pair<Vertex, Rat>> given;
                for (const Vertex& v : ball(SphereSpec{center, i})) given.emplace_back(v, fn.at(v));
                f.tick();
                ReconstructionResult res = reconstruct_from_ball(i, SphereSpec{center, i}, given);
                const Unique* u = std::get_if<Unique>(&res);
                if (!u || !(u->f == fn))
                    f.fail("J(8,3) i=" + std::to_string(i) + " sample " + std::to_string(sample) +
                           " did not round trip");
            }
        }
        // all-zero data reconstructs to the all-zero function
        {
            std::vector<std::pair<Vertex, Rat>> given;
            for (const Vertex& v : ball(SphereSpec{center, 1})) given.emplace_back(v, Rat(0));
            f.tick();
            ReconstructionResult res = reconstruct_from_ball(1, SphereSpec{center, 1}, given);
            const Unique* u = std::get_if<Unique>(&res);
            if (!u || !u->f.is_zero()) f.fail("all-zero ball data did not yield the zero function");
        }
        // data from the wrong eigenspace is rejected
        {
            auto basis2 = eigenspace_cached(params, 2);
            std::vector<Rat> coeffs(basis2->basis.size());
            std::mt19937 rng2(kRoundTripSeed + 1);
            for (Rat& c : coeffs) c = make_rat(num(rng2), den(rng2));
            VertexFunction fn = combine(*basis2, coeffs);
            std::vector<std::pair<Vertex, Rat>> given;
            for (const Vertex& v : ball(SphereSpec{center, 1})) given.emplace_back(v, fn.at(v));
            f.tick();
            ReconstructionResult res = reconstruct_from_ball(1, SphereSpec{center, 1}, given);
            if (!std::holds_alternative<Inconsistent>(res))
                f.fail("lambda_2 data accepted as a lambda_1 reconstruction");
        }
    }
    return make_result("ball-round-trip", f, "random eigenspace elements of J(8,3) recovered from B_i exactly");
}

CheckResult check_proposition2(int n_max) {
    Failures f;
    if (n_max >= 8) {
        const JohnsonParams params(8, 3);
        // expected scalars, computed independently by brute force
        const std::map<std::pair<int, int>, long> expected = {
            {{1, 0}, 63}, {{1, 1}, 15},
            {{2, 0}, 18}, {{2, 1}, 10}, {{2, 2}, 4},
            {{4, 0}, 20}, {{4, 1}, 12}, {{4, 2}, 6}, {{4, 3}, 2},
        };
        for (int wp : {1, 2, 4})
            for (int i = 0; i <= 3; ++i) {
                if (i > wp) continue;
                auto basis = eigenspace_cached(params, i);
                for (const VertexFunction& fn : basis->basis) {
                    f.tick();
                    try {
                        const Rat alpha = proportionality_alpha(fn, i, wp);
                        if (alpha != Rat(expected.at({wp, i})))
                            f.fail("J(8,3) i=" + std::to_string(i) + " w'=" + std::to_string(wp) +
                                   ": alpha = " + to_string(alpha) + ", expected " +
                                   std::to_string(expected.at({wp, i})));
                    } catch (const std::exception& e) {
                        f.fail("J(8,3) i=" + std::to_string(i) + " w'=" + std::to_string(wp) + ": " + e.what());
                    }
                }
            }
    }
    return make_result("proposition2-alpha", f, "round-trip inducing is one nonzero scalar per (i, w'), J(8,3)");
}

CheckResult check_named_instances(int n_max) {
    Failures f;
    if (n_max >= 9) {
        const JohnsonParams params(9, 3);
        f.tick();
        const CriterionReport bad = criterion(1, 2, params);
        if (bad.verdict != Verdict::NotReconstructible || !bad.failing_k ||
            *bad.failing_k != std::make_pair(0, 0) || bad.failing_which != '1')
            f.fail("criterion(1,2,J(9,3)) should fail exactly at F1(0,0)");
        if (oracle_sphere(1, 2, params, canonical_center(params)).unique)
            f.fail("oracle contradicts the F1(0,0) = 0 instance (1,2,3,9)");
        f.tick();
        const CriterionReport good = criterion(1, 1, params);
        if (good.verdict != Verdict::Reconstructible)
            f.fail("criterion(1,1,J(9,3)) should hold");
        if (!oracle_sphere(1, 1, params, canonical_center(params)).unique)
            f.fail("oracle contradicts reconstructibility at (1,1,3,9)");
    }
    return make_result("named-instances", f, "(1,2,3,9) fails via F1(0,0)=0, (1,1,3,9) holds, both at exact rank");
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    const int n_max = std::min(options.n_max, kAgreementCap);
    VerifyReport report;

    std::vector<std::pair<int, int>> groups;
    for (int n = 1; n <= n_max; ++n)
        for (int w = 0; 2 * w <= n; ++w) groups.emplace_back(n, w);

    std::vector<GroupOutcome> outcomes(groups.size());
    std::atomic<std::size_t> next{0};
    const int jobs = std::clamp(options.jobs, 1, 64);
    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= groups.size()) return;
            try {
                run_group(groups[k].first, groups[k].second, std::min(n_max, kBallGridCap), outcomes[k]);
            } catch (const std::exception& e) {
                outcomes[k].error = e.what();
            }
        }
    };
    {
        std::vector<std::thread> pool;
        for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
        for (std::thread& t : pool) t.join();
    }

    Failures spectral, balls, agreement, centers, counterexamples;
    for (std::size_t k = 0; k < groups.size(); ++k) {
        GroupOutcome& g = outcomes[k];
        if (!g.error.empty())
            spectral.fail("J(" + std::to_string(groups[k].first) + "," + std::to_string(groups[k].second) +
                          "): " + g.error);
        auto fold = [](Failures& into, Failures& from) {
            into.done += from.done;
            for (auto& s : from.items) into.items.push_back(std::move(s));
        };
        fold(spectral, g.spectral);
        fold(balls, g.balls);
        fold(agreement, g.agreement);
        fold(centers, g.centers);
        fold(counterexamples, g.counterexamples);
        for (VerdictRow& row : g.rows) report.agreement.push_back(row);
    }

    report.checks.push_back(make_result("spectral-multiplicities", spectral,
                                        "kernel dimension of A - lambda_i I vs C(n,i) - C(n,i-1), n <= " +
                                            std::to_string(n_max)));
    report.checks.push_back(check_eberlein_identities(n_max));
    report.checks.push_back(check_sphere_sum(n_max));
    report.checks.push_back(check_operator_maps(n_max));
    report.checks.push_back(check_composition_identity(n_max));
    report.checks.push_back(check_theorem1_item2(n_max));
    report.checks.push_back(make_result("theorem2-balls", balls,
                                        "ball restrictions have trivial kernel for w > r >= i, 3 centers, n <= " +
                                            std::to_string(std::min(n_max, kBallGridCap))));
    report.checks.push_back(make_result("criterion-oracle-agreement", agreement,
                                        "criterion verdict vs exact restriction rank, n <= " + std::to_string(n_max)));
    report.checks.push_back(make_result("center-independence", centers, "sphere verdicts match across 3 centers"));
    report.checks.push_back(check_named_instances(n_max));
    report.checks.push_back(check_proposition1(n_max));
    report.checks.push_back(make_result("counterexample-soundness", counterexamples,
                                        "every NotReconstructible instance yields a checked witness"));
    report.checks.push_back(check_round_trip(n_max));
    report.checks.push_back(check_proposition2(n_max));
    return report;
}

}  // namespace johnson
