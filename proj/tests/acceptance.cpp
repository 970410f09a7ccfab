// Acceptance suite: every criterion is exact (integer / rational arithmetic,
// tolerance zero). Prints one PASS/FAIL line per criterion.

#include "oracles.hpp"

#include "surgery/bp.hpp"
#include "surgery/classify.hpp"
#include "surgery/ltheory.hpp"
#include "surgery/rationals.hpp"
#include "surgery/structset.hpp"
#include "surgery/tables.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

using namespace surgery;

namespace {

struct Check {
    bool ok = true;
    std::string first_failure;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

using Criterion = std::function<void(Check&)>;

const GroupTable& table() {
    static const GroupTable t = GroupTable::builtin();
    return t;
}

void ac1_t_table(Check& c) {
    c.expect(t(4) == 2, "t(4) == 2");
    c.expect(t(8) == 28, "t(8) == 28");
    c.expect(t(12) == 992, "t(12) == 992");
    c.expect(t(16) == 8128, "t(16) == 8128");
    c.expect(t(16) == 64 * 127, "t(16) == 64 x 127");
}

void ac2_bp_orders(Check& c) {
    c.expect(bp_order(8, table()) == KnownGroup::finite(28), "bP_8");
    c.expect(bp_order(12, table()) == KnownGroup::finite(992), "bP_12");
    c.expect(bp_order(16, table()) == KnownGroup::finite(8128), "bP_16");
    for (int m = 5; m <= 101; m += 2) {
        c.expect(bp_order(m, table()).is_trivial(), "bP_" + std::to_string(m) + " trivial");
    }
}

void ac3_residuals(Check& c) {
    c.expect(residual_group(4, 4).order() == 7, "(4,4) -> Z_7");
    c.expect(residual_group(4, 8).order() == 31, "(4,8) -> Z_31");
    c.expect(residual_group(4, 12).order() == 127, "(4,12) -> Z_127");
    c.expect(residual_group(8, 8).order() == 127, "(8,8) -> Z_127");
}

void ac4_s3s4_fibres(Check& c) {
    for (int d = -100; d <= 100; ++d) {
        const auto size = eta_fiber_size(3, 4, d, table());
        const BigInt expected = std::gcd(d, 7) == 1 ? 4 : 28;
        c.expect(size == KnownGroup::finite(expected), "eta_fiber_size(3,4," + std::to_string(d) + ")");
    }
    for (int y = -100; y <= 100; ++y) {
        const auto size = forgetful_fiber(3, 4, 2 * y, table());
        const BigInt expected = y % 7 == 0 ? 28 : 4;
        c.expect(size == KnownGroup::finite(expected), "forgetful_fiber(3,4," + std::to_string(2 * y) + ")");
    }
    bool rejected_odd = false;
    try {
        forgetful_fiber(3, 4, 3, table());
    } catch (const std::exception&) {
        rejected_odd = true;
    }
    c.expect(rejected_odd, "odd topological normal invariant rejected");
}

void ac5_s4s4(Check& c) {
    for (int u = -50; u <= 50; ++u)
        for (int v = -50; v <= 50; ++v) {
            c.expect(del_map(4, 4, u, v).is_zero() == ((u * v) % 7 == 0),
                     "del_map(4,4," + std::to_string(u) + "," + std::to_string(v) + ")");
        }
    for (int d = -100; d <= 100; ++d) {
        c.expect(eta_fiber_size(4, 4, d, table()) == KnownGroup::finite(2), "fibre size 2 at d=" + std::to_string(d));
    }
}

void ac6_plumbing(Check& c) {
    for (int u = -50; u <= 50; ++u)
        for (int v = -50; v <= 50; ++v) {
            c.expect(plumbing_boundary_class(u, v).is_zero() == ((u * v) % 7 == 0),
                     "boundary(" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
}

void ac7_inertia(Check& c) {
    for (int v = -100; v <= 100; ++v) {
        c.expect(s3s4_inertia_group(v).order() == 14 / std::gcd(14, v), "inertia(" + std::to_string(v) + ")");
    }
}

void ac8_group_structure(Check& c) {
    for (int p = 2; p <= 18; ++p)
        for (int q = 2; p + q <= 20; ++q) {
            if (p + q < 5) continue;
            const NormalizedPair n = normalize_pair(p, q);
            const bool shape_a = (n.p + 1) % 4 == 0 && n.q % 4 == 0;
            const bool shape_b = n.p % 4 == 0 && n.q % 4 == 0;
            c.expect(group_structure_possible(p, q).possible == !(shape_a || shape_b),
                     "group_structure_possible(" + std::to_string(p) + "," + std::to_string(q) + ")");
        }
    c.expect(group_structure_possible(3, 4).reason == "non-constant stabilizers", "(3,4) reason");
    for (const auto& [p, q] : std::vector<std::pair<int, int>>{{4, 4}, {4, 8}, {4, 12}, {8, 8}}) {
        const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
        c.expect(!image_F_is_subgroup(p, q), tag + " image not a subgroup");
        c.expect(group_structure_possible(p, q).reason == "image not a subgroup", tag + " reason");
    }
}

void ac9_odd_order(Check& c) {
    for (int j = 1; j <= 10; ++j)
        for (int k = 1; k <= 10; ++k) {
            c.expect(residual_group(4 * j, 4 * k).order() % 2 == 1,
                     "odd order (" + std::to_string(4 * j) + "," + std::to_string(4 * k) + ")");
        }
}

void ac10_properties(Check& c) {
    // Cyclic subgroups vs enumeration.
    for (std::int64_t n = 1; n <= 1000; ++n) {
        const std::int64_t stride = n <= 40 ? 1 : 1 + n / 17;
        for (std::int64_t g = 0; g < n; g += stride) {
            const auto elems = oracle::enumerate_subgroup(n, g);
            const CyclicSubgroup h = subgroup_generated(n, g);
            c.expect(h.order() == oracle::count_members(elems), "subgroup order n=" + std::to_string(n));
            const CyclicGroup zn(n);
            for (std::int64_t x = 0; x < n; x += stride) {
                c.expect(in_subgroup(CyclicElement(zn, x), h) == (elems[static_cast<std::size_t>(x)] == 1),
                         "membership n=" + std::to_string(n));
            }
        }
    }
    // Bernoulli: two paths, von Staudt-Clausen.
    const auto classical = oracle::classical_bernoulli(80);
    for (int k = 1; k <= 40; ++k) {
        Rational expected = classical[2 * k];
        if (expected < 0) expected = -expected;
        c.expect(bernoulli(k) == expected, "bernoulli dual path k=" + std::to_string(k));
        const BigInt den = boost::multiprecision::denominator(bernoulli(k));
        c.expect(den % 6 == 0 && oracle::squarefree(den), "von Staudt-Clausen k=" + std::to_string(k));
    }
    // Diffeomorphism of S^3 x S^4 types is an equivalence relation.
    std::vector<S3S4Invariant> pts;
    for (int v = -5; v <= 5; ++v)
        for (int s = 0; s < 28; ++s) pts.emplace_back(s, v);
    for (const auto& a : pts) {
        c.expect(s3s4_diffeomorphic(a, a), "reflexive");
        for (const auto& b : pts) {
            const bool ab = s3s4_diffeomorphic(a, b);
            c.expect(ab == s3s4_diffeomorphic(b, a), "symmetric");
            if (!ab) continue;
            for (const auto& d : pts) {
                if (s3s4_diffeomorphic(b, d)) c.expect(s3s4_diffeomorphic(a, d), "transitive");
            }
        }
    }
    // theta_diff = theta_top o F.
    for (const auto& [p, q] : std::vector<std::pair<int, int>>{{4, 4}, {4, 8}, {3, 4}, {8, 8}}) {
        const int r = 4;
        for (int u = -r; u <= r; ++u)
            for (int v = -r; v <= r; ++v)
                for (int w = -r; w <= r; ++w) {
                    const NormalClassDiff nu(p, p % 4 == 0 ? u : 0), nv(q, q % 4 == 0 ? v : 0),
                        nw(p + q, (p + q) % 4 == 0 ? w : 0);
                    c.expect(theta_diff(p, q, nu, nv, nw) ==
                                 theta_top(p, q, forgetful_F(nu), forgetful_F(nv), forgetful_F(nw)),
                             "theta_diff = theta_top o F");
                }
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion>> criteria = {
        {"AC1 t-table reproduction", ac1_t_table},
        {"AC2 bP orders", ac2_bp_orders},
        {"AC3 residual groups", ac3_residuals},
        {"AC4 S3xS4 fibres", ac4_s3s4_fibres},
        {"AC5 S4xS4 boundary map and fibres", ac5_s4s4},
        {"AC6 plumbing boundary", ac6_plumbing},
        {"AC7 inertia groups", ac7_inertia},
        {"AC8 group-structure predicate", ac8_group_structure},
        {"AC9 odd-order residuals", ac9_odd_order},
        {"AC10 property suites", ac10_properties},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Check c;
        const auto start = std::chrono::steady_clock::now();
        try {
            run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %s (%.1f ms)%s%s\n", c.ok ? "PASS" : "FAIL", name.c_str(), ms,
                    c.ok ? "" : " -- first failure: ", c.ok ? "" : c.first_failure.c_str());
        if (!c.ok) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
