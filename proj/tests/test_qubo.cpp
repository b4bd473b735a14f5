// Copyright 2026 The MAQ Authors.
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "doctest.h"
#include "oracle.hpp"
#include "sample_data.hpp"

#include "maq/decode.hpp"
#include "maq/error.hpp"
#include "maq/qubo.hpp"

#include <random>

using namespace maq;

namespace {

// energy by explicit loops over the stored terms
double loop_energy(const Qubo<double>& q, const Assignment& x)
{
    double e = q.offset();
    for (Eigen::Index i = 0; i < q.num_vars(); ++i)
        e += q.linear()(i) * x(i);
    for (Eigen::Index i = 0; i < q.num_vars(); ++i)
        for (Qubo<double>::SparseMatrix::InnerIterator it(q.upper(), i); it; ++it)
            e += it.value() * x(i) * x(it.col());
    return e;
}

} // namespace

TEST_CASE("build_weights")
{
    std::vector<std::string> ab = {"AB", "AB"};
    auto w = build_weights(ab);
    CHECK(w(0, 0, 1, 0) == 0);
    CHECK(w(0, 0, 1, 1) == 1);
    CHECK(w(0, 1, 1, 0) == 1);
    CHECK(w(0, 1, 1, 1) == 0);
    CHECK(w(1, 1, 0, 0) == w(0, 0, 1, 1));

    std::vector<std::string> at = {"A", "T"};
    CHECK(build_weights(at)(0, 0, 1, 0) == 1);

    std::vector<std::string> at_t = {"AT", "T"};
    auto w2 = build_weights(at_t);
    CHECK(w2(0, 0, 1, 0) == 1);
    CHECK(w2(0, 1, 1, 0) == 0);

    std::vector<std::string> three = {"AC", "CA", "A"};
    auto w3 = build_weights(three);
    CHECK(w3(1, 1, 2, 0) == 0);
    CHECK(w3(2, 0, 0, 1) == 1);

    std::vector<std::string> one = {"A"};
    CHECK_THROWS_AS(build_weights(one), Error);
}

TEST_CASE("variable_count = C * sum N_i")
{
    CHECK(variable_count(CafProblem({2, 1}, 1, 0.5)) == 9);
    CHECK(variable_count(CafProblem({5}, 0, 0.5)) == 25);
    CafProblem sample({8, 8, 9, 7, 8, 7}, 0, 0.5);
    CHECK(sample.columns() == 9);
    CHECK(variable_count(sample) == 423);
    CHECK(variable_count(CafProblem({8, 9}, 0, 0.5)) == 153);
    // linear in cluster size at fixed N
    for (std::size_t k = 1; k <= 8; ++k)
        CHECK(variable_count(CafProblem(std::vector<std::size_t>(k, 6), 2, 0.5)) == 8 * 6 * k);
}

TEST_CASE("CafProblem indexing is a bijection")
{
    CafProblem p({3, 1, 2}, 2, 0.25, 4);
    CHECK(p.columns() == 6);
    std::vector<int> hit(p.num_vars(), 0);
    for (std::size_t s = 0; s < p.seq_count(); ++s)
        for (std::size_t n = 0; n < p.length(s); ++n)
            for (std::size_t c = 0; c < p.columns(); ++c) {
                auto v = p.var_index(s, n, c);
                ++hit[static_cast<std::size_t>(v)];
                auto slot = p.slot(v);
                CHECK(slot.sequence == s);
                CHECK(slot.element == n);
                CHECK(slot.column == c);
            }
    CHECK(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }));
    CHECK_THROWS_AS(CafProblem({3}, 0, 0.5, 2), Error);
    CHECK_THROWS_AS(CafProblem({3}, 0, 1.0), Error);
    CHECK_THROWS_AS(CafProblem({3}, 0, -0.1), Error);
    CHECK_THROWS_AS(CafProblem({}, 0, 0.5), Error);
}

TEST_CASE("penalty bound and PenaltyTooSmall")
{
    CafProblem p({2, 1, 3}, 1, 0.5);
    // 1 + 0.5 * 9 * 4 + (2 + 6 + 3)
    CHECK(penalty_bound(p) == doctest::Approx(30.0));
    std::vector<std::string> seqs = {"AC", "G", "ACG"};
    auto w = build_weights(seqs);
    CHECK_NOTHROW(build_caf_qubo(p, w));
    CHECK_NOTHROW(build_caf_qubo(p, w, CafPenalties{30.0, 40.0}));
    try {
        build_caf_qubo(p, w, CafPenalties{29.0, 40.0});
        FAIL("expected PenaltyTooSmall");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PenaltyTooSmall);
    }
}

TEST_CASE("worked minimum energies")
{
    auto min_energy = [](std::vector<std::string> seqs, std::size_t gaps, double g) {
        CafProblem p(oracle::lengths_of(seqs), gaps, g);
        auto q = build_caf_qubo(p, build_weights(seqs));
        double best = 1e300;
        std::vector<std::string> ids(seqs.size(), "x");
        oracle::for_each_alignment(seqs, p.columns(), [&](const std::vector<std::string>& rows) {
            AlignmentBlock b{ids, rows};
            best = std::min(best, q.energy(encode_alignment(b, p)));
        });
        return best;
    };
    CHECK(min_energy({"AB", "AB"}, 0, 0.5) == 0.0);
    CHECK(min_energy({"AT", "T"}, 1, 0.0) == 0.0);
    CHECK(min_energy({"A", "T"}, 0, 0.5) == 1.0);
    CHECK(min_energy({"AT", "T"}, 1, 0.5) == 0.5);

    // identity placement of two identical length-2 sequences
    CafProblem p({2, 2}, 0, 0.5);
    std::vector<std::string> ab = {"AB", "AB"};
    auto q = build_caf_qubo(p, build_weights(ab));
    Assignment x = Assignment::Zero(8);
    x(p.var_index(0, 0, 0)) = x(p.var_index(0, 1, 1)) = 1;
    x(p.var_index(1, 0, 0)) = x(p.var_index(1, 1, 1)) = 1;
    CHECK(q.energy(x) == 0.0);
}

TEST_CASE("feasible energy equals the decoded alignment's sum-of-pairs cost")
{
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto inst = oracle::random_instance(rng, 3, 4, 2);
        CafProblem p(oracle::lengths_of(inst.seqs), inst.gaps, inst.g);
        auto q = build_caf_qubo(p, build_weights(inst.seqs));
        std::vector<std::string> ids(inst.seqs.size(), "x");
        oracle::for_each_alignment(inst.seqs, p.columns(), [&](const std::vector<std::string>& rows) {
            auto x = encode_alignment(AlignmentBlock{ids, rows}, p);
            CHECK(q.energy(x) == oracle::sp_cost(rows, inst.g));
            CHECK(loop_energy(q, x) == doctest::Approx(q.energy(x)));
            ++checked;
        });
    }
    CHECK(checked > 500);
}

TEST_CASE("penalty dominance over the full binary cube")
{
    std::mt19937_64 rng(77);
    int instances = 0;
    while (instances < 25) {
        auto inst = oracle::random_instance(rng, 3, 3, 1);
        CafProblem p(oracle::lengths_of(inst.seqs), inst.gaps, inst.g);
        if (p.num_vars() > 18 || p.num_vars() < 2)
            continue;
        ++instances;
        auto q = build_caf_qubo(p, build_weights(inst.seqs));
        const auto n = static_cast<Eigen::Index>(p.num_vars());
        double worst_feasible = -1e300, best_infeasible = 1e300;
        Assignment x(n);
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
            for (Eigen::Index i = 0; i < n; ++i)
                x(i) = (m >> i) & 1u;
            // direct feasibility test, independent of the solver
            bool ok = true;
            for (std::size_t s = 0; s < p.seq_count() && ok; ++s) {
                long prev = -1;
                for (std::size_t e = 0; e < p.length(s) && ok; ++e) {
                    int cnt = 0;
                    long at = -1;
                    for (std::size_t c = 0; c < p.columns(); ++c)
                        if (x(p.var_index(s, e, c))) {
                            ++cnt;
                            at = long(c);
                        }
                    ok = cnt == 1 && at > prev;
                    prev = at;
                }
            }
            const double e = q.energy(x);
            if (ok)
                worst_feasible = std::max(worst_feasible, e);
            else
                best_infeasible = std::min(best_infeasible, e);
        }
        CHECK(best_infeasible > worst_feasible);
    }
}

TEST_CASE("swapping identical sequences leaves the minimum unchanged")
{
    std::vector<std::string> a = {"ACG", "ACG", "AG"};
    std::vector<std::string> b = {"ACG", "AG", "ACG"};
    CHECK(oracle::min_cost(a, 4, 0.5) == oracle::min_cost(b, 4, 0.5));
    auto min_energy = [](const std::vector<std::string>& seqs) {
        CafProblem p(oracle::lengths_of(seqs), 1, 0.5);
        auto q = build_caf_qubo(p, build_weights(seqs));
        double best = 1e300;
        std::vector<std::string> ids(seqs.size(), "x");
        oracle::for_each_alignment(seqs, p.columns(), [&](const std::vector<std::string>& rows) {
            best = std::min(best, q.energy(encode_alignment(AlignmentBlock{ids, rows}, p)));
        });
        return best;
    };
    CHECK(min_energy(a) == min_energy(b));
}

TEST_CASE("float scalar model agrees with double on feasible points")
{
    std::vector<std::string> seqs = {"ACG", "AG"};
    CafProblem p({3, 2}, 1, 0.5);
    auto w = build_weights(seqs);
    auto qd = build_caf_qubo<double>(p, w);
    auto qf = build_caf_qubo<float>(p, w);
    std::vector<std::string> ids = {"a", "b"};
    oracle::for_each_alignment(seqs, p.columns(), [&](const std::vector<std::string>& rows) {
        auto x = encode_alignment(AlignmentBlock{ids, rows}, p);
        CHECK(double(qf.energy(x)) == doctest::Approx(qd.energy(x)));
    });
}

TEST_CASE("text dump")
{
    QuboBuilder<double> b(3);
    b.add_linear(2, 1.5);
    b.add_quadratic(2, 0, -2.0);
    b.add_quadratic(1, 1, 0.25);
    b.add_offset(4);
    auto q = b.build();
    CHECK(q.dump() == "0 2 -2\n1 1 0.25\n2 2 1.5\noffset 4\n");
    Assignment x(3);
    x << 1, 1, 1;
    CHECK(q.energy(x) == doctest::Approx(4 + 1.5 + 0.25 - 2.0));
    Assignment short_x(2);
    CHECK_THROWS_AS(q.energy(short_x), Error);
}
