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
#include "maq/solver.hpp"

#include <random>

using namespace maq;

TEST_CASE("decode a hand-built assignment")
{
    CafProblem p({2, 1}, 1, 0.5);
    Assignment x = Assignment::Zero(9);
    x(p.var_index(0, 0, 0)) = 1;
    x(p.var_index(0, 1, 1)) = 1;
    x(p.var_index(1, 0, 1)) = 1;
    std::vector<std::string> ids = {"a", "b"}, res = {"AT", "T"};
    auto block = decode_assignment(x, p, ids, res);
    CHECK(block.ids == ids);
    CHECK(block.rows == std::vector<std::string>{"AT-", "-T-"});
    CHECK(encode_alignment(block, p) == x);
}

TEST_CASE("trivial decodes")
{
    CafProblem p({2}, 0, 0.5);
    Assignment x = Assignment::Zero(4);
    x(p.var_index(0, 0, 0)) = 1;
    x(p.var_index(0, 1, 1)) = 1;
    std::vector<std::string> ids = {"a"}, res = {"AB"};
    CHECK(decode_assignment(x, p, ids, res).rows[0] == "AB");

    CafProblem q({1}, 1, 0.5);
    Assignment y = Assignment::Zero(2);
    y(q.var_index(0, 0, 1)) = 1;
    std::vector<std::string> t = {"T"};
    CHECK(decode_assignment(y, q, ids, t).rows[0] == "-T");
}

TEST_CASE("decode rejects infeasible and mismatched input")
{
    CafProblem p({2, 1}, 1, 0.5);
    std::vector<std::string> ids = {"a", "b"}, res = {"AT", "T"};
    try {
        decode_assignment(Assignment::Zero(9), p, ids, res);
        FAIL("expected Infeasible");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Infeasible);
    }
    std::vector<std::string> bad = {"AT", "TT"};
    CHECK_THROWS_AS(decode_assignment(Assignment::Zero(9), p, ids, bad), Error);
}

TEST_CASE("published rows survive encode and decode")
{
    std::vector<std::string> ids(testdata::kIds.begin(), testdata::kIds.end());
    std::vector<std::string> res(testdata::kResidues.begin(), testdata::kResidues.end());
    CafProblem p(oracle::lengths_of(res), 0, 0.5);
    AlignmentBlock block = testdata::maq_alignment();
    auto x = encode_alignment(block, p);
    CHECK(check_feasible(x, p).feasible);
    CHECK(decode_assignment(x, p, ids, res) == block);

    AlignmentBlock wide = testdata::kalign_alignment();
    for (auto& r : wide.rows)
        r += '-';
    try {
        encode_alignment(wide, p);
        FAIL("expected WidthMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WidthMismatch);
    }
}

TEST_CASE("decode of any feasible assignment degaps to the inputs")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto inst = oracle::random_instance(rng, 4, 4, 2);
        CafProblem p(oracle::lengths_of(inst.seqs), inst.gaps, inst.g);
        std::vector<std::string> ids;
        for (std::size_t s = 0; s < inst.seqs.size(); ++s)
            ids.push_back("s" + std::to_string(s));
        // Random feasible placement per sequence.
        Assignment x = Assignment::Zero(static_cast<Eigen::Index>(p.num_vars()));
        for (std::size_t s = 0; s < inst.seqs.size(); ++s) {
            auto all = detail::descending_placements(p.columns(), p.length(s));
            const auto& cols = all[rng() % all.size()];
            for (std::size_t n = 0; n < cols.size(); ++n)
                x(p.var_index(s, n, cols[n])) = 1;
        }
        auto block = decode_assignment(x, p, ids, inst.seqs);
        CHECK(block.width() == p.columns());
        for (std::size_t s = 0; s < inst.seqs.size(); ++s)
            CHECK(degap(block.rows[s]) == inst.seqs[s]);
        CHECK(encode_alignment(block, p) == x);
    }
}

TEST_CASE("block rendering")
{
    AlignmentBlock b{{"a", "long"}, {"A-C", "AGC"}};
    CHECK(block_to_fasta(b) == ">a\nA-C\n>long\nAGC\n");
    CHECK(block_to_table(b) == "ID    Sequence Alignment\na     A - C\nlong  A G C\n");
    AlignmentBlock ragged{{"a", "b"}, {"AC", "A"}};
    CHECK_THROWS_AS(ragged.validate(), Error);
    CHECK(degap("-A--C-") == "AC");
}
