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
#include "sample_data.hpp"

#include "maq/error.hpp"
#include "maq/merge.hpp"

#include <random>

using namespace maq;

TEST_CASE("gap scripts")
{
    GapScript s{{{0, 1}, {2, 2}}};
    CHECK(s.total() == 3);
    CHECK(apply_gap_script("ABC", s) == "-AB--C");
    CHECK(apply_gap_script("AB", GapScript{{{2, 1}}}) == "AB-");
    CHECK_THROWS_AS(apply_gap_script("AB", GapScript{{{5, 1}}}), Error);
}

TEST_CASE("reconcile identical anchors")
{
    auto s = reconcile_anchor("AB-", "AB-");
    CHECK(s.merged.empty());
    CHECK(s.incoming.empty());
}

TEST_CASE("reconcile takes the union of gaps")
{
    auto s = reconcile_anchor("A-B", "AB-");
    CHECK(apply_gap_script("A-B", s.merged) == "A-B-");
    CHECK(apply_gap_script("AB-", s.incoming) == "A-B-");

    auto t = reconcile_anchor("AB", "-AB");
    CHECK(t.merged == GapScript{{{0, 1}}});
    CHECK(t.incoming.empty());
}

TEST_CASE("reconcile rejects different anchors")
{
    try {
        reconcile_anchor("AB", "AC");
        FAIL("expected AnchorMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AnchorMismatch);
    }
}

TEST_CASE("reconciled width is residues plus the union of gap runs")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t len = 1 + rng() % 5;
        std::string core;
        for (std::size_t i = 0; i < len; ++i)
            core += "ACGT"[rng() % 4];
        // Gap counts in each of the len + 1 slots.
        std::vector<std::size_t> ga(len + 1), gb(len + 1);
        auto render = [&](const std::vector<std::size_t>& g) {
            std::string out;
            for (std::size_t i = 0; i <= len; ++i) {
                out.append(g[i], '-');
                if (i < len)
                    out += core[i];
            }
            return out;
        };
        std::size_t expect = len;
        for (std::size_t i = 0; i <= len; ++i) {
            ga[i] = rng() % 3;
            gb[i] = rng() % 3;
            expect += std::max(ga[i], gb[i]);
        }
        const auto a = render(ga), b = render(gb);
        auto s = reconcile_anchor(a, b);
        const auto ra = apply_gap_script(a, s.merged), rb = apply_gap_script(b, s.incoming);
        CHECK(ra == rb);
        CHECK(ra.size() == expect);
    }
}

TEST_CASE("merge_blocks")
{
    ProgressiveState state;
    AlignmentBlock first{{"x", "y"}, {"A-B", "ACB"}};
    state = merge_blocks(state, first, "x");
    CHECK(state.merged == first);
    CHECK(state.anchor_row() == "A-B");

    AlignmentBlock second{{"z", "x"}, {"ABD", "AB-"}};
    state = merge_blocks(state, second, "z");
    CHECK(state.anchor_id == "z");
    CHECK(state.merged.ids == std::vector<std::string>{"x", "y", "z"});
    CHECK(state.merged.rows == std::vector<std::string>{"A-B-", "ACB-", "A-BD"});

    AlignmentBlock stranger{{"w"}, {"AB"}};
    CHECK_THROWS_AS(merge_blocks(state, stranger, "w"), Error);
}

TEST_CASE("merging a block with itself only drops the anchor copy")
{
    AlignmentBlock block{{"x", "y"}, {"A-B", "ACB"}};
    ProgressiveState state;
    state = merge_blocks(state, block, "x");
    state = merge_blocks(state, block, "x");
    CHECK(state.merged.ids == std::vector<std::string>{"x", "y", "y"});
    CHECK(state.merged.rows == std::vector<std::string>{"A-B", "ACB", "ACB"});
}

TEST_CASE("append_anchor")
{
    auto ds = parse_fasta(testdata::kFasta);
    Cluster c{{"Point", "Deletion"}, "Point"};
    ProgressiveState empty;
    auto in0 = append_anchor(c, empty, ds);
    CHECK(in0.ids == std::vector<std::string>{"Point", "Deletion"});
    CHECK_FALSE(in0.anchor_index.has_value());

    ProgressiveState state;
    state.merged = AlignmentBlock{{"Base"}, {"-NVRLMLRL"}};
    state.anchor_id = "Base";
    auto in1 = append_anchor(c, state, ds);
    REQUIRE(in1.anchor_index.has_value());
    CHECK(*in1.anchor_index == 2);
    CHECK(in1.residues[2] == "NVRLMLRL");
}
