// Copyright 2026 The ctxconc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctxconc/linalg.hpp"

namespace ctxconc {

/// Embedded copies of data/fixtures. Names are the file stems:
/// table_s1, table_s3, table_s4, table_s5, g3_edges.
std::vector<std::string> fixture_names();
std::string_view fixture_text(std::string_view name);

struct ChecksumStatus {
    std::string name;
    std::string expected;
    std::string actual;
    bool ok = false;
};
/// Recomputes the SHA-256 of every embedded table against the shipped sums.
std::vector<ChecksumStatus> verify_fixture_checksums();
bool fixtures_intact();

/// Minimal CSV: '#' lines and blank lines are skipped, the first remaining
/// line is the header, every row must match its width. Errors name the line.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<int> line_numbers;

    int column(std::string_view name) const;
};
CsvTable parse_csv(std::string_view text);
double parse_number(std::string_view field, int line_no);

/// Reals written as a, a/b or a/sqrt(b), optionally signed.
double parse_surd(std::string_view text);

struct TableS1 {
    std::vector<CVector> rays;  // v1..v16, stored at indices 0..15
    CVector psi;
};
TableS1 parse_table_s1(std::string_view text);
TableS1 load_table_s1();

/// Vertex and context indices are zero-based.
struct VertexRecord {
    int context = 0;
    int vertex = 0;
    double probability = 0;
    double error = 0;
};
std::vector<VertexRecord> parse_table_s3(std::string_view text);
std::vector<VertexRecord> load_table_s3();

/// Probabilities are fractions (the files store percent). Zero-based i < j.
struct EdgeRecord {
    int index = 0;
    int i = 0;
    int j = 0;
    double forward = 0;
    double forward_err = 0;
    double backward = 0;
    double backward_err = 0;
};
std::vector<EdgeRecord> parse_edge_table(std::string_view text);
/// P(1|i=1,j) forward, P(1|j=1,i) backward.
std::vector<EdgeRecord> load_table_s4();
/// P(1|i=0,j) forward, P(1|j=0,i) backward.
std::vector<EdgeRecord> load_table_s5();

/// The published n = 3 edge list, zero-based.
std::vector<std::pair<int, int>> parse_edge_list(std::string_view text);
std::vector<std::pair<int, int>> load_g3_edges();

}  // namespace ctxconc
