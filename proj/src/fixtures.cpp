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

#include "ctxconc/fixtures.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ctxconc/digest.hpp"

namespace ctxconc {

namespace fixture_data {
extern const std::string_view kTableS1;
extern const std::string_view kTableS3;
extern const std::string_view kTableS4;
extern const std::string_view kTableS5;
extern const std::string_view kG3Edges;
extern const std::string_view kSha256Sums;
}  // namespace fixture_data

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = line.find(sep, start);
        out.emplace_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

int parse_int(std::string_view field, int line_no) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected an integer, got '" +
                                    std::string(field) + "'");
    }
    return v;
}

void require_columns(const CsvTable &t, const std::vector<std::string> &names) {
    for (const auto &n : names) {
        if (t.column(n) < 0) {
            throw std::invalid_argument("missing column '" + n + "'");
        }
    }
}

}  // namespace

std::vector<std::string> fixture_names() {
    return {"g3_edges", "table_s1", "table_s3", "table_s4", "table_s5"};
}

std::string_view fixture_text(std::string_view name) {
    if (name == "table_s1") {
        return fixture_data::kTableS1;
    }
    if (name == "table_s3") {
        return fixture_data::kTableS3;
    }
    if (name == "table_s4") {
        return fixture_data::kTableS4;
    }
    if (name == "table_s5") {
        return fixture_data::kTableS5;
    }
    if (name == "g3_edges") {
        return fixture_data::kG3Edges;
    }
    throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

std::vector<ChecksumStatus> verify_fixture_checksums() {
    std::vector<ChecksumStatus> out;
    std::istringstream in{std::string(fixture_data::kSha256Sums)};
    std::string hash, file;
    while (in >> hash >> file) {
        ChecksumStatus s;
        s.name = file.substr(0, file.rfind('.'));
        s.expected = hash;
        s.actual = sha256_hex(fixture_text(s.name));
        s.ok = s.actual == s.expected;
        out.push_back(std::move(s));
    }
    return out;
}

bool fixtures_intact() {
    auto sums = verify_fixture_checksums();
    if (sums.size() != fixture_names().size()) {
        return false;
    }
    for (const auto &s : sums) {
        if (!s.ok) {
            return false;
        }
    }
    return true;
}

int CsvTable::column(std::string_view name) const {
    for (size_t c = 0; c < header.size(); ++c) {
        if (header[c] == name) {
            return static_cast<int>(c);
        }
    }
    return -1;
}

CsvTable parse_csv(std::string_view text) {
    CsvTable t;
    int line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        std::string_view line = trim(text.substr(start, end == std::string_view::npos ? end : end - start));
        ++line_no;
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        std::vector<std::string> fields = split(line, ',');
        if (t.header.empty()) {
            t.header = std::move(fields);
            continue;
        }
        if (fields.size() != t.header.size()) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                        std::to_string(t.header.size()) + " fields, got " +
                                        std::to_string(fields.size()));
        }
        t.rows.push_back(std::move(fields));
        t.line_numbers.push_back(line_no);
    }
    if (t.header.empty()) {
        throw std::invalid_argument("CSV has no header line");
    }
    return t;
}

double parse_number(std::string_view field, int line_no) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(v)) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected a number, got '" +
                                    std::string(field) + "'");
    }
    return v;
}

double parse_surd(std::string_view text) {
    text = trim(text);
    double sign = 1;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        sign = text.front() == '-' ? -1 : 1;
        text.remove_prefix(1);
    }
    auto number = [](std::string_view s) {
        double v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
            throw std::invalid_argument("malformed number '" + std::string(s) + "'");
        }
        return v;
    };
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return sign * number(text);
    }
    double num = number(text.substr(0, slash));
    std::string_view den = text.substr(slash + 1);
    double d = 0;
    if (den.starts_with("sqrt(") && den.ends_with(")")) {
        d = std::sqrt(number(den.substr(5, den.size() - 6)));
    } else {
        d = number(den);
    }
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return sign * num / d;
}

TableS1 parse_table_s1(std::string_view text) {
    CsvTable t = parse_csv(text);
    if (t.column("ray") != 0) {
        throw std::invalid_argument("table_s1: first column must be 'ray'");
    }
    const int dim = static_cast<int>(t.header.size()) - 1;
    TableS1 out;
    std::vector<bool> have;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        CVector v(dim);
        for (int c = 0; c < dim; ++c) {
            try {
                v(c) = parse_surd(t.rows[r][c + 1]);
            } catch (const std::invalid_argument &e) {
                throw std::invalid_argument("line " + std::to_string(t.line_numbers[r]) + ": " + e.what());
            }
        }
        const std::string &label = t.rows[r][0];
        if (label == "psi") {
            out.psi = v;
        } else if (label.size() > 1 && label[0] == 'v') {
            int k = parse_int(std::string_view(label).substr(1), t.line_numbers[r]) - 1;
            if (k < 0) {
                throw std::invalid_argument("line " + std::to_string(t.line_numbers[r]) + ": bad ray label");
            }
            if (static_cast<int>(out.rays.size()) <= k) {
                out.rays.resize(k + 1);
                have.resize(k + 1, false);
            }
            out.rays[k] = v;
            have[k] = true;
        } else {
            throw std::invalid_argument("line " + std::to_string(t.line_numbers[r]) + ": unknown ray label '" +
                                        label + "'");
        }
    }
    for (size_t k = 0; k < have.size(); ++k) {
        if (!have[k]) {
            throw std::invalid_argument("table_s1: ray v" + std::to_string(k + 1) + " missing");
        }
    }
    if (out.psi.size() == 0) {
        throw std::invalid_argument("table_s1: input state row 'psi' missing");
    }
    return out;
}

TableS1 load_table_s1() {
    return parse_table_s1(fixture_data::kTableS1);
}

std::vector<VertexRecord> parse_table_s3(std::string_view text) {
    CsvTable t = parse_csv(text);
    require_columns(t, {"context", "vertex", "probability", "error"});
    const int cc = t.column("context"), cv = t.column("vertex"), cp = t.column("probability"),
              ce = t.column("error");
    std::vector<VertexRecord> out;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        const int ln = t.line_numbers[r];
        VertexRecord rec;
        rec.context = parse_int(t.rows[r][cc], ln) - 1;
        rec.vertex = parse_int(t.rows[r][cv], ln) - 1;
        rec.probability = parse_number(t.rows[r][cp], ln);
        rec.error = parse_number(t.rows[r][ce], ln);
        if (rec.context < 0 || rec.vertex < 0) {
            throw std::invalid_argument("line " + std::to_string(ln) + ": labels are one-based");
        }
        out.push_back(rec);
    }
    return out;
}

std::vector<VertexRecord> load_table_s3() {
    return parse_table_s3(fixture_data::kTableS3);
}

std::vector<EdgeRecord> parse_edge_table(std::string_view text) {
    CsvTable t = parse_csv(text);
    require_columns(t, {"index", "i", "j", "p_forward_pct", "err_forward_pct", "p_backward_pct", "err_backward_pct"});
    std::vector<EdgeRecord> out;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        const int ln = t.line_numbers[r];
        const auto &row = t.rows[r];
        EdgeRecord e;
        e.index = parse_int(row[t.column("index")], ln);
        e.i = parse_int(row[t.column("i")], ln) - 1;
        e.j = parse_int(row[t.column("j")], ln) - 1;
        e.forward = parse_number(row[t.column("p_forward_pct")], ln) / 100.0;
        e.forward_err = parse_number(row[t.column("err_forward_pct")], ln) / 100.0;
        e.backward = parse_number(row[t.column("p_backward_pct")], ln) / 100.0;
        e.backward_err = parse_number(row[t.column("err_backward_pct")], ln) / 100.0;
        if (e.i < 0 || e.j < 0 || e.i >= e.j) {
            throw std::invalid_argument("line " + std::to_string(ln) + ": expected one-based labels with i < j");
        }
        out.push_back(e);
    }
    return out;
}

std::vector<EdgeRecord> load_table_s4() {
    return parse_edge_table(fixture_data::kTableS4);
}

std::vector<EdgeRecord> load_table_s5() {
    return parse_edge_table(fixture_data::kTableS5);
}

std::vector<std::pair<int, int>> parse_edge_list(std::string_view text) {
    CsvTable t = parse_csv(text);
    require_columns(t, {"i", "j"});
    std::vector<std::pair<int, int>> out;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        const int ln = t.line_numbers[r];
        int i = parse_int(t.rows[r][t.column("i")], ln) - 1;
        int j = parse_int(t.rows[r][t.column("j")], ln) - 1;
        if (i < 0 || j < 0) {
            throw std::invalid_argument("line " + std::to_string(ln) + ": labels are one-based");
        }
        out.emplace_back(i, j);
    }
    return out;
}

std::vector<std::pair<int, int>> load_g3_edges() {
    return parse_edge_list(fixture_data::kG3Edges);
}

}  // namespace ctxconc
