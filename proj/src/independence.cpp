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

#include "ctxconc/independence.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

namespace ctxconc {

namespace {

using Bits = std::vector<uint64_t>;

struct BudgetExhausted {};

class CliqueSearch {
   public:
    CliqueSearch(const ExclusivityGraph &g, double budget)
        : n_(g.n_vertices()), words_((n_ + 63) / 64), budget_(budget), start_(std::chrono::steady_clock::now()) {
        // Clique graph = complement of g, renumbered so position 0 has the largest degree.
        std::vector<int> cdeg(n_);
        for (int v = 0; v < n_; ++v) {
            cdeg[v] = n_ - 1 - g.degree(v);
        }
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return cdeg[a] > cdeg[b]; });
        std::vector<int> pos(n_);
        for (int p = 0; p < n_; ++p) {
            pos[order_[p]] = p;
        }
        nbr_.assign(n_, Bits(words_, 0));
        for (int a = 0; a < n_; ++a) {
            for (int b = 0; b < n_; ++b) {
                if (a != b && !g.has_edge(a, b)) {
                    set(nbr_[pos[a]], pos[b]);
                }
            }
        }
    }

    void run() {
        Bits p(words_, 0);
        for (int v = 0; v < n_; ++v) {
            set(p, v);
        }
        // Root colouring gives the bound reported when the budget runs out.
        std::vector<int> verts, colors;
        color(p, 1, verts, colors);
        root_bound_ = colors.empty() ? 0 : colors.back();
        seed_greedy();
        std::vector<int> current;
        try {
            expand(current, p);
            complete_ = true;
        } catch (const BudgetExhausted &) {
            complete_ = false;
        }
    }

    AlphaCertificate result() const {
        AlphaCertificate c;
        c.alpha = static_cast<int>(best_.size());
        for (int p : best_) {
            c.witness_set.push_back(order_[p]);
        }
        std::sort(c.witness_set.begin(), c.witness_set.end());
        c.certified = complete_;
        c.upper_bound = complete_ ? c.alpha : std::max(root_bound_, c.alpha);
        c.nodes = nodes_;
        c.seconds = elapsed();
        return c;
    }

   private:
    static void set(Bits &b, int v) { b[v >> 6] |= uint64_t{1} << (v & 63); }
    static void reset(Bits &b, int v) { b[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
    static bool empty(const Bits &b) {
        return std::all_of(b.begin(), b.end(), [](uint64_t w) { return w == 0; });
    }
    int lowest(const Bits &b) const {
        for (int w = 0; w < words_; ++w) {
            if (b[w]) {
                return w * 64 + std::countr_zero(b[w]);
            }
        }
        return -1;
    }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    // Greedy sequential colouring of p; only vertices with colour >= kmin are
    // listed, in non-decreasing colour order.
    void color(const Bits &p, int kmin, std::vector<int> &verts, std::vector<int> &colors) const {
        Bits u = p;
        int k = 0;
        while (!empty(u)) {
            ++k;
            Bits q = u;
            while (!empty(q)) {
                int v = lowest(q);
                reset(q, v);
                reset(u, v);
                for (int w = 0; w < words_; ++w) {
                    q[w] &= ~nbr_[v][w];
                }
                if (k >= kmin) {
                    verts.push_back(v);
                    colors.push_back(k);
                }
            }
        }
    }

    // Deterministic greedy clique to seed the incumbent.
    void seed_greedy() {
        Bits p(words_, 0);
        for (int v = 0; v < n_; ++v) {
            set(p, v);
        }
        std::vector<int> clique;
        while (!empty(p)) {
            int v = lowest(p);
            clique.push_back(v);
            for (int w = 0; w < words_; ++w) {
                p[w] &= nbr_[v][w];
            }
        }
        if (clique.size() > best_.size()) {
            best_ = clique;
        }
    }

    void expand(std::vector<int> &current, Bits p) {
        if ((++nodes_ & 1023) == 0 && elapsed() > budget_) {
            throw BudgetExhausted{};
        }
        std::vector<int> verts, colors;
        int kmin = static_cast<int>(best_.size()) - static_cast<int>(current.size()) + 1;
        color(p, std::max(kmin, 1), verts, colors);
        for (size_t i = verts.size(); i-- > 0;) {
            if (current.size() + colors[i] <= best_.size()) {
                return;
            }
            int v = verts[i];
            Bits np(words_);
            for (int w = 0; w < words_; ++w) {
                np[w] = p[w] & nbr_[v][w];
            }
            current.push_back(v);
            if (empty(np)) {
                if (current.size() > best_.size()) {
                    best_ = current;
                }
            } else {
                expand(current, std::move(np));
            }
            current.pop_back();
            reset(p, v);
        }
    }

    int n_;
    int words_;
    double budget_;
    std::chrono::steady_clock::time_point start_;
    std::vector<int> order_;
    std::vector<Bits> nbr_;
    std::vector<int> best_;
    uint64_t nodes_ = 0;
    int root_bound_ = 0;
    bool complete_ = false;
};

}  // namespace

AlphaCertificate independence_number(const ExclusivityGraph &g, const AlphaOptions &options) {
    if (g.n_vertices() == 0) {
        AlphaCertificate c;
        c.certified = true;
        return c;
    }
    CliqueSearch search(g, options.budget_seconds);
    search.run();
    return search.result();
}

}  // namespace ctxconc
