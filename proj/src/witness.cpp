// SPDX-License-Identifier: Apache-2.0
#include "lamlab/lamhull.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "lamlab/errors.hpp"

namespace lamlab {

namespace {

struct Builder {
    const std::vector<BoxSet>& chain;
    std::vector<WitnessNode> nodes;

    int min_level(const DiagMatQ& p, int max_level) const {
        for (int j = 0; j <= max_level; ++j) {
            if (contains(chain[static_cast<std::size_t>(j)], p)) return j;
        }
        throw LevelError("witness extraction: point left the hull chain");
    }

    int build(const DiagMatQ& p, int max_level) {
        const int j = min_level(p, max_level);
        const int id = static_cast<int>(nodes.size());
        nodes.push_back({});
        nodes[static_cast<std::size_t>(id)].value = p;
        nodes[static_cast<std::size_t>(id)].level = j;
        if (j == 0) {
            nodes[static_cast<std::size_t>(id)].in_k = true;
            nodes[static_cast<std::size_t>(id)].weight = 1;
            return id;
        }
        const BoxSet& cur = chain[static_cast<std::size_t>(j)];
        if (cur.provenance.size() != cur.boxes.size()) {
            throw LevelError("witness extraction: hull level carries no provenance");
        }
        int dir = 0;
        for (std::size_t b = 0; b < cur.boxes.size(); ++b) {
            if (cur.provenance[b].kind == Provenance::Kind::Generated && cur.boxes[b].contains(p)) {
                dir = cur.provenance[b].direction;
                break;
            }
        }
        if (dir == 0) {
            throw LevelError("witness extraction: no generated box holds the point");
        }
        const auto [f, g] = maximal_interval(p, dir, chain[static_cast<std::size_t>(j - 1)]);
        const Rational& pc = p[dir];
        const Rational lambda = (pc - g[dir]) / (f[dir] - g[dir]);
        const int left = build(f, j - 1);
        const int right = build(g, j - 1);
        WitnessNode& n = nodes[static_cast<std::size_t>(id)];
        n.weight = lambda;
        n.direction = dir;
        n.left = left;
        n.right = right;
        return id;
    }
};

} // namespace

WitnessTree extract_witness(const BoxSet& k, int cap) {
    const Level level = lamination_level(k, cap);
    const int big_l = level.value();
    const std::vector<BoxSet> chain = lamination_chain(k, big_l);
    Builder b{chain, {}};
    b.build(DiagMatQ{}, big_l);
    WitnessTree t;
    t.nodes = std::move(b.nodes);
    t.root = 0;
    t.lamination_level = big_l;
    const WitnessNode& r = t.nodes[0];
    if (r.is_leaf()) {
        t.top = TopConfig::Leaf;
    } else {
        const int in_k = int(t.node(r.left).in_k) + int(t.node(r.right).in_k);
        t.top = in_k == 2 ? TopConfig::Line : in_k == 1 ? TopConfig::Tri : TopConfig::Rec;
    }
    return t;
}

int WitnessTree::depth() const {
    std::function<int(int)> rec = [&](int i) -> int {
        const WitnessNode& n = node(i);
        return n.is_leaf() ? 0 : 1 + std::max(rec(n.left), rec(n.right));
    };
    return nodes.empty() ? 0 : rec(root);
}

std::size_t WitnessTree::leaf_count() const {
    return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const WitnessNode& n) { return n.is_leaf(); }));
}

std::vector<DiagMatQ> WitnessTree::sigma() const {
    std::vector<DiagMatQ> out;
    for (const auto& n : nodes) {
        if (n.is_leaf()) out.push_back(n.value);
    }
    std::sort(out.begin(), out.end(), [](const DiagMatQ& a, const DiagMatQ& b) { return std::tie(a.d1, a.d2) < std::tie(b.d1, b.d2); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool verify_tree_arithmetic(const WitnessTree& t) {
    for (const auto& n : t.nodes) {
        if (n.is_leaf()) continue;
        const WitnessNode& a = t.node(n.left);
        const WitnessNode& b = t.node(n.right);
        if (n.weight < 0 || n.weight > 1) return false;
        const RankOne r = rank_one_direction(a.value, b.value);
        if (r != RankOne::Rank0 && direction_of(r) != n.direction) return false;
        if (convex_combination(a.value, b.value, n.weight) != n.value) return false;
    }
    return t.nodes.empty() || t.node(t.root).value == DiagMatQ{};
}

} // namespace lamlab
