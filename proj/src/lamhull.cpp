// SPDX-License-Identifier: Apache-2.0
#include "lamlab/lamhull.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "lamlab/errors.hpp"

namespace lamlab {

Box::Box(Rational xl, Rational xh, Rational yl, Rational yh)
    : x_lo(std::move(xl)), x_hi(std::move(xh)), y_lo(std::move(yl)), y_hi(std::move(yh)) {
    if (x_lo > x_hi || y_lo > y_hi) {
        throw ParameterError("box has a reversed interval");
    }
}

bool Box::contains(const DiagMatQ& p) const {
    return x_lo <= p.d1 && p.d1 <= x_hi && y_lo <= p.d2 && p.d2 <= y_hi;
}

bool Box::contains(const Box& o) const {
    return x_lo <= o.x_lo && o.x_hi <= x_hi && y_lo <= o.y_lo && o.y_hi <= y_hi;
}

BoxSet BoxSet::from_points(const std::vector<DiagMatQ>& points) {
    BoxSet s;
    for (const auto& p : points) {
        s.boxes.push_back(Box::point(p));
    }
    return s;
}

namespace {

bool box_less(const Box& a, const Box& b) {
    return std::tie(a.x_lo, a.y_lo, a.x_hi, a.y_hi) < std::tie(b.x_lo, b.y_lo, b.x_hi, b.y_hi);
}

// Box over compressed coordinates: indices into the sorted distinct x and y values.
struct IBox {
    std::uint32_t x0, x1, y0, y1;

    std::uint64_t key() const {
        return (std::uint64_t(x0) << 48) | (std::uint64_t(x1) << 32) | (std::uint64_t(y0) << 16) | std::uint64_t(y1);
    }
    bool contains(const IBox& o) const { return x0 <= o.x0 && o.x1 <= x1 && y0 <= o.y0 && o.y1 <= y1; }
    std::uint64_t area_rank() const { return std::uint64_t(x1 - x0 + 1) * std::uint64_t(y1 - y0 + 1); }
};

// Indices of boxes not strictly contained in another box of the list. Input must be free of duplicates.
std::vector<std::size_t> maximal_boxes(const std::vector<IBox>& boxes) {
    std::vector<std::size_t> order(boxes.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Larger index extents first, so a container is always visited before what it contains.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return boxes[a].area_rank() > boxes[b].area_rank(); });
    std::vector<std::size_t> kept;
    for (std::size_t i : order) {
        bool inside = false;
        for (std::size_t j : kept) {
            if (boxes[j].contains(boxes[i])) {
                inside = true;
                break;
            }
        }
        if (!inside) {
            kept.push_back(i);
        }
    }
    return kept;
}

} // namespace

BoxSet normalize(const BoxSet& s) {
    const bool with_prov = s.provenance.size() == s.boxes.size();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < s.boxes.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < s.boxes.size() && !drop; ++j) {
            if (i == j || !s.boxes[j].contains(s.boxes[i])) continue;
            // Equal boxes: keep the first occurrence only.
            drop = !(s.boxes[i] == s.boxes[j]) || j < i;
        }
        if (!drop) keep.push_back(i);
    }
    std::sort(keep.begin(), keep.end(),
              [&](std::size_t a, std::size_t b) { return box_less(s.boxes[a], s.boxes[b]); });
    BoxSet out;
    out.level_tag = s.level_tag;
    for (std::size_t i : keep) {
        out.boxes.push_back(s.boxes[i]);
        if (with_prov) out.provenance.push_back(s.provenance[i]);
    }
    return out;
}

BoxSet lamination_step(const BoxSet& s) {
    std::vector<Rational> xs, ys;
    for (const auto& b : s.boxes) {
        xs.push_back(b.x_lo);
        xs.push_back(b.x_hi);
        ys.push_back(b.y_lo);
        ys.push_back(b.y_hi);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    if (xs.size() >= 0xffff || ys.size() >= 0xffff) {
        throw ParameterError("lamination_step: too many distinct coordinates");
    }
    auto ix = [&](const Rational& v) {
        return static_cast<std::uint32_t>(std::lower_bound(xs.begin(), xs.end(), v) - xs.begin());
    };
    auto iy = [&](const Rational& v) {
        return static_cast<std::uint32_t>(std::lower_bound(ys.begin(), ys.end(), v) - ys.begin());
    };

    const std::size_t n = s.boxes.size();
    std::vector<IBox> in(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& b = s.boxes[i];
        in[i] = {ix(b.x_lo), ix(b.x_hi), iy(b.y_lo), iy(b.y_hi)};
    }

    std::vector<IBox> cand;
    std::vector<Provenance> prov;
    std::unordered_map<std::uint64_t, std::size_t> seen;
    auto add = [&](const IBox& b, const Provenance& p) {
        if (seen.emplace(b.key(), cand.size()).second) {
            cand.push_back(b);
            prov.push_back(p);
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        add(in[i], {Provenance::Kind::Copy, i, i, 0});
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const IBox& a = in[i];
            const IBox& b = in[j];
            const std::uint32_t ylo = std::max(a.y0, b.y0), yhi = std::min(a.y1, b.y1);
            if (ylo <= yhi) {
                add({std::min(a.x0, b.x0), std::max(a.x1, b.x1), ylo, yhi}, {Provenance::Kind::Generated, i, j, 1});
            }
            const std::uint32_t xlo = std::max(a.x0, b.x0), xhi = std::min(a.x1, b.x1);
            if (xlo <= xhi) {
                add({xlo, xhi, std::min(a.y0, b.y0), std::max(a.y1, b.y1)}, {Provenance::Kind::Generated, i, j, 2});
            }
        }
    }

    std::vector<std::size_t> kept = maximal_boxes(cand);
    std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
        const IBox& p = cand[a];
        const IBox& q = cand[b];
        return std::tie(p.x0, p.y0, p.x1, p.y1) < std::tie(q.x0, q.y0, q.x1, q.y1);
    });
    BoxSet out;
    out.level_tag = s.level_tag + 1;
    for (std::size_t i : kept) {
        const IBox& b = cand[i];
        out.boxes.emplace_back(xs[b.x0], xs[b.x1], ys[b.y0], ys[b.y1]);
        out.provenance.push_back(prov[i]);
    }
    return out;
}

std::vector<BoxSet> lamination_chain(const BoxSet& k, int levels) {
    if (levels < 0) {
        throw ParameterError("lamination level count must be nonnegative");
    }
    std::vector<BoxSet> chain;
    BoxSet base = k;
    base.provenance.assign(base.boxes.size(), Provenance{});
    for (std::size_t i = 0; i < base.boxes.size(); ++i) {
        base.provenance[i].first = i;
    }
    base.level_tag = 0;
    chain.push_back(normalize(base));
    for (int i = 1; i <= levels; ++i) {
        chain.push_back(lamination_step(chain.back()));
    }
    return chain;
}

BoxSet lamination_hull(const BoxSet& k, int i) { return lamination_chain(k, i).back(); }

bool contains(const BoxSet& s, const DiagMatQ& p) {
    return std::any_of(s.boxes.begin(), s.boxes.end(), [&](const Box& b) { return b.contains(p); });
}

bool covers(const BoxSet& outer, const BoxSet& inner) {
    return std::all_of(inner.boxes.begin(), inner.boxes.end(), [&](const Box& b) {
        return std::any_of(outer.boxes.begin(), outer.boxes.end(), [&](const Box& o) { return o.contains(b); });
    });
}

int Level::value() const {
    if (value_ < 0) {
        throw LevelError("lamination level exceeds the cap");
    }
    return value_;
}

namespace {

bool same_boxes(const BoxSet& a, const BoxSet& b) { return a.boxes == b.boxes; }

} // namespace

Level lamination_level(const BoxSet& k, int cap) {
    if (cap < 0) {
        throw ParameterError("level cap must be nonnegative");
    }
    const DiagMatQ zero{};
    BoxSet cur = lamination_chain(k, 0).back();
    for (int i = 0;; ++i) {
        if (contains(cur, zero)) return Level::finite(i);
        if (i == cap) return Level::exceeds_cap();
        BoxSet next = lamination_step(cur);
        // A fixed point never grows again.
        if (same_boxes(next, cur)) return Level::exceeds_cap();
        cur = std::move(next);
    }
}

std::pair<DiagMatQ, DiagMatQ> maximal_interval(const DiagMatQ& a, int l, const BoxSet& s) {
    if (l != 1 && l != 2) {
        throw ParameterError("lamination direction must be 1 or 2");
    }
    const Rational& fixed = l == 1 ? a.d2 : a.d1;
    const Rational* lo = nullptr;
    const Rational* hi = nullptr;
    for (const auto& b : s.boxes) {
        const bool hit = l == 1 ? (b.y_lo <= fixed && fixed <= b.y_hi) : (b.x_lo <= fixed && fixed <= b.x_hi);
        if (!hit) continue;
        const Rational& blo = l == 1 ? b.x_lo : b.y_lo;
        const Rational& bhi = l == 1 ? b.x_hi : b.y_hi;
        if (!lo || blo < *lo) lo = &blo;
        if (!hi || bhi > *hi) hi = &bhi;
    }
    if (!lo) {
        throw PreconditionError("maximal_interval: the line does not meet the set");
    }
    if (l == 1) {
        return {DiagMatQ{*lo, fixed}, DiagMatQ{*hi, fixed}};
    }
    return {DiagMatQ{fixed, *lo}, DiagMatQ{fixed, *hi}};
}

const char* to_string(TopConfig c) {
    switch (c) {
    case TopConfig::Leaf: return "leaf";
    case TopConfig::Line: return "line";
    case TopConfig::Tri: return "tri";
    case TopConfig::Rec: return "rec";
    }
    return "?";
}

} // namespace lamlab
