#include "swarmseg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace swarmseg {

namespace {

// 1-D squared-distance lower envelope (Felzenszwalb & Huttenlocher).
// f holds per-sample squared offsets; d receives min_j (i-j)^2 + f[j].
void envelope_1d(const std::int64_t* f, std::int64_t* d, int n,
                 std::vector<int>& v, std::vector<double>& z) {
    v.resize(n);
    z.resize(n + 1);
    int k = 0;
    v[0] = 0;
    z[0] = -std::numeric_limits<double>::infinity();
    z[1] = std::numeric_limits<double>::infinity();
    for (int q = 1; q < n; ++q) {
        double s;
        for (;;) {
            const int p = v[k];
            s = (static_cast<double>(f[q] - f[p]) + static_cast<double>(q) * q -
                 static_cast<double>(p) * p) /
                (2.0 * (q - p));
            if (s > z[k])
                break;
            --k;
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = std::numeric_limits<double>::infinity();
    }
    k = 0;
    for (int q = 0; q < n; ++q) {
        while (z[k + 1] < q)
            ++k;
        const std::int64_t dq = q - v[k];
        d[q] = dq * dq + f[v[k]];
    }
}

struct UnionFind {
    std::vector<std::int32_t> parent;

    std::int32_t make() {
        parent.push_back(static_cast<std::int32_t>(parent.size()));
        return parent.back();
    }
    std::int32_t find(std::int32_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

LabelMap label_pixels(int w, int h, const std::vector<std::uint8_t>& data,
                      std::uint8_t fg, Connectivity connectivity) {
    LabelMap out;
    out.width = w;
    out.height = h;
    out.labels.assign(static_cast<std::size_t>(w) * h, 0);

    UnionFind uf;
    uf.make(); // id 0 reserved for background
    std::vector<std::int32_t> provisional(static_cast<std::size_t>(w) * h, 0);
    const bool diag = connectivity == Connectivity::Eight;

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * w + x;
            if (data[idx] != fg)
                continue;
            std::int32_t best = 0;
            auto consider = [&](int nx, int ny) {
                if (nx < 0 || ny < 0 || nx >= w)
                    return;
                const std::int32_t lbl = provisional[static_cast<std::size_t>(ny) * w + nx];
                if (lbl == 0)
                    return;
                if (best == 0)
                    best = lbl;
                else
                    uf.unite(best, lbl);
            };
            consider(x - 1, y);
            consider(x, y - 1);
            if (diag) {
                consider(x - 1, y - 1);
                consider(x + 1, y - 1);
            }
            provisional[idx] = best != 0 ? best : uf.make();
        }
    }

    // Renumber roots 1..K in first-encounter (row-major) order.
    std::vector<std::int32_t> root_to_final(uf.parent.size(), 0);
    std::int32_t next_id = 0;
    for (std::size_t i = 0; i < provisional.size(); ++i) {
        if (provisional[i] == 0)
            continue;
        const std::int32_t root = uf.find(provisional[i]);
        if (root_to_final[root] == 0)
            root_to_final[root] = ++next_id;
        out.labels[i] = root_to_final[root];
    }
    out.count = next_id;
    return out;
}

} // namespace

std::vector<std::int64_t> distance_transform_squared(const BinaryMask& features) {
    const int w = features.width;
    const int h = features.height;
    const bool any = std::any_of(features.data.begin(), features.data.end(),
                                 [](std::uint8_t v) { return v == 255; });
    if (!any)
        throw std::invalid_argument("distance_transform: no features");

    // Row pass: squared distance to the nearest in-row feature; rows without
    // features get a sentinel exceeding any true image distance.
    const std::int64_t inf_d = w + h;
    std::vector<std::int64_t> rowsq(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y) {
        std::int64_t* row = rowsq.data() + static_cast<std::size_t>(y) * w;
        std::int64_t d = inf_d;
        for (int x = 0; x < w; ++x) {
            d = features.at(x, y) == 255 ? 0 : std::min(d + 1, inf_d);
            row[x] = d;
        }
        d = row[w - 1];
        for (int x = w - 1; x >= 0; --x) {
            d = features.at(x, y) == 255 ? 0 : std::min(d + 1, row[x]);
            row[x] = d;
        }
        for (int x = 0; x < w; ++x)
            row[x] *= row[x];
    }

    // Column pass: lower envelope over the row results.
    std::vector<std::int64_t> out(static_cast<std::size_t>(w) * h);
    std::vector<std::int64_t> f(h), d(h);
    std::vector<int> v;
    std::vector<double> z;
    for (int x = 0; x < w; ++x) {
        for (int y = 0; y < h; ++y)
            f[y] = rowsq[static_cast<std::size_t>(y) * w + x];
        envelope_1d(f.data(), d.data(), h, v, z);
        for (int y = 0; y < h; ++y)
            out[static_cast<std::size_t>(y) * w + x] = d[y];
    }
    return out;
}

DistanceField distance_transform(const BinaryMask& features) {
    const std::vector<std::int64_t> sq = distance_transform_squared(features);
    DistanceField out(features.width, features.height);
    for (std::size_t i = 0; i < sq.size(); ++i)
        out.data[i] = std::sqrt(static_cast<double>(sq[i]));
    return out;
}

LabelMap connected_components(const BinaryMask& mask, Connectivity connectivity) {
    return label_pixels(mask.width, mask.height, mask.data, 255, connectivity);
}

BinaryMask find_holes(const BinaryMask& deposit) {
    const int w = deposit.width;
    const int h = deposit.height;
    const LabelMap bg = label_pixels(w, h, deposit.data, 0, Connectivity::Four);

    std::vector<char> touches_border(static_cast<std::size_t>(bg.count) + 1, 0);
    for (int x = 0; x < w; ++x) {
        if (bg.at(x, 0) != 0)
            touches_border[bg.at(x, 0)] = 1;
        if (bg.at(x, h - 1) != 0)
            touches_border[bg.at(x, h - 1)] = 1;
    }
    for (int y = 0; y < h; ++y) {
        if (bg.at(0, y) != 0)
            touches_border[bg.at(0, y)] = 1;
        if (bg.at(w - 1, y) != 0)
            touches_border[bg.at(w - 1, y)] = 1;
    }

    BinaryMask holes(w, h);
    for (std::size_t i = 0; i < holes.data.size(); ++i) {
        const std::int32_t lbl = bg.labels[i];
        if (lbl != 0 && !touches_border[lbl])
            holes.data[i] = 255;
    }
    return holes;
}

BinaryMask interface_band(const BinaryMask& edges, double width) {
    if (width <= 0.0)
        throw std::invalid_argument("interface_band: width must be > 0");
    const std::vector<std::int64_t> sq = distance_transform_squared(edges);
    const double wsq = width * width;
    BinaryMask band(edges.width, edges.height);
    for (std::size_t i = 0; i < sq.size(); ++i)
        band.data[i] = static_cast<double>(sq[i]) <= wsq ? 255 : 0;
    return band;
}

} // namespace swarmseg
