#include "gacfit/cli/contour.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "gacfit/error.hpp"

namespace gacfit::cli {

namespace {

// Edge ids: node (i, j) owns the horizontal edge to (i+1, j) as 2k and the
// vertical edge to (i, j+1) as 2k+1, with k = j·samples + i.
struct Grid {
    int n;
    BoundingBox box;
    std::vector<double> values;

    double x(int i) const { return box.xmin + box.width() * i / (n - 1); }
    double y(int j) const { return box.ymin + box.height() * j / (n - 1); }
    double at(int i, int j) const { return values[static_cast<std::size_t>(j) * n + i]; }

    long hedge(int i, int j) const { return 2L * (static_cast<long>(j) * n + i); }
    long vedge(int i, int j) const { return 2L * (static_cast<long>(j) * n + i) + 1; }

    Point2 crossing(long id) const
    {
        const long k = id / 2;
        const int i = static_cast<int>(k % n);
        const int j = static_cast<int>(k / n);
        const int i2 = id % 2 == 0 ? i + 1 : i;
        const int j2 = id % 2 == 0 ? j : j + 1;
        const double f0 = at(i, j);
        const double f1 = at(i2, j2);
        const double t = f0 / (f0 - f1);
        return {x(i) + t * (x(i2) - x(i)), y(j) + t * (y(j2) - y(j))};
    }
};

struct Links {
    std::array<long, 2> to{-1, -1};

    void add(long e)
    {
        if (to[0] < 0)
            to[0] = e;
        else
            to[1] = e;
    }
    int degree() const { return (to[0] >= 0) + (to[1] >= 0); }
};

double segment_distance(const Point2& p, const Point2& a, const Point2& b)
{
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

} // namespace

std::vector<Polyline> trace_zero_set(const std::function<double(double, double)>& f, const BoundingBox& box,
                                     int samples)
{
    if (samples < 2)
        throw Error(ErrorCode::InvalidArgument, "contour grid needs at least 2 samples per axis");
    if (!(box.width() > 0.0) || !(box.height() > 0.0))
        throw Error(ErrorCode::InvalidArgument, "contour box must have positive extent");

    Grid g{samples, box, {}};
    g.values.resize(static_cast<std::size_t>(samples) * samples);
    for (int j = 0; j < samples; ++j) {
        for (int i = 0; i < samples; ++i) {
            double v = f(g.x(i), g.y(j));
            // Exact zeros are nudged so every crossing is strict and interpolable.
            if (v == 0.0 || !std::isfinite(v))
                v = v == 0.0 ? std::numeric_limits<double>::min() : std::copysign(1e300, v);
            g.values[static_cast<std::size_t>(j) * samples + i] = v;
        }
    }

    std::unordered_map<long, Links> links;
    auto connect = [&](long a, long b) {
        links[a].add(b);
        links[b].add(a);
    };

    for (int j = 0; j + 1 < samples; ++j) {
        for (int i = 0; i + 1 < samples; ++i) {
            const double v00 = g.at(i, j), v10 = g.at(i + 1, j), v11 = g.at(i + 1, j + 1), v01 = g.at(i, j + 1);
            const int idx = (v00 > 0) | (v10 > 0) << 1 | (v11 > 0) << 2 | (v01 > 0) << 3;
            const long bottom = g.hedge(i, j), right = g.vedge(i + 1, j), top = g.hedge(i, j + 1),
                       left = g.vedge(i, j);
            switch (idx) {
            case 0:
            case 15: break;
            case 1:
            case 14: connect(left, bottom); break;
            case 2:
            case 13: connect(bottom, right); break;
            case 3:
            case 12: connect(left, right); break;
            case 4:
            case 11: connect(right, top); break;
            case 6:
            case 9: connect(bottom, top); break;
            case 7:
            case 8: connect(left, top); break;
            case 5:
            case 10: {
                // Corners 00 and 11 share a sign. Whether the centre agrees
                // with them decides which pair of corners gets cut off.
                const bool centre_pos = (v00 + v10 + v11 + v01) > 0;
                const bool diag_pos = v00 > 0;
                if (centre_pos == diag_pos) {
                    connect(left, top);
                    connect(bottom, right);
                } else {
                    connect(left, bottom);
                    connect(right, top);
                }
                break;
            }
            }
        }
    }

    std::vector<Polyline> out;
    std::unordered_map<long, bool> visited;
    auto walk = [&](long start) {
        Polyline line;
        long prev = -1;
        long cur = start;
        while (true) {
            visited[cur] = true;
            line.push_back(g.crossing(cur));
            const Links& l = links[cur];
            long next = -1;
            for (long e : l.to)
                if (e >= 0 && e != prev && !visited[e]) {
                    next = e;
                    break;
                }
            if (next < 0) {
                // Closed loop: the start is a neighbour of the final vertex.
                if (cur != start && (l.to[0] == start || l.to[1] == start) && line.size() > 2)
                    line.push_back(line.front());
                break;
            }
            prev = cur;
            cur = next;
        }
        out.push_back(std::move(line));
    };

    // Sort the ids so the output does not depend on hash-map iteration order.
    std::vector<long> ids;
    ids.reserve(links.size());
    for (const auto& [id, l] : links)
        ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    for (long id : ids)
        if (links[id].degree() == 1 && !visited[id])
            walk(id);
    for (long id : ids)
        if (!visited[id])
            walk(id);
    return out;
}

double distance_to(const std::vector<Polyline>& lines, const Point2& p)
{
    double best = std::numeric_limits<double>::infinity();
    for (const Polyline& line : lines) {
        if (line.size() == 1)
            best = std::min(best, std::hypot(p.x - line[0].x, p.y - line[0].y));
        for (std::size_t k = 0; k + 1 < line.size(); ++k)
            best = std::min(best, segment_distance(p, line[k], line[k + 1]));
    }
    return best;
}

} // namespace gacfit::cli
