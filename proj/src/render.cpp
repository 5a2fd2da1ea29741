#include "symwsc/render.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace symwsc {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Pt {
    double x = 0, y = 0;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v + 0.0); // normalize -0.00
    return buf;
}

Pt ngon_vertex(int i, int n) {
    const double a = 2.0 * kPi * i / n;
    return {std::cos(a), std::sin(a)};
}

std::string subset_label(const KSubset& s) {
    return s.n <= 9 ? s.to_compact() : s.to_string();
}

struct Canvas {
    RenderFormat fmt;
    double scale;
    std::ostringstream out;

    // svg y-axis points down; flip so that the pictures match the tikz ones
    double tx(double x) const { return fmt == RenderFormat::Svg ? scale * (x + 1.3) : x; }
    double ty(double y) const { return fmt == RenderFormat::Svg ? scale * (1.3 - y) : y; }

    void begin() {
        if (fmt == RenderFormat::Svg) {
            const double side = 2.6 * scale;
            out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(side)
                << "\" height=\"" << num(side) << "\" viewBox=\"0 0 " << num(side) << ' '
                << num(side) << "\">\n";
        } else {
            out << "\\begin{tikzpicture}[scale=" << num(scale / 80.0) << "]\n";
        }
    }
    void end() {
        out << (fmt == RenderFormat::Svg ? "</svg>\n" : "\\end{tikzpicture}\n");
    }

    void polygon(const std::vector<Pt>& pts, const std::string& fill, double opacity) {
        if (fmt == RenderFormat::Svg) {
            out << "<polygon points=\"";
            for (size_t i = 0; i < pts.size(); ++i) {
                if (i) out << ' ';
                out << num(tx(pts[i].x)) << ',' << num(ty(pts[i].y));
            }
            out << "\" fill=\"" << fill << "\" fill-opacity=\"" << num(opacity)
                << "\" stroke=\"#222\" stroke-width=\"1\"/>\n";
        } else {
            out << "\\draw[fill=" << (fill == "#ffffff" ? "white" : "black")
                << ", fill opacity=" << num(opacity) << "]";
            for (const Pt& p : pts) out << " (" << num(p.x) << ',' << num(p.y) << ") --";
            out << " cycle;\n";
        }
    }

    void line(Pt a, Pt b, const std::string& color, double width = 1.0) {
        if (fmt == RenderFormat::Svg)
            out << "<line x1=\"" << num(tx(a.x)) << "\" y1=\"" << num(ty(a.y)) << "\" x2=\""
                << num(tx(b.x)) << "\" y2=\"" << num(ty(b.y)) << "\" stroke=\"" << color
                << "\" stroke-width=\"" << num(width) << "\"/>\n";
        else
            out << "\\draw[thick] (" << num(a.x) << ',' << num(a.y) << ") -- (" << num(b.x)
                << ',' << num(b.y) << ");\n";
    }

    void disk(Pt c, double r, const std::string& fill) {
        if (fmt == RenderFormat::Svg)
            out << "<circle cx=\"" << num(tx(c.x)) << "\" cy=\"" << num(ty(c.y)) << "\" r=\""
                << num(r * scale) << "\" fill=\"" << fill
                << "\" stroke=\"#222\" stroke-width=\"1\"/>\n";
        else
            out << "\\filldraw[fill=" << (fill == "#ffffff" ? "white" : "black") << "] ("
                << num(c.x) << ',' << num(c.y) << ") circle (" << num(r) << ");\n";
    }

    void text(Pt c, const std::string& s) {
        if (fmt == RenderFormat::Svg)
            out << "<text x=\"" << num(tx(c.x)) << "\" y=\"" << num(ty(c.y))
                << "\" font-size=\"11\" text-anchor=\"middle\">" << s << "</text>\n";
        else
            out << "\\node at (" << num(c.x) << ',' << num(c.y) << ") {\\tiny " << s << "};\n";
    }

    void tick(Pt a, Pt b, const std::string& color) { line(a, b, color, 2.0); }
};

// deterministic relaxation layout: marked points fixed on the circle
template <typename Neighbors>
std::vector<Pt> relax(int count, const std::vector<std::pair<int, Pt>>& fixed,
                      Neighbors neighbors) {
    std::vector<Pt> pos(count, Pt{0, 0});
    std::vector<char> pinned(count, 0);
    for (auto& [i, p] : fixed) {
        pos[i] = p;
        pinned[i] = 1;
    }
    for (int iter = 0; iter < 160; ++iter) {
        for (int v = 0; v < count; ++v) {
            if (pinned[v]) continue;
            Pt acc{0, 0};
            int deg = 0;
            for (int w : neighbors(v)) {
                acc.x += pos[w].x;
                acc.y += pos[w].y;
                ++deg;
            }
            if (deg) pos[v] = {acc.x / deg, acc.y / deg};
        }
    }
    return pos;
}

} // namespace

RenderFormat parse_format(const std::string& s) {
    if (s == "svg") return RenderFormat::Svg;
    if (s == "tikz") return RenderFormat::Tikz;
    throw InputError("unsupported render format: " + s);
}

std::string render_tiling(const PlabicTiling& T, RenderFormat fmt) {
    // vertex positions: V_S = sum of the n-gon corners of S, normalized
    std::map<KSubset, Pt> pos;
    double radius = 1.0;
    for (const KSubset& s : T.vertices.members) {
        Pt p{0, 0};
        for (int i : s.elems) {
            Pt v = ngon_vertex(i, T.n);
            p.x += v.x;
            p.y += v.y;
        }
        pos[s] = p;
        radius = std::max(radius, std::hypot(p.x, p.y));
    }
    for (auto& [s, p] : pos) {
        p.x /= radius;
        p.y /= radius;
    }

    Canvas cv{fmt, 240.0, {}};
    cv.begin();
    for (const Clique& c : T.faces) {
        std::vector<Pt> poly;
        for (const KSubset& m : c.members) poly.push_back(pos.at(m));
        cv.polygon(poly, c.color == Clique::Color::White ? "#ffffff" : "#555555",
                   c.color == Clique::Color::White ? 1.0 : 0.85);
    }
    for (const TilingEdge& e : T.edges) cv.line(pos.at(e.a), pos.at(e.b), "#222222");
    for (const KSubset& s : T.vertices.members) {
        cv.disk(pos.at(s), 0.012, "#ffffff");
        Pt p = pos.at(s);
        cv.text({p.x, p.y + 0.05}, subset_label(s));
    }
    cv.end();
    return cv.out.str();
}

std::string render_graph(const PlabicGraph& G, RenderFormat fmt) {
    const int V = static_cast<int>(G.verts.size());
    // node ids: 0..V-1 internal, V..V+n-1 marked
    std::vector<std::pair<int, Pt>> fixed;
    for (int p = 1; p <= G.n; ++p) {
        const double a = 2.0 * kPi * (p + 0.5) / G.n;
        fixed.push_back({V + p - 1, Pt{std::cos(a), std::sin(a)}});
    }
    std::vector<std::vector<int>> adj(V + G.n);
    for (const auto& e : G.edges) {
        const int a = e.a >= 0 ? e.a : V + (-e.a) - 1;
        const int b = e.b >= 0 ? e.b : V + (-e.b) - 1;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    auto pos = relax(V + G.n, fixed, [&](int v) -> const std::vector<int>& { return adj[v]; });

    Canvas cv{fmt, 240.0, {}};
    cv.begin();
    for (const auto& e : G.edges) {
        const int a = e.a >= 0 ? e.a : V + (-e.a) - 1;
        const int b = e.b >= 0 ? e.b : V + (-e.b) - 1;
        cv.line(pos[a], pos[b], "#222222");
    }
    for (int p = 1; p <= G.n; ++p) {
        cv.disk(pos[V + p - 1], 0.008, "#ffffff");
        Pt q = pos[V + p - 1];
        cv.text({q.x * 1.1, q.y * 1.1}, std::to_string(p));
    }
    for (int v = 0; v < V; ++v)
        cv.disk(pos[v], 0.018, G.verts[v].color == VColor::White ? "#ffffff" : "#222222");
    cv.end();
    return cv.out.str();
}

std::string render_weave(const WeaveGraph& W, RenderFormat fmt) {
    static const char* palette[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad",
                                    "#d68910", "#16a085"};
    const int V = static_cast<int>(W.verts.size());
    const int B = static_cast<int>(W.boundary.size());
    std::vector<std::pair<int, Pt>> fixed;
    for (int b = 0; b < B; ++b) {
        const auto& ep = W.boundary[b];
        const double a =
            2.0 * kPi * ((ep.p - 1) + 0.35 + 0.3 * ep.sigma / std::max(1, W.k - 1)) / W.n;
        fixed.push_back({V + b, Pt{std::cos(a), std::sin(a)}});
    }
    std::vector<std::vector<int>> adj(V + B);
    for (const auto& e : W.edges) {
        const int a = e.u >= 0 ? e.u : V + (-e.u) - 1;
        const int b = e.v >= 0 ? e.v : V + (-e.v) - 1;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    auto pos = relax(V + B, fixed, [&](int v) -> const std::vector<int>& { return adj[v]; });

    Canvas cv{fmt, 240.0, {}};
    cv.begin();
    for (const auto& e : W.edges) {
        const int a = e.u >= 0 ? e.u : V + (-e.u) - 1;
        const int b = e.v >= 0 ? e.v : V + (-e.v) - 1;
        cv.line(pos[a], pos[b], palette[(e.sigma - 1) % 6]);
    }
    // boundary ticks, one per slot, in the layer color
    for (int b = 0; b < B; ++b) {
        Pt p = pos[V + b];
        Pt q{p.x * 1.06, p.y * 1.06};
        cv.tick(p, q, palette[(W.boundary[b].sigma - 1) % 6]);
    }
    for (int v = 0; v < V; ++v)
        cv.disk(pos[v], W.verts[v].hexavalent ? 0.02 : 0.013,
                W.verts[v].hexavalent ? "#222222" : "#ffffff");
    cv.end();
    return cv.out.str();
}

} // namespace symwsc
