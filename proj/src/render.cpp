#include "opforge/render.hpp"

#include <cstdio>
#include <map>

namespace opforge {

namespace {

constexpr double kPanel = 240.0;  // side length of each panel
constexpr double kMargin = 20.0;
constexpr int kChart = 40;        // ASCII chart width

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

double to_double(const Rational& r) { return static_cast<double>(r); }

std::string header(double width, double height) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(width) + "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) +
         "\">\n";
}

std::string rect(const std::string& id, const std::string& cls, double x, double y, double w, double h) {
  return "  <rect id=\"" + id + "\" class=\"" + cls + "\" x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" +
         num(w) + "\" height=\"" + num(h) + "\"/>\n";
}

std::string label(double x, double y, const std::string& text) {
  return "  <text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"10\">" + text + "</text>\n";
}

const char* kStyle =
    "  <style>rect.frame{fill:none;stroke:#999}rect.muffler{fill:#bbb;fill-opacity:0.5;stroke:#333}"
    "rect.hole{fill:#fff;stroke:#333;stroke-dasharray:2,2}circle{fill:none;stroke:#333}"
    "circle.strand{fill:#8ac}line.strand{stroke:#26a;stroke-width:2}rect.slot{fill:#ddd;stroke:#333}"
    "rect.bar{fill:#bbb;stroke:#333}</style>\n";

struct Circle {
  double cx;
  double cy;
  double r;
};

void place(const DiskForest& f, NodeId node, Circle c, std::vector<Circle>& out) {
  out[node] = c;
  const auto kids = f.children(node);
  const double m = static_cast<double>(kids.size());
  for (std::size_t i = 0; i < kids.size(); ++i) {
    const double slot = c.r / m;
    const Circle child{c.cx - c.r + (2.0 * static_cast<double>(i) + 1.0) * slot, c.cy, 0.8 * slot};
    place(f, kids[i], child, out);
  }
}

std::vector<Circle> layout(const DiskForest& f) {
  std::vector<Circle> circles(f.size());
  place(f, DiskForest::kRoot, Circle{kPanel / 2, kPanel / 2, kPanel / 2}, circles);
  return circles;
}

// Row of a time chart: '#' across the interval, '.' elsewhere.
std::string chart_row(const AffineMap1& t) {
  std::string row(kChart, '.');
  const double lo = to_double(t.lo()) * kChart;
  const double hi = to_double(t.hi()) * kChart;
  for (int i = 0; i < kChart; ++i) {
    const double mid = i + 0.5;
    if (mid > lo && mid < hi) {
      row[static_cast<std::size_t>(i)] = '#';
    }
  }
  return "|" + row + "|";
}

void ascii_forest(const DiskForest& f, NodeId node, int depth, std::string& out) {
  out += std::string(static_cast<std::size_t>(2 * depth), ' ') + f.name(node) + "\n";
  for (NodeId c : f.children(node)) {
    ascii_forest(f, c, depth + 1, out);
  }
}

}  // namespace

std::string render_svg(const InfectionDiagram& d) {
  const auto circles = layout(d.forest());
  const double width = 3 * kMargin + 2 * kPanel;
  const double height = 2 * kMargin + kPanel;
  std::string out = header(width, height);
  out += kStyle;
  const auto y_of = [&](const Rational& t) { return kMargin + kPanel * (1.0 - to_double(t)); };

  out += " <g id=\"time\">\n";
  out += rect("frame", "frame", kMargin, kMargin, kPanel, kPanel);
  const auto strands = d.strands();
  for (std::size_t j = 0; j < strands.size(); ++j) {
    const double x = kMargin + circles[strands[j]].cx;
    out += "  <line id=\"strand-" + std::to_string(j + 1) + "\" class=\"strand\" x1=\"" + num(x) + "\" y1=\"" +
           num(kMargin) + "\" x2=\"" + num(x) + "\" y2=\"" + num(kMargin + kPanel) + "\"/>\n";
  }
  for (std::size_t k = 1; k <= d.arity(); ++k) {
    const Muffler& m = d.muffler(k);
    const Circle& c = circles[m.outer];
    const double top = y_of(m.time.hi());
    const double h = y_of(m.time.lo()) - top;
    out += rect("muffler-" + std::to_string(k), "muffler", kMargin + c.cx - c.r, top, 2 * c.r, h);
    if (m.color() > 1) {
      for (std::size_t j = 0; j < m.holes.size(); ++j) {
        const Circle& hc = circles[m.holes[j]];
        out += rect("muffler-" + std::to_string(k) + "-hole-" + std::to_string(j + 1), "hole",
                    kMargin + hc.cx - hc.r, top, 2 * hc.r, h);
      }
    }
    out += label(kMargin + c.cx - c.r + 2, top + 10, std::to_string(k));
  }
  out += " </g>\n";

  out += " <g id=\"cross-section\" transform=\"translate(" + num(2 * kMargin + kPanel) + "," + num(kMargin) +
         ")\">\n";
  std::map<NodeId, std::size_t> strand_index;
  for (std::size_t j = 0; j < strands.size(); ++j) {
    strand_index[strands[j]] = j + 1;
  }
  for (NodeId v = 0; v < d.forest().size(); ++v) {
    const Circle& c = circles[v];
    const bool strand = strand_index.count(v) > 0 && v != DiskForest::kRoot;
    out += "  <circle id=\"disk-" + d.forest().name(v) + "\" class=\"" + (strand ? "strand" : "disk") +
           "\" cx=\"" + num(c.cx) + "\" cy=\"" + num(c.cy) + "\" r=\"" + num(c.r) + "\"/>\n";
  }
  out += " </g>\n";
  out += label(kMargin, height - 4, to_string(d.order()));
  return out + "</svg>\n";
}

std::string render_svg(const CubesElement& e) {
  const double size = 2 * kMargin + kPanel;
  std::string out = header(size, size);
  out += kStyle;
  out += rect("frame", "frame", kMargin, kMargin, kPanel, kPanel);
  for (std::size_t i = 0; i < e.arity(); ++i) {
    const auto& axes = e.cubes()[i].axes;
    double x0 = 0;
    double x1 = 1;
    if (axes.size() >= 2) {
      x0 = to_double(axes[0].lo());
      x1 = to_double(axes[0].hi());
    }
    const AffineMap1& vertical = axes.size() >= 2 ? axes[1] : axes[0];
    const double top = kMargin + kPanel * (1.0 - to_double(vertical.hi()));
    const double h = kPanel * to_double(vertical.hi() - vertical.lo());
    out += rect("cube-" + std::to_string(i + 1), "slot", kMargin + kPanel * x0, top, kPanel * (x1 - x0), h);
    out += label(kMargin + kPanel * x0 + 2, top + 10, std::to_string(i + 1));
  }
  return out + "</svg>\n";
}

std::string render_svg(const OverlapElement& e) {
  const double lane = 16.0;
  const double width = 2 * kMargin + kPanel;
  const double height = 2 * kMargin + lane * static_cast<double>(std::max<std::size_t>(e.arity(), 1));
  std::string out = header(width, height);
  out += kStyle;
  const Permutation position = e.order().inverse();
  for (std::size_t i = 0; i < e.arity(); ++i) {
    const auto& t = e.intervals()[i];
    const double y = kMargin + lane * static_cast<double>(position(static_cast<int>(i) + 1) - 1);
    const double x = kMargin + kPanel * to_double(t.lo());
    out += rect("interval-" + std::to_string(i + 1), "bar", x, y + 2, kPanel * to_double(t.hi() - t.lo()), lane - 4);
    out += label(x + 2, y + lane - 4, std::to_string(i + 1));
  }
  return out + "</svg>\n";
}

std::string render_ascii(const InfectionDiagram& d) {
  std::string out = "diagram sig=(";
  const auto colors = d.input_colors();
  for (std::size_t i = 0; i < colors.size(); ++i) {
    out += (i > 0 ? "," : "") + std::to_string(colors[i]);
  }
  out += ";" + std::to_string(d.output_color()) + ") order=" + to_string(d.order()) + "\n";
  for (std::size_t k = 1; k <= d.arity(); ++k) {
    const Muffler& m = d.muffler(k);
    std::string holes;
    for (std::size_t j = 0; j < m.holes.size(); ++j) {
      holes += (j > 0 ? "," : "") + d.forest().name(m.holes[j]);
    }
    char head[16];
    std::snprintf(head, sizeof head, "%3zu ", k);
    out += head + chart_row(m.time) + " " + d.forest().name(m.outer) + " (" + holes + ")\n";
  }
  out += "forest:\n";
  ascii_forest(d.forest(), DiskForest::kRoot, 1, out);
  return out;
}

std::string render_ascii(const CubesElement& e) {
  std::string out = "cubes dim=" + std::to_string(e.dimension()) + "\n";
  for (std::size_t i = 0; i < e.arity(); ++i) {
    for (std::size_t a = 0; a < e.dimension(); ++a) {
      char head[24];
      std::snprintf(head, sizeof head, "%3zu.%zu ", i + 1, a + 1);
      out += head + chart_row(e.cubes()[i].axes[a]) + "\n";
    }
  }
  return out;
}

std::string render_ascii(const OverlapElement& e) {
  std::string out = "overlap order=" + to_string(e.order()) + "\n";
  for (std::size_t p = 1; p <= e.arity(); ++p) {
    const auto i = static_cast<std::size_t>(e.order()(static_cast<int>(p)));
    char head[16];
    std::snprintf(head, sizeof head, "%3zu ", i);
    out += head + chart_row(e.intervals()[i - 1]) + "\n";
  }
  return out;
}

}  // namespace opforge
