#include "qloci/render.hpp"

#include <algorithm>
#include <sstream>

#include "qloci/lacing.hpp"

namespace qloci {

std::string render_svg(const PipeDream& p, int cell) {
  const int w = std::max(1, p.cols()) * cell, h = std::max(1, p.rows()) * cell, c2 = cell / 2;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
    << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
    << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\" stroke=\"black\"/>\n"
    << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  for (int i = 1; i <= p.rows(); ++i)
    for (int j = 1; j <= p.cols(); ++j) {
      int x = (j - 1) * cell, y = (i - 1) * cell;
      if (p.has_cross(i, j)) {
        s << "<path d=\"M" << x << " " << y + c2 << " h" << cell << " M" << x + c2 << " " << y
          << " v" << cell << "\"/>\n";
      } else {
        // west to north and south to east
        s << "<path d=\"M" << x << " " << y + c2 << " A" << c2 << " " << c2 << " 0 0 0 " << x + c2
          << " " << y << " M" << x + c2 << " " << y + cell << " A" << c2 << " " << c2 << " 0 0 1 "
          << x + cell << " " << y + c2 << "\"/>\n";
      }
    }
  s << "</g>\n</svg>\n";
  return s.str();
}

std::string render_lacing_text(const BipartiteQuiver& q, const LacingDiagram& w) {
  std::ostringstream s;
  const int n = q.n();
  for (int k = n; k >= 1; --k) {
    s << "y" << k << " -> x" << k << ":";
    for (int i = 1; i <= w.beta(k).rows(); ++i)
      if (int j = w.beta(k).col_of(i)) s << " " << i << "-" << j;
    s << "\nx" << k << " <- y" << k - 1 << ":";
    for (int i = 1; i <= w.alpha(k).rows(); ++i)
      if (int j = w.alpha(k).col_of(i)) s << " " << j << "-" << i;
    s << "\n";
  }
  for (auto& lace : laces_of(q, w)) {
    s << "lace";
    for (std::size_t t = 0; t < lace.dots.size(); ++t)
      s << " " << to_string(Vertex::at_position(n, lace.left + static_cast<int>(t))) << "."
        << lace.dots[t];
    s << "\n";
  }
  s << "crossings " << crossings(q, w) << "\n";
  return s.str();
}

std::string render_lacing_svg(const BipartiteQuiver& q, const LacingDiagram& w, bool extended) {
  const int n = q.n(), npos = 2 * n + 1, dx = 80, dy = 30;
  auto arrows = extended_arrows(q, extend(q, w));
  // Row index of a dot: real dots are 1..d; virtual dots sit above or below.
  auto index_of = [&](const Range& real, int i) { return i - real.first + 1; };
  int top = 0, bottom = 0;
  for (int p = 0; p < npos; ++p) bottom = std::max(bottom, q.dim(Vertex::at_position(n, p)));
  if (extended)
    for (auto& a : arrows) {
      const int m = static_cast<int>(a.to_right.size());
      top = std::max({top, a.left_real.first - 1, a.right_real.first - 1});
      bottom = std::max({bottom, index_of(a.left_real, m), index_of(a.right_real, m)});
    }
  auto X = [&](int p) { return 40 + dx * p; };
  auto Y = [&](int idx) { return 50 + dy * (idx - 1 + top); };
  const int width = X(npos - 1) + 40, height = Y(bottom) + 30;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\">\n<g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
  for (int p = 0; p < npos; ++p)
    s << "<text x=\"" << X(p) << "\" y=\"20\">" << to_string(Vertex::at_position(n, p)) << "</text>\n";
  s << "</g>\n<g stroke=\"black\" stroke-width=\"1.5\">\n";
  for (auto& a : arrows) {
    const int m = static_cast<int>(a.to_right.size());
    for (int i = 1; i <= m; ++i) {
      const int j = a.to_right[i - 1];
      const bool real = a.left_real.contains(i) && a.right_real.contains(j);
      if (!real && !extended) continue;
      s << "<line x1=\"" << X(a.left_pos) << "\" y1=\"" << Y(index_of(a.left_real, i)) << "\" x2=\""
        << X(a.left_pos + 1) << "\" y2=\"" << Y(index_of(a.right_real, j)) << "\""
        << (real ? "" : " stroke=\"red\" stroke-dasharray=\"4 3\"") << "/>\n";
    }
  }
  s << "</g>\n";
  for (int p = 0; p < npos; ++p)
    for (int r = 1; r <= q.dim(Vertex::at_position(n, p)); ++r)
      s << "<circle cx=\"" << X(p) << "\" cy=\"" << Y(r) << "\" r=\"4\" fill=\"black\"/>\n";
  if (extended)
    for (auto& a : arrows) {
      const int m = static_cast<int>(a.to_right.size());
      for (int i = 1; i <= m; ++i) {
        if (!a.left_real.contains(i))
          s << "<circle cx=\"" << X(a.left_pos) << "\" cy=\"" << Y(index_of(a.left_real, i))
            << "\" r=\"4\" fill=\"red\"/>\n";
        if (!a.right_real.contains(i))
          s << "<circle cx=\"" << X(a.left_pos + 1) << "\" cy=\"" << Y(index_of(a.right_real, i))
            << "\" r=\"4\" fill=\"red\"/>\n";
      }
    }
  s << "</svg>\n";
  return s.str();
}

}  // namespace qloci
