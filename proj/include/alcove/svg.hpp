#pragma once

// Deterministic SVG pictures for rank-2 data: the wall arrangement within a
// radius, a set of shaded alcoves, and a label on the base alcove.  All
// geometry is computed in exact rationals; coordinates are emitted as
// fixed-point decimals, so identical inputs give identical bytes.

#include <array>
#include <string>

#include "alcove/alcoves.hpp"

namespace alcove {

namespace detail {

// orthogonal projection basis and rational scale constants per ambient
// shape; scales approximate unit normalization, exactness is untouched
struct Projection {
  Vec f1, f2;
  Rat s1, s2;

  std::pair<Rat, Rat> project(const Vec& p) const {
    return {dot(p, f1) * s1, dot(p, f2) * s2};
  }
};

inline Projection make_projection(const RootDatum& d) {
  require(d.rank() == 2, "drawing requires a rank-2 datum");
  if (d.ambient == 2) {
    return {Vec{Rat(1), Rat(0)}, Vec{Rat(0), Rat(1)}, Rat(1), Rat(1)};
  }
  if (d.ambient == 3) {
    // plane of the roots; 7071/10000 ~ 1/sqrt(2), 4082/10000 ~ 1/sqrt(6)
    return {Vec{Rat(1), Rat(-1), Rat(0)}, Vec{Rat(1), Rat(1), Rat(-2)},
            Rat(7071, 10000), Rat(4082, 10000)};
  }
  throw ConfigError("no projection for this ambient dimension");
}

inline std::string fixed_point(const Rat& r) {
  // three decimals, round half away from zero, exact arithmetic
  const Rat scaled = Rat(1000) * r;
  const std::int64_t m = scaled < Rat(0) ? -((Rat(1, 2) - scaled).floor())
                                         : (scaled + Rat(1, 2)).floor();
  const bool neg = m < 0;
  std::int64_t a = neg ? -m : m;
  std::string digits = std::to_string(a);
  while (digits.size() < 4) digits.insert(digits.begin(), '0');
  std::string out = digits.substr(0, digits.size() - 3) + "." +
                    digits.substr(digits.size() - 3);
  return (neg ? "-" : "") + out;
}

}  // namespace detail

struct SvgOptions {
  std::int64_t radius = 3;        // wall index range
  std::string fill = "#7aa6d8";   // shaded alcove fill
  std::string label = "A0";
};

// shaded: alcoves to fill, drawn in the given order
inline std::string draw_svg(const RootDatum& d,
                            const std::vector<Alcove>& shaded,
                            const SvgOptions& opt = {}) {
  const detail::Projection proj = detail::make_projection(d);
  const Rat view(opt.radius + 1);
  const std::string vb = detail::fixed_point(-view);
  const std::string vs = detail::fixed_point(Rat(2) * view);
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + vb + " " + vb +
         " " + vs + " " + vs + "\" width=\"640\" height=\"640\">\n";
  svg += "<g transform=\"scale(1,-1)\">\n";
  svg += "<rect x=\"" + vb + "\" y=\"" + vb + "\" width=\"" + vs + "\" height=\"" +
         vs + "\" fill=\"white\"/>\n";

  // shaded alcoves first, as triangles through the projected vertex images
  for (const Alcove& a : shaded) {
    const ExtAffineElement u = element_of_alcove(d, a);
    svg += "<polygon points=\"";
    bool first = true;
    for (const Vec& v : d.vertices) {
      auto [x, y] = proj.project(u.act(v));
      if (!first) svg += " ";
      svg += detail::fixed_point(x) + "," + detail::fixed_point(y);
      first = false;
    }
    svg += "\" fill=\"" + opt.fill + "\" fill-opacity=\"0.6\" stroke=\"none\"/>\n";
  }

  // the wall arrangement: each line clipped to the viewport box
  for (std::size_t i = 0; i < d.positive_roots.size(); ++i) {
    for (std::int64_t k = -opt.radius; k <= opt.radius; ++k) {
      // <alpha, p> = k in projected coordinates a*u + b*v = k
      const Rat a = dot(d.positive_roots[i], proj.f1) /
                    (dot(proj.f1, proj.f1) * proj.s1);
      const Rat b = dot(d.positive_roots[i], proj.f2) /
                    (dot(proj.f2, proj.f2) * proj.s2);
      std::vector<std::pair<Rat, Rat>> pts;
      auto push_unique = [&](const Rat& x, const Rat& y) {
        for (auto& [px, py] : pts)
          if (px == x && py == y) return;
        pts.emplace_back(x, y);
      };
      if (!b.is_zero()) {
        for (const Rat& x : {-view, view}) {
          const Rat y = (Rat(k) - a * x) / b;
          if (-view <= y && y <= view) push_unique(x, y);
        }
      }
      if (!a.is_zero()) {
        for (const Rat& y : {-view, view}) {
          const Rat x = (Rat(k) - b * y) / a;
          if (-view <= x && x <= view) push_unique(x, y);
        }
      }
      if (pts.size() < 2) continue;
      svg += "<line x1=\"" + detail::fixed_point(pts[0].first) + "\" y1=\"" +
             detail::fixed_point(pts[0].second) + "\" x2=\"" +
             detail::fixed_point(pts[1].first) + "\" y2=\"" +
             detail::fixed_point(pts[1].second) +
             "\" stroke=\"#404040\" stroke-width=\"0.015\"/>\n";
    }
  }

  // base alcove label at its projected barycenter
  {
    auto [x, y] = proj.project(d.barycenter);
    svg += "<text x=\"" + detail::fixed_point(x) + "\" y=\"" +
           detail::fixed_point(-y) +
           "\" font-size=\"0.12\" text-anchor=\"middle\" "
           "transform=\"scale(1,-1)\">" +
           opt.label + "</text>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

} // namespace alcove
