#include "ccsmooth/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "ccsmooth/join.hpp"
#include "json.hpp"

namespace ccsmooth {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool to_number(const std::string& s, double& v) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Sign join_sign(const Approximation& a, std::size_t alpha) {
  return alpha % 2 == 0 ? a.orientation.first_piece : -a.orientation.first_piece;
}

}  // namespace

DataSeries parse_csv(std::istream& in, const CsvOptions& opts) {
  std::vector<double> x, f;
  std::vector<std::size_t> lines;
  std::string raw;
  std::size_t lineno = 0;
  bool seen_row = false;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line);
    double xv = 0.0;
    if (!seen_row) {
      seen_row = true;
      if (!fields.empty() && !to_number(fields[0], xv)) continue;  // header
    }
    if (fields.size() <= opts.value_column) {
      throw ParseError(lineno, "expected at least " + std::to_string(opts.value_column + 1) +
                                   " fields, found " + std::to_string(fields.size()));
    }
    double fv = 0.0;
    if (!to_number(fields[0], xv)) throw ParseError(lineno, "non-numeric x '" + fields[0] + "'");
    const std::string& fs = fields[opts.value_column];
    if (!to_number(fs, fv)) throw ParseError(lineno, "non-numeric value '" + fs + "'");
    if (!std::isfinite(xv) || !std::isfinite(fv)) throw ParseError(lineno, "non-finite value");
    if (!x.empty()) {
      if (xv == x.back()) {
        throw ParseError(lineno, "duplicate x (same as line " + std::to_string(lines.back()) + ")");
      }
      if (xv < x.back()) throw ParseError(lineno, "x not increasing");
    }
    x.push_back(xv);
    f.push_back(fv);
    lines.push_back(lineno);
  }
  if (x.empty()) throw ParseError(0, "no data rows");
  return DataSeries(std::move(x), std::move(f));
}

DataSeries read_csv_file(const std::string& path, const CsvOptions& opts) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_csv(in, opts);
}

std::string approximation_json(const DataSeries& d, const Approximation& a) {
  using nlohmann::json;
  json j;
  j["n"] = d.size();
  j["q"] = a.q;
  j["orientation"] = to_string(a.orientation);
  j["h"] = a.h;
  j["sign_changes_used"] = a.sign_changes_used;
  json pieces = json::array();
  for (const auto& p : a.pieces) pieces.push_back({{"first", p.first + 1}, {"last", p.last + 1}});
  j["pieces"] = pieces;
  json joins = json::array();
  for (const auto& jn : a.joins) joins.push_back({{"s", jn.s + 1}, {"t", jn.t + 1}});
  j["joins"] = joins;
  const auto& diag = a.diagnostics;
  if (diag.critical) {
    j["critical"] = {{"j_star", diag.critical->j_star + 1},
                     {"k", diag.critical->k + 1},
                     {"k_plus", diag.critical->k_plus + 1},
                     {"piece", diag.critical->beta + 1}};
  } else {
    j["critical"] = nullptr;
  }
  json cert = json::array();
  for (std::size_t k : diag.certificate) cert.push_back(k + 1);
  j["certificate"] = cert;
  j["certificate_size"] = diag.certificate.size();
  j["pinned_first"] = diag.pinned_first;
  j["pinned_last"] = diag.pinned_last;
  j["x"] = std::vector<double>(d.x().begin(), d.x().end());
  j["f"] = std::vector<double>(d.f().begin(), d.f().end());
  j["y"] = a.y;
  return j.dump(2) + "\n";
}

std::string approximation_csv(const DataSeries& d, const Approximation& a) {
  std::ostringstream os;
  os << "# q=" << a.q << "\n"
     << "# orientation=" << to_string(a.orientation) << "\n"
     << "# h=" << fmt(a.h) << "\n"
     << "# sign_changes_used=" << a.sign_changes_used << "\n";
  os << "# joins=";
  for (std::size_t i = 0; i < a.joins.size(); ++i) {
    os << (i ? " " : "") << a.joins[i].s + 1 << "-" << a.joins[i].t + 1;
  }
  os << "\n";
  if (a.diagnostics.critical) os << "# j_star=" << a.diagnostics.critical->j_star + 1 << "\n";
  os << "# certificate_size=" << a.diagnostics.certificate.size() << "\n";
  os << "x,f,y\n";
  for (std::size_t j = 0; j < d.size(); ++j) {
    os << fmt(d.x(j)) << "," << fmt(d.f(j)) << "," << fmt(a.y[j]) << "\n";
  }
  return os.str();
}

std::string render_svg(const DataSeries& d, const Approximation& a) {
  constexpr double W = 800, H = 500, M = 40;
  const auto [xmin_it, xmax_it] = std::minmax_element(d.x().begin(), d.x().end());
  double xmin = *xmin_it, xmax = *xmax_it;
  double ymin = std::min(*std::min_element(d.f().begin(), d.f().end()),
                         *std::min_element(a.y.begin(), a.y.end()));
  double ymax = std::max(*std::max_element(d.f().begin(), d.f().end()),
                         *std::max_element(a.y.begin(), a.y.end()));
  // Parallelogram corners can overshoot the data range by up to h.
  ymin -= a.h;
  ymax += a.h;
  if (xmax == xmin) {
    xmin -= 1;
    xmax += 1;
  }
  if (ymax == ymin) {
    ymin -= 1;
    ymax += 1;
  }
  auto px = [&](double x) { return M + (x - xmin) / (xmax - xmin) * (W - 2 * M); };
  auto py = [&](double y) { return H - M - (y - ymin) / (ymax - ymin) * (H - 2 * M); };

  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << " " << H << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<rect x=\"" << M << "\" y=\"" << M << "\" width=\"" << W - 2 * M << "\" height=\""
     << H - 2 * M << "\" fill=\"none\" stroke=\"#999\"/>\n";

  if (a.h > 0) {
    for (std::size_t alpha = 0; alpha < a.joins.size(); ++alpha) {
      const Join& jn = a.joins[alpha];
      const Parallelogram p = join_parallelogram(d, jn.s, jn.t, a.h, join_sign(a, alpha));
      // Corner order around the outline: s low, t, t offset, s offset.
      const std::pair<double, double> ring[4] = {p.corners[0], p.corners[3], p.corners[2],
                                                 p.corners[1]};
      os << "<polygon class=\"join\" fill=\"#f4a261\" fill-opacity=\"0.35\" stroke=\"#e76f51\" "
            "points=\"";
      for (const auto& [x, y] : ring) os << px(x) << "," << py(y) << " ";
      os << "\"/>\n";
    }
  }

  os << "<polyline class=\"approximation\" fill=\"none\" stroke=\"#1d3557\" stroke-width=\"2\" "
        "points=\"";
  for (std::size_t j = 0; j < d.size(); ++j) os << px(d.x(j)) << "," << py(a.y[j]) << " ";
  os << "\"/>\n";

  const double r = d.size() > 2000 ? 0.8 : 2.5;
  os << "<g class=\"data\" fill=\"#888\">\n";
  for (std::size_t j = 0; j < d.size(); ++j) {
    os << "<circle cx=\"" << px(d.x(j)) << "\" cy=\"" << py(d.f(j)) << "\" r=\"" << r << "\"/>\n";
  }
  os << "</g>\n";
  os << "<text x=\"" << M << "\" y=\"" << M - 12 << "\" font-family=\"sans-serif\" font-size=\"13\">"
     << "q=" << a.q << "  " << to_string(a.orientation) << "  h=" << a.h << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace ccsmooth
