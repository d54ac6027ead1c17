#include "kappamu/cpm.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <memory>
#include <sstream>
#include <utility>

namespace kappamu {

namespace {

std::string trim(const std::string &s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_ws(const std::string &s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok)
    out.push_back(tok);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string &msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg, line);
}

ScalarExpr parse_component(const std::string &tok, const CoordSystemPtr &coords,
                           std::size_t line) {
  try {
    return parse_expr(tok, coords);
  } catch (const ParseError &err) {
    fail(line, "bad expression '" + tok + "': " + err.what());
  }
}

Rational parse_number(const std::string &tok, std::size_t line) {
  try {
    // mpq_set_str takes no leading '+'.
    return parse_rational(tok.size() > 1 && tok[0] == '+'
                              ? std::string_view(tok).substr(1)
                              : std::string_view(tok));
  } catch (const ParseError &) {
    fail(line, "malformed rational '" + tok + "'");
  }
}

// "eK" -> K-1.
std::size_t parse_frame_label(const std::string &tok, std::size_t line) {
  if (tok.size() < 2 || tok[0] != 'e' ||
      !std::all_of(tok.begin() + 1, tok.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    fail(line, "expected a frame label of the form eK, got '" + tok + "'");
  std::size_t k = std::stoul(tok.substr(1));
  if (k == 0)
    fail(line, "frame labels start at e1");
  return k - 1;
}

std::string strip_spaces(const std::string &s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(c);
  return out;
}

} // namespace

Frame ManifoldSpec::make_frame() const {
  return Frame(coords, frame_vectors, metric);
}

AlmostContactStructure ManifoldSpec::make_structure() const {
  const std::size_t d = dim();
  OperatorField phi(coords, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      phi.m(i, j) = phi_rows[i][j];
  return AlmostContactStructure(std::move(phi), xi, epsilon);
}

ManifoldSpec parse_spec(const std::string &text, const std::string &name) {
  ManifoldSpec spec;
  spec.name = name;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool have_coords = false, have_eps = false, have_metric = false,
       have_xi = false;
  std::size_t xi_label = 0, xi_line = 0;

  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty())
      continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      fail(lineno, "expected 'key: value'");
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));

    if (key == "name") {
      if (value.empty())
        fail(lineno, "empty name");
      spec.name = value;
    } else if (key == "coords") {
      if (have_coords)
        fail(lineno, "duplicate coords line");
      auto names = split_ws(value);
      if (names.empty())
        fail(lineno, "coords needs at least one name");
      try {
        spec.coords = std::make_shared<const CoordSystem>(std::move(names));
      } catch (const DomainError &err) {
        fail(lineno, err.what());
      }
      have_coords = true;
    } else if (key == "epsilon") {
      if (value == "+1" || value == "1")
        spec.epsilon = 1;
      else if (value == "-1")
        spec.epsilon = -1;
      else
        fail(lineno, "epsilon must be +1 or -1");
      have_eps = true;
    } else if (key == "signature" || key == "metric") {
      if (have_metric)
        fail(lineno, "duplicate signature/metric line");
      for (const auto &tok : split_ws(value)) {
        Rational q = parse_number(tok, lineno);
        if (q == 0)
          fail(lineno, "metric entries must be nonzero");
        if (key == "signature" && q != 1 && q != -1)
          fail(lineno, "signature entries must be +1 or -1");
        spec.metric.push_back(q);
      }
      if (spec.metric.empty())
        fail(lineno, "empty " + key + " line");
      have_metric = true;
    } else if (key.rfind("frame", 0) == 0) {
      if (!have_coords)
        fail(lineno, "coords must come before frame lines");
      std::string label = trim(key.substr(5));
      std::size_t idx = parse_frame_label(label, lineno);
      if (idx != spec.frame_vectors.size())
        fail(lineno, "frame vectors must appear in order; expected 'frame e" +
                         std::to_string(spec.frame_vectors.size() + 1) + "'");
      VectorField v;
      for (const auto &tok : split_ws(value))
        v.comp.push_back(parse_component(tok, spec.coords, lineno));
      if (v.comp.size() != spec.coords->size())
        fail(lineno, "expected " + std::to_string(spec.coords->size()) +
                         " components, got " + std::to_string(v.comp.size()));
      spec.frame_vectors.push_back(std::move(v));
    } else if (key == "phi") {
      if (!have_coords)
        fail(lineno, "coords must come before phi lines");
      std::vector<ScalarExpr> row;
      for (const auto &tok : split_ws(value))
        row.push_back(parse_component(tok, spec.coords, lineno));
      if (row.empty())
        fail(lineno, "empty phi row");
      spec.phi_rows.push_back(std::move(row));
    } else if (key == "xi") {
      if (have_xi)
        fail(lineno, "duplicate xi line");
      xi_label = parse_frame_label(value, lineno);
      xi_line = lineno;
      have_xi = true;
    } else if (key == "expect_kappa") {
      if (!have_coords)
        fail(lineno, "coords must come before expect_kappa");
      spec.expect_kappa = parse_component(value, spec.coords, lineno);
    } else if (key == "expect_mu") {
      if (!have_coords)
        fail(lineno, "coords must come before expect_mu");
      spec.expect_mu = parse_component(value, spec.coords, lineno);
    } else if (key == "sample") {
      if (!have_coords)
        fail(lineno, "coords must come before sample lines");
      RationalPoint p(spec.coords->size());
      std::vector<bool> seen(spec.coords->size(), false);
      for (const auto &tok : split_ws(value)) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
          fail(lineno, "expected coord=value, got '" + tok + "'");
        auto idx = spec.coords->index(tok.substr(0, eq));
        if (!idx)
          fail(lineno, "unknown coordinate '" + tok.substr(0, eq) + "'");
        if (seen[*idx])
          fail(lineno, "duplicate coordinate '" + tok.substr(0, eq) + "'");
        p[*idx] = parse_number(tok.substr(eq + 1), lineno);
        seen[*idx] = true;
      }
      for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
          fail(lineno, "sample is missing coordinate '" +
                           spec.coords->name(i) + "'");
      spec.samples.push_back(std::move(p));
    } else {
      fail(lineno, "unknown key '" + key + "'");
    }
  }

  if (!have_coords)
    throw ParseError("missing coords line", 0);
  if (!have_eps)
    throw ParseError("missing epsilon line", 0);
  if (!have_metric)
    throw ParseError("missing signature/metric line", 0);
  const std::size_t d = spec.frame_vectors.size();
  if (d == 0)
    throw ParseError("missing frame lines", 0);
  if (d != spec.coords->size())
    throw ParseError("frame has " + std::to_string(d) + " vectors for " +
                         std::to_string(spec.coords->size()) + " coordinates",
                     0);
  if (d < 3 || d % 2 == 0)
    throw ParseError("dimension must be odd and at least 3", 0);
  if (spec.metric.size() != d)
    throw ParseError("signature/metric has " +
                         std::to_string(spec.metric.size()) +
                         " entries for a frame of " + std::to_string(d),
                     0);
  if (spec.phi_rows.size() != d)
    throw ParseError("phi needs " + std::to_string(d) + " rows, got " +
                         std::to_string(spec.phi_rows.size()),
                     0);
  for (const auto &row : spec.phi_rows)
    if (row.size() != d)
      throw ParseError("phi rows need " + std::to_string(d) + " entries", 0);
  if (!have_xi)
    throw ParseError("missing xi line", 0);
  if (xi_label >= d)
    fail(xi_line, "xi refers to e" + std::to_string(xi_label + 1) +
                      " but the frame has " + std::to_string(d) + " vectors");
  spec.xi = xi_label;
  return spec;
}

ManifoldSpec load_spec(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string stem = path;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos)
    stem.erase(0, slash + 1);
  if (auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0)
    stem.erase(dot);
  return parse_spec(buf.str(), stem.empty() ? "spec" : stem);
}

std::string serialize_spec(const ManifoldSpec &spec) {
  std::ostringstream out;
  out << "name: " << spec.name << "\n";
  out << "coords:";
  for (const auto &nm : spec.coords->names())
    out << " " << nm;
  out << "\n";
  out << "epsilon: " << (spec.epsilon > 0 ? "+1" : "-1") << "\n";
  const bool sig = std::all_of(spec.metric.begin(), spec.metric.end(),
                               [](const Rational &q) {
                                 return q == 1 || q == -1;
                               });
  out << (sig ? "signature:" : "metric:");
  for (const auto &q : spec.metric)
    out << " " << rational_to_string(q);
  out << "\n";
  for (std::size_t i = 0; i < spec.frame_vectors.size(); ++i) {
    out << "frame e" << i + 1 << ":";
    for (const auto &c : spec.frame_vectors[i].comp)
      out << " " << strip_spaces(c.to_string());
    out << "\n";
  }
  for (const auto &row : spec.phi_rows) {
    out << "phi:";
    for (const auto &c : row)
      out << " " << strip_spaces(c.to_string());
    out << "\n";
  }
  out << "xi: e" << spec.xi + 1 << "\n";
  if (spec.expect_kappa)
    out << "expect_kappa: " << spec.expect_kappa->to_string() << "\n";
  if (spec.expect_mu)
    out << "expect_mu: " << spec.expect_mu->to_string() << "\n";
  for (const auto &p : spec.samples) {
    out << "sample:";
    for (std::size_t i = 0; i < p.size(); ++i)
      out << " " << spec.coords->name(i) << "=" << rational_to_string(p[i]);
    out << "\n";
  }
  return out.str();
}

} // namespace kappamu
