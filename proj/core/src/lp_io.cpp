#include "mga/lp_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mga {

std::string format_coeff(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

double parse_coeff(const std::string& tok) {
  if (tok == "inf" || tok == "+inf") return kInf;
  if (tok == "-inf") return -kInf;
  std::size_t pos = 0;
  const double v = std::stod(tok, &pos);
  if (pos != tok.size()) throw std::invalid_argument("lp_io: bad number '" + tok + "'");
  return v;
}

Relation parse_rel(const std::string& tok) {
  if (tok == "<=") return Relation::less_equal;
  if (tok == ">=") return Relation::greater_equal;
  if (tok == "=") return Relation::equal;
  throw std::invalid_argument("lp_io: bad relation '" + tok + "'");
}

std::string rel_str(Relation r) {
  switch (r) {
    case Relation::less_equal: return "<=";
    case Relation::greater_equal: return ">=";
    case Relation::equal: return "=";
  }
  return "?";
}

}  // namespace

std::string write_lp_text(const LinearProgram& lp) {
  std::ostringstream out;
  out << "vars " << lp.num_vars() << " constraints " << lp.num_constraints() << " sense "
      << (lp.sense() == Sense::minimize ? "min" : "max") << "\n";
  out << "obj";
  for (int j = 0; j < lp.num_vars(); ++j) {
    if (lp.objective()[j] != 0.0) out << " " << j << ":" << format_coeff(lp.objective()[j]);
  }
  out << "\n";
  const auto& rows = lp.constraints();
  for (int i = 0; i < lp.num_constraints(); ++i) {
    out << "c" << i << ":";
    for (std::size_t t = 0; t < rows[i].indices.size(); ++t)
      out << " " << rows[i].indices[t] << ":" << format_coeff(rows[i].coeffs[t]);
    out << " " << rel_str(rows[i].relation) << " " << format_coeff(rows[i].rhs) << "\n";
  }
  for (int j = 0; j < lp.num_vars(); ++j) {
    out << "bounds " << j << " " << format_coeff(lp.lower_bounds()[j]) << " "
        << format_coeff(lp.upper_bounds()[j]) << "\n";
  }
  return out.str();
}

void write_lp_file(const LinearProgram& lp, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("lp_io: cannot open for write: " + path);
  f << write_lp_text(lp);
}

LinearProgram read_lp_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;

  auto next_line = [&](std::string& out_line) {
    while (std::getline(in, out_line)) {
      const auto h = out_line.find('#');
      if (h != std::string::npos) out_line.erase(h);
      if (out_line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line(line)) throw std::invalid_argument("lp_io: empty input");
  std::istringstream hdr(line);
  std::string kw_vars, kw_cons, kw_sense, sense_tok;
  int n = 0, m = 0;
  hdr >> kw_vars >> n >> kw_cons >> m >> kw_sense >> sense_tok;
  if (kw_vars != "vars" || kw_cons != "constraints" || kw_sense != "sense" || hdr.fail())
    throw std::invalid_argument("lp_io: malformed header: " + line);
  if (n < 0 || m < 0) throw std::invalid_argument("lp_io: negative dimensions");

  LinearProgram lp(n);
  if (sense_tok == "min") lp.set_sense(Sense::minimize);
  else if (sense_tok == "max") lp.set_sense(Sense::maximize);
  else throw std::invalid_argument("lp_io: bad sense '" + sense_tok + "'");

  auto parse_terms = [&](std::istringstream& s, std::vector<int>& idx, std::vector<double>& val,
                         std::string& trailing) {
    std::string tok;
    while (s >> tok) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos) {
        trailing = tok;
        return;
      }
      const int j = std::stoi(tok.substr(0, colon));
      if (j < 0 || j >= n) throw std::invalid_argument("lp_io: term index out of range");
      idx.push_back(j);
      val.push_back(parse_coeff(tok.substr(colon + 1)));
    }
    trailing.clear();
  };

  if (!next_line(line)) throw std::invalid_argument("lp_io: missing objective line");
  {
    std::istringstream s(line);
    std::string kw;
    s >> kw;
    if (kw != "obj") throw std::invalid_argument("lp_io: expected obj line, got: " + line);
    std::vector<int> idx;
    std::vector<double> val;
    std::string trailing;
    parse_terms(s, idx, val, trailing);
    if (!trailing.empty()) throw std::invalid_argument("lp_io: junk on obj line: " + trailing);
    std::vector<double> c(n, 0.0);
    for (std::size_t t = 0; t < idx.size(); ++t) c[idx[t]] = val[t];
    lp.set_objective(std::move(c));
  }

  for (int i = 0; i < m; ++i) {
    if (!next_line(line)) throw std::invalid_argument("lp_io: missing constraint line");
    std::istringstream s(line);
    std::string label;
    s >> label;
    if (label.empty() || label[0] != 'c' || label.back() != ':')
      throw std::invalid_argument("lp_io: expected constraint label, got: " + line);
    std::vector<int> idx;
    std::vector<double> val;
    std::string rel_tok;
    parse_terms(s, idx, val, rel_tok);
    if (rel_tok.empty()) throw std::invalid_argument("lp_io: missing relation: " + line);
    std::string rhs_tok;
    if (!(s >> rhs_tok)) throw std::invalid_argument("lp_io: missing rhs: " + line);
    lp.add_constraint(std::move(idx), std::move(val), parse_rel(rel_tok), parse_coeff(rhs_tok));
  }

  for (int k = 0; k < n; ++k) {
    if (!next_line(line)) throw std::invalid_argument("lp_io: missing bounds line");
    std::istringstream s(line);
    std::string kw, lo_tok, hi_tok;
    int j = -1;
    s >> kw >> j >> lo_tok >> hi_tok;
    if (kw != "bounds" || s.fail())
      throw std::invalid_argument("lp_io: malformed bounds line: " + line);
    if (j < 0 || j >= n) throw std::invalid_argument("lp_io: bounds index out of range");
    lp.set_bounds(j, parse_coeff(lo_tok), parse_coeff(hi_tok));
  }
  lp.validate();
  return lp;
}

LinearProgram read_lp_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("lp_io: cannot open for read: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return read_lp_text(ss.str());
}

}  // namespace mga
