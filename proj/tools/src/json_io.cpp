#include "hyperzeta/cli/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace hyperzeta::cli {

json rat_json(const Rat& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

json cyc_json(const CycScalar& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_string(c));
  return json{{"ell", x.ell()}, {"coeffs", coeffs}};
}

json weight_json(const Weight& w) {
  json lam0 = json::array();
  json lam1 = json::array();
  for (auto v : w.lam0()) lam0.push_back(v);
  for (const auto& v : w.lam1()) lam1.push_back(rat_json(v));
  return json{{"lam0", lam0}, {"lam1", lam1}};
}

json pbw_terms_json(const PBWElem& x) {
  json out = json::array();
  for (const auto& [m, coeff] : x.terms())
    out.push_back(json{{"b", m.b}, {"c", m.c}, {"d", m.d}, {"a", m.a}, {"coeff", cyc_json(coeff)}});
  return out;
}

json matrix_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      json coeffs = json::array();
      for (const auto& v : m(r, c).coeffs()) coeffs.push_back(to_string(v));
      row.push_back(coeffs);
    }
    rows.push_back(row);
  }
  return rows;
}

json module_json(const WeightModule& m) {
  json labels = json::array();
  for (const auto& w : m.labels()) labels.push_back(weight_json(w));
  json ops = json::object();
  for (Gen g : kAllGens) ops[gen_name(g)] = matrix_json(m.op(g));
  return json{{"name", m.name()}, {"ell", m.ell()}, {"dim", m.dim()}, {"labels", labels}, {"ops", ops}};
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Weight parse_weight(const std::string& text, CartanPtr cartan) {
  std::string body;
  for (char c : text)
    if (c != ' ') body += c;
  std::string first, second;
  if (body.size() >= 4 && body.front() == '(' && body.back() == ')') {
    // ((a,b),(c,d))
    const auto mid = body.find("),(");
    if (mid == std::string::npos || body.substr(0, 2) != "((" || body.substr(body.size() - 2) != "))")
      throw std::invalid_argument("malformed weight '" + text + "'");
    first = body.substr(2, mid - 2);
    second = body.substr(mid + 3, body.size() - mid - 5);
  } else {
    const auto semi = body.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("malformed weight '" + text + "'");
    first = body.substr(0, semi);
    second = body.substr(semi + 1);
  }
  std::vector<std::int64_t> lam0;
  std::vector<Rat> lam1;
  for (const auto& p : split(first, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(p, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != p.size() || p.empty()) throw std::invalid_argument("bad lam0 entry '" + p + "'");
    lam0.push_back(v);
  }
  for (const auto& p : split(second, ',')) lam1.push_back(parse_rat(p));
  return Weight(std::move(cartan), std::move(lam0), std::move(lam1));
}

}  // namespace hyperzeta::cli
