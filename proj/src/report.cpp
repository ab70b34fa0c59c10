#include "qcert/report.hpp"

#include <sstream>

namespace qcert {

using nlohmann::json;

namespace {

std::string str(const Rational& r) { return to_string(r); }
std::string str(const Integer& r) { return to_string(r); }
std::string str(std::int64_t v) { return std::to_string(v); }

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(str(r));
  return out;
}

json cusp_list(const CuspTable& table) {
  json out = json::array();
  for (const auto& e : table.entries) out.push_back(to_string(e.cusp));
  return out;
}

// Right-aligned columns separated by two spaces.
std::string table_text(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (widths.size() <= i) widths.push_back(0);
      widths[i] = std::max(widths[i], r[i].size());
    }
  std::ostringstream out;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out << "  ";
      out << std::string(widths[i] - r[i].size(), ' ') << r[i];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

json document(const std::string& kind, json payload) {
  return json{{"format_version", kFormatVersion}, {"kind", kind}, {"data", std::move(payload)}};
}

json to_json(const CuspTable& table) {
  json entries = json::array();
  for (const auto& e : table.entries) entries.push_back({{"cusp", to_string(e.cusp)}, {"width", str(e.width)}});
  return {{"group", to_string(table.group)}, {"count", str(static_cast<std::int64_t>(table.entries.size()))},
          {"cusps", std::move(entries)}};
}

json to_json(const OrderReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"cusp", to_string(r.cusp)}, {"width", str(r.width)}, {"ord", str(r.ord)}, {"ORD", str(r.ORD)}});
  return {{"term", report.term}, {"group", to_string(report.group)}, {"rows", std::move(rows)}};
}

json to_json(const ProofCertificate& cert, const std::string& name) {
  json orders = json::array();
  for (const auto& t : cert.orders)
    orders.push_back({{"label", t.label}, {"side", t.side}, {"lower_bound", t.lower_bound}, {"values", rationals(t.values)}});
  json out{{"name", name},
           {"kind", cert.kind},
           {"group", to_string(cert.group)},
           {"cusps", cusp_list(cert.cusps)},
           {"infinity_index", str(static_cast<std::int64_t>(cert.infinity_index))},
           {"orders", std::move(orders)},
           {"minima", rationals(cert.minima)},
           {"B", str(cert.B)},
           {"required_depth", str(cert.required_depth)},
           {"verified_depth", str(cert.verified_depth)},
           {"verdict", to_string(cert.verdict)},
           {"checks", cert.checks},
           {"notes", cert.notes}};
  if (cert.prime != 0) out["prime"] = str(cert.prime);
  if (cert.counterexample_exponent)
    out["counterexample"] = {{"exponent", str(*cert.counterexample_exponent)},
                             {"coefficient", str(*cert.counterexample_coefficient)}};
  return out;
}

json to_json(const CongruenceReport& report) {
  json failures = json::array();
  for (auto n : report.failures) failures.push_back(str(n));
  return {{"id", report.id},
          {"prime", str(report.prime)},
          {"alpha", str(static_cast<std::int64_t>(report.alpha))},
          {"modulus", str(report.modulus)},
          {"n_min", str(report.n_min)},
          {"n_max", str(report.n_max)},
          {"failures", std::move(failures)},
          {"verdict", report.pass() ? "pass" : "fail"}};
}

json to_json(const LValuationReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"alpha", str(static_cast<std::int64_t>(r.alpha))},
                    {"ord_t", str(r.ord_t)},
                    {"degree", str(r.degree)},
                    {"slack", str(r.slack)},
                    {"cf_consistent", r.cf_consistent},
                    {"cf_terms", str(r.cf_terms)},
                    {"pass", r.pass}});
  return {{"rows", std::move(rows)}, {"routes_agree", report.routes_agree}, {"verdict", report.pass ? "pass" : "fail"}};
}

json to_json(const Series& s) {
  json coeffs = json::array();
  const auto c = s.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0)
      coeffs.push_back({str(make_rational(s.low() + static_cast<std::int64_t>(i), s.grid())), str(c[i])});
  return {{"grid", str(s.grid())}, {"precision", str(s.precision())}, {"coefficients", std::move(coeffs)}};
}

std::string to_text(const CuspTable& table) {
  std::vector<std::vector<std::string>> rows{{"cusp", "width"}};
  for (const auto& e : table.entries) rows.push_back({to_string(e.cusp), str(e.width)});
  return to_string(table.group) + ": " + std::to_string(table.entries.size()) + " cusps\n" + table_text(rows);
}

std::string to_text(const OrderReport& report) {
  std::vector<std::vector<std::string>> rows{{"cusp", "width", "ord", "ORD"}};
  for (const auto& r : report.rows) rows.push_back({to_string(r.cusp), str(r.width), str(r.ord), str(r.ORD)});
  std::string head = report.term.empty() ? "" : report.term + " on ";
  return head + to_string(report.group) + "\n" + table_text(rows);
}

std::string to_text(const ProofCertificate& cert, const std::string& name) {
  std::ostringstream out;
  if (!name.empty()) out << name << ": ";
  out << cert.kind << " identity on " << to_string(cert.group);
  if (cert.prime) out << ", p = " << cert.prime;
  out << "\n";
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"term", "side"};
  for (const auto& e : cert.cusps.entries) head.push_back(to_string(e.cusp));
  rows.push_back(head);
  for (const auto& t : cert.orders) {
    std::vector<std::string> r{t.label, t.side + (t.lower_bound ? " >=" : "")};
    for (const auto& v : t.values) r.push_back(str(v));
    rows.push_back(r);
  }
  std::vector<std::string> m{"min", ""};
  for (const auto& v : cert.minima) m.push_back(str(v));
  rows.push_back(m);
  out << table_text(rows);
  out << "B = " << str(cert.B) << ", required depth " << cert.required_depth << ", verified below q^"
      << cert.verified_depth << "\n";
  out << "verdict: " << to_string(cert.verdict);
  if (cert.counterexample_exponent)
    out << " (coefficient " << str(*cert.counterexample_coefficient) << " at q^" << str(*cert.counterexample_exponent)
        << ")";
  out << "\n";
  for (const auto& n : cert.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string to_text(const CongruenceReport& report) {
  std::ostringstream out;
  out << report.id << ": modulus " << str(report.modulus) << ", n in [" << report.n_min << ", " << report.n_max
      << "], " << report.failures.size() << " failures";
  if (!report.failures.empty()) {
    out << " at n =";
    for (std::size_t i = 0; i < report.failures.size() && i < 10; ++i) out << " " << report.failures[i];
  }
  out << "\n";
  return out.str();
}

std::string to_text(const Series& s) {
  std::ostringstream out;
  const auto c = s.coefficients();
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const Rational e = make_rational(s.low() + static_cast<std::int64_t>(i), s.grid());
    if (!first) out << (c[i] < 0 ? " - " : " + ");
    else if (c[i] < 0) out << "-";
    first = false;
    const Integer a = abs(c[i]);
    if (e == 0) {
      out << a;
      continue;
    }
    if (a != 1) out << a << "*";
    out << "q";
    if (e != 1) out << "^" << (is_integral(e) ? str(e) : "(" + str(e) + ")");
  }
  if (first) out << "0";
  out << " + O(q^" << (is_integral(s.precision()) ? str(s.precision()) : "(" + str(s.precision()) + ")") << ")\n";
  return out.str();
}

}  // namespace qcert
