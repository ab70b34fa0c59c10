#include "qcert/spec_format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "qcert/errors.hpp"

namespace qcert {

std::string to_string(IdentityKind k) {
  switch (k) {
    case IdentityKind::Eta:
      return "eta";
    case IdentityKind::GenEta:
      return "geneta";
    case IdentityKind::Up:
      return "up";
  }
  return "?";
}

namespace {

class LineParser {
 public:
  LineParser(const std::string& text, int line) : s_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, static_cast<int>(pos_) + 1, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw ParseError(line_, static_cast<int>(pos) + 1, msg);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  std::size_t pos() const { return pos_; }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '{') ++pos_;
    if (start == pos_) fail("expected a word");
    return s_.substr(start, pos_ - start);
  }

  bool peek(char c) {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool peek_word(const std::string& w) {
    skip_space();
    return s_.compare(pos_, w.size(), w) == 0;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Rational number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-' || s_[pos_] == '+' || s_[pos_] == '/'))
      ++pos_;
    if (start == pos_) fail("expected a number");
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail_at(start, e.what());
    }
  }

  std::int64_t integer() {
    const std::size_t start = (skip_space(), pos_);
    Rational r = number();
    if (!is_integral(r)) fail_at(start, "expected an integer");
    try {
      return to_int64(r);
    } catch (const std::exception&) {
      fail_at(start, "integer out of range");
    }
  }

  std::int64_t positive_integer() {
    const std::size_t start = (skip_space(), pos_);
    std::int64_t v = integer();
    if (v <= 0) fail_at(start, "expected a positive integer");
    return v;
  }

  Product product() {
    skip_space();
    if (s_.compare(pos_, 5, "geta{") == 0) {
      pos_ += 5;
      GeneralizedEtaQuotient g;
      if (!peek('}')) {
        do {
          expect('[');
          std::int64_t delta = positive_integer();
          expect(',');
          std::int64_t gg = positive_integer();
          expect(']');
          expect(':');
          const std::size_t at = (skip_space(), pos_);
          Rational r = number();
          if (g.exps.count({delta, gg})) fail_at(at, "repeated key");
          g.exps[{delta, gg}] = r;
        } while (consume(','));
      }
      expect('}');
      return g;
    }
    if (s_.compare(pos_, 4, "eta{") == 0) {
      pos_ += 4;
      EtaQuotient e;
      if (!peek('}')) {
        do {
          const std::size_t at = (skip_space(), pos_);
          std::int64_t d = positive_integer();
          expect(':');
          std::int64_t m = integer();
          if (e.exps.count(d)) fail_at(at, "repeated eta index");
          e.exps[d] = m;
        } while (consume(','));
      }
      expect('}');
      return e;
    }
    fail("expected eta{...} or geta{...}");
  }

  // "q" or "q^e"; returns 0 when absent.
  Rational shift() {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != 'q') return 0;
    if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '^') {
      pos_ += 2;
      return number();
    }
    if (pos_ + 1 == s_.size() || std::isspace(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      return 1;
    }
    return 0;
  }

  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

 private:
  const std::string& s_;
  int line_;
  std::size_t pos_ = 0;
};

Term parse_term(LineParser& p) {
  Term t;
  t.coef = p.number();
  t.shift = p.shift();
  t.product = p.product();
  if (!p.at_end()) p.fail("unexpected text after product");
  return t;
}

void set_level(Product& p, std::int64_t level) {
  std::visit([&](auto& f) { f.level = level; }, p);
}

std::string rational_text(const Rational& r) { return r.get_str(); }

}  // namespace

void IdentitySpec::canonicalize() {
  if (group.level < 1) throw InvalidProduct("level must be positive");
  for (auto& t : terms.terms) {
    set_level(t.product, group.level);
    std::visit([](const auto& f) { f.validate(); }, t.product);
  }
  for (auto& t : up_terms.terms) {
    set_level(t.product, prime * group.level);
    std::visit([](const auto& f) { f.validate(); }, t.product);
  }
}

IdentitySpec parse_spec(const std::string& text) {
  IdentitySpec spec;
  bool have_kind = false, have_group = false, have_prime = false;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int last_line = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    LineParser p(line, line_no);
    if (p.at_end()) continue;
    last_line = line_no;
    const std::size_t key_pos = p.pos();
    const std::string key = p.word();
    if (key == "name") {
      spec.name = p.word();
    } else if (key == "kind") {
      const std::size_t at = (p.skip_space(), p.pos());
      const std::string k = p.word();
      if (k == "eta")
        spec.kind = IdentityKind::Eta;
      else if (k == "geneta")
        spec.kind = IdentityKind::GenEta;
      else if (k == "up")
        spec.kind = IdentityKind::Up;
      else
        p.fail_at(at, "unknown kind '" + k + "'");
      have_kind = true;
    } else if (key == "group") {
      const std::size_t at = (p.skip_space(), p.pos());
      const std::string g = p.word();
      if (g == "gamma0")
        spec.group.kind = GroupKind::Gamma0;
      else if (g == "gamma1")
        spec.group.kind = GroupKind::Gamma1;
      else
        p.fail_at(at, "unknown group '" + g + "'");
      spec.group.level = p.positive_integer();
      have_group = true;
    } else if (key == "prime") {
      const std::size_t at = (p.skip_space(), p.pos());
      spec.prime = p.positive_integer();
      if (!is_prime(spec.prime)) p.fail_at(at, "not a prime");
      have_prime = true;
    } else if (key == "term" || key == "up") {
      Term t = parse_term(p);
      (key == "term" ? spec.terms : spec.up_terms).terms.push_back(std::move(t));
      continue;
    } else {
      p.fail_at(key_pos, "unknown directive '" + key + "'");
    }
    if (!p.at_end()) p.fail("unexpected trailing text");
  }
  if (!have_kind) throw ParseError(last_line, 1, "missing 'kind' line");
  if (!have_group) throw ParseError(last_line, 1, "missing 'group' line");
  if (spec.kind == IdentityKind::Up) {
    if (!have_prime) throw ParseError(last_line, 1, "up identities need a 'prime' line");
    if (spec.group.kind != GroupKind::Gamma0) throw ParseError(last_line, 1, "up identities live on gamma0");
  } else if (have_prime || !spec.up_terms.terms.empty()) {
    throw ParseError(last_line, 1, "'prime' and 'up' lines need kind up");
  }
  if (spec.kind == IdentityKind::GenEta && spec.group.kind != GroupKind::Gamma1)
    throw ParseError(last_line, 1, "geneta identities live on gamma1");
  if (spec.kind == IdentityKind::Eta && spec.group.kind != GroupKind::Gamma0)
    throw ParseError(last_line, 1, "eta identities live on gamma0");
  try {
    spec.canonicalize();
  } catch (const InvalidProduct& e) {
    throw ParseError(last_line, 1, e.what());
  }
  return spec;
}

Product parse_product(const std::string& text, std::int64_t level) {
  LineParser p(text, 1);
  Product product = p.product();
  if (!p.at_end()) p.fail("unexpected text after product");
  if (level <= 0) {
    level = 1;
    if (auto* e = std::get_if<EtaQuotient>(&product))
      for (auto [d, m] : e->exps) level = lcm64(level, d);
    else
      for (const auto& [key, r] : std::get<GeneralizedEtaQuotient>(product).exps) level = lcm64(level, key.first);
  }
  set_level(product, level);
  std::visit([](const auto& f) { f.validate(); }, product);
  return product;
}

IdentitySpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::string product_text(const Product& p) {
  return std::visit([](const auto& f) { return to_string(f); }, p);
}

std::string serialize_spec(const IdentitySpec& spec) {
  std::ostringstream out;
  if (!spec.name.empty()) out << "name " << spec.name << "\n";
  out << "kind " << to_string(spec.kind) << "\n";
  out << "group " << (spec.group.kind == GroupKind::Gamma0 ? "gamma0 " : "gamma1 ") << spec.group.level << "\n";
  if (spec.kind == IdentityKind::Up) out << "prime " << spec.prime << "\n";
  auto emit = [&](const char* key, const Term& t) {
    out << key << " " << rational_text(t.coef);
    if (t.shift != 0) out << " q^" << rational_text(t.shift);
    out << " " << product_text(t.product) << "\n";
  };
  for (const auto& t : spec.up_terms.terms) emit("up", t);
  for (const auto& t : spec.terms.terms) emit("term", t);
  return out.str();
}

}  // namespace qcert
