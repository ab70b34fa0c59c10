#pragma once

// Plain-text identity descriptions:
//
//   # comment
//   name upalgeg
//   kind up                    (eta | geneta | up)
//   group gamma0 20            (gamma0 | gamma1, level N)
//   prime 5                    (up only)
//   up 1 eta{1:-2,2:3,...}     (up only: a term inside U_p, level pN)
//   term -5 eta{1:4,2:-8,...}  (coefficient, optional q^e, product)
//   term 4 geta{[10,2]:2,[10,3]:1}
//
// An eta identity states sum(term) = 0; an up identity states
// U_p(sum(up)) = sum(term).

#include <cstdint>
#include <string>

#include "qcert/cusps.hpp"
#include "qcert/etaq.hpp"

namespace qcert {

enum class IdentityKind { Eta, GenEta, Up };

std::string to_string(IdentityKind k);

struct IdentitySpec {
  std::string name;
  IdentityKind kind = IdentityKind::Eta;
  Group group;
  std::int64_t prime = 0;
  /// Right-hand side for up identities; the whole identity otherwise.
  LinearCombination terms;
  /// Terms inside U_p.
  LinearCombination up_terms;

  /// Sets every product's level to the ambient one (p N for up terms) and validates.
  void canonicalize();
  friend bool operator==(const IdentitySpec&, const IdentitySpec&) = default;
};

/// Throws ParseError with a 1-based line and column.
IdentitySpec parse_spec(const std::string& text);
/// A single "eta{...}" or "geta{...}" at the given level (the least common
/// multiple of its indices when level <= 0); throws ParseError on line 1.
Product parse_product(const std::string& text, std::int64_t level);
IdentitySpec load_spec(const std::string& path);
std::string serialize_spec(const IdentitySpec& spec);
/// "eta{...}" / "geta{...}" text of a product.
std::string product_text(const Product& p);

}  // namespace qcert
