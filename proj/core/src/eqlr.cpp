#include "eqrim/eqlr.hpp"

#include <nlohmann/json.hpp>

#include "eqrim/error.hpp"
#include "eqrim/facschur.hpp"

namespace eqrim {

const TPoly& ClassicalExpansion::coefficient(const Partition& p) const {
  static const TPoly zero;
  auto it = terms.find(p);
  return it == terms.end() ? zero : it->second;
}

void to_json(nlohmann::json& j, const ClassicalExpansion& e) {
  auto terms = nlohmann::json::array();
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
    terms.push_back({{"p", it->first.parts()}, {"c", it->second}});
  }
  j = nlohmann::json{{"k", e.k}, {"N", e.N}, {"terms", std::move(terms)}};
}

void from_json(const nlohmann::json& j, ClassicalExpansion& e) {
  try {
    ClassicalExpansion out;
    out.k = j.at("k").get<int>();
    out.N = j.at("N").get<int>();
    for (const auto& t : j.at("terms")) {
      Partition p(t.at("p").get<std::vector<int>>());
      TPoly c = t.at("c").get<TPoly>();
      if (c.is_zero()) continue;
      if (!out.terms.emplace(std::move(p), std::move(c)).second) {
        throw ParseError("repeated label in expansion JSON");
      }
    }
    e = std::move(out);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed expansion JSON: ") + ex.what());
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& ex) {
    throw ParseError(std::string("malformed expansion JSON: ") + ex.what());
  }
}

std::string to_string(const ClassicalExpansion& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    const TPoly& c = it->second;
    std::string label = "s[" + (it->first.empty() ? std::string{} : to_string(it->first)) + "]";
    if (c == TPoly(1)) {
      out += label;
    } else {
      out += "(" + to_string(c) + ")*" + label;
    }
  }
  return out;
}

ClassicalExpansion classical_eqlr(const Partition& lhs, const Partition& rhs, int k, int N, ExpansionCache* cache,
                                  Truncation truncation) {
  require_in_box(lhs, k, N);
  require_in_box(rhs, k, N);
  if (cache != nullptr) {
    if (auto hit = cache->find(lhs, rhs, k, N)) return *hit;
  }
  ClassicalExpansion out{k, N, {}};
  for (auto& [p, c] : expand_product(lhs, rhs, k)) {
    if (in_box(p, k, N)) {
      out.terms.emplace(p, std::move(c));
    } else if (truncation == Truncation::kForbid) {
      throw InvariantError("product " + to_string(lhs) + " * " + to_string(rhs) + " has the term " + to_string(p) +
                           " outside the box");
    }
  }
  if (cache != nullptr) cache->store(lhs, rhs, out);
  return out;
}

ClassicalExpansion classical_pieri(const Partition& p, int k, int N) {
  require_in_box(p, k, N);
  ClassicalExpansion out{k, N, {}};
  for (auto& c : covers(p, k, N)) out.terms.emplace(std::move(c), TPoly(1));
  TPoly w = equiv_weight(p, k, N);
  if (!w.is_zero()) out.terms.emplace(p, std::move(w));
  return out;
}

}  // namespace eqrim
