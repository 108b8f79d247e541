#include "dupcalc/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dupcalc/error.hpp"

namespace dupcalc {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string algebra_to_json(const FiniteAlgebra& alg) {
  ordered_json j;
  j["name"] = alg.name;
  j["signature"] = ordered_json::array();
  for (const auto& [sym, ar] : alg.sig.symbols)
    j["signature"].push_back({{"symbol", sym}, {"arity", ar}});
  j["size"] = alg.size;
  if (!alg.labels.empty()) j["labels"] = alg.labels;
  ordered_json ops = ordered_json::object();
  for (const auto& [sym, ar] : alg.sig.symbols) ops[sym] = alg.table(sym);
  j["ops"] = std::move(ops);
  return j.dump(2) + "\n";
}

FiniteAlgebra algebra_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("algebra JSON: ") + e.what());
  }
  try {
    FiniteAlgebra alg;
    alg.name = j.at("name").get<std::string>();
    for (const json& s : j.at("signature"))
      alg.sig.symbols.emplace_back(s.at("symbol").get<std::string>(),
                                   s.at("arity").get<int>());
    alg.size = j.at("size").get<int>();
    if (j.contains("labels"))
      alg.labels = j["labels"].get<std::vector<std::string>>();
    for (const auto& [sym, ar] : alg.sig.symbols)
      alg.tables[sym] = j.at("ops").at(sym).get<std::vector<Element>>();
    alg.validate();
    return alg;
  } catch (const json::exception& e) {
    throw ParseError(std::string("algebra JSON: ") + e.what());
  }
}

std::string duplicator_to_json(const Duplicator& g) {
  ordered_json j;
  j["name"] = g.name;
  j["base_signature"] = ordered_json::array();
  for (const auto& [sym, ar] : g.base_sig.symbols)
    j["base_signature"].push_back({{"symbol", sym}, {"arity", ar}});
  j["m"] = g.m;
  j["mode"] = g.mode == DuplicatorMode::linked ? "linked" : "disjoint";
  j["entries"] = ordered_json::array();
  for (const DuplicatorEntry& e : g.entries) {
    ordered_json terms = ordered_json::array();
    for (const Term& t : e.terms) terms.push_back(render_term(t));
    j["entries"].push_back(
        {{"name", e.name}, {"arity", e.gamma_arity}, {"terms", terms}});
  }
  ordered_json w = ordered_json::object();
  if (!g.witnesses.recover.empty()) {
    ordered_json rec = ordered_json::object();
    for (const auto& [sym, per_coord] : g.witnesses.recover) {
      ordered_json coords = ordered_json::object();
      for (const auto& [coord, text] : per_coord)
        coords[std::to_string(coord)] = text;
      rec[sym] = std::move(coords);
    }
    w["recover"] = std::move(rec);
  }
  if (!g.witnesses.merge.empty()) w["merge"] = g.witnesses.merge;
  if (!g.witnesses.permute.empty()) {
    ordered_json perm = ordered_json::object();
    for (const auto& [p, text] : g.witnesses.permute) perm[p] = text;
    w["permute"] = std::move(perm);
  }
  j["witnesses"] = std::move(w);
  return j.dump(2) + "\n";
}

Duplicator duplicator_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("duplicator JSON: ") + e.what());
  }
  try {
    Duplicator g;
    g.name = j.at("name").get<std::string>();
    for (const json& s : j.at("base_signature"))
      g.base_sig.symbols.emplace_back(s.at("symbol").get<std::string>(),
                                      s.at("arity").get<int>());
    g.m = j.at("m").get<int>();
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "linked")
      g.mode = DuplicatorMode::linked;
    else if (mode == "disjoint")
      g.mode = DuplicatorMode::disjoint;
    else
      throw ParseError("duplicator JSON: unknown mode '" + mode + "'");
    for (const json& e : j.at("entries")) {
      DuplicatorEntry entry;
      entry.name = e.at("name").get<std::string>();
      entry.gamma_arity = e.at("arity").get<int>();
      for (const json& t : e.at("terms"))
        entry.terms.push_back(parse_term(t.get<std::string>(), g.base_sig));
      g.entries.push_back(std::move(entry));
    }
    if (j.contains("witnesses")) {
      const json& w = j["witnesses"];
      if (w.contains("recover"))
        for (const auto& [sym, coords] : w["recover"].items())
          for (const auto& [coord, t] : coords.items())
            g.witnesses.recover[sym][std::stoi(coord)] = t.get<std::string>();
      if (w.contains("merge")) g.witnesses.merge = w["merge"].get<std::string>();
      if (w.contains("permute"))
        for (const auto& [p, t] : w["permute"].items())
          g.witnesses.permute[p] = t.get<std::string>();
    }
    std::vector<std::string> bad = validate_duplicator(g);
    if (!bad.empty())
      throw ParseError("duplicator JSON: " + bad.front());
    return g;
  } catch (const json::exception& e) {
    throw ParseError(std::string("duplicator JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

FiniteAlgebra load_algebra_file(const std::string& path) {
  return algebra_from_json(read_file(path));
}

Duplicator load_duplicator_file(const std::string& path) {
  return duplicator_from_json(read_file(path));
}

}  // namespace dupcalc
