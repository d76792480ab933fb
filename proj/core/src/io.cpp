#include "hrcap/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hrcap/error.hpp"

namespace hrcap {

namespace {

// Strips the comment part and splits on whitespace; '(' and ')' are
// standalone tokens wherever they appear.
std::vector<std::string> tokenize(const std::string& raw) {
  std::string line = raw;
  if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  std::vector<std::string> toks;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      toks.push_back(cur);
      cur.clear();
    }
  };
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == '(' || c == ')') {
      flush();
      toks.push_back(std::string(1, c));
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return toks;
}

long long parse_int(const std::string& tok, int lineno) {
  try {
    size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(lineno, "expected an integer, got '" + tok + "'");
  }
}

int parse_index(const std::string& tok, int lineno, int bound, const char* what) {
  const long long v = parse_int(tok, lineno);
  if (v < 0 || v >= bound)
    throw ParseError(lineno, std::string(what) + " index " + tok + " out of range [0, " +
                                 std::to_string(bound) + ")");
  return static_cast<int>(v);
}

// Parses "<agent>: tok tok ( tok tok ) ..." into a preference list.
PreferenceList parse_pref_tokens(const std::vector<std::string>& toks, size_t from, int lineno,
                                 int bound, const char* what) {
  PreferenceList p;
  bool in_tie = false;
  std::vector<int> tie;
  for (size_t t = from; t < toks.size(); ++t) {
    const std::string& tok = toks[t];
    if (tok == "(") {
      if (in_tie) throw ParseError(lineno, "nested tie");
      in_tie = true;
      tie.clear();
    } else if (tok == ")") {
      if (!in_tie) throw ParseError(lineno, "unmatched ')'");
      if (tie.empty()) throw ParseError(lineno, "empty tie");
      std::sort(tie.begin(), tie.end());
      p.tiers.push_back(tie);
      in_tie = false;
    } else {
      const int v = parse_index(tok, lineno, bound, what);
      if (in_tie)
        tie.push_back(v);
      else
        p.tiers.push_back({v});
    }
  }
  if (in_tie) throw ParseError(lineno, "unterminated tie");
  return p;
}

}  // namespace

ParsedInstance parse_instance_text(std::istream& in) {
  int lineno = 0;
  std::string raw;

  int nr = -1, nh = -1;
  bool saw_header = false, saw_caps = false;
  std::vector<int> caps;
  std::vector<bool> saw_rlist, saw_hlist;
  std::vector<PreferenceList> rprefs, hprefs;
  std::vector<std::pair<int, int>> partition_linenos;  // (k, line)
  std::vector<std::vector<int>> parts;
  std::vector<long long> budgets;
  std::vector<bool> saw_part;

  while (std::getline(in, raw)) {
    ++lineno;
    const auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];

    if (!saw_header) {
      if (kw != "hrcap" || toks.size() != 2 || toks[1] != "1")
        throw ParseError(lineno, "expected header 'hrcap 1'");
      saw_header = true;
      continue;
    }

    if (kw == "residents") {
      if (toks.size() != 2) throw ParseError(lineno, "expected 'residents <n>'");
      if (nr >= 0) throw ParseError(lineno, "duplicate residents line");
      const long long v = parse_int(toks[1], lineno);
      if (v < 0) throw ParseError(lineno, "negative resident count");
      nr = static_cast<int>(v);
      rprefs.assign(nr, {});
      saw_rlist.assign(nr, false);
    } else if (kw == "hospitals") {
      if (toks.size() != 2) throw ParseError(lineno, "expected 'hospitals <n>'");
      if (nh >= 0) throw ParseError(lineno, "duplicate hospitals line");
      const long long v = parse_int(toks[1], lineno);
      if (v < 0) throw ParseError(lineno, "negative hospital count");
      nh = static_cast<int>(v);
      hprefs.assign(nh, {});
      saw_hlist.assign(nh, false);
      saw_part.assign(nh, false);
    } else if (kw == "capacities") {
      if (nh < 0) throw ParseError(lineno, "capacities before hospitals line");
      if (saw_caps) throw ParseError(lineno, "duplicate capacities line");
      if (static_cast<int>(toks.size()) != nh + 1)
        throw ParseError(lineno, "expected " + std::to_string(nh) + " capacities");
      for (int j = 0; j < nh; ++j) {
        const long long v = parse_int(toks[1 + j], lineno);
        caps.push_back(static_cast<int>(v));
      }
      saw_caps = true;
    } else if (kw == "rlist" || kw == "hlist") {
      const bool is_r = kw == "rlist";
      if (nr < 0 || nh < 0) throw ParseError(lineno, kw + " before agent counts");
      if (toks.size() < 2) throw ParseError(lineno, "expected '" + kw + " <agent>:'");
      std::string agent_tok = toks[1];
      if (!agent_tok.empty() && agent_tok.back() == ':') agent_tok.pop_back();
      size_t from = 2;
      if (agent_tok.empty()) throw ParseError(lineno, "missing agent index");
      const int agent = parse_index(agent_tok, lineno, is_r ? nr : nh,
                                    is_r ? "resident" : "hospital");
      // tolerate a separated ':'
      if (from < toks.size() && toks[from] == ":") ++from;
      auto& seen = is_r ? saw_rlist : saw_hlist;
      if (seen[agent]) throw ParseError(lineno, "duplicate " + kw + " for agent " + agent_tok);
      seen[agent] = true;
      auto list = parse_pref_tokens(toks, from, lineno, is_r ? nh : nr,
                                    is_r ? "hospital" : "resident");
      (is_r ? rprefs : hprefs)[agent] = std::move(list);
    } else if (kw == "partition") {
      if (nh < 0) throw ParseError(lineno, "partition before hospitals line");
      if (toks.size() < 2) throw ParseError(lineno, "expected 'partition <k>:'");
      std::string part_tok = toks[1];
      if (!part_tok.empty() && part_tok.back() == ':') part_tok.pop_back();
      const long long k = parse_int(part_tok, lineno);
      size_t from = 2;
      if (from < toks.size() && toks[from] == ":") ++from;
      std::vector<int> members;
      bool got_budget = false;
      long long budget = 0;
      for (size_t t = from; t < toks.size(); ++t) {
        if (toks[t] == "budget") {
          if (t + 1 != toks.size() - 1) throw ParseError(lineno, "expected 'budget <B>' last");
          budget = parse_int(toks[t + 1], lineno);
          got_budget = true;
          break;
        }
        members.push_back(parse_index(toks[t], lineno, nh, "hospital"));
      }
      if (!got_budget) throw ParseError(lineno, "partition line without budget");
      if (members.empty()) throw ParseError(lineno, "empty partition part");
      std::sort(members.begin(), members.end());
      if (k < 0 || k >= nh) throw ParseError(lineno, "part index " + part_tok + " out of range");
      const size_t ks = static_cast<size_t>(k);
      if (ks >= parts.size()) {
        parts.resize(ks + 1);
        budgets.resize(ks + 1, 0);
      }
      if (!parts[ks].empty()) throw ParseError(lineno, "duplicate partition part " + part_tok);
      parts[ks] = std::move(members);
      budgets[ks] = budget;
    } else {
      throw ParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }

  if (!saw_header) throw ParseError(lineno, "empty input; expected header 'hrcap 1'");
  if (nr < 0) throw ParseError(lineno, "missing residents line");
  if (nh < 0) throw ParseError(lineno, "missing hospitals line");
  if (!saw_caps) throw ParseError(lineno, "missing capacities line");
  for (size_t k = 0; k < parts.size(); ++k)
    if (parts[k].empty()) throw ParseError(lineno, "missing partition part " + std::to_string(k));

  ParsedInstance out{Instance(std::move(caps), std::move(rprefs), std::move(hprefs)),
                     std::nullopt};
  if (!parts.empty()) out.parts = PartitionBudgets{std::move(parts), std::move(budgets)};
  return out;
}

ParsedInstance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance_text(in);
}

ParsedInstance load_instance(std::istream& in) {
  ParsedInstance parsed = parse_instance_text(in);
  const auto violations = validate_instance(parsed.instance);
  if (!violations.empty()) throw ValidationError(format_violations(violations));
  if (parsed.parts)
    if (auto reason = parsed.parts->invalid_reason(parsed.instance.num_hospitals()))
      throw ValidationError("invalid partition: " + *reason);
  return parsed;
}

ParsedInstance load_instance_file(const std::string& path) {
  if (path == "-") return load_instance(std::cin);
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return load_instance(in);
}

namespace {

void write_pref_line(std::ostream& out, const char* kw, int agent, const PreferenceList& p) {
  out << kw << ' ' << agent << ':';
  for (const auto& tier : p.tiers) {
    if (tier.size() == 1) {
      out << ' ' << tier[0];
    } else {
      out << " (";
      for (int v : tier) out << ' ' << v;
      out << " )";
    }
  }
  out << '\n';
}

}  // namespace

std::string serialize_instance(const Instance& inst,
                               const std::optional<PartitionBudgets>& parts) {
  std::ostringstream out;
  out << "hrcap 1\n";
  out << "residents " << inst.num_residents() << '\n';
  out << "hospitals " << inst.num_hospitals() << '\n';
  out << "capacities";
  for (int j = 0; j < inst.num_hospitals(); ++j) out << ' ' << inst.capacity(j);
  out << '\n';
  for (int i = 0; i < inst.num_residents(); ++i)
    write_pref_line(out, "rlist", i, inst.resident_pref(i));
  for (int j = 0; j < inst.num_hospitals(); ++j)
    write_pref_line(out, "hlist", j, inst.hospital_pref(j));
  if (parts) {
    for (int k = 0; k < parts->num_parts(); ++k) {
      out << "partition " << k << ':';
      for (int j : parts->parts[k]) out << ' ' << j;
      out << " budget " << parts->budgets[k] << '\n';
    }
  }
  return out.str();
}

Matching parse_matching(std::istream& in, const Instance& inst) {
  Matching m(inst.num_residents(), inst.num_hospitals());
  int lineno = 0;
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto toks = tokenize(raw);
    if (toks.empty()) continue;
    if (toks[0] != "pair" || toks.size() != 3)
      throw ParseError(lineno, "expected 'pair <r> <h>'");
    const int r = parse_index(toks[1], lineno, inst.num_residents(), "resident");
    const int h = parse_index(toks[2], lineno, inst.num_hospitals(), "hospital");
    if (m.matched(r)) throw ParseError(lineno, "resident " + toks[1] + " paired twice");
    m.add(r, h);
  }
  return m;
}

std::string serialize_matching(const Matching& m) {
  std::ostringstream out;
  for (const auto& [r, h] : m.pairs()) out << "pair " << r << ' ' << h << '\n';
  return out.str();
}

void write_layout_map(std::ostream& out, const GadgetOutput& gadget) {
  if (gadget.villages) {
    const VillageLayout& lay = *gadget.villages;
    for (int k = 0; k < lay.n - lay.L; ++k)
      out << "map r" << lay.rcopy(k) << " src r" << lay.strict_sources[k] << '\n';
    for (int ell = 0; ell < lay.L; ++ell) {
      for (int h = 1; h <= lay.n; ++h) out << "map r" << lay.w(ell, h) << " w " << ell << ' ' << h << '\n';
      out << "map r" << lay.y(ell) << " y " << ell << '\n';
    }
    for (int j = 0; j < lay.n; ++j) out << "map h" << lay.hcopy(j) << " src h" << j << '\n';
    for (int k = 0; k < lay.n * lay.n; ++k) out << "map h" << lay.h0(k) << " h0 " << k << '\n';
    for (int ell = 0; ell < lay.L; ++ell)
      for (int h = 1; h <= lay.n; ++h) {
        out << "map h" << lay.v0(ell, h) << " v0 " << ell << ' ' << h << '\n';
        out << "map h" << lay.v1(ell, h) << " v1 " << ell << ' ' << h << '\n';
      }
    for (int k = 0; k < lay.n * lay.n * lay.n; ++k) out << "map h" << lay.z(k) << " z " << k << '\n';
    for (int k = 0; k < lay.n * lay.L; ++k) out << "map h" << lay.x(k) << " x " << k << '\n';
  } else if (gadget.split) {
    const SplitLayout& lay = *gadget.split;
    for (int i = 0; i < gadget.instance.num_residents(); ++i)
      out << "map r" << i << " src r" << i << '\n';
    for (size_t j = 0; j < lay.first_copy.size(); ++j) {
      if (lay.tied[j]) {
        out << "map h" << lay.first_copy[j] << " split1 h" << j << '\n';
        out << "map h" << lay.second_copy[j] << " split2 h" << j << '\n';
      } else {
        out << "map h" << lay.first_copy[j] << " src h" << j << '\n';
      }
    }
  } else if (gadget.amplifier) {
    const AmplifierLayout& lay = *gadget.amplifier;
    for (int s = 0; s < lay.copies; ++s)
      for (int i = 0; i < lay.n; ++i)
        out << "map r" << lay.copy_resident(s, i) << " copy " << s << " r" << i << '\n';
    for (int k = 0; k < lay.padding; ++k)
      out << "map r" << lay.pad_resident(k) << " pad r" << k << '\n';
    for (int s = 0; s < lay.copies; ++s)
      for (int j = 0; j < lay.n; ++j)
        out << "map h" << lay.copy_hospital(s, j) << " copy " << s << " h" << j << '\n';
    for (int k = 0; k < lay.padding; ++k)
      out << "map h" << lay.pad_hospital(k) << " pad h" << k << '\n';
  }
}

std::string format_violations(const std::vector<Violation>& violations) {
  std::ostringstream out;
  for (size_t k = 0; k < violations.size(); ++k) {
    const Violation& v = violations[k];
    if (k) out << '\n';
    out << (v.side == Side::resident ? "resident " : "hospital ") << v.agent << ": " << v.rule
        << " (" << v.detail << ")";
  }
  return out.str();
}

}  // namespace hrcap
