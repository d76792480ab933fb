#include "hrcap/gen.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include "hrcap/error.hpp"

namespace hrcap {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::bounded(std::uint64_t bound) {
  // Rejection below the largest multiple of `bound`.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

void shuffle_descending(std::vector<int>& v, SplitMix64& rng) {
  for (size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng.bounded(static_cast<std::uint64_t>(i))]);
}

std::optional<std::string> GenSpec::invalid_reason() const {
  if (num_residents < 0 || num_hospitals < 0) return "negative agent count";
  const int tie_side_count = tie_side == TieSide::resident ? num_residents : num_hospitals;
  if (ties < 0 || ties > tie_side_count) return "tie count exceeds agents on the tie side";
  if (capacity_mode == CapacityMode::uniform && (cap_lo < 0 || cap_hi < cap_lo))
    return "bad uniform capacity bounds";
  if (capacity_mode == CapacityMode::fixed &&
      static_cast<int>(cap_fixed.size()) != num_hospitals)
    return "fixed capacity vector size mismatch";
  const int max_len = std::max(num_residents, num_hospitals);
  if (list_length < 0 || list_length > max_len) return "list length out of range";
  return std::nullopt;
}

namespace {

std::vector<int> random_prefix_permutation(int universe, int len, SplitMix64& rng) {
  std::vector<int> perm(universe);
  for (int k = 0; k < universe; ++k) perm[k] = k;
  shuffle_descending(perm, rng);
  if (len < universe) perm.resize(len);
  return perm;
}

// Merges the top two entries of a strict list into one head tie.
void tie_head(PreferenceList& p) {
  if (p.tiers.size() < 2) return;
  std::vector<int> head = {p.tiers[0][0], p.tiers[1][0]};
  std::sort(head.begin(), head.end());
  std::vector<std::vector<int>> tiers;
  tiers.push_back(std::move(head));
  for (size_t t = 2; t < p.tiers.size(); ++t) tiers.push_back(p.tiers[t]);
  p.tiers = std::move(tiers);
}

}  // namespace

Instance generate(const GenSpec& spec) {
  if (auto reason = spec.invalid_reason()) throw PreconditionError("invalid GenSpec: " + *reason);
  SplitMix64 rng(spec.seed);
  const int nr = spec.num_residents;
  const int nh = spec.num_hospitals;

  std::vector<int> caps(nh, 1);
  switch (spec.capacity_mode) {
    case CapacityMode::all_one:
      break;
    case CapacityMode::uniform:
      for (int j = 0; j < nh; ++j)
        caps[j] = spec.cap_lo +
                  static_cast<int>(rng.bounded(static_cast<std::uint64_t>(spec.cap_hi - spec.cap_lo + 1)));
      break;
    case CapacityMode::fixed:
      caps = spec.cap_fixed;
      break;
  }

  const int rlen = spec.list_length == 0 ? nh : std::min(spec.list_length, nh);
  const int hlen = spec.list_length == 0 ? nr : std::min(spec.list_length, nr);

  std::vector<std::vector<int>> rorder(nr), horder(nh);
  for (int i = 0; i < nr; ++i) rorder[i] = random_prefix_permutation(nh, rlen, rng);
  for (int j = 0; j < nh; ++j) horder[j] = random_prefix_permutation(nr, hlen, rng);

  if (spec.list_length != 0) {
    // Mutual acceptability by intersection: keep (i, j) iff both listed it.
    std::vector<std::vector<char>> r_lists(nr, std::vector<char>(nh, 0));
    std::vector<std::vector<char>> h_lists(nh, std::vector<char>(nr, 0));
    for (int i = 0; i < nr; ++i)
      for (int j : rorder[i]) r_lists[i][j] = 1;
    for (int j = 0; j < nh; ++j)
      for (int i : horder[j]) h_lists[j][i] = 1;
    for (int i = 0; i < nr; ++i)
      std::erase_if(rorder[i], [&](int j) { return !h_lists[j][i]; });
    for (int j = 0; j < nh; ++j)
      std::erase_if(horder[j], [&](int i) { return !r_lists[i][j]; });
  }

  std::vector<PreferenceList> rprefs(nr), hprefs(nh);
  for (int i = 0; i < nr; ++i) rprefs[i] = PreferenceList::strict(rorder[i]);
  for (int j = 0; j < nh; ++j) hprefs[j] = PreferenceList::strict(horder[j]);

  auto& tied = spec.tie_side == TieSide::resident ? rprefs : hprefs;
  for (int a = 0; a < spec.ties; ++a) tie_head(tied[a]);

  return Instance(std::move(caps), std::move(rprefs), std::move(hprefs));
}

Instance builtin_counterexample() {
  std::vector<int> caps = {1, 1, 1, 3};
  std::vector<PreferenceList> rprefs = {
      PreferenceList::strict({1, 0, 2, 3}),  // i1: j2, j1, j3, j4
      PreferenceList::strict({1, 2, 0, 3}),  // i2: j2, j3, j1, j4
      PreferenceList::strict({2, 1, 3, 0}),  // i3: j3, j2, j4, j1
      PreferenceList::strict({0, 3, 2, 1}),  // i4..i6: j1, j4, j3, j2
      PreferenceList::strict({0, 3, 2, 1}),
      PreferenceList::strict({0, 3, 2, 1}),
  };
  std::vector<PreferenceList> hprefs(4, PreferenceList::strict({0, 1, 2, 3, 4, 5}));
  return Instance(std::move(caps), std::move(rprefs), std::move(hprefs));
}

std::string manifest_line(const GenSpec& spec) {
  std::ostringstream out;
  out << "gen " << spec.seed << " r=" << spec.num_residents << " h=" << spec.num_hospitals;
  out << " cap=";
  switch (spec.capacity_mode) {
    case CapacityMode::all_one:
      out << "one";
      break;
    case CapacityMode::uniform:
      out << "uniform:" << spec.cap_lo << ":" << spec.cap_hi;
      break;
    case CapacityMode::fixed: {
      out << "fixed:";
      for (size_t j = 0; j < spec.cap_fixed.size(); ++j)
        out << (j ? "," : "") << spec.cap_fixed[j];
      break;
    }
  }
  out << " ties=" << spec.ties;
  out << " tieside=" << (spec.tie_side == TieSide::resident ? 'r' : 'h');
  out << " len=";
  if (spec.list_length == 0)
    out << "full";
  else
    out << spec.list_length;
  return out.str();
}

namespace {

long long to_int(const std::string& s, int lineno) {
  try {
    size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(lineno, "expected an integer, got '" + s + "'");
  }
}

}  // namespace

GenSpec parse_manifest_line(const std::string& line, int lineno) {
  std::istringstream in(line);
  std::string tok;
  if (!(in >> tok) || tok != "gen") throw ParseError(lineno, "expected 'gen <seed> <fields>'");
  GenSpec spec;
  if (!(in >> tok)) throw ParseError(lineno, "missing seed");
  spec.seed = static_cast<std::uint64_t>(to_int(tok, lineno));
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    const std::string val = tok.substr(eq + 1);
    if (key == "r") {
      spec.num_residents = static_cast<int>(to_int(val, lineno));
    } else if (key == "h") {
      spec.num_hospitals = static_cast<int>(to_int(val, lineno));
    } else if (key == "cap") {
      if (val == "one") {
        spec.capacity_mode = CapacityMode::all_one;
      } else if (val.rfind("uniform:", 0) == 0) {
        spec.capacity_mode = CapacityMode::uniform;
        const auto rest = val.substr(8);
        const auto colon = rest.find(':');
        if (colon == std::string::npos) throw ParseError(lineno, "expected uniform:LO:HI");
        spec.cap_lo = static_cast<int>(to_int(rest.substr(0, colon), lineno));
        spec.cap_hi = static_cast<int>(to_int(rest.substr(colon + 1), lineno));
      } else if (val.rfind("fixed:", 0) == 0) {
        spec.capacity_mode = CapacityMode::fixed;
        spec.cap_fixed.clear();
        std::string item;
        std::istringstream items(val.substr(6));
        while (std::getline(items, item, ','))
          spec.cap_fixed.push_back(static_cast<int>(to_int(item, lineno)));
      } else {
        throw ParseError(lineno, "unknown cap mode '" + val + "'");
      }
    } else if (key == "ties") {
      spec.ties = static_cast<int>(to_int(val, lineno));
    } else if (key == "tieside") {
      if (val == "r")
        spec.tie_side = TieSide::resident;
      else if (val == "h")
        spec.tie_side = TieSide::hospital;
      else
        throw ParseError(lineno, "tieside must be r or h");
    } else if (key == "len") {
      spec.list_length = val == "full" ? 0 : static_cast<int>(to_int(val, lineno));
    } else {
      throw ParseError(lineno, "unknown field '" + key + "'");
    }
  }
  if (auto reason = spec.invalid_reason()) throw ParseError(lineno, "invalid spec: " + *reason);
  return spec;
}

std::vector<GenSpec> parse_manifest(std::istream& in) {
  std::vector<GenSpec> out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
    bool blank = true;
    for (char c : raw)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    out.push_back(parse_manifest_line(raw, lineno));
  }
  return out;
}

}  // namespace hrcap
