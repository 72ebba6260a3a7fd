#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "ltree/constructions.hpp"
#include "ltree/error.hpp"
#include "ltree/group.hpp"

namespace ltree {

namespace {

std::string strip(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

// Splits on whitespace outside double quotes; quotes are removed.
std::vector<std::string> split_args(std::string_view s, std::size_t line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, have = false;
  for (char c : s) {
    if (c == '"') {
      quoted = !quoted;
      have = true;
    } else if (!quoted && (c == ' ' || c == '\t')) {
      if (have) out.push_back(cur);
      cur.clear();
      have = false;
    } else {
      cur += c;
      have = true;
    }
  }
  if (quoted) throw ParseError("unterminated string", line);
  if (have) out.push_back(cur);
  return out;
}

std::map<std::string, std::string> key_values(const std::vector<std::string>& args, std::size_t line) {
  std::map<std::string, std::string> out;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const auto eq = args[i].find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected key=value, got '" + args[i] + "'", line);
    if (!out.emplace(args[i].substr(0, eq), args[i].substr(eq + 1)).second)
      throw ParseError("repeated key '" + args[i].substr(0, eq) + "'", line);
  }
  return out;
}

std::vector<std::string> comma_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (auto name = strip(item); !name.empty()) out.push_back(name);
  return out;
}

std::string take(std::map<std::string, std::string>& kv, const std::string& key, std::size_t line) {
  auto it = kv.find(key);
  if (it == kv.end()) throw ParseError("missing " + key + "=", line);
  std::string value = it->second;
  kv.erase(it);
  return value;
}

std::string take_or(std::map<std::string, std::string>& kv, const std::string& key, std::string fallback) {
  auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  std::string value = it->second;
  kv.erase(it);
  return value;
}

GroupDef construction(const std::vector<std::string>& args, std::size_t line) {
  auto kv = key_values(args, line);
  const std::vector<std::string> alphabet = comma_list(take_or(kv, "alphabet", ""));
  std::optional<GroupDef> out;
  try {
    if (args[0] == "free") {
      out = free_group(alphabet);
    } else if (args[0] == "hnn_stable") {
      const std::string u = take(kv, "u", line);
      out = hnn_stable(alphabet, u, take_or(kv, "stable", "s"));
    } else {
      const std::string u = take(kv, "u", line), v = take(kv, "v", line);
      out = hnn_conjugate(alphabet, u, v, take_or(kv, "stable", "s"));
    }
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line);
  }
  if (!kv.empty()) throw ParseError("unknown key '" + kv.begin()->first + "'", line);
  return *out;
}

}  // namespace

GroupDef parse_group(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  bool header = false;
  std::optional<std::size_t> rank;
  std::optional<Alphabet> alphabet;
  std::optional<GroupDef> base;
  struct PendingGen {
    std::string name, body;
    std::size_t line;
  };
  std::vector<PendingGen> pending;

  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = strip(raw);
    if (line.empty()) continue;
    const auto args = split_args(line, line_no);
    const std::string& keyword = args[0];
    if (!header) {
      if (keyword != "lgroup" || args.size() != 2) throw ParseError("missing header 'lgroup 1'", line_no);
      if (args[1] != "1") throw ParseError("unsupported format version " + args[1], line_no);
      header = true;
      continue;
    }
    if (keyword == "rank") {
      if (rank || base) throw ParseError("rank given twice", line_no);
      if (args.size() != 2) throw ParseError("expected 'rank N'", line_no);
      try {
        const long value = std::stol(args[1]);
        if (value < 1 || value > 64) throw std::out_of_range("rank");
        rank = static_cast<std::size_t>(value);
      } catch (const std::exception&) {
        throw ParseError("invalid rank '" + args[1] + "'", line_no);
      }
    } else if (keyword == "alphabet") {
      if (alphabet || base) throw ParseError("alphabet given twice", line_no);
      std::vector<std::string> names;
      for (std::size_t i = 1; i < args.size(); ++i)
        for (auto& n : comma_list(args[i])) names.push_back(n);
      try {
        alphabet = Alphabet(names);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
    } else if (keyword == "gen") {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("expected 'gen NAME = WORD'", line_no);
      const std::string name = strip(std::string_view(line).substr(3, eq - 3));
      if (!Alphabet::valid_name(name)) throw ParseError("invalid generator name '" + name + "'", line_no);
      pending.push_back({name, line.substr(eq + 1), line_no});
    } else if (keyword == "free" || keyword == "hnn_stable" || keyword == "hnn_conj") {
      if (base || rank || alphabet || !pending.empty())
        throw ParseError("a construction must be the first definition", line_no);
      base = construction(args, line_no);
    } else {
      throw ParseError("unknown directive '" + keyword + "'", line_no);
    }
  }
  if (!header) throw ParseError("missing header 'lgroup 1'", line_no == 0 ? 1 : line_no);

  const std::size_t group_rank = base ? base->rank() : rank.value_or(1);
  const bool extend = !base && !alphabet;
  Alphabet letters = base ? base->alphabet() : alphabet.value_or(Alphabet{});
  std::vector<Generator> gens = base ? base->generators() : std::vector<Generator>{};
  for (const auto& g : pending) {
    for (const auto& existing : gens)
      if (existing.name == g.name) throw ParseError("duplicate generator '" + g.name + "'", g.line);
    try {
      gens.push_back({g.name, parse_word(g.body, letters, group_rank, extend)});
    } catch (const ParseError& e) {
      throw ParseError(e.what(), g.line);
    } catch (const std::length_error& e) {
      throw ParseError(e.what(), g.line);
    }
  }
  try {
    return GroupDef(group_rank, std::move(letters), std::move(gens));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

GroupDef load_group(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_group(buffer.str());
}

}  // namespace ltree
