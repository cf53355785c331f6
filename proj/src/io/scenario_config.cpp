#include "linthresh/io/scenario_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "linthresh/error.hpp"
#include "linthresh/io/csv.hpp"

namespace linthresh::io {

namespace {

struct Located {
  std::string value;
  std::size_t line = 0;
};

using Block = std::map<std::string, Located>;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

class Parser {
 public:
  explicit Parser(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(std::size_t line, const std::string& what) const {
    throw Error(ErrorCode::InvalidConfig, source_ + ":" + std::to_string(line) + ": " + what);
  }

  std::vector<std::string> list(const Located& v) const {
    std::vector<std::string> out;
    std::stringstream ss(v.value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) fail(v.line, "empty list element");
      out.push_back(item);
    }
    if (out.empty()) fail(v.line, "missing value");
    return out;
  }

  double real(const std::string& text, std::size_t line) const {
    const auto v = parse_double(text);
    if (!v || !std::isfinite(*v)) fail(line, "expected a finite number, got '" + text + "'");
    return *v;
  }

  std::uint64_t integer(const std::string& text, std::size_t line) const {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      fail(line, "expected a non-negative integer, got '" + text + "'");
    }
    return v;
  }

  void expand(const Block& block, std::vector<sim::Scenario>& out, std::size_t header_line) const {
    static const char* const known[] = {"u0", "delta", "sigma", "n",     "c",    "xi",
                                        "eta1", "shift", "penalty", "model", "nrep", "seed"};
    for (const auto& [key, v] : block) {
      if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
        fail(v.line, "unknown key '" + key + "'");
      }
    }
    sim::Scenario base;
    auto scalar = [&](const char* key) -> const Located* {
      auto it = block.find(key);
      if (it == block.end()) return nullptr;
      if (list(it->second).size() != 1) fail(it->second.line, std::string("key '") + key + "' takes one value");
      return &it->second;
    };
    try {
      if (auto v = scalar("xi")) base.penalty.xi = real(v->value, v->line);
      if (auto v = scalar("eta1")) base.penalty.eta1 = real(v->value, v->line);
      if (auto v = scalar("shift")) base.penalty.shift = real(v->value, v->line);
      if (auto v = scalar("penalty")) base.penalty.kind = parse_penalty_kind(trim(v->value));
      if (auto v = scalar("model")) base.model = sim::parse_response_model(trim(v->value));
      if (auto v = scalar("nrep")) base.nrep = integer(trim(v->value), v->line);
      if (auto v = scalar("seed")) base.base_seed = integer(trim(v->value), v->line);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidConfig && std::string_view(e.what()).starts_with(source_)) throw;
      fail(header_line, e.what());
    }
    if (base.penalty.kind == PenaltyKind::Tabulated) fail(header_line, "tabulated penalties are not supported in config files");

    auto values = [&](const char* key, double fallback) {
      auto it = block.find(key);
      if (it == block.end()) return std::vector<double>{fallback};
      std::vector<double> out;
      for (const auto& s : list(it->second)) out.push_back(real(s, it->second.line));
      return out;
    };
    const auto u0s = values("u0", base.u0);
    const auto deltas = values("delta", base.delta);
    const auto sigmas = values("sigma", base.sigma);
    std::vector<std::size_t> ns{base.n};
    if (auto it = block.find("n"); it != block.end()) {
      ns.clear();
      for (const auto& s : list(it->second)) ns.push_back(integer(s, it->second.line));
    }
    const auto cs = values("c", base.penalty.c);

    for (double u0 : u0s)
      for (double delta : deltas)
        for (double sigma : sigmas)
          for (std::size_t n : ns)
            for (double c : cs) {
              sim::Scenario s = base;
              s.u0 = u0;
              s.delta = delta;
              s.sigma = sigma;
              s.n = n;
              s.penalty.c = c;
              try {
                s.validate();
              } catch (const Error& e) {
                fail(header_line, e.what());
              }
              out.push_back(s);
            }
  }

  std::vector<sim::Scenario> parse(std::istream& in) const {
    std::vector<sim::Scenario> out;
    Block defaults;
    Block current;
    enum class Section { None, Defaults, Scenario } section = Section::None;
    std::size_t header_line = 0;
    auto close = [&] {
      if (section == Section::Scenario) {
        Block merged = defaults;
        for (const auto& [k, v] : current) merged[k] = v;
        expand(merged, out, header_line);
      }
      current.clear();
    };

    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
      ++line;
      std::string text = trim(raw.substr(0, raw.find('#')));
      if (text.empty()) continue;
      if (text.front() == '[') {
        if (text.back() != ']') fail(line, "malformed section header");
        close();
        const std::string name = trim(text.substr(1, text.size() - 2));
        if (name == "defaults") {
          if (section == Section::Scenario) fail(line, "[defaults] must precede every [scenario]");
          section = Section::Defaults;
        } else if (name == "scenario") {
          section = Section::Scenario;
        } else {
          fail(line, "unknown section [" + name + "]");
        }
        header_line = line;
        continue;
      }
      const auto eq = text.find('=');
      if (eq == std::string::npos) fail(line, "expected key = value");
      if (section == Section::None) fail(line, "key outside of a section");
      const std::string key = trim(text.substr(0, eq));
      const std::string value = trim(text.substr(eq + 1));
      if (key.empty() || value.empty()) fail(line, "expected key = value");
      Block& target = section == Section::Defaults ? defaults : current;
      if (target.count(key) != 0) fail(line, "duplicate key '" + key + "'");
      target[key] = {value, line};
    }
    close();
    return out;
  }

 private:
  std::string source_;
};

}  // namespace

std::vector<sim::Scenario> parse_scenario_config(std::istream& in, const std::string& source) {
  return Parser(source).parse(in);
}

std::vector<sim::Scenario> read_scenario_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, path.string() + ": cannot open for reading");
  return parse_scenario_config(in, path.string());
}

}  // namespace linthresh::io
