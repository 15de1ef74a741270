// Command-line front end: seeds, shortest-seed, quasigaps, factorize,
// verify and bench over a byte or token text.

#include <chrono>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "seeds/factorization.hpp"
#include "seeds/families.hpp"
#include "seeds/predicates.hpp"
#include "seeds/seeds.hpp"
#include "seeds_oracle.hpp"

using nlohmann::json;
using namespace seeds;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string alphabet = "bytes";
  std::uint64_t seed = 1;
  bool keep_newline = false;
  std::string input = "-";
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Text load_text(const Options& opt) {
  std::string raw = read_all(opt.input);
  if (opt.alphabet == "tokens") {
    std::vector<Symbol> sym;
    std::istringstream in(raw);
    std::string tok;
    while (in >> tok) {
      Symbol v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0) {
        throw InputError("bad token '" + tok + "'");
      }
      sym.push_back(v);
    }
    if (sym.empty()) throw InputError("empty input");
    return Text(std::move(sym));
  }
  if (!opt.keep_newline && !raw.empty() && raw.back() == '\n') {
    raw.pop_back();
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
  }
  if (raw.empty()) throw InputError("empty input");
  return Text::from_bytes(raw);
}

bool token_output = false;  // set once from --alphabet

std::string render(const Text& t, Pos pos, Pos len) {
  if (!token_output) return t.render(pos, len);
  std::string out;
  for (Pos k = pos; k < pos + len; ++k) {
    if (k != pos) out.push_back(' ');
    out += std::to_string(t[k]);
  }
  return out;
}

// Long words are cut for display; the positions stay exact.
std::string shown(const Text& t, Pos pos, Pos len) {
  constexpr Pos kMax = 64;
  if (len <= kMax) return render(t, pos, len);
  return render(t, pos, kMax) + " ...";
}

std::string gap_str(Pos q) { return is_finite(q) ? std::to_string(q) : "inf"; }

json gap_json(Pos q) { return is_finite(q) ? json(q) : json("inf"); }

int run_seeds(const Options& opt, bool enumerate, std::int64_t max_count) {
  const Analysis a(load_text(opt));
  const SeedSet set = a.all_seeds();
  const auto [spos, slen] = set.shortest();
  const Text& t = a.text();
  if (opt.format == "json") {
    json out{{"n", t.size()}, {"count", set.count()}};
    out["seeds"] = json::array();
    for (const auto& r : set.ranges()) {
      out["seeds"].push_back({{"edgeNode", r.node}, {"pos", r.pos}, {"lo", r.lo}, {"hi", r.hi}});
    }
    out["shortest"] = {{"pos", spos}, {"len", slen}};
    if (enumerate) {
      json list = json::array();
      std::int64_t left = max_count;
      set.enumerate([&](Pos p, Pos l) {
        if (left-- == 0) return false;
        list.push_back({{"pos", p}, {"len", l}});
        return true;
      });
      out["enumerated"] = std::move(list);
    }
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "n " << t.size() << "\nseeds " << set.count() << " in " << set.ranges().size()
            << " ranges\nshortest " << shown(t, spos, slen) << " (pos " << spos << ", length "
            << slen << ")\n";
  for (const auto& r : set.ranges()) {
    std::cout << "edge " << r.node << " pos " << r.pos << " len " << r.lo << ".." << r.hi << " "
              << shown(t, r.pos, r.hi) << '\n';
  }
  if (enumerate) {
    std::int64_t left = max_count;
    set.enumerate([&](Pos p, Pos l) {
      if (left-- == 0) return false;
      std::cout << "seed " << p << ' ' << l << ' ' << shown(t, p, l) << '\n';
      return true;
    });
  }
  return kExitOk;
}

int run_shortest(const Options& opt) {
  const Analysis a(load_text(opt));
  const auto [pos, len] = a.shortest_seed();
  if (opt.format == "json") {
    std::cout << json{{"n", a.text().size()}, {"shortest", {{"pos", pos}, {"len", len}}},
                      {"word", render(a.text(), pos, len)}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << render(a.text(), pos, len) << " (length " << len << ", pos " << pos << ")\n";
  }
  return kExitOk;
}

int run_quasigaps(const Options& opt) {
  const Analysis a(load_text(opt));
  const InducedTree& tr = a.tree();
  const auto& q = a.quasigaps();
  json rows = json::array();
  if (opt.format != "json") std::cout << "node\tpos\tlen\tparent\tcount\tquasigap\tword\n";
  for (NodeId v = 1; v < tr.size(); ++v) {
    const Pos len = tr.word_length(v);
    const Pos plen = tr.word_length(tr.parent(v));
    if (len == plen) continue;  // the end marker alone
    if (opt.format == "json") {
      rows.push_back({{"node", v}, {"pos", tr.first(v)}, {"len", len}, {"parent", plen},
                      {"count", tr.count(v)}, {"quasigap", gap_json(q[v])},
                      {"word", render(a.text(), tr.first(v), len)}});
    } else {
      std::cout << v << '\t' << tr.first(v) << '\t' << len << '\t' << plen << '\t' << tr.count(v)
                << '\t' << gap_str(q[v]) << '\t' << shown(a.text(), tr.first(v), len) << '\n';
    }
  }
  if (opt.format == "json") std::cout << json{{"n", a.text().size()}, {"nodes", rows}}.dump(2) << '\n';
  return kExitOk;
}

int run_factorize(const Options& opt) {
  const Text t = load_text(opt);
  const auto lpnf = compute_lpnf(t, t.whole());
  const auto f = factorize_from_lpnf(t.whole(), lpnf);
  if (opt.format == "json") {
    json factors = json::array();
    for (const auto& x : f) factors.push_back({{"start", x.start}, {"len", x.length}});
    std::cout << json{{"n", t.size()}, {"factors", factors}, {"lpnf", lpnf}}.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "factors " << f.size() << '\n';
  for (const auto& x : f) std::cout << x.start << '\t' << x.length << '\t' << shown(t, x.start, x.length) << '\n';
  std::cout << "lpnf";
  for (Pos v : lpnf) std::cout << ' ' << v;
  std::cout << '\n';
  return kExitOk;
}

int run_verify(const Options& opt, Pos max_n) {
  const Text t = load_text(opt);
  if (t.size() > max_n) {
    throw InputError("verify: input has " + std::to_string(t.size()) +
                     " symbols, more than --max-n " + std::to_string(max_n));
  }
  const oracle::Word w(t.symbols().begin(), t.symbols().end());
  const Analysis a{Text(t)};
  std::vector<std::pair<std::string, bool>> checks;

  std::map<oracle::Word, int> fast;
  const InducedTree& tr = a.tree();
  for (NodeId v = 1; v < tr.size(); ++v) {
    if (tr.word_length(v) == tr.word_length(tr.parent(v))) continue;
    fast.emplace(oracle::slice(w, tr.first(v), tr.word_length(v)), a.quasigaps()[v]);
  }
  checks.emplace_back("quasigaps", fast == oracle::brute_quasigap_map(w));

  const SeedSet set = a.all_seeds();
  std::set<oracle::Word> words;
  bool each_seed = true;
  set.enumerate([&](Pos p, Pos l) {
    words.insert(oracle::slice(w, p, l));
    each_seed = each_seed && is_seed(t.symbols().subspan(static_cast<std::size_t>(p - 1), l), t);
    return true;
  });
  const auto brute = oracle::brute_all_seeds(w);
  checks.emplace_back("seeds", words == brute && static_cast<std::int64_t>(words.size()) == set.count());
  checks.emplace_back("predicate", each_seed);
  std::size_t best = w.size();
  for (const auto& s : brute) best = std::min(best, s.size());
  checks.emplace_back("shortest", static_cast<std::size_t>(a.shortest_seed().second) == best);

  bool ok = true;
  for (const auto& c : checks) ok = ok && c.second;
  if (opt.format == "json") {
    json out{{"n", t.size()}, {"ok", ok}};
    for (const auto& [name, pass] : checks) out["checks"][name] = pass;
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& [name, pass] : checks) std::cout << name << ' ' << (pass ? "ok" : "MISMATCH") << '\n';
  }
  return ok ? kExitOk : kExitMismatch;
}

// "2^14..2^22", "1000..4000" (doubling) or "1000,5000".
std::vector<Pos> parse_sizes(const std::string& spec) {
  auto one = [&](std::string s) -> Pos {
    std::int64_t v = 0;
    if (const auto caret = s.find('^'); caret != std::string::npos) {
      const int base = std::stoi(s.substr(0, caret));
      const int exp = std::stoi(s.substr(caret + 1));
      v = 1;
      for (int k = 0; k < exp; ++k) v *= base;
    } else {
      v = std::stoll(s);
    }
    if (v < 1 || v > (std::int64_t{1} << 28)) throw InputError("size out of range: " + s);
    return static_cast<Pos>(v);
  };
  std::vector<Pos> out;
  try {
    if (const auto dots = spec.find(".."); dots != std::string::npos) {
      const Pos lo = one(spec.substr(0, dots));
      const Pos hi = one(spec.substr(dots + 2));
      for (std::int64_t s = lo; s <= hi; s *= 2) out.push_back(static_cast<Pos>(s));
    } else {
      std::stringstream ss(spec);
      std::string part;
      while (std::getline(ss, part, ',')) out.push_back(one(part));
    }
  } catch (const std::logic_error&) {
    throw InputError("cannot parse --sizes '" + spec + "'");
  }
  if (out.empty()) throw InputError("empty --sizes");
  return out;
}

int run_bench(const Options& opt, const std::string& sizes, const std::string& family, int reps) {
  const auto fam = parse_family(family);
  if (!fam) throw InputError("unknown family '" + family + "'");
  json rows = json::array();
  if (opt.format != "json") {
    std::cout << "family\tn\tseconds\tns_per_symbol\tcalls\tdepth\tbucket_updates\tbucket_scans"
                 "\tmerge_paths\tworking\tseeds\tshortest\n";
  }
  for (const Pos n : parse_sizes(sizes)) {
    double best = 1e300;
    SolverStats stats;
    std::int64_t count = 0;
    Pos shortest = 0;
    for (int r = 0; r < reps; ++r) {
      Text t = make_family_word(*fam, n, opt.seed);
      const auto start = std::chrono::steady_clock::now();
      const Analysis a(std::move(t));
      const SeedSet set = a.all_seeds();
      const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      best = std::min(best, sec);
      stats = a.stats();
      count = set.count();
      shortest = set.shortest().second;
    }
    const json row{{"family", family},
                   {"n", n},
                   {"seconds", best},
                   {"ns_per_symbol", best * 1e9 / n},
                   {"calls", stats.calls},
                   {"depth", stats.max_depth},
                   {"bucket_updates", stats.range.bucket_updates},
                   {"bucket_scans", stats.range.bucket_scans},
                   {"merge_paths", stats.merge.paths},
                   {"working", stats.working_length},
                   {"seeds", count},
                   {"shortest", shortest}};
    if (opt.format == "json") {
      rows.push_back(row);
    } else {
      std::printf("%s\t%d\t%.4f\t%.1f\t%lld\t%lld\t%lld\t%lld\t%lld\t%lld\t%lld\t%d\n", family.c_str(), n,
                  best, best * 1e9 / n, static_cast<long long>(stats.calls),
                  static_cast<long long>(stats.max_depth),
                  static_cast<long long>(stats.range.bucket_updates),
                  static_cast<long long>(stats.range.bucket_scans),
                  static_cast<long long>(stats.merge.paths),
                  static_cast<long long>(stats.working_length), static_cast<long long>(count), shortest);
      std::fflush(stdout);
    }
  }
  if (opt.format == "json") std::cout << rows.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"All seeds and the shortest seed of a word, in linear time"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--alphabet", opt.alphabet, "bytes: raw input bytes; tokens: whitespace separated integers")
      ->check(CLI::IsMember({"bytes", "tokens"}));
  app.add_option("--seed", opt.seed, "Generator seed for bench");
  app.add_flag("--keep-trailing-newline", opt.keep_newline, "Do not strip one final newline");

  auto input_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", opt.input, "Input file, - for stdin")->required();
    return sub;
  };
  bool enumerate = false;
  std::int64_t max_count = -1;
  auto* seeds_cmd = input_cmd("seeds", "All seeds as ranges of prefix lengths on suffix-tree edges");
  seeds_cmd->add_flag("--enumerate", enumerate, "Also list every seed");
  seeds_cmd->add_option("--max-count", max_count, "Stop enumerating after this many seeds");
  auto* shortest_cmd = input_cmd("shortest-seed", "A shortest seed and its length");
  auto* quasigaps_cmd = input_cmd("quasigaps", "Quasigap of every explicit suffix-tree node");
  auto* factorize_cmd = input_cmd("factorize", "f-factorization and the LPnF table");
  Pos max_n = 128;
  auto* verify_cmd = input_cmd("verify", "Compare against brute force; exit 1 on a mismatch");
  verify_cmd->add_option("--max-n", max_n, "Refuse longer inputs (brute force is slow)");
  std::string sizes = "2^14..2^18";
  std::string family = "random";
  int reps = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Time the full pipeline on generated words");
  bench_cmd->add_option("--sizes", sizes, "e.g. 2^14..2^22 or 1000,2000");
  bench_cmd->add_option("--family", family, "random, fibonacci, thue-morse or periodic");
  bench_cmd->add_option("--reps", reps, "Repetitions per size, best time reported")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  token_output = opt.alphabet == "tokens";
  try {
    if (*seeds_cmd) return run_seeds(opt, enumerate, max_count);
    if (*shortest_cmd) return run_shortest(opt);
    if (*quasigaps_cmd) return run_quasigaps(opt);
    if (*factorize_cmd) return run_factorize(opt);
    if (*verify_cmd) return run_verify(opt, max_n);
    if (*bench_cmd) return run_bench(opt, sizes, family, reps);
  } catch (const InputError& e) {
    std::cerr << "seeds: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TextError& e) {
    std::cerr << "seeds: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "seeds: internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}
