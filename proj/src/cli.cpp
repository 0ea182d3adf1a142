#include "ietw/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ietw/bwt.hpp"
#include "ietw/rauzy.hpp"

namespace ietw {

  ParseError::ParseError(std::string const& source, std::size_t line, std::string const& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  namespace {

    std::string trim(std::string_view s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return {};
      }
      auto e = s.find_last_not_of(" \t\r");
      return std::string(s.substr(b, e - b + 1));
    }

    struct Entry {
      std::string value;
      std::size_t line;
    };

  }  // namespace

  Iet parse_iet_text(std::string_view text, std::string const& source) {
    std::map<std::string, Entry> entries;
    std::optional<Entry>         d_entry;

    std::istringstream in{std::string(text)};
    std::string        raw;
    std::size_t        lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      auto line = trim(std::string_view(raw).substr(0, raw.find('#')));
      if (line.empty()) {
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw ParseError(source, lineno, "expected \"key = value\"");
      }
      auto key   = trim(std::string_view(line).substr(0, eq));
      auto value = trim(std::string_view(line).substr(eq + 1));
      if (key.empty() || value.empty()) {
        throw ParseError(source, lineno, "expected \"key = value\"");
      }
      if (key == "d") {
        if (d_entry && d_entry->value != value) {
          throw ParseError(source, lineno, "inconsistent radicand: d = " + value
                                               + " after d = " + d_entry->value
                                               + " on line " + std::to_string(d_entry->line));
        }
        d_entry = Entry{value, lineno};
        continue;
      }
      if (key != "alphabet" && key != "pi" && key != "origin" && key.rfind("len.", 0) != 0) {
        throw ParseError(source, lineno, "unknown key \"" + key + "\"");
      }
      if (auto it = entries.find(key); it != entries.end()) {
        throw ParseError(source, lineno, "duplicate key \"" + key + "\" (first on line "
                                             + std::to_string(it->second.line) + ")");
      }
      entries.emplace(key, Entry{value, lineno});
    }

    unsigned long d = 0;
    if (d_entry) {
      try {
        std::size_t used = 0;
        d = std::stoul(d_entry->value, &used);
        if (used != d_entry->value.size() || d < 2 || !is_square_free(d)) {
          throw Error("");
        }
      } catch (std::exception const&) {
        throw ParseError(source, d_entry->line, "d must be a square-free integer > 1");
      }
    }

    auto need = [&](std::string const& key) -> Entry const& {
      auto it = entries.find(key);
      if (it == entries.end()) {
        throw ParseError(source, lineno, "missing \"" + key + "\"");
      }
      return it->second;
    };

    auto const&     alpha = need("alphabet");
    OrderedAlphabet A;
    try {
      A = OrderedAlphabet(alpha.value);
    } catch (Error const& e) {
      throw ParseError(source, alpha.line, e.what());
    }

    auto const& pi_entry = need("pi");
    Permutation pi;
    try {
      pi = parse_permutation(pi_entry.value, A);
    } catch (Error const& e) {
      throw ParseError(source, pi_entry.line, e.what());
    }

    auto number = [&](Entry const& e) {
      try {
        return QuadNum::parse(e.value, d);
      } catch (Error const& err) {
        throw ParseError(source, e.line, err.what());
      }
    };

    for (auto const& [key, e] : entries) {
      if (key.rfind("len.", 0) == 0 && (key.size() != 5 || !A.contains(key[4]))) {
        throw ParseError(source, e.line, "\"" + key + "\" does not name a letter of \"" + A.letters() + "\"");
      }
    }
    std::vector<QuadNum> lengths;
    for (Letter a : A.letters()) {
      auto const& e = need(std::string("len.") + a);
      auto        x = number(e);
      if (x.sign() <= 0) {
        throw ParseError(source, e.line, std::string("length of '") + a + "' must be positive");
      }
      lengths.push_back(std::move(x));
    }
    QuadNum origin(0);
    if (auto it = entries.find("origin"); it != entries.end()) {
      origin = number(it->second);
    }
    try {
      return Iet(A, pi, std::move(lengths), origin);
    } catch (Error const& e) {
      throw ParseError(source, pi_entry.line, e.what());
    }
  }

  Iet parse_iet_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_iet_text(buf.str(), path);
  }

  std::string format_iet(Iet const& T) {
    unsigned long d = T.origin().radicand();
    for (auto const& x : T.lengths()) {
      d = std::max(d, x.radicand());
    }
    std::ostringstream os;
    if (d != 0) {
      os << "d = " << d << '\n';
    }
    os << "alphabet = " << T.alphabet().letters() << '\n';
    os << "pi = " << T.image_order() << '\n';
    for (Letter a : T.alphabet().letters()) {
      os << "len." << a << " = " << T.length(a).to_string() << '\n';
    }
    os << "origin = " << T.origin().to_string() << '\n';
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::optional<std::size_t> env_size(char const* name) {
      char const* v = std::getenv(name);
      if (v == nullptr || *v == '\0') {
        return std::nullopt;
      }
      try {
        std::size_t used = 0;
        auto        n    = std::stoul(v, &used);
        if (used == std::string_view(v).size()) {
          return n;
        }
      } catch (std::exception const&) {
      }
      throw Error(std::string(name) + " must be a non-negative integer, got \"" + v + "\"");
    }

    WordRecord check_word(Iet const& T, Word const& w, VerifyOptions const& opts) {
      WordRecord rec;
      rec.w = w;
      try {
        InductionOptions io;
        io.cap         = opts.induction_cap;
        io.keane_depth = 0;  // checked once up front
        auto trace     = induce_to_cylinder(T, w, io);
        for (Letter a : trace.theta.source().letters()) {
          rec.induction.insert(trace.theta.image(a));
        }
        for (auto const& s : trace.steps) {
          rec.steps.push_back(s.kind == StepKind::right ? 'r' : 'l');
        }
        rec.theta = trace.theta.to_string();

        if (w.empty()) {
          for (Letter a : T.alphabet().letters()) {
            rec.scan.insert(Word(1, a));
          }
        } else {
          auto scan = return_words_scan(T, w);
          rec.scan  = scan.words;
          if (!scan.complete) {
            rec.error = "scan found " + std::to_string(scan.words.size()) + " return words within "
                        + std::to_string(scan.scanned) + " letters";
          }
        }
        rec.method_agreement = rec.induction == rec.scan;

        for (auto const& u : rec.induction) {
          auto            rep = clustering_report(u, T.alphabet());
          ReturnWordCheck c;
          c.return_word   = u;
          c.bwt           = rep.transform;
          c.clustering    = rep.is_clustering;
          c.blocks        = rep.block_order;
          c.pi_clustering = is_pi_clustering(u, T.permutation(), T.alphabet());
          c.perfect       = rep.is_perfect;
          rec.checks.push_back(std::move(c));
        }
      } catch (Error const& e) {
        rec.error = e.what();
      }
      return rec;
    }

    void collect_failures(WordRecord const& rec, std::size_t d, std::vector<Failure>& out) {
      if (rec.error) {
        out.push_back({rec.w, std::nullopt, std::nullopt, *rec.error});
        return;
      }
      if (!rec.method_agreement) {
        out.push_back({rec.w, std::nullopt, std::nullopt, "induction and scan disagree"});
      }
      if (rec.induction.size() != d) {
        out.push_back({rec.w, std::nullopt, std::nullopt,
                       std::to_string(rec.induction.size()) + " return words, expected "
                           + std::to_string(d)});
      }
      for (auto const& c : rec.checks) {
        if (!c.clustering) {
          out.push_back({rec.w, c.return_word, c.bwt, "return word is not clustering"});
        }
      }
    }

    std::string instance_line(Iet const& T) {
      std::string s = format_iet(T);
      std::replace(s.begin(), s.end(), '\n', ';');
      return s.substr(0, s.size() - 1);
    }

  }  // namespace

  VerifyOptions default_verify_options() {
    VerifyOptions o;
    if (auto k = env_size("IETW_KEANE_DEPTH")) {
      o.keane_depth = *k;
    }
    o.induction_cap = env_size("IETW_INDUCTION_CAP");
    return o;
  }

  VerificationReport verify_main_theorem(Iet const& T, VerifyOptions const& opts) {
    auto verdict = check_keane(T, opts.keane_depth);
    if (!verdict.regular()) {
      auto const& c = *verdict.failure;
      throw KeaneFailure("refusing to verify: the map is not regular, connection "
                         + c.from.to_string() + " -> " + c.to.to_string() + " after "
                         + std::to_string(c.steps) + " steps");
    }

    std::vector<Word> words;
    for (auto const& w : language(T, opts.max_len)) {
      words.push_back(w);
    }
    std::stable_sort(words.begin(), words.end(), [](auto const& x, auto const& y) {
      return x.size() < y.size();
    });

    std::vector<WordRecord> records(words.size());
    auto const              n_threads = std::max(1u, opts.threads);
    if (n_threads == 1) {
      for (std::size_t i = 0; i < words.size(); ++i) {
        records[i] = check_word(T, words[i], opts);
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < n_threads; ++t) {
        pool.emplace_back([&] {
          for (auto i = next++; i < words.size(); i = next++) {
            records[i] = check_word(T, words[i], opts);
          }
        });
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    VerificationReport r;
    r.instance      = instance_line(T);
    r.max_len       = opts.max_len;
    r.keane_depth   = opts.keane_depth;
    r.words_checked = words.size();
    r.trace         = opts.trace;
    for (auto const& rec : records) {
      collect_failures(rec, T.size(), r.failures);
    }
    r.records = std::move(records);
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::string show_word(Word const& w) {
      return w.empty() ? "ε" : w;
    }

    std::string show_set(std::set<Word> const& s) {
      std::string out = "{";
      for (auto const& w : s) {
        out += (out.size() > 1 ? ", " : "") + w;
      }
      return out + "}";
    }

    nlohmann::ordered_json to_json(VerificationReport const& r) {
      using nlohmann::ordered_json;
      ordered_json j;
      j["instance"]      = r.instance;
      j["max_len"]       = r.max_len;
      j["keane_depth"]   = r.keane_depth;
      j["words_checked"] = r.words_checked;
      j["ok"]            = r.ok();
      j["failures"]      = ordered_json::array();
      for (auto const& f : r.failures) {
        ordered_json jf;
        jf["word"]        = f.word;
        jf["return_word"] = f.return_word ? ordered_json(*f.return_word) : ordered_json(nullptr);
        jf["bwt"]         = f.bwt ? ordered_json(*f.bwt) : ordered_json(nullptr);
        jf["reason"]      = f.reason;
        j["failures"].push_back(std::move(jf));
      }
      bool all_pi = true, all_perfect = true;
      j["records"] = ordered_json::array();
      for (auto const& rec : r.records) {
        ordered_json jr;
        jr["w"]                = rec.w;
        jr["method_agreement"] = rec.method_agreement;
        jr["return_words"]     = rec.induction;
        jr["scan_return_words"] = rec.scan;
        jr["clustering"]       = ordered_json::array();
        for (auto const& c : rec.checks) {
          all_pi      = all_pi && c.pi_clustering;
          all_perfect = all_perfect && c.perfect;
          ordered_json jc;
          jc["return_word"]   = c.return_word;
          jc["bwt"]           = c.bwt;
          jc["clustering"]    = c.clustering;
          jc["permutation"]   = c.blocks;
          jc["pi_clustering"] = c.pi_clustering;
          jc["perfect"]       = c.perfect;
          jr["clustering"].push_back(std::move(jc));
        }
        if (r.trace) {
          jr["steps"] = rec.steps;
          jr["theta"] = rec.theta;
        }
        if (rec.error) {
          jr["error"] = *rec.error;
        }
        j["records"].push_back(std::move(jr));
      }
      // Observations only, never pass/fail.
      j["probes"] = {{"all_pi_clustering", all_pi}, {"all_perfect", all_perfect}};
      return j;
    }

    std::string to_text(VerificationReport const& r) {
      std::ostringstream os;
      os << "instance: " << r.instance << '\n';
      os << "max_len " << r.max_len << ", keane depth " << r.keane_depth << ", "
         << r.words_checked << " words checked\n";
      os << "failures: " << r.failures.size() << '\n';
      for (auto const& f : r.failures) {
        os << "  FAIL " << show_word(f.word);
        if (f.return_word) {
          os << " return word " << *f.return_word;
        }
        if (f.bwt) {
          os << " bwt " << *f.bwt;
        }
        os << ": " << f.reason << '\n';
      }
      std::size_t pi = 0, perfect = 0, total = 0;
      for (auto const& rec : r.records) {
        os << show_word(rec.w) << ": R = " << show_set(rec.induction)
           << (rec.method_agreement ? "" : " scan " + show_set(rec.scan));
        for (auto const& c : rec.checks) {
          ++total;
          pi += c.pi_clustering;
          perfect += c.perfect;
          os << "  " << c.return_word << "->" << c.bwt << (c.clustering ? "" : "(!)");
        }
        os << '\n';
        if (r.trace) {
          os << "    steps " << (rec.steps.empty() ? "-" : rec.steps) << "  theta " << rec.theta << '\n';
        }
        if (rec.error) {
          os << "    error: " << *rec.error << '\n';
        }
      }
      os << "probe: " << pi << "/" << total << " return words pi-clustering, "
         << perfect << "/" << total << " perfectly clustering\n";
      os << (r.ok() ? "OK" : "FAILED") << '\n';
      return os.str();
    }

  }  // namespace

  std::string emit_report(VerificationReport const& r, ReportFormat format) {
    if (format == ReportFormat::json) {
      return to_json(r).dump(2) + "\n";
    }
    return to_text(r);
  }

}  // namespace ietw
