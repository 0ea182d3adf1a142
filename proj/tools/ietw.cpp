#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "ietw/bwt.hpp"
#include "ietw/cli.hpp"
#include "ietw/diet.hpp"
#include "ietw/extgraph.hpp"
#include "ietw/iet.hpp"
#include "ietw/morphism.hpp"
#include "ietw/rauzy.hpp"

using namespace ietw;
using json = nlohmann::ordered_json;

namespace {

  int status = 0;

  Word empty_word_alias(std::string const& s) {
    return (s == "ε" || s == "eps" || s == "-") ? Word() : s;
  }

  std::string show(Word const& w) {
    return w.empty() ? "ε" : w;
  }

  std::vector<std::string> runs(Word const& s) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < s.size();) {
      auto j = s.find_first_not_of(s[i], i);
      j      = j == std::string::npos ? s.size() : j;
      out.push_back(s.substr(i, j - i));
      i = j;
    }
    return out;
  }

  json report_json(json input, ClusteringReport const& r) {
    json j;
    j["input"]       = std::move(input);
    j["transform"]   = r.transform;
    j["blocks"]      = runs(r.transform);
    j["clustering"]  = r.is_clustering;
    j["permutation"] = r.is_clustering ? json(r.block_order) : json(nullptr);
    j["perfect"]     = r.is_perfect;
    return j;
  }

  void print_report(std::string const& label, ClusteringReport const& r) {
    std::cout << label << r.transform << '\n';
    std::cout << "blocks: ";
    for (auto const& b : runs(r.transform)) {
      std::cout << b << ' ';
    }
    std::cout << '\n';
    if (r.is_clustering) {
      std::cout << "clustering, permutation " << r.block_order << " over " << r.support.letters()
                << (r.is_perfect ? " (perfect)" : "") << '\n';
    } else {
      std::cout << "not clustering\n";
    }
  }

  std::vector<std::size_t> parse_composition(std::string const& s) {
    std::vector<std::size_t> out;
    std::stringstream        in(s);
    std::string              part;
    while (std::getline(in, part, ',')) {
      std::size_t used = 0;
      long        v    = 0;
      try {
        v = std::stol(part, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != part.size() || v <= 0) {
        throw Error("composition parts must be positive integers, got \"" + part + "\"");
      }
      out.push_back(static_cast<std::size_t>(v));
    }
    return out;
  }

  std::vector<Word> split_commas(std::string const& s) {
    std::vector<Word> out;
    std::stringstream in(s);
    std::string       part;
    while (std::getline(in, part, ',')) {
      out.push_back(part);
    }
    return out;
  }

  // periodic:w, multiset:u,v,..., iet:FILE
  struct Source {
    LanguageSample              sample;
    std::optional<std::string>  clustering_order;  // image order when known
  };

  Source make_source(std::string const& spec, std::size_t max_len, std::string const& alphabet) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
      throw Error("source must be periodic:<word>, multiset:<w1,w2,...> or iet:<file>");
    }
    auto kind = spec.substr(0, colon);
    auto arg  = spec.substr(colon + 1);
    std::optional<OrderedAlphabet> A;
    if (!alphabet.empty()) {
      A = OrderedAlphabet(alphabet);
    }
    if (kind == "iet") {
      auto T = parse_iet_file(arg);
      return {sample_from_iet(T, max_len), T.image_order()};
    }
    std::vector<Word> words;
    if (kind == "periodic") {
      words = {arg};
    } else if (kind == "multiset") {
      words = split_commas(arg);
    } else {
      throw Error("unknown source kind \"" + kind + "\"");
    }
    auto sample = sample_from_multiset(words, max_len, A);
    auto order  = std::optional<std::string>();
    std::vector<Word> lyndon;
    bool              primitive = true;
    for (auto const& w : words) {
      if (!is_primitive(w)) {
        primitive = false;
        break;
      }
      lyndon.push_back(lyndon_representative(w, sample.alphabet()));
    }
    if (primitive) {
      auto rep = multiset_clustering_report(LyndonMultiset(lyndon, sample.alphabet()));
      if (rep.is_clustering) {
        order = rep.block_order;
      } else {
        // The permutation the words share one by one, if any.
        for (auto const& w : words) {
          auto r = clustering_report(w, sample.alphabet());
          if (!r.is_clustering || r.block_order.size() != sample.alphabet().size()
              || (order && *order != r.block_order)) {
            order.reset();
            break;
          }
          order = r.block_order;
        }
      }
    }
    return {std::move(sample), order};
  }

  // "pi", "A" or explicit letters.
  OrderedAlphabet resolve_order(std::string const& name, Source const& src, std::string const& pi) {
    auto const& A = src.sample.alphabet();
    if (name == "A") {
      return A;
    }
    if (name == "pi") {
      if (!pi.empty()) {
        return order_from_permutation(parse_permutation(pi, A), A);
      }
      if (!src.clustering_order) {
        throw Error("the source is not clustering; give --pi");
      }
      return OrderedAlphabet(*src.clustering_order);
    }
    OrderedAlphabet o(name);
    for (Letter a : A.letters()) {
      if (!o.contains(a)) {
        throw Error(std::string("order \"") + name + "\" is missing '" + a + "'");
      }
    }
    return o;
  }

  std::pair<OrderedAlphabet, OrderedAlphabet> resolve_orders(std::string const& spec,
                                                             Source const&      src,
                                                             std::string const& pi) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
      throw Error("orders must look like <left>:<right>, e.g. pi:A");
    }
    return {resolve_order(spec.substr(0, colon), src, pi),
            resolve_order(spec.substr(colon + 1), src, pi)};
  }

  void print_iet(Iet const& T, std::string const& indent = "") {
    std::cout << indent << "alphabet " << T.alphabet().letters() << ", pi " << T.image_order()
              << ", domain " << T.domain().to_string() << '\n';
    for (Letter a : T.alphabet().letters()) {
      std::cout << indent << "  " << a << ": " << T.piece(a).to_string() << "  length "
                << T.length(a).to_string() << "  shift " << T.translation(a).to_string() << '\n';
    }
  }

  void print_step(std::size_t i, StepRecord const& s, Iet const& after) {
    std::cout << "step " << i << ": " << (s.kind == StepKind::right ? "rho" : "lambda") << ' '
              << to_string(s.step_case) << ", pivot " << s.pivot << ", partner " << s.partner
              << ", morphism " << step_morphism(s).to_string() << '\n';
    print_iet(after, "  ");
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval exchanges, Rauzy induction, and clustering words"};
  app.require_subcommand(1);

  bool        as_json = false;
  std::string alphabet;

  // bwt / ebwt / ebwt-inverse / cluster
  Word word;
  auto bwt_cmd = app.add_subcommand("bwt", "Burrows-Wheeler transform of a word");
  bwt_cmd->add_option("--alphabet", alphabet, "ordered alphabet, e.g. abn")->required();
  bwt_cmd->add_option("word", word)->required();
  bwt_cmd->add_flag("--json", as_json);

  std::vector<Word> words;
  auto ebwt_cmd = app.add_subcommand("ebwt", "extended transform of a multiset of primitive words");
  ebwt_cmd->add_option("--alphabet", alphabet)->required();
  ebwt_cmd->add_option("words", words)->required();
  ebwt_cmd->add_flag("--json", as_json);

  auto inv_cmd = app.add_subcommand("ebwt-inverse", "Lyndon multiset with the given extended transform");
  inv_cmd->add_option("--alphabet", alphabet)->required();
  inv_cmd->add_option("string", word)->required();
  inv_cmd->add_flag("--json", as_json);

  std::string pi;
  auto cluster_cmd = app.add_subcommand("cluster", "clustering analysis of a word");
  cluster_cmd->add_option("--alphabet", alphabet)->required();
  cluster_cmd->add_option("word", word)->required();
  cluster_cmd->add_option("--pi", pi, "also test clustering for this permutation");
  cluster_cmd->add_flag("--json", as_json);

  // diet
  std::string composition;
  bool        orbits = false, orbit_words_only = false;
  std::string cyl;
  auto diet_cmd = app.add_subcommand("diet", "discrete interval exchange");
  diet_cmd->add_option("--composition", composition, "e.g. 4,2,1")->required();
  diet_cmd->add_option("--pi", pi)->required();
  diet_cmd->add_option("--alphabet", alphabet, "defaults to a, b, c, ...");
  auto diet_mode = diet_cmd->add_option_group("mode");
  diet_mode->add_flag("--orbits", orbits);
  diet_mode->add_flag("--words", orbit_words_only);
  diet_mode->add_option("--cylinder", cyl);
  diet_mode->require_option(0, 1);

  // iet ...
  std::string file;
  auto        iet_cmd = app.add_subcommand("iet", "interval exchange given by a spec file");
  iet_cmd->require_subcommand(1);

  std::size_t depth = default_verify_options().keane_depth;
  auto        check_cmd = iet_cmd->add_subcommand("check", "discontinuities and Keane condition");
  check_cmd->add_option("file", file)->required();
  check_cmd->add_option("--depth", depth, "orbit length examined for connections");

  std::string point = "(0)";
  std::size_t steps_n = 20;
  auto        traj_cmd = iet_cmd->add_subcommand("traj", "trajectory of a point");
  traj_cmd->add_option("file", file)->required();
  traj_cmd->add_option("--point", point, "literal (p) or (p, q, r)");
  traj_cmd->add_option("--steps", steps_n);

  std::size_t max_len = 4;
  auto        lang_cmd = iet_cmd->add_subcommand("language", "factors up to a length");
  lang_cmd->add_option("file", file)->required();
  lang_cmd->add_option("--max-len", max_len);

  std::string steps_spec;
  std::string target_word;
  bool        target_given = false;
  auto        rauzy_cmd = iet_cmd->add_subcommand("rauzy", "Rauzy steps: a string over r/l, or auto");
  rauzy_cmd->add_option("file", file)->required();
  rauzy_cmd->add_option("--steps", steps_spec, "e.g. rrll, or auto with --word")->required();
  rauzy_cmd->add_option("--word", target_word);

  std::string method = "both";
  bool        trace  = false;
  auto        ret_cmd = iet_cmd->add_subcommand("returns", "return words to a word");
  ret_cmd->add_option("file", file)->required();
  ret_cmd->add_option("--word", target_word)->required();
  ret_cmd->add_option("--method", method)->check(CLI::IsMember({"scan", "induction", "both"}));
  ret_cmd->add_flag("--trace", trace);

  // morphism apply
  std::string spec;
  auto        morph_cmd = app.add_subcommand("morphism", "free-monoid morphisms");
  morph_cmd->require_subcommand(1);
  auto apply_cmd = morph_cmd->add_subcommand("apply", "image of a word");
  apply_cmd->add_option("--spec", spec, "e.g. a:ab,b:b,c:c")->required();
  apply_cmd->add_option("word", word)->required();

  // extgraph / classify
  std::string source, orders = "pi:A";
  bool        art = false;
  auto        ext_cmd = app.add_subcommand("extgraph", "extension graph of a word");
  ext_cmd->add_option("--source", source, "periodic:<w> | multiset:<w1,w2> | iet:<file>")->required();
  ext_cmd->add_option("--word", target_word, "ε for the empty word")->required();
  ext_cmd->add_option("--orders", orders, "<left>:<right>, each pi, A or explicit letters");
  ext_cmd->add_option("--pi", pi);
  ext_cmd->add_option("--alphabet", alphabet);
  ext_cmd->add_option("--max-len", max_len, "sample depth, default |word| + 2");
  ext_cmd->add_flag("--art", art);

  std::size_t class_depth = 4;
  auto        class_cmd = app.add_subcommand("classify", "bounded-depth dendric/alsinic verdicts");
  class_cmd->add_option("--source", source)->required();
  class_cmd->add_option("--depth", class_depth);
  class_cmd->add_option("--orders", orders);
  class_cmd->add_option("--pi", pi);
  class_cmd->add_option("--alphabet", alphabet);

  // verify
  auto     vopts      = default_verify_options();
  auto     verify_cmd = app.add_subcommand("verify", "return words of every factor are clustering");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_option("--max-len", vopts.max_len);
  verify_cmd->add_option("--keane-depth", vopts.keane_depth);
  verify_cmd->add_option("--threads", vopts.threads);
  verify_cmd->add_flag("--json", as_json);
  verify_cmd->add_flag("--trace", vopts.trace);

  CLI11_PARSE(app, argc, argv);

  try {
    if (bwt_cmd->parsed() || cluster_cmd->parsed()) {
      OrderedAlphabet A(alphabet);
      auto            r = clustering_report(word, A);
      std::optional<bool> pi_ok;
      if (!pi.empty()) {
        pi_ok = is_pi_clustering(word, parse_permutation(pi, A), A);
      }
      if (as_json) {
        auto j = report_json(word, r);
        if (pi_ok) {
          j["pi_clustering"] = *pi_ok;
        }
        std::cout << j.dump(2) << '\n';
      } else {
        print_report("bwt: ", r);
        if (pi_ok) {
          std::cout << (*pi_ok ? "" : "not ") << pi << "-clustering\n";
        }
      }
    } else if (ebwt_cmd->parsed()) {
      OrderedAlphabet   A(alphabet);
      std::vector<Word> lyndon;
      for (auto const& w : words) {
        lyndon.push_back(lyndon_representative(w, A));
      }
      LyndonMultiset W(lyndon, A);
      auto           r = multiset_clustering_report(W);
      if (as_json) {
        std::cout << report_json(W.entries(), r).dump(2) << '\n';
      } else {
        std::cout << "multiset:";
        for (auto const& w : W.entries()) {
          std::cout << ' ' << w;
        }
        std::cout << '\n';
        print_report("ebwt: ", r);
      }
    } else if (inv_cmd->parsed()) {
      OrderedAlphabet A(alphabet);
      auto            W = inverse_ebwt(word, A);
      auto            r = multiset_clustering_report(W);
      if (as_json) {
        auto j        = report_json(word, r);
        j["multiset"] = W.entries();
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "multiset:";
        for (auto const& w : W.entries()) {
          std::cout << ' ' << w;
        }
        std::cout << '\n';
        print_report("ebwt: ", r);
      }
    } else if (diet_cmd->parsed()) {
      auto parts = parse_composition(composition);
      if (alphabet.empty()) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
          alphabet.push_back(static_cast<char>('a' + i));
        }
      }
      OrderedAlphabet A(alphabet);
      Diet            D(parts, parse_permutation(pi, A));
      bool const      all = !orbits && !orbit_words_only && cyl.empty();
      if (all) {
        std::cout << "n = " << D.n() << ", shifts";
        for (auto t : D.shifts()) {
          std::cout << ' ' << t;
        }
        std::cout << '\n';
      }
      if (all || orbits) {
        std::cout << "mu = " << to_cycle_string(diet_action(D)) << '\n';
        for (auto const& o : diet_orbits(D)) {
          std::cout << "orbit";
          for (auto k : o) {
            std::cout << ' ' << k;
          }
          std::cout << '\n';
        }
      }
      if (all || orbit_words_only) {
        auto W = orbit_words(D, A);
        std::cout << "words:";
        for (auto const& w : W.entries()) {
          std::cout << ' ' << w;
        }
        std::cout << "\nebwt: " << ebwt(W) << '\n';
      }
      if (!cyl.empty()) {
        std::cout << "I_" << cyl << " = {";
        bool first = true;
        for (auto k : diet_cylinder(D, cyl, A)) {
          std::cout << (first ? "" : ",") << k;
          first = false;
        }
        std::cout << "}\n";
      }
    } else if (check_cmd->parsed()) {
      auto T = parse_iet_file(file);
      print_iet(T);
      auto disc = discontinuities(T);
      std::cout << "D(T):";
      for (auto const& x : disc.of_map) {
        std::cout << ' ' << x.to_string();
      }
      std::cout << "\nD(T^-1):";
      for (auto const& x : disc.of_inverse) {
        std::cout << ' ' << x.to_string();
      }
      std::cout << '\n';
      auto v = check_keane(T, depth);
      if (v.regular()) {
        std::cout << "no connection of length < " << depth << '\n';
      } else {
        auto const& c = *v.failure;
        std::cout << "connection " << c.from.to_string() << " -> " << c.to.to_string() << " after "
                  << c.steps << " steps\n";
        status = 1;
      }
    } else if (traj_cmd->parsed()) {
      auto T = parse_iet_file(file);
      unsigned long d = 0;
      for (auto const& x : T.lengths()) {
        d = std::max(d, x.radicand());
      }
      std::cout << trajectory(T, QuadNum::parse(point, d), steps_n) << '\n';
    } else if (lang_cmd->parsed()) {
      auto T = parse_iet_file(file);
      std::map<std::size_t, std::vector<Word>> by_len;
      for (auto const& w : language(T, max_len)) {
        by_len[w.size()].push_back(w);
      }
      for (auto const& [n, ws] : by_len) {
        std::cout << n << " (" << ws.size() << "):";
        for (auto const& w : ws) {
          std::cout << ' ' << show(w);
        }
        std::cout << '\n';
      }
    } else if (rauzy_cmd->parsed()) {
      auto T = parse_iet_file(file);
      print_iet(T);
      if (steps_spec == "auto") {
        if (rauzy_cmd->count("--word") == 0) {
          throw Error("--steps auto needs --word");
        }
        auto opts        = InductionOptions{};
        auto dv          = default_verify_options();
        opts.cap         = dv.induction_cap;
        opts.keane_depth = dv.keane_depth;
        auto tr          = induce_to_cylinder(T, empty_word_alias(target_word), opts);
        for (std::size_t i = 0; i < tr.steps.size(); ++i) {
          print_step(i + 1, tr.steps[i], tr.stages[i + 1]);
        }
        std::cout << "theta = " << tr.theta.to_string() << '\n';
      } else {
        auto cur = T;
        for (std::size_t i = 0; i < steps_spec.size(); ++i) {
          auto c = steps_spec[i];
          if (c != 'r' && c != 'l') {
            throw Error("steps are written with r and l");
          }
          auto step = rauzy_step(cur, c == 'r' ? StepKind::right : StepKind::left);
          print_step(i + 1, step.record, step.result);
          cur = step.result;
        }
      }
    } else if (ret_cmd->parsed()) {
      auto T = parse_iet_file(file);
      auto w = empty_word_alias(target_word);
      auto print_set = [](std::string const& label, std::set<Word> const& s) {
        std::cout << label << " {";
        bool first = true;
        for (auto const& u : s) {
          std::cout << (first ? "" : ", ") << u;
          first = false;
        }
        std::cout << "}\n";
      };
      std::optional<std::set<Word>> a, b;
      if (method != "scan") {
        auto opts        = InductionOptions{};
        auto dv          = default_verify_options();
        opts.cap         = dv.induction_cap;
        opts.keane_depth = dv.keane_depth;
        auto tr          = induce_to_cylinder(T, w, opts);
        if (trace) {
          for (std::size_t i = 0; i < tr.steps.size(); ++i) {
            std::cout << "theta_" << i + 1 << " = " << step_morphism(tr.steps[i]).to_string() << "  ("
                      << (tr.steps[i].kind == StepKind::right ? "rho" : "lambda") << ")\n";
          }
          std::cout << "theta = " << tr.theta.to_string() << '\n';
        }
        a = std::set<Word>();
        for (Letter x : tr.theta.source().letters()) {
          a->insert(tr.theta.image(x));
        }
        print_set("induction:", *a);
      }
      if (method != "induction") {
        if (w.empty()) {
          throw Error("scan needs a nonempty word");
        }
        auto scan = return_words_scan(T, w);
        b         = scan.words;
        print_set("scan:", *b);
        if (!scan.complete) {
          std::cout << "scan incomplete after " << scan.scanned << " letters\n";
          status = 1;
        }
      }
      if (a && b) {
        std::cout << (*a == *b ? "methods agree" : "methods DISAGREE") << '\n';
        status = *a == *b ? status : 1;
      }
    } else if (apply_cmd->parsed()) {
      auto f = Morphism::parse(spec);
      std::cout << f(word) << '\n';
    } else if (ext_cmd->parsed()) {
      auto v = empty_word_alias(target_word);
      if (ext_cmd->count("--max-len") == 0) {
        max_len = v.size() + 2;
      }
      auto src             = make_source(source, max_len, alphabet);
      auto [left, right]   = resolve_orders(orders, src, pi);
      auto g               = extension_graph(src.sample, v);
      std::cout << "G(" << show(v) << "): L = " << g.left << ", R = " << g.right
                << ", B = " << edge_list(g) << '\n';
      std::cout << (is_tree(g) ? "tree" : is_forest(g) ? "forest, not tree" : "not a forest") << ", "
                << (is_compatible(g, left, right) ? "compatible" : "not compatible") << " with "
                << left.letters() << " / " << right.letters() << '\n';
      if (art) {
        std::cout << render(g, left, right);
      }
    } else if (class_cmd->parsed()) {
      auto src           = make_source(source, class_depth + 2, alphabet);
      auto [left, right] = resolve_orders(orders, src, pi);
      auto c             = classify(src.sample, left, right, class_depth);
      auto flag          = [](bool b) { return b ? "yes" : "no"; };
      std::cout << "orders " << left.letters() << " / " << right.letters()
                << ", words of length <= " << class_depth << " (bounded-depth verdicts)\n";
      std::cout << "dendric:         " << flag(c.dendric)
                << (c.not_tree ? "  (witness " + show(*c.not_tree) + ")" : "") << '\n';
      std::cout << "alsinic:         " << flag(c.alsinic)
                << (c.not_forest ? "  (witness " + show(*c.not_forest) + ")" : "") << '\n';
      std::cout << "ordered dendric: " << flag(c.ordered_dendric) << '\n';
      std::cout << "ordered alsinic: " << flag(c.ordered_alsinic)
                << (c.incompatible ? "  (incompatible at " + show(*c.incompatible) + ")" : "") << '\n';
      if (source.rfind("multiset:", 0) == 0) {
        std::cout << "bispecial-only compatibility: "
                  << flag(bispecial_compatible(src.sample, left, right, class_depth))
                  << " (multiset form is conjectural)\n";
      }
    } else if (verify_cmd->parsed()) {
      auto T = parse_iet_file(file);
      auto r = verify_main_theorem(T, vopts);
      std::cout << emit_report(r, as_json ? ReportFormat::json : ReportFormat::text);
      status = r.ok() ? 0 : 1;
    }
  } catch (KeaneFailure const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
