#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "monoperad/axioms.hpp"
#include "monoperad/bijections.hpp"
#include "monoperad/closure.hpp"
#include "monoperad/families.hpp"
#include "monoperad/presentation.hpp"
#include "monoperad/presets.hpp"

namespace monoperad::cli {

  namespace {

    struct UsageError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    struct Options {
      std::string                operad;
      std::string                monoid;
      std::string                generators;
      std::string                relations;
      bool                       symmetric = false;
      std::optional<std::size_t> max_arity;
      std::string                out;
      bool                       json       = false;
      Letter                     letter_cap = 3;
      std::string                kind;
    };

    struct Report {
      std::string                                      command;
      std::vector<std::string>                         headers;
      std::vector<std::vector<std::string>>            rows;
      std::vector<std::pair<std::string, std::string>> facts;
      std::vector<std::string>                         notes;
      bool                                             passed = true;
      std::optional<std::string>                       counterexample;
      double                                           wall_seconds = 0;

      void fail(std::string witness) {
        if (passed) {
          counterexample = std::move(witness);
        }
        passed = false;
      }
    };

    template <class Seq>
    std::string join(Seq const& values, std::string const& sep = ",") {
      std::ostringstream os;
      bool               first = true;
      for (auto const& v : values) {
        if (!first) {
          os << sep;
        }
        os << v;
        first = false;
      }
      return os.str();
    }

    std::size_t arity_or(Options const& o, std::size_t fallback) {
      std::size_t n = o.max_arity.value_or(fallback);
      if (n < 1) {
        throw UsageError("--max-arity must be at least 1");
      }
      return n;
    }

    ////////////////////////////////////////////////////////////////////
    // Output
    ////////////////////////////////////////////////////////////////////

    void print_text(Report const& r, std::ostream& out) {
      out << "command: " << r.command << '\n';
      if (!r.headers.empty()) {
        std::vector<std::size_t> width(r.headers.size());
        for (std::size_t c = 0; c < r.headers.size(); ++c) {
          width[c] = r.headers[c].size();
          for (auto const& row : r.rows) {
            width[c] = std::max(width[c], row[c].size());
          }
        }
        auto line = [&](std::vector<std::string> const& cells) {
          std::string text;
          for (std::size_t c = 0; c < cells.size(); ++c) {
            std::string cell = cells[c];
            if (c + 1 < cells.size()) {
              cell.resize(width[c] + 2, ' ');
            }
            text += cell;
          }
          out << "  " << text << '\n';
        };
        line(r.headers);
        for (auto const& row : r.rows) {
          line(row);
        }
      }
      std::size_t key_width = 0;
      for (auto const& [k, v] : r.facts) {
        key_width = std::max(key_width, k.size());
      }
      for (auto const& [k, v] : r.facts) {
        out << std::left << std::setw(static_cast<int>(key_width + 2))
            << (k + ":") << v << '\n';
      }
      for (auto const& n : r.notes) {
        out << "note: " << n << '\n';
      }
      if (r.counterexample) {
        out << "counterexample: " << *r.counterexample << '\n';
      }
      out << "result: " << (r.passed ? "pass" : "FAIL") << '\n';
      out << "wall time: " << std::fixed << std::setprecision(3)
          << r.wall_seconds << " s\n";
      out.unsetf(std::ios_base::floatfield);
    }

    void print_json(Report const& r, std::ostream& out) {
      nlohmann::ordered_json j;
      j["command"] = r.command;
      j["rows"]    = nlohmann::ordered_json::array();
      for (auto const& row : r.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < r.headers.size(); ++c) {
          obj[r.headers[c]] = row[c];
        }
        j["rows"].push_back(obj);
      }
      nlohmann::ordered_json facts = nlohmann::ordered_json::object();
      for (auto const& [k, v] : r.facts) {
        facts[k] = v;
      }
      j["facts"]  = facts;
      j["notes"]  = r.notes;
      j["result"] = r.passed ? "pass" : "fail";
      j["counterexample"]
          = r.counterexample ? nlohmann::ordered_json(*r.counterexample)
                             : nlohmann::ordered_json(nullptr);
      j["wall_time_s"] = r.wall_seconds;
      out << j.dump(2) << '\n';
    }

    ////////////////////////////////////////////////////////////////////
    // Targets
    ////////////////////////////////////////////////////////////////////

    struct Target {
      std::string                 name;
      GeneratorSet                generators;
      std::optional<OperadPreset> preset;
    };

    OperadPreset require_preset(Options const& o) {
      if (o.operad.empty()) {
        throw UsageError("--operad is required");
      }
      try {
        return operad_preset(o.operad);
      } catch (std::invalid_argument const& e) {
        throw UsageError(e.what());
      }
    }

    Target resolve(Options const& o) {
      if (!o.operad.empty()) {
        if (!o.generators.empty()) {
          throw UsageError("give either --operad or --generators, not both");
        }
        OperadPreset p = require_preset(o);
        return {p.name, p.generator_set(), p};
      }
      if (o.generators.empty()) {
        throw UsageError("--operad or --generators is required");
      }
      Monoid m = Monoid::parse(o.monoid.empty() ? "N" : o.monoid);
      return {"custom", {m, parse_generators(m, o.generators), o.symmetric},
              std::nullopt};
    }

    void require_generated(Target const& t) {
      if (t.preset && !t.preset->finitely_generated()) {
        throw UsageError("operad " + t.name + " is not finitely generated");
      }
    }

    void dimension_rows(Report& r, std::vector<std::size_t> const& dims) {
      r.headers = {"arity", "dimension"};
      for (std::size_t n = 1; n <= dims.size(); ++n) {
        r.rows.push_back({std::to_string(n), std::to_string(dims[n - 1])});
      }
      r.facts.emplace_back("dimensions", join(dims));
    }

    ////////////////////////////////////////////////////////////////////
    // gen, dims
    ////////////////////////////////////////////////////////////////////

    void cmd_gen(Options const& o, Report& r) {
      Target const t = resolve(o);
      require_generated(t);
      std::size_t const  n = arity_or(o, 6);
      GradedFamily const f = generate_closure(t.generators, n);
      r.facts.emplace_back("operad", t.name);
      r.facts.emplace_back("monoid", f.monoid().name());
      dimension_rows(r, dimension_sequence(f));
      if (!o.out.empty()) {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) {
          throw UsageError("cannot write " + o.out);
        }
        write_jsonl(f, file);
        if (!file.flush()) {
          throw UsageError("cannot write " + o.out);
        }
        r.facts.emplace_back("written", o.out + " (" + std::to_string(f.size())
                                            + " records)");
      }
    }

    void cmd_dims(Options const& o, Report& r) {
      Target const      t = resolve(o);
      std::size_t const n = arity_or(o, 5);
      std::vector<std::size_t> dims;
      if (t.preset && !t.preset->finitely_generated()) {
        dims = predicate_dimensions(membership_predicate(t.preset->family), n);
        r.facts.emplace_back("method", "predicate enumeration");
      } else {
        dims = dimension_sequence(generate_closure(t.generators, n));
        r.facts.emplace_back("method", "closure");
      }
      r.facts.emplace_back("operad", t.name);
      dimension_rows(r, dims);
      if (!t.preset || !t.preset->table_row) {
        return;
      }
      auto const& table = *t.preset->table_row;
      auto first_mismatch = [&](std::vector<std::uint64_t> const& ref) {
        for (std::size_t k = 0; k < std::min(ref.size(), dims.size()); ++k) {
          if (ref[k] != dims[k]) {
            return std::optional<std::size_t>(k + 1);
          }
        }
        return std::optional<std::size_t>();
      };
      if (t.preset->table_row_suspect) {
        auto const& formula = *t.preset->corrected_row;
        auto const counted = predicate_dimensions(
            membership_predicate(t.preset->family), dims.size());
        r.facts.emplace_back("predicate count", join(counted));
        r.facts.emplace_back("table row", join(table, ", ") + " (suspect)");
        if (counted != dims) {
          r.fail("closure and predicate counts differ");
        }
        if (auto k = first_mismatch(formula)) {
          r.fail("arity " + std::to_string(*k) + ": counted "
                 + std::to_string(dims[*k - 1]) + ", formula gives "
                 + std::to_string(formula[*k - 1]));
        }
        if (first_mismatch(table)) {
          r.notes.push_back("the count follows the formula, not the printed "
                            "table row \""
                            + join(table, ", ")
                            + "\"; the table row is a suspected misprint");
        }
        return;
      }
      if (auto k = first_mismatch(table)) {
        r.facts.emplace_back("table row", join(table, ", ") + " (mismatch)");
        r.fail("arity " + std::to_string(*k) + ": counted "
               + std::to_string(dims[*k - 1]) + ", table lists "
               + std::to_string(table[*k - 1]));
      } else {
        r.facts.emplace_back("table row", join(table, ", ") + " (match)");
      }
    }

    ////////////////////////////////////////////////////////////////////
    // check
    ////////////////////////////////////////////////////////////////////

    void check_axioms_cmd(Options const& o, Report& r) {
      if (o.monoid.empty()) {
        throw UsageError("check axioms needs --monoid");
      }
      Monoid const      m = Monoid::parse(o.monoid);
      std::size_t const n = arity_or(o, 3);
      r.facts.emplace_back("monoid", m.name());
      if (m.kind() == MonoidKind::additive_naturals) {
        r.facts.emplace_back("letter cap", std::to_string(o.letter_cap));
      }
      r.headers = {"axiom", "checks", "status"};
      for (auto const& rep : check_axioms(m, {n, n, n}, {}, o.letter_cap)) {
        r.rows.push_back({axiom_name(rep.axiom), std::to_string(rep.checks),
                          rep.passed() ? "pass" : "FAIL"});
        if (!rep.passed()) {
          r.fail(axiom_name(rep.axiom) + ": " + *rep.counterexample);
        }
      }
    }

    void check_characterization(Options const& o, Report& r) {
      Target const t = resolve(o);
      if (!t.preset) {
        throw UsageError("check characterization needs a preset --operad");
      }
      require_generated(t);
      std::size_t const   n    = arity_or(o, 6);
      GradedFamily const  f    = generate_closure(t.generators, n);
      MembershipPredicate pred = membership_predicate(t.preset->family);
      auto const          dims = dimension_sequence(f);
      auto const          pdim = predicate_dimensions(pred, n);
      r.facts.emplace_back("predicate", pred.name);
      r.headers = {"arity", "generated", "predicate"};
      for (std::size_t k = 1; k <= n; ++k) {
        r.rows.push_back({std::to_string(k), std::to_string(dims[k - 1]),
                          std::to_string(pdim[k - 1])});
      }
      PredicateVerdict const v = equals_predicate(f, pred);
      if (!v.equal()) {
        r.fail(v.describe());
      }
      if (t.preset->family.family == Family::da) {
        PredicateVerdict const c = equals_predicate(f, da_conjectured_predicate());
        r.facts.emplace_back("step-map prefix test",
                             c.equal() ? "agrees with the closure"
                                       : "differs: " + c.describe());
      }
    }

    std::optional<PresentationPreset> require_presentation(Options const& o) {
      auto p = presentation_preset(o.operad);
      if (!p) {
        throw UsageError("no relation preset for operad \"" + o.operad
                         + "\"; available: " + join(presentation_names(), ", "));
      }
      return p;
    }

    std::vector<Relation> load_relations(Options const&            o,
                                         PresentationPreset const& p) {
      if (o.relations.empty()) {
        return p.relations();
      }
      std::ifstream file(o.relations);
      if (!file) {
        throw UsageError("cannot read " + o.relations);
      }
      std::stringstream text;
      text << file.rdbuf();
      try {
        return parse_relations(p.signature, text.str());
      } catch (std::invalid_argument const& e) {
        throw UsageError(e.what());
      }
    }

    void check_relations(Options const& o, Report& r) {
      auto const p    = require_presentation(o);
      auto const rels = load_relations(o, *p);
      r.facts.emplace_back("relations", std::to_string(rels.size()));
      r.headers = {"relation", "left", "right", "status"};
      for (auto const& rel : rels) {
        Word const l  = eval_term(p->signature, rel.left());
        Word const rr = eval_term(p->signature, rel.right());
        r.rows.push_back({rel.to_string(p->signature), l.to_string(),
                          rr.to_string(), l == rr ? "holds" : "FAILS"});
        if (l != rr) {
          r.fail(rel.to_string(p->signature) + ": " + l.to_string()
                 + " != " + rr.to_string());
        }
      }
    }

    void check_presentation(Options const& o, Report& r) {
      auto const   p    = require_presentation(o);
      auto const   rels = load_relations(o, *p);
      std::size_t  n    = arity_or(o, 6);
      OperadPreset op   = operad_preset(p->name);
      GradedFamily f    = generate_closure(op.generator_set(), n);
      r.facts.emplace_back("relations", std::to_string(rels.size()));
      r.facts.emplace_back("claimed complete", p->complete ? "yes" : "no");
      r.headers = {"arity", "terms", "classes", "images", "dimension", "status"};
      std::vector<std::size_t> classes;
      std::optional<std::size_t> first_gap;
      for (std::size_t k = 1; k <= n; ++k) {
        CongruenceAnalysis const a   = analyze_congruence(p->signature, rels, k);
        std::size_t const        dim = f.at(k).size();
        classes.push_back(a.classes);
        std::string status = a.classes == dim ? "equal" : "gap";
        if (!a.sound) {
          status = "UNSOUND";
          r.fail("arity " + std::to_string(k)
                 + ": a congruence class evaluates to two words");
        } else if (a.images != dim) {
          status = "IMAGE";
          r.fail("arity " + std::to_string(k) + ": terms reach "
                 + std::to_string(a.images) + " words, the operad has "
                 + std::to_string(dim));
        } else if (a.classes != dim) {
          if (!first_gap) {
            first_gap = k;
          }
          if (p->complete) {
            r.fail("arity " + std::to_string(k) + ": "
                   + std::to_string(a.classes) + " classes, dimension "
                   + std::to_string(dim));
          }
        }
        r.rows.push_back({std::to_string(k), std::to_string(a.terms),
                          std::to_string(a.classes), std::to_string(a.images),
                          std::to_string(dim), status});
      }
      r.facts.emplace_back("classes", join(classes));
      r.facts.emplace_back("dimensions", join(dimension_sequence(f)));
      if (!p->complete) {
        r.notes.push_back(
            first_gap ? "the relations leave more classes than elements from "
                        "arity "
                            + std::to_string(*first_gap)
                      : "class counts equal the dimensions at every tested "
                        "arity");
      }
    }

    void check_bijections(Options const& o, Report& r) {
      OperadPreset const p      = require_preset(o);
      Family const       family = p.family.family;
      bool const         supported
          = family == Family::prt || family == Family::fcat
            || family == Family::schr || family == Family::motz
            || family == Family::comp;
      if (!supported) {
        throw UsageError("no bijection for operad " + p.name
                         + "; available: prt, fcat<k>, schr, motz, comp");
      }
      std::size_t const  n = arity_or(o, family == Family::schr ? 6 : 7);
      GradedFamily const f = generate_closure(p.generator_set(), n);
      r.headers = {"arity", "elements", "round trips"};
      for (std::size_t k = 1; k <= n; ++k) {
        std::size_t ok = 0;
        for (Word const& x : f.at(k)) {
          bool good = false;
          switch (family) {
            case Family::prt: {
              PlanarTree t = word_to_tree(x);
              good = tree_to_word(t) == x && t.node_count() == k
                     && PlanarTree::parse(t.to_string()) == t;
              break;
            }
            case Family::fcat: {
              LatticePath path = word_to_kdyck(x, p.family.k);
              good = kdyck_to_word(path, p.family.k) == x
                     && LatticePath::parse(path.to_string()) == path;
              break;
            }
            case Family::schr: {
              PlanarTree t = word_to_schroeder(x);
              good = is_schroeder_tree(t) && t.leaf_count() == k + 1
                     && schroeder_to_word(t) == x;
              break;
            }
            case Family::motz: {
              LatticePath path = word_to_motzkin(x);
              good = is_motzkin_path(path) && motzkin_to_word(path) == x;
              break;
            }
            default: {
              Composition c = word_to_composition(x);
              good = c.size() == k && composition_to_word(c) == x
                     && Composition::parse(c.to_string()) == c;
              break;
            }
          }
          if (good) {
            ++ok;
          } else {
            r.fail("round trip fails on " + x.to_string());
          }
        }
        r.rows.push_back({std::to_string(k), std::to_string(f.at(k).size()),
                          std::to_string(ok)});
      }

      if (family != Family::prt && family != Family::comp) {
        return;
      }
      std::size_t const bound  = std::min<std::size_t>(n, 5);
      std::uint64_t     checks = 0;
      for (std::size_t a = 1; a <= bound; ++a) {
        for (std::size_t b = 1; b <= bound; ++b) {
          for (Word const& x : f.at(a)) {
            for (Word const& y : f.at(b)) {
              for (std::size_t i = 1; i <= a; ++i) {
                Word const w = substitute(x, i, y);
                bool       good;
                if (family == Family::prt) {
                  good = prt_graft(word_to_tree(x), i, word_to_tree(y))
                         == word_to_tree(w);
                } else {
                  good
                      = ribbon_substitute(word_to_composition(x), i,
                                          word_to_composition(y))
                        == word_to_composition(w);
                }
                ++checks;
                if (!good) {
                  r.fail(x.to_string() + " o_" + std::to_string(i) + " "
                         + y.to_string() + " = " + w.to_string()
                         + " disagrees with the object-level rule");
                }
              }
            }
          }
        }
      }
      r.facts.emplace_back(
          family == Family::prt ? "graft checks" : "ribbon checks",
          std::to_string(checks) + " (operand arities <= "
              + std::to_string(bound) + ")");
    }

    void check_functor(Options const& o, Report& r) {
      std::size_t const n = arity_or(o, 5);
      struct Arrow {
        std::string source;
        std::string target;
        unsigned    modulus;
      };
      std::vector<Arrow> const arrows{
          {"fcat1", "comp", 2}, {"fcat2", "scomp", 3}, {"fcat1", "da", 3}};
      r.headers = {"arrow", "image", "target", "status"};
      for (auto const& a : arrows) {
        OperadPreset const src = operad_preset(a.source);
        OperadPreset const dst = operad_preset(a.target);
        GradedFamily const image
            = quotient_image(generate_closure(src.generator_set(), n),
                             MonoidMorphism::reduce_mod(src.monoid, a.modulus));
        GradedFamily const target = generate_closure(dst.generator_set(), n);
        bool const         same   = image == target;
        r.rows.push_back({a.source + " -> " + a.target + " (mod "
                              + std::to_string(a.modulus) + ")",
                          join(dimension_sequence(image)),
                          join(dimension_sequence(target)),
                          same ? "equal" : "DIFFER"});
        if (!same) {
          for (std::size_t k = 1; k <= n && r.passed; ++k) {
            for (Word const& w : image.at(k)) {
              if (!target.contains(w)) {
                r.fail(a.source + " -> " + a.target + ": " + w.to_string()
                       + " is in the image but not in the target");
                break;
              }
            }
            for (Word const& w : target.at(k)) {
              if (r.passed && !image.contains(w)) {
                r.fail(a.source + " -> " + a.target + ": " + w.to_string()
                       + " is in the target but not in the image");
                break;
              }
            }
          }
        }
      }

      // Letterwise maps commute with substitution and the action.
      std::vector<MonoidMorphism> const maps{
          MonoidMorphism::reduce_mod(Monoid::naturals(), 2),
          MonoidMorphism::reduce_mod(Monoid::naturals(), 3),
          MonoidMorphism::reduce_mod(Monoid::cyclic(6), 3),
          MonoidMorphism::compose(
              MonoidMorphism::reduce_mod(Monoid::cyclic(6), 2),
              MonoidMorphism::reduce_mod(Monoid::naturals(), 6))};
      std::uint64_t checks = 0;
      for (auto const& theta : maps) {
        auto const words = all_words(theta.source(), 3, o.letter_cap);
        for (Word const& x : words) {
          Word const tx = lift_morphism(theta, x);
          for (Word const& y : words) {
            Word const ty = lift_morphism(theta, y);
            for (std::size_t i = 1; i <= x.arity(); ++i) {
              ++checks;
              if (lift_morphism(theta, substitute(x, i, y))
                  != substitute(tx, i, ty)) {
                r.fail(theta.name() + " does not commute with " + x.to_string()
                       + " o_" + std::to_string(i) + " " + y.to_string());
              }
            }
          }
          Permutation sigma = Permutation::identity(x.arity());
          do {
            ++checks;
            if (lift_morphism(theta, act(x, sigma)) != act(tx, sigma)) {
              r.fail(theta.name() + " does not commute with " + x.to_string()
                     + " . " + sigma.to_string());
            }
          } while (sigma.next());
        }
      }
      r.facts.emplace_back("letterwise map checks", std::to_string(checks));
    }

    void cmd_check(Options const& o, Report& r) {
      if (o.kind == "axioms") {
        check_axioms_cmd(o, r);
      } else if (o.kind == "characterization") {
        check_characterization(o, r);
      } else if (o.kind == "relations") {
        check_relations(o, r);
      } else if (o.kind == "presentation") {
        check_presentation(o, r);
      } else if (o.kind == "bijections") {
        check_bijections(o, r);
      } else {
        check_functor(o, r);
      }
    }

    void add_common(CLI::App& app, Options& o) {
      app.add_option("--operad", o.operad,
                     "Preset: " + join(preset_names(), ", "));
      app.add_option("--monoid", o.monoid, "N, N<l> or B01");
      app.add_option("--generators", o.generators, "Comma-separated words");
      app.add_flag("--symmetric", o.symmetric,
                   "Close under the symmetric group action");
      app.add_option("--max-arity", o.max_arity, "Largest arity considered");
      app.add_flag("--json", o.json, "Print the report as JSON");
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Suboperads of the word operad T M", "operad"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "Generate a suboperad, export JSONL");
    add_common(*gen, o);
    gen->add_option("--out", o.out, "JSONL output path");

    auto* dims = app.add_subcommand("dims", "Print first dimensions");
    add_common(*dims, o);

    auto* check = app.add_subcommand("check", "Run a verification");
    add_common(*check, o);
    check
        ->add_option("kind", o.kind,
                     "axioms, characterization, relations, presentation, "
                     "bijections or functor")
        ->required()
        ->check(CLI::IsMember({"axioms", "characterization", "relations",
                               "presentation", "bijections", "functor"}));
    check->add_option("--relations", o.relations,
                      "Relation file, one 'left == right' per line");
    check->add_option("--letter-cap", o.letter_cap,
                      "Largest letter of N enumerated by axioms and functor");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      app.exit(e, out, err);
      return pass;
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return usage;
    }

    Report r;
    r.command = "operad " + join(args, " ");
    auto const start = std::chrono::steady_clock::now();
    try {
      if (gen->parsed()) {
        cmd_gen(o, r);
      } else if (dims->parsed()) {
        cmd_dims(o, r);
      } else {
        cmd_check(o, r);
      }
    } catch (UsageError const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    } catch (std::logic_error const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }
    r.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (o.json) {
      print_json(r, out);
    } else {
      print_text(r, out);
    }
    return r.passed ? pass : counterexample;
  }

}  // namespace monoperad::cli
