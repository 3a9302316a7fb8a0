#include "cli.hpp"

#include <fstream>
#include <numeric>
#include <optional>

#include "CLI11.hpp"

#include "swc/catalog.hpp"
#include "swc/errors.hpp"
#include "swc/json_io.hpp"
#include "swc/subword.hpp"
#include "swc/transforms.hpp"
#include "swc/words.hpp"

namespace swc::cli {

  namespace {
    using json_io::json;

    struct SpecInput {
      std::string  system;
      std::string  word;
      std::string  rho;
      std::string  json_path;
      CLI::Option* system_opt = nullptr;
      CLI::Option* word_opt   = nullptr;
      CLI::Option* rho_opt    = nullptr;
      CLI::Option* json_opt   = nullptr;
    };

    void add_spec_options(CLI::App* sub, SpecInput& in) {
      in.system_opt = sub->add_option("--system", in.system, "Coxeter type, e.g. A2, B3, I2(5)");
      in.word_opt   = sub->add_option("--word", in.word, "word Q as comma-separated letters");
      in.rho_opt    = sub->add_option("--rho", in.rho,
                                      "any word for rho (default: the longest element)");
      in.json_opt   = sub->add_option("--json", in.json_path,
                                      "spec file {\"system\", \"word\", \"rho_word\"}");
    }

    json_io::ParsedSpec resolve_spec(SpecInput const& in) {
      if (in.json_opt->count() > 0) {
        if (in.system_opt->count() + in.word_opt->count() + in.rho_opt->count() > 0) {
          throw InputError("give either --json or --system/--word/--rho, not both");
        }
        return json_io::spec_from_json(json_io::read_file(in.json_path));
      }
      if (in.system_opt->count() == 0 || in.word_opt->count() == 0) {
        throw InputError("--system and --word are required (or --json)");
      }
      auto       sys = CoxeterSystem::parse(in.system);
      Word const q   = parse_word(in.word);
      sys.check_word(q);
      GroupElement rho = sys.longest_element();
      if (in.rho_opt->count() > 0) {
        Word const r = parse_word(in.rho);
        sys.check_word(r);
        rho = sys.element_of_word(r);
      }
      return {std::move(sys), SubwordSpec(q, rho)};
    }

    void write_text(std::string const& path, std::string const& text) {
      std::ofstream file(path, std::ios::binary);
      if (!file) {
        throw InputError("cannot write " + path);
      }
      file << text;
      if (!file) {
        throw InputError("failed writing " + path);
      }
    }

    void emit(json const& j, std::string const& path, std::ostream& out) {
      auto const text = json_io::canonical_dump(j);
      if (path.empty()) {
        out << text;
      } else {
        write_text(path, text);
      }
    }

    int cmd_demazure(SpecInput const& in, std::ostream& out) {
      std::optional<CoxeterSystem> sys;
      Word                         q;
      if (in.json_opt->count() > 0) {
        if (in.system_opt->count() + in.word_opt->count() > 0) {
          throw InputError("give either --json or --system/--word, not both");
        }
        auto parsed = json_io::word_from_json(json_io::read_file(in.json_path));
        sys.emplace(std::move(parsed.first));
        q = std::move(parsed.second);
      } else {
        if (in.system_opt->count() == 0 || in.word_opt->count() == 0) {
          throw InputError("--system and --word are required (or --json)");
        }
        sys.emplace(CoxeterSystem::parse(in.system));
        q = parse_word(in.word);
        sys->check_word(q);
      }
      out << word_to_string(sys->reduced_word(demazure_product(*sys, q))) << "\n";
      return kSuccess;
    }

    int cmd_complex(SpecInput const& in, std::string const& out_path, std::ostream& out) {
      auto const [sys, spec] = resolve_spec(in);
      auto const X           = subword_complex(sys, spec);
      json const j{{"spec", json_io::to_json(sys, spec)},
                   {"complex", json_io::to_json(X)},
                   {"f_vector", json_io::to_json(f_vector(X))},
                   {"facet_count", X.num_facets()},
                   {"spherical", is_spherical(sys, spec)}};
      emit(j, out_path, out);
      return kSuccess;
    }

    struct NilArgs {
      std::size_t  pos    = 0;
      std::size_t  maxlen = 0;
      unsigned     jobs   = 1;
      std::size_t  budget = NilSweepOptions{}.case_budget;
      bool         exhaustive = false;
      std::string  out_path;
      CLI::Option* pos_opt    = nullptr;
      CLI::Option* maxlen_opt = nullptr;
    };

    int cmd_verify_nil(SpecInput const& in, NilArgs const& a, std::ostream& out) {
      if (a.maxlen_opt->count() > 0) {
        if (in.word_opt->count() + in.rho_opt->count() + in.json_opt->count()
                + a.pos_opt->count()
            > 0) {
          throw InputError("a sweep takes only --system, --maxlen, --jobs and --budget");
        }
        if (in.system_opt->count() == 0) {
          throw InputError("--system is required");
        }
        auto const sys = CoxeterSystem::parse(in.system);
        auto const s   = sweep_nil_theorem(sys, {.max_length    = a.maxlen,
                                                 .jobs          = std::max(1u, a.jobs),
                                                 .case_budget   = a.budget,
                                                 .keep_failures = 20});
        emit(json_io::to_json(s), a.out_path, out);
        return s.passed == s.cases ? kSuccess : kVerificationFailed;
      }
      if (a.exhaustive) {
        throw InputError("--exhaustive needs --maxlen");
      }
      if (a.pos_opt->count() == 0) {
        throw InputError("give --pos for a single case or --maxlen for a sweep");
      }
      auto const [sys, spec] = resolve_spec(in);
      auto const r           = verify_nil_theorem(sys, spec.word, spec.rho, a.pos);
      emit(json_io::to_json(r), a.out_path, out);
      return r.passed() ? kSuccess : kVerificationFailed;
    }

    int cmd_dual(SpecInput const& in, std::size_t pos, std::string const& out_path,
                 std::ostream& out) {
      auto const [sys, spec] = resolve_spec(in);
      auto const r           = dual_statement_check(sys, spec.word, spec.rho, pos);
      emit(json_io::to_json(r), out_path, out);
      return r.passed() ? kSuccess : kVerificationFailed;
    }

    struct PipelineArgs {
      std::string   mode = "verified";
      std::string   script_in;
      std::string   script_out;
      std::string   out_path;
      std::uint64_t seed   = 0;
      std::size_t   budget = HeckeReduceOptions{}.budget;
      CLI::Option*  script_opt = nullptr;
    };

    int cmd_pipeline(SpecInput const& in, PipelineArgs const& a, std::ostream& out) {
      auto const mode = a.mode == "fast" ? PipelineMode::fast : PipelineMode::verified;
      std::optional<CoxeterSystem>   sys;
      std::optional<TransformScript> script;
      if (a.script_opt->count() > 0) {
        if (in.system_opt->count() + in.word_opt->count() + in.rho_opt->count()
                + in.json_opt->count()
            > 0) {
          throw InputError("give either --script or a spec, not both");
        }
        auto parsed = json_io::script_from_json(json_io::read_file(a.script_in));
        sys.emplace(std::move(parsed.sys));
        script.emplace(std::move(parsed.script));
      } else {
        auto parsed = resolve_spec(in);
        sys.emplace(std::move(parsed.sys));
        script.emplace(build_pipeline(*sys, parsed.spec.word, parsed.spec.rho,
                                      {.budget = a.budget, .seed = a.seed}));
      }
      auto const script_json = json_io::to_json(*sys, *script);
      if (!a.script_out.empty()) {
        write_text(a.script_out, json_io::canonical_dump(script_json));
      }
      auto const result = run_pipeline(*sys, *script, mode);
      json const j{{"system", sys->descriptor()},
                   {"mode", a.mode},
                   {"script", script_json},
                   {"result", json_io::to_json(result)}};
      emit(j, a.out_path, out);
      return result.passed() ? kSuccess : kVerificationFailed;
    }

    struct CatalogArgs {
      std::string  family;
      std::string  system;
      std::string  c;
      std::size_t  k = 1;
      std::string  dir;
      CLI::Option* c_opt   = nullptr;
      CLI::Option* k_opt   = nullptr;
      CLI::Option* dir_opt = nullptr;
    };

    int cmd_catalog(CatalogArgs const& a, std::ostream& out) {
      auto const sys = CoxeterSystem::parse(a.system);
      Word       c(sys.rank());
      std::iota(c.begin(), c.end(), 1);
      if (a.c_opt->count() > 0) {
        c = parse_word(a.c);
      }
      std::optional<SubwordSpec> spec;
      if (a.family == "cluster") {
        if (a.k_opt->count() > 0 && a.k != 1) {
          throw InputError("--k applies to the multicluster family only");
        }
        spec.emplace(cluster_spec(sys, c));
      } else {
        spec.emplace(multicluster_spec(sys, c, a.k));
      }
      auto const entry = make_catalog_entry(sys, *spec, a.family, a.family == "cluster" ? 1 : a.k);
      auto const dir   = a.dir_opt->count() > 0 ? a.dir : default_catalog_dir();
      out << write_catalog_entry(entry, dir) << "\n";
      return kSuccess;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Subword complexes of finite Coxeter groups and the letter-doubling "
                 "transformation.",
                 "swc"};
    app.require_subcommand(1, 1);

    SpecInput demazure_in;
    auto*     demazure = app.add_subcommand("demazure", "print the Demazure product as its "
                                                        "lex-first reduced word");
    demazure_in.system_opt = demazure->add_option("--system", demazure_in.system, "Coxeter type");
    demazure_in.word_opt   = demazure->add_option("--word", demazure_in.word, "comma-separated letters");
    demazure_in.json_opt   = demazure->add_option("--json", demazure_in.json_path,
                                                  "word file {\"system\", \"letters\"}");

    SpecInput   complex_in;
    std::string complex_out;
    auto*       complex = app.add_subcommand("complex", "build the subword complex");
    add_spec_options(complex, complex_in);
    complex->add_option("--out", complex_out, "write JSON here instead of stdout");

    SpecInput nil_in;
    NilArgs   nil;
    auto*     verify = app.add_subcommand("verify-nil",
                                          "check the letter-doubling statement on one case or a sweep");
    add_spec_options(verify, nil_in);
    nil.pos_opt    = verify->add_option("--pos", nil.pos, "doubled position (1-based)");
    nil.maxlen_opt = verify->add_option("--maxlen", nil.maxlen,
                                        "sweep every word up to this length, every rho, every "
                                        "position");
    verify->add_flag("--exhaustive", nil.exhaustive, "sweep mode (requires --maxlen)");
    verify->add_option("--jobs", nil.jobs, "worker threads for a sweep")->check(CLI::PositiveNumber);
    verify->add_option("--budget", nil.budget, "maximum number of sweep cases");
    verify->add_option("--out", nil.out_path, "write JSON here instead of stdout");

    SpecInput   dual_in;
    std::size_t dual_pos = 0;
    std::string dual_out;
    auto*       dual = app.add_subcommand("dual", "read a doubling in the dual polytope language");
    add_spec_options(dual, dual_in);
    dual->add_option("--pos", dual_pos, "doubled position (1-based)")->required();
    dual->add_option("--out", dual_out, "write JSON here instead of stdout");

    SpecInput    pipe_in;
    PipelineArgs pipe;
    auto*        pipeline = app.add_subcommand(
        "pipeline", "rebuild the complex from the empty complex by doublings and braid moves");
    add_spec_options(pipeline, pipe_in);
    pipeline->add_option("--mode", pipe.mode, "verified or fast")
        ->check(CLI::IsMember({"verified", "fast"}));
    pipe.script_opt = pipeline->add_option("--script", pipe.script_in,
                                           "replay this script instead of building one");
    pipeline->add_option("--script-out", pipe.script_out, "write the script JSON here");
    pipeline->add_option("--seed", pipe.seed, "tie-breaking seed for the braid search");
    pipeline->add_option("--budget", pipe.budget, "maximum words visited by the braid search");
    pipeline->add_option("--out", pipe.out_path, "write JSON here instead of stdout");

    CatalogArgs cat;
    auto*       catalog = app.add_subcommand(
        "catalog", "write a catalog entry named by its content hash; prints the path");
    catalog->add_option("--family", cat.family, "cluster or multicluster")
        ->required()
        ->check(CLI::IsMember({"cluster", "multicluster"}));
    catalog->add_option("--system", cat.system, "Coxeter type")->required();
    cat.c_opt   = catalog->add_option("--c", cat.c, "Coxeter element word (default 1,2,...,n)");
    cat.k_opt   = catalog->add_option("--k", cat.k, "multicluster parameter")->check(CLI::PositiveNumber);
    cat.dir_opt = catalog->add_option("--dir", cat.dir,
                                      "catalog directory (default $SWC_CATALOG_DIR or ./catalog)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kSuccess : kBadInput;
    }

    try {
      if (*demazure) {
        return cmd_demazure(demazure_in, out);
      }
      if (*complex) {
        return cmd_complex(complex_in, complex_out, out);
      }
      if (*verify) {
        return cmd_verify_nil(nil_in, nil, out);
      }
      if (*dual) {
        return cmd_dual(dual_in, dual_pos, dual_out, out);
      }
      if (*pipeline) {
        return cmd_pipeline(pipe_in, pipe, out);
      }
      if (*catalog) {
        return cmd_catalog(cat, out);
      }
    } catch (InputError const& e) {
      err << "error: " << e.what() << "\n";
      return kBadInput;
    } catch (ResourceError const& e) {
      err << "resource limit: " << e.what() << "\n";
      return kBadInput;
    }
    return kBadInput;
  }

}  // namespace swc::cli
