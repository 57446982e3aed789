// frev: command-line front end. Results go to stdout (or --out) as JSON.
// Exit codes: 0 success or positive verdict, 1 negative verdict, 2 error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "frev/factorization.hpp"
#include "frev/json_io.hpp"
#include "frev/normalization.hpp"
#include "frev/reversibility.hpp"
#include "frev/sampling.hpp"

using namespace frev;

namespace {

struct Config {
  int field_m = 4;
  int trunc_t = 8;
  std::string lambda = "2";
  std::uint64_t seed = 1;
  std::string out;
};

struct Outcome {
  json body;
  int code = 0;
};

void emit(const Config& cfg, const json& body) {
  const std::string text = dump(body);
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) fail(ErrorKind::Parse, "cannot write " + cfg.out);
  f << text;
}

json error_json(std::string_view kind, const std::string& message) {
  return {{"error", std::string(kind)}, {"message", message}};
}

Outcome cmd_build(const Config& cfg, const std::string& kind, int k, int sigma, int conjugate) {
  const FieldSpec field = FieldSpec::make(cfg.field_m);
  const Scalar lam = parse_scalar(field, cfg.lambda);
  Map2 f;
  if (kind == "polynomial") {
    f = rv_polynomial_rep(k, lam, cfg.trunc_t);
  } else if (kind == "moser") {
    f = ce_embed(moser_form_ce(sigma, lam, Series1::identity(field, cfg.trunc_t)));
  } else {
    NormalFormTag tag;
    tag.kind = parse_kind(kind);
    tag.k = k;
    tag.lambda = lam;
    f = rv_make_normal_form(tag, cfg.trunc_t);
  }
  if (conjugate > 0) {
    Sampler s(cfg.seed);
    const auto sh = s.shears(field, f.trunc(), conjugate);
    f = compose(sh.inverse, compose(f, sh.map));
  }
  return {to_json(f), 0};
}

Outcome cmd_verify(const std::string& map_path, const std::string& rev_path) {
  const Certificate c = rv_verify_reverser(map2_from_json(read_json_file(map_path)),
                                           map2_from_json(read_json_file(rev_path)));
  return {to_json(c), c.verdict ? 0 : 1};
}

Outcome cmd_classify(const std::string& map_path) {
  try {
    const Classification cl = rv_classify(map2_from_json(read_json_file(map_path)));
    json body = to_json(cl.tag);
    body["conjugator"] = to_json(cl.conjugator);
    return {body, 0};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotReversible) throw;
    return {{{"verdict", false}, {"reason", e.what()}}, 1};
  }
}

Outcome cmd_strong(const std::string& map_path) {
  const Certificate c = rv_is_strongly_reversible(map2_from_json(read_json_file(map_path)));
  return {to_json(c), c.verdict ? 0 : 1};
}

Outcome cmd_order(const std::string& map_path, int bound) {
  const auto ord = rv_reverser_order(map2_from_json(read_json_file(map_path)), bound);
  return {{{"order", ord ? json(*ord) : json(nullptr)}, {"bound", bound}}, ord ? 0 : 1};
}

Outcome cmd_factor(const std::string& map_path) {
  return {to_json(fz_factor(map2_from_json(read_json_file(map_path)))), 0};
}

Outcome cmd_iterate(const std::string& map_path, const std::string& series_path, long n,
                    const std::string& alpha) {
  if (!series_path.empty()) {
    const Series1 s = series1_from_json(read_json_file(series_path));
    const Scalar a = alpha.empty() ? s.field().from_int(n) : parse_scalar(s.field(), alpha);
    return {to_json(fractional_iterate(s, a)), 0};
  }
  if (map_path.empty()) fail(ErrorKind::Parse, "iterate needs --map or --series");
  return {to_json(iterate(map2_from_json(read_json_file(map_path)), n)), 0};
}

Outcome cmd_normalize(const std::string& map_path) {
  const PDResult pd = pd_normalize(map2_from_json(read_json_file(map_path)));
  return {{{"K", to_json(pd.K)}, {"G", to_json(pd.G)}, {"degree", pd.degree}}, 0};
}

Outcome cmd_pmap(const std::string& map_path) {
  const CentElem a = ce_extract(map2_from_json(read_json_file(map_path)));
  return {to_json(ce_P(a)), 0};
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Reversibility toolkit for formal maps of (C^2, 0)"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field-m", cfg.field_m, "Conductor m of Q(zeta_m)")->check(CLI::PositiveNumber);
  app.add_option("--trunc", cfg.trunc_t, "Truncation N_t of one-variable payloads; maps use 2 N_t + 1")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--lambda", cfg.lambda, "Multiplier as \"a0/b0, a1/b1, ...\"");
  app.add_option("--seed", cfg.seed, "Seed for randomized conjugators");
  app.add_option("--out", cfg.out, "Write JSON here instead of stdout");

  std::string kind, map_path, rev_path, series_path, alpha;
  int k = 1, sigma = 1, conjugate = 0, bound = 64;
  long n = 2;

  auto* build = app.add_subcommand("build", "Normal forms and examples as Map2 JSON");
  build->add_option("kind", kind, "linear | first_series | second_series | polynomial | moser")->required();
  build->add_option("--k", k)->check(CLI::PositiveNumber);
  build->add_option("--sigma", sigma)->check(CLI::IsMember({-1, 1}));
  build->add_option("--conjugate", conjugate, "Conjugate by this many seeded shears")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify-reverser", "Check Th^-1 F Th = F^-1");
  verify->add_option("--map", map_path)->required();
  verify->add_option("--reverser", rev_path)->required();

  auto* classify = app.add_subcommand("classify", "Normal form and conjugator");
  classify->add_option("--map", map_path)->required();

  auto* strong = app.add_subcommand("strong", "Reversibility by an involution");
  strong->add_option("--map", map_path)->required();

  auto* order = app.add_subcommand("order", "Finite order of a map up to a bound");
  order->add_option("--map", map_path)->required();
  order->add_option("--bound", bound)->check(CLI::PositiveNumber);

  auto* factor = app.add_subcommand("factor", "Product of reversibles and an involution");
  factor->add_option("--map", map_path)->required();

  auto* iter = app.add_subcommand("iterate", "F^n, or f^alpha for a one-variable series");
  iter->add_option("--map", map_path);
  iter->add_option("--series", series_path);
  iter->add_option("--n", n);
  iter->add_option("--alpha", alpha);

  auto* normalize = app.add_subcommand("normalize", "Poincare-Dulac normalization");
  normalize->add_option("--map", map_path)->required();

  auto* pmap = app.add_subcommand("p-map", "One-variable map P(F) of a resonant map");
  pmap->add_option("--map", map_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << dump(error_json("Usage", e.what()));
    return 2;
  }

  try {
    Outcome out;
    if (*build) {
      out = cmd_build(cfg, kind, k, sigma, conjugate);
    } else if (*verify) {
      out = cmd_verify(map_path, rev_path);
    } else if (*classify) {
      out = cmd_classify(map_path);
    } else if (*strong) {
      out = cmd_strong(map_path);
    } else if (*order) {
      out = cmd_order(map_path, bound);
    } else if (*factor) {
      out = cmd_factor(map_path);
    } else if (*iter) {
      out = cmd_iterate(map_path, series_path, n, alpha);
    } else if (*normalize) {
      out = cmd_normalize(map_path);
    } else {
      out = cmd_pmap(map_path);
    }
    emit(cfg, out.body);
    return out.code;
  } catch (const Error& e) {
    std::cout << dump(error_json(error_kind_name(e.kind()), e.what()));
  } catch (const std::exception& e) {
    std::cout << dump(error_json("Internal", e.what()));
  }
  return 2;
}
