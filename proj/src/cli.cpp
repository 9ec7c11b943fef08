#include "lpl/cli.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "lpl/algebroid.hpp"
#include "lpl/embedding.hpp"
#include "lpl/errors.hpp"
#include "lpl/lie_poisson.hpp"
#include "lpl/model_io.hpp"

namespace lpl {

using nlohmann::json;

namespace {

json jvec(std::span<const Rational> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json jsub(const Subspace& s) {
  json basis = json::array();
  for (const auto& b : s.basis()) basis.push_back(jvec(b));
  return {{"dim", s.dim()}, {"basis", std::move(basis)}};
}

std::string tsub(const Subspace& s) {
  if (s.is_zero()) return "{0}";
  std::string out = "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i) out += ", ";
    out += to_string(s.basis()[i]);
  }
  return out + "}";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string sampled(const SampleSpec& spec) {
  return "sampled(" + std::to_string(spec.count) + ", " + std::to_string(spec.seed) + ")";
}

struct Context {
  ProblemFile problem;
  SampleSpec spec;
  std::vector<std::string> polynomials;

  [[nodiscard]] AffineSubspace affine() const {
    return AffineSubspace(problem.model, Subspace::span(problem.model.dim(), problem.h_basis),
                          problem.lambda);
  }
};

struct Output {
  json doc;
  std::ostringstream text;
  int exit_code = kExitOk;
};

json describe_c(const AffineSubspace& c) {
  return {{"dim", c.dim()},
          {"h", jsub(c.conormal())},
          {"lambda", jvec(c.base())},
          {"direction", jsub(c.direction())}};
}

json describe_pre_poisson(const PrePoissonResult& pp, const SampleSpec& spec) {
  json j{{"verdict", to_string(pp.verdict)},
         {"provenance", pp.verdict == RankVerdict::CertifiedConstant ? "certified" : sampled(spec)},
         {"base_rank", pp.base_rank},
         {"generic_rank", pp.generic_rank},
         {"pointwise_only", pp.pointwise_only}};
  if (pp.certified_space) j["space"] = jsub(*pp.certified_space);
  if (pp.counterexample) {
    const auto& ce = *pp.counterexample;
    j["counterexample"] = {{"points", {jvec(ce.first), jvec(ce.second)}},
                           {"ranks", {ce.first_rank, ce.second_rank}}};
  }
  return j;
}

void text_pre_poisson(std::ostream& os, const PrePoissonResult& pp, const SampleSpec& spec) {
  os << "pre-Poisson: " << to_string(pp.verdict) << " ["
     << (pp.verdict == RankVerdict::CertifiedConstant ? "certified" : sampled(spec)) << "]\n";
  os << "  rank(TC + #N*C) at base: " << pp.base_rank << ", generic: " << pp.generic_rank << "\n";
  if (pp.certified_space) os << "  TC + #N*C = " << tsub(*pp.certified_space) << "\n";
  if (pp.counterexample) {
    const auto& ce = *pp.counterexample;
    os << "  rank " << ce.first_rank << " at " << to_string(ce.first) << " vs rank "
       << ce.second_rank << " at " << to_string(ce.second) << "\n";
  }
  if (pp.pointwise_only) os << "  C is a point: pointwise data only\n";
}

void cmd_classify(const Context& ctx, Output& o) {
  const AffineSubspace c = ctx.affine();
  const ClassificationReport r = classify(c, ctx.spec);

  json co{{"value", r.coisotropic.coisotropic}, {"provenance", "certified"}};
  switch (r.coisotropic.kind) {
    case CoisotropyWitness::None: co["witness"] = nullptr; break;
    case CoisotropyWitness::NotSubalgebra:
      co["witness"] = {{"kind", "not_subalgebra"},
                       {"pair", {r.coisotropic.pair[0], r.coisotropic.pair[1]}},
                       {"bracket", jvec(r.coisotropic.witness)}};
      break;
    case CoisotropyWitness::NotCharacter:
      co["witness"] = {{"kind", "not_character"}, {"element", jvec(r.coisotropic.witness)}};
      break;
  }
  o.doc["C"] = describe_c(c);
  o.doc["coisotropic"] = std::move(co);
  o.doc["pre_poisson"] = describe_pre_poisson(r.pre_poisson, ctx.spec);
  o.doc["generic_rank"] = r.generic_rank;
  o.doc["at_base"] = {{"characteristic_rank", r.at_base.characteristic_rank},
                      {"sharp_rank", r.at_base.sharp_rank},
                      {"poisson_dirac", r.at_base.poisson_dirac},
                      {"cosymplectic", r.at_base.cosymplectic},
                      {"note", "pointwise test; smoothness of the induced bivector is not decided"}};

  auto& t = o.text;
  t << "C = lambda + h°, dim " << c.dim() << "\n";
  t << "  h = " << tsub(c.conormal()) << "\n  lambda = " << to_string(c.base()) << "\n";
  t << "  direction = " << tsub(c.direction()) << "\n";
  t << "coisotropic: " << yes_no(r.coisotropic.coisotropic) << " [certified]\n";
  if (r.coisotropic.kind == CoisotropyWitness::NotSubalgebra) {
    t << "  h is not a subalgebra: [h" << r.coisotropic.pair[0] + 1 << ", h"
      << r.coisotropic.pair[1] + 1 << "] = " << to_string(r.coisotropic.witness) << "\n";
  } else if (r.coisotropic.kind == CoisotropyWitness::NotCharacter) {
    t << "  lambda does not vanish on " << to_string(r.coisotropic.witness) << " in [h,h]\n";
  }
  text_pre_poisson(t, r.pre_poisson, ctx.spec);
  t << "at base point: characteristic rank " << r.at_base.characteristic_rank
    << ", Poisson-Dirac " << yes_no(r.at_base.poisson_dirac) << ", cosymplectic "
    << yes_no(r.at_base.cosymplectic) << " (pointwise)\n";
}

std::optional<Subspace> user_r(const Context& ctx) {
  if (!ctx.problem.r_basis) return std::nullopt;
  return Subspace::span(ctx.problem.model.dim(), *ctx.problem.r_basis);
}

json describe_constancy(const ConstancyResult& k) {
  json j{{"certified", k.certified},
         {"provenance", "certified"},
         {"reference_point", jvec(k.reference)}};
  if (k.certified) {
    j["k_annihilator"] = jsub(k.k_annihilator);
  } else {
    j["witness"] = {{"p_element", jvec(*k.witness_p)},
                    {"direction", jvec(*k.witness_direction)},
                    {"image", jvec(*k.witness_image)},
                    {"span_at_reference", jsub(k.k_annihilator)}};
  }
  return j;
}

void cmd_extend(const Context& ctx, Output& o) {
  const AffineSubspace c = ctx.affine();
  const PrePoissonResult pp = pre_poisson_check(c, ctx.spec);
  const Extension e = build_extension(c, ctx.spec, user_r(ctx));
  const CosymplecticLocus locus = cosymplectic_locus(e, ctx.spec, ctx.problem.extra_points);
  const ConstancyResult k = constant_sharp_conormal(e, ctx.spec);

  json failing = json::array();
  for (const auto& pt : locus.points) {
    if (!pt.cosymplectic) failing.push_back(jvec(pt.x));
  }
  o.doc["C"] = describe_c(c);
  o.doc["pre_poisson"] = describe_pre_poisson(pp, ctx.spec);
  o.doc["evidence"] = e.sampled_evidence_only ? sampled(ctx.spec) : "certified";
  o.doc["R"] = jsub(e.r);
  o.doc["P_tilde"] = {{"base", jvec(e.ptilde.base())}, {"direction", jsub(e.ptilde.direction())}};
  o.doc["p"] = jsub(e.p);
  o.doc["cosymplectic_locus"] = {{"never_cosymplectic", locus.never_cosymplectic},
                                 {"evaluated", locus.points.size()},
                                 {"failures", locus.failures},
                                 {"failing_points", std::move(failing)},
                                 {"provenance", sampled(ctx.spec)}};
  o.doc["constancy"] = describe_constancy(k);

  auto& t = o.text;
  t << "C = lambda + h°, dim " << c.dim() << ", direction " << tsub(c.direction()) << "\n";
  text_pre_poisson(t, pp, ctx.spec);
  t << "R = " << tsub(e.r) << (ctx.problem.r_basis ? " (user supplied)" : " (greedy)") << "\n";
  t << "P~ = " << to_string(e.ptilde.base()) << " + " << tsub(e.ptilde.direction()) << "\n";
  t << "p = " << tsub(e.p) << "\n";
  if (e.sampled_evidence_only) t << "  extension rests on sampled rank evidence\n";
  t << "cosymplectic locus: ";
  if (locus.never_cosymplectic) {
    t << "never (dim p is odd)\n";
  } else {
    t << locus.points.size() - locus.failures << " of " << locus.points.size()
      << " evaluated points cosymplectic [" << sampled(ctx.spec) << "]\n";
    for (const auto& pt : locus.points) {
      if (!pt.cosymplectic) t << "  fails at " << to_string(pt.x) << "\n";
    }
  }
  if (k.certified) {
    t << "#N*P~ constant [certified]: k° = " << tsub(k.k_annihilator) << "\n";
  } else {
    t << "#N*P~ NotConstant: coad of " << to_string(*k.witness_p) << " along "
      << to_string(*k.witness_direction) << " gives " << to_string(*k.witness_image)
      << " outside " << tsub(k.k_annihilator) << "\n";
  }
}

json describe_algebra_constants(const LieAlgebra& g) {
  json cs = json::array();
  for (const auto& c : g.structure_constants()) {
    cs.push_back({{"i", c.i}, {"j", c.j}, {"k", c.k}, {"coefficient", c.value.str()}});
  }
  return cs;
}

void cmd_pair(const Context& ctx, Output& o) {
  const auto& g = ctx.problem.model;
  SymmetricPairReport rep;
  if (ctx.problem.k_basis) {
    o.doc["mode"] = "decomposition";
    rep = decomposition_check(g, Subspace::span(g.dim(), *ctx.problem.k_basis),
                              Subspace::span(g.dim(), *ctx.problem.p_basis));
    o.text << "mode: user-supplied decomposition\n";
  } else {
    o.doc["mode"] = "extension";
    const AffineSubspace c = ctx.affine();
    const Extension e = build_extension(c, ctx.spec, user_r(ctx));
    const ConstancyResult k = constant_sharp_conormal(e, ctx.spec);
    o.doc["constancy"] = describe_constancy(k);
    o.doc["evidence"] = e.sampled_evidence_only ? sampled(ctx.spec) : "certified";
    o.text << "mode: extension of C = lambda + h°\n";
    if (!k.certified) {
      throw Refusal("#N*P~ is not constant (coad of " + to_string(*k.witness_p) + " along " +
                    to_string(*k.witness_direction) + " leaves " + tsub(k.k_annihilator) + ")");
    }
    rep = symmetric_pair_analysis(e, k);
  }
  o.doc["k"] = jsub(rep.k);
  o.doc["p"] = jsub(rep.p);
  o.doc["flags"] = {{"direct_sum", rep.direct_sum},
                    {"k_subalgebra", rep.k_subalgebra},
                    {"kp_in_p", rep.kp_in_p},
                    {"pp_in_k", rep.pp_in_k}};
  o.doc["symmetric_pair"] = rep.symmetric_pair();

  auto& t = o.text;
  t << "k = " << tsub(rep.k) << "\np = " << tsub(rep.p) << "\n";
  t << "k (+) p = g: " << yes_no(rep.direct_sum) << "\nk subalgebra: " << yes_no(rep.k_subalgebra)
    << "\n[k,p] in p: " << yes_no(rep.kp_in_p) << "\n[p,p] in k: " << yes_no(rep.pp_in_k)
    << "\nsymmetric pair: " << yes_no(rep.symmetric_pair()) << "\n";

  try {
    const LieAlgebra induced = induced_structure(g, rep.k, rep.p);
    o.doc["induced"] = {{"dim", induced.dim()},
                        {"structure_constants", describe_algebra_constants(induced)},
                        {"zero", induced.is_abelian()},
                        {"jacobi_ok", validate_jacobi(induced).ok}};
    t << "induced linear Poisson structure on P~ (basis of k): ";
    if (induced.is_abelian()) {
      t << "zero\n";
    } else {
      t << "\n";
      for (const auto& c : induced.structure_constants()) {
        t << "  [k" << c.i + 1 << ", k" << c.j + 1 << "] has " << c.value << " on k" << c.k + 1
          << "\n";
      }
    }
  } catch (const Refusal& r) {
    o.doc["induced"] = {{"refused", r.what()}};
    t << "induced structure refused: " << r.what() << "\n";
    o.exit_code = kExitRefusal;
  }
}

void cmd_algebroid(const Context& ctx, Output& o) {
  const AffineSubspace c = ctx.affine();
  const AlgebroidFiberReport rep = transversal_orbit_report(c, ctx.spec);
  const Subspace iso = isotropy_algebra(ctx.problem.model, c.base());

  json samples = json::array();
  for (const auto& s : rep.samples) {
    samples.push_back({{"x", jvec(s.x)},
                       {"orbit_dim", s.orbit_dim},
                       {"isotropy_dim", s.isotropy_dim},
                       {"transversal", s.transversal}});
  }
  o.doc["C"] = describe_c(c);
  if (rep.fiber) {
    o.doc["fiber"] = {{"d", jsub(rep.fiber->d)}, {"is_subalgebra", rep.fiber->is_subalgebra}};
  } else {
    o.doc["fiber"] = nullptr;
  }
  o.doc["isotropy_at_base"] = jsub(iso);
  o.doc["orbits"] = {{"samples", std::move(samples)},
                     {"constant_orbit_dim", rep.constant_orbit_dim},
                     {"all_transversal", rep.all_transversal},
                     {"provenance", sampled(ctx.spec)}};

  auto& t = o.text;
  t << "C = lambda + h°, dim " << c.dim() << "\n";
  if (rep.fiber) {
    t << "d = " << tsub(rep.fiber->d) << " (subalgebra: " << yes_no(rep.fiber->is_subalgebra)
      << ")\n";
  } else {
    t << "d: undefined (h is not a subalgebra)\n";
  }
  t << "isotropy algebra at lambda: " << tsub(iso) << "\n";
  std::vector<std::size_t> dims;
  for (const auto& s : rep.samples) dims.push_back(s.orbit_dim);
  t << "orbit dimension along C: min " << *std::min_element(dims.begin(), dims.end()) << ", max "
    << *std::max_element(dims.begin(), dims.end()) << " over " << dims.size() << " points ["
    << sampled(ctx.spec) << "]\n";
  t << "constant orbit dimension: " << yes_no(rep.constant_orbit_dim)
    << "\ntransversal to orbits: " << yes_no(rep.all_transversal) << "\n";
}

std::vector<Polynomial> polynomials(const Context& ctx, std::size_t needed) {
  if (ctx.polynomials.size() < needed) {
    throw InputError("expected " + std::to_string(needed) + " polynomial(s) via --poly or \"polynomials\"");
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < needed; ++i) {
    out.push_back(Polynomial::parse(ctx.polynomials[i], ctx.problem.model.dim()));
  }
  return out;
}

void cmd_bracket(const Context& ctx, Output& o) {
  const auto ps = polynomials(ctx, 2);
  const Polynomial b = poisson_bracket_poly(ctx.problem.model, ps[0], ps[1]);
  o.doc["f"] = ps[0].str();
  o.doc["g"] = ps[1].str();
  o.doc["bracket"] = b.str();
  o.text << "{" << ps[0].str() << ", " << ps[1].str() << "} = " << b.str() << "\n";
}

void cmd_casimir(const Context& ctx, Output& o) {
  const auto ps = polynomials(ctx, 1);
  const auto& g = ctx.problem.model;
  json brackets = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    brackets.push_back(poisson_bracket_poly(g, ps[0], Polynomial::variable(g.dim(), i)).str());
  }
  const bool is_casimir = casimir_check(g, ps[0]);
  o.doc["f"] = ps[0].str();
  o.doc["casimir"] = is_casimir;
  o.doc["brackets_with_coordinates"] = std::move(brackets);
  o.text << ps[0].str() << " is " << (is_casimir ? "" : "not ") << "a Casimir\n";
}

Context load_context(const CliOptions& opt) {
  Context ctx;
  std::optional<LieAlgebra> model;
  if (opt.model) model = load_model(*opt.model);
  if (opt.problem) {
    const std::filesystem::path path(*opt.problem);
    ctx.problem = parse_problem(read_file(path), path.parent_path(), model);
  } else if (model) {
    ctx.problem.model = *model;
    ctx.problem.lambda = Vector(model->dim());
  } else {
    throw InputError("--problem or --model is required");
  }
  if (ctx.problem.samples) ctx.spec.count = *ctx.problem.samples;
  if (ctx.problem.seed) ctx.spec.seed = *ctx.problem.seed;
  if (opt.samples) ctx.spec.count = *opt.samples;
  if (opt.seed) ctx.spec.seed = *opt.seed;
  ctx.polynomials = opt.polynomials.empty() ? ctx.problem.polynomials : opt.polynomials;
  return ctx;
}

void run_validate(const CliOptions& opt, Output& o) {
  LieAlgebra g;
  if (opt.model) {
    g = load_model(*opt.model, false);
  } else if (opt.problem) {
    const std::filesystem::path path(*opt.problem);
    g = parse_problem(read_file(path), path.parent_path(), std::nullopt, false).model;
  } else {
    throw InputError("--problem or --model is required");
  }
  const JacobiReport rep = validate_jacobi(g);
  json j{{"ok", rep.ok}};
  if (!rep.ok) {
    j["triple"] = {(*rep.triple)[0], (*rep.triple)[1], (*rep.triple)[2]};
    j["residual"] = jvec(rep.residual);
    o.exit_code = kExitInputError;
  }
  o.doc["model"] = {{"name", g.name()}, {"dim", g.dim()}};
  o.doc["jacobi"] = std::move(j);
  o.text << "model '" << g.name() << "' (dim " << g.dim() << "): Jacobi identity "
         << (rep.ok ? "holds" : "fails");
  if (!rep.ok) {
    o.text << " at triple (" << (*rep.triple)[0] << ", " << (*rep.triple)[1] << ", "
           << (*rep.triple)[2] << "), residual " << to_string(rep.residual);
  }
  o.text << "\n";
}

}  // namespace

const std::vector<std::string>& cli_commands() {
  static const std::vector<std::string> commands{"validate", "classify", "extend",  "pair",
                                                 "algebroid", "bracket", "casimir"};
  return commands;
}

CliResult run(const CliOptions& opt) {
  Output o;
  o.doc["command"] = opt.command;
  CliResult result;
  std::string error_kind;
  std::string message;
  try {
    if (opt.command == "validate") {
      run_validate(opt, o);
    } else {
      const Context ctx = load_context(opt);
      o.doc["model"] = ctx.problem.model.name();
      if (opt.command == "classify") {
        cmd_classify(ctx, o);
      } else if (opt.command == "extend") {
        cmd_extend(ctx, o);
      } else if (opt.command == "pair") {
        cmd_pair(ctx, o);
      } else if (opt.command == "algebroid") {
        cmd_algebroid(ctx, o);
      } else if (opt.command == "bracket") {
        cmd_bracket(ctx, o);
      } else if (opt.command == "casimir") {
        cmd_casimir(ctx, o);
      } else {
        throw InputError("unknown command '" + opt.command + "'");
      }
    }
  } catch (const Refusal& e) {
    o.exit_code = kExitRefusal;
    error_kind = "refusal";
    message = e.what();
  } catch (const std::exception& e) {
    // InputError, DimensionMismatch and invalid_argument all mean bad input.
    o.exit_code = kExitInputError;
    error_kind = "input";
    message = e.what();
  }

  result.exit_code = o.exit_code;
  if (!error_kind.empty()) {
    result.err = opt.command + ": " + message + "\n";
    json err{{"command", opt.command}, {"error", {{"kind", error_kind}, {"message", message}}}};
    result.out = opt.json ? err.dump(2) + "\n" : std::string();
    return result;
  }
  result.out = opt.json ? o.doc.dump(2) + "\n" : o.text.str();
  return result;
}

}  // namespace lpl
