#include "arithmat/cli.hpp"

#include "arithmat/activity.hpp"
#include "arithmat/errors.hpp"
#include "arithmat/toric_points.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace arithmat::cli {

// ---------------------------------------------------------------------------
// JSON forms of the reports

namespace {

const Json& need(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(InputError::Kind::MissingKey, std::string("missing key \"") + key + "\"");
  return *it;
}

Specialization specialization_from_string(const std::string& s) {
  for (Specialization w : {Specialization::BasesCount, Specialization::Components, Specialization::Poincare,
                           Specialization::Characteristic, Specialization::IndepCount})
    if (s == to_string(w)) return w;
  throw InputError(InputError::Kind::InvalidValue, "unknown specialization \"" + s + "\"");
}

}  // namespace

void to_json(Json& j, const TutteReport& r) {
  j = {{"method", r.method}, {"consistent", r.consistent}};
  if (r.subset_sum) j["subset_sum"] = *r.subset_sum;
  if (r.delcon) j["delcon"] = *r.delcon;
}

void from_json(const Json& j, TutteReport& r) {
  r.method = need(j, "method").get<std::string>();
  r.consistent = need(j, "consistent").get<bool>();
  r.subset_sum.reset();
  r.delcon.reset();
  if (j.contains("subset_sum")) r.subset_sum = j["subset_sum"].get<BiPoly>();
  if (j.contains("delcon")) r.delcon = j["delcon"].get<BiPoly>();
}

void to_json(Json& j, const GaleDualReport& r) {
  j = representation_json(r.dual);
  j["dual_iso"] = r.check;
}

void from_json(const Json& j, GaleDualReport& r) {
  MatroidInput in = input_from_json(j);
  if (!in.representation)
    throw InputError(InputError::Kind::InvalidValue, "gale-dual report must hold a representation");
  r.dual = *in.representation;
  r.check = need(j, "dual_iso").get<DualIsoResult>();
}

void to_json(Json& j, const ActivityReport& r) {
  j = {{"order", r.order},       {"L_X", r.lists.primal}, {"L_X_star", r.lists.dual},
       {"matchings", r.matchings}, {"mbar", r.mbar},       {"tutte", r.tutte},
       {"consistent", r.consistent}};
}

void from_json(const Json& j, ActivityReport& r) {
  r.order = need(j, "order").get<std::vector<std::size_t>>();
  r.lists.primal = need(j, "L_X").get<std::vector<WeightedSublist>>();
  r.lists.dual = need(j, "L_X_star").get<std::vector<WeightedSublist>>();
  r.matchings = need(j, "matchings").get<std::vector<Matching>>();
  r.mbar = need(j, "mbar").get<BiPoly>();
  r.tutte = need(j, "tutte").get<BiPoly>();
  r.consistent = need(j, "consistent").get<bool>();
}

void to_json(Json& j, const PointsReport& r) {
  j = {{"points", r.points}, {"component_counts", r.counts}, {"aes", r.aes}};
}

void from_json(const Json& j, PointsReport& r) {
  r.points = need(j, "points").get<std::vector<PointRecord>>();
  r.counts = need(j, "component_counts").get<ComponentCountReport>();
  r.aes = need(j, "aes").get<AesReport>();
}

void to_json(Json& j, const SpecializeReport& r) {
  j = {{"at", to_string(r.which)}};
  if (const auto* p = std::get_if<UniPoly>(&r.value)) {
    j["value"] = *p;
  } else {
    j["value"] = std::get<Integer>(r.value);
  }
}

void from_json(const Json& j, SpecializeReport& r) {
  r.which = specialization_from_string(need(j, "at").get<std::string>());
  const Json& v = need(j, "value");
  if (v.is_object()) {
    r.value = v.get<UniPoly>();
  } else {
    r.value = v.get<Integer>();
  }
}

void to_json(Json& j, const SequenceCheck& r) {
  j = {{"name", r.name}, {"polynomial", r.polynomial}, {"holds", r.holds}};
}

void from_json(const Json& j, SequenceCheck& r) {
  r.name = need(j, "name").get<std::string>();
  r.polynomial = need(j, "polynomial").get<UniPoly>();
  r.holds = need(j, "holds").get<bool>();
}

void to_json(Json& j, const PropsReport& r) {
  j = {{"check", r.check}, {"holds", r.holds}, {"sequences", r.sequences}};
}

void from_json(const Json& j, PropsReport& r) {
  r.check = need(j, "check").get<std::string>();
  r.holds = need(j, "holds").get<bool>();
  r.sequences = need(j, "sequences").get<std::vector<SequenceCheck>>();
}

// ---------------------------------------------------------------------------
// Commands

namespace {

struct Options {
  std::string input = "-";
  std::string format = "text";
  std::size_t cap = kDefaultSubsetSumCap;
  std::size_t axiom_cap = 12;
  std::string method = "subset";
  std::string order;
  std::string at = "bases";
  std::string check = "gcd";
};

struct Context {
  const Options& opt;
  const MatroidInput& input;
  std::ostream& out;
  bool json() const { return opt.format == "json"; }
  const ArithmeticMatroid& m() const { return input.matroid; }
};

void require_cap(const ArithmeticMatroid& m, std::size_t cap, const char* what) {
  if (m.size() > cap) throw CapExceeded(what, m.size(), cap);
}

const Representation& require_representation(const Context& c, const char* command) {
  if (!c.input.representation)
    throw InputError(InputError::Kind::InvalidValue,
                     std::string(command) + " needs a representation input (kind \"representation\")");
  return *c.input.representation;
}

MatroidInput load(const Options& opt, std::istream& in) {
  std::stringstream buffer;
  if (opt.input == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(opt.input);
    if (!file) throw InputError(InputError::Kind::InvalidValue, "cannot open input file " + opt.input);
    buffer << file.rdbuf();
  }
  return parse_input(buffer.str());
}

ElementOrder parse_order(const ArithmeticMatroid& m, const std::string& text) {
  if (text.empty()) return ElementOrder::identity(m.size());
  std::vector<std::size_t> seq;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t index = m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m.has_labels() && m.labels()[i] == item) index = i;
    if (index == m.size()) {
      try {
        std::size_t used = 0;
        index = std::stoul(item, &used);
        if (used != item.size()) index = m.size();
      } catch (const std::exception&) {
        index = m.size();
      }
    }
    if (index >= m.size()) throw InputError(InputError::Kind::InvalidValue, "unknown element in --order: " + item);
    seq.push_back(index);
  }
  try {
    return ElementOrder::from_sequence(std::move(seq));
  } catch (const PreconditionError& e) {
    throw InputError(InputError::Kind::InvalidValue, std::string("--order: ") + e.what());
  }
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_tutte(const Context& c) {
  require_cap(c.m(), c.opt.cap, "tutte");
  TutteReport r;
  r.method = c.opt.method;
  if (r.method == "subset" || r.method == "both") r.subset_sum = arithmetic_tutte_subsetsum(c.m(), c.opt.cap);
  if (r.method == "delcon" || r.method == "both") r.delcon = arithmetic_tutte_delcon(c.m());
  r.consistent = !(r.subset_sum && r.delcon) || *r.subset_sum == *r.delcon;
  if (c.json()) {
    emit_json(c.out, r);
  } else if (r.consistent) {
    c.out << (r.subset_sum ? *r.subset_sum : *r.delcon).to_string() << "\n";
  } else {
    c.out << "subset: " << r.subset_sum->to_string() << "\n";
    c.out << "delcon: " << r.delcon->to_string() << "\n";
    c.out << "mismatch between subset-sum and deletion-contraction\n";
  }
  return r.consistent ? kOk : kMismatch;
}

int cmd_dual(const Context& c) {
  require_cap(c.m(), c.opt.cap, "dual");
  const ArithmeticMatroid d = dual(c.m());
  if (c.json()) {
    emit_json(c.out, explicit_json(d));
    return kOk;
  }
  c.out << "rank " << d.rank() << "\n";
  for (Subset s = 0; s < d.table().rank.size(); ++s)
    c.out << d.format_subset(s) << " rank " << d.rank(s) << " multiplicity " << d.multiplicity(s) << "\n";
  return kOk;
}

int cmd_gale_dual(const Context& c) {
  const Representation& r = require_representation(c, "gale-dual");
  GaleDualReport report{gale_dual(r), verify_dual_iso(r, c.opt.cap)};
  if (c.json()) {
    emit_json(c.out, report);
  } else {
    const FgGroup& g = report.dual.group();
    c.out << "group Z^" << g.free_rank();
    for (const Integer& d : g.torsion()) c.out << " + Z/" << d;
    c.out << "\n";
    const ArithmeticMatroid m = from_representation(report.dual);
    for (std::size_t i = 0; i < report.dual.size(); ++i) {
      c.out << m.label(i) << " (";
      const auto& coords = report.dual.elements()[i].coords;
      for (std::size_t j = 0; j < coords.size(); ++j) c.out << (j ? "," : "") << coords[j];
      c.out << ")\n";
    }
    c.out << "dual-iso: " << (report.check.ok ? "ok" : "MISMATCH") << "\n";
    for (const DualMismatch& d : report.check.mismatches)
      c.out << "  " << m.format_subset(d.subset) << " expected rank " << d.expected_rank << " multiplicity "
            << d.expected_multiplicity << ", got rank " << d.actual_rank << " multiplicity "
            << d.actual_multiplicity << "\n";
  }
  return report.check.ok ? kOk : kMismatch;
}

std::string describe(const ArithmeticMatroid& m, const AxiomWitness& w) {
  std::string s = "A=" + m.format_subset(w.a);
  if (w.axiom == Axiom::RankSubmodular || w.axiom == Axiom::RankMonotone || w.axiom == Axiom::Product3 ||
      w.axiom == Axiom::Positivity4 || w.axiom == Axiom::Positivity5)
    s += " B=" + m.format_subset(w.b);
  if (w.axiom == Axiom::Product3) s += " F=" + m.format_subset(w.f) + " T=" + m.format_subset(w.t);
  if (w.element != kNoElement) s += " v=" + m.label(w.element);
  return s;
}

int cmd_check_axioms(const Context& c) {
  const AxiomReport report = check_axioms(c.m(), {c.opt.axiom_cap, 8});
  if (c.json()) {
    emit_json(c.out, report);
  } else {
    for (const AxiomStatus& s : report.statuses) {
      c.out << to_string(s.axiom) << ": ";
      if (s.passed) {
        c.out << "ok\n";
        continue;
      }
      c.out << "FAIL (" << s.violations << (s.violations == 1 ? " violation" : " violations") << ")\n";
      for (const AxiomWitness& w : s.witnesses) c.out << "  witness " << describe(c.m(), w) << "\n";
    }
  }
  return report.all_passed() ? kOk : kMismatch;
}

void print_list(std::ostream& out, const ArithmeticMatroid& m, const char* name,
                const std::vector<WeightedSublist>& list) {
  out << name << ":\n";
  for (const WeightedSublist& w : list) out << "  " << m.format_subset(w.sublist) << " weight " << w.weight << "\n";
}

int cmd_activity(const Context& c) {
  const ArithmeticMatroid& m = c.m();
  require_cap(m, c.opt.cap, "activity");
  const ElementOrder order = parse_order(m, c.opt.order);
  ActivityReport r;
  r.order = order.sequence();
  r.lists = build_lists(m);
  for (Subset b : bases(m)) {
    r.matchings.push_back(psi_matching(m, order, b));
    r.mbar += r.matchings.back().polynomial();
  }
  r.tutte = arithmetic_tutte_subsetsum(m, c.opt.cap);
  r.consistent = r.mbar == r.tutte;
  if (c.json()) {
    emit_json(c.out, r);
    return r.consistent ? kOk : kMismatch;
  }
  c.out << "order:";
  for (std::size_t i = 0; i < r.order.size(); ++i) c.out << (i ? " < " : " ") << m.label(r.order[i]);
  c.out << "\n";
  print_list(c.out, m, "L_X", r.lists.primal);
  print_list(c.out, m, "L_X*", r.lists.dual);
  for (const Matching& mt : r.matchings) {
    c.out << "basis " << m.format_subset(mt.basis) << ":\n";
    for (const PairClass& p : mt.primal)
      c.out << "  primal active " << m.format_subset(p.active) << " weight " << p.weight << "\n";
    for (const PairClass& p : mt.dual)
      c.out << "  dual active " << m.format_subset(p.active) << " weight " << p.weight << "\n";
    for (const MatchEntry& e : mt.entries)
      c.out << "  match " << m.format_subset(mt.primal[e.primal].active) << " ~ "
            << m.format_subset(mt.dual[e.dual].active) << " count " << e.count << "\n";
    c.out << "  contribution " << mt.polynomial().to_string() << "\n";
  }
  c.out << "mbar: " << r.mbar.to_string() << "\n";
  c.out << "tutte: " << r.tutte.to_string() << "\n";
  c.out << (r.consistent ? "agree\n" : "MISMATCH\n");
  return r.consistent ? kOk : kMismatch;
}

int cmd_points(const Context& c) {
  const Representation& rep = require_representation(c, "points");
  require_cap(c.m(), c.opt.cap, "points");
  PointsReport r{enumerate_points(rep), verify_component_counts(rep), verify_aes(rep)};
  const bool ok = r.counts.ok && r.aes.ok;
  if (c.json()) {
    emit_json(c.out, r);
    return ok ? kOk : kMismatch;
  }
  for (const PointRecord& p : r.points)
    c.out << p.point.to_string() << " X_p=" << c.m().format_subset(p.x_p) << "\n";
  c.out << "points: " << r.points.size() << "\n";
  c.out << "component counts: " << (r.counts.ok ? "ok" : "MISMATCH") << "\n";
  for (const CountDiscrepancy& d : r.counts.discrepancies)
    c.out << "  " << c.m().format_subset(d.sublist) << " points " << d.points << " multiplicity "
          << d.multiplicity << "\n";
  c.out << "M(1,y) = " << r.aes.arithmetic.to_string("y") << "\n";
  c.out << "sum of T_p(1,y) = " << r.aes.local_sum.to_string("y") << "\n";
  c.out << "aes: " << (r.aes.ok ? "ok" : "MISMATCH") << "\n";
  return ok ? kOk : kMismatch;
}

int cmd_specialize(const Context& c) {
  require_cap(c.m(), c.opt.cap, "specialize");
  const BiPoly p = arithmetic_tutte_subsetsum(c.m(), c.opt.cap);
  SpecializeReport r;
  r.which = specialization_from_string(c.opt.at);
  r.value = specialize(p, r.which, static_cast<unsigned>(c.m().rank()));
  if (c.json()) {
    emit_json(c.out, r);
  } else if (const auto* u = std::get_if<UniPoly>(&r.value)) {
    c.out << u->to_string() << "\n";
  } else {
    c.out << std::get<Integer>(r.value) << "\n";
  }
  return kOk;
}

int cmd_props(const Context& c) {
  PropsReport r;
  r.check = c.opt.check;
  if (r.check == "gcd") {
    require_cap(c.m(), c.opt.axiom_cap, "props gcd");
    r.holds = is_gcd(c.m());
  } else if (r.check == "torsion-free") {
    r.holds = is_torsion_free(c.m());
  } else {
    require_cap(c.m(), c.opt.cap, "props");
    const BiPoly p = arithmetic_tutte_subsetsum(c.m(), c.opt.cap);
    const unsigned n = static_cast<unsigned>(c.m().rank());
    for (Specialization w : {Specialization::Characteristic, Specialization::IndepCount}) {
      SequenceCheck s;
      s.name = to_string(w);
      s.polynomial = std::get<UniPoly>(specialize(p, w, n));
      const SequenceProperties props = sequence_tests(s.polynomial);
      s.holds = r.check == "unimodal" ? props.unimodal : props.log_concave;
      r.holds = r.holds && s.holds;
      r.sequences.push_back(std::move(s));
    }
  }
  if (c.json()) {
    emit_json(c.out, r);
    return kOk;
  }
  c.out << r.check << ": " << (r.holds ? "true" : "false") << "\n";
  for (const SequenceCheck& s : r.sequences)
    c.out << "  " << s.name << " " << s.polynomial.to_string() << ": " << (s.holds ? "true" : "false") << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Arithmetic matroid toolkit", args.empty() ? "arithmat" : args[0]};
  app.require_subcommand(1);

  auto common = [&opt](CLI::App* sub) {
    sub->add_option("input", opt.input, "Matroid description (JSON file, - for stdin)");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cap", opt.cap, "Largest ground size for exhaustive subset enumeration");
    sub->add_option("--axiom-cap", opt.axiom_cap, "Largest ground size for axiom and GCD checks");
    return sub;
  };
  struct Command {
    CLI::App* sub;
    int (*fn)(const Context&);
  };
  std::vector<Command> commands;

  auto* tutte = common(app.add_subcommand("tutte", "Arithmetic Tutte polynomial"));
  tutte->add_option("--method", opt.method, "subset, delcon or both")
      ->check(CLI::IsMember({"subset", "delcon", "both"}));
  commands.push_back({tutte, cmd_tutte});
  commands.push_back({common(app.add_subcommand("dual", "Dual arithmetic matroid as an explicit table")), cmd_dual});
  commands.push_back({common(app.add_subcommand("gale-dual", "Dual representation with verification")),
                      cmd_gale_dual});
  commands.push_back({common(app.add_subcommand("check-axioms", "Exhaustive axiom check")), cmd_check_axioms});
  auto* activity = common(app.add_subcommand("activity", "Activity lists, matchings and Mbar"));
  activity->add_option("--order", opt.order, "Comma-separated element order, smallest first");
  commands.push_back({activity, cmd_activity});
  commands.push_back({common(app.add_subcommand("points", "Zero-dimensional toric layers")), cmd_points});
  auto* specialize = common(app.add_subcommand("specialize", "Evaluate a specialization of M"));
  specialize->add_option("--at", opt.at, "Specialization")
      ->check(CLI::IsMember({"bases", "components", "poincare", "characteristic", "indep"}));
  commands.push_back({specialize, cmd_specialize});
  auto* props = common(app.add_subcommand("props", "Structural and sequence properties"));
  props->add_option("--check", opt.check, "Property")
      ->check(CLI::IsMember({"gcd", "torsion-free", "unimodal", "log-concave"}));
  commands.push_back({props, cmd_props});

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("arithmat");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const MatroidInput input = load(opt, in);
    const Context ctx{opt, input, out};
    for (const Command& c : commands)
      if (c.sub->parsed()) return c.fn(ctx);
  } catch (const InputError& e) {
    switch (e.kind()) {
      case InputError::Kind::MalformedJson: err << "error: malformed JSON: "; break;
      case InputError::Kind::MissingKey: err << "error: missing key: "; break;
      case InputError::Kind::InvalidValue: err << "error: invalid input: "; break;
    }
    err << e.what() << "\n";
    return kInputError;
  } catch (const CapExceeded& e) {
    err << "error: cap exceeded: " << e.what() << " (raise it with --cap or --axiom-cap)\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "error: precondition: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: verification failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const nlohmann::json::exception& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace arithmat::cli
