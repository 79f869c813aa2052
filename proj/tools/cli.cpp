#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaplab/common.hpp"
#include "gaplab/experiments.hpp"
#include "gaplab/expsum.hpp"
#include "gaplab/fourier.hpp"
#include "gaplab/gap.hpp"
#include "gaplab/intersective.hpp"
#include "gaplab/modarith.hpp"
#include "gaplab/poly.hpp"
#include "gaplab/primes.hpp"

namespace gaplab::cli {

namespace {

using json = nlohmann::ordered_json;

// Bad flag combinations that CLI11 cannot express; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  int threads = 1;
  double guard_scale = 1.0;
  std::string config;
};

// Exact integers: numbers while a double holds them exactly, else strings.
json big(const BigInt& v) {
  static const BigInt limit = BigInt(1) << 53;
  if (abs(v) <= limit) return v.convert_to<std::int64_t>();
  return v.str();
}

json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

json gap_json(const SymmetricGap& A) {
  return {{"steps", A.steps}, {"widths", A.widths}, {"offset", A.offset}};
}

SymmetricGap gap_from_json(const json& j) {
  SymmetricGap A;
  A.steps = j.at("steps").get<std::vector<std::int64_t>>();
  A.widths = j.at("widths").get<std::vector<std::int64_t>>();
  A.offset = j.value("offset", std::int64_t{0});
  return A;
}

json complex_json(Complex z) { return {{"re", num(z.real())}, {"im", num(z.imag())}}; }

json header(const std::string& command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

// ---------------------------------------------------------------------------
// Plain-text rendering of a result object.

std::string scalar_text(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    std::ostringstream s;
    s << std::setprecision(10) << v.get<double>();
    return s.str();
  }
  return v.dump();
}

void render(const json& j, std::ostream& out, const std::string& prefix = "") {
  for (const auto& [key, v] : j.items()) {
    if (prefix.empty() && (key == "schema_version" || key == "command")) continue;
    const std::string name = prefix + key;
    if (v.is_object()) {
      render(v, out, name + ".");
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << name << ":\n";
      std::vector<std::string> cols;
      for (const auto& [k, _] : v.front().items()) cols.push_back(k);
      std::vector<std::vector<std::string>> cells;
      std::vector<std::size_t> width;
      for (const auto& c : cols) width.push_back(c.size());
      for (const auto& row : v) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < cols.size(); ++c) {
          const json& cell = row.contains(cols[c]) ? row.at(cols[c]) : json(nullptr);
          line.push_back(cell.is_structured() ? cell.dump() : scalar_text(cell));
          width[c] = std::max(width[c], line.back().size());
        }
        cells.push_back(std::move(line));
      }
      auto emit = [&](const std::vector<std::string>& line) {
        out << " ";
        for (std::size_t c = 0; c < line.size(); ++c) out << ' ' << std::setw(static_cast<int>(width[c])) << line[c];
        out << '\n';
      };
      emit(cols);
      for (const auto& line : cells) emit(line);
    } else if (v.is_array()) {
      out << name << ":";
      std::size_t shown = 0;
      for (const auto& x : v) {
        if (shown++ == 32) {
          out << " ... (" << v.size() << " total)";
          break;
        }
        out << ' ' << (x.is_structured() ? x.dump() : scalar_text(x));
      }
      out << '\n';
    } else {
      out << name << ": " << scalar_text(v) << '\n';
    }
  }
}

// ---------------------------------------------------------------------------
// Subcommands.

struct Command {
  CLI::App* app = nullptr;
  std::function<json()> run;
  std::function<std::string(const json&)> summary;   // first line of text output
};

IntPolynomial need_poly(const std::string& text) { return parse_poly(text); }

void add_gap_options(CLI::App* sub, std::vector<std::int64_t>& steps, std::vector<std::int64_t>& widths,
                     std::int64_t* offset) {
  sub->add_option("--steps", steps, "comma-separated steps d_i")->required()->delimiter(',');
  sub->add_option("--widths", widths, "comma-separated widths L_i")->required()->delimiter(',');
  if (offset != nullptr) sub->add_option("--offset", *offset, "offset a");
}

SymmetricGap make_gap(const std::vector<std::int64_t>& steps, const std::vector<std::int64_t>& widths,
                      std::int64_t offset) {
  if (steps.size() != widths.size()) throw UsageError("--steps and --widths must have the same length");
  SymmetricGap A{steps, widths, offset};
  A.validate();
  return A;
}

void cmd_poly(CLI::App& app, std::vector<Command>& cmds) {
  struct Opts {
    std::string poly, eval;
    std::uint64_t mod = 0;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("poly", "Parse a polynomial and report its basic invariants");
  sub->add_option("--poly", o->poly, "polynomial, e.g. \"x^3-19\"")->required();
  sub->add_option("--eval", o->eval, "evaluate at this integer");
  sub->add_option("--mod", o->mod, "also list the roots modulo q")->check(CLI::PositiveNumber);
  cmds.push_back({sub, [o] {
    const IntPolynomial h = need_poly(o->poly);
    json j = header("poly");
    j["poly"] = h.to_string();
    j["degree"] = h.degree();
    json coeffs = json::array();
    for (const auto& c : h.coeffs()) coeffs.push_back(big(c));
    j["coefficients"] = coeffs;
    j["content"] = big(content(h));
    j["derivative"] = derivative(h).to_string();
    if (h.degree() >= 1) {
      j["squarefree_part"] = squarefree_part(h).to_string();
      json roots = json::array();
      for (const auto& r : integer_roots(h)) roots.push_back(big(r));
      j["integer_roots"] = roots;
    }
    if (!o->eval.empty()) {
      BigInt x;
      try {
        x = BigInt(o->eval);
      } catch (const std::exception&) {
        throw UsageError("--eval expects an integer");
      }
      j["value"] = big(evaluate(h, x));
    }
    if (o->mod != 0) j["roots_mod"] = {{"q", o->mod}, {"roots", roots_mod(h, o->mod)}};
    return j;
  }, [](const json& j) { return j["poly"].get<std::string>(); }});
}

void cmd_intersective(CLI::App& app, std::vector<Command>& cmds, Globals& g) {
  struct Opts {
    std::string poly, mode = "integers";
    std::uint64_t bound = 100;
    bool witnesses = false;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("intersective-check", "Certify or refute (P-)intersectivity up to a prime bound");
  sub->add_option("--poly", o->poly)->required();
  sub->add_option("--mode", o->mode, "integers | primes")->check(CLI::IsMember({"integers", "primes"}));
  sub->add_option("--prime-bound", o->bound, "check every prime p <= B")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1'000'000}));
  sub->add_flag("--witnesses", o->witnesses, "list a root for every checked prime");
  cmds.push_back({sub, [o, &g] {
    const IntPolynomial h = need_poly(o->poly);
    const InputMode mode = parse_input_mode(o->mode);
    const auto cert = certify(h, mode, o->bound, g.threads);
    json j = header("intersective-check");
    j["poly"] = h.to_string();
    j["mode"] = std::string(to_string(mode));
    j["status"] = to_string(cert.status);
    j["prime_bound"] = cert.prime_bound;
    j["primes_checked"] = cert.primes_checked;
    if (cert.status == CertificateStatus::refuted) {
      j["failing_prime"] = cert.failing_prime;
      j["failing_exponent"] = cert.failing_exponent ? json(*cert.failing_exponent) : json(nullptr);
      json trace = json::array();
      for (const auto& t : cert.trace) trace.push_back({{"level", t.level}, {"roots", t.roots}});
      j["trace"] = trace;
    }
    j["inconclusive_primes"] = cert.inconclusive_primes;
    j["witness_count"] = cert.witnesses.size();
    if (o->witnesses) {
      json w = json::array();
      for (const auto& [p, wit] : cert.witnesses) {
        w.push_back({{"prime", p}, {"r", big(wit.r)}, {"exponent", wit.exponent}, {"modulus", big(wit.modulus)}});
      }
      j["witnesses"] = w;
    }
    return j;
  }, [](const json& j) {
    std::string s = j["status"].get<std::string>();
    if (s == "refuted") {
      s += " (" + j["failing_prime"].dump() + ", " + j["failing_exponent"].dump() + ")";
    }
    return s;
  }});
}

void cmd_roots(CLI::App& app, std::vector<Command>& cmds) {
  struct Opts {
    std::string poly, method = "auto";
    std::uint64_t q = 1;
    bool coprime = false;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("roots-mod", "List the roots of h modulo q");
  sub->add_option("--poly", o->poly)->required();
  sub->add_option("--q", o->q)->required()->check(CLI::PositiveNumber);
  sub->add_option("--method", o->method, "auto | direct | lifted")->check(CLI::IsMember({"auto", "direct", "lifted"}));
  sub->add_flag("--coprime", o->coprime, "keep only roots coprime to q");
  cmds.push_back({sub, [o] {
    const IntPolynomial h = need_poly(o->poly);
    const RootsMethod m = o->method == "direct" ? RootsMethod::direct
                        : o->method == "lifted" ? RootsMethod::lifted : RootsMethod::automatic;
    auto roots = roots_mod(h, o->q, m);
    if (o->coprime) std::erase_if(roots, [&](std::uint64_t r) { return std::gcd(r, o->q) != 1; });
    json j = header("roots-mod");
    j["poly"] = h.to_string();
    j["q"] = o->q;
    j["coprime"] = o->coprime;
    j["count"] = roots.size();
    j["roots"] = roots;
    return j;
  }, [](const json& j) { return std::to_string(j["count"].get<std::size_t>()) + " roots"; }});
}

void cmd_gap_avoids(CLI::App& app, std::vector<Command>& cmds) {
  struct Opts {
    std::vector<std::int64_t> steps, widths;
    std::int64_t offset = 0;
    std::string poly = "x^2", inputs = "integers";
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("gap-avoids", "Decide whether a GAP contains a nonzero value h(n)");
  add_gap_options(sub, o->steps, o->widths, &o->offset);
  sub->add_option("--poly", o->poly);
  sub->add_option("--inputs", o->inputs, "integers | primes")->check(CLI::IsMember({"integers", "primes"}));
  cmds.push_back({sub, [o] {
    const SymmetricGap A = make_gap(o->steps, o->widths, o->offset);
    const IntPolynomial h = need_poly(o->poly);
    const InputMode mode = parse_input_mode(o->inputs);
    const auto r = avoids(A, h, mode);
    json j = header("gap-avoids");
    j["gap"] = gap_json(A);
    j["poly"] = h.to_string();
    j["inputs"] = std::string(to_string(mode));
    j["avoids"] = r.avoids;
    j["n"] = r.n ? json(*r.n) : json(nullptr);
    j["value"] = r.value ? json(*r.value) : json(nullptr);
    j["inputs_scanned"] = r.inputs_scanned;
    j["input_bound"] = r.input_bound;
    return j;
  }, [](const json& j) {
    if (j["avoids"].get<bool>()) return std::string("avoids");
    return "contains h(" + j["n"].dump() + ") = " + j["value"].dump();
  }});
}

void cmd_gap_info(CLI::App& app, std::vector<Command>& cmds) {
  struct Opts {
    std::vector<std::int64_t> steps, widths;
    std::int64_t offset = 0;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("gap-info", "Size, properness and representation counts of a GAP");
  add_gap_options(sub, o->steps, o->widths, &o->offset);
  cmds.push_back({sub, [o] {
    const SymmetricGap A = make_gap(o->steps, o->widths, o->offset);
    const auto p = properness(A);
    json j = header("gap-info");
    j["gap"] = gap_json(A);
    j["text"] = A.to_string();
    j["box_size"] = big(p.box_size);
    j["distinct_size"] = p.distinct_size;
    j["M"] = p.M;
    j["witness_element"] = p.witness_element;
    j["proper"] = p.is_proper();
    j["reach"] = A.reach();
    return j;
  }, [](const json& j) { return j["text"].get<std::string>(); }});
}

void cmd_detect(CLI::App& app, std::vector<Command>& cmds, Globals& g) {
  struct Opts {
    std::vector<std::int64_t> steps, widths;
    std::string poly = "x^2", inputs = "integers", report = "text";
    std::uint64_t q = 0;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("detect", "Evaluate both sides of the Fourier detection identity");
  add_gap_options(sub, o->steps, o->widths, nullptr);
  sub->add_option("--poly", o->poly);
  sub->add_option("--inputs", o->inputs)->check(CLI::IsMember({"integers", "primes"}));
  sub->add_option("--q", o->q, "common divisor of the steps to reduce by (default: their gcd)");
  sub->add_option("--report", o->report, "text | json")->check(CLI::IsMember({"text", "json"}));
  cmds.push_back({sub, [o, &g] {
    if (o->report == "json") g.json = true;
    const SymmetricGap A = make_gap(o->steps, o->widths, 0);
    const IntPolynomial h = need_poly(o->poly);
    const InputMode mode = parse_input_mode(o->inputs);
    const auto inst = make_detection_instance(A, h, mode, o->q ? std::optional<std::uint64_t>(o->q) : std::nullopt);
    const auto r = detection_count(inst);
    json j = header("detect");
    j["gap"] = gap_json(A);
    j["poly"] = h.to_string();
    j["inputs"] = std::string(to_string(mode));
    j["q"] = inst.q;
    j["r"] = inst.r;
    j["hq"] = inst.hq.to_string();
    j["major"] = inst.major;
    j["dk"] = inst.dk;
    j["n"] = inst.n;
    j["layer_widths"] = inst.layer_widths;
    j["physical"] = num(r.physical);
    j["spectral"] = num(r.spectral);
    j["spectral_imag"] = num(r.spectral_imag);
    j["difference"] = num(r.difference);
    j["tolerance"] = num(r.tolerance);
    j["consistent"] = r.consistent;
    j["main_term"] = num(r.main_term);
    j["tail_sum"] = num(r.tail_sum);
    j["tail_abs_sum"] = num(r.tail_abs_sum);
    j["positive"] = r.positive;
    j["exact_count"] = r.exact_count;
    j["exact_convolution"] = r.exact_convolution;
    j["set_size"] = r.set_size;
    if (r.witness) {
      j["witness"] = {{"m", r.witness->m}, {"input", r.witness->input}, {"value", big(r.witness->value)},
                      {"coords", r.witness->coords}};
    } else {
      j["witness"] = nullptr;
    }
    return j;
  }, [](const json& j) {
    return std::string(j["positive"].get<bool>() ? "positive" : "zero") + " (physical " + scalar_text(j["physical"]) +
           ", spectral " + scalar_text(j["spectral"]) + ")";
  }});
}

void cmd_weyl(CLI::App& app, std::vector<Command>& cmds) {
  struct Opts {
    std::string poly = "x^2", bound = "none", inputs = "integers";
    std::int64_t n = 0, t = 1;
    std::uint64_t d = 1, q = 1, r = 0;
    bool direct = false;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("weyl", "Evaluate a Weyl sum sum_{m<=n} e(h(m) t / d)");
  sub->add_option("--poly", o->poly);
  sub->add_option("--n", o->n)->required()->check(CLI::NonNegativeNumber);
  sub->add_option("--t", o->t);
  sub->add_option("--d", o->d)->required()->check(CLI::PositiveNumber);
  sub->add_option("--bound", o->bound, "lemma1 | lemma3 | none")->check(CLI::IsMember({"lemma1", "lemma3", "none"}));
  sub->add_option("--inputs", o->inputs, "primes: log-weighted sum over prime qm + r")
      ->check(CLI::IsMember({"integers", "primes"}));
  sub->add_option("--q", o->q)->check(CLI::PositiveNumber);
  sub->add_option("--r", o->r);
  sub->add_flag("--direct", o->direct, "reference summation");
  cmds.push_back({sub, [o] {
    const IntPolynomial h = need_poly(o->poly);
    json j = header("weyl");
    if (o->inputs == "primes") {
      if (o->bound != "none") throw UsageError("--bound applies to integer inputs only");
      const Complex v = prime_weyl_sum(h, o->q, o->r, o->n, o->t, o->d);
      j["poly"] = h.to_string();
      j["n"] = o->n;
      j["t"] = o->t;
      j["d"] = o->d;
      j["inputs"] = "primes";
      j["q"] = o->q;
      j["r"] = o->r;
      j["value"] = complex_json(v);
      j["magnitude"] = num(std::abs(v));
      return j;
    }
    if (o->direct && o->bound != "none") throw UsageError("--direct does not compute bounds");
    WeylReport rep;
    if (o->direct) {
      rep.poly = h.to_string();
      rep.n = o->n;
      rep.t = o->t;
      rep.d = o->d;
      rep.value = weyl_sum_direct(h, o->n, o->t, o->d);
      rep.magnitude = std::abs(rep.value);
      rep.bound_kind = "none";
    } else {
      rep = weyl_report(h, o->n, o->t, o->d, o->bound);
    }
    j["poly"] = rep.poly;
    j["n"] = rep.n;
    j["t"] = rep.t;
    j["d"] = rep.d;
    j["inputs"] = "integers";
    j["value"] = complex_json(rep.value);
    j["magnitude"] = num(rep.magnitude);
    j["bound_kind"] = rep.bound_kind;
    j["bound"] = rep.bound ? num(*rep.bound) : json(nullptr);
    j["ratio"] = rep.ratio ? num(*rep.ratio) : json(nullptr);
    return j;
  }, [](const json& j) { return "|W| = " + scalar_text(j["magnitude"]); }});
}

void cmd_weyl_verify(CLI::App& app, std::vector<Command>& cmds, Globals& g) {
  struct Opts {
    std::string grid;
    std::vector<std::int64_t> box;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("weyl-verify", "Check the explicit quadratic Weyl bound on a grid");
  auto* grid = sub->add_option("--grid", o->grid, "file of `n d a1 a2 t` lines")->check(CLI::ExistingFile);
  sub->add_option("--box", o->box, "nmax,dmax,cmin,cmax (default 200,200,-5,5)")->delimiter(',')->expected(4)->excludes(grid);
  cmds.push_back({sub, [o, &g] {
    Lemma1Report rep;
    json j = header("weyl-verify");
    if (!o->grid.empty()) {
      std::ifstream in(o->grid);
      if (!in) throw Error("cannot open " + o->grid);
      rep = verify_lemma1(read_lemma1_grid(in), g.threads);
      j["source"] = "grid";
    } else {
      std::vector<std::int64_t> b = o->box.empty() ? std::vector<std::int64_t>{200, 200, -5, 5} : o->box;
      if (b[1] < 1) throw UsageError("--box: dmax must be positive");
      rep = verify_lemma1_box(b[0], static_cast<std::uint64_t>(b[1]), b[2], b[3], g.threads);
      j["source"] = "box";
      j["box"] = {{"nmax", b[0]}, {"dmax", b[1]}, {"cmin", b[2]}, {"cmax", b[3]}};
    }
    auto inst = [](const Lemma1Instance& i) {
      return json{{"n", i.n}, {"d", i.d}, {"a1", i.a1}, {"a2", i.a2}, {"t", i.t}};
    };
    j["instances"] = rep.instances;
    j["violations"] = rep.violations;
    j["tolerance"] = Lemma1Report::kTolerance;
    j["max_ratio"] = num(rep.max_ratio);
    j["argmax"] = inst(rep.argmax);
    json bad = json::array();
    for (const auto& v : rep.violating) bad.push_back(inst(v));
    j["violating"] = bad;
    return j;
  }, [](const json& j) {
    return std::to_string(j["violations"].get<std::uint64_t>()) + " violations in " +
           std::to_string(j["instances"].get<std::uint64_t>()) + " instances";
  }});
}

void cmd_divisor(CLI::App& app, std::vector<Command>& cmds) {
  struct Opts {
    int j = 2;
    std::uint64_t M = 1;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("divisor-moment", "Exact sum of d_j(m)^2 over m <= M");
  sub->add_option("--j", o->j)->required()->check(CLI::Range(2, 4));
  sub->add_option("--M", o->M)->required()->check(CLI::PositiveNumber);
  cmds.push_back({sub, [o] {
    const auto r = divisor_moment(o->j, o->M);
    json j = header("divisor-moment");
    j["j"] = r.j;
    j["M"] = r.M;
    j["moment"] = big(r.moment);
    j["normalized"] = r.normalized ? num(*r.normalized) : json(nullptr);
    return j;
  }, [](const json& j) { return "moment = " + scalar_text(j["moment"]); }});
}

void cmd_psi(CLI::App& app, std::vector<Command>& cmds) {
  struct Opts {
    std::uint64_t x = 0, q = 1;
    std::int64_t a = 0;
    bool classes = false;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("psi", "Chebyshev psi over primes p <= x, p = a mod q");
  sub->add_option("--x", o->x)->required();
  sub->add_option("--a", o->a);
  sub->add_option("--q", o->q)->check(CLI::PositiveNumber);
  sub->add_flag("--classes", o->classes, "report every residue class");
  cmds.push_back({sub, [o] {
    const PrimeTable table(std::max<std::uint64_t>(o->x, 2));
    json j = header("psi");
    j["x"] = o->x;
    j["q"] = o->q;
    if (o->classes) {
      const auto cls = psi_classes(table, o->x, o->q);
      json rows = json::array();
      LogSum total;
      for (std::size_t a = 0; a < cls.size(); ++a) {
        total += cls[a];
        rows.push_back({{"a", a}, {"psi", num(cls[a].value())}});
      }
      j["classes"] = rows;
      j["total"] = num(total.value());
      j["additive"] = total == psi_fixed(table, o->x, 0, 1);
      return j;
    }
    j["a"] = o->a;
    j["psi"] = num(psi(table, o->x, o->a, o->q));
    const auto a_mod = mod_i64(o->a, o->q);
    j["lemma6_ratio"] = (std::gcd(a_mod, o->q) == 1 && o->x >= 1) ? num(lemma6_ratio(table, o->x, o->a, o->q)) : json(nullptr);
    return j;
  }, [](const json& j) { return j.contains("psi") ? "psi = " + scalar_text(j["psi"]) : "total = " + scalar_text(j["total"]); }});
}

void cmd_linnik(CLI::App& app, std::vector<Command>& cmds, Globals& g) {
  struct Opts { std::uint64_t qmax = 100; };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("linnik-scan", "Largest least prime in coprime classes mod q, q <= qmax");
  sub->add_option("--qmax", o->qmax)->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{5000}));
  cmds.push_back({sub, [o, &g] {
    const auto rows = linnik_scan(o->qmax, g.threads);
    json j = header("linnik-scan");
    j["qmax"] = o->qmax;
    json arr = json::array();
    double worst = 0;
    std::uint64_t worst_q = 0;
    for (const auto& r : rows) {
      arr.push_back({{"q", r.q}, {"worst_a", r.worst_a}, {"worst_prime", r.worst_prime}, {"ratio", num(r.ratio)},
                     {"log_exponent", num(r.log_exponent)}});
      if (r.q > 1 && r.log_exponent > worst) {
        worst = r.log_exponent;
        worst_q = r.q;
      }
    }
    j["max_log_exponent"] = num(worst);
    j["max_log_exponent_q"] = worst_q;
    j["rows"] = arr;
    return j;
  }, [](const json& j) {
    return "max log p/log q = " + scalar_text(j["max_log_exponent"]) + " at q = " + scalar_text(j["max_log_exponent_q"]);
  }});
}

json search_json(const SearchReport& rep) {
  const auto& c = rep.config;
  json j = header("extremal-search");
  j["config"] = {{"N", c.Ns},
                 {"dims", c.dims},
                 {"poly", c.h.to_string()},
                 {"inputs", std::string(to_string(c.inputs))},
                 {"strategy", std::string(to_string(c.strategy))},
                 {"seed", c.seed},
                 {"budget", c.budget},
                 {"restarts", c.restarts},
                 {"require_proper", c.filters.require_proper},
                 {"prime_major_step", c.filters.prime_major_step}};
  json results = json::array();
  for (const auto& r : rep.results) {
    results.push_back({{"N", r.N},
                       {"gap", r.best ? gap_json(*r.best) : json(nullptr)},
                       {"text", r.best ? json(r.best->to_string()) : json(nullptr)},
                       {"size", r.size},
                       {"proper", r.proper},
                       {"evaluations", r.evaluations},
                       {"cells", r.cells},
                       {"budget_exhausted", r.budget_exhausted},
                       {"max_avoiding_width", r.max_avoiding_width},
                       {"detection_consistent", r.detection_consistent ? json(*r.detection_consistent) : json(nullptr)},
                       {"note", r.note}});
  }
  j["results"] = results;
  return j;
}

std::vector<SearchResult> results_from_json(const json& j) {
  if (!j.contains("results") || !j["results"].is_array()) throw Error("input is not an extremal-search result file");
  std::vector<SearchResult> out;
  for (const auto& r : j["results"]) {
    SearchResult s;
    s.N = r.at("N").get<std::uint64_t>();
    if (!r.at("gap").is_null()) s.best = gap_from_json(r.at("gap"));
    s.size = r.at("size").get<std::uint64_t>();
    if (s.best && s.size != distinct_size(*s.best)) throw Error("result for N=" + std::to_string(s.N) + " has an inconsistent size");
    out.push_back(std::move(s));
  }
  return out;
}

void cmd_search(CLI::App& app, std::vector<Command>& cmds, Globals& g) {
  struct Opts {
    std::vector<std::uint64_t> Ns;
    int dims = 1, restarts = 8;
    std::string poly = "x^2", inputs = "integers", strategy = "exhaustive", out;
    std::uint64_t budget = 20000;
    bool proper = false, prime_major = false;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("extremal-search", "Search for large GAPs avoiding the values of h");
  sub->add_option("--N", o->Ns, "comma-separated ambient bounds")->required()->delimiter(',');
  sub->add_option("--dims", o->dims)->check(CLI::Range(1, 6));
  sub->add_option("--poly", o->poly);
  sub->add_option("--inputs", o->inputs)->check(CLI::IsMember({"integers", "primes"}));
  sub->add_option("--strategy", o->strategy, "exhaustive | hill_climb");
  sub->add_option("--budget", o->budget, "avoidance evaluations per N")->check(CLI::PositiveNumber);
  sub->add_option("--restarts", o->restarts)->check(CLI::Range(1, 1024));
  sub->add_flag("--require-proper", o->proper);
  sub->add_flag("--prime-major-step", o->prime_major, "the step with the largest L_i d_i must be prime");
  sub->add_option("--out", o->out, "also write the JSON result here");
  cmds.push_back({sub, [o, &g] {
    SearchConfig c;
    c.Ns = o->Ns;
    c.dims = o->dims;
    c.h = need_poly(o->poly);
    c.inputs = parse_input_mode(o->inputs);
    try {
      c.strategy = parse_search_strategy(o->strategy);
    } catch (const PreconditionError& e) {
      throw UsageError(e.what());
    }
    c.seed = g.seed;
    c.budget = o->budget;
    c.restarts = o->restarts;
    c.filters.require_proper = o->proper;
    c.filters.prime_major_step = o->prime_major;
    c.threads = g.threads;
    json j = search_json(extremal_search(c));
    if (!o->out.empty()) {
      std::ofstream f(o->out);
      if (!f) throw Error("cannot write " + o->out);
      f << j.dump(2) << '\n';
    }
    return j;
  }, [](const json& j) { return std::to_string(j["results"].size()) + " result(s)"; }});
}

void cmd_envelope(CLI::App& app, std::vector<Command>& cmds) {
  struct Opts {
    std::string in, theorem = "t1", csv, plot;
    int ell = 2, dims = 2;
    double c = 1.0;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("envelope-report", "Compare search results with a theorem's envelope");
  sub->add_option("--in", o->in, "extremal-search JSON")->required()->check(CLI::ExistingFile);
  sub->add_option("--theorem", o->theorem, "t1 | t2 | t3 | eq27 | sqrt")
      ->check(CLI::IsMember({"t1", "t2", "t3", "eq27", "sqrt"}));
  sub->add_option("--ell", o->ell, "degree for t2/t3/eq27")->check(CLI::Range(1, 30));
  sub->add_option("--dims", o->dims, "dimension for t2/t3/eq27")->check(CLI::Range(1, 64));
  sub->add_option("--c", o->c, "value for the unspecified constant in t3/eq27")->check(CLI::PositiveNumber);
  sub->add_option("--csv", o->csv);
  sub->add_option("--plot-data", o->plot);
  cmds.push_back({sub, [o] {
    std::ifstream in(o->in);
    json src;
    try {
      src = json::parse(in);
    } catch (const json::exception& e) {
      throw Error("cannot parse " + o->in + ": " + e.what());
    }
    const auto rep = envelope_report(results_from_json(src), parse_envelope(o->theorem), {o->ell, o->dims, o->c});
    if (!o->csv.empty()) {
      std::ofstream f(o->csv);
      if (!f) throw Error("cannot write " + o->csv);
      write_envelope_csv(rep, f);
    }
    if (!o->plot.empty()) {
      std::ofstream f(o->plot);
      if (!f) throw Error("cannot write " + o->plot);
      write_plot_data(rep, f);
    }
    json j = header("envelope-report");
    j["theorem"] = std::string(to_string(rep.theorem));
    j["params"] = {{"ell", rep.params.ell}, {"dims", rep.params.dims}, {"c", rep.params.c}};
    json rows = json::array();
    for (const auto& r : rep.rows) {
      rows.push_back({{"N", r.N}, {"best_size", r.best_size}, {"envelope", num(r.envelope)}, {"ratio", num(r.ratio)},
                      {"gap", r.gap ? json(r.gap->to_string()) : json(nullptr)}});
    }
    j["rows"] = rows;
    j["fitted_constant"] = num(rep.fitted_constant);
    j["min_ratio"] = num(rep.min_ratio);
    j["ratio_nonincreasing"] = rep.ratio_nonincreasing;
    return j;
  }, [](const json& j) { return "fitted constant " + scalar_text(j["fitted_constant"]); }});
}

void cmd_exponents(CLI::App& app, std::vector<Command>& cmds) {
  struct Opts {
    std::string poly = "x^2", inputs = "integers";
    int k = 1;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("exponents", "Numeric exponents of the theorem envelopes");
  sub->add_option("--poly", o->poly);
  sub->add_option("--k", o->k, "GAP dimension")->check(CLI::Range(1, 64));
  sub->add_option("--inputs", o->inputs)->check(CLI::IsMember({"integers", "primes"}));
  cmds.push_back({sub, [o] {
    const auto r = exponent_report(need_poly(o->poly), o->k, parse_input_mode(o->inputs));
    auto sym = [](const SymbolicExponent& s) {
      return json{{"formula", s.formula}, {"coefficient", num(s.coefficient)}, {"c_power", s.c_power}};
    };
    json j = header("exponents");
    j["ell"] = r.ell;
    j["k"] = r.k;
    j["inputs"] = std::string(to_string(r.inputs));
    j["t2"] = {{"exact", r.t2_exact}, {"value", num(r.t2)}};
    j["t3"] = sym(r.t3);
    j["t5"] = sym(r.t5);
    j["eq27"] = sym(r.eq27);
    return j;
  }, [](const json& j) { return "t2 exponent " + j["t2"]["exact"].get<std::string>(); }});
}

void cmd_shape(CLI::App& app, std::vector<Command>& cmds, Globals& g) {
  struct Opts {
    int lemma = 3, ell = 2, count = 7;
    std::int64_t base = 0;
    double U = 100.0, s = 5.0;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("shape-report", "Ratio envelopes of the implicit-constant bounds under doubling n");
  sub->add_option("--lemma", o->lemma, "3 | 4 | 5")->check(CLI::IsMember({3, 4, 5}));
  sub->add_option("--ell", o->ell, "degree of x^l (lemma 3)")->check(CLI::Range(1, 8));
  sub->add_option("--base", o->base, "first n (default 10 for lemma 3 with l = 2, 16 for l >= 3, else 100)");
  sub->add_option("--count", o->count, "number of doublings")->check(CLI::Range(1, 16));
  sub->add_option("--U", o->U, "fixed U (lemma 4)")->check(CLI::Range(1.0, 1e6));
  sub->add_option("--s", o->s, "moment exponent (lemma 5)");
  cmds.push_back({sub, [o, &g] {
    std::int64_t base = o->base;
    if (base == 0) base = o->lemma == 3 ? (o->ell == 2 ? 10 : 16) : 100;
    if (base < 2) throw UsageError("--base must be at least 2");
    const auto ns = doubling_sequence(base, o->count);
    ShapeFamilyReport rep;
    if (o->lemma == 3) rep = lemma3_family(o->ell, ns, g.threads);
    else if (o->lemma == 4) rep = lemma4_family(ns, o->U, g.threads);
    else rep = lemma5_family(ns, o->s);
    json j = header("shape-report");
    j["lemma"] = o->lemma;
    j["family"] = rep.name;
    j["log_space"] = rep.log_space;
    json rows = json::array();
    for (const auto& r : rep.rows) {
      rows.push_back({{"n", r.n}, {"d", r.d}, {"envelope", num(r.envelope)}, {"argmax_t", r.argmax_t}});
    }
    j["rows"] = rows;
    j["max_doubling_factor"] = num(rep.max_doubling_factor);
    j["stability_factor"] = ShapeFamilyReport::kStabilityFactor;
    j["stable"] = rep.stable();
    return j;
  }, [](const json& j) {
    return std::string(j["stable"].get<bool>() ? "stable" : "unstable") + " (max doubling factor " +
           scalar_text(j["max_doubling_factor"]) + ")";
  }});
}

// ---------------------------------------------------------------------------
// Config file: `key = value` lines, '#' comments. Keys are long flag names
// without dashes; anything given on the command line wins.

std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  auto given = [&](const std::string& key) {
    for (const auto& a : args) {
      if (a == "--" + key || a.rfind("--" + key + "=", 0) == 0) return true;
    }
    return false;
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.empty() || key == "config") throw UsageError(path + ":" + std::to_string(lineno) + ": bad key");
    if (!given(key)) args.push_back("--" + key + "=" + value);
  }
  return args;
}

class GuardScaleScope {
 public:
  GuardScaleScope() : saved_(guard_scale()) {}
  ~GuardScaleScope() { set_guard_scale(saved_); }
  GuardScaleScope(const GuardScaleScope&) = delete;
  GuardScaleScope& operator=(const GuardScaleScope&) = delete;

 private:
  double saved_;
};

}  // namespace

int dispatch(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  GuardScaleScope scope;
  Globals g;
  if (const char* env = std::getenv("GAPLAB_GUARD_SCALE")) {
    try {
      g.guard_scale = std::stod(env);
    } catch (const std::exception&) {
      err << "error: GAPLAB_GUARD_SCALE is not a number\n";
      return 2;
    }
  }

  CLI::App app{"gaplab: squares and polynomial values in generalized arithmetic progressions", "gaplab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--threads", g.threads, "maximum worker threads")->check(CLI::Range(1, 1024));
  app.add_option("--guard-scale", g.guard_scale, "multiplier on enumeration guards (env GAPLAB_GUARD_SCALE)");
  app.add_option("--config", g.config, "file of key = value defaults");

  std::vector<Command> cmds;
  cmd_poly(app, cmds);
  cmd_intersective(app, cmds, g);
  cmd_roots(app, cmds);
  cmd_gap_avoids(app, cmds);
  cmd_gap_info(app, cmds);
  cmd_detect(app, cmds, g);
  cmd_weyl(app, cmds);
  cmd_weyl_verify(app, cmds, g);
  cmd_divisor(app, cmds);
  cmd_psi(app, cmds);
  cmd_linnik(app, cmds, g);
  cmd_search(app, cmds, g);
  cmd_envelope(app, cmds);
  cmd_exponents(app, cmds);
  cmd_shape(app, cmds, g);

  try {
    std::vector<std::string> args = apply_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
    if (!(g.guard_scale >= 0.1 && g.guard_scale <= 10.0)) throw UsageError("guard scale must lie in [0.1, 10]");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  set_guard_scale(g.guard_scale);
  for (const auto& c : cmds) {
    if (!c.app->parsed()) continue;
    try {
      const json j = c.run();
      if (g.json) {
        out << j.dump(2) << '\n';
      } else {
        out << c.summary(j) << '\n';
        render(j, out);
      }
      return 0;
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << '\n';
      return 2;
    } catch (const ParseError& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
  }
  return 2;
}

}  // namespace gaplab::cli
