#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pcoinv/pcoinv.hpp"

namespace pcoinv::cli {

namespace {

struct Options {
  std::string alpha;
  std::string shape;
  std::string weights;
  std::string method;
  std::string out_file;
  int n = 0;
  int k = 0;
  int m = 0;
  int r = -1;
  int rmax = -1;
  int max_n = 0;
  long budget = kDefaultEnumerationBudget;
  bool json = false;
  bool timing = false;
  bool deformed = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  std::string command;
  Json parameters = Json::object();
  Json results = Json::object();
  std::vector<std::string> lines;
  bool failed = false;
  std::string witness;

  void line(const std::string& s) { lines.push_back(s); }
  void fail(const std::string& w) {
    if (!failed) witness = w;
    failed = true;
  }
};

Composition need_alpha(const Options& o) {
  if (o.alpha.empty()) throw UsageError("--alpha is required");
  return parse_composition(o.alpha);
}

int need_positive(int v, const char* flag) {
  if (v < 1) throw UsageError(std::string(flag) + " must be a positive integer");
  return v;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string set_string(const std::vector<int>& v) { return "{" + join(v) + "}"; }

std::string points_string(const std::vector<Point>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ", ";
    s += "(" + join(pts[i]) + ")";
  }
  return s + "}";
}

Json points_json(const std::vector<Point>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(p);
  return a;
}

// ---- stats ----

void stats_words(const Options& o, Report& rep) {
  const Composition alpha = need_alpha(o);
  rep.parameters["alpha"] = alpha;
  Json words = Json::array();
  rep.line("alpha: " + join(alpha));
  rep.line(pad("word", 10) + pad("des", 5) + pad("maj", 5) + "descents");
  for (const Word& w : enumerate_words(alpha)) {
    const WordStats s = word_stats(w);
    rep.line(pad(word_to_string(w), 10) + pad(std::to_string(s.des), 5) + pad(std::to_string(s.maj), 5) +
             set_string(s.descents));
    words.push_back({{"word", word_to_string(w)}, {"descents", s.descents}, {"des", s.des}, {"maj", s.maj}});
  }
  const BiPoly a = A_alpha(alpha);
  rep.line("A(t,q) = " + a.to_string());
  rep.results["words"] = words;
  rep.results["count"] = words.size();
  rep.results["A"] = bipoly_to_json(a);
  rep.results["A_text"] = a.to_string();
}

void stats_syt(const Options& o, Report& rep) {
  std::vector<Partition> shapes;
  if (!o.shape.empty()) {
    shapes.push_back(parse_partition(o.shape));
    rep.parameters["shape"] = shapes.front();
  } else {
    rep.parameters["n"] = need_positive(o.n, "--n");
    shapes = enumerate_partitions(o.n);
  }
  Json out = Json::array();
  Integer square_sum = 0;
  for (const Partition& l : shapes) {
    const auto tabs = enumerate_syt(l);
    Json tj = Json::array();
    rep.line("shape " + join(l) + ": " + std::to_string(tabs.size()) + " tableaux");
    for (const auto& e : tabs) {
      std::string rows;
      for (const auto& row : e.tableau.rows) rows += "[" + join(row) + "]";
      rep.line("  " + pad(rows, 24) + "des=" + std::to_string(e.des) + " maj=" + std::to_string(e.maj));
      tj.push_back({{"rows", tableau_to_json(e.tableau)}, {"des", e.des}, {"maj", e.maj}});
    }
    const BiPoly g = syt_generating_function(l);
    rep.line("  sum t^des q^maj = " + g.to_string());
    out.push_back({{"shape", l}, {"tableaux", tj}, {"generating_function", bipoly_to_json(g)}});
    square_sum += Integer(static_cast<long>(tabs.size())) * static_cast<long>(tabs.size());
  }
  rep.results["shapes"] = out;
  if (o.shape.empty()) {
    const bool ok = square_sum == factorial(o.n);
    rep.line("sum of squares = " + to_string(square_sum) + (ok ? " = n!" : " != n!"));
    rep.results["square_sum"] = to_string(square_sum);
    if (!ok) rep.fail("sum of |SYT|^2 differs from n!");
  }
}

// ---- qseries / ehrhart ----

void qseries_multinomial(const Options& o, Report& rep) {
  const Composition alpha = need_alpha(o);
  rep.parameters["alpha"] = alpha;
  const QPoly p = q_multinomial(alpha);
  rep.line("[" + std::to_string(total(alpha)) + "; " + join(alpha) + "]_q = " + p.to_string());
  rep.results["q_multinomial"] = qpoly_to_json(p);
  rep.results["text"] = p.to_string();
}

void qseries_eulerian(const Options& o, Report& rep) {
  const Composition alpha = o.alpha.empty() ? ones(need_positive(o.n, "--n or --alpha")) : parse_composition(o.alpha);
  rep.parameters["alpha"] = alpha;
  const BiPoly a = A_alpha(alpha);
  const bool t_one_ok = a.at_t_one() == q_multinomial(alpha);
  rep.line("A(t,q) = " + a.to_string());
  rep.line("A(t,1) = " + a.at_q_one().to_string("t"));
  rep.line("A(1,q) = " + a.at_t_one().to_string() + (t_one_ok ? "  (q-multinomial)" : "  (differs from q-multinomial)"));
  rep.line(std::string("palindromic: ") + (a.is_palindromic() ? "yes" : "no"));
  rep.results["A"] = bipoly_to_json(a);
  rep.results["A_text"] = a.to_string();
  rep.results["newcomb"] = qpoly_to_json(a.at_q_one());
  rep.results["palindromic"] = a.is_palindromic();
  rep.results["t1_equals_q_multinomial"] = t_one_ok;
  if (!t_one_ok) rep.fail("A(1,q) differs from the q-multinomial");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed integer list: '" + text + "'");
    }
    if (used != item.size()) throw UsageError("malformed integer list: '" + text + "'");
    out.push_back(v);
  }
  return out;
}

void ehrhart(const Options& o, Report& rep) {
  const Composition alpha = need_alpha(o);
  PolytopeSpec spec = PolytopeSpec::product_of_simplices(alpha);
  if (!o.weights.empty()) spec.weights = parse_int_list(o.weights);
  spec.validate();
  rep.parameters["alpha"] = alpha;
  rep.parameters["weights"] = spec.weights;
  rep.parameters["budget"] = o.budget;
  int lo = 0, hi = 0;
  if (o.r >= 0) {
    lo = hi = o.r;
    rep.parameters["r"] = o.r;
  } else {
    hi = o.rmax >= 0 ? o.rmax : 4;
    rep.parameters["rmax"] = hi;
  }
  Json rows = Json::array();
  for (int r = lo; r <= hi; ++r) {
    const QPoly p = q_ehrhart(spec, r, o.budget);
    const bool count_ok = p.at_one() == Rational(spec.lattice_point_count(r));
    rep.line("r=" + std::to_string(r) + ": " + p.to_string());
    rows.push_back({{"r", r}, {"L", qpoly_to_json(p)}, {"points", to_string(spec.lattice_point_count(r))}});
    if (!count_ok) rep.fail("point count mismatch at r=" + std::to_string(r));
  }
  rep.results["dilations"] = rows;
}

// ---- hilbert ----

std::string series_text(const BiSeries& s) {
  std::string out;
  for (int r = 0; r <= s.order(); ++r) {
    out += "  t^" + std::to_string(r) + ": " + s.coeff(r).to_string() + "\n";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

void hilbert_segre(const Options& o, Report& rep) {
  const Composition alpha = need_alpha(o);
  const int order = o.rmax >= 0 ? o.rmax : 5;
  const std::string method = o.method.empty() ? "both" : o.method;
  if (method != "lattice" && method != "closed_form" && method != "both") {
    throw UsageError("--method must be lattice, closed_form or both");
  }
  rep.parameters["alpha"] = alpha;
  rep.parameters["rmax"] = order;
  rep.parameters["method"] = method;
  const BiPoly num = A_alpha(alpha);
  rep.line("numerator A(t,q) = " + num.to_string());
  rep.line("denominator = prod_{j=0}^{" + std::to_string(total(alpha)) + "} (1 - t*q^j)");
  rep.results["numerator"] = bipoly_to_json(num);
  std::optional<BiSeries> lat, closed;
  if (method != "closed_form") lat = segre_hilbert(alpha, order, SegreMethod::lattice, o.budget);
  if (method != "lattice") closed = segre_hilbert(alpha, order, SegreMethod::closed_form, o.budget);
  const BiSeries& shown = lat ? *lat : *closed;
  rep.line(series_text(shown));
  rep.results["series"] = biseries_to_json(shown);
  if (lat && closed) {
    const bool agree = *lat == *closed;
    rep.line(std::string("lattice == closed_form: ") + (agree ? "yes" : "no"));
    rep.results["methods_agree"] = agree;
    if (!agree) rep.fail("lattice and closed-form series differ");
  }
}

void hilbert_quotient(const Options& o, Report& rep) {
  const Composition alpha = need_alpha(o);
  rep.parameters["alpha"] = alpha;
  const HilbertResult h = hilbert_P(alpha);
  const BiPoly a = A_alpha(alpha);
  rep.line("Hilb(P_alpha) = " + h.series.to_string());
  rep.line("A_alpha(t,q)  = " + a.to_string());
  rep.line(std::string("palindromic: ") + (h.series.is_palindromic() ? "yes" : "no"));
  rep.results["hilbert"] = bipoly_to_json(h.series);
  rep.results["hilbert_text"] = h.series.to_string();
  rep.results["equals_A_alpha"] = h.series == a;
  rep.results["palindromic"] = h.series.is_palindromic();
  rep.results["rows"] = h.rows;
  if (!h.ok) rep.fail(h.message);
  else if (!(h.series == a)) rep.fail("Hilbert series differs from A_alpha");
}

void hilbert_partial(const Options& o, Report& rep) {
  const Composition alpha = need_alpha(o);
  rep.parameters["alpha"] = alpha;
  const Presentation p = presentation_R_symbolic(alpha);
  const Elimination el = eliminate(p);
  Json gens = Json::array(), rels = Json::array();
  rep.line("generators:");
  for (const auto& g : p.generators) {
    rep.line("  " + g.to_string());
    gens.push_back(g.to_string());
  }
  rep.line("after elimination:");
  for (const auto& [v, value] : el.substitutions) rep.line("  " + p.ring->names[static_cast<std::size_t>(v)] + " = " + value.to_string());
  for (const auto& g : el.relations) {
    rep.line("  relation " + g.to_string());
    rels.push_back(g.to_string());
  }
  const HilbertRResult h = hilbert_R(alpha);
  const QPoly target = q_multinomial(alpha);
  rep.line("Hilb(R_alpha) = " + h.series.to_string());
  rep.line("q-multinomial = " + target.to_string());
  rep.results["generators"] = gens;
  rep.results["relations"] = rels;
  rep.results["hilbert"] = qpoly_to_json(h.series);
  rep.results["hilbert_text"] = h.series.to_string();
  rep.results["equals_q_multinomial"] = h.series == target;
  if (!h.ok) rep.fail(h.message);
  else if (!(h.series == target)) rep.fail("Hilbert series differs from the q-multinomial");
}

// ---- character ----

void character_pn(const Options& o, Report& rep) {
  const int n = need_positive(o.n, "--n");
  const std::string method = o.method.empty() ? "syt" : o.method;
  rep.parameters["n"] = n;
  rep.parameters["method"] = method;
  std::vector<std::pair<std::string, CharMethod>> methods;
  if (method == "syt" || method == "all") methods.emplace_back("syt", CharMethod::syt);
  if (method == "koszul" || method == "all") methods.emplace_back("koszul", CharMethod::koszul);
  if (method == "trace" || method == "all") methods.emplace_back("trace", CharMethod::trace);
  if (methods.empty()) throw UsageError("--method must be syt, koszul, trace or all");
  std::optional<SymFunc> first;
  for (const auto& [name, m] : methods) {
    const CharResult c = char_P(n, m);
    if (!c.ok) rep.fail(name + ": " + c.message);
    if (methods.size() == 1) rep.line(c.value.to_string());
    else rep.line(name + ": " + c.value.to_string());
    rep.results[name] = symfunc_to_json(c.value);
    if (!first) first = c.value;
    else if (!(c.value == *first)) rep.fail(name + " differs from " + methods.front().first);
  }
  if (methods.size() > 1) rep.results["methods_agree"] = !rep.failed;
}

void character_residual(const Options& o, Report& rep) {
  const int k = need_positive(o.k, "--k");
  const int m = need_positive(o.m, "--m");
  const std::string method = o.method.empty() ? "plethysm" : o.method;
  rep.parameters["k"] = k;
  rep.parameters["m"] = m;
  rep.parameters["method"] = method;
  std::vector<std::pair<std::string, ResidualMethod>> methods;
  if (method == "plethysm" || method == "all") methods.emplace_back("plethysm", ResidualMethod::plethysm);
  if (method == "trace" || method == "all") methods.emplace_back("trace", ResidualMethod::trace);
  if (methods.empty()) throw UsageError("--method must be plethysm, trace or all");
  std::optional<SymFunc> first;
  for (const auto& [name, meth] : methods) {
    const CharResult c = residual_char(k, m, meth);
    if (!c.ok) rep.fail(name + ": " + c.message);
    if (methods.size() == 1) rep.line(c.value.to_string());
    else rep.line(name + ": " + c.value.to_string());
    rep.results[name] = symfunc_to_json(c.value);
    if (!first) first = c.value;
    else if (!(c.value == *first)) rep.fail(name + " differs from " + methods.front().first);
  }
  if (methods.size() > 1) rep.results["methods_agree"] = !rep.failed;
}

// ---- basis ----

void basis(const Options& o, Report& rep) {
  const Composition alpha = need_alpha(o);
  rep.parameters["alpha"] = alpha;
  rep.parameters["deformed"] = o.deformed;
  Json entries = Json::array();
  if (!o.deformed) {
    rep.line(pad("word", 10) + pad("des", 5) + pad("maj", 5) + pad("descent points", 28) + "a_w");
    for (const Word& w : enumerate_words(alpha)) {
      const DescentMonomial dm = a_monomial(alpha, w);
      rep.line(pad(word_to_string(w), 10) + pad(std::to_string(dm.des), 5) + pad(std::to_string(dm.maj), 5) +
               pad(points_string(dm.descent_points), 28) + dm.factors_string());
      entries.push_back({{"word", word_to_string(w)},
                         {"des", dm.des},
                         {"maj", dm.maj},
                         {"descent_points", points_json(dm.descent_points)},
                         {"a_w", dm.factors_string()}});
    }
  } else {
    rep.line(pad("word", 10) + pad("maj", 5) + pad("b_w", 20) + "normal form");
    for (const auto& d : deformed_basis(alpha)) {
      rep.line(pad(word_to_string(d.word), 10) + pad(std::to_string(d.maj), 5) + pad(d.b.to_string(), 20) +
               d.normal_form.to_string());
      entries.push_back({{"word", word_to_string(d.word)},
                         {"maj", d.maj},
                         {"b_w", d.b.to_string()},
                         {"normal_form", d.normal_form.to_string()}});
    }
  }
  rep.results["basis"] = entries;
}

// ---- verify ----

struct SuiteItem {
  std::string name;
  bool ok = false;
  std::string witness;
};

struct Suite {
  std::vector<SuiteItem> items;
  int capped_at = 0;  // nonzero when --max-n was lowered to the suite maximum
  void push_back(SuiteItem it) { items.push_back(std::move(it)); }
};

std::vector<int> n_range(const Options& o, Suite& s, int default_max, int hard_max) {
  if (o.n > 0) {
    if (o.n > hard_max) throw UsageError("--n exceeds the supported maximum " + std::to_string(hard_max));
    return {o.n};
  }
  if (o.max_n > hard_max) s.capped_at = hard_max;
  const int top = std::min(o.max_n > 0 ? o.max_n : default_max, hard_max);
  std::vector<int> ns;
  for (int n = 1; n <= top; ++n) ns.push_back(n);
  return ns;
}

std::string alpha_tag(const Composition& a) { return "(" + join(a) + ")"; }

void suite_macmahon(const Options& o, Suite& s) {
  const int order = o.rmax >= 0 ? o.rmax : 8;
  for (int n : n_range(o, s, 6, 8)) {
    for (const auto& a : enumerate_compositions(n)) {
      const MacMahonReport r = macmahon_check(a, order);
      s.push_back({"macmahon " + alpha_tag(a), r.holds, r.holds ? "" : "t-degree " + std::to_string(r.first_mismatch)});
    }
  }
}

void suite_hilbert(const Options& o, Suite& s) {
  for (int n : n_range(o, s, 4, 6)) {
    ClassTraceTable table(n);
    for (const auto& a : enumerate_compositions(n)) {
      const HilbertResult h = hilbert_P(a);
      const bool p_ok = h.ok && h.series == A_alpha(a);
      s.push_back({"hilbert_P " + alpha_tag(a), p_ok, p_ok ? "" : (h.ok ? "differs from A_alpha" : h.message)});
      const BiPoly inv = invariant_hilbert(table, a);
      const bool inv_ok = inv == h.series && inv.at_t_one() == q_multinomial(a);
      s.push_back({"invariant_dim " + alpha_tag(a), inv_ok, inv_ok ? "" : "invariant table differs"});
      const HilbertRResult hr = hilbert_R(a);
      const bool r_ok = hr.ok && hr.series == q_multinomial(a) && hr.series == h.series.at_t_one();
      s.push_back({"hilbert_R " + alpha_tag(a), r_ok, r_ok ? "" : (hr.ok ? "differs from q-multinomial" : hr.message)});
      const bool seg = segre_hilbert(a, 5, SegreMethod::lattice, o.budget) == segre_hilbert(a, 5, SegreMethod::closed_form);
      s.push_back({"segre_hilbert " + alpha_tag(a), seg, seg ? "" : "lattice and closed form differ"});
    }
  }
}

void suite_character(const Options& o, Suite& s) {
  for (int n : n_range(o, s, 4, 6)) {
    const SymFunc syt = char_P(n, CharMethod::syt).value;
    const CharResult kz = char_P(n, CharMethod::koszul);
    s.push_back({"char_P koszul n=" + std::to_string(n), kz.ok && kz.value == syt, kz.ok ? "" : kz.message});
    if (n <= 5) {
      const CharResult tr = char_P(n, CharMethod::trace);
      s.push_back({"char_P trace n=" + std::to_string(n), tr.ok && tr.value == syt, tr.ok ? "" : tr.message});
    }
    for (int k = 2; k <= n; ++k) {
      if (n % k != 0) continue;
      const int m = n / k;
      const CharResult a = residual_char(k, m, ResidualMethod::plethysm);
      const CharResult b = residual_char(k, m, ResidualMethod::trace);
      const bool ok = a.ok && b.ok && a.value == b.value;
      s.push_back({"residual k=" + std::to_string(k) + " m=" + std::to_string(m), ok, ok ? "" : "methods differ"});
    }
  }
}

void suite_invariants(const Options& o, Suite& s) {
  const int rmax = o.rmax >= 0 ? o.rmax : 4;
  for (int n : n_range(o, s, 4, 5)) {
    const InvariantsReport r = invariants_free_check(n, rmax);
    std::string w;
    for (const auto& c : r.cells) {
      if (c.invariant_dim != c.monomial_count) {
        w = "bidegree (" + std::to_string(c.r) + "," + std::to_string(c.e) + ")";
        break;
      }
    }
    s.push_back({"invariants n=" + std::to_string(n), r.ok, w});
  }
}

void suite_bases(const Options& o, Suite& s) {
  for (int n : n_range(o, s, 4, 5)) {
    for (const auto& a : enumerate_compositions(n)) {
      const BasisReport ra = verify_a_basis(a);
      s.push_back({"a-basis " + alpha_tag(a), ra.ok, ra.witness});
      const BasisReport rb = verify_b_basis(a);
      s.push_back({"b-basis " + alpha_tag(a), rb.ok, rb.witness});
    }
  }
}

void suite_fibre(const Options& o, Suite& s) {
  for (int n : n_range(o, s, 4, 5)) {
    const FibreReport f = semisimple_fibre_check(n);
    s.push_back({"semisimple fibre n=" + std::to_string(n) + " rank " + std::to_string(f.rank) + "/" +
                     std::to_string(f.points),
                 f.ok, f.witness});
    if (n <= 4) {
      const FibreIsoReport g = fibre_isomorphism_check(n);
      s.push_back({"fibre isomorphism n=" + std::to_string(n), g.ok, g.witness});
    }
  }
}

void suite_phi(const Options& o, Suite& s) {
  for (int n : n_range(o, s, 4, 4)) {
    const PhiTrivialReport r = phi_trivial_check(n);
    std::string w;
    if (!r.failures.empty()) w = "not in ideal: " + r.failures.front();
    s.push_back({"phi trivial n=" + std::to_string(n), r.all_zero, w});
    if (n >= 2) s.push_back({"non-vacuity control n=" + std::to_string(n), r.control_ok, r.control_ok ? "" : "a1 in ideal"});
  }
}

void verify(const Options& o, Report& rep, const std::string& which) {
  rep.parameters["suite"] = which;
  if (o.n > 0) rep.parameters["n"] = o.n;
  if (o.max_n > 0) rep.parameters["max_n"] = o.max_n;
  if (o.rmax >= 0) rep.parameters["rmax"] = o.rmax;
  const std::vector<std::pair<std::string, std::function<void(const Options&, Suite&)>>> suites = {
      {"macmahon", suite_macmahon}, {"hilbert", suite_hilbert}, {"character", suite_character},
      {"invariants", suite_invariants}, {"bases", suite_bases}, {"fibre", suite_fibre},
      {"phi-trivial", suite_phi}};
  Json items = Json::array();
  Json capped = Json::object();
  for (const auto& [name, fn] : suites) {
    if (which != "all" && which != name) continue;
    Suite s;
    fn(o, s);
    if (s.capped_at > 0) {
      rep.line("note  " + name + ": --max-n lowered to " + std::to_string(s.capped_at));
      capped[name] = s.capped_at;
    }
    for (const auto& it : s.items) {
      rep.line(pad(it.ok ? "PASS" : "FAIL", 6) + name + ": " + it.name + (it.witness.empty() ? "" : "  [" + it.witness + "]"));
      Json j = {{"suite", name}, {"item", it.name}, {"ok", it.ok}};
      if (!it.witness.empty()) j["witness"] = it.witness;
      items.push_back(j);
      if (!it.ok) rep.fail(name + ": " + it.name + (it.witness.empty() ? "" : " (" + it.witness + ")"));
    }
  }
  rep.results["items"] = items;
  if (!capped.empty()) rep.results["max_n_capped"] = capped;
}

void add_common(CLI::App* sc, Options& o) {
  sc->add_flag("--json", o.json, "Emit the report as JSON");
  sc->add_option("--out", o.out_file, "Also write the JSON report to this file");
  sc->add_flag("--timing", o.timing, "Include wall-clock timing in the report");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations for projective coinvariant algebras and their Young invariants", "pcoinv"};
  app.require_subcommand(1);
  std::string command;
  std::function<void(Report&)> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, const std::string& full,
                  std::function<void(Report&)> fn) {
    CLI::App* sc = parent->add_subcommand(name, desc);
    add_common(sc, o);
    sc->callback([&, full, fn] {
      command = full;
      action = fn;
    });
    return sc;
  };
  auto alpha_opt = [&](CLI::App* sc) { sc->add_option("--alpha", o.alpha, "Composition, e.g. 2,1"); };

  CLI::App* stats = app.add_subcommand("stats", "Word and tableau statistics");
  stats->require_subcommand(1);
  alpha_opt(leaf(stats, "words", "Multiset words with des and maj", "stats words", [&](Report& r) { stats_words(o, r); }));
  {
    CLI::App* sc = leaf(stats, "syt", "Standard Young tableaux with des and maj", "stats syt", [&](Report& r) { stats_syt(o, r); });
    sc->add_option("--shape", o.shape, "Partition, e.g. 2,1");
    sc->add_option("--n", o.n, "All shapes of size n");
  }

  CLI::App* qs = app.add_subcommand("qseries", "q-analogs");
  qs->require_subcommand(1);
  alpha_opt(leaf(qs, "multinomial", "q-multinomial coefficient", "qseries multinomial", [&](Report& r) { qseries_multinomial(o, r); }));
  {
    CLI::App* sc = leaf(qs, "eulerian", "A_alpha(t,q) = sum t^des q^maj", "qseries eulerian", [&](Report& r) { qseries_eulerian(o, r); });
    alpha_opt(sc);
    sc->add_option("--n", o.n, "Use alpha = (1^n)");
  }

  {
    CLI::App* sc = leaf(&app, "ehrhart", "q-weighted lattice points of dilated products of simplices", "ehrhart",
                        [&](Report& r) { ehrhart(o, r); });
    alpha_opt(sc);
    sc->add_option("--weights", o.weights, "Integer weight per coordinate (default 1..alpha_1, 1..alpha_2, ...)");
    sc->add_option("--r", o.r, "Single dilation");
    sc->add_option("--rmax", o.rmax, "Dilations 0..rmax (default 4)");
    sc->add_option("--budget", o.budget, "Maximum number of lattice points to enumerate");
  }

  CLI::App* hil = app.add_subcommand("hilbert", "Hilbert series");
  hil->require_subcommand(1);
  {
    CLI::App* sc = leaf(hil, "segre", "Bigraded Hilbert series of T_alpha", "hilbert segre", [&](Report& r) { hilbert_segre(o, r); });
    alpha_opt(sc);
    sc->add_option("--rmax", o.rmax, "Truncation order in t (default 5)");
    sc->add_option("--method", o.method, "lattice, closed_form or both (default)");
    sc->add_option("--budget", o.budget, "Maximum number of lattice points per dilation");
  }
  alpha_opt(leaf(hil, "quotient", "Bigraded Hilbert series of P_alpha", "hilbert quotient", [&](Report& r) { hilbert_quotient(o, r); }));
  alpha_opt(leaf(hil, "partial", "Presentation and Hilbert series of R_alpha", "hilbert partial", [&](Report& r) { hilbert_partial(o, r); }));

  CLI::App* ch = app.add_subcommand("character", "Frobenius characters");
  ch->require_subcommand(1);
  {
    CLI::App* sc = leaf(ch, "pn", "Bigraded character of P_n", "character pn", [&](Report& r) { character_pn(o, r); });
    sc->add_option("--n", o.n, "n");
    sc->add_option("--method", o.method, "syt (default), koszul, trace or all");
  }
  {
    CLI::App* sc = leaf(ch, "residual", "S_k character of P_(m^k)", "character residual", [&](Report& r) { character_residual(o, r); });
    sc->add_option("--k", o.k, "k");
    sc->add_option("--m", o.m, "m");
    sc->add_option("--method", o.method, "plethysm (default), trace or all");
  }

  {
    CLI::App* sc = leaf(&app, "basis", "Descent monomial basis", "basis", [&](Report& r) { basis(o, r); });
    alpha_opt(sc);
    sc->add_flag("--deformed", o.deformed, "List b_w in R_alpha instead of a_w in P_alpha");
  }

  CLI::App* ver = app.add_subcommand("verify", "Verification suites");
  ver->require_subcommand(1);
  for (const std::string name : {"macmahon", "hilbert", "character", "invariants", "bases", "fibre", "phi-trivial", "all"}) {
    CLI::App* sc = leaf(ver, name, "Run the " + name + " suite", "verify " + name, [&, name](Report& r) { verify(o, r, name); });
    sc->add_option("--n", o.n, "Single n");
    sc->add_option("--max-n", o.max_n, "Run n = 1..max-n");
    sc->add_option("--rmax", o.rmax, "Truncation order where applicable");
    sc->add_option("--budget", o.budget, "Lattice point budget where applicable");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  Report rep;
  rep.command = command;
  std::string status = "ok";
  std::string error_message;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    action(rep);
    if (rep.failed) status = "fail";
  } catch (const BudgetExceeded& e) {
    status = "error";
    error_message = e.what();
  } catch (const UsageError& e) {
    status = "error";
    error_message = e.what();
  } catch (const std::invalid_argument& e) {
    status = "error";
    error_message = e.what();
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  Json doc = {{"command", rep.command}, {"parameters", rep.parameters}, {"status", status}, {"results", rep.results}};
  if (status == "fail") doc["witness"] = rep.witness;
  if (status == "error") doc["error"] = error_message;
  if (o.timing) doc["timing_ms"] = ms;

  if (o.json) {
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& l : rep.lines) out << l << "\n";
    if (status == "fail") out << "witness: " << rep.witness << "\n";
    if (o.timing) out << "time: " << ms << " ms\n";
    out << "status: " << status << "\n";
  }
  if (status == "error") err << "error: " << error_message << "\n";
  if (!o.out_file.empty()) {
    std::ofstream f(o.out_file);
    if (!f) {
      err << "error: cannot write " << o.out_file << "\n";
      return 2;
    }
    f << doc.dump(2) << "\n";
  }
  if (status == "ok") return 0;
  if (status == "fail") return 1;
  return 2;
}

}  // namespace pcoinv::cli
