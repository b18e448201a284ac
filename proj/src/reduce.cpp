#include "rainbow/reduce.hpp"

#include <algorithm>

#include "rainbow/graph_io.hpp"

namespace rainbow {

namespace {

std::string num(int x) { return std::to_string(x); }

// Gadget variants: the plain hexagon/lane cycle, the triangulated version,
// the completed-to-clique version, and the degree-3 version.
enum class Variant { Plain, Chorded, Clique, Cubic };

void validate_formula(const CnfFormula& f) {
  if (f.clause_count() == 0) throw ParseError("formula must have at least one clause");
  if (f.variable_count < 1) throw ParseError("formula must have at least one variable");
  for (size_t j = 0; j < f.clauses.size(); ++j) {
    if (f.clauses[j].empty() || f.clauses[j].size() > 3)
      throw ParseError("clause " + num(static_cast<int>(j) + 1) + " has size " +
                       num(static_cast<int>(f.clauses[j].size())) + " (must be 1..3)");
    for (const Literal& l : f.clauses[j])
      if (l.variable < 1 || l.variable > f.variable_count)
        throw ParseError("clause " + num(static_cast<int>(j) + 1) + " references variable " +
                         num(l.variable) + " outside 1.." + num(f.variable_count));
  }
  auto violations = validate_occurrence(f);
  if (!violations.empty())
    throw ParseError("variable " + num(violations.front().variable) +
                     " occurs more than three times");
}

struct Builder {
  const CnfFormula& f;
  OccurrenceIndex occ;
  Variant variant;
  EdgeColoredGraph g;
  std::vector<std::pair<std::string, std::vector<Vertex>>> gadgets;
  int fresh_counter = 0;

  Builder(const CnfFormula& formula, Variant var)
      : f(formula), occ(literal_positions(formula)), variant(var) {}

  std::string fresh() { return "f." + num(++fresh_counter); }

  // Vertex names; overlined vertices get a trailing b (ub = u-bar), primes
  // a trailing p (qp = q-prime).
  static std::string va(int i) { return "a." + num(i); }
  static std::string vu(int i) { return "u." + num(i); }
  static std::string vv(int i) { return "v." + num(i); }
  static std::string vb(int i) { return "b." + num(i); }
  static std::string vub(int i) { return "ub." + num(i); }
  static std::string vvb(int i) { return "vb." + num(i); }
  static std::string vp(int j) { return "p." + num(j); }
  static std::string vpp(int j) { return "pp." + num(j); }
  static std::string vq(int j) { return "q." + num(j); }
  static std::string vqp(int j) { return "qp." + num(j); }
  static std::string vr(int j, int k) { return "r." + num(j) + "." + num(k); }
  static std::string vrp(int j, int k) { return "rp." + num(j) + "." + num(k); }
  static std::string vs(int j) { return "s." + num(j); }
  static std::string vsp(int j) { return "sp." + num(j); }

  // Color names.
  static std::string cpos(int i, int k) { return "c." + num(i) + "." + num(k); }
  static std::string cneg(int i, int k) { return "cb." + num(i) + "." + num(k); }
  static std::string cbar(int i) { return "cb." + num(i); }
  static std::string cclause(int j) { return "c." + num(j); }
  static std::string cprime(int j) { return "cp." + num(j); }

  void gadget(const std::string& id, const std::vector<std::string>& names) {
    std::vector<Vertex> vs;
    vs.reserve(names.size());
    for (const auto& name : names) vs.push_back(g.add_vertex(name));
    gadgets.emplace_back(id, std::move(vs));
  }

  void edge(const std::string& x, const std::string& y, const std::string& color) {
    g.add_edge(x, y, color);
  }

  std::vector<std::string> clause_cycle_names(int j, int lanes) const {
    std::vector<std::string> names{vp(j)};
    for (int k = 1; k <= lanes; ++k) names.push_back(vr(j, k));
    names.push_back(vq(j));
    names.push_back(vqp(j));
    for (int k = lanes; k >= 1; --k) names.push_back(vrp(j, k));
    names.push_back(vpp(j));
    return names;
  }

  int lanes_for(int j) const {
    int sz = static_cast<int>(f.clauses[static_cast<size_t>(j - 1)].size());
    return variant == Variant::Cubic ? 2 * sz - 1 : sz;
  }

  void add_variable_edges(int i) {
    edge(va(i), vu(i), cpos(i, 1));
    edge(vu(i), vv(i), cpos(i, 2));
    edge(vv(i), vb(i), cpos(i, 3));
    edge(va(i), vub(i), cneg(i, 1));
    edge(vub(i), vvb(i), cneg(i, 2));
    edge(vvb(i), vb(i), cneg(i, 3));
    if (variant == Variant::Chorded || variant == Variant::Clique) {
      edge(vu(i), vub(i), cbar(i));
      edge(vu(i), vvb(i), cbar(i));
      edge(vv(i), vvb(i), cbar(i));
    }
    if (variant == Variant::Clique) {
      edge(va(i), vvb(i), cbar(i));
      edge(va(i), vb(i), cbar(i));
      edge(va(i), vv(i), cbar(i));
      edge(vu(i), vb(i), cbar(i));
      edge(vv(i), vub(i), cbar(i));
      edge(vb(i), vub(i), cbar(i));
    }
    if (variant == Variant::Cubic) {
      edge(vu(i), vvb(i), cbar(i));
      edge(vub(i), vv(i), cbar(i));
    }
  }

  void add_clause_edges(int j) {
    const auto& clause = f.clauses[static_cast<size_t>(j - 1)];
    int sz = static_cast<int>(clause.size());
    int lanes = lanes_for(j);

    edge(vp(j), vr(j, 1), fresh());
    for (int k = 1; k < lanes; ++k) edge(vr(j, k), vr(j, k + 1), fresh());
    edge(vr(j, lanes), vq(j), fresh());
    edge(vq(j), vqp(j), cclause(j));
    edge(vqp(j), vrp(j, lanes), fresh());
    for (int k = lanes; k >= 2; --k) edge(vrp(j, k), vrp(j, k - 1), fresh());
    edge(vrp(j, 1), vpp(j), fresh());
    edge(vpp(j), vp(j), cprime(j));

    for (int k = 1; k <= sz; ++k) {
      int lane = variant == Variant::Cubic ? 2 * k - 1 : k;
      const Literal& lit = clause[static_cast<size_t>(k - 1)];
      int rank = occ.rank[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 1)];
      edge(vr(j, lane), vrp(j, lane), literal_chord_color_name(lit, rank));
    }

    if (variant == Variant::Chorded || variant == Variant::Clique) {
      edge(vr(j, 1), vpp(j), cprime(j));
      for (int k = 2; k <= sz; ++k) edge(vr(j, k), vrp(j, k - 1), cprime(j));
      edge(vq(j), vrp(j, sz), cprime(j));
    }
    if (variant == Variant::Clique) {
      auto names = clause_cycle_names(j, lanes);
      for (size_t x = 0; x < names.size(); ++x)
        for (size_t y = x + 1; y < names.size(); ++y)
          if (!g.adjacent(g.vertex(names[x]), g.vertex(names[y])))
            edge(names[x], names[y], cprime(j));
    }
    if (variant == Variant::Cubic) {
      if (sz == 1) {
        edge(vpp(j), vq(j), cprime(j));
      } else {
        edge(vpp(j), vr(j, 2), cprime(j));
        for (int k = 1; k <= sz - 2; ++k) edge(vrp(j, 2 * k), vr(j, 2 * k + 2), cprime(j));
        edge(vrp(j, 2 * sz - 2), vq(j), cprime(j));
      }
    }
  }

  void record_reduction_basics(Reduction& r) {
    r.graph = std::move(g);
    r.gadgets = std::move(gadgets);
    r.formula = f;
    for (size_t j = 0; j < f.clauses.size(); ++j)
      if (f.clauses[j].size() < 3) r.reconstructed_clauses.push_back(static_cast<int>(j) + 1);
  }
};

Reduction build_chain_family(const CnfFormula& f, Variant variant, const std::string& tag) {
  validate_formula(f);
  Builder b(f, variant);
  int n = f.variable_count;
  int m = f.clause_count();

  {
    std::vector<std::string> names;
    for (int j = 1; j <= m; ++j) names.push_back(Builder::vs(j));
    b.gadget("tail", names);
  }
  for (int i = 1; i <= n; ++i)
    b.gadget("X." + num(i), {Builder::va(i), Builder::vu(i), Builder::vv(i), Builder::vb(i),
                             Builder::vvb(i), Builder::vub(i)});
  for (int j = 1; j <= m; ++j) b.gadget("C." + num(j), b.clause_cycle_names(j, b.lanes_for(j)));
  b.gadget("head", {"t"});

  for (int i = 1; i <= n; ++i) b.add_variable_edges(i);
  for (int j = 1; j <= m; ++j) b.add_clause_edges(j);
  for (int i = 1; i < n; ++i)
    b.edge(Builder::vb(i), Builder::va(i + 1),
           variant == Variant::Plain ? b.fresh() : Builder::cbar(i));
  b.edge(Builder::vb(n), Builder::vp(1), variant == Variant::Plain ? b.fresh() : Builder::cbar(n));
  for (int j = 1; j < m; ++j) b.edge(Builder::vqp(j), Builder::vp(j + 1), Builder::cprime(j));
  b.edge(Builder::vqp(m), "t", Builder::cprime(m));
  for (int j = 1; j < m; ++j) b.edge(Builder::vs(j), Builder::vs(j + 1), Builder::cclause(j));
  b.edge(Builder::vs(m), Builder::va(1), Builder::cclause(m));

  Reduction r;
  b.record_reduction_basics(r);
  r.source = r.graph.vertex(Builder::vs(1));
  r.sink = r.graph.vertex("t");
  r.construction = tag;
  r.original_clause_count = m;
  return r;
}

}  // namespace

std::string literal_chord_color_name(const Literal& lit, int rank) {
  return lit.negative ? Builder::cpos(lit.variable, rank) : Builder::cneg(lit.variable, rank);
}

Reduction build_base(const CnfFormula& f) { return build_chain_family(f, Variant::Plain, "base"); }

Reduction build_interval_outerplanar(const CnfFormula& f) {
  return build_chain_family(f, Variant::Chorded, "io");
}

Reduction build_interval_block(const CnfFormula& f) {
  return build_chain_family(f, Variant::Clique, "ib");
}

Reduction build_cubic(const CnfFormula& f) {
  validate_formula(f);
  int original_m = f.clause_count();
  CnfFormula padded = f.clause_count() < 3 ? pad_to_min_clauses(f, 3) : f;
  Builder b(padded, Variant::Cubic);
  int n = padded.variable_count;
  int m = padded.clause_count();

  {
    std::vector<std::string> names;
    for (int j = 1; j < m; ++j) names.push_back(Builder::vs(j));
    for (int j = 1; j < m; ++j) names.push_back(Builder::vsp(j));
    names.push_back("a.0");
    b.gadget("tail", names);
  }
  for (int i = 1; i <= n; ++i)
    b.gadget("X." + num(i), {Builder::va(i), Builder::vu(i), Builder::vv(i), Builder::vb(i),
                             Builder::vvb(i), Builder::vub(i)});
  for (int j = 1; j <= m; ++j) b.gadget("C." + num(j), b.clause_cycle_names(j, b.lanes_for(j)));
  b.gadget("head", {"t.0", "t.1", "t.2", "t.3", "t.4"});

  // tail: two rails ending in a.0, braided at the start
  for (int j = 1; j <= m - 2; ++j) {
    b.edge(Builder::vs(j), Builder::vs(j + 1), Builder::cclause(j));
    b.edge(Builder::vsp(j), Builder::vsp(j + 1), Builder::cclause(j));
  }
  b.edge(Builder::vs(1), Builder::vsp(1), b.fresh());
  b.edge(Builder::vsp(1), Builder::vs(2), Builder::cclause(1));
  b.edge(Builder::vs(1), Builder::vsp(2), Builder::cclause(1));
  for (int j = 3; j <= m - 1; ++j) b.edge(Builder::vs(j), Builder::vsp(j), b.fresh());
  b.edge(Builder::vs(m - 1), "a.0", Builder::cclause(m - 1));
  b.edge(Builder::vsp(m - 1), "a.0", Builder::cclause(m - 1));

  for (int i = 1; i <= n; ++i) b.add_variable_edges(i);
  for (int j = 1; j <= m; ++j) b.add_clause_edges(j);

  b.edge("a.0", Builder::va(1), Builder::cclause(m));
  for (int i = 1; i < n; ++i) b.edge(Builder::vb(i), Builder::va(i + 1), Builder::cbar(i));
  b.edge(Builder::vb(n), Builder::vp(1), Builder::cbar(n));
  for (int j = 1; j < m; ++j) b.edge(Builder::vqp(j), Builder::vp(j + 1), Builder::cprime(j));
  b.edge(Builder::vqp(m), "t.0", Builder::cprime(m));

  // head: K4 minus (t.1,t.2), hung off t.0
  b.edge("t.0", "t.1", b.fresh());
  b.edge("t.0", "t.2", b.fresh());
  b.edge("t.1", "t.3", b.fresh());
  b.edge("t.1", "t.4", b.fresh());
  b.edge("t.2", "t.3", b.fresh());
  b.edge("t.2", "t.4", b.fresh());
  b.edge("t.3", "t.4", b.fresh());

  Reduction r;
  b.record_reduction_basics(r);
  r.source = r.graph.vertex(Builder::vs(1));
  r.sink = r.graph.vertex("t.0");
  r.construction = "cubic";
  r.original_clause_count = original_m;
  return r;
}

Reduction build_k_regular(const CnfFormula& f, int k) {
  if (k <= 3) throw ParseError("k-regular construction requires k > 3 (got " + num(k) + ")");
  Reduction cubic = build_cubic(f);
  const EdgeColoredGraph& base = cubic.graph;

  Reduction r;
  int copies = k - 2;
  auto prefixed = [&](int h, Vertex v) { return "h" + num(h) + "." + base.vertex_name(v); };
  for (int h = 1; h <= copies; ++h) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < base.vertex_count(); ++v)
      members.push_back(r.graph.add_vertex(prefixed(h, v)));
    r.gadgets.emplace_back("h" + num(h), std::move(members));
  }
  for (int h = 1; h <= copies; ++h)
    for (const Edge& e : base.edges())
      r.graph.add_edge(prefixed(h, e.u), prefixed(h, e.v), base.color_name(e.color));
  for (Vertex v = 0; v < base.vertex_count(); ++v)
    for (int ha = 1; ha <= copies; ++ha)
      for (int hb = ha + 1; hb <= copies; ++hb)
        r.graph.add_edge(prefixed(ha, v), prefixed(hb, v), "cs");

  r.source = r.graph.vertex(prefixed(1, cubic.source));
  r.sink = r.graph.vertex(prefixed(1, cubic.sink));
  r.construction = "kreg";
  r.regular_k = k;
  r.formula = cubic.formula;
  r.original_clause_count = cubic.original_clause_count;
  r.reconstructed_clauses = cubic.reconstructed_clauses;
  return r;
}

Reduction build_construction(const std::string& tag, const CnfFormula& f, int k) {
  if (tag == "base") return build_base(f);
  if (tag == "io") return build_interval_outerplanar(f);
  if (tag == "ib") return build_interval_block(f);
  if (tag == "cubic") return build_cubic(f);
  if (tag == "kreg") return build_k_regular(f, k);
  throw ParseError("unknown construction '" + tag + "' (expected base|io|ib|cubic|kreg)");
}

nlohmann::ordered_json reduction_document(const Reduction& r) {
  nlohmann::ordered_json meta;
  meta["construction"] = r.construction;
  meta["source"] = r.graph.vertex_name(r.source);
  meta["sink"] = r.graph.vertex_name(r.sink);
  if (r.construction == "kreg") meta["k"] = r.regular_k;

  nlohmann::ordered_json sizes = nlohmann::ordered_json::array();
  for (const auto& clause : r.formula.clauses) sizes.push_back(clause.size());
  meta["clause_sizes"] = sizes;
  meta["original_clause_count"] = r.original_clause_count;
  if (!r.reconstructed_clauses.empty()) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::array();
    for (int j : r.reconstructed_clauses) rec.push_back("C." + num(j));
    meta["reconstructed"] = rec;
  }

  nlohmann::ordered_json gadgets;
  for (const auto& [id, members] : r.gadgets) {
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (Vertex v : members) names.push_back(r.graph.vertex_name(v));
    gadgets[id] = names;
  }
  meta["gadgets"] = gadgets;

  nlohmann::ordered_json palette;
  nlohmann::ordered_json pos = nlohmann::ordered_json::array();
  nlohmann::ordered_json neg = nlohmann::ordered_json::array();
  for (int i = 1; i <= r.formula.variable_count; ++i) {
    pos.push_back({Builder::cpos(i, 1), Builder::cpos(i, 2), Builder::cpos(i, 3)});
    neg.push_back({Builder::cneg(i, 1), Builder::cneg(i, 2), Builder::cneg(i, 3)});
  }
  palette["positive"] = pos;
  palette["negative"] = neg;
  if (r.construction != "base") {
    nlohmann::ordered_json bar = nlohmann::ordered_json::array();
    for (int i = 1; i <= r.formula.variable_count; ++i) bar.push_back(Builder::cbar(i));
    palette["bar"] = bar;
  }
  nlohmann::ordered_json cls = nlohmann::ordered_json::array();
  nlohmann::ordered_json clsp = nlohmann::ordered_json::array();
  for (int j = 1; j <= r.formula.clause_count(); ++j) {
    cls.push_back(Builder::cclause(j));
    clsp.push_back(Builder::cprime(j));
  }
  palette["clause"] = cls;
  palette["clause_prime"] = clsp;
  if (r.construction == "kreg") palette["star"] = "cs";
  int fresh = 0;
  for (Color c = 0; c < r.graph.color_count(); ++c)
    if (r.graph.color_name(c).rfind("f.", 0) == 0) ++fresh;
  palette["fresh_colors"] = fresh;
  meta["palette"] = palette;

  return save_graph(r.graph, meta);
}

}  // namespace rainbow
