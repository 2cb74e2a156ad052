#include "rwb/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "rwb/errors.hpp"
#include "rwb/expr.hpp"
#include "rwb/util.hpp"

namespace rwb {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// "[1, 2, 3]" or "[1 2 3]" -> ints; brackets optional.
template <typename T>
std::vector<T> parse_list(const std::string& text, int line) {
  std::string clean;
  for (char c : text) clean.push_back((c == '[' || c == ']' || c == ',') ? ' ' : c);
  std::istringstream is(clean);
  std::vector<T> out;
  long long v;
  while (is >> v) out.push_back(static_cast<T>(v));
  if (!is.eof()) throw ParseError(line, 1, "integer list");
  return out;
}

std::string rest_after(const std::string& line, size_t nth_token) {
  std::istringstream is(line);
  std::string tok;
  size_t count = 0;
  std::streampos pos = 0;
  while (count < nth_token && (is >> tok)) {
    ++count;
    pos = is.tellg();
  }
  if (count < nth_token) return {};
  std::string rest = line.substr(static_cast<size_t>(std::max<std::streamoff>(0, pos)));
  size_t b = rest.find_first_not_of(" \t");
  return b == std::string::npos ? std::string() : rest.substr(b);
}

}  // namespace

InstanceSpec parse_instance(const std::string& text) {
  InstanceSpec spec;
  bool saw_factor_kw = false;
  bool lambda_set = false;

  auto factor = [&]() -> FactorSpec& {
    if (spec.factors.empty()) spec.factors.emplace_back();
    return spec.factors.back();
  };

  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  static const std::set<std::string> global_keys = {
      "mode", "colors", "blocks", "coords", "lambda", "bound", "seed",
      "coloring", "lengths", "dim", "window", "set", "gdim", "gmap",
      "poly", "pdegree", "origin-zero", "mblocks", "side"};
  static const std::set<std::string> factor_keys = {"kind", "tree", "alphabet",
                                                    "endos", "endo", "floors"};

  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];

    auto need = [&](size_t n) {
      if (toks.size() < n + 1) throw ParseError(lineno, 1, "value for key '" + key + "'");
    };

    if (key == "factor") {
      spec.factors.emplace_back();
      saw_factor_kw = true;
      continue;
    }
    if (factor_keys.count(key)) {
      if (!saw_factor_kw && spec.factors.empty()) spec.factors.emplace_back();
      FactorSpec& f = factor();
      if (key == "kind") {
        need(1);
        if (toks[1] == "located")
          f.kind = WordKind::located;
        else if (toks[1] == "nonlocated")
          f.kind = WordKind::nonlocated;
        else
          throw ParseError(lineno, 1, "located or nonlocated");
      } else if (key == "tree") {
        f.tree_parents = parse_list<int>(rest_after(line, 1), lineno);
      } else if (key == "alphabet") {
        need(1);
        f.alphabet = std::stoi(toks[1]);
      } else if (key == "endos") {
        need(1);
        if (toks[1] == "all-homs" || toks[1] == "letters") {
          f.endo_mode = toks[1];
        } else {
          f.endo_mode = "named";
          std::string rest = rest_after(line, 1);
          std::string clean;
          for (char c : rest) clean.push_back((c == '[' || c == ']' || c == ',') ? ' ' : c);
          f.endo_names = split_ws(clean);
          if (f.endo_names.empty()) throw ParseError(lineno, 1, "endo name list");
        }
      } else if (key == "endo") {
        need(2);
        EndoDecl d;
        d.name = toks[1];
        if (toks[2] == "pred") {
          need(3);
          d.is_pred = true;
          d.pred_k = std::stoi(toks[3]);
        } else if (toks[2] == "sub") {
          for (size_t i = 3; i < toks.size(); ++i) {
            size_t arrow = toks[i].find("->");
            if (arrow == std::string::npos || toks[i][0] != '$')
              throw ParseError(lineno, 1, "$var->rhs entry");
            int var = std::stoi(toks[i].substr(1, arrow - 1));
            d.entries.emplace_back(var, toks[i].substr(arrow + 2));
          }
        } else {
          throw ParseError(lineno, 1, "pred or sub");
        }
        f.decls.push_back(std::move(d));
      } else if (key == "floors") {
        f.floors = parse_list<std::uint64_t>(rest_after(line, 1), lineno);
      }
      continue;
    }
    if (!global_keys.count(key)) throw ParseError(lineno, 1, "known key (got '" + key + "')");

    if (key == "mode") {
      need(1);
      static const std::set<std::string> modes = {"search", "verify", "threshold", "delta-scan"};
      if (!modes.count(toks[1])) throw ParseError(lineno, 1, "search|verify|threshold|delta-scan");
      spec.mode = toks[1];
    } else if (key == "colors") {
      need(1);
      spec.colors = std::stoi(toks[1]);
    } else if (key == "blocks") {
      need(1);
      spec.blocks = std::stoi(toks[1]);
    } else if (key == "coords") {
      need(1);
      spec.coords = std::stoi(toks[1]);
    } else if (key == "lambda") {
      spec.lambda = parse_list<int>(rest_after(line, 1), lineno);
      lambda_set = true;
    } else if (key == "bound") {
      need(1);
      spec.bound = std::stoull(toks[1]);
    } else if (key == "seed") {
      need(1);
      spec.seed = std::stoull(toks[1]);
    } else if (key == "coloring") {
      need(1);
      if (toks[1] == "expr") {
        spec.coloring_kind = "expr";
        spec.coloring_expr = rest_after(line, 2);
        if (spec.coloring_expr.empty()) throw ParseError(lineno, 1, "coloring expression");
        Expr::parse(spec.coloring_expr, lineno);  // syntax check now
      } else if (toks[1] == "table") {
        spec.coloring_kind = "table";
        spec.coloring_table = parse_list<int>(rest_after(line, 2), lineno);
      } else {
        throw ParseError(lineno, 1, "expr or table");
      }
    } else if (key == "lengths") {
      spec.lengths = parse_list<std::uint64_t>(rest_after(line, 1), lineno);
    } else if (key == "dim") {
      need(1);
      spec.dim = std::stoi(toks[1]);
    } else if (key == "window") {
      auto vals = parse_list<std::int64_t>(rest_after(line, 1), lineno);
      if (vals.size() % 2 != 0 || vals.empty()) throw ParseError(lineno, 1, "lo hi pairs");
      spec.window_lo.clear();
      spec.window_hi.clear();
      for (size_t i = 0; i < vals.size(); i += 2) {
        spec.window_lo.push_back(vals[i]);
        spec.window_hi.push_back(vals[i + 1]);
      }
    } else if (key == "set") {
      need(1);
      if (toks[1] != "expr") throw ParseError(lineno, 1, "set expr <predicate>");
      spec.set_expr = rest_after(line, 2);
      if (spec.set_expr.empty()) throw ParseError(lineno, 1, "set predicate");
      Expr::parse(spec.set_expr, lineno);
    } else if (key == "gdim") {
      need(1);
      spec.gdim = std::stoi(toks[1]);
    } else if (key == "gmap") {
      need(1);
      if (toks[1] == "const") {
        spec.gmap_nodes[0] = parse_list<std::int64_t>(rest_after(line, 2), lineno);
      } else if (toks[1] == "node") {
        need(2);
        int node = std::stoi(toks[2]);
        spec.gmap_nodes[node] = parse_list<std::int64_t>(rest_after(line, 3), lineno);
      } else {
        throw ParseError(lineno, 1, "gmap const|node");
      }
    } else if (key == "poly") {
      std::string e = rest_after(line, 1);
      if (e.empty()) throw ParseError(lineno, 1, "polynomial expression");
      Expr::parse(e, lineno);
      spec.poly_exprs.push_back(e);
    } else if (key == "pdegree") {
      need(1);
      spec.pdegree = std::stoi(toks[1]);
    } else if (key == "origin-zero") {
      need(1);
      spec.origin_zero = toks[1] == "true";
    } else if (key == "mblocks") {
      need(1);
      spec.mblocks = std::stoi(toks[1]);
    } else if (key == "side") {
      need(1);
      spec.sweep_side = std::stoll(toks[1]);
    }
  }

  if (spec.mode == "delta-scan") {
    if (spec.window_lo.empty()) throw ParseError(lineno, 1, "window for delta-scan");
    if (spec.factors.size() == 1 && spec.delta_tree.empty())
      spec.delta_tree = spec.factors[0].tree_parents;
    if (spec.factors.size() > 1) throw ParseError(lineno, 1, "single tree for delta-scan");
  } else {
    if (spec.factors.empty()) throw ParseError(lineno, 1, "at least one factor");
  }
  if (!lambda_set) spec.lambda.assign(static_cast<size_t>(spec.coords), 0);
  if (static_cast<int>(spec.lambda.size()) != spec.coords)
    throw ParseError(lineno, 1, "lambda of length coords");
  return spec;
}

namespace {

template <typename T>
std::string list_text(const std::vector<T>& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

}  // namespace

std::string emit_instance(const InstanceSpec& spec) {
  std::ostringstream os;
  os << "mode " << spec.mode << "\n";
  os << "blocks " << spec.blocks << "\n";
  os << "bound " << spec.bound << "\n";
  os << "colors " << spec.colors << "\n";
  os << "coords " << spec.coords << "\n";
  os << "lambda " << list_text(spec.lambda) << "\n";
  if (!spec.lengths.empty()) os << "lengths " << list_text(spec.lengths) << "\n";
  os << "seed " << spec.seed << "\n";
  if (spec.coloring_kind == "expr") {
    os << "coloring expr " << spec.coloring_expr << "\n";
  } else {
    os << "coloring table " << list_text(spec.coloring_table) << "\n";
  }
  if (spec.mode == "delta-scan") {
    os << "dim " << spec.dim << "\n";
    std::vector<std::int64_t> w;
    for (size_t i = 0; i < spec.window_lo.size(); ++i) {
      w.push_back(spec.window_lo[i]);
      w.push_back(spec.window_hi[i]);
    }
    os << "window " << list_text(w) << "\n";
    os << "set expr " << spec.set_expr << "\n";
    os << "gdim " << spec.gdim << "\n";
    for (const auto& [node, vec] : spec.gmap_nodes) {
      if (node == 0)
        os << "gmap const " << list_text(vec) << "\n";
      else
        os << "gmap node " << node << " " << list_text(vec) << "\n";
    }
    for (const auto& p : spec.poly_exprs) os << "poly " << p << "\n";
    os << "pdegree " << spec.pdegree << "\n";
    os << "origin-zero " << (spec.origin_zero ? "true" : "false") << "\n";
    os << "mblocks " << spec.mblocks << "\n";
    if (spec.sweep_side > 0) os << "side " << spec.sweep_side << "\n";
  }
  for (const auto& f : spec.factors) {
    os << "factor\n";
    os << "kind " << (f.kind == WordKind::located ? "located" : "nonlocated") << "\n";
    os << "tree " << list_text(f.tree_parents) << "\n";
    os << "alphabet " << f.alphabet << "\n";
    std::vector<EndoDecl> decls = f.decls;
    std::sort(decls.begin(), decls.end(),
              [](const EndoDecl& a, const EndoDecl& b) { return a.name < b.name; });
    for (const auto& d : decls) {
      os << "endo " << d.name;
      if (d.is_pred) {
        os << " pred " << d.pred_k;
      } else {
        os << " sub";
        auto entries = d.entries;
        std::sort(entries.begin(), entries.end());
        for (const auto& [v, rhs] : entries) os << " $" << v << "->" << rhs;
      }
      os << "\n";
    }
    if (f.endo_mode == "named") {
      auto names = f.endo_names;
      std::sort(names.begin(), names.end());
      os << "endos [";
      for (size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
      os << "]\n";
    } else {
      os << "endos " << f.endo_mode << "\n";
    }
    if (!f.floors.empty()) os << "floors " << list_text(f.floors) << "\n";
  }
  return os.str();
}

std::uint64_t instance_digest(const InstanceSpec& spec) { return fnv1a(emit_instance(spec)); }

namespace {

SubstitutionMap compile_decl(const ContextPtr& ctx, const EndoDecl& d) {
  if (d.is_pred)
    return SubstitutionMap::from_hom(ctx, RegressiveHom::predecessor_map(ctx->tree, d.pred_k));
  std::vector<std::optional<Symbol>> img(static_cast<size_t>(ctx->tree.size()));
  std::set<int> assigned;
  for (const auto& [var, rhs] : d.entries) {
    if (var <= 0 || var >= ctx->tree.size())
      throw ResolutionError("endo " + d.name + ": variable $" + std::to_string(var));
    assigned.insert(var);
    if (rhs == ".") continue;  // undefined
    img[static_cast<size_t>(var)] = Symbol::parse(rhs);
  }
  // Unmentioned variables keep themselves.
  for (int v = 1; v < ctx->tree.size(); ++v)
    if (!assigned.count(v)) img[static_cast<size_t>(v)] = Symbol::variable(v);
  bool total = true;
  for (int v = 1; v < ctx->tree.size(); ++v)
    if (!img[static_cast<size_t>(v)]) total = false;
  return SubstitutionMap(ctx, total ? ctx->kind : WordKind::located, std::move(img));
}

std::vector<SubstitutionMap> compile_endos(const ContextPtr& ctx, const FactorSpec& f) {
  if (f.endo_mode == "all-homs") {
    if (ctx->kind == WordKind::nonlocated)
      throw ResolutionError("all-homs (located factors only)");
    std::vector<SubstitutionMap> out;
    for (const auto& h : enumerate_regressive_homs(ctx->tree))
      out.push_back(SubstitutionMap::from_hom(ctx, h));
    return out;
  }
  if (f.endo_mode == "letters") {
    std::vector<SubstitutionMap> gens;
    gens.push_back(SubstitutionMap::identity(ctx));
    for (int a = 0; a < ctx->alphabet_size; ++a) {
      std::vector<std::optional<Symbol>> img(static_cast<size_t>(ctx->tree.size()));
      for (int v = 1; v < ctx->tree.size(); ++v) img[static_cast<size_t>(v)] = Symbol::letter(a);
      gens.emplace_back(ctx, ctx->kind, std::move(img));
    }
    return gens;
  }
  std::map<std::string, const EndoDecl*> by_name;
  for (const auto& d : f.decls) by_name[d.name] = &d;
  std::vector<SubstitutionMap> gens;
  for (const auto& name : f.endo_names) {
    auto it = by_name.find(name);
    if (it == by_name.end()) throw ResolutionError(name);
    gens.push_back(compile_decl(ctx, *it->second));
  }
  WordAction closed(ctx, gens, 3);
  return closed.endos();
}

struct TupleStats {
  // Word statistics exposed to coloring expressions.
  static std::int64_t get(const AnyWord& w, const std::string& name,
                          const std::vector<std::int64_t>& extra) {
    if (std::holds_alternative<TreeWord>(w)) {
      const TreeWord& t = std::get<TreeWord>(w);
      if (name == "size" || name == "len") return static_cast<std::int64_t>(t.support_size());
      if (name == "minpos") return static_cast<std::int64_t>(t.min_pos());
      if (name == "maxpos") return static_cast<std::int64_t>(t.max_pos());
      if (name == "comp") return t.component();
      std::int64_t nv = 0, nl = 0;
      std::int64_t cl = 0, cv = 0;
      for (const auto& [pos, sym] : t.entries()) {
        if (sym.is_variable()) {
          ++nv;
          if (!extra.empty() && sym.variable_node() == extra[0]) ++cv;
        } else {
          ++nl;
          if (!extra.empty() && sym.letter_index() == extra[0]) ++cl;
        }
      }
      if (name == "nvars") return nv;
      if (name == "nletters") return nl;
      if (name == "countletter") return cl;
      if (name == "countvar") return cv;
    } else {
      const StringWord& s = std::get<StringWord>(w);
      if (name == "size" || name == "len") return static_cast<std::int64_t>(s.length());
      if (name == "minpos") return 0;
      if (name == "maxpos")
        return s.length() == 0 ? 0 : static_cast<std::int64_t>(s.length()) - 1;
      if (name == "comp") return s.component();
      std::int64_t nv = 0, nl = 0, cl = 0, cv = 0;
      for (Symbol sym : s.symbols()) {
        if (sym.is_variable()) {
          ++nv;
          if (!extra.empty() && sym.variable_node() == extra[0]) ++cv;
        } else {
          ++nl;
          if (!extra.empty() && sym.letter_index() == extra[0]) ++cl;
        }
      }
      if (name == "nvars") return nv;
      if (name == "nletters") return nl;
      if (name == "countletter") return cl;
      if (name == "countvar") return cv;
    }
    throw ResolutionError(name);
  }
};

Coloring compile_coloring(const InstanceSpec& spec, const std::vector<Factor>& factors) {
  if (spec.coloring_kind == "table") {
    if (spec.coords != 1) throw ResolutionError("table colorings (single coordinate only)");
    const Factor& fac = factors[static_cast<size_t>(spec.lambda[0])];
    if (fac.ctx->kind != WordKind::located)
      throw ResolutionError("table colorings (located factors only)");
    auto universe = adequacy_window(fac.ctx, {}, spec.bound);
    std::stable_sort(universe.begin(), universe.end(), [](const TreeWord& a, const TreeWord& b) {
      if (a.support_size() != b.support_size()) return a.support_size() < b.support_size();
      return a < b;
    });
    if (universe.size() != spec.coloring_table.size())
      throw ResolutionError("coloring table of size " + std::to_string(universe.size()));
    std::map<std::vector<std::string>, int> table;
    for (size_t i = 0; i < universe.size(); ++i)
      table[{universe[i].str()}] = spec.coloring_table[i];
    return Coloring::lookup(spec.colors, std::move(table));
  }
  Expr expr = Expr::parse(spec.coloring_expr);
  int m = spec.coords;
  auto fn = [expr, m](const std::vector<const AnyWord*>& tuple) -> int {
    std::int64_t v = expr.eval([&](const std::string& name,
                                   const std::vector<std::int64_t>& args) -> std::int64_t {
      int s = args.empty() ? 0 : static_cast<int>(args[0]);
      if (s < 0 || s >= m) throw ResolutionError(name + ": coordinate out of range");
      std::vector<std::int64_t> extra(args.begin() + (args.empty() ? 0 : 1), args.end());
      return TupleStats::get(*tuple[static_cast<size_t>(s)], name, extra);
    });
    return static_cast<int>(v);
  };
  Coloring c = Coloring::external(spec.colors, fn);
  c.set_description(spec.coloring_expr);
  return c;
}

}  // namespace

SearchInstance build_search_instance(const InstanceSpec& spec) {
  if (spec.mode == "delta-scan") throw ResolutionError("search instance from a delta-scan spec");
  SearchInstance inst;
  for (const auto& f : spec.factors) {
    Factor fac;
    fac.ctx = make_context(RootedTree(f.tree_parents), f.alphabet, f.kind);
    fac.endos = compile_endos(fac.ctx, f);
    inst.factors.push_back(std::move(fac));
  }
  inst.lambda = spec.lambda;
  inst.block_count = spec.blocks;
  inst.position_bound = spec.bound;
  inst.length_schedule = spec.lengths;
  for (const auto& f : spec.factors) inst.freshness_floor.push_back(f.floors);
  bool any_floor = false;
  for (const auto& fl : inst.freshness_floor) any_floor |= !fl.empty();
  if (!any_floor) inst.freshness_floor.clear();
  inst.coloring = compile_coloring(spec, inst.factors);
  inst.validate();

  // Surface coloring-expression resolution errors now, not mid-search.
  if (spec.coloring_kind == "expr") {
    std::vector<AnyWord> dummies;
    std::vector<const AnyWord*> tuple;
    for (int s = 0; s < spec.coords; ++s) {
      const Factor& fac = inst.factors[static_cast<size_t>(spec.lambda[static_cast<size_t>(s)])];
      if (fac.ctx->kind == WordKind::located)
        dummies.emplace_back(TreeWord(fac.ctx));
      else
        dummies.emplace_back(StringWord(fac.ctx));
    }
    for (const auto& d : dummies) tuple.push_back(&d);
    inst.coloring(tuple);
  }
  return inst;
}

DeltaScene build_scene(const InstanceSpec& spec) {
  Box w{spec.window_lo, spec.window_hi};
  if (w.dim() != spec.dim) throw ResolutionError("window dimension");
  Expr pred = Expr::parse(spec.set_expr);
  return DeltaScene(w, [pred](const std::vector<std::int64_t>& p) {
    return pred.eval([&](const std::string& name, const std::vector<std::int64_t>&) {
             if (name.size() >= 2 && name[0] == 'x') {
               size_t i = static_cast<size_t>(std::stoi(name.substr(1)));
               if (i < p.size()) return p[i];
             }
             throw ResolutionError(name);
           }) != 0;
  });
}

FurstenbergInstance build_delta_instance(const InstanceSpec& spec) {
  RootedTree tree(spec.delta_tree);
  std::optional<IntPolyVec> poly;
  if (!spec.poly_exprs.empty()) {
    std::vector<Poly> comps;
    for (const auto& text : spec.poly_exprs) {
      Expr e = Expr::parse(text);
      comps.push_back(e.eval_poly(spec.gdim, [&](const std::string& name) {
        if (name.size() >= 2 && name[0] == 'z') {
          int i = std::stoi(name.substr(1));
          if (i >= 0 && i < spec.gdim) return Poly::variable(spec.gdim, i);
        }
        throw ResolutionError(name);
      }));
    }
    poly = IntPolyVec::validate(std::move(comps), spec.pdegree, spec.origin_zero);
  }
  auto gmap_nodes = spec.gmap_nodes;
  int gdim = spec.gdim;
  GMap g = [gmap_nodes, gdim](std::uint64_t, int node) -> std::vector<std::int64_t> {
    auto it = gmap_nodes.find(node);
    if (it == gmap_nodes.end()) it = gmap_nodes.find(0);
    if (it == gmap_nodes.end()) return std::vector<std::int64_t>(static_cast<size_t>(gdim), 1);
    return it->second;
  };
  return FurstenbergInstance{build_scene(spec),
                             tree,
                             std::move(g),
                             spec.gdim,
                             std::move(poly),
                             spec.bound,
                             spec.mblocks};
}

TreeWord parse_tree_word(const ContextPtr& ctx, const std::string& text) {
  std::string body = text;
  size_t lb = body.find('[');
  size_t rb = body.rfind(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb)
    throw Error("word literal needs [..]: " + text);
  body = body.substr(lb + 1, rb - lb - 1);
  std::vector<TreeWord::Entry> entries;
  std::istringstream is(body);
  std::string item;
  while (std::getline(is, item, ',')) {
    std::string trimmed;
    for (char c : item)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
    if (trimmed.empty()) continue;
    size_t colon = trimmed.find(':');
    if (colon == std::string::npos) throw Error("word entry needs pos:sym: " + item);
    std::uint64_t pos = std::stoull(trimmed.substr(0, colon));
    std::string sym = trimmed.substr(colon + 1);
    if (!sym.empty() && sym.front() == '\'' && sym.back() == '\'' && sym.size() >= 3)
      sym = sym.substr(1, sym.size() - 2);
    entries.emplace_back(pos, Symbol::parse(sym));
  }
  return TreeWord(ctx, std::move(entries));
}

StringWord parse_string_word(const ContextPtr& ctx, const std::string& text) {
  std::vector<Symbol> syms;
  for (size_t i = 0; i < text.size();) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '$') {
      size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1) throw Error("variable literal needs digits: " + text);
      syms.push_back(Symbol::variable(std::stoi(text.substr(i + 1, j - i - 1))));
      i = j;
    } else if (c >= 'a' && c <= 'z') {
      syms.push_back(Symbol::letter(c - 'a'));
      ++i;
    } else {
      throw Error("bad string word character: " + std::string(1, c));
    }
  }
  return StringWord(ctx, std::move(syms));
}

AnyWord parse_any_word(const ContextPtr& ctx, const std::string& text) {
  if (ctx->kind == WordKind::located) return parse_tree_word(ctx, text);
  return parse_string_word(ctx, text);
}

}  // namespace rwb
