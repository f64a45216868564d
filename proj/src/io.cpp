#include "flowcat/io.hpp"

#include <fstream>
#include <sstream>

namespace flowcat {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

[[noreturn]] void fail(const std::string& file, int line, const std::string& msg) {
  throw ParseError(file, line, msg);
}

}  // namespace

std::string morphism_display_name(const FinCategory& c, int m) {
  if (c.is_identity(m)) return "id_" + c.objects[c.mor_src[m]];
  return c.morphisms[m];
}

// -- .fincat ---------------------------------------------------------------

FinCategory parse_fincat(std::istream& in, const std::string& file) {
  FinCategory c;
  struct ComposeLine {
    std::string g, f, h;
    int line;
  };
  std::vector<ComposeLine> composites;
  std::string line;
  int lineno = 0;
  bool named = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = tokens_of(line);
    if (t.empty()) continue;
    try {
      if (t[0] == "category" && t.size() == 2) {
        c.name = t[1];
        named = true;
      } else if (t[0] == "object" && t.size() == 2) {
        c.add_object(t[1]);
      } else if (t[0] == "arrow" && t.size() == 6 && t[2] == ":" && t[4] == "->") {
        c.add_morphism(t[1], c.require_object(t[3]), c.require_object(t[5]));
      } else if (t[0] == "compose" && t.size() == 6 && t[2] == "." && t[4] == "=") {
        composites.push_back({t[1], t[3], t[5], lineno});
      } else {
        fail(file, lineno, "unrecognized line");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const StructuralError& e) {
      fail(file, lineno, e.what());
    }
  }
  if (!named) fail(file, lineno, "missing 'category <name>' header");
  c.synthesize_identities();
  for (const auto& cl : composites) {
    try {
      c.set_compose(c.require_morphism(cl.g), c.require_morphism(cl.f),
                    c.require_morphism(cl.h));
    } catch (const StructuralError& e) {
      fail(file, cl.line, e.what());
    }
  }
  return c;
}

std::string emit_fincat(const FinCategory& c) {
  std::ostringstream out;
  out << "category " << c.name << "\n";
  for (const auto& o : c.objects) out << "object " << o << "\n";
  for (int m = 0; m < c.num_morphisms(); ++m) {
    if (c.is_identity(m)) continue;
    out << "arrow " << c.morphisms[m] << " : " << c.objects[c.mor_src[m]]
        << " -> " << c.objects[c.mor_tgt[m]] << "\n";
  }
  for (int g = 0; g < c.num_morphisms(); ++g) {
    if (c.is_identity(g)) continue;
    for (int f = 0; f < c.num_morphisms(); ++f) {
      if (c.is_identity(f)) continue;
      int h = c.compose(g, f);
      if (h < 0) continue;
      out << "compose " << c.morphisms[g] << " . " << c.morphisms[f] << " = "
          << morphism_display_name(c, h) << "\n";
    }
  }
  return out.str();
}

// -- .catfun ---------------------------------------------------------------

CatFunctor parse_catfun(std::istream& in, const std::string& file,
                        const Workspace& ws) {
  CatFunctor f;
  std::string line;
  int lineno = 0;
  bool headed = false;
  std::vector<std::pair<std::vector<std::string>, int>> body;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = tokens_of(line);
    if (t.empty()) continue;
    if (t[0] == "functor") {
      if (t.size() != 6 || t[2] != ":" || t[4] != "->")
        fail(file, lineno, "malformed functor header");
      f.name = t[1];
      try {
        f.src = ws.category(t[3]);
        f.tgt = ws.category(t[5]);
      } catch (const StructuralError& e) {
        fail(file, lineno, e.what());
      }
      f.obj_map.assign(f.src->num_objects(), -1);
      f.mor_map.assign(f.src->num_morphisms(), -1);
      headed = true;
    } else {
      body.push_back({t, lineno});
    }
  }
  if (!headed) fail(file, lineno, "missing 'functor <name> : <src> -> <tgt>' header");
  for (const auto& [t, ln] : body) {
    try {
      if (t[0] == "object" && t.size() == 4 && t[2] == "|->") {
        f.obj_map[f.src->require_object(t[1])] = f.tgt->require_object(t[3]);
      } else if (t[0] == "arrow" && t.size() == 4 && t[2] == "|->") {
        f.mor_map[f.src->require_morphism(t[1])] = f.tgt->require_morphism(t[3]);
      } else {
        fail(file, ln, "unrecognized line");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const StructuralError& e) {
      fail(file, ln, e.what());
    }
  }
  for (int x = 0; x < f.src->num_objects(); ++x)
    if (f.obj_map[x] < 0) fail(file, lineno, "object " + f.src->objects[x] + " unmapped");
  for (int m = 0; m < f.src->num_morphisms(); ++m) {
    if (f.mor_map[m] >= 0) continue;
    if (f.src->is_identity(m))
      f.mor_map[m] = f.tgt->identity[f.obj_map[f.src->mor_src[m]]];
    else
      fail(file, lineno, "arrow " + f.src->morphisms[m] + " unmapped");
  }
  return f;
}

std::string emit_catfun(const CatFunctor& f, const std::string& name,
                        const std::string& src_name, const std::string& tgt_name) {
  std::ostringstream out;
  out << "functor " << name << " : " << src_name << " -> " << tgt_name << "\n";
  for (int x = 0; x < f.src->num_objects(); ++x)
    out << "object " << f.src->objects[x] << " |-> " << f.tgt->objects[f.obj_map[x]]
        << "\n";
  for (int m = 0; m < f.src->num_morphisms(); ++m) {
    if (f.src->is_identity(m)) continue;
    out << "arrow " << f.src->morphisms[m] << " |-> "
        << morphism_display_name(*f.tgt, f.mor_map[m]) << "\n";
  }
  return out.str();
}

// -- .setfun ---------------------------------------------------------------

SetFunctor parse_setfun(std::istream& in, const std::string& file,
                        const Workspace& ws) {
  SetFunctor f;
  std::string line;
  int lineno = 0;
  bool headed = false;
  std::vector<bool> have_map;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = tokens_of(line);
    if (t.empty()) continue;
    if (t[0] == "setfunctor") {
      if (t.size() != 4 || t[2] != "on") fail(file, lineno, "malformed setfunctor header");
      f.name = t[1];
      try {
        f.shape = ws.category(t[3]);
      } catch (const StructuralError& e) {
        fail(file, lineno, e.what());
      }
      f.elems.assign(f.shape->num_objects(), {});
      f.maps.assign(f.shape->num_morphisms(), {});
      have_map.assign(f.shape->num_morphisms(), false);
      headed = true;
      continue;
    }
    if (!headed) fail(file, lineno, "body before setfunctor header");
    if (t[0] == "object" && t.size() >= 5 && t[2] == "|->" && t[3] == "{" &&
        t.back() == "}") {
      int x;
      try {
        x = f.shape->require_object(t[1]);
      } catch (const StructuralError& e) {
        fail(file, lineno, e.what());
      }
      std::vector<std::string> names;
      for (size_t i = 4; i + 1 < t.size(); ++i) {
        std::string e = t[i];
        if (!e.empty() && e.back() == ',') e.pop_back();
        if (e.empty()) continue;
        for (const auto& prev : names)
          if (prev == e) fail(file, lineno, "duplicate element id: " + e);
        names.push_back(e);
      }
      f.elems[x] = names;
    } else if (t[0] == "arrow" && t.size() >= 5 && t[2] == "|->" && t[3] == "{" &&
               t.back() == "}") {
      int m;
      try {
        m = f.shape->require_morphism(t[1]);
      } catch (const StructuralError& e) {
        fail(file, lineno, e.what());
      }
      const auto& src_set = f.elems[f.shape->mor_src[m]];
      const auto& tgt_set = f.elems[f.shape->mor_tgt[m]];
      std::vector<int> map(src_set.size(), -1);
      // entries look like: e1 -> e2 [,]
      size_t i = 4;
      while (i + 1 < t.size()) {
        if (i + 3 > t.size()) fail(file, lineno, "malformed map entry");
        std::string from = t[i], to = t[i + 2];
        if (t[i + 1] != "->") fail(file, lineno, "malformed map entry");
        if (!to.empty() && to.back() == ',') to.pop_back();
        auto locate = [&](const std::vector<std::string>& set, const std::string& e) {
          for (size_t k = 0; k < set.size(); ++k)
            if (set[k] == e) return static_cast<int>(k);
          fail(file, lineno, "unknown element id: " + e);
        };
        map[locate(src_set, from)] = locate(tgt_set, to);
        i += 3;
      }
      for (size_t k = 0; k < map.size(); ++k)
        if (map[k] < 0)
          fail(file, lineno, "element " + src_set[k] + " unmapped by " + t[1]);
      f.maps[m] = std::move(map);
      have_map[m] = true;
    } else {
      fail(file, lineno, "unrecognized line");
    }
  }
  if (!headed) fail(file, lineno, "missing setfunctor header");
  for (int m = 0; m < f.shape->num_morphisms(); ++m) {
    if (have_map[m]) continue;
    if (f.shape->is_identity(m)) {
      f.maps[m].resize(f.elems[f.shape->mor_src[m]].size());
      for (size_t k = 0; k < f.maps[m].size(); ++k) f.maps[m][k] = static_cast<int>(k);
    } else {
      fail(file, lineno, "arrow " + f.shape->morphisms[m] + " unmapped");
    }
  }
  return f;
}

std::string emit_setfun(const SetFunctor& f, const std::string& name,
                        const std::string& cat_name) {
  std::ostringstream out;
  out << "setfunctor " << name << " on " << cat_name << "\n";
  const FinCategory& c = *f.shape;
  for (int x = 0; x < c.num_objects(); ++x) {
    out << "object " << c.objects[x] << " |-> {";
    for (size_t e = 0; e < f.elems[x].size(); ++e)
      out << (e ? ", " : " ") << f.elems[x][e];
    out << (f.elems[x].empty() ? "}" : " }") << "\n";
  }
  for (int m = 0; m < c.num_morphisms(); ++m) {
    if (c.is_identity(m)) continue;
    out << "arrow " << c.morphisms[m] << " |-> {";
    const auto& src_set = f.elems[c.mor_src[m]];
    const auto& tgt_set = f.elems[c.mor_tgt[m]];
    for (size_t e = 0; e < src_set.size(); ++e)
      out << (e ? ", " : " ") << src_set[e] << " -> " << tgt_set[f.maps[m][e]];
    out << (src_set.empty() ? "}" : " }") << "\n";
  }
  return out.str();
}

// -- .laxsq ----------------------------------------------------------------

LaxSquare parse_laxsq(std::istream& in, const std::string& file,
                      const Workspace& ws) {
  LaxSquare sq;
  std::string line;
  int lineno = 0;
  bool in_alpha = false;
  bool have[4] = {false, false, false, false};
  std::vector<std::pair<std::string, std::string>> components;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = tokens_of(line);
    if (t.empty()) continue;
    try {
      if (t[0] == "laxsquare" && t.size() == 2) {
        // name recorded by the workspace, nothing to store here
      } else if (!in_alpha && t.size() == 2 &&
                 (t[0] == "s" || t[0] == "t" || t[0] == "f" || t[0] == "g")) {
        const CatFunctor& fn = ws.functor(t[1]);
        if (t[0] == "s") sq.s = fn, have[0] = true;
        if (t[0] == "t") sq.t = fn, have[1] = true;
        if (t[0] == "f") sq.f = fn, have[2] = true;
        if (t[0] == "g") sq.g = fn, have[3] = true;
      } else if (t[0] == "alpha" && t.size() == 1) {
        in_alpha = true;
      } else if (in_alpha && t[0] == "component" && t.size() == 4 && t[2] == "=") {
        components.push_back({t[1], t[3]});
      } else if (in_alpha && t[0] == "end" && t.size() == 1) {
        in_alpha = false;
      } else {
        fail(file, lineno, "unrecognized line");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const StructuralError& e) {
      fail(file, lineno, e.what());
    }
  }
  for (bool h : have)
    if (!h) fail(file, lineno, "lax square needs all of s, t, f, g");
  sq.alpha.source_functor = compose_functors(sq.f, sq.s);
  sq.alpha.target_functor = compose_functors(sq.g, sq.t);
  sq.alpha.components.assign(sq.s.src->num_objects(), -1);
  for (const auto& [a, m] : components) {
    try {
      sq.alpha.components[sq.s.src->require_object(a)] = sq.f.tgt->require_morphism(m);
    } catch (const StructuralError& e) {
      fail(file, lineno, e.what());
    }
  }
  for (int a = 0; a < sq.s.src->num_objects(); ++a)
    if (sq.alpha.components[a] < 0)
      fail(file, lineno, "alpha component at " + sq.s.src->objects[a] + " missing");
  return sq;
}

std::string emit_laxsq(const LaxSquare& sq, const std::string& name,
                       const std::string& s_name, const std::string& t_name,
                       const std::string& f_name, const std::string& g_name) {
  std::ostringstream out;
  out << "laxsquare " << name << "\n";
  out << "s " << s_name << "\n";
  out << "t " << t_name << "\n";
  out << "f " << f_name << "\n";
  out << "g " << g_name << "\n";
  out << "alpha\n";
  for (int a = 0; a < sq.s.src->num_objects(); ++a)
    out << "component " << sq.s.src->objects[a] << " = "
        << morphism_display_name(*sq.f.tgt, sq.alpha.components[a]) << "\n";
  out << "end\n";
  return out.str();
}

// -- workspace -------------------------------------------------------------

namespace {

std::string extension_of(const std::string& path) {
  auto dot = path.rfind('.');
  return dot == std::string::npos ? "" : path.substr(dot);
}

void require_valid(const Report& r, const std::string& what) {
  if (r.empty()) return;
  std::string msg = what + " fails validation:";
  for (const auto& line : r) msg += "\n  " + line;
  throw StructuralError(msg);
}

}  // namespace

void Workspace::load_file(const std::string& path, bool validate) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path);
  std::string ext = extension_of(path);
  if (ext == ".fincat") {
    FinCategory c = parse_fincat(in, path);
    if (validate) require_valid(validate_category(c), "category " + c.name);
    if (categories.count(c.name))
      throw StructuralError("duplicate category name: " + c.name);
    provenance[c.name] = path;
    std::string key = c.name;
    categories[key] = std::make_shared<FinCategory>(std::move(c));
  } else if (ext == ".catfun") {
    CatFunctor f = parse_catfun(in, path, *this);
    if (validate) require_valid(validate_functor(f), "functor " + f.name);
    if (functors.count(f.name))
      throw StructuralError("duplicate functor name: " + f.name);
    provenance[f.name] = path;
    std::string key = f.name;
    functors[key] = std::move(f);
  } else if (ext == ".setfun") {
    SetFunctor f = parse_setfun(in, path, *this);
    if (validate) require_valid(validate_setfunctor(f), "setfunctor " + f.name);
    if (setfunctors.count(f.name))
      throw StructuralError("duplicate setfunctor name: " + f.name);
    provenance[f.name] = path;
    std::string key = f.name;
    setfunctors[key] = std::move(f);
  } else if (ext == ".laxsq") {
    LaxSquare sq = parse_laxsq(in, path, *this);
    if (validate) require_valid(validate_lax_square(sq), "lax square");
    std::string name = "square" + std::to_string(squares.size());
    // recover the declared name from the file for the registry
    in.clear();
    in.seekg(0);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ss(line);
      std::string kw, nm;
      if (ss >> kw >> nm && kw == "laxsquare") {
        name = nm;
        break;
      }
    }
    if (squares.count(name)) throw StructuralError("duplicate square name: " + name);
    provenance[name] = path;
    squares[name] = std::move(sq);
  } else {
    throw StructuralError("unknown file extension: " + path);
  }
}

CatPtr Workspace::category(const std::string& name) const {
  auto it = categories.find(name);
  if (it == categories.end()) throw StructuralError("unknown category: " + name);
  return it->second;
}

const CatFunctor& Workspace::functor(const std::string& name) const {
  auto it = functors.find(name);
  if (it == functors.end()) throw StructuralError("unknown functor: " + name);
  return it->second;
}

const SetFunctor& Workspace::setfunctor(const std::string& name) const {
  auto it = setfunctors.find(name);
  if (it == setfunctors.end()) throw StructuralError("unknown setfunctor: " + name);
  return it->second;
}

const LaxSquare& Workspace::square(const std::string& name) const {
  auto it = squares.find(name);
  if (it == squares.end()) throw StructuralError("unknown square: " + name);
  return it->second;
}

}  // namespace flowcat
