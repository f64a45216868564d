#ifndef FLOWCAT_FINCAT_HPP
#define FLOWCAT_FINCAT_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace flowcat {

// Thrown when an id does not resolve or a structure is ill-typed.
// Distinct from law violations, which are collected into reports.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Report = std::vector<std::string>;

/// A finite category: interned objects and morphisms, explicit identities
/// and an extensional composition table (dense indices, -1 = undefined).
class FinCategory {
 public:
  std::string name;
  std::vector<std::string> objects;
  std::vector<std::string> morphisms;
  std::vector<int> mor_src;   // per morphism
  std::vector<int> mor_tgt;   // per morphism
  std::vector<int> identity;  // per object -> morphism index
  std::vector<int> comp;      // comp[g*M+f] = g.f, -1 if not composable

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms.size()); }

  int add_object(const std::string& id);
  // Does not fill the composition table; call set_compose afterwards.
  int add_morphism(const std::string& id, int src, int tgt);
  void set_compose(int g, int f, int h);

  // After all morphisms exist, allocates identities (id_<obj> unless an
  // explicit name is already reserved) and fills the unit composites.
  void synthesize_identities();
  // Fills every composite where one factor is an identity.
  void fill_identity_composites();

  int compose(int g, int f) const {
    return comp[static_cast<size_t>(g) * morphisms.size() + f];
  }
  bool composable(int g, int f) const { return mor_tgt[f] == mor_src[g]; }
  bool is_identity(int m) const { return identity[mor_src[m]] == m && mor_src[m] == mor_tgt[m]; }

  int object_index(const std::string& id) const;  // -1 if absent
  int morphism_index(const std::string& id) const;
  int require_object(const std::string& id) const;  // throws StructuralError
  int require_morphism(const std::string& id) const;

  std::vector<int> hom(int x, int y) const;

 private:
  std::unordered_map<std::string, int> obj_index_;
  std::unordered_map<std::string, int> mor_index_;
};

using CatPtr = std::shared_ptr<const FinCategory>;

/// Structural equality on dense data (names included, `name` field ignored).
bool same_category(const FinCategory& a, const FinCategory& b);

struct CatFunctor {
  std::string name;
  CatPtr src;
  CatPtr tgt;
  std::vector<int> obj_map;  // per object of src
  std::vector<int> mor_map;  // per morphism of src

  int on_object(int x) const { return obj_map[x]; }
  int on_morphism(int m) const { return mor_map[m]; }
};

CatFunctor identity_functor(CatPtr c);
// g after f; shapes must agree structurally.
CatFunctor compose_functors(const CatFunctor& g, const CatFunctor& f);
bool same_functor(const CatFunctor& a, const CatFunctor& b);

/// A diagram of finite sets over `shape`. Elements are interned strings,
/// morphism actions are total functions on element indices.
struct SetFunctor {
  std::string name;
  CatPtr shape;
  std::vector<std::vector<std::string>> elems;  // per object
  std::vector<std::vector<int>> maps;           // per morphism: elem -> elem

  int set_size(int x) const { return static_cast<int>(elems[x].size()); }
  int apply(int m, int e) const { return maps[m][e]; }
};

bool same_setfunctor(const SetFunctor& a, const SetFunctor& b);

struct CatNatTrans {
  CatFunctor source_functor;
  CatFunctor target_functor;
  std::vector<int> components;  // per object of the common source
};

struct SetNatTrans {
  SetFunctor source_functor;
  SetFunctor target_functor;
  std::vector<std::vector<int>> components;  // per object: elem -> elem
};

// g after f, componentwise; domains must match structurally.
SetNatTrans compose_setnat(const SetNatTrans& g, const SetNatTrans& f);
SetNatTrans identity_setnat(const SetFunctor& f);
bool same_setnat(const SetNatTrans& a, const SetNatTrans& b);

// -- validation ------------------------------------------------------------

Report validate_category(const FinCategory& c);
Report validate_functor(const CatFunctor& f);
Report validate_setfunctor(const SetFunctor& f);
Report validate_catnat(const CatNatTrans& t);
Report validate_setnat(const SetNatTrans& t);

// -- basic constructions ---------------------------------------------------

FinCategory opposite(const FinCategory& c);

struct DisjointUnion {
  CatPtr cat;
  CatFunctor include_left;
  CatFunctor include_right;
};
// Tags: objects/morphisms of b become L(<id>), of c become R(<id>).
DisjointUnion disjoint_union(CatPtr b, CatPtr c);

struct Quiver {
  std::vector<std::string> vertices;
  struct Edge {
    std::string id;
    int src;
    int tgt;
  };
  std::vector<Edge> edges;

  int add_vertex(const std::string& id);
  void add_edge(const std::string& id, int src, int tgt);
  bool acyclic() const;
};

struct FreeCat {
  CatPtr cat;
  std::vector<int> edge_morphism;           // quiver edge -> morphism index
  std::vector<std::vector<int>> path_edges; // per morphism, its edge word
                                            // (diagrammatic order; empty = id)
};
// Rejects cyclic quivers (hom-sets would be infinite).
FreeCat free_on_acyclic_quiver(const Quiver& q);

// Blocks of the zigzag relation, each sorted; blocks ordered by least member.
std::vector<std::vector<int>> connected_components(const FinCategory& c);

// -- small helpers ---------------------------------------------------------

CatPtr terminal_category();            // the category *
CatFunctor constant_functor(CatPtr src, CatPtr tgt, int obj);

}  // namespace flowcat

#endif
