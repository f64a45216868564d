#ifndef FLOWCAT_IO_HPP
#define FLOWCAT_IO_HPP

#include <iosfwd>

#include "flowcat/fincat.hpp"
#include "flowcat/flow.hpp"

namespace flowcat {

struct ParseError : StructuralError {
  std::string file;
  int line;
  ParseError(std::string file_, int line_, const std::string& msg)
      : StructuralError(file_ + ":" + std::to_string(line_) + ": " + msg),
        file(std::move(file_)),
        line(line_) {}
};

/// Named registry of loaded entities. Every entity is validated at load;
/// law violations surface as StructuralError here (cmd_validate reports
/// them without loading).
class Workspace {
 public:
  std::map<std::string, CatPtr> categories;
  std::map<std::string, CatFunctor> functors;
  std::map<std::string, SetFunctor> setfunctors;
  std::map<std::string, LaxSquare> squares;
  std::map<std::string, std::string> provenance;  // name -> file

  // dispatches on extension (.fincat, .catfun, .setfun, .laxsq)
  void load_file(const std::string& path, bool validate = true);

  CatPtr category(const std::string& name) const;
  const CatFunctor& functor(const std::string& name) const;
  const SetFunctor& setfunctor(const std::string& name) const;
  const LaxSquare& square(const std::string& name) const;
};

// Parsers. Identities are implicit in the formats and synthesized as
// id_<object>; categories/functors referenced by name resolve against ws.
FinCategory parse_fincat(std::istream& in, const std::string& file);
CatFunctor parse_catfun(std::istream& in, const std::string& file, const Workspace& ws);
SetFunctor parse_setfun(std::istream& in, const std::string& file, const Workspace& ws);
LaxSquare parse_laxsq(std::istream& in, const std::string& file, const Workspace& ws);

std::string emit_fincat(const FinCategory& c);
std::string emit_catfun(const CatFunctor& f, const std::string& name,
                        const std::string& src_name, const std::string& tgt_name);
std::string emit_setfun(const SetFunctor& f, const std::string& name,
                        const std::string& cat_name);
std::string emit_laxsq(const LaxSquare& sq, const std::string& name,
                       const std::string& s_name, const std::string& t_name,
                       const std::string& f_name, const std::string& g_name);

// identity morphisms are displayed as id_<object> regardless of internal name
std::string morphism_display_name(const FinCategory& c, int m);

}  // namespace flowcat

#endif
