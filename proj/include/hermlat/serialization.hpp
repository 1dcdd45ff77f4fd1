#ifndef HERMLAT_SERIALIZATION_HPP
#define HERMLAT_SERIALIZATION_HPP

#include "hermlat/galois_moduli.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace hermlat {

/* Malformed input. what() names the JSON path or byte offset. */
class ParseError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/*
 * Lattice format:
 *   {"disc": -7, "rank": 2, "ideals": [[d, a, b, c], ...],
 *    "gram": [[{"a": "p/q", "b": "p/q"}, ...], ...], "basis": [...]}
 * "basis" is present only when it is not the identity.
 */
nlohmann::json to_json(HermitianLattice const & L);
HermitianLattice lattice_from_json(nlohmann::json const & j);
/* Parses text; syntax errors report the byte offset. */
HermitianLattice parse_lattice(std::string const & text);

nlohmann::json to_json(KNumber const & x);
nlohmann::json to_json(KMatrix const & m);
nlohmann::json to_json(IsometryWitness const & w);
nlohmann::json to_json(IdealClassGroup const & cg);
nlohmann::json to_json(ClassList const & list);
nlohmann::json to_json(ModuliReport const & r);
nlohmann::json to_json(TableRow const & row);

}  // namespace hermlat

#endif
